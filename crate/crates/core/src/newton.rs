//! Newton polygons in the `(q, x)` exponent plane and the polygon family
//! `C(a_1, ..., a_m; h)`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::BivarPoly;
use crate::poset::Poset;
use crate::qehrhart::{compute_f_with_cap, QEhrhartResult};

pub type Point = (i64, i64);

fn cross(o: Point, a: Point, b: Point) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Convex lattice polygon, possibly a segment or a single point.
///
/// Vertices run counterclockwise from the lexicographically smallest one,
/// with no collinear interior points, so equal polygons compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticePolygon {
    vertices: Vec<Point>,
}

impl LatticePolygon {
    /// Convex hull by monotone chain.
    pub fn hull<I: IntoIterator<Item = Point>>(points: I) -> Result<Self> {
        let mut pts: Vec<Point> = points.into_iter().collect();
        pts.sort_unstable();
        pts.dedup();
        if pts.len() <= 2 {
            if pts.is_empty() {
                return Err(Error::ZeroPolynomial);
            }
            return Ok(Self { vertices: pts });
        }
        let mut lower: Vec<Point> = Vec::new();
        for &p in &pts {
            while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
                lower.pop();
            }
            lower.push(p);
        }
        let mut upper: Vec<Point> = Vec::new();
        for &p in pts.iter().rev() {
            while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
                upper.pop();
            }
            upper.push(p);
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        // all points collinear: lower and upper chains coincide
        if lower.len() == 2 || (lower.len() > 2 && lower.windows(3).all(|w| cross(w[0], w[1], w[2]) == 0)) {
            lower.truncate(2);
        }
        Ok(Self { vertices: lower })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn is_point(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn is_segment(&self) -> bool {
        self.vertices.len() == 2
    }

    /// Closed containment test in exact arithmetic.
    pub fn contains(&self, p: Point) -> bool {
        match self.vertices.as_slice() {
            [v] => *v == p,
            [a, b] => {
                cross(*a, *b, p) == 0
                    && p.0 >= a.0.min(b.0)
                    && p.0 <= a.0.max(b.0)
                    && p.1 >= a.1.min(b.1)
                    && p.1 <= a.1.max(b.1)
            }
            vs => (0..vs.len()).all(|i| cross(vs[i], vs[(i + 1) % vs.len()], p) >= 0),
        }
    }

    /// The points of `candidates` lying on the boundary, deduplicated and
    /// ordered counterclockwise from the first vertex. Drawings that mark
    /// every generator on an edge list exactly these.
    pub fn boundary_outline<I: IntoIterator<Item = Point>>(&self, candidates: I) -> Vec<Point> {
        let vs = &self.vertices;
        let mut keyed: Vec<((usize, i64), Point)> = Vec::new();
        for p in candidates {
            let key = if vs.len() < 3 {
                vs.iter()
                    .position(|&v| v == p)
                    .map(|i| (i, 0))
                    .or_else(|| self.contains(p).then(|| (0, (p.0 - vs[0].0).abs() + (p.1 - vs[0].1).abs())))
            } else {
                (0..vs.len()).find_map(|i| {
                    let (a, b) = (vs[i], vs[(i + 1) % vs.len()]);
                    let on_edge = cross(a, b, p) == 0
                        && p != b
                        && (p.0 - a.0) * (b.0 - a.0) + (p.1 - a.1) * (b.1 - a.1) >= 0
                        && (p.0 - b.0) * (a.0 - b.0) + (p.1 - b.1) * (a.1 - b.1) >= 0;
                    on_edge.then(|| (i, (p.0 - a.0).abs() + (p.1 - a.1).abs()))
                })
            };
            if let Some(k) = key {
                keyed.push((k, p));
            }
        }
        keyed.sort_unstable();
        keyed.dedup();
        keyed.into_iter().map(|(_, p)| p).collect()
    }

    pub fn is_convex(&self) -> bool {
        let vs = &self.vertices;
        vs.len() < 3
            || (0..vs.len()).all(|i| cross(vs[i], vs[(i + 1) % vs.len()], vs[(i + 2) % vs.len()]) > 0)
    }

    /// One `q<TAB>x` line per vertex, canonical order.
    pub fn to_tsv(&self) -> String {
        self.vertices.iter().map(|(q, x)| format!("{q}\t{x}\n")).collect()
    }

    /// SVG drawing of the polygon and (optionally) a support set, with `q`
    /// on the horizontal axis and `x` on the vertical axis.
    pub fn to_svg(&self, support: &[Point]) -> String {
        const UNIT: i64 = 40;
        const MARGIN: i64 = 50;
        let max_q = self.vertices.iter().chain(support).map(|p| p.0).max().unwrap_or(0).max(1);
        let max_x = self.vertices.iter().chain(support).map(|p| p.1).max().unwrap_or(0).max(1);
        let width = max_q * UNIT + 2 * MARGIN;
        let height = max_x * UNIT + 2 * MARGIN;
        let sx = |q: i64| MARGIN + q * UNIT;
        let sy = |x: i64| height - MARGIN - x * UNIT;
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
        );
        for q in 0..=max_q {
            let _ = writeln!(
                s,
                r##"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}" stroke="#ddd" stroke-width="1"/>"##,
                sx(q),
                sy(0),
                sy(max_x)
            );
        }
        for x in 0..=max_x {
            let _ = writeln!(
                s,
                r##"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}" stroke="#ddd" stroke-width="1"/>"##,
                sy(x),
                sx(0),
                sx(max_q)
            );
        }
        let points: Vec<String> = self.vertices.iter().map(|&(q, x)| format!("{},{}", sx(q), sy(x))).collect();
        let _ = writeln!(
            s,
            r##"<polygon points="{}" fill="#d3d3d3" stroke="black" stroke-width="2"/>"##,
            points.join(" ")
        );
        for &(q, x) in support {
            let _ = writeln!(s, r#"<circle cx="{}" cy="{}" r="3" fill="black"/>"#, sx(q), sy(x));
        }
        let _ = writeln!(
            s,
            r#"<line x1="{}" y1="{y}" x2="{}" y2="{y}" stroke="black" stroke-width="2"/>"#,
            sx(0) - 10,
            sx(max_q) + 20,
            y = sy(0)
        );
        let _ = writeln!(
            s,
            r#"<line x1="{x}" y1="{}" x2="{x}" y2="{}" stroke="black" stroke-width="2"/>"#,
            sy(0) + 10,
            sy(max_x) - 20,
            x = sx(0)
        );
        let _ = writeln!(s, r#"<text x="{}" y="{}" font-size="16">q</text>"#, sx(max_q) + 25, sy(0) + 5);
        let _ = writeln!(s, r#"<text x="{}" y="{}" font-size="16">x</text>"#, sx(0) - 5, sy(max_x) - 25);
        s.push_str("</svg>\n");
        s
    }
}

/// Newton polygon of a nonzero bivariate polynomial.
pub fn newton_polygon(f: &BivarPoly) -> Result<LatticePolygon> {
    LatticePolygon::hull(f.support())
}

/// Parameters of `C(a_1, ..., a_m; h)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeSpec {
    a: Vec<usize>,
    h: usize,
}

impl ShapeSpec {
    /// Requires `1 <= a_1 <= ... <= a_m` and `h >= a_1 + ... + a_m`.
    pub fn new(a: Vec<usize>, h: usize) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::Spec("empty sequence".into()));
        }
        if a[0] < 1 || a.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Spec(format!("{a:?} is not a nondecreasing positive sequence")));
        }
        let total: usize = a.iter().sum();
        if h < total {
            return Err(Error::Spec(format!("h = {h} is below a_1 + ... + a_m = {total}")));
        }
        Ok(Self { a, h })
    }

    pub fn a(&self) -> &[usize] {
        &self.a
    }

    pub fn h(&self) -> usize {
        self.h
    }

    /// `(0,0)`, `(a_1 + ... + a_i, i)` for each `i`, `(h, m)`, `(h - m, 0)`.
    pub fn generators(&self) -> Vec<Point> {
        let m = self.a.len() as i64;
        let h = self.h as i64;
        let mut pts = vec![(0, 0)];
        let mut sum = 0i64;
        for (i, &ai) in self.a.iter().enumerate() {
            sum += ai as i64;
            pts.push((sum, i as i64 + 1));
        }
        pts.push((h, m));
        pts.push((h - m, 0));
        pts
    }
}

pub fn shape_polygon(s: &ShapeSpec) -> LatticePolygon {
    LatticePolygon::hull(s.generators()).expect("generators are nonempty")
}

/// `(k, q_min([x^k] f), q_max([x^k] f))`; `None` encodes the zero-slice
/// conventions `q_min = +inf`, `q_max = -inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QRange {
    pub k: u32,
    pub q_min: Option<u32>,
    pub q_max: Option<u32>,
}

pub fn qrange_profile(f: &BivarPoly) -> Vec<QRange> {
    f.slices()
        .iter()
        .enumerate()
        .map(|(k, s)| QRange {
            k: k as u32,
            q_min: s.q_min(),
            q_max: s.q_max(),
        })
        .collect()
}

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Profile predicted for `F_P` of a naturally labeled `P` with sorted
/// chain statistics `b`: slice 0 spans `0..=C(m,2)`, slice `k >= 1` spans
/// `b_1 + ... + b_k ..= C(m,2) + k`.
pub fn expected_profile(b: &[usize]) -> Vec<QRange> {
    let m = b.len();
    (0..=m)
        .map(|k| QRange {
            k: k as u32,
            q_min: Some(b[..k].iter().sum::<usize>() as u32),
            q_max: Some((binom2(m) + k) as u32),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MainTheoremReport {
    pub m: usize,
    pub b: Vec<usize>,
    pub h: usize,
    pub newton: LatticePolygon,
    pub expected: LatticePolygon,
    pub profile: Vec<QRange>,
    pub profile_pass: bool,
    pub pass: bool,
}

/// Checks `NT(F) = C(b_1, ..., b_m; C(m+1, 2))` for the naturally labeled
/// dual of `p`, along with the slice-wise `q_min`/`q_max` profile.
pub fn verify_main_theorem(p: &Poset) -> Result<MainTheoremReport> {
    let (natural, _) = p.dual().naturalize();
    let f = compute_f_with_cap(&natural, crate::linext::DEFAULT_MAX_EXTENSIONS)?;
    main_theorem_report(&natural, &f)
}

pub fn verify_main_theorem_for(result: &QEhrhartResult) -> Result<MainTheoremReport> {
    main_theorem_report(&result.natural_dual, &result.f)
}

/// Same check for a poset that is already naturally labeled and its `F`.
pub fn main_theorem_report(natural: &Poset, f: &BivarPoly) -> Result<MainTheoremReport> {
    let m = natural.len();
    let b = natural.chain_stats().b;
    let h = binom2(m + 1);
    let newton = newton_polygon(f)?;
    let expected = shape_polygon(&ShapeSpec::new(b.clone(), h)?);
    let profile = qrange_profile(f);
    let profile_pass = profile == expected_profile(&b);
    Ok(MainTheoremReport {
        m,
        pass: newton == expected,
        b,
        h,
        newton,
        expected,
        profile,
        profile_pass,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub m: usize,
    pub a: Vec<usize>,
    /// `C(m+1, 2) - deg phi`.
    pub h: usize,
    pub phi_degree: u32,
    pub h_bound_ok: bool,
    pub newton: LatticePolygon,
    pub expected: Option<LatticePolygon>,
    pub pass: bool,
}

/// Checks `NT(N) = C(a_1, ..., a_m; h)` with `a` the sorted `mcbar` values
/// of the input poset and `h = C(m+1, 2) - deg phi`.
pub fn verify_conjecture(p: &Poset) -> Result<ConjectureReport> {
    let result = crate::qehrhart::compute_qehrhart(p)?;
    verify_conjecture_for(p, &result)
}

pub fn verify_conjecture_for(p: &Poset, result: &QEhrhartResult) -> Result<ConjectureReport> {
    let m = p.len();
    let a = p.chain_stats().a();
    let phi_degree = result.phi_degree();
    let h = binom2(m + 1) - phi_degree as usize;
    let h_bound_ok = h >= a.iter().sum::<usize>();
    let newton = newton_polygon(&result.n)?;
    let expected = if h_bound_ok {
        Some(shape_polygon(&ShapeSpec::new(a.clone(), h)?))
    } else {
        None
    };
    Ok(ConjectureReport {
        m,
        pass: h_bound_ok && expected.as_ref() == Some(&newton),
        a,
        h,
        phi_degree,
        h_bound_ok,
        newton,
        expected,
    })
}
