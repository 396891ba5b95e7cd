//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the library routine it is used to check.

#![allow(dead_code)]

use std::collections::BTreeSet;

use qnewton::poly::BivarPoly;
use qnewton::{enumerate_posets, Poset};

pub type Point = (i64, i64);

pub fn posets_up_to(max_m: usize) -> Vec<Poset> {
    (1..=max_m).flat_map(|m| enumerate_posets(m).unwrap()).collect()
}

/// All permutations of `1..=m` in lexicographic order.
pub fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (1..=m).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..m).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..m).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Permutations listing no element after one of its successors.
pub fn extensions(p: &Poset) -> Vec<Vec<usize>> {
    permutations(p.len())
        .into_iter()
        .filter(|w| (0..w.len()).all(|i| (i + 1..w.len()).all(|j| !p.lt(w[j], w[i]))))
        .collect()
}

pub fn descents(w: &[usize]) -> Vec<usize> {
    (1..w.len()).filter(|&i| w[i - 1] > w[i]).collect()
}

pub fn maj(w: &[usize]) -> i64 {
    descents(w).iter().sum::<usize>() as i64
}

/// Longest chain ending at each element, by repeated relaxation.
pub fn mc(p: &Poset) -> Vec<usize> {
    let m = p.len();
    let mut best = vec![1; m];
    for _ in 0..m {
        for y in 1..=m {
            for x in 1..=m {
                if p.lt(x, y) {
                    best[y - 1] = best[y - 1].max(best[x - 1] + 1);
                }
            }
        }
    }
    best
}

pub fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

pub fn is_naturally_labeled(p: &Poset) -> bool {
    (1..=p.len()).all(|x| (1..=p.len()).all(|y| !p.lt(x, y) || x < y))
}

fn cross(o: Point, a: Point, b: Point) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Extreme points of a finite set, by brute force: a point is extreme iff
/// it is not inside any triangle of other points and not strictly inside a
/// segment of two others.
pub fn extreme_points(points: &[Point]) -> BTreeSet<Point> {
    let pts: Vec<Point> = points.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let on_segment = |p: Point, a: Point, b: Point| {
        cross(a, b, p) == 0
            && p.0 >= a.0.min(b.0)
            && p.0 <= a.0.max(b.0)
            && p.1 >= a.1.min(b.1)
            && p.1 <= a.1.max(b.1)
    };
    let in_triangle = |p: Point, a: Point, b: Point, c: Point| {
        let (d1, d2, d3) = (cross(a, b, p), cross(b, c, p), cross(c, a, p));
        let neg = d1 < 0 || d2 < 0 || d3 < 0;
        let pos = d1 > 0 || d2 > 0 || d3 > 0;
        !(neg && pos)
    };
    let mut out = BTreeSet::new();
    'next: for &p in &pts {
        let others: Vec<Point> = pts.iter().copied().filter(|&o| o != p).collect();
        for (i, &a) in others.iter().enumerate() {
            for (j, &b) in others.iter().enumerate().skip(i + 1) {
                if on_segment(p, a, b) {
                    continue 'next;
                }
                for &c in &others[j + 1..] {
                    if cross(a, b, c) != 0 && in_triangle(p, a, b, c) {
                        continue 'next;
                    }
                }
            }
        }
        out.insert(p);
    }
    out
}

/// Hull candidates of the target family: `(0,0)`, the partial-sum
/// staircase, `(h, m)` and `(h - m, 0)`.
pub fn shape_points(a: &[usize], h: usize) -> Vec<Point> {
    let m = a.len() as i64;
    let mut pts = vec![(0, 0), (h as i64, m), (h as i64 - m, 0)];
    let mut s = 0;
    for (i, &ai) in a.iter().enumerate() {
        s += ai as i64;
        pts.push((s, i as i64 + 1));
    }
    pts
}

pub fn support(f: &BivarPoly) -> Vec<Point> {
    f.terms().map(|(q, x, _)| (i64::from(q), i64::from(x))).collect()
}

/// `(q_min, q_max)` of the coefficient of `x^k`.
pub fn q_range(f: &BivarPoly, k: u32) -> Option<(u32, u32)> {
    let qs: Vec<u32> = f.terms().filter(|&(_, x, _)| x == k).map(|(q, _, _)| q).collect();
    Some((*qs.iter().min()?, *qs.iter().max()?))
}

pub fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}
