use super::{q_factorial, q_int, RatFunc, RatPolyX, ZPoly};
use crate::error::{Error, Result};

/// Unique interpolant of degree `< points.len()` over `Q(q)`, via Newton
/// divided differences.
pub fn lagrange_interpolate(points: &[(RatFunc, RatFunc)]) -> Result<RatPolyX> {
    for (i, (a, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(b, _)| a == b) {
            return Err(Error::DuplicateNode);
        }
    }
    let nodes: Vec<&RatFunc> = points.iter().map(|(x, _)| x).collect();
    let mut table: Vec<RatFunc> = points.iter().map(|(_, y)| y.clone()).collect();
    // after round j, table[i] holds f[x_{i-j}, ..., x_i] for i >= j
    for j in 1..table.len() {
        for i in (j..table.len()).rev() {
            let diff = &table[i] - &table[i - 1];
            let span = nodes[i] - nodes[i - j];
            table[i] = diff.checked_div(&span)?;
        }
    }
    let mut acc = RatPolyX::zero();
    for (i, c) in table.iter().enumerate().rev() {
        let linear = &RatPolyX::x() - &RatPolyX::constant(nodes[i].clone());
        acc = &(&acc * &linear) + &RatPolyX::constant(c.clone());
    }
    Ok(acc)
}

/// Interpolant through `([n]_q, values[n])` for `n = 0..values.len()`,
/// fraction-free. The Lagrange denominators
/// `prod_{j != n} ([n]_q - [j]_q) = (-1)^(m-n) q^(C(n,2) + n(m-n)) [n]_q! [m-n]_q!`
/// all divide `q^C(m,2) ([m]_q!)^2`, so everything stays in `Z[q]` until
/// one reduction per coefficient.
pub fn interpolate_at_q_integers(values: &[ZPoly]) -> Result<RatPolyX> {
    if values.is_empty() {
        return Ok(RatPolyX::zero());
    }
    let m = values.len() - 1;
    let node = |j: usize| q_int(j as i64).to_zpoly().expect("nonnegative q-integer");
    let fact_m = q_factorial(m as u32);
    let common = (&fact_m * &fact_m).shift((m * m.saturating_sub(1) / 2) as u32);
    let mut acc = vec![ZPoly::zero(); m + 1];
    for (n, w) in values.iter().enumerate() {
        if w.is_zero() {
            continue;
        }
        let den = (&q_factorial(n as u32) * &q_factorial((m - n) as u32))
            .shift((n * n.saturating_sub(1) / 2 + n * (m - n)) as u32);
        let mut weight = w * &common.div_exact(&den)?;
        if (m - n) % 2 == 1 {
            weight = -weight;
        }
        // coefficients of prod_{j != n} (x - [j]_q), ascending in x
        let mut basis = vec![ZPoly::one()];
        for j in (0..=m).filter(|&j| j != n) {
            let c = node(j);
            let mut next = vec![ZPoly::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] = &next[k + 1] + b;
                next[k] = &next[k] - &(b * &c);
            }
            basis = next;
        }
        for (k, b) in basis.iter().enumerate() {
            acc[k] = &acc[k] + &(b * &weight);
        }
    }
    let coeffs = acc
        .into_iter()
        .map(|c| RatFunc::new(c, common.clone()))
        .collect::<Result<Vec<_>>>()?;
    Ok(RatPolyX::from_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{q_int, ZPoly};

    fn qi(n: i64) -> RatFunc {
        q_int(n).to_ratfunc()
    }

    #[test]
    fn single_element_chain() {
        // ([0]_q, 1), ([1]_q, 1 + q) -> q x + 1
        let pts = vec![(qi(0), RatFunc::one()), (qi(1), RatFunc::from(ZPoly::from_coeffs([1, 1])))];
        let e = lagrange_interpolate(&pts).unwrap();
        assert_eq!(
            e,
            RatPolyX::from_coeffs(vec![RatFunc::one(), RatFunc::from(ZPoly::monomial(1, 1))])
        );
    }

    #[test]
    fn constant_data() {
        let c = RatFunc::from(ZPoly::from_coeffs([3, 0, 1]));
        let pts: Vec<_> = (0..4).map(|n| (qi(n), c.clone())).collect();
        assert_eq!(lagrange_interpolate(&pts).unwrap(), RatPolyX::constant(c));
    }

    #[test]
    fn reproduces_nodes() {
        let pts: Vec<_> = (0..5)
            .map(|n| (qi(n), RatFunc::from(ZPoly::from_coeffs([n, 1 - n, 2 * n]))))
            .collect();
        let e = lagrange_interpolate(&pts).unwrap();
        for (x, y) in &pts {
            assert_eq!(&e.eval(x), y);
        }
    }

    #[test]
    fn duplicate_node() {
        let pts = vec![(qi(1), RatFunc::one()), (qi(1), RatFunc::zero())];
        assert_eq!(lagrange_interpolate(&pts), Err(Error::DuplicateNode));
    }

    #[test]
    fn fraction_free_matches_divided_differences() {
        for m in 0..5i64 {
            let values: Vec<ZPoly> = (0..=m)
                .map(|n| ZPoly::from_coeffs([n * n + 1, -n, 3, n]))
                .collect();
            let pts: Vec<_> = values.iter().enumerate().map(|(n, v)| (qi(n as i64), RatFunc::from(v.clone()))).collect();
            assert_eq!(interpolate_at_q_integers(&values).unwrap(), lagrange_interpolate(&pts).unwrap());
        }
    }
}
