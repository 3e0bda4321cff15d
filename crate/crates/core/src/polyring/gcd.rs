//! Multivariate gcd by recursive content extraction and primitive
//! pseudo-remainder sequences.

use num_traits::Zero;

use super::{MPoly, UPoly};
use crate::error::Result;

/// Greatest common divisor, normalized to leading coefficient 1.
///
/// `gcd(0, 0) = 0`.
pub fn gcd(p: &MPoly, q: &MPoly) -> Result<MPoly> {
    p.try_add(q)?; // variable-set check
    Ok(gcd_inner(p, q))
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `var`.
pub fn content_in(p: &MPoly, var: usize) -> MPoly {
    let mut g = MPoly::zero(p.vars());
    for c in p.to_univariate(var) {
        if c.is_zero() {
            continue;
        }
        g = gcd_inner(&g, &c);
        if g.is_constant() {
            break;
        }
    }
    g
}

pub(crate) fn gcd_inner(p: &MPoly, q: &MPoly) -> MPoly {
    if p.is_zero() {
        return q.monic();
    }
    if q.is_zero() {
        return p.monic();
    }
    if let Some(g) = gcd_forms(p, q) {
        return g;
    }
    let vars = p.vars().clone();
    let sp = p.support_vars();
    let sq = q.support_vars();
    let Some(&x) = sp.iter().chain(&sq).min() else {
        return MPoly::one(&vars);
    };
    if sp.len() <= 1 && sq.len() <= 1 && sp.iter().chain(&sq).all(|&v| v == x) {
        let a = UPoly::from_mpoly(p, x).unwrap();
        let b = UPoly::from_mpoly(q, x).unwrap();
        return a.gcd(&b).to_mpoly(&vars, x);
    }
    if p.degree_in(x) == 0 {
        return gcd_inner(p, &content_in(q, x)).monic();
    }
    if q.degree_in(x) == 0 {
        return gcd_inner(&content_in(p, x), q).monic();
    }
    let cp = content_in(p, x);
    let cq = content_in(q, x);
    let cg = gcd_inner(&cp, &cq);
    let pp = p.div_exact(&cp);
    let qp = q.div_exact(&cq);
    if coprime_by_specialization(&pp, &qp, x) {
        return cg.monic();
    }

    let mut a = pp.to_univariate(x);
    let mut b = qp.to_univariate(x);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    let g = loop {
        let r = prem(&a, &b);
        if r.is_empty() {
            break b;
        }
        if r.len() == 1 {
            break vec![MPoly::one(&vars)];
        }
        a = b;
        b = primitive_coeffs(&r, x);
    };
    let g = MPoly::from_univariate(&vars, x, &primitive_coeffs(&g, x));
    (&cg * &g).monic()
}

/// Sufficient test for `gcd(p, q)` having degree 0 in `x`: at a point where
/// both leading coefficients in `x` survive, the gcd specializes to a
/// divisor of the gcd of the specializations.
fn coprime_by_specialization(p: &MPoly, q: &MPoly, x: usize) -> bool {
    let mut others = p.support_vars();
    others.extend(q.support_vars());
    others.sort_unstable();
    others.dedup();
    others.retain(|&v| v != x);
    let (lp, lq) = (p.leading_coeff_in(x), q.leading_coeff_in(x));
    for attempt in 0..3i64 {
        let at = |f: &MPoly| {
            others.iter().fold(f.clone(), |acc, &v| {
                let val = (attempt * 7 + v as i64 * 3) % 11 - 5;
                acc.eval_var(v, &super::rat(val))
            })
        };
        if at(&lp).is_zero() || at(&lq).is_zero() {
            continue;
        }
        let a = UPoly::from_mpoly(&at(p), x).unwrap();
        let b = UPoly::from_mpoly(&at(q), x).unwrap();
        if a.gcd(&b).degree() == Some(0) {
            return true;
        }
    }
    false
}

/// Gcd of two forms through the chart `y = 1` of their first common
/// variable: forms prime to `y` correspond to polynomials in one variable
/// fewer, and the power of `y` is handled separately.
fn gcd_forms(p: &MPoly, q: &MPoly) -> Option<MPoly> {
    p.homogeneous_degree()?;
    q.homogeneous_degree()?;
    let mut support = p.support_vars();
    support.extend(q.support_vars());
    support.sort_unstable();
    support.dedup();
    if support.len() < 2 {
        return None;
    }
    let y = support[0];
    let low = |f: &MPoly| f.terms().map(|(m, _)| m.exponents()[y]).min().unwrap();
    let k = low(p).min(low(q));
    let one = num_traits::One::one();
    let g = gcd_inner(&p.eval_var(y, &one), &q.eval_var(y, &one));
    let d = g.total_degree();
    let vars = p.vars().clone();
    let g = MPoly::from_terms(
        &vars,
        g.terms().map(|(m, c)| {
            let mut e = m.exponents().to_vec();
            e[y] = d - m.degree() + k;
            (e, c.clone())
        }),
    );
    Some(g.monic())
}

/// Pseudo-remainder of coefficient vectors (lowest first); empty means zero.
fn prem(a: &[MPoly], b: &[MPoly]) -> Vec<MPoly> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db {
        let k = r.len() - 1;
        let lr = r[k].clone();
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        for (j, bj) in b.iter().enumerate() {
            let t = &lr * bj;
            r[k - db + j] = &r[k - db + j] - &t;
        }
        debug_assert!(r[k].is_zero());
        r.pop();
        while r.last().is_some_and(MPoly::is_zero) {
            r.pop();
        }
    }
    r
}

/// Divides out the content in `x` and the rational content.
fn primitive_coeffs(r: &[MPoly], x: usize) -> Vec<MPoly> {
    let vars = r[0].vars().clone();
    let p = MPoly::from_univariate(&vars, x, r);
    let c = content_in(&p, x);
    let p = p.div_exact(&c).primitive();
    debug_assert!(!p.leading_coeff().is_zero());
    p.to_univariate(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyparse::parse_poly;
    use crate::polyring::VarSet;

    fn c(s: &str) -> MPoly {
        parse_poly(s, &VarSet::chart()).unwrap()
    }

    #[test]
    fn spec_examples() {
        assert_eq!(gcd(&c("u1^2-u2^2"), &c("u1^2+2*u1*u2+u2^2")).unwrap(), c("u1+u2"));
        assert_eq!(gcd(&c("u1^2*u2"), &c("u1*u2^3")).unwrap(), c("u1*u2"));
        assert_eq!(gcd(&c("3*u1-6"), &c("0")).unwrap(), c("u1-2"));
        assert!(gcd(&c("0"), &c("0")).unwrap().is_zero());
    }

    #[test]
    fn trivariate_common_factor() {
        let v = VarSet::projective();
        let f = parse_poly("x0*x1 + x2^2", &v).unwrap();
        let g = parse_poly("x0 - 2*x1*x2 + 3", &v).unwrap();
        let h = parse_poly("x1^2 - x0*x2", &v).unwrap();
        let got = gcd(&(&f * &h), &(&g * &h)).unwrap();
        assert_eq!(got, h.monic());
    }

    #[test]
    fn coprime_gives_one() {
        assert!(gcd(&c("u1^2+u2^2+1"), &c("u1-u2")).unwrap().is_one());
        assert!(gcd(&c("u1"), &c("u2")).unwrap().is_one());
    }
}
