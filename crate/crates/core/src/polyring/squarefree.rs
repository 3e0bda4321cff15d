use super::gcd::gcd_inner;
use super::{MPoly, Rational};
use crate::error::{Error, Result};

/// `unit * prod(factor^multiplicity)` with monic, squarefree, pairwise coprime factors.
#[derive(Clone, Debug, PartialEq)]
pub struct SquarefreeDecomposition {
    pub unit: Rational,
    /// Strictly increasing multiplicities.
    pub parts: Vec<(MPoly, u32)>,
}

impl SquarefreeDecomposition {
    pub fn reconstruct(&self, template: &MPoly) -> MPoly {
        self.parts.iter().fold(
            MPoly::constant(template.vars(), self.unit.clone()),
            |acc, (f, e)| &acc * &f.pow(*e),
        )
    }

    pub fn squarefree_part(&self, template: &MPoly) -> MPoly {
        self.parts
            .iter()
            .fold(MPoly::one(template.vars()), |acc, (f, _)| &acc * f)
    }

    pub fn repeated_part(&self, template: &MPoly) -> MPoly {
        self.parts
            .iter()
            .fold(MPoly::one(template.vars()), |acc, (f, e)| &acc * &f.pow(e - 1))
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.parts.iter().map(|(_, e)| *e).max().unwrap_or(0)
    }
}

/// Characteristic-zero squarefree decomposition.
///
/// `c = gcd(p, dp/dx_1, ..., dp/dx_n)` is the product of `f_i^(i-1)`; iterated
/// gcds of `p / c` with `c` peel off one multiplicity layer at a time.
pub fn squarefree_decomposition(p: &MPoly) -> Result<SquarefreeDecomposition> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let unit = p.leading_coeff();
    if p.is_constant() {
        return Ok(SquarefreeDecomposition { unit, parts: Vec::new() });
    }
    let mut c = p.clone();
    for v in p.support_vars() {
        c = gcd_inner(&c, &p.derivative(v));
        if c.is_constant() {
            break;
        }
    }
    let mut w = p.div_exact(&c);
    let mut parts = Vec::new();
    let mut i = 1;
    while !w.is_constant() {
        let y = gcd_inner(&w, &c);
        let z = w.div_exact(&y);
        if !z.is_constant() {
            parts.push((z.monic(), i));
        }
        c = c.div_exact(&y);
        w = y;
        i += 1;
    }
    Ok(SquarefreeDecomposition { unit, parts })
}

pub fn squarefree_part(p: &MPoly) -> Result<MPoly> {
    Ok(squarefree_decomposition(p)?.squarefree_part(p))
}

pub fn repeated_part(p: &MPoly) -> Result<MPoly> {
    Ok(squarefree_decomposition(p)?.repeated_part(p))
}

/// Whether `p` divides `q`; the quotient on success.
pub fn divides(p: &MPoly, q: &MPoly) -> Result<Option<MPoly>> {
    q.try_div(p)
}

/// Product of the irreducible factors of `p` that do not divide `q`
/// (up to a unit), or `None` when every factor divides `q`.
pub fn radical_witness(p: &MPoly, q: &MPoly) -> Result<Option<MPoly>> {
    p.try_add(q)?;
    if p.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let mut r = squarefree_part(p)?;
    loop {
        let g = gcd_inner(&r, q);
        if g.is_constant() {
            return Ok((!r.is_constant()).then_some(r));
        }
        r = r.div_exact(&g);
    }
}

/// Whether every irreducible factor of `p` divides `q`.
pub fn radical_divides(p: &MPoly, q: &MPoly) -> Result<bool> {
    Ok(radical_witness(p, q)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyparse::parse_poly;
    use crate::polyring::{rat, VarSet};

    fn c(s: &str) -> MPoly {
        parse_poly(s, &VarSet::chart()).unwrap()
    }
    fn x(s: &str) -> MPoly {
        parse_poly(s, &VarSet::projective()).unwrap()
    }

    #[test]
    fn monomial_case() {
        let p = c("u1^2*u2");
        let d = squarefree_decomposition(&p).unwrap();
        assert_eq!(d.unit, rat(1));
        assert_eq!(d.parts, vec![(c("u2"), 1), (c("u1"), 2)]);
        assert_eq!(repeated_part(&p).unwrap(), c("u1"));
    }

    #[test]
    fn squarefree_cubic_form() {
        let p = x("x2^3-x0^3");
        let d = squarefree_decomposition(&p).unwrap();
        assert_eq!(d.parts.len(), 1);
        assert_eq!(d.parts[0].1, 1);
        assert_eq!(d.reconstruct(&p), p);
    }

    #[test]
    fn repeated_part_from_factors() {
        let p = x("x0^2*x2^2*(2*x0^2+x2^2)");
        assert_eq!(repeated_part(&p).unwrap(), x("x0*x2"));
        assert_eq!(squarefree_part(&p).unwrap(), x("x0*x2*(x0^2+1/2*x2^2)"));
        let d = squarefree_decomposition(&p).unwrap();
        assert_eq!(d.reconstruct(&p), p);
    }

    #[test]
    fn zero_is_rejected() {
        assert!(matches!(
            squarefree_decomposition(&c("0")),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn radical_divisibility() {
        assert!(radical_divides(&c("u1^2*u2"), &c("u1*u2^3")).unwrap());
        assert!(!radical_divides(&c("u1*u2"), &c("u1")).unwrap());
        assert_eq!(radical_witness(&c("u1*u2"), &c("u1")).unwrap(), Some(c("u2")));
        assert_eq!(divides(&c("u1+u2"), &c("u1^2-u2^2")).unwrap(), Some(c("u1-u2")));
        assert!(matches!(
            divides(&c("0"), &c("u1")),
            Err(Error::DivisionByZero)
        ));
    }
}
