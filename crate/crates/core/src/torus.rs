//! Covers built from a pair of forms `(G2, G3)` of degrees 2 and 3.
//!
//! The cover is the projection of the cubic surface
//! `x3^3 + 3 G2 x3 + 2 G3 = 0` from `(0:0:0:1)`; its branch curve is the
//! sextic `G2^3 + G3^2 = 0`, and its total branch points are the
//! intersections of the conic `G2 = 0` with the cubic `G3 = 0`.

use std::fmt;

use num_traits::Zero;

use crate::cover::{is_total_branch_point, rotate_form, AffineCoverData, TotalBranch};
use crate::error::{Error, Result};
use crate::polyparse::{format_terms, parse_poly};
use crate::polyring::{
    discriminant, gcd, linear_change, mat_inverse, projective_rational_zeros,
    radical_witness, random_invertible_matrix, rat, repeated_part, resultant, squarefree_part, MPoly, ProjPoint,
    Rational, SolveOptions, UPoly, VarSet,
};

#[derive(Clone, Debug, PartialEq)]
pub struct TorusPair {
    pub g2: MPoly,
    pub g3: MPoly,
}

impl TorusPair {
    /// Forms in `(x0, x1, x2)`; either may be zero.
    pub fn new(g2: MPoly, g3: MPoly) -> Result<Self> {
        let proj = VarSet::projective();
        for (p, deg) in [(&g2, 2), (&g3, 3)] {
            if p.vars() != &proj {
                return Err(Error::VarSetMismatch {
                    left: p.vars().to_string(),
                    right: proj.to_string(),
                });
            }
            if !p.is_zero() && !p.is_homogeneous_of(deg) {
                return Err(Error::NotHomogeneous { expected: deg });
            }
        }
        Ok(TorusPair { g2, g3 })
    }

    pub fn parse(g2: &str, g3: &str) -> Result<Self> {
        let v = VarSet::projective();
        Self::new(parse_poly(g2, &v)?, parse_poly(g3, &v)?)
    }

    /// `G2^3 + G3^2`.
    pub fn delta(&self) -> MPoly {
        &self.g2.pow(3) + &self.g3.pow(2)
    }

    /// Exchanges `x0` and `xk` in both forms.
    pub fn rotate(&self, k: usize) -> Self {
        TorusPair {
            g2: rotate_form(&self.g2, k),
            g3: rotate_form(&self.g3, k),
        }
    }
}

/// Cover data `(0, 1, -2 G3(1, u1, u2), G2(1, u1, u2))`.
pub fn build_cover(pair: &TorusPair) -> Result<AffineCoverData> {
    if pair.delta().is_zero() {
        return Err(Error::DegenerateTorus);
    }
    let chart = VarSet::chart();
    AffineCoverData::new(
        MPoly::zero(&chart),
        MPoly::one(&chart),
        pair.g3.dehomogenize()?.scale_int(-2),
        pair.g2.dehomogenize()?,
    )
}

/// `x3^3 + 3 G2 x3 + 2 G3` in `(x0, x1, x2, x3)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CubicSurfaceForm {
    pub form: MPoly,
}

pub fn cubic_surface_form(pair: &TorusPair) -> CubicSurfaceForm {
    let s = VarSet::surface();
    let x3 = MPoly::var(&s, 3);
    let g2 = pair.g2.embed(&s).unwrap();
    let g3 = pair.g3.embed(&s).unwrap();
    CubicSurfaceForm {
        form: &(&x3.pow(3) + &(&g2 * &x3).scale_int(3)) + &g3.scale_int(2),
    }
}

impl CubicSurfaceForm {
    /// Discriminant with respect to `x3`, as a form in `(x0, x1, x2)`.
    pub fn x3_discriminant(&self) -> MPoly {
        discriminant(&self.form, 3)
            .and_then(|d| d.embed(&VarSet::projective()))
            .expect("cubic in x3")
    }

    /// Coefficient of `x3` as a form in `(x0, x1, x2)`.
    pub fn linear_coefficient(&self) -> MPoly {
        self.form.to_univariate(3)[1]
            .embed(&VarSet::projective())
            .unwrap()
    }

    /// Part free of `x3` as a form in `(x0, x1, x2)`.
    pub fn constant_coefficient(&self) -> MPoly {
        self.form.to_univariate(3)[0]
            .embed(&VarSet::projective())
            .unwrap()
    }
}

impl fmt::Display for CubicSurfaceForm {
    /// Terms by degree, then by the exponents read from `x3` down to `x0`,
    /// so the projection coordinate leads.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<_> = self.form.terms().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let key = |m: &crate::polyring::Monomial| {
                let mut e = m.exponents().to_vec();
                e.reverse();
                (m.degree(), e)
            };
            key(b).cmp(&key(a))
        });
        f.write_str(&format_terms(self.form.vars(), terms))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Condition1 {
    /// `G2^3 + G3^2 = mu * delta`.
    Holds { mu: Rational },
    Fails,
    NotChecked,
}

/// Verdict on one condition; the witness is a non-constant divisor that
/// exhibits the failure and need not be irreducible.
#[derive(Clone, Debug, PartialEq)]
pub enum ConditionVerdict {
    Holds,
    Fails { witness: MPoly },
}

impl ConditionVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, ConditionVerdict::Holds)
    }
}

/// Whether the given sextic is, up to a constant, `G2^3 + G3^2`.
pub fn condition1(pair: &TorusPair, delta: &MPoly) -> Result<Condition1> {
    if delta.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if delta.vars() != &VarSet::projective() || !delta.is_homogeneous_of(6) {
        return Err(Error::NotHomogeneous { expected: 6 });
    }
    let own = pair.delta();
    if own.is_zero() {
        return Ok(Condition1::Fails);
    }
    let mu = own.leading_coeff() / delta.leading_coeff();
    Ok(if own == delta.scale(&mu) {
        Condition1::Holds { mu }
    } else {
        Condition1::Fails
    })
}

/// Fails when some curve `E` has `E | G2` and `E^2 | G3`.
pub fn condition2(pair: &TorusPair) -> Result<ConditionVerdict> {
    if pair.g2.is_zero() && pair.g3.is_zero() {
        return Err(Error::DegenerateTorus);
    }
    let rep = if pair.g3.is_zero() {
        MPoly::zero(pair.g3.vars())
    } else {
        repeated_part(&pair.g3)?
    };
    let g = gcd(&pair.g2, &rep)?;
    Ok(if g.is_constant() {
        ConditionVerdict::Holds
    } else {
        ConditionVerdict::Fails {
            witness: squarefree_part(&g)?,
        }
    })
}

/// Fails when some curve `E` with `E` not dividing `G2` has `E^2 | G2^3 + G3^2`.
pub fn condition3(pair: &TorusPair) -> Result<ConditionVerdict> {
    let delta = pair.delta();
    if delta.is_zero() {
        return Err(Error::DegenerateTorus);
    }
    let w = repeated_part(&delta)?;
    Ok(match radical_witness(&w, &pair.g2)? {
        None => ConditionVerdict::Holds,
        Some(witness) => ConditionVerdict::Fails { witness },
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConditionReport {
    pub condition1: Condition1,
    pub condition2: ConditionVerdict,
    pub condition3: ConditionVerdict,
    /// `G2^3 + G3^2`.
    pub delta: MPoly,
}

impl ConditionReport {
    pub fn all_hold(&self) -> bool {
        !matches!(self.condition1, Condition1::Fails)
            && self.condition2.holds()
            && self.condition3.holds()
    }
}

/// Runs all three checks; the first only when a target sextic is given.
pub fn check_conditions(pair: &TorusPair, target: Option<&MPoly>) -> Result<ConditionReport> {
    let condition1 = match target {
        Some(d) => condition1(pair, d)?,
        None => Condition1::NotChecked,
    };
    Ok(ConditionReport {
        condition1,
        condition2: condition2(pair)?,
        condition3: condition3(pair)?,
        delta: pair.delta(),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct TorusBranchPoints {
    /// Intersection number of `G2 = 0` and `G3 = 0`.
    pub count_with_multiplicity: u32,
    pub distinct: usize,
    /// Rational intersection points with their intersection multiplicities.
    pub rational_points: Vec<(ProjPoint, u32)>,
    /// Resultant of the moved forms in the first coordinate, a binary sextic.
    pub eliminant: MPoly,
}

/// Multiplicity of `(a : b)` as a root of a binary form in variables 1, 2.
fn binary_root_multiplicity(form: &MPoly, a: &Rational, b: &Rational) -> u32 {
    let deg = form.total_degree();
    if b.is_zero() {
        let at_one = form.eval_var(2, &rat(1));
        return deg - at_one.degree_in(1);
    }
    let u = UPoly::from_mpoly(&form.eval_var(2, &rat(1)), 1).unwrap();
    u.root_multiplicity(&(a / b))
}

pub fn total_branch_points(pair: &TorusPair) -> Result<TorusBranchPoints> {
    total_branch_points_with(pair, &SolveOptions::default())
}

/// Intersection of the conic and the cubic, counted through the resultant
/// after random coordinate changes that make the projection from `(1:0:0)`
/// generic. The distinct count must agree for two changes.
pub fn total_branch_points_with(pair: &TorusPair, opts: &SolveOptions) -> Result<TorusBranchPoints> {
    let g = gcd(&pair.g2, &pair.g3)?;
    if !g.is_constant() {
        return Err(Error::CommonComponent(g.to_string()));
    }
    let rational = projective_rational_zeros(&[pair.g2.clone(), pair.g3.clone()])?;
    let mut rng = opts.rng();
    let mut previous: Option<usize> = None;
    for _ in 0..opts.retries {
        let m = random_invertible_matrix(&mut rng);
        let g2 = linear_change(&pair.g2, &m);
        let g3 = linear_change(&pair.g3, &m);
        if g2.coeff_of(&[2, 0, 0]).is_zero() || g3.coeff_of(&[3, 0, 0]).is_zero() {
            continue;
        }
        let r = resultant(&g2, &g3, 0)?;
        let sqfree = squarefree_part(&r)?;
        let distinct = sqfree.total_degree() as usize;
        if previous != Some(distinct) {
            previous = Some(distinct);
            continue;
        }
        // the changed forms vanish at m^-1 p for every original point p
        let inv = mat_inverse(&m).expect("invertible");
        let rational_points = rational
            .iter()
            .map(|p| {
                let q = p.transform(&inv);
                let c = q.coords();
                (p.clone(), binary_root_multiplicity(&r, &c[1], &c[2]))
            })
            .collect();
        return Ok(TorusBranchPoints {
            count_with_multiplicity: r.total_degree(),
            distinct,
            rational_points,
            eliminant: r,
        });
    }
    Err(Error::IndeterminateCount(
        "intersection count did not stabilise".into(),
    ))
}

/// Coordinate to exchange with `x0` so that the point lies in the chart.
pub fn chart_index(p: &ProjPoint) -> usize {
    p.coords().iter().position(|c| !c.is_zero()).unwrap()
}

/// Total-branch test at a projective point, in the chart that contains it.
pub fn is_total_at(pair: &TorusPair, p: &ProjPoint) -> Result<TotalBranch> {
    let k = chart_index(p);
    let cov = build_cover(&pair.rotate(k))?;
    let pt = p.swapped(k).chart().expect("rotated into the chart");
    Ok(is_total_branch_point(&cov, &pt))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(s: &str) -> MPoly {
        parse_poly(s, &VarSet::projective()).unwrap()
    }
    fn pair(a: &str, b: &str) -> TorusPair {
        TorusPair::parse(a, b).unwrap()
    }

    #[test]
    fn cover_of_standard_pair() {
        let cov = build_cover(&pair("x0*x1", "x2^3-x0^3")).unwrap();
        let c = |s| parse_poly(s, &VarSet::chart()).unwrap();
        assert!(cov.a.is_zero());
        assert!(cov.b.is_one());
        assert_eq!(cov.c, c("-2*(u2^3-1)"));
        assert_eq!(cov.d, c("u1"));
        let d = crate::cover::derived_invariants(&cov).D;
        assert_eq!(d, c("4*(u1^3+(u2^3-1)^2)"));
        assert!(matches!(build_cover(&pair("-x0^2", "x0^3")), Err(Error::DegenerateTorus)));
        assert!(TorusPair::parse("x0", "x1^3").is_err());
    }

    #[test]
    fn surface_rendering_and_discriminant() {
        let p = pair("x0*x1", "x2^3-x0^3");
        let s = cubic_surface_form(&p);
        assert_eq!(s.to_string(), "x3^3 + 3*x0*x1*x3 + 2*x2^3 - 2*x0^3");
        let expected = x("x0^3*x1^3+(x2^3-x0^3)^2").scale_int(-108);
        assert_eq!(s.x3_discriminant(), expected);
        assert_eq!(s.linear_coefficient(), x("3*x0*x1"));
        assert_eq!(s.constant_coefficient(), x("2*x2^3-2*x0^3"));
        assert_eq!(cubic_surface_form(&pair("0", "0")).to_string(), "x3^3");
    }

    #[test]
    fn first_condition() {
        let p = pair("x0*x1", "x2^3-x0^3");
        let d = p.delta();
        assert_eq!(
            condition1(&p, &d.scale_int(4)).unwrap(),
            Condition1::Holds { mu: Rational::new(1.into(), 4.into()) }
        );
        assert_eq!(condition1(&p, &x("x0^6+x1^6")).unwrap(), Condition1::Fails);
        assert_eq!(condition1(&p, &d).unwrap(), Condition1::Holds { mu: rat(1) });
        assert!(condition1(&p, &x("0")).is_err());
    }

    #[test]
    fn second_condition() {
        assert_eq!(
            condition2(&pair("x0*x1", "x0^2*x2")).unwrap(),
            ConditionVerdict::Fails { witness: x("x0") }
        );
        assert!(condition2(&pair("x0*x1", "x2^3-x0^3")).unwrap().holds());
        assert_eq!(
            condition2(&pair("x0^2", "x0^3")).unwrap(),
            ConditionVerdict::Fails { witness: x("x0") }
        );
    }

    #[test]
    fn third_condition() {
        let v = condition3(&pair("-x0^2", "x0^3+x0*x2^2")).unwrap();
        let ConditionVerdict::Fails { witness } = v else { panic!("expected failure") };
        assert_eq!(witness, x("x2"));
        assert!(condition3(&pair("x0*x1", "x2^3-x0^3")).unwrap().holds());
        assert!(matches!(condition3(&pair("-x0^2", "x0^3")), Err(Error::DegenerateTorus)));
    }

    #[test]
    fn six_intersections() {
        let p = pair("x0*x1", "x2^3-x0^3");
        let t = total_branch_points(&p).unwrap();
        assert_eq!(t.count_with_multiplicity, 6);
        assert_eq!(t.distinct, 4);
        let pts: Vec<(String, u32)> = t
            .rational_points
            .iter()
            .map(|(q, m)| (q.to_string(), *m))
            .collect();
        assert_eq!(pts, vec![("(0:1:0)".to_string(), 3), ("(1:0:1)".to_string(), 1)]);
        for (q, _) in &t.rational_points {
            assert_eq!(is_total_at(&p, q).unwrap(), TotalBranch::Total);
        }
        assert!(matches!(
            total_branch_points(&pair("x0*x1", "x0*(x1^2+x2^2)")),
            Err(Error::CommonComponent(_))
        ));
    }
}
