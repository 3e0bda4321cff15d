//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Every polynomial carries the ordered [`VarSet`] it lives in. Terms are
//! kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is graded
//! lexicographic with respect to the declared variable order, so the last
//! entry of the map is always the leading term.

mod gcd;
mod resultant;
mod roots;
mod solve;
mod squarefree;
mod univariate;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use gcd::{content_in, gcd};
pub use resultant::{discriminant, resultant, sylvester_matrix, sylvester_resultant};
pub use roots::rational_roots;
pub use solve::{
    affine_rational_zeros, affine_zero_count, linear_change, mat_det, mat_inverse, mat_transpose,
    mat_vec, projective_rational_zeros, projective_zero_count, random_invertible_matrix, Matrix3,
    ProjPoint, SolveOptions, DEFAULT_SEED,
};
pub use squarefree::{
    divides, radical_divides, radical_witness, repeated_part, squarefree_decomposition,
    squarefree_part, SquarefreeDecomposition,
};
pub use univariate::UPoly;

/// Exact rational number; always stored in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// An ordered set of variable names.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarSet(Arc<[String]>);

impl VarSet {
    pub fn new<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        VarSet(names.into_iter().map(Into::into).collect::<Vec<_>>().into())
    }

    /// Affine chart coordinates `u1 = x1/x0`, `u2 = x2/x0`.
    pub fn chart() -> Self {
        Self::new(["u1", "u2"])
    }

    /// Homogeneous coordinates of the plane.
    pub fn projective() -> Self {
        Self::new(["x0", "x1", "x2"])
    }

    /// Homogeneous coordinates of the dual plane.
    pub fn dual() -> Self {
        Self::new(["v0", "v1", "v2"])
    }

    /// Fiber coordinates of the rank-two bundle.
    pub fn fiber() -> Self {
        Self::new(["z", "w"])
    }

    /// Parameter of a line.
    pub fn line() -> Self {
        Self::new(["t"])
    }

    /// Homogeneous coordinates of projective three-space.
    pub fn surface() -> Self {
        Self::new(["x0", "x1", "x2", "x3"])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, index: usize) -> &str {
        &self.0[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// The set obtained by deleting the variable at `index`.
    pub fn without(&self, index: usize) -> VarSet {
        VarSet::new(
            self.0
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != index)
                .map(|(_, n)| n.clone()),
        )
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.join(", "))
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    pub fn var(arity: usize, index: usize) -> Self {
        let mut e = vec![0; arity];
        e[index] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// Sparse polynomial over the rationals in a fixed ordered variable set.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    vars: VarSet,
    terms: BTreeMap<Monomial, Rational>,
}

impl MPoly {
    pub fn zero(vars: &VarSet) -> Self {
        MPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: &VarSet, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    pub fn var(vars: &VarSet, index: usize) -> Self {
        let mut p = Self::zero(vars);
        p.terms
            .insert(Monomial::var(vars.len(), index), Rational::one());
        p
    }

    pub fn var_named(vars: &VarSet, name: &str) -> Result<Self> {
        Ok(Self::var(vars, vars.require(name)?))
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I>(vars: &VarSet, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector arity");
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Monomial::one(self.vars.len()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeff_of(&self, exponents: &[u32]) -> Rational {
        self.coeff(&Monomial(exponents.to_vec()))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    /// Indices of the variables that actually occur.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|m| m.0[i] > 0))
            .collect()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Homogeneous degree, if every term has the same total degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous_of(&self, degree: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == degree)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same(&self, other: &MPoly) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VarSetMismatch {
                left: self.vars.to_string(),
                right: other.vars.to_string(),
            })
        }
    }

    pub fn try_add(&self, other: &MPoly) -> Result<MPoly> {
        self.check_same(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(&self, other: &MPoly) -> Result<MPoly> {
        self.check_same(other)?;
        Ok(self.add_unchecked(&-other))
    }

    pub fn try_mul(&self, other: &MPoly) -> Result<MPoly> {
        self.check_same(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    fn mul_unchecked(&self, other: &MPoly) -> MPoly {
        let mut out = MPoly::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.vars);
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> MPoly {
        self.scale(&rat(c))
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> MPoly {
        let mut out = MPoly::zero(&self.vars);
        if c.is_zero() {
            return out;
        }
        for (mm, a) in &self.terms {
            out.terms.insert(mm.mul(m), a * c);
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> MPoly {
        let mut base = self.clone();
        let mut acc = MPoly::one(&self.vars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Scales so that the leading coefficient (graded lex) is 1.
    pub fn monic(&self) -> MPoly {
        match self.leading_term() {
            Some((_, c)) if !c.is_one() => self.scale(&c.recip()),
            _ => self.clone(),
        }
    }

    /// Scales to coprime integer coefficients with a positive leading coefficient.
    pub fn primitive(&self) -> MPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut s = Rational::new(den_lcm, num_gcd);
        if self.leading_coeff().is_negative() {
            s = -s;
        }
        self.scale(&s)
    }

    /// Evaluates at a full rational point.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.vars.len() {
            return Err(Error::IncompleteAssignment {
                expected: self.vars.len(),
                found: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Sets one variable to a value; the variable set is unchanged.
    pub fn eval_var(&self, var: usize, value: &Rational) -> MPoly {
        let mut out = MPoly::zero(&self.vars);
        let mut powers: Vec<Rational> = vec![Rational::one()];
        for (m, c) in &self.terms {
            let e = m.0[var] as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut mm = m.clone();
            mm.0[var] = 0;
            out.add_term(mm, c * &powers[e]);
        }
        out
    }

    /// Simultaneous substitution `var_i -> assignment[i]`; all targets share one variable set.
    pub fn substitute(&self, assignment: &[MPoly]) -> Result<MPoly> {
        if assignment.len() != self.vars.len() {
            return Err(Error::IncompleteAssignment {
                expected: self.vars.len(),
                found: assignment.len(),
            });
        }
        let Some(first) = assignment.first() else {
            // no variables: the polynomial is a constant
            return Err(Error::IncompleteAssignment {
                expected: 0,
                found: 0,
            });
        };
        let target = first.vars.clone();
        for a in assignment {
            first.check_same(a)?;
        }
        let mut cache: Vec<Vec<MPoly>> = assignment
            .iter()
            .map(|_| vec![MPoly::one(&target)])
            .collect();
        let mut out = MPoly::zero(&target);
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while cache[i].len() <= e {
                    let next = cache[i].last().unwrap() * &assignment[i];
                    cache[i].push(next);
                }
                t = &t * &cache[i][e];
            }
            out = out.add_unchecked(&t);
        }
        Ok(out)
    }

    pub fn derivative(&self, var: usize) -> MPoly {
        let mut out = MPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut mm = m.clone();
            mm.0[var] -= 1;
            out.add_term(mm, c * rat(e as i64));
        }
        out
    }

    /// Re-expresses the polynomial in `target`, matching variables by name.
    pub fn embed(&self, target: &VarSet) -> Result<MPoly> {
        let map = (0..self.vars.len())
            .map(|i| {
                let name = self.vars.name(i);
                match target.index_of(name) {
                    Some(j) => Ok(Some(j)),
                    None if self.degree_in(i) == 0 => Ok(None),
                    None => Err(Error::UnknownVariable(name.to_string())),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let mut out = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, &k) in m.0.iter().enumerate() {
                if let Some(j) = map[i] {
                    e[j] += k;
                }
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Same exponents, new variable names.
    pub fn rename(&self, target: &VarSet) -> Result<MPoly> {
        if target.len() != self.vars.len() {
            return Err(Error::VarSetMismatch {
                left: self.vars.to_string(),
                right: target.to_string(),
            });
        }
        Ok(MPoly {
            vars: target.clone(),
            terms: self.terms.clone(),
        })
    }

    /// Permutes the variables: variable `i` becomes variable `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> MPoly {
        let mut out = MPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut e = vec![0; m.0.len()];
            for (i, &k) in m.0.iter().enumerate() {
                e[perm[i]] = k;
            }
            out.terms.insert(Monomial(e), c.clone());
        }
        out
    }

    /// `x0^degree * p(x1/x0, ..., xn/x0)` in `target`, whose first variable is the new one.
    pub fn homogenize_into(&self, target: &VarSet, degree: u32) -> Result<MPoly> {
        if target.len() != self.vars.len() + 1 {
            return Err(Error::VarSetMismatch {
                left: self.vars.to_string(),
                right: target.to_string(),
            });
        }
        let d = self.total_degree();
        if d > degree {
            return Err(Error::DegreeTooSmall { target: degree, degree: d });
        }
        let mut out = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut e = Vec::with_capacity(target.len());
            e.push(degree - m.degree());
            e.extend_from_slice(&m.0);
            out.terms.insert(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Homogenizes a chart polynomial in `(u1, u2)` to a form in `(x0, x1, x2)`.
    pub fn homogenize(&self, degree: u32) -> Result<MPoly> {
        self.homogenize_into(&VarSet::projective(), degree)
    }

    /// Sets the first variable to 1 and drops it, renaming into `target`.
    pub fn dehomogenize_into(&self, target: &VarSet) -> Result<MPoly> {
        if target.len() + 1 != self.vars.len() {
            return Err(Error::VarSetMismatch {
                left: self.vars.to_string(),
                right: target.to_string(),
            });
        }
        let mut out = MPoly::zero(target);
        for (m, c) in &self.terms {
            out.add_term(Monomial(m.0[1..].to_vec()), c.clone());
        }
        Ok(out)
    }

    /// Dehomogenizes a form in `(x0, x1, x2)` to the chart `(u1, u2)`.
    pub fn dehomogenize(&self) -> Result<MPoly> {
        self.dehomogenize_into(&VarSet::chart())
    }

    /// Coefficients with respect to `var`, lowest degree first; they keep the variable set.
    pub fn to_univariate(&self, var: usize) -> Vec<MPoly> {
        let n = self.degree_in(var) as usize;
        let mut coeffs = vec![MPoly::zero(&self.vars); if self.is_zero() { 0 } else { n + 1 }];
        for (m, c) in &self.terms {
            let e = m.0[var] as usize;
            let mut mm = m.clone();
            mm.0[var] = 0;
            coeffs[e].terms.insert(mm, c.clone());
        }
        coeffs
    }

    pub fn from_univariate(vars: &VarSet, var: usize, coeffs: &[MPoly]) -> MPoly {
        let mut out = MPoly::zero(vars);
        for (k, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                let mut mm = m.clone();
                mm.0[var] += k as u32;
                out.add_term(mm, a.clone());
            }
        }
        out
    }

    /// Leading coefficient with respect to `var`.
    pub fn leading_coeff_in(&self, var: usize) -> MPoly {
        self.to_univariate(var)
            .pop()
            .unwrap_or_else(|| MPoly::zero(&self.vars))
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a remainder.
    pub fn try_div(&self, divisor: &MPoly) -> Result<Option<MPoly>> {
        self.check_same(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (lm, lc) = divisor.leading_term().unwrap();
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = MPoly::zero(&self.vars);
        while let Some((m, c)) = rem.leading_term() {
            let Some(qm) = m.checked_div(&lm) else {
                return Ok(None);
            };
            let qc = c / &lc;
            rem = rem.add_unchecked(&divisor.mul_monomial(&qm, &-qc.clone()));
            quot.add_term(qm, qc);
        }
        Ok(Some(quot))
    }

    /// Exact division that panics when `divisor` does not divide `self`.
    pub(crate) fn div_exact(&self, divisor: &MPoly) -> MPoly {
        self.try_div(divisor)
            .expect("division")
            .expect("inexact polynomial division")
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::polyparse::print_poly(self))
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.vars)
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&MPoly> for &MPoly {
            type Output = MPoly;
            /// Panics when the variable sets differ; use the `try_` methods to get an error instead.
            fn $method(self, rhs: &MPoly) -> MPoly {
                let f: fn(&MPoly, &MPoly) -> Result<MPoly> = $body;
                f(self, rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &MPoly) -> MPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<MPoly> for &MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| a.try_add(b));
binop!(Sub, sub, |a, b| a.try_sub(b));
binop!(Mul, mul, |a, b| a.try_mul(b));

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyparse::parse_poly;

    fn chart(s: &str) -> MPoly {
        parse_poly(s, &VarSet::chart()).unwrap()
    }

    fn proj(s: &str) -> MPoly {
        parse_poly(s, &VarSet::projective()).unwrap()
    }

    #[test]
    fn cancellation_and_difference_of_squares() {
        assert_eq!(chart("u1+u2") + chart("u1-u2"), chart("2*u1"));
        assert_eq!(chart("u1+u2") * chart("u1-u2"), chart("u1^2-u2^2"));
    }

    #[test]
    fn cube_by_repeated_multiplication() {
        let p = chart("u1-1");
        let expected = &(&p * &p) * &p;
        assert_eq!(p.pow(3), expected);
        assert_eq!(p.pow(3), chart("u1^3-3*u1^2+3*u1-1"));
        assert!(p.pow(0).is_one());
    }

    #[test]
    fn mismatched_variable_sets_are_rejected() {
        let err = chart("u1").try_add(&proj("x0")).unwrap_err();
        assert!(matches!(err, Error::VarSetMismatch { .. }));
    }

    #[test]
    fn substitution_dehomogenizes_and_restricts() {
        let u = VarSet::chart();
        let f = proj("x0^3+x1^3+x2^3");
        let sub = [MPoly::one(&u), MPoly::var(&u, 0), MPoly::var(&u, 1)];
        assert_eq!(f.substitute(&sub).unwrap(), chart("1+u1^3+u2^3"));

        let t = VarSet::line();
        let g = chart("u1^2+u2");
        let r = g
            .substitute(&[MPoly::var(&t, 0), MPoly::zero(&t)])
            .unwrap();
        assert_eq!(r, parse_poly("t^2", &t).unwrap());

        let err = g.substitute(&[MPoly::var(&t, 0)]).unwrap_err();
        assert!(matches!(err, Error::IncompleteAssignment { .. }));
    }

    #[test]
    fn binomial_substitution_matches_expansion() {
        let vars = VarSet::new(["v1", "v2", "u1", "u2"]);
        let v0 = parse_poly("v0^3", &VarSet::dual()).unwrap();
        let lin = parse_poly("-u1*v1-u2*v2", &vars).unwrap();
        let got = v0
            .substitute(&[
                lin,
                MPoly::var(&vars, 0),
                MPoly::var(&vars, 1),
            ])
            .unwrap();
        // -(a+b)^3 = -(a^3 + 3a^2b + 3ab^2 + b^3)
        let expected = parse_poly(
            "-(u1^3*v1^3 + 3*u1^2*v1^2*u2*v2 + 3*u1*v1*u2^2*v2^2 + u2^3*v2^3)",
            &vars,
        )
        .unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn partial_derivatives() {
        assert_eq!(chart("u1^3*u2").derivative(0), chart("3*u1^2*u2"));
        let f = parse_poly("v0^3+v1^3+v2^3", &VarSet::dual()).unwrap();
        assert_eq!(f.derivative(0), parse_poly("3*v0^2", &VarSet::dual()).unwrap());
        assert!(chart("7").derivative(0).is_zero());
    }

    #[test]
    fn homogenize_examples() {
        assert_eq!(chart("1+u1^3").homogenize(3).unwrap(), proj("x0^3+x1^3"));
        assert_eq!(chart("u1").homogenize(6).unwrap(), proj("x0^5*x1"));
        let d = chart("(1-u1^3-u2^3)^2-4*u1^3*u2^3");
        assert_eq!(
            d.homogenize(6).unwrap(),
            proj("(x0^3-x1^3-x2^3)^2-4*x1^3*x2^3")
        );
        assert_eq!(d.homogenize(6).unwrap().dehomogenize().unwrap(), d);
        assert!(matches!(
            chart("u1^3").homogenize(2),
            Err(Error::DegreeTooSmall { .. })
        ));
    }

    #[test]
    fn exact_division() {
        let q = chart("u1^2-u2^2").try_div(&chart("u1+u2")).unwrap();
        assert_eq!(q, Some(chart("u1-u2")));
        assert_eq!(chart("u1^2+1").try_div(&chart("u1+1")).unwrap(), None);
        assert!(matches!(
            chart("u1").try_div(&MPoly::zero(&VarSet::chart())),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn grlex_leading_term() {
        let p = proj("x2^3 - x0^3 + x0*x1");
        let (m, c) = p.leading_term().unwrap();
        assert_eq!(m.exponents(), &[3, 0, 0]);
        assert_eq!(*c, rat(-1));
        assert_eq!(p.monic().leading_coeff(), rat(1));
    }

    #[test]
    fn embed_and_univariate_views() {
        let big = VarSet::new(["z", "u1", "u2"]);
        let p = chart("u1*u2+3").embed(&big).unwrap();
        assert_eq!(p.degree_in(0), 0);
        let q = parse_poly("z^2*u1 + z + u2", &big).unwrap();
        let coeffs = q.to_univariate(0);
        assert_eq!(coeffs.len(), 3);
        assert_eq!(MPoly::from_univariate(&big, 0, &coeffs), q);
        assert!(matches!(q.embed(&VarSet::chart()), Err(Error::UnknownVariable(_))));
    }
}
