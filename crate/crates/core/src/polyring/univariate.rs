use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{rat, MPoly, Rational, VarSet};

/// Dense univariate polynomial over the rationals, lowest degree first.
///
/// Used on the hot paths (gcd of univariate inputs, root extraction,
/// interpolation) where the sparse representation would only add overhead.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UPoly(Vec<Rational>);

impl UPoly {
    pub fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub fn constant(c: Rational) -> Self {
        UPoly::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        UPoly::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UPoly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lc(&self) -> Rational {
        self.0.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.0.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat(k as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> UPoly {
        UPoly::new(self.0.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().recip())
    }

    /// Coprime integer coefficients with a positive leading coefficient.
    pub fn primitive(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = BigInt::zero();
        let mut l = BigInt::one();
        for c in &self.0 {
            g = g.gcd(c.numer());
            l = l.lcm(c.denom());
        }
        let mut s = Rational::new(l, g);
        if self.lc().is_negative() {
            s = -s;
        }
        self.scale(&s)
    }

    pub fn pow(&self, e: u32) -> UPoly {
        (0..e).fold(UPoly::constant(Rational::one()), |acc, _| &acc * self)
    }

    /// Euclidean division over the rationals.
    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.0.len() - 1;
        let inv = d.lc().recip();
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            let c = &r[k] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.0.iter().enumerate() {
                r[k - dd + j] -= &c * dj;
            }
            q[k - dd] = c;
        }
        r.truncate(dd);
        (UPoly::new(q), UPoly::new(r))
    }

    /// Pseudo-remainder, kept with integer coefficients when the inputs have them.
    fn prem(&self, d: &UPoly) -> UPoly {
        let dd = d.0.len() - 1;
        let lc = d.lc();
        let mut r = self.0.clone();
        while r.len() > dd {
            let k = r.len() - 1;
            let c = r[k].clone();
            for x in r.iter_mut() {
                *x *= &lc;
            }
            for (j, dj) in d.0.iter().enumerate() {
                r[k - dd + j] -= &c * dj;
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        UPoly::new(r)
    }

    /// Monic greatest common divisor (primitive remainder sequence).
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.0.len() < b.0.len() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            if b.0.len() == 1 {
                return UPoly::constant(Rational::one());
            }
            let r = a.prem(&b);
            if r.is_zero() {
                return b.monic();
            }
            a = b;
            b = r.primitive();
        }
    }

    pub fn exact_div(&self, d: &UPoly) -> Option<UPoly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Product of the distinct monic irreducible factors.
    pub fn squarefree_part(&self) -> UPoly {
        if self.degree().unwrap_or(0) == 0 {
            return UPoly::constant(Rational::one());
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    /// Multiplicity of `root` as a zero of `self`.
    pub fn root_multiplicity(&self, root: &Rational) -> u32 {
        if self.is_zero() {
            return u32::MAX;
        }
        let lin = UPoly::new(vec![-root.clone(), Rational::one()]);
        let mut p = self.clone();
        let mut k = 0;
        while let Some(q) = p.exact_div(&lin) {
            p = q;
            k += 1;
        }
        k
    }

    /// Newton interpolation through `(x_i, y_i)`; the `x_i` must be distinct.
    pub fn interpolate(points: &[(Rational, Rational)]) -> UPoly {
        let n = points.len();
        let mut dd: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                dd[i] = (&dd[i] - &dd[i - 1]) / (&points[i].0 - &points[i - level].0);
            }
        }
        let mut acc = UPoly::zero();
        for i in (0..n).rev() {
            let lin = UPoly::new(vec![-points[i].0.clone(), Rational::one()]);
            acc = &(&acc * &lin) + &UPoly::constant(dd[i].clone());
        }
        acc
    }

    /// Reads a polynomial that involves at most the variable `var`.
    pub fn from_mpoly(p: &MPoly, var: usize) -> Option<UPoly> {
        let mut coeffs = vec![Rational::zero(); p.degree_in(var) as usize + 1];
        for (m, c) in p.terms() {
            let e = m.exponents();
            if e.iter().enumerate().any(|(i, &k)| i != var && k > 0) {
                return None;
            }
            coeffs[e[var] as usize] = c.clone();
        }
        Some(UPoly::new(coeffs))
    }

    pub fn to_mpoly(&self, vars: &VarSet, var: usize) -> MPoly {
        MPoly::from_terms(
            vars,
            self.0.iter().enumerate().map(|(k, c)| {
                let mut e = vec![0; vars.len()];
                e[var] = k as u32;
                (e, c.clone())
            }),
        )
    }

    /// Integer coefficients of a polynomial already in primitive form.
    pub(crate) fn integer_coeffs(&self) -> Vec<BigInt> {
        self.0
            .iter()
            .map(|c| {
                debug_assert!(c.is_integer());
                c.to_integer()
            })
            .collect()
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.0.len().max(rhs.0.len());
        UPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let n = self.0.len().max(rhs.0.len());
        UPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly(self.0.iter().map(|c| -c).collect())
    }
}
