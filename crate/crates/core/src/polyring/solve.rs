//! Zero-dimensional bivariate systems: exact rational solutions and
//! counts of distinct complex solutions, affine and projective.
//!
//! Counting relies on generic position, reached with random linear changes
//! drawn from a seeded generator. A count is reported only once two
//! independent changes agree.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::gcd::gcd_inner;
use super::{rat, rational_roots, resultant, MPoly, Rational, UPoly};
use crate::error::{Error, Result};

pub const DEFAULT_SEED: u64 = 0x5eed_0003_c0de_0006;

pub type Matrix3 = [[Rational; 3]; 3];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub seed: u64,
    /// Number of random coordinate changes tried before giving up.
    pub retries: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            seed: DEFAULT_SEED,
            retries: 6,
        }
    }
}

impl SolveOptions {
    pub fn with_seed(seed: u64) -> Self {
        SolveOptions {
            seed,
            ..Self::default()
        }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// Point of the projective plane with coprime integer coordinates, the
/// first nonzero one positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ProjPoint([Rational; 3]);

impl ProjPoint {
    /// `None` for the zero vector.
    pub fn new(coords: [Rational; 3]) -> Option<Self> {
        let first = coords.iter().position(|c| !c.is_zero())?;
        let mut l = BigInt::one();
        let mut g = BigInt::zero();
        for c in &coords {
            l = l.lcm(c.denom());
            g = g.gcd(c.numer());
        }
        let mut s = Rational::new(l, g);
        if coords[first].is_negative() {
            s = -s;
        }
        Some(ProjPoint(coords.map(|c| c * &s)))
    }

    pub fn from_ints(x0: i64, x1: i64, x2: i64) -> Option<Self> {
        Self::new([rat(x0), rat(x1), rat(x2)])
    }

    /// Point `(1 : u1 : u2)` of the chart `x0 != 0`.
    pub fn from_chart(u1: &Rational, u2: &Rational) -> Self {
        Self::new([Rational::one(), u1.clone(), u2.clone()]).unwrap()
    }

    pub fn coords(&self) -> &[Rational; 3] {
        &self.0
    }

    /// Chart coordinates `(x1/x0, x2/x0)` when `x0 != 0`.
    pub fn chart(&self) -> Option<(Rational, Rational)> {
        let [x0, x1, x2] = &self.0;
        (!x0.is_zero()).then(|| (x1 / x0, x2 / x0))
    }

    /// Exchanges coordinates `0` and `k`.
    pub fn swapped(&self, k: usize) -> ProjPoint {
        let mut c = self.0.clone();
        c.swap(0, k);
        ProjPoint::new(c).unwrap()
    }

    /// The point `m x`.
    pub fn transform(&self, m: &Matrix3) -> ProjPoint {
        ProjPoint::new(mat_vec(m, &self.0)).expect("invertible matrix")
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{}:{})", self.0[0], self.0[1], self.0[2])
    }
}

pub fn mat_vec(m: &Matrix3, x: &[Rational; 3]) -> [Rational; 3] {
    std::array::from_fn(|i| (0..3).map(|j| &m[i][j] * &x[j]).sum())
}

pub fn mat_transpose(m: &Matrix3) -> Matrix3 {
    std::array::from_fn(|i| std::array::from_fn(|j| m[j][i].clone()))
}

pub fn mat_det(m: &Matrix3) -> Rational {
    let minor = |i: usize, j: usize| {
        let (r0, r1) = ((i + 1) % 3, (i + 2) % 3);
        let (c0, c1) = ((j + 1) % 3, (j + 2) % 3);
        &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0]
    };
    (0..3).map(|j| &m[0][j] * minor(0, j)).sum()
}

/// Inverse via the adjugate; `None` when singular.
pub fn mat_inverse(m: &Matrix3) -> Option<Matrix3> {
    let det = mat_det(m);
    if det.is_zero() {
        return None;
    }
    let cof = |i: usize, j: usize| {
        let (r0, r1) = ((i + 1) % 3, (i + 2) % 3);
        let (c0, c1) = ((j + 1) % 3, (j + 2) % 3);
        &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0]
    };
    Some(std::array::from_fn(|i| {
        std::array::from_fn(|j| cof(j, i) / &det)
    }))
}

/// Invertible matrix with small integer entries.
pub fn random_invertible_matrix<R: Rng>(rng: &mut R) -> Matrix3 {
    loop {
        let m: Matrix3 =
            std::array::from_fn(|_| std::array::from_fn(|_| rat(rng.gen_range(-4..=4))));
        if !mat_det(&m).is_zero() {
            return m;
        }
    }
}

/// `p(m x)` for a polynomial in three variables.
pub fn linear_change(p: &MPoly, m: &Matrix3) -> MPoly {
    let vars = p.vars();
    assert_eq!(vars.len(), 3, "linear_change needs three variables");
    let images: Vec<MPoly> = (0..3)
        .map(|i| {
            (0..3).fold(MPoly::zero(vars), |acc, j| {
                &acc + &MPoly::var(vars, j).scale(&m[i][j])
            })
        })
        .collect();
    p.substitute(&images).expect("same variable set")
}

fn common_gcd(polys: &[MPoly]) -> MPoly {
    polys
        .iter()
        .fold(MPoly::zero(polys[0].vars()), |g, p| gcd_inner(&g, p))
}

/// Shared checks: `Ok(false)` when a nonzero constant makes the system
/// inconsistent, `PositiveDimensional` when the zero set contains a curve.
fn check_system(polys: &[MPoly]) -> Result<bool> {
    if polys.is_empty() {
        return Err(Error::PositiveDimensional("empty system".into()));
    }
    for p in polys {
        polys[0].try_add(p)?;
    }
    if polys.iter().any(|p| p.is_constant() && !p.is_zero()) {
        return Ok(false);
    }
    let g = common_gcd(polys);
    if g.is_zero() || !g.is_constant() {
        return Err(Error::PositiveDimensional(format!("common factor {g}")));
    }
    Ok(true)
}

fn random_combination<R: Rng>(polys: &[MPoly], rng: &mut R) -> MPoly {
    polys.iter().fold(MPoly::zero(polys[0].vars()), |acc, p| {
        let mut c = rng.gen_range(1..=40);
        if rng.gen_bool(0.5) {
            c = -c;
        }
        &acc + &p.scale_int(c)
    })
}

/// Univariate polynomial in variable 0 vanishing at the first coordinate of
/// every common zero of `f` and `g`; `None` if elimination degenerates.
fn eliminant(f: &MPoly, g: &MPoly) -> Option<UPoly> {
    let r = if f.degree_in(1) == 0 && g.degree_in(1) == 0 {
        gcd_inner(f, g)
    } else {
        resultant(f, g, 1).ok()?
    };
    if r.is_zero() {
        return None;
    }
    UPoly::from_mpoly(&r, 0)
}

/// All rational common zeros of bivariate polynomials, sorted.
pub fn affine_rational_zeros(polys: &[MPoly]) -> Result<Vec<(Rational, Rational)>> {
    if !check_system(polys)? {
        return Ok(Vec::new());
    }
    let nonzero: Vec<MPoly> = polys.iter().filter(|p| !p.is_zero()).cloned().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let elim = if nonzero.len() == 1 {
        None
    } else {
        (0..16).find_map(|_| {
            let f = random_combination(&nonzero, &mut rng);
            let g = random_combination(&nonzero, &mut rng);
            eliminant(&f, &g)
        })
    };
    let elim = elim.ok_or_else(|| Error::PositiveDimensional("elimination failed".into()))?;

    let mut out = Vec::new();
    for r in rational_roots(&elim) {
        let mut g = UPoly::zero();
        for p in &nonzero {
            let s = UPoly::from_mpoly(&p.eval_var(0, &r), 1).unwrap();
            g = g.gcd(&s);
        }
        if g.is_zero() {
            return Err(Error::PositiveDimensional(format!("line at {r}")));
        }
        for s in rational_roots(&g) {
            out.push((r.clone(), s));
        }
    }
    out.sort();
    Ok(out)
}

/// Number of distinct complex common zeros of bivariate polynomials.
pub fn affine_zero_count(polys: &[MPoly], opts: &SolveOptions) -> Result<usize> {
    if !check_system(polys)? {
        return Ok(0);
    }
    let nonzero: Vec<MPoly> = polys.iter().filter(|p| !p.is_zero()).cloned().collect();
    let vars = nonzero[0].vars().clone();
    let mut rng = opts.rng();
    let mut previous = None;
    for _ in 0..opts.retries {
        let c = rat(rng.gen_range(-12..=12));
        let shear = [
            &MPoly::var(&vars, 0) + &MPoly::var(&vars, 1).scale(&c),
            MPoly::var(&vars, 1),
        ];
        let sheared: Vec<MPoly> = nonzero
            .iter()
            .map(|p| p.substitute(&shear).unwrap())
            .collect();
        let f = random_combination(&sheared, &mut rng);
        if f.degree_in(1) != f.total_degree() {
            continue;
        }
        let g = random_combination(&sheared, &mut rng);
        let h = random_combination(&sheared, &mut rng);
        let (Some(r1), Some(r2)) = (eliminant(&f, &g), eliminant(&f, &h)) else {
            continue;
        };
        let count = r1.gcd(&r2).squarefree_part().degree().unwrap_or(0);
        if previous == Some(count) {
            return Ok(count);
        }
        previous = Some(count);
    }
    Err(Error::IndeterminateCount(
        "zero counts did not stabilise under random shears".into(),
    ))
}

/// Number of distinct common zeros in the projective plane of ternary forms.
pub fn projective_zero_count(forms: &[MPoly], opts: &SolveOptions) -> Result<usize> {
    if !check_system(forms)? {
        return Ok(0);
    }
    let vars = forms[0].vars().clone();
    let affine_vars = vars.without(0);
    let mut rng = opts.rng();
    let mut previous = None;
    for _ in 0..opts.retries {
        let m = random_invertible_matrix(&mut rng);
        let moved: Vec<MPoly> = forms.iter().map(|f| linear_change(f, &m)).collect();
        let at_infinity: Vec<MPoly> = moved.iter().map(|f| f.eval_var(0, &rat(0))).collect();
        if !common_gcd(&at_infinity).is_constant() {
            continue;
        }
        let affine: Vec<MPoly> = moved
            .iter()
            .map(|f| f.dehomogenize_into(&affine_vars).unwrap())
            .collect();
        let inner = SolveOptions {
            seed: rng.gen(),
            retries: opts.retries,
        };
        let count = match affine_zero_count(&affine, &inner) {
            Ok(n) => n,
            Err(Error::IndeterminateCount(_)) => continue,
            Err(e) => return Err(e),
        };
        if previous == Some(count) {
            return Ok(count);
        }
        previous = Some(count);
    }
    Err(Error::IndeterminateCount(
        "projective zero counts did not stabilise".into(),
    ))
}

/// All rational common zeros of ternary forms, sorted.
pub fn projective_rational_zeros(forms: &[MPoly]) -> Result<Vec<ProjPoint>> {
    if !check_system(forms)? {
        return Ok(Vec::new());
    }
    let vars = forms[0].vars().clone();
    let affine_vars = vars.without(0);
    let chart: Vec<MPoly> = forms
        .iter()
        .map(|f| f.dehomogenize_into(&affine_vars).unwrap())
        .collect();
    let mut out: Vec<ProjPoint> = affine_rational_zeros(&chart)?
        .iter()
        .map(|(a, b)| ProjPoint::from_chart(a, b))
        .collect();

    // the line x0 = 0: points (0 : 1 : s), then (0 : 0 : 1)
    let mut g = UPoly::zero();
    for f in forms {
        let line = f.eval_var(0, &rat(0)).eval_var(1, &rat(1));
        g = g.gcd(&UPoly::from_mpoly(&line, 2).unwrap());
    }
    for s in rational_roots(&g) {
        out.push(ProjPoint::new([rat(0), rat(1), s]).unwrap());
    }
    let corner = [rat(0), rat(0), rat(1)];
    if forms.iter().all(|f| f.eval(&corner).unwrap().is_zero()) {
        out.push(ProjPoint::new(corner).unwrap());
    }
    out.sort();
    Ok(out)
}
