//! Ternary cubics on the dual plane and the covers they induce.
//!
//! A cubic `f(v0, v1, v2)` gives cover data `(a_f, b_f, c_f, d_f)` on the
//! chart of the point plane, and its restriction to the line dual to a
//! point, `f(-u1 v1 - u2 v2, v1, v2)`, is the fiber over that point. The
//! discriminant `delta_f` of that binary cubic is proportional to the
//! branch polynomial `D_f`.

use std::fmt;

use num_traits::Zero;
use rand::Rng;

use crate::cover::{derived_invariants, AffineCoverData, ChartPoint};
use crate::error::{Error, Result};
use crate::polyparse::parse_poly;
use crate::polyring::{
    affine_rational_zeros, affine_zero_count, projective_rational_zeros, random_invertible_matrix,
    rat, rational_roots, resultant, Matrix3, MPoly, ProjPoint, Rational, SolveOptions, UPoly,
    VarSet,
};

/// `(exponents of v0, v1, v2; multiplier)` for `t1 .. t10`.
const CUBIC_TERMS: [([u32; 3], i64); 10] = [
    ([3, 0, 0], 1),
    ([2, 1, 0], 3),
    ([2, 0, 1], 3),
    ([1, 2, 0], 3),
    ([1, 1, 1], 3),
    ([1, 0, 2], 3),
    ([0, 3, 0], 1),
    ([0, 2, 1], 3),
    ([0, 1, 2], 3),
    ([0, 0, 3], 1),
];

/// `f = t1 v0^3 + 3 t2 v0^2 v1 + 3 t3 v0^2 v2 + 3 t4 v0 v1^2 + 3 t5 v0 v1 v2
///    + 3 t6 v0 v2^2 + t7 v1^3 + 3 t8 v1^2 v2 + 3 t9 v1 v2^2 + t10 v2^3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TernaryCubic {
    t: [Rational; 10],
}

impl TernaryCubic {
    pub fn new(t: [Rational; 10]) -> Self {
        TernaryCubic { t }
    }

    pub fn from_ints(t: [i64; 10]) -> Self {
        Self::new(t.map(rat))
    }

    pub fn fermat() -> Self {
        Self::from_ints([1, 0, 0, 0, 0, 0, 1, 0, 0, 1])
    }

    /// `t_i` with the 1-based index used in the formulas.
    pub fn t(&self, i: usize) -> &Rational {
        &self.t[i - 1]
    }

    pub fn coeffs(&self) -> &[Rational; 10] {
        &self.t
    }

    pub fn is_zero(&self) -> bool {
        self.t.iter().all(Zero::is_zero)
    }

    pub fn to_form(&self) -> MPoly {
        MPoly::from_terms(
            &VarSet::dual(),
            CUBIC_TERMS
                .iter()
                .zip(&self.t)
                .map(|((e, k), t)| (e.to_vec(), t * rat(*k))),
        )
    }

    /// Reads the coefficients of a cubic form in three variables.
    pub fn from_form(f: &MPoly) -> Result<Self> {
        if f.vars().len() != 3 || !(f.is_zero() || f.is_homogeneous_of(3)) {
            return Err(Error::NotHomogeneous { expected: 3 });
        }
        Ok(Self::new(std::array::from_fn(|i| {
            let (e, k) = CUBIC_TERMS[i];
            f.coeff_of(&e) / rat(k)
        })))
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::from_form(&parse_poly(text, &VarSet::dual())?)
    }

    /// The cubic `f(m v)`.
    pub fn transform(&self, m: &Matrix3) -> Self {
        Self::from_form(&crate::polyring::linear_change(&self.to_form(), m)).unwrap()
    }

    /// Exchanges `v0` and `vk`, matching the exchange of `x0` and `xk` on the point plane.
    pub fn rotate(&self, k: usize) -> Self {
        Self::from_form(&crate::cover::rotate_form(&self.to_form(), k)).unwrap()
    }
}

impl fmt::Display for TernaryCubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_form())
    }
}

/// Cover data of the cubic on the chart `x0 != 0`.
pub fn eta(f: &TernaryCubic) -> Result<AffineCoverData> {
    if f.is_zero() {
        return Err(Error::DegenerateCubic);
    }
    let v = VarSet::chart();
    let u1 = MPoly::var(&v, 0);
    let u2 = MPoly::var(&v, 1);
    let t = |i: usize| MPoly::constant(&v, f.t(i).clone());
    let sum = |terms: Vec<(i64, MPoly)>| {
        terms
            .into_iter()
            .fold(MPoly::zero(&v), |acc, (k, p)| &acc + &p.scale_int(k))
    };
    let u1u2 = &u1 * &u2;
    let u1sq = u1.pow(2);
    let u2sq = u2.pow(2);
    let a = sum(vec![
        (-1, &t(1) * &(&u2 * &u1sq)),
        (2, &t(2) * &u1u2),
        (1, &t(3) * &u1sq),
        (-1, &t(4) * &u2),
        (-1, &t(5) * &u1),
        (1, t(8)),
    ]);
    let b = sum(vec![
        (1, &t(1) * &u1.pow(3)),
        (-3, &t(2) * &u1sq),
        (3, &t(4) * &u1),
        (-1, t(7)),
    ]);
    let c = sum(vec![
        (-1, &t(1) * &u2.pow(3)),
        (3, &t(3) * &u2sq),
        (-3, &t(6) * &u2),
        (1, t(10)),
    ]);
    let d = sum(vec![
        (1, &t(1) * &(&u2sq * &u1)),
        (-1, &t(2) * &u2sq),
        (-2, &t(3) * &u1u2),
        (1, &t(5) * &u2),
        (1, &t(6) * &u1),
        (-1, t(9)),
    ]);
    AffineCoverData::new(a, b, c, d)
}

/// Arithmetic needed by binary-cubic covariants.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, k: i64) -> Self;
    fn vanishes(&self) -> bool;
}

impl Coeff for Rational {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, k: i64) -> Self {
        self * rat(k)
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Coeff for MPoly {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, k: i64) -> Self {
        self.scale_int(k)
    }
    fn vanishes(&self) -> bool {
        MPoly::is_zero(self)
    }
}

/// `p X^3 + q X^2 Y + r X Y^2 + s Y^3`.
#[derive(Clone, Debug, PartialEq)]
pub struct BinaryCubic<T> {
    pub p: T,
    pub q: T,
    pub r: T,
    pub s: T,
}

impl<T: Coeff> BinaryCubic<T> {
    pub fn is_zero(&self) -> bool {
        self.p.vanishes() && self.q.vanishes() && self.r.vanishes() && self.s.vanishes()
    }
}

impl BinaryCubic<Rational> {
    pub fn from_ints(p: i64, q: i64, r: i64, s: i64) -> Self {
        BinaryCubic {
            p: rat(p),
            q: rat(q),
            r: rat(r),
            s: rat(s),
        }
    }
}

impl BinaryCubic<MPoly> {
    pub fn eval(&self, point: &[Rational]) -> BinaryCubic<Rational> {
        let e = |c: &MPoly| c.eval(point).expect("point arity");
        BinaryCubic {
            p: e(&self.p),
            q: e(&self.q),
            r: e(&self.r),
            s: e(&self.s),
        }
    }
}

/// `18pqrs - 4q^3 s + q^2 r^2 - 4p r^3 - 27 p^2 s^2`.
pub fn binary_cubic_discriminant<T: Coeff>(bc: &BinaryCubic<T>) -> T {
    let BinaryCubic { p, q, r, s } = bc;
    let pq = p.mul(q);
    let rs = r.mul(s);
    let q2 = q.mul(q);
    let r2 = r.mul(r);
    pq.mul(&rs)
        .scale(18)
        .add(&q2.mul(q).mul(s).scale(-4))
        .add(&q2.mul(&r2))
        .add(&p.mul(&r2).mul(r).scale(-4))
        .add(&p.mul(p).mul(s).mul(s).scale(-27))
}

/// `(3pr - q^2, 9ps - qr, 3qs - r^2)`.
pub fn hessian_covariant<T: Coeff>(bc: &BinaryCubic<T>) -> [T; 3] {
    let BinaryCubic { p, q, r, s } = bc;
    [
        p.mul(r).scale(3).add(&q.mul(q).scale(-1)),
        p.mul(s).scale(9).add(&q.mul(r).scale(-1)),
        q.mul(s).scale(3).add(&r.mul(r).scale(-1)),
    ]
}

/// Whether the cubic is the cube of a linear form.
pub fn is_perfect_cube(bc: &BinaryCubic<Rational>) -> bool {
    !bc.is_zero() && hessian_covariant(bc).iter().all(Zero::is_zero)
}

/// Restriction of `f` to the line `v0 = -u1 v1 - u2 v2`, with coefficients in `(u1, u2)`.
pub fn fiber_binary_cubic(f: &TernaryCubic) -> BinaryCubic<MPoly> {
    let work = VarSet::new(["v1", "v2", "u1", "u2"]);
    let var = |i| MPoly::var(&work, i);
    let v0 = -(&(&var(2) * &var(0)) + &(&var(3) * &var(1)));
    let g = f.to_form().substitute(&[v0, var(0), var(1)]).unwrap();
    collect_binary(&g, &VarSet::chart())
}

/// Splits a polynomial in `(X, Y, rest...)`, cubic in `X, Y`, into
/// coefficients in `rest`.
fn collect_binary(g: &MPoly, rest: &VarSet) -> BinaryCubic<MPoly> {
    let mut out = [0, 1, 2, 3].map(|_| MPoly::zero(rest));
    for (m, c) in g.terms() {
        let e = m.exponents();
        debug_assert_eq!(e[0] + e[1], 3);
        out[e[1] as usize].add_term(
            crate::polyring::Monomial::from_exponents(e[2..].to_vec()),
            c.clone(),
        );
    }
    let [p, q, r, s] = out;
    BinaryCubic { p, q, r, s }
}

pub fn fiber_at(f: &TernaryCubic, point: &ChartPoint) -> BinaryCubic<Rational> {
    fiber_binary_cubic(f).eval(&[point.0.clone(), point.1.clone()])
}

/// Fiber over a projective point: `f` on the line `x . v = 0`, written in
/// the two coordinates other than the first `k` with `x_k != 0`.
pub fn fiber_at_projective(f: &TernaryCubic, x: &ProjPoint) -> BinaryCubic<Rational> {
    let c = x.coords();
    let k = (0..3).find(|&i| !c[i].is_zero()).unwrap();
    let others: Vec<usize> = (0..3).filter(|&i| i != k).collect();
    let work = VarSet::new(["X", "Y"]);
    let mut images = vec![MPoly::zero(&work); 3];
    images[others[0]] = MPoly::var(&work, 0);
    images[others[1]] = MPoly::var(&work, 1);
    images[k] = -(&MPoly::var(&work, 0).scale(&(&c[others[0]] / &c[k]))
        + &MPoly::var(&work, 1).scale(&(&c[others[1]] / &c[k])));
    let g = f.to_form().substitute(&images).unwrap();
    let m = |e: [u32; 2]| g.coeff_of(&e);
    BinaryCubic {
        p: m([3, 0]),
        q: m([2, 1]),
        r: m([1, 2]),
        s: m([0, 3]),
    }
}

/// Discriminant of the fiber cubic as a polynomial on the chart.
pub fn delta_f(f: &TernaryCubic) -> Result<MPoly> {
    if f.is_zero() {
        return Err(Error::DegenerateCubic);
    }
    Ok(binary_cubic_discriminant(&fiber_binary_cubic(f)))
}

#[derive(Clone, Debug, PartialEq)]
pub struct DiscrimCertificate {
    pub delta_f: MPoly,
    pub d_f: MPoly,
    pub lambda: Rational,
}

/// Finds `lambda` with `delta_f = lambda * D_f` and checks the identity on every term.
pub fn verify_discrim_lemma(f: &TernaryCubic) -> Result<DiscrimCertificate> {
    let cov = eta(f)?;
    let d_f = derived_invariants(&cov).D;
    if d_f.is_zero() {
        return Err(Error::DegenerateCover);
    }
    let delta = delta_f(f)?;
    let lambda = delta.leading_coeff() / d_f.leading_coeff();
    if lambda.is_zero() || delta != d_f.scale(&lambda) {
        return Err(Error::LemmaViolation(format!(
            "delta_f = {delta} is not a constant multiple of D_f = {d_f}"
        )));
    }
    Ok(DiscrimCertificate {
        delta_f: delta,
        d_f,
        lambda,
    })
}

fn partials(f: &TernaryCubic) -> [MPoly; 3] {
    let form = f.to_form();
    [0, 1, 2].map(|i| form.derivative(i))
}

pub fn is_smooth_cubic(f: &TernaryCubic) -> Result<bool> {
    is_smooth_cubic_with(f, &SolveOptions::default())
}

/// Smoothness through the resultant chain of the partial derivatives after
/// random coordinate changes. A nonzero final resultant certifies that the
/// partials have no common zero; singularity is reported only after every
/// attempt vanished.
pub fn is_smooth_cubic_with(f: &TernaryCubic, opts: &SolveOptions) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::DegenerateCubic);
    }
    let mut rng = opts.rng();
    for _ in 0..opts.retries.max(3) {
        let m = random_invertible_matrix(&mut rng);
        let [g0, g1, g2] = partials(&f.transform(&m));
        if g0.coeff_of(&[2, 0, 0]).is_zero() {
            continue;
        }
        let r1 = resultant(&g0, &g1, 0)?;
        let r2 = resultant(&g0, &g2, 0)?;
        if r1.is_zero() || r2.is_zero() {
            // two partials share a curve, which meets the third conic
            return Ok(false);
        }
        if r1.degree_in(1) != r1.total_degree() {
            continue;
        }
        if !resultant(&r1, &r2, 1)?.is_zero() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Evidence that a cubic is singular.
#[derive(Clone, Debug, PartialEq)]
pub enum SingularWitness {
    /// Rational singular points.
    Points(Vec<ProjPoint>),
    /// A curve along which all partials vanish.
    Curve(MPoly),
    /// The singular points exist but none is rational.
    NonRational,
}

pub fn singular_witness(f: &TernaryCubic) -> Result<SingularWitness> {
    if f.is_zero() {
        return Err(Error::DegenerateCubic);
    }
    let parts = partials(f);
    let mut g = MPoly::zero(&VarSet::dual());
    for p in &parts {
        g = crate::polyring::gcd(&g, p)?;
    }
    if !g.is_constant() {
        return Ok(SingularWitness::Curve(g));
    }
    let pts = projective_rational_zeros(&parts)?;
    Ok(if pts.is_empty() {
        SingularWitness::NonRational
    } else {
        SingularWitness::Points(pts)
    })
}

/// Hessian covariant of the fiber cubic, as polynomials on the chart.
pub fn cusp_equations(f: &TernaryCubic) -> [MPoly; 3] {
    hessian_covariant(&fiber_binary_cubic(f))
}

#[derive(Clone, Debug, PartialEq)]
pub struct TotalBranchLocus {
    /// Distinct points of the plane with a perfect-cube fiber.
    pub count: usize,
    pub rational_points: Vec<ProjPoint>,
}

/// Fibers over the points `(0 : 1 : s)` as a cubic with coefficients in `s`.
fn fibers_along_infinity(f: &TernaryCubic) -> BinaryCubic<MPoly> {
    let work = VarSet::new(["v0", "v2", "s"]);
    let var = |i| MPoly::var(&work, i);
    let v1 = -(&var(2) * &var(1));
    let g = f.to_form().substitute(&[var(0), v1, var(1)]).unwrap();
    collect_binary(&g, &VarSet::new(["s"]))
}

/// Rational points on `x0 = 0` whose fiber is a perfect cube, and whether
/// any such point (rational or not) exists.
fn cusps_at_infinity(f: &TernaryCubic) -> (Vec<ProjPoint>, bool) {
    let h = hessian_covariant(&fibers_along_infinity(f));
    let g = h.iter().fold(UPoly::zero(), |acc, p| {
        acc.gcd(&UPoly::from_mpoly(p, 0).unwrap())
    });
    let mut pts: Vec<ProjPoint> = rational_roots(&g)
        .into_iter()
        .map(|s| ProjPoint::new([rat(0), rat(1), s]).unwrap())
        .collect();
    let mut any = g.degree().unwrap_or(0) > 0 || g.is_zero();
    let corner = ProjPoint::from_ints(0, 0, 1).unwrap();
    if is_perfect_cube(&fiber_at_projective(f, &corner)) {
        pts.push(corner);
        any = true;
    }
    (pts, any)
}

pub fn total_branch_locus(f: &TernaryCubic) -> Result<TotalBranchLocus> {
    total_branch_locus_with(f, &SolveOptions::default())
}

/// Points whose fiber is a perfect cube, i.e. the common zeros of the
/// Hessian covariant. The count is taken after random changes that move
/// every such point into the chart, and must agree for two changes.
pub fn total_branch_locus_with(f: &TernaryCubic, opts: &SolveOptions) -> Result<TotalBranchLocus> {
    if !is_smooth_cubic_with(f, opts)? {
        return Err(Error::NotSmooth);
    }
    let mut pts: Vec<ProjPoint> = affine_rational_zeros(&cusp_equations(f))?
        .iter()
        .map(|(a, b)| ProjPoint::from_chart(a, b))
        .collect();
    pts.extend(cusps_at_infinity(f).0);
    pts.sort();

    let mut rng = opts.rng();
    let mut previous = None;
    for _ in 0..opts.retries {
        let m = random_invertible_matrix(&mut rng);
        let g = f.transform(&m);
        if cusps_at_infinity(&g).1 {
            continue;
        }
        let inner = SolveOptions {
            seed: rng.gen(),
            retries: opts.retries,
        };
        let count = match affine_zero_count(&cusp_equations(&g), &inner) {
            Ok(n) => n,
            Err(Error::IndeterminateCount(_)) => continue,
            Err(e) => return Err(e),
        };
        if previous == Some(count) {
            return Ok(TotalBranchLocus {
                count,
                rational_points: pts,
            });
        }
        previous = Some(count);
    }
    Err(Error::IndeterminateCount(
        "total branch locus count did not stabilise".into(),
    ))
}

/// `z - t2 u1 u2 + t3 u1^2 + 2 t4 u2 - t5 u1` in `(z, u1, u2)`, the factor of
/// the z-resolvent of a cubic divisible by `v2` (`t7 = ... = t10 = 0`).
pub fn reducible_resolvent_factor(f: &TernaryCubic) -> Option<MPoly> {
    if (7..=10).any(|i| !f.t(i).is_zero()) {
        return None;
    }
    let v = VarSet::new(["z", "u1", "u2"]);
    let x = |i| MPoly::var(&v, i);
    let k = |i: usize| f.t(i).clone();
    let u1u2 = &x(1) * &x(2);
    Some(
        &(&(&(&x(0) - &u1u2.scale(&k(2))) + &x(1).pow(2).scale(&k(3)))
            + &x(2).scale(&(k(4) * rat(2))))
            - &x(1).scale(&k(5)),
    )
}

#[derive(Clone, Debug, PartialEq)]
pub struct LinearFactorSearch {
    /// Some line is a component of the cubic over the complex numbers.
    pub reducible: bool,
    /// A linear factor with rational coefficients, when one exists.
    pub witness: Option<MPoly>,
}

/// Looks for line components `v0 = alpha v1 + beta v2`, `v1 = gamma v2`
/// and `v2 = 0`.
pub fn has_linear_factor(f: &TernaryCubic) -> Result<LinearFactorSearch> {
    has_linear_factor_with(f, &SolveOptions::default())
}

pub fn has_linear_factor_with(f: &TernaryCubic, opts: &SolveOptions) -> Result<LinearFactorSearch> {
    if f.is_zero() {
        return Err(Error::DegenerateCubic);
    }
    let dual = VarSet::dual();
    let form = f.to_form();
    let v = |i| MPoly::var(&dual, i);

    // v0 = alpha v1 + beta v2
    let work = VarSet::new(["v1", "v2", "alpha", "beta"]);
    let w = |i| MPoly::var(&work, i);
    let v0 = &(&w(2) * &w(0)) + &(&w(3) * &w(1));
    let g = form.substitute(&[v0, w(0), w(1)])?;
    let bc = collect_binary(&g, &VarSet::new(["alpha", "beta"]));
    let system = [bc.p, bc.q, bc.r, bc.s];
    if affine_zero_count(&system, opts)? > 0 {
        let witness = affine_rational_zeros(&system)?.first().map(|(al, be)| {
            &(&v(0) - &v(1).scale(al)) - &v(2).scale(be)
        });
        return Ok(LinearFactorSearch {
            reducible: true,
            witness,
        });
    }

    // v1 = gamma v2
    let work = VarSet::new(["v0", "v2", "gamma"]);
    let w = |i| MPoly::var(&work, i);
    let g = form.substitute(&[w(0), &w(2) * &w(1), w(1)])?;
    let bc = collect_binary(&g, &VarSet::new(["gamma"]));
    let common = [bc.p, bc.q, bc.r, bc.s]
        .iter()
        .fold(UPoly::zero(), |acc, p| acc.gcd(&UPoly::from_mpoly(p, 0).unwrap()));
    if common.degree().unwrap_or(0) > 0 {
        let witness = rational_roots(&common)
            .first()
            .map(|ga| &v(1) - &v(2).scale(ga));
        return Ok(LinearFactorSearch {
            reducible: true,
            witness,
        });
    }

    // v2 = 0
    if form.eval_var(2, &Rational::zero()).is_zero() {
        return Ok(LinearFactorSearch {
            reducible: true,
            witness: Some(v(2)),
        });
    }
    Ok(LinearFactorSearch {
        reducible: false,
        witness: None,
    })
}

impl fmt::Display for BinaryCubic<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.p, self.q, self.r, self.s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> MPoly {
        parse_poly(s, &VarSet::chart()).unwrap()
    }
    fn cubic(s: &str) -> TernaryCubic {
        TernaryCubic::parse(s).unwrap()
    }

    #[test]
    fn eta_examples() {
        let cov = eta(&TernaryCubic::fermat()).unwrap();
        assert_eq!(cov.a, c("-u1^2*u2"));
        assert_eq!(cov.b, c("u1^3-1"));
        assert_eq!(cov.c, c("1-u2^3"));
        assert_eq!(cov.d, c("u1*u2^2"));
        let cov = eta(&cubic("v0^3")).unwrap();
        assert_eq!((cov.a, cov.b, cov.c, cov.d), (c("-u1^2*u2"), c("u1^3"), c("-u2^3"), c("u1*u2^2")));
        assert!(matches!(eta(&cubic("0")), Err(Error::DegenerateCubic)));
    }

    #[test]
    fn form_round_trip() {
        let f = TernaryCubic::from_ints([1, -2, 3, 0, 5, -1, 7, 2, 0, -4]);
        assert_eq!(TernaryCubic::from_form(&f.to_form()).unwrap(), f);
        assert_eq!(cubic("v0*v1*v2").t(5), &Rational::new(1.into(), 3.into()));
        assert!(TernaryCubic::parse("v0^2").is_err());
    }

    #[test]
    fn fiber_cubics() {
        let f = TernaryCubic::fermat();
        let bc = fiber_binary_cubic(&f);
        assert_eq!(bc.p, c("1-u1^3"));
        assert_eq!(bc.q, c("-3*u1^2*u2"));
        assert_eq!(bc.r, c("-3*u1*u2^2"));
        assert_eq!(bc.s, c("1-u2^3"));
        assert_eq!(fiber_at(&f, &(rat(1), rat(0))), BinaryCubic::from_ints(0, 0, 0, 1));
        assert_eq!(fiber_at(&f, &(rat(0), rat(0))), BinaryCubic::from_ints(1, 0, 0, 1));
        let x = ProjPoint::from_ints(2, 2, 0).unwrap();
        assert_eq!(fiber_at_projective(&f, &x), BinaryCubic::from_ints(0, 0, 0, 1));
    }

    #[test]
    fn discriminant_and_hessian() {
        let d = |p, q, r, s| binary_cubic_discriminant(&BinaryCubic::from_ints(p, q, r, s));
        assert_eq!(d(1, 0, 0, 1), rat(-27));
        assert_eq!(d(0, 0, 0, 1), rat(0));
        assert_eq!(d(1, 0, -3, 2), rat(0));
        let h = |p, q, r, s| hessian_covariant(&BinaryCubic::from_ints(p, q, r, s));
        assert_eq!(h(0, 0, 0, 1), [rat(0), rat(0), rat(0)]);
        assert_eq!(h(1, 3, 3, 1), [rat(0), rat(0), rat(0)]);
        assert_eq!(h(1, 0, 0, 1), [rat(0), rat(9), rat(0)]);
        assert!(is_perfect_cube(&BinaryCubic::from_ints(1, 3, 3, 1)));
        assert!(!is_perfect_cube(&BinaryCubic::from_ints(1, 0, 0, 1)));
        assert!(!is_perfect_cube(&BinaryCubic::from_ints(0, 0, 0, 0)));
    }

    #[test]
    fn delta_of_fermat_and_pure_cube() {
        assert_eq!(
            delta_f(&TernaryCubic::fermat()).unwrap(),
            c("(1-u1^3-u2^3)^2-4*u1^3*u2^3").scale_int(-27)
        );
        assert!(delta_f(&cubic("v0^3")).unwrap().is_zero());
    }

    #[test]
    fn discrim_certificates() {
        let cert = verify_discrim_lemma(&TernaryCubic::fermat()).unwrap();
        assert_eq!(cert.lambda, rat(-27));
        assert!(matches!(verify_discrim_lemma(&cubic("v0^3")), Err(Error::DegenerateCover)));
    }

    #[test]
    fn smoothness() {
        assert!(is_smooth_cubic(&TernaryCubic::fermat()).unwrap());
        assert!(!is_smooth_cubic(&cubic("v1^3+v2^3+v0*v1*v2")).unwrap());
        assert!(!is_smooth_cubic(&cubic("v0*v1*v2")).unwrap());
        assert!(!is_smooth_cubic(&cubic("v1^3")).unwrap());
        assert_eq!(
            singular_witness(&cubic("v1^3+v2^3+v0*v1*v2")).unwrap(),
            SingularWitness::Points(vec![ProjPoint::from_ints(1, 0, 0).unwrap()])
        );
    }

    #[test]
    fn fermat_cusps() {
        let locus = total_branch_locus(&TernaryCubic::fermat()).unwrap();
        assert_eq!(locus.count, 9);
        let expected: Vec<ProjPoint> = [(0, 1, 1), (1, 0, 1), (1, 1, 0)]
            .iter()
            .map(|&(a, b, c)| ProjPoint::from_ints(a, b, c).unwrap())
            .collect();
        assert_eq!(locus.rational_points, expected);
        assert!(matches!(
            total_branch_locus(&cubic("v0*v1*v2")),
            Err(Error::NotSmooth)
        ));
    }

    #[test]
    fn linear_factors() {
        let r = has_linear_factor(&cubic("v0*(v1^2+v2^2)")).unwrap();
        assert!(r.reducible);
        assert_eq!(r.witness, Some(parse_poly("v0", &VarSet::dual()).unwrap()));
        let r = has_linear_factor(&cubic("v1^3")).unwrap();
        assert_eq!(r.witness, Some(parse_poly("v1", &VarSet::dual()).unwrap()));
        assert!(!has_linear_factor(&TernaryCubic::fermat()).unwrap().reducible);
    }
}
