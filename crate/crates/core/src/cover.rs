//! Local calculus of triple covers on the chart `x0 != 0`.
//!
//! A cover is given by four polynomials `(a, b, c, d)` in `(u1, u2)`; its
//! algebra is generated over the base by fiber coordinates `z`, `w` with
//!
//! ```text
//! z^2 = 2A + a z + b w,   z w = -B - d z - a w,   w^2 = 2C + c z + d w
//! A = a^2 - b d,   B = a d - b c,   C = d^2 - a c,   D = B^2 - 4AC
//! ```
//!
//! and `D = 0` is the chart equation of the branch curve.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyring::{
    rat, rational_roots, squarefree_decomposition, MPoly, Monomial, Rational, UPoly, VarSet,
};

pub type ChartPoint = (Rational, Rational);

/// Degree of the homogenized branch form.
pub const BRANCH_DEGREE: u32 = 6;

#[derive(Clone, Debug, PartialEq)]
pub struct AffineCoverData {
    pub a: MPoly,
    pub b: MPoly,
    pub c: MPoly,
    pub d: MPoly,
}

impl AffineCoverData {
    /// Checks that all four entries live in the chart variables.
    pub fn new(a: MPoly, b: MPoly, c: MPoly, d: MPoly) -> Result<Self> {
        let chart = VarSet::chart();
        for p in [&a, &b, &c, &d] {
            if p.vars() != &chart {
                return Err(Error::VarSetMismatch {
                    left: p.vars().to_string(),
                    right: chart.to_string(),
                });
            }
        }
        Ok(AffineCoverData { a, b, c, d })
    }

    pub fn is_zero(&self) -> bool {
        [&self.a, &self.b, &self.c, &self.d].iter().all(|p| p.is_zero())
    }

    /// The data seen from the other fiber coordinate: `(d, c, b, a)`.
    pub fn swapped(&self) -> AffineCoverData {
        AffineCoverData {
            a: self.d.clone(),
            b: self.c.clone(),
            c: self.b.clone(),
            d: self.a.clone(),
        }
    }

    pub fn eval(&self, point: &ChartPoint) -> [Rational; 4] {
        let pt = [point.0.clone(), point.1.clone()];
        [&self.a, &self.b, &self.c, &self.d].map(|p| p.eval(&pt).expect("chart point"))
    }
}

#[allow(non_snake_case)]
#[derive(Clone, Debug, PartialEq)]
pub struct DerivedInvariants {
    pub A: MPoly,
    pub B: MPoly,
    pub C: MPoly,
    pub D: MPoly,
}

fn invariants_of(a: &MPoly, b: &MPoly, c: &MPoly, d: &MPoly) -> [MPoly; 4] {
    let ia = &(a * a) - &(b * d);
    let ib = &(a * d) - &(b * c);
    let ic = &(d * d) - &(a * c);
    let id = &(&ib * &ib) - &(&ia * &ic).scale_int(4);
    [ia, ib, ic, id]
}

pub fn derived_invariants(cov: &AffineCoverData) -> DerivedInvariants {
    let [a, b, c, d] = invariants_of(&cov.a, &cov.b, &cov.c, &cov.d);
    DerivedInvariants { A: a, B: b, C: c, D: d }
}

/// Variables `(z, w, u1, u2)` of the cover algebra.
pub fn algebra_vars() -> VarSet {
    VarSet::new(["z", "w", "u1", "u2"])
}

/// Products of fiber coordinates written in the basis `1, z, w`.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiplicationTable {
    pub zz: MPoly,
    pub zw: MPoly,
    pub ww: MPoly,
}

pub fn multiplication_table(cov: &AffineCoverData) -> MultiplicationTable {
    let vars = algebra_vars();
    let lift = |p: &MPoly| p.embed(&vars).expect("chart variables");
    let inv = derived_invariants(cov);
    let (a, b, c, d) = (lift(&cov.a), lift(&cov.b), lift(&cov.c), lift(&cov.d));
    let z = MPoly::var(&vars, 0);
    let w = MPoly::var(&vars, 1);
    MultiplicationTable {
        zz: &(&lift(&inv.A).scale_int(2) + &(&a * &z)) + &(&b * &w),
        zw: &(&(-lift(&inv.B)) - &(&d * &z)) - &(&a * &w),
        ww: &(&lift(&inv.C).scale_int(2) + &(&c * &z)) + &(&d * &w),
    }
}

impl MultiplicationTable {
    /// Normal form modulo the fiber relations: degree at most 1 in `z`, `w`.
    pub fn reduce(&self, p: &MPoly) -> MPoly {
        let vars = p.vars().clone();
        let mut todo = p.clone();
        let mut done = MPoly::zero(&vars);
        while !todo.is_zero() {
            let mut next = MPoly::zero(&vars);
            for (m, c) in todo.terms() {
                let e = m.exponents();
                let (i, j) = (e[0], e[1]);
                if i + j < 2 {
                    done.add_term(m.clone(), c.clone());
                    continue;
                }
                let mut rest = e.to_vec();
                let rule = if i >= 2 {
                    rest[0] -= 2;
                    &self.zz
                } else if j >= 2 {
                    rest[1] -= 2;
                    &self.ww
                } else {
                    rest[0] -= 1;
                    rest[1] -= 1;
                    &self.zw
                };
                next = &next + &rule.mul_monomial(&Monomial::from_exponents(rest), c);
            }
            todo = next;
        }
        done
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FiberCoordinate {
    Z,
    W,
}

impl FiberCoordinate {
    pub fn name(self) -> &'static str {
        match self {
            FiberCoordinate::Z => "z",
            FiberCoordinate::W => "w",
        }
    }
}

/// Monic cubic `y^3 + linear * y + constant` satisfied by a fiber coordinate.
#[derive(Clone, Debug, PartialEq)]
pub struct ResolventCubic {
    pub coordinate: FiberCoordinate,
    pub linear: MPoly,
    pub constant: MPoly,
}

fn resolvent_coeffs(
    a: &MPoly,
    b: &MPoly,
    c: &MPoly,
    d: &MPoly,
    coordinate: FiberCoordinate,
) -> (MPoly, MPoly) {
    let [ia, ib, ic, _] = invariants_of(a, b, c, d);
    match coordinate {
        FiberCoordinate::Z => (ia.scale_int(-3), &(b * &ib) - &(a * &ia).scale_int(2)),
        FiberCoordinate::W => (ic.scale_int(-3), &(c * &ib) - &(d * &ic).scale_int(2)),
    }
}

pub fn resolvent_cubic(cov: &AffineCoverData, coordinate: FiberCoordinate) -> ResolventCubic {
    let (linear, constant) = resolvent_coeffs(&cov.a, &cov.b, &cov.c, &cov.d, coordinate);
    ResolventCubic {
        coordinate,
        linear,
        constant,
    }
}

impl ResolventCubic {
    /// The cubic as a polynomial in `(y, u1, u2)` with `y` named after the coordinate.
    pub fn as_poly(&self) -> MPoly {
        let vars = VarSet::new([self.coordinate.name(), "u1", "u2"]);
        let y = MPoly::var(&vars, 0);
        let lin = self.linear.embed(&vars).unwrap();
        let con = self.constant.embed(&vars).unwrap();
        &(&y.pow(3) + &(&lin * &y)) + &con
    }

    pub fn specialize(&self, point: &ChartPoint) -> UPoly {
        let pt = [point.0.clone(), point.1.clone()];
        UPoly::new(vec![
            self.constant.eval(&pt).unwrap(),
            self.linear.eval(&pt).unwrap(),
            Rational::zero(),
            Rational::one(),
        ])
    }

    /// `-4 p^3 - 27 q^2` for the cubic `y^3 + p y + q`.
    pub fn discriminant(&self) -> MPoly {
        cubic_discriminant(&self.linear, &self.constant)
    }
}

fn cubic_discriminant(p: &MPoly, q: &MPoly) -> MPoly {
    &p.pow(3).scale_int(-4) - &q.pow(2).scale_int(27)
}

/// `D = unit * S * T^2` with `S`, `T` squarefree and coprime.
#[derive(Clone, Debug, PartialEq)]
pub struct BranchDecomposition {
    /// Simple part, chart equation.
    pub s: MPoly,
    /// Doubled part, chart equation.
    pub t: MPoly,
    pub s_form: MPoly,
    pub t_form: MPoly,
    pub unit: Rational,
    pub degree6_form: MPoly,
}

impl BranchDecomposition {
    pub fn s_degree(&self) -> u32 {
        self.s_form.total_degree()
    }

    pub fn t_degree(&self) -> u32 {
        self.t_form.total_degree()
    }
}

/// Splits the branch polynomial into its simple and doubled parts.
pub fn branch_decomposition(d: &MPoly) -> Result<BranchDecomposition> {
    if d.is_zero() {
        return Err(Error::DegenerateCover);
    }
    let deg = d.total_degree();
    if deg > BRANCH_DEGREE {
        return Err(Error::BranchDegree(deg));
    }
    let form = d.homogenize(BRANCH_DEGREE)?;
    let dec = squarefree_decomposition(&form)?;
    let vars = form.vars().clone();
    let mut s_form = MPoly::one(&vars);
    let mut t_form = MPoly::one(&vars);
    for (f, e) in &dec.parts {
        match e {
            1 => s_form = &s_form * f,
            2 => t_form = &t_form * f,
            _ => return Err(Error::MultiplicityTooHigh(*e)),
        }
    }
    Ok(BranchDecomposition {
        s: s_form.dehomogenize()?,
        t: t_form.dehomogenize()?,
        s_form,
        t_form,
        unit: dec.unit,
        degree6_form: form,
    })
}

/// Affine line `t -> (u1(t), u2(t))`.
#[derive(Clone, Debug, PartialEq)]
pub struct LineParam {
    pub u1: MPoly,
    pub u2: MPoly,
}

impl LineParam {
    pub fn new(u1: MPoly, u2: MPoly) -> Result<Self> {
        let line = VarSet::line();
        let ok = |p: &MPoly| p.vars() == &line && p.total_degree() <= 1;
        if !ok(&u1) || !ok(&u2) || (u1.is_constant() && u2.is_constant()) {
            return Err(Error::BadParametrization);
        }
        Ok(LineParam { u1, u2 })
    }

    /// `(p1 + q1 t, p2 + q2 t)`.
    pub fn from_point_direction(p: &ChartPoint, q: &ChartPoint) -> Result<Self> {
        let line = VarSet::line();
        let affine = |a: &Rational, b: &Rational| {
            &MPoly::constant(&line, a.clone()) + &MPoly::var(&line, 0).scale(b)
        };
        Self::new(affine(&p.0, &q.0), affine(&p.1, &q.1))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LineRestriction {
    pub param: LineParam,
    pub a: MPoly,
    pub b: MPoly,
    pub c: MPoly,
    pub d: MPoly,
}

pub fn restrict_to_line(cov: &AffineCoverData, line: &LineParam) -> LineRestriction {
    let sub = [line.u1.clone(), line.u2.clone()];
    let r = |p: &MPoly| p.substitute(&sub).expect("chart polynomial");
    LineRestriction {
        param: line.clone(),
        a: r(&cov.a),
        b: r(&cov.b),
        c: r(&cov.c),
        d: r(&cov.d),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Connectivity {
    Connected,
    /// The resolvent in `coordinate` has the polynomial root `root(t)`.
    Disconnected {
        root: MPoly,
        coordinate: FiberCoordinate,
    },
    Degenerate,
}

/// Decides whether the restricted cover is connected, i.e. whether the
/// resolvent cubic has no root in `Q[t]`.
///
/// A resolvent whose discriminant vanishes identically always has a root
/// and says nothing about connectivity; the other coordinate is tried then.
///
/// A polynomial root means a section splits off the restricted cover. Over
/// a line through a rational point of a plane cubic (the flag case) that
/// section still meets the residual double cover, so there a
/// `Disconnected` verdict only certifies reducibility.
pub fn is_line_cover_connected(lr: &LineRestriction) -> Connectivity {
    for coord in [FiberCoordinate::Z, FiberCoordinate::W] {
        let (p, q) = resolvent_coeffs(&lr.a, &lr.b, &lr.c, &lr.d, coord);
        if cubic_discriminant(&p, &q).is_zero() {
            continue;
        }
        let p = UPoly::from_mpoly(&p, 0).expect("univariate in t");
        let q = UPoly::from_mpoly(&q, 0).expect("univariate in t");
        return match polynomial_cubic_root(&p, &q) {
            Some(r) => Connectivity::Disconnected {
                root: r.to_mpoly(&VarSet::line(), 0),
                coordinate: coord,
            },
            None => Connectivity::Connected,
        };
    }
    Connectivity::Degenerate
}

/// A root in `Q[t]` of `y^3 + p(t) y + q(t)`, found by sampling, rational
/// root extraction and interpolation, then verified exactly.
fn polynomial_cubic_root(p: &UPoly, q: &UPoly) -> Option<UPoly> {
    let dp = p.degree().unwrap_or(0);
    let dq = q.degree().unwrap_or(0);
    let bound = dp.div_ceil(2).max(dq.div_ceil(3));
    let samples: Vec<Rational> = (0..=bound as i64)
        .map(|k| rat(if k % 2 == 0 { -(k / 2) } else { k / 2 + 1 }))
        .collect();
    let mut root_sets = Vec::with_capacity(samples.len());
    for t in &samples {
        let cubic = UPoly::new(vec![q.eval(t), p.eval(t), Rational::zero(), Rational::one()]);
        let roots = rational_roots(&cubic);
        if roots.is_empty() {
            return None;
        }
        root_sets.push(roots);
    }
    let cubic_at = |r: &UPoly| &(&r.pow(3) + &(p * r)) + q;
    let mut choice = vec![0usize; samples.len()];
    loop {
        let pts: Vec<(Rational, Rational)> = samples
            .iter()
            .zip(&choice)
            .zip(&root_sets)
            .map(|((t, &i), rs)| (t.clone(), rs[i].clone()))
            .collect();
        let r = UPoly::interpolate(&pts);
        if cubic_at(&r).is_zero() {
            return Some(r);
        }
        // next combination
        let mut k = 0;
        loop {
            if k == choice.len() {
                return None;
            }
            choice[k] += 1;
            if choice[k] < root_sets[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TotalBranch {
    Total,
    NotTotal,
    /// All four entries vanish at the point.
    Degenerate,
}

/// Whether the fiber over `point` is a single point: both resolvent cubics
/// specialize to pure cubes there.
pub fn is_total_branch_point(cov: &AffineCoverData, point: &ChartPoint) -> TotalBranch {
    if cov.eval(point).iter().all(Zero::is_zero) {
        return TotalBranch::Degenerate;
    }
    let single_root = |coord| {
        let cubic = resolvent_cubic(cov, coord).specialize(point);
        cubic.squarefree_part().degree() == Some(1)
    };
    if single_root(FiberCoordinate::Z) && single_root(FiberCoordinate::W) {
        TotalBranch::Total
    } else {
        TotalBranch::NotTotal
    }
}

/// Permutation exchanging variable 0 and variable `k` of a three-variable set.
pub fn swap_perm(k: usize) -> [usize; 3] {
    let mut p = [0, 1, 2];
    p.swap(0, k);
    p
}

/// Exchanges `x0` and `xk` in a ternary form (or `v0` and `vk` on the dual side).
pub fn rotate_form(p: &MPoly, k: usize) -> MPoly {
    p.permute_vars(&swap_perm(k))
}
