//! Classification of triple covers with a sextic branch curve.
//!
//! A cover is either the restriction of the flag-variety projection over a
//! smooth plane cubic (branch: the dual sextic with nine cusps, all of them
//! total branch points), or the projection of a cubic surface from a point
//! (branch: a sextic `G2^3 + G3^2`, total branch points `G2 = G3 = 0`).

use std::fmt;

use num_traits::Zero;

use crate::cover::{
    branch_decomposition, derived_invariants, is_total_branch_point, rotate_form,
    AffineCoverData, BranchDecomposition, TotalBranch, BRANCH_DEGREE,
};
use crate::error::{Error, Result};
use crate::etamap::{
    eta, fiber_at_projective, has_linear_factor_with, is_perfect_cube, is_smooth_cubic_with,
    singular_witness, total_branch_locus_with, verify_discrim_lemma, DiscrimCertificate,
    LinearFactorSearch, SingularWitness, TernaryCubic,
};
use crate::polyring::{affine_rational_zeros, MPoly, ProjPoint, Rational, SolveOptions, VarSet};
use crate::torus::{
    check_conditions, cubic_surface_form, total_branch_points_with, ConditionReport,
    CubicSurfaceForm, TorusPair,
};

#[derive(Clone, Debug, PartialEq)]
pub enum CoverSpec {
    FlagCubic(TernaryCubic),
    Torus(TorusPair),
    Raw(AffineCoverData),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Case {
    FlagBundle,
    CubicSurface,
    NotNormal,
    Indeterminate,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::FlagBundle => "FlagBundle",
            Case::CubicSurface => "CubicSurface",
            Case::NotNormal => "NotNormal",
            Case::Indeterminate => "Indeterminate",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TotalBranchSummary {
    /// Number of total branch points, with multiplicity for intersections.
    pub count: usize,
    pub rational_points: Vec<ProjPoint>,
}

/// Second- and third-order jets of a curve at a point, in local
/// coordinates `(s, t)` centred there.
#[derive(Clone, Debug, PartialEq)]
pub struct JetCheck {
    pub quadratic: MPoly,
    pub cubic: MPoly,
    pub is_a2: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CuspCertificate {
    pub point: ProjPoint,
    pub perfect_cube_fiber: bool,
    pub total: TotalBranch,
    pub jets: JetCheck,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Certificate {
    Smoothness {
        smooth: bool,
        witness: Option<SingularWitness>,
    },
    LinearFactor(LinearFactorSearch),
    Lambda(DiscrimCertificate),
    Cusp(CuspCertificate),
    Conditions(ConditionReport),
    Surface(CubicSurfaceForm),
    Intersections {
        count_with_multiplicity: u32,
        distinct: usize,
    },
    Probe {
        point: ProjPoint,
        verdict: TotalBranch,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassificationReport {
    pub case: Case,
    /// Homogenized branch polynomial, degree 6.
    pub branch_form: Option<MPoly>,
    pub decomposition: Option<BranchDecomposition>,
    pub total_branch: Option<TotalBranchSummary>,
    pub certificates: Vec<Certificate>,
    pub notes: Vec<String>,
}

impl ClassificationReport {
    fn new() -> Self {
        ClassificationReport {
            case: Case::Indeterminate,
            branch_form: None,
            decomposition: None,
            total_branch: None,
            certificates: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn lambda(&self) -> Option<&Rational> {
        self.certificates.iter().find_map(|c| match c {
            Certificate::Lambda(l) => Some(&l.lambda),
            _ => None,
        })
    }

    pub fn conditions(&self) -> Option<&ConditionReport> {
        self.certificates.iter().find_map(|c| match c {
            Certificate::Conditions(r) => Some(r),
            _ => None,
        })
    }

    pub fn surface(&self) -> Option<&CubicSurfaceForm> {
        self.certificates.iter().find_map(|c| match c {
            Certificate::Surface(s) => Some(s),
            _ => None,
        })
    }

    pub fn cusps(&self) -> impl Iterator<Item = &CuspCertificate> {
        self.certificates.iter().filter_map(|c| match c {
            Certificate::Cusp(k) => Some(k),
            _ => None,
        })
    }

    /// Records the branch form and its decomposition; failures become notes.
    fn set_branch(&mut self, d: &MPoly) {
        match branch_decomposition(d) {
            Ok(bd) => {
                self.branch_form = Some(bd.degree6_form.clone());
                self.decomposition = Some(bd);
            }
            Err(e) => {
                if let Ok(form) = d.homogenize(BRANCH_DEGREE) {
                    self.branch_form = Some(form);
                }
                self.notes.push(format!("branch decomposition: {e}"));
            }
        }
    }

    fn fail(mut self, what: &str, e: Error) -> Self {
        self.case = Case::Indeterminate;
        self.notes.push(format!("{what}: {e}"));
        self
    }
}

pub fn classify(spec: &CoverSpec) -> ClassificationReport {
    classify_with(spec, &SolveOptions::default())
}

pub fn classify_with(spec: &CoverSpec, opts: &SolveOptions) -> ClassificationReport {
    match spec {
        CoverSpec::FlagCubic(f) => classify_cubic(f, opts),
        CoverSpec::Torus(p) => classify_torus(p, opts),
        CoverSpec::Raw(cov) => classify_raw(cov, opts),
    }
}

fn classify_cubic(f: &TernaryCubic, opts: &SolveOptions) -> ClassificationReport {
    let mut rep = ClassificationReport::new();
    let smooth = match is_smooth_cubic_with(f, opts) {
        Ok(s) => s,
        Err(e) => return rep.fail("smoothness", e),
    };
    if let Ok(cov) = eta(f) {
        rep.set_branch(&derived_invariants(&cov).D);
    }
    if !smooth {
        let witness = singular_witness(f).ok();
        if let Some(SingularWitness::Points(pts)) = &witness {
            let list: Vec<String> = pts.iter().map(ToString::to_string).collect();
            rep.notes.push(format!("singular at {}", list.join(", ")));
        }
        rep.certificates.push(Certificate::Smoothness {
            smooth: false,
            witness,
        });
        if let Ok(lf) = has_linear_factor_with(f, opts) {
            if lf.reducible {
                rep.notes.push("the cubic has a line component".into());
            }
            rep.certificates.push(Certificate::LinearFactor(lf));
        }
        rep.case = Case::NotNormal;
        return rep;
    }
    rep.certificates.push(Certificate::Smoothness {
        smooth: true,
        witness: None,
    });
    match verify_discrim_lemma(f) {
        Ok(cert) => rep.certificates.push(Certificate::Lambda(cert)),
        Err(e) => return rep.fail("discriminant identity", e),
    }
    let locus = match total_branch_locus_with(f, opts) {
        Ok(l) => l,
        Err(e) => return rep.fail("total branch locus", e),
    };
    let form = rep.branch_form.clone().expect("smooth cubic has a branch sextic");
    let mut all_cusps = true;
    for p in &locus.rational_points {
        let k = p.coords().iter().position(|c| !c.is_zero()).unwrap();
        let chart_pt = p.swapped(k).chart().unwrap();
        let total = match eta(&f.rotate(k)) {
            Ok(cov) => is_total_branch_point(&cov, &chart_pt),
            Err(_) => TotalBranch::Degenerate,
        };
        let jets = match cusp_jets(&form, p) {
            Ok(j) => j,
            Err(e) => return rep.fail("cusp jets", e),
        };
        let perfect_cube_fiber = is_perfect_cube(&fiber_at_projective(f, p));
        all_cusps &= jets.is_a2 && perfect_cube_fiber && total == TotalBranch::Total;
        rep.certificates.push(Certificate::Cusp(CuspCertificate {
            point: p.clone(),
            perfect_cube_fiber,
            total,
            jets,
        }));
    }
    rep.notes.push(format!(
        "{} total branch points, {} rational",
        locus.count,
        locus.rational_points.len()
    ));
    rep.total_branch = Some(TotalBranchSummary {
        count: locus.count,
        rational_points: locus.rational_points,
    });
    rep.case = if locus.count == 9 && all_cusps {
        Case::FlagBundle
    } else {
        rep.notes
            .push("total branch locus does not match nine total cusps".into());
        Case::Indeterminate
    };
    rep
}

fn classify_torus(pair: &TorusPair, opts: &SolveOptions) -> ClassificationReport {
    let mut rep = ClassificationReport::new();
    let cov = match crate::torus::build_cover(pair) {
        Ok(c) => c,
        Err(e) => return rep.fail("cover construction", e),
    };
    rep.set_branch(&derived_invariants(&cov).D);
    let conditions = match check_conditions(pair, rep.branch_form.as_ref()) {
        Ok(c) => c,
        Err(e) => return rep.fail("conditions", e),
    };
    let ok = conditions.all_hold();
    rep.certificates.push(Certificate::Conditions(conditions));
    if !ok {
        rep.case = Case::NotNormal;
        return rep;
    }
    rep.certificates
        .push(Certificate::Surface(cubic_surface_form(pair)));
    match total_branch_points_with(pair, opts) {
        Ok(t) => {
            rep.certificates.push(Certificate::Intersections {
                count_with_multiplicity: t.count_with_multiplicity,
                distinct: t.distinct,
            });
            rep.notes.push(format!(
                "{} total branch points with multiplicity, {} distinct",
                t.count_with_multiplicity, t.distinct
            ));
            rep.total_branch = Some(TotalBranchSummary {
                count: t.count_with_multiplicity as usize,
                rational_points: t.rational_points.into_iter().map(|(p, _)| p).collect(),
            });
        }
        Err(e) => rep.notes.push(format!("total branch points: {e}")),
    }
    rep.case = Case::CubicSurface;
    rep
}

/// Torus pair whose cover is exactly the given data, if it has that normal form.
fn as_torus_normal_form(cov: &AffineCoverData) -> Option<TorusPair> {
    if !cov.a.is_zero() || !cov.b.is_one() || cov.c.total_degree() > 3 || cov.d.total_degree() > 2 {
        return None;
    }
    let g3 = cov.c.scale(&Rational::new((-1).into(), 2.into()));
    TorusPair::new(cov.d.homogenize(2).ok()?, g3.homogenize(3).ok()?).ok()
}

/// Cubic whose cover data is exactly the given data, if there is one.
fn as_eta_image(cov: &AffineCoverData) -> Option<TernaryCubic> {
    let k = |p: &MPoly, e: [u32; 2]| p.coeff_of(&e);
    let third = |x: Rational| x / Rational::from_integer(3.into());
    let t = [
        k(&cov.b, [3, 0]),
        third(-k(&cov.b, [2, 0])),
        third(k(&cov.c, [0, 2])),
        third(k(&cov.b, [1, 0])),
        -k(&cov.a, [1, 0]),
        third(-k(&cov.c, [0, 1])),
        -k(&cov.b, [0, 0]),
        k(&cov.a, [0, 0]),
        -k(&cov.d, [0, 0]),
        k(&cov.c, [0, 0]),
    ];
    let f = TernaryCubic::new(t);
    (eta(&f).ok()? == *cov).then_some(f)
}

fn classify_raw(cov: &AffineCoverData, opts: &SolveOptions) -> ClassificationReport {
    if let Some(f) = as_eta_image(cov) {
        let mut rep = classify_cubic(&f, opts);
        rep.notes.push(format!("data is the image of the cubic {f}"));
        return rep;
    }
    if let Some(pair) = as_torus_normal_form(cov) {
        let mut rep = classify_torus(&pair, opts);
        rep.notes.push(format!(
            "data is the normal form of the pair G2 = {}, G3 = {}",
            pair.g2, pair.g3
        ));
        return rep;
    }
    let mut rep = ClassificationReport::new();
    let inv = derived_invariants(cov);
    if inv.D.is_zero() {
        rep.notes.push("branch polynomial vanishes identically".into());
        return rep;
    }
    rep.set_branch(&inv.D);
    match affine_rational_zeros(&[inv.A.clone(), inv.B.clone(), inv.C.clone()]) {
        Ok(pts) => {
            for (u1, u2) in pts {
                let verdict = is_total_branch_point(cov, &(u1.clone(), u2.clone()));
                rep.certificates.push(Certificate::Probe {
                    point: ProjPoint::from_chart(&u1, &u2),
                    verdict,
                });
            }
        }
        Err(e) => rep.notes.push(format!("probe search: {e}")),
    }
    rep.notes
        .push("raw data matches neither normal form; classification not attempted".into());
    rep
}

/// Jets of a plane curve (a ternary form) at a point on it, and whether the
/// point is an ordinary cusp: the quadratic jet is `l^2` and `l` does not
/// divide the cubic jet.
pub fn cusp_jets(form: &MPoly, point: &ProjPoint) -> Result<JetCheck> {
    let k = point.coords().iter().position(|c| !c.is_zero()).unwrap();
    let (p1, p2) = point.swapped(k).chart().unwrap();
    let g = rotate_form(form, k).dehomogenize()?;
    let local = VarSet::new(["s", "t"]);
    let s = MPoly::var(&local, 0);
    let t = MPoly::var(&local, 1);
    let shifted = g.substitute(&[
        &s + &MPoly::constant(&local, p1),
        &t + &MPoly::constant(&local, p2),
    ])?;
    let jet = |d: u32| {
        MPoly::from_terms(
            &local,
            shifted
                .terms()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.exponents().to_vec(), c.clone())),
        )
    };
    let (f0, f1, f2, f3) = (jet(0), jet(1), jet(2), jet(3));
    let alpha = f2.coeff_of(&[2, 0]);
    let beta = f2.coeff_of(&[1, 1]);
    let gamma = f2.coeff_of(&[0, 2]);
    let rank_one = !f2.is_zero()
        && (&beta * &beta - Rational::from_integer(4.into()) * &alpha * &gamma).is_zero();
    // direction of the tangent line l = 0
    let dir = if alpha.is_zero() {
        [Rational::from_integer(1.into()), Rational::zero()]
    } else {
        [-beta.clone(), Rational::from_integer(2.into()) * &alpha]
    };
    let is_a2 = f0.is_zero() && f1.is_zero() && rank_one && !f3.eval(&dir)?.is_zero();
    Ok(JetCheck {
        quadratic: f2,
        cubic: f3,
        is_a2,
    })
}

/// Consistency checks on a report; an empty list means it passed.
pub fn cross_validate(report: &ClassificationReport) -> Vec<String> {
    let mut v = Vec::new();
    let Some(form) = &report.branch_form else {
        if matches!(report.case, Case::FlagBundle | Case::CubicSurface) {
            v.push("branch form missing".into());
        }
        return v;
    };
    if !form.is_homogeneous_of(BRANCH_DEGREE) {
        v.push(format!(
            "branch form has degree {}, expected {BRANCH_DEGREE}",
            form.total_degree()
        ));
        return v;
    }
    if let Some(bd) = &report.decomposition {
        if bd.s_degree() + 2 * bd.t_degree() != BRANCH_DEGREE {
            v.push(format!(
                "deg S + 2 deg T = {} + 2*{} is not {BRANCH_DEGREE}",
                bd.s_degree(),
                bd.t_degree()
            ));
        }
        let rebuilt = (&bd.s_form * &bd.t_form.pow(2)).scale(&bd.unit);
        if &rebuilt != form {
            v.push("unit * S * T^2 does not reproduce the branch form".into());
        }
    } else if matches!(report.case, Case::FlagBundle | Case::CubicSurface) {
        v.push("branch decomposition missing".into());
    }
    match report.case {
        Case::FlagBundle => {
            if report.decomposition.as_ref().is_some_and(|bd| !bd.t_form.is_constant()) {
                v.push("flag-bundle branch sextic is not reduced".into());
            }
            if report.total_branch.as_ref().map(|t| t.count) != Some(9) {
                v.push("flag-bundle cover without nine total branch points".into());
            }
            if report.lambda().is_none() {
                v.push("discriminant certificate missing".into());
            }
        }
        Case::CubicSurface => match report.conditions() {
            None => v.push("condition report missing".into()),
            Some(c) => {
                let mu = c.delta.leading_coeff() / form.leading_coeff();
                if c.delta != form.scale(&mu) {
                    v.push("branch form is not proportional to G2^3 + G3^2".into());
                }
                if !c.condition2.holds() || !c.condition3.holds() {
                    v.push("cubic-surface report with a failed condition".into());
                }
            }
        },
        Case::NotNormal | Case::Indeterminate => {}
    }
    v
}
