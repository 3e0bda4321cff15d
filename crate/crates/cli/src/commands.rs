//! One function per subcommand, each producing a JSON value and a verdict code.

use num_traits::Zero;
use serde_json::{json, Value};

use tck_core::classify::{classify_with, cross_validate, cusp_jets, Case, CoverSpec};
use tck_core::cover::{
    branch_decomposition, derived_invariants, is_line_cover_connected, is_total_branch_point,
    restrict_to_line, AffineCoverData, Connectivity, LineParam, TotalBranch, BRANCH_DEGREE,
};
use tck_core::etamap::{
    delta_f, eta, fiber_at_projective, is_perfect_cube, total_branch_locus_with,
    verify_discrim_lemma, TernaryCubic,
};
use tck_core::polyring::{squarefree_part, MPoly, ProjPoint, SolveOptions};
use tck_core::torus::{build_cover, check_conditions, is_total_at, total_branch_points_with};
use tck_core::Error;

use crate::args::{Command, CoverInput};
use crate::report::{self, poly};
use crate::{input, Failure, NEGATIVE, OK};

pub struct Ctx {
    pub chart: usize,
    pub opts: SolveOptions,
}

pub struct Outcome {
    pub value: Value,
    pub code: i32,
}

fn ok(value: Value) -> Result<Outcome, Failure> {
    Ok(Outcome { value, code: OK })
}

fn verdict(value: Value, positive: bool) -> Result<Outcome, Failure> {
    Ok(Outcome { value, code: if positive { OK } else { NEGATIVE } })
}

pub fn dispatch(cmd: &Command, ctx: &Ctx) -> Result<Outcome, Failure> {
    match cmd {
        Command::Branch(i) => branch(i, ctx),
        Command::Eta(c) => eta_cmd(&input::cubic(&c.cubic, ctx.chart)?),
        Command::Delta(c) => delta(&input::cubic(&c.cubic, ctx.chart)?),
        Command::Dual(c) => dual(&input::cubic(&c.cubic, ctx.chart)?),
        Command::VerifyDiscrim(c) => verify_discrim(&input::cubic(&c.cubic, ctx.chart)?),
        Command::Classify(i) => classify(i, ctx),
        Command::TorusCheck { g2, g3, delta } => torus_check(g2, g3, delta.as_deref(), ctx),
        Command::RestrictLine { input, point, direction } => restrict_line(input, point, direction, ctx),
        Command::TotalBranch { input, at } => total_branch(input, at.as_deref(), ctx),
        Command::CuspCheck { cubic, form, at } => cusp_check(cubic.as_deref(), form.as_deref(), at.as_deref(), ctx),
    }
}

fn cover_of(spec: &CoverSpec) -> Result<AffineCoverData, Failure> {
    Ok(match spec {
        CoverSpec::FlagCubic(f) => eta(f)?,
        CoverSpec::Torus(p) => build_cover(p)?,
        CoverSpec::Raw(c) => c.clone(),
    })
}

fn branch(i: &CoverInput, ctx: &Ctx) -> Result<Outcome, Failure> {
    let cov = cover_of(&input::cover_spec(i, ctx.chart)?)?;
    let inv = derived_invariants(&cov);
    let bd = branch_decomposition(&inv.D)?;
    ok(json!({
        "A": poly(&inv.A),
        "B": poly(&inv.B),
        "C": poly(&inv.C),
        "D": poly(&inv.D),
        "branch": poly(&bd.degree6_form),
        "S": poly(&bd.s_form),
        "T": poly(&bd.t_form),
        "unit": bd.unit.to_string(),
    }))
}

fn eta_cmd(f: &TernaryCubic) -> Result<Outcome, Failure> {
    let c = eta(f)?;
    ok(json!({ "a": poly(&c.a), "b": poly(&c.b), "c": poly(&c.c), "d": poly(&c.d) }))
}

fn delta(f: &TernaryCubic) -> Result<Outcome, Failure> {
    let d = delta_f(f)?;
    ok(json!({ "delta": poly(&d), "form": poly(&d.homogenize(BRANCH_DEGREE)?) }))
}

fn dual(f: &TernaryCubic) -> Result<Outcome, Failure> {
    let d = delta_f(f)?;
    if d.is_zero() {
        return Err(Error::DegenerateCover.into());
    }
    let curve = squarefree_part(&d.homogenize(BRANCH_DEGREE)?)?;
    ok(json!({ "dual": poly(&curve), "degree": curve.total_degree() }))
}

fn verify_discrim(f: &TernaryCubic) -> Result<Outcome, Failure> {
    match verify_discrim_lemma(f) {
        Ok(cert) => ok(json!({
            "holds": true,
            "lambda": cert.lambda.to_string(),
            "delta_f": poly(&cert.delta_f),
            "D_f": poly(&cert.d_f),
        })),
        Err(Error::LemmaViolation(why)) => verdict(json!({ "holds": false, "lambda": null, "reason": why }), false),
        Err(e) => Err(e.into()),
    }
}

fn classify(i: &CoverInput, ctx: &Ctx) -> Result<Outcome, Failure> {
    let spec = input::cover_spec(i, ctx.chart)?;
    let rep = classify_with(&spec, &ctx.opts);
    let violations = cross_validate(&rep);
    let code = match rep.case {
        Case::FlagBundle | Case::CubicSurface => OK,
        Case::NotNormal => NEGATIVE,
        Case::Indeterminate => crate::DEGENERATE,
    };
    let code = if violations.is_empty() { code } else { NEGATIVE.max(code) };
    let value = serde_json::to_value(report::classification(&spec, &rep, violations, ctx.chart))
        .expect("serializable report");
    Ok(Outcome { value, code })
}

fn torus_check(g2: &str, g3: &str, delta: Option<&str>, ctx: &Ctx) -> Result<Outcome, Failure> {
    let pair = input::pair(g2, g3, ctx.chart)?;
    let target = delta.map(|d| input::form(d, ctx.chart)).transpose()?;
    let rep = check_conditions(&pair, target.as_ref())?;
    verdict(
        json!({
            "conditions": report::conditions(&rep),
            "delta": poly(&rep.delta),
            "all_hold": rep.all_hold(),
        }),
        rep.all_hold(),
    )
}

fn restrict_line(i: &CoverInput, point: &str, direction: &str, ctx: &Ctx) -> Result<Outcome, Failure> {
    let cov = cover_of(&input::cover_spec(i, ctx.chart)?)?;
    let line = LineParam::from_point_direction(&input::chart_point(point)?, &input::chart_point(direction)?)?;
    let lr = restrict_to_line(&cov, &line);
    let conn = is_line_cover_connected(&lr);
    let (root, coordinate) = match &conn {
        Connectivity::Disconnected { root, coordinate } => (Some(poly(root)), Some(coordinate.name())),
        _ => (None, None),
    };
    let value = json!({
        "u1": poly(&line.u1),
        "u2": poly(&line.u2),
        "a": poly(&lr.a),
        "b": poly(&lr.b),
        "c": poly(&lr.c),
        "d": poly(&lr.d),
        "connectivity": report::connectivity(&conn),
        "root": root,
        "coordinate": coordinate,
    });
    let code = match conn {
        Connectivity::Connected => OK,
        Connectivity::Disconnected { .. } => NEGATIVE,
        Connectivity::Degenerate => crate::DEGENERATE,
    };
    Ok(Outcome { value, code })
}

fn first_nonzero(p: &ProjPoint) -> usize {
    p.coords().iter().position(|c| !c.is_zero()).expect("nonzero point")
}

fn total_branch(i: &CoverInput, at: Option<&str>, ctx: &Ctx) -> Result<Outcome, Failure> {
    let spec = input::cover_spec(i, ctx.chart)?;
    let Some(at) = at else {
        return match &spec {
            CoverSpec::FlagCubic(f) => {
                let locus = total_branch_locus_with(f, &ctx.opts)?;
                ok(json!({
                    "count": locus.count,
                    "rational_points": locus.rational_points.iter().map(|p| report::point(p, ctx.chart)).collect::<Vec<_>>(),
                }))
            }
            CoverSpec::Torus(pair) => {
                let t = total_branch_points_with(pair, &ctx.opts)?;
                ok(json!({
                    "count": t.count_with_multiplicity,
                    "distinct": t.distinct,
                    "rational_points": t.rational_points.iter().map(|(p, _)| report::point(p, ctx.chart)).collect::<Vec<_>>(),
                    "multiplicities": t.rational_points.iter().map(|(_, m)| *m).collect::<Vec<_>>(),
                    "eliminant": poly(&t.eliminant),
                }))
            }
            CoverSpec::Raw(_) => Err(Failure::Usage("raw data needs --at".into())),
        };
    };
    let p = input::proj_point(at, ctx.chart)?;
    let v = match &spec {
        CoverSpec::FlagCubic(f) => {
            let k = first_nonzero(&p);
            is_total_branch_point(&eta(&f.rotate(k))?, &p.swapped(k).chart().expect("chart point"))
        }
        CoverSpec::Torus(pair) => is_total_at(pair, &p)?,
        CoverSpec::Raw(cov) => {
            let Some(q) = p.chart() else {
                return Err(Failure::Usage("raw data only covers points with x0 != 0".into()));
            };
            is_total_branch_point(cov, &q)
        }
    };
    let value = json!({ "point": report::point(&p, ctx.chart), "verdict": report::total_branch(v) });
    let code = match v {
        TotalBranch::Total => OK,
        TotalBranch::NotTotal => NEGATIVE,
        TotalBranch::Degenerate => crate::DEGENERATE,
    };
    Ok(Outcome { value, code })
}

fn jets_json(form: &MPoly, p: &ProjPoint, chart: usize) -> Result<(Value, bool), Failure> {
    let on_curve = form.eval(p.coords())?.is_zero();
    if !on_curve {
        return Ok((json!({ "point": report::point(p, chart), "on_curve": false, "a2": false }), false));
    }
    let j = cusp_jets(form, p)?;
    Ok((
        json!({
            "point": report::point(p, chart),
            "on_curve": true,
            "quadratic": poly(&j.quadratic),
            "cubic": poly(&j.cubic),
            "a2": j.is_a2,
        }),
        j.is_a2,
    ))
}

fn cusp_check(cubic: Option<&str>, form: Option<&str>, at: Option<&str>, ctx: &Ctx) -> Result<Outcome, Failure> {
    if let Some(form) = form {
        let form = input::form(form, ctx.chart)?;
        if form.is_zero() {
            return Err(Error::ZeroPolynomial.into());
        }
        let p = input::proj_point(at.expect("clap requires --at"), ctx.chart)?;
        let (value, a2) = jets_json(&form, &p, ctx.chart)?;
        return verdict(json!({ "cusps": [value] }), a2);
    }
    let Some(cubic) = cubic else {
        return Err(Failure::Usage("give --cubic or --form".into()));
    };
    let f = input::cubic(cubic, ctx.chart)?;
    let bd = branch_decomposition(&derived_invariants(&eta(&f)?).D)?;
    let points = match at {
        Some(at) => vec![input::proj_point(at, ctx.chart)?],
        None => total_branch_locus_with(&f, &ctx.opts)?.rational_points,
    };
    let mut all = true;
    let mut cusps = Vec::new();
    for p in &points {
        let (mut value, a2) = jets_json(&bd.degree6_form, p, ctx.chart)?;
        let cube = is_perfect_cube(&fiber_at_projective(&f, p));
        value["perfect_cube_fiber"] = json!(cube);
        all &= a2 && cube;
        cusps.push(value);
    }
    verdict(json!({ "branch": poly(&bd.degree6_form), "cusps": cusps }), all && !points.is_empty())
}
