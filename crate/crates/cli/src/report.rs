//! Serialized forms of library results, and the line-oriented text layout.

use serde::Serialize;
use serde_json::Value;

use tck_core::classify::{Case, ClassificationReport, CoverSpec};
use tck_core::cover::{Connectivity, TotalBranch};
use tck_core::polyparse::print_poly;
use tck_core::polyring::{MPoly, ProjPoint};
use tck_core::torus::{Condition1, ConditionReport, ConditionVerdict};

pub fn point(p: &ProjPoint, chart: usize) -> [String; 3] {
    p.swapped(chart).coords().clone().map(|c| c.to_string())
}

pub fn poly(p: &MPoly) -> String {
    print_poly(p)
}

pub fn total_branch(t: TotalBranch) -> &'static str {
    match t {
        TotalBranch::Total => "total",
        TotalBranch::NotTotal => "not-total",
        TotalBranch::Degenerate => "degenerate",
    }
}

pub fn connectivity(c: &Connectivity) -> &'static str {
    match c {
        Connectivity::Connected => "connected",
        Connectivity::Disconnected { .. } => "disconnected",
        Connectivity::Degenerate => "degenerate",
    }
}

#[derive(Serialize)]
pub struct Condition1Json {
    /// `None` when no sextic was supplied.
    pub holds: Option<bool>,
    pub mu: Option<String>,
}

#[derive(Serialize)]
pub struct VerdictJson {
    pub holds: bool,
    pub witness: Option<String>,
}

#[derive(Serialize)]
pub struct ConditionsJson {
    pub c1: Condition1Json,
    pub c2: VerdictJson,
    pub c3: VerdictJson,
}

fn verdict(v: &ConditionVerdict) -> VerdictJson {
    match v {
        ConditionVerdict::Holds => VerdictJson { holds: true, witness: None },
        ConditionVerdict::Fails { witness } => VerdictJson {
            holds: false,
            witness: Some(poly(witness)),
        },
    }
}

pub fn conditions(r: &ConditionReport) -> ConditionsJson {
    let c1 = match &r.condition1 {
        Condition1::Holds { mu } => Condition1Json { holds: Some(true), mu: Some(mu.to_string()) },
        Condition1::Fails => Condition1Json { holds: Some(false), mu: None },
        Condition1::NotChecked => Condition1Json { holds: None, mu: None },
    };
    ConditionsJson {
        c1,
        c2: verdict(&r.condition2),
        c3: verdict(&r.condition3),
    }
}

#[derive(Serialize)]
pub struct TotalBranchJson {
    pub count: usize,
    pub rational_points: Vec<[String; 3]>,
}

/// One total branch point of a flag cover; irrational ones carry no data.
#[derive(Serialize)]
pub struct CuspJson {
    pub point: Option<[String; 3]>,
    pub a2: Option<bool>,
    pub perfect_cube_fiber: Option<bool>,
    pub total: Option<&'static str>,
}

#[derive(Serialize)]
pub struct ClassifyJson {
    pub case: String,
    pub branch: Option<String>,
    #[serde(rename = "S")]
    pub s: Option<String>,
    #[serde(rename = "T")]
    pub t: Option<String>,
    pub lambda: Option<String>,
    pub conditions: Option<ConditionsJson>,
    pub total_branch: Option<TotalBranchJson>,
    pub cusps: Vec<CuspJson>,
    pub surface: Option<String>,
    pub violations: Vec<String>,
    pub notes: Vec<String>,
}

pub fn classification(
    spec: &CoverSpec,
    rep: &ClassificationReport,
    violations: Vec<String>,
    chart: usize,
) -> ClassifyJson {
    let mut cusps: Vec<CuspJson> = rep
        .cusps()
        .map(|c| CuspJson {
            point: Some(point(&c.point, chart)),
            a2: Some(c.jets.is_a2),
            perfect_cube_fiber: Some(c.perfect_cube_fiber),
            total: Some(total_branch(c.total)),
        })
        .collect();
    let flag = matches!(spec, CoverSpec::FlagCubic(_)) && rep.case != Case::NotNormal;
    if let (true, Some(tb)) = (flag, &rep.total_branch) {
        while cusps.len() < tb.count {
            cusps.push(CuspJson { point: None, a2: None, perfect_cube_fiber: None, total: None });
        }
    }
    ClassifyJson {
        case: rep.case.to_string(),
        branch: rep.branch_form.as_ref().map(poly),
        s: rep.decomposition.as_ref().map(|d| poly(&d.s_form)),
        t: rep.decomposition.as_ref().map(|d| poly(&d.t_form)),
        lambda: rep.lambda().map(ToString::to_string),
        conditions: rep.conditions().map(conditions),
        total_branch: rep.total_branch.as_ref().map(|t| TotalBranchJson {
            count: t.count,
            rational_points: t.rational_points.iter().map(|p| point(p, chart)).collect(),
        }),
        cusps,
        surface: rep.surface().map(ToString::to_string),
        violations,
        notes: rep.notes.clone(),
    }
}

/// Renders a JSON object as `key: value` lines.
///
/// Nested objects use dotted keys, arrays of objects give one line per
/// element, and a `violations` list becomes a closing `OK` or one
/// `violation:` line each.
pub fn text(value: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(map) = value {
        for (k, v) in map {
            if k != "violations" {
                lines(&mut out, k, v);
            }
        }
        if let Some(Value::Array(vs)) = map.get("violations") {
            if vs.is_empty() {
                out.push_str("OK\n");
            }
            for v in vs {
                out.push_str(&format!("violation: {}\n", inline(v)));
            }
        }
    } else {
        out.push_str(&inline(value));
        out.push('\n');
    }
    out
}

fn lines(out: &mut String, key: &str, v: &Value) {
    match v {
        Value::Object(map) if map.values().any(|x| x.is_object()) => {
            for (k, x) in map {
                lines(out, &format!("{key}.{k}"), x);
            }
        }
        Value::Array(xs) if xs.iter().any(Value::is_object) || key == "notes" => {
            for x in xs {
                out.push_str(&format!("{key}: {}\n", inline(x)));
            }
        }
        _ => out.push_str(&format!("{key}: {}\n", inline(v))),
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(xs) if xs.len() == 3 && xs.iter().all(Value::is_string) => {
            let parts: Vec<String> = xs.iter().map(inline).collect();
            format!("({})", parts.join(":"))
        }
        Value::Array(xs) if xs.is_empty() => "-".into(),
        Value::Array(xs) => xs.iter().map(inline).collect::<Vec<_>>().join(" "),
        Value::Object(map) => map
            .iter()
            .map(|(k, x)| format!("{k}={}", inline(x)))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}
