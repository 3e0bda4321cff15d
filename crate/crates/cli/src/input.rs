//! Turning command-line text into library values.

use std::fs;

use tck_core::classify::CoverSpec;
use tck_core::cover::{rotate_form, AffineCoverData};
use tck_core::etamap::TernaryCubic;
use tck_core::polyparse::parse_poly;
use tck_core::polyring::{MPoly, ProjPoint, Rational, VarSet};
use tck_core::torus::TorusPair;

use crate::args::CoverInput;
use crate::Failure;

/// The literal itself, or the contents of the file named after a leading `@`.
pub fn load(value: &str) -> Result<String, Failure> {
    match value.strip_prefix('@') {
        Some(path) => fs::read_to_string(path)
            .map(|s| s.trim().to_string())
            .map_err(|e| Failure::Usage(format!("cannot read {path}: {e}"))),
        None => Ok(value.to_string()),
    }
}

pub fn poly(value: &str, vars: &VarSet) -> Result<MPoly, Failure> {
    Ok(parse_poly(&load(value)?, vars)?)
}

pub fn cubic(value: &str, chart: usize) -> Result<TernaryCubic, Failure> {
    Ok(TernaryCubic::parse(&load(value)?)?.rotate(chart))
}

pub fn pair(g2: &str, g3: &str, chart: usize) -> Result<TorusPair, Failure> {
    Ok(TorusPair::parse(&load(g2)?, &load(g3)?)?.rotate(chart))
}

pub fn form(value: &str, chart: usize) -> Result<MPoly, Failure> {
    Ok(rotate_form(&poly(value, &VarSet::projective())?, chart))
}

fn rational(text: &str) -> Result<Rational, Failure> {
    poly(text.trim(), &VarSet::chart())?
        .constant_value()
        .ok_or_else(|| Failure::Parse(format!("expected a rational number, found `{}`", text.trim())))
}

/// `u1,u2`.
pub fn chart_point(value: &str) -> Result<(Rational, Rational), Failure> {
    let text = load(value)?;
    match text.split(',').collect::<Vec<_>>()[..] {
        [a, b] => Ok((rational(a)?, rational(b)?)),
        _ => Err(Failure::Parse(format!("expected u1,u2, found `{text}`"))),
    }
}

/// `x0:x1:x2`, also accepting commas.
pub fn proj_point(value: &str, chart: usize) -> Result<ProjPoint, Failure> {
    let text = load(value)?;
    let parts: Vec<&str> = text
        .trim_matches(|c| c == '(' || c == ')')
        .split([':', ','])
        .collect();
    let [a, b, c] = parts[..] else {
        return Err(Failure::Parse(format!("expected x0:x1:x2, found `{text}`")));
    };
    ProjPoint::new([rational(a)?, rational(b)?, rational(c)?])
        .map(|p| p.swapped(chart))
        .ok_or_else(|| Failure::Parse("the point (0:0:0) is not a projective point".into()))
}

/// Exactly one cover description, with the chart swap applied.
pub fn cover_spec(input: &CoverInput, chart: usize) -> Result<CoverSpec, Failure> {
    let given = [input.flag_cubic.is_some(), input.g2.is_some(), input.raw.is_some()];
    if given.iter().filter(|&&g| g).count() != 1 {
        return Err(Failure::Usage(
            "give exactly one of --flag-cubic, --g2/--g3 or --raw".into(),
        ));
    }
    if let Some(f) = &input.flag_cubic {
        return Ok(CoverSpec::FlagCubic(cubic(f, chart)?));
    }
    if let (Some(g2), Some(g3)) = (&input.g2, &input.g3) {
        return Ok(CoverSpec::Torus(pair(g2, g3, chart)?));
    }
    let raw = input.raw.as_ref().expect("one input is present");
    if chart != 0 {
        return Err(Failure::Usage("--chart cannot be applied to raw chart data".into()));
    }
    let v = VarSet::chart();
    let p: Vec<MPoly> = raw.iter().map(|s| poly(s, &v)).collect::<Result<_, _>>()?;
    let [a, b, c, d] = <[MPoly; 4]>::try_from(p).expect("four values");
    Ok(CoverSpec::Raw(AffineCoverData::new(a, b, c, d)?))
}
