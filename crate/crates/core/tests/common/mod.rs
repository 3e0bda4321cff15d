#![allow(dead_code)]

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tck_core::etamap::TernaryCubic;
use tck_core::polyring::{rat, MPoly, Rational, VarSet};
use tck_core::torus::TorusPair;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small(rng: &mut impl Rng, height: i64) -> Rational {
    rat(rng.gen_range(-height..=height))
}

pub fn nonzero(rng: &mut impl Rng, height: i64) -> Rational {
    loop {
        let r = small(rng, height);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Random polynomial with at most `terms` terms, each of degree at most `deg`.
pub fn random_poly(rng: &mut impl Rng, vars: &VarSet, deg: u32, terms: usize, height: i64) -> MPoly {
    let n = rng.gen_range(0..=terms);
    MPoly::from_terms(
        vars,
        (0..n).map(|_| {
            let mut e = vec![0u32; vars.len()];
            let mut left = rng.gen_range(0..=deg);
            for slot in e.iter_mut() {
                let k = rng.gen_range(0..=left);
                *slot = k;
                left -= k;
            }
            e.shuffle(rng);
            (e, small(rng, height))
        }),
    )
}

/// Random form of the given degree with every coefficient drawn from `[-height, height]`.
pub fn random_form(rng: &mut impl Rng, vars: &VarSet, deg: u32, height: i64) -> MPoly {
    let n = vars.len();
    let mut terms = Vec::new();
    let mut e = vec![0u32; n];
    fn walk(
        i: usize,
        left: u32,
        e: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if i + 1 == e.len() {
            e[i] = left;
            out.push(e.clone());
            return;
        }
        for k in 0..=left {
            e[i] = k;
            walk(i + 1, left - k, e, out);
        }
    }
    let mut exps = Vec::new();
    walk(0, deg, &mut e, &mut exps);
    for ex in exps {
        terms.push((ex, small(rng, height)));
    }
    MPoly::from_terms(vars, terms)
}

pub fn random_cubic(rng: &mut impl Rng, height: i64) -> TernaryCubic {
    TernaryCubic::from_ints(std::array::from_fn(|_| rng.gen_range(-height..=height)))
}

pub fn random_pair(rng: &mut impl Rng, height: i64) -> TorusPair {
    let v = VarSet::projective();
    loop {
        let pair = TorusPair::new(random_form(rng, &v, 2, height), random_form(rng, &v, 3, height))
            .unwrap();
        if !pair.delta().is_zero() {
            return pair;
        }
    }
}

pub fn proportional(p: &MPoly, q: &MPoly) -> bool {
    if p.is_zero() || q.is_zero() {
        return p.is_zero() && q.is_zero();
    }
    p.monic() == q.monic()
}

/// `18pqrs - 4q^3 s + q^2 r^2 - 4p r^3 - 27p^2 s^2`.
pub fn binary_disc(p: &Rational, q: &Rational, r: &Rational, s: &Rational) -> Rational {
    let n = |k: i64| rat(k);
    n(18) * p * q * r * s - n(4) * q * q * q * s + q * q * r * r - n(4) * p * r * r * r
        - n(27) * p * p * s * s
}

/// Discriminant of `f` restricted to the line `v0 = -u1 v1 - u2 v2`, computed
/// by plain substitution.
pub fn fiber_disc_at(f: &TernaryCubic, u1: &Rational, u2: &Rational) -> Rational {
    let w = VarSet::new(["v1", "v2"]);
    let v1 = MPoly::var(&w, 0);
    let v2 = MPoly::var(&w, 1);
    let v0 = -(&v1.scale(u1) + &v2.scale(u2));
    let g = f.to_form().substitute(&[v0, v1, v2]).unwrap();
    let c = |e: [u32; 2]| g.coeff_of(&e);
    binary_disc(&c([3, 0]), &c([2, 1]), &c([1, 2]), &c([0, 3]))
}

/// Determinant by Gaussian elimination over the rationals.
pub fn det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut acc = Rational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if piv != col {
            m.swap(piv, col);
            acc = -acc;
        }
        let p = m[col][col].clone();
        acc *= &p;
        for r in col + 1..n {
            let factor = &m[r][col] / &p;
            if factor.is_zero() {
                continue;
            }
            for c in col..n {
                let sub = &factor * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    acc
}

/// Sylvester resultant of two dense univariate polynomials (constant term first).
pub fn sylvester(f: &[Rational], g: &[Rational]) -> Rational {
    let (m, n) = (f.len() - 1, g.len() - 1);
    let size = m + n;
    if size == 0 {
        return Rational::one();
    }
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![Rational::zero(); size];
        for (j, c) in f.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![Rational::zero(); size];
        for (j, c) in g.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    det(rows)
}

fn eval_form(p: &MPoly, x: &[Rational; 3]) -> Rational {
    p.eval(x).unwrap()
}

/// Whether a ternary form is squarefree, judged by the binary forms it
/// cuts out on random lines: a squared factor always gives a repeated root.
pub fn form_is_squarefree(p: &MPoly, rng: &mut impl Rng) -> bool {
    let d = p.total_degree() as usize;
    if d <= 1 {
        return true;
    }
    let mut tries = 0;
    while tries < 6 {
        let a: [Rational; 3] = std::array::from_fn(|_| small(rng, 7));
        let b: [Rational; 3] = std::array::from_fn(|_| small(rng, 7));
        if eval_form(p, &a).is_zero() {
            continue;
        }
        tries += 1;
        // values at t = 0..=d of p(a + t b) determine the binary form
        let vals: Vec<Rational> = (0..=d as i64)
            .map(|t| {
                let x: [Rational; 3] = std::array::from_fn(|i| &a[i] + &b[i] * rat(t));
                eval_form(p, &x)
            })
            .collect();
        let coeffs = interpolate(&vals);
        let mut dcoeffs: Vec<Rational> = coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat(i as i64))
            .collect();
        let mut coeffs = coeffs;
        while coeffs.len() > 1 && coeffs.last().unwrap().is_zero() {
            coeffs.pop();
        }
        while dcoeffs.len() > 1 && dcoeffs.last().unwrap().is_zero() {
            dcoeffs.pop();
        }
        if coeffs.len() != d + 1 {
            // the point at t = infinity is a root; try another line
            continue;
        }
        if !sylvester(&coeffs, &dcoeffs).is_zero() {
            return true;
        }
    }
    false
}

/// Coefficients of the polynomial taking `vals[t]` at `t = 0, 1, ...`.
pub fn interpolate(vals: &[Rational]) -> Vec<Rational> {
    let n = vals.len();
    let rows: Vec<Vec<Rational>> = (0..n)
        .map(|t| (0..n).map(|j| rat((t as i64).pow(j as u32))).collect())
        .collect();
    // Cramer's rule keeps this independent of any library solver
    let base = det(rows.clone());
    (0..n)
        .map(|j| {
            let mut m = rows.clone();
            for (t, row) in m.iter_mut().enumerate() {
                row[j] = vals[t].clone();
            }
            det(m) / &base
        })
        .collect()
}

/// Random linear form in `(x0, x1, x2)`.
pub fn linear_form(rng: &mut impl Rng) -> MPoly {
    loop {
        let f = random_form(rng, &VarSet::projective(), 1, 4);
        if !f.is_zero() {
            return f;
        }
    }
}

/// A pair built from explicit prime factors together with the verdicts
/// read off from the construction.
pub struct ConstructedPair {
    pub pair: TorusPair,
    /// Product of the primes dividing `G2` whose square divides `G3`.
    pub c2_witness: Option<MPoly>,
    pub c3_holds: bool,
}

/// Prime forms: pairwise independent lines and the quadrics `L^2 + k E^2`.
fn prime_pool(rng: &mut impl Rng) -> (Vec<MPoly>, Vec<(MPoly, usize, usize)>) {
    let mut lines: Vec<MPoly> = Vec::new();
    while lines.len() < 4 {
        let l = linear_form(rng);
        let independent = lines.iter().all(|m| {
            let c = |p: &MPoly| [p.coeff_of(&[1, 0, 0]), p.coeff_of(&[0, 1, 0]), p.coeff_of(&[0, 0, 1])];
            let (a, b) = (c(&l), c(m));
            !(0..3).all(|i| (0..3).all(|j| (&a[i] * &b[j] - &a[j] * &b[i]).is_zero()))
        });
        if independent {
            lines.push(l);
        }
    }
    let mut quads = Vec::new();
    for (i, j) in [(0usize, 1usize), (2, 3), (1, 2)] {
        let k = rat(rng.gen_range(1..=3));
        quads.push((&lines[i].pow(2) + &lines[j].pow(2).scale(&k), i, j));
    }
    (lines, quads)
}

/// Multiplicity of the prime `p` in `f`, by repeated exact division.
pub fn multiplicity(f: &MPoly, p: &MPoly) -> u32 {
    let mut g = f.clone();
    let mut k = 0;
    while let Ok(Some(q)) = g.try_div(p) {
        g = q;
        k += 1;
    }
    k
}

pub fn constructed_pairs(rng: &mut impl Rng, count: usize) -> Vec<ConstructedPair> {
    let mut out = Vec::new();
    while out.len() < count {
        let (lines, quads) = prime_pool(rng);
        let pick = |rng: &mut dyn rand::RngCore| lines[rng.gen_range(0..lines.len())].clone();
        // factor lists, primes as (poly, id)
        let mut g2: Vec<MPoly> = Vec::new();
        let mut g3: Vec<MPoly> = Vec::new();
        let mut sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        match rng.gen_range(0..4) {
            0 => {
                g2.push(pick(rng));
                g2.push(pick(rng));
            }
            1 => {
                let l = pick(rng);
                g2.push(l.clone());
                g2.push(l);
            }
            2 => g2.push(quads[rng.gen_range(0..quads.len())].0.clone()),
            _ => {
                // G2 = -L^2, G3 = L (L^2 + k E^2)
                let (q, i, _) = quads[rng.gen_range(0..quads.len())].clone();
                g2.push(lines[i].clone());
                g2.push(lines[i].clone());
                g3.push(lines[i].clone());
                g3.push(q);
                sign = -1;
            }
        }
        if g3.is_empty() {
            match rng.gen_range(0..4) {
                0 => {
                    for _ in 0..3 {
                        g3.push(pick(rng));
                    }
                }
                1 => {
                    let l = pick(rng);
                    g3.push(l.clone());
                    g3.push(l);
                    g3.push(pick(rng));
                }
                2 => {
                    let l = pick(rng);
                    for _ in 0..3 {
                        g3.push(l.clone());
                    }
                }
                _ => {
                    g3.push(quads[rng.gen_range(0..quads.len())].0.clone());
                    g3.push(pick(rng));
                }
            }
        }
        let v = VarSet::projective();
        let prod = |fs: &[MPoly]| fs.iter().fold(MPoly::one(&v), |a, f| &a * f);
        let pair = TorusPair::new(prod(&g2).scale_int(sign), prod(&g3)).unwrap();
        let delta = pair.delta();
        if delta.is_zero() {
            continue;
        }
        // distinct primes of G2, by exact comparison after normalisation
        let mut primes: Vec<MPoly> = Vec::new();
        for p in &g2 {
            if !primes.iter().any(|q| proportional(p, q)) {
                primes.push(p.clone());
            }
        }
        let bad: Vec<&MPoly> = primes
            .iter()
            .filter(|p| multiplicity(&pair.g3, p) >= 2)
            .collect();
        let c2_witness = (!bad.is_empty()).then(|| prod(&bad.into_iter().cloned().collect::<Vec<_>>()));
        let mut rest = delta.clone();
        for p in &primes {
            while let Ok(Some(q)) = rest.try_div(p) {
                rest = q;
            }
        }
        let c3_holds = form_is_squarefree(&rest, rng);
        out.push(ConstructedPair {
            pair,
            c2_witness,
            c3_holds,
        });
    }
    out
}

/// Lines `p + t q` with coordinates up to 1000 in absolute value.
pub fn random_line_strategy() -> impl proptest::strategy::Strategy<Value = tck_core::cover::LineParam> {
    use proptest::prelude::*;
    prop::array::uniform4(-1000i64..=1000).prop_filter_map("constant line", |[a, b, c, d]| {
        tck_core::cover::LineParam::from_point_direction(&(rat(a), rat(b)), &(rat(c), rat(d))).ok()
    })
}
