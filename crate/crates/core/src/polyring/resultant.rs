//! Sylvester resultants.
//!
//! [`resultant`] evaluates the remaining variables at integer points,
//! takes numeric Sylvester determinants and interpolates; it is the fast
//! route. [`sylvester_resultant`] runs fraction-free elimination directly
//! on the polynomial Sylvester matrix and serves as the reference.

use num_traits::{One, Zero};

use super::{rat, MPoly, Rational};
use crate::error::{Error, Result};

/// Sylvester matrix of `p`, `q` in `var`: `deg q` rows of `p` above `deg p`
/// rows of `q`, coefficients listed from the highest degree.
pub fn sylvester_matrix(p: &MPoly, q: &MPoly, var: usize) -> Vec<Vec<MPoly>> {
    let vars = p.vars().clone();
    let pc = p.to_univariate(var);
    let qc = q.to_univariate(var);
    let m = pc.len() - 1;
    let n = qc.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (coeffs, deg, count) in [(&pc, m, n), (&qc, n, m)] {
        for shift in 0..count {
            let mut row = vec![MPoly::zero(&vars); size];
            for k in 0..=deg {
                row[shift + k] = coeffs[deg - k].clone();
            }
            rows.push(row);
        }
    }
    rows
}

fn check_args(p: &MPoly, q: &MPoly, var: usize) -> Result<bool> {
    p.try_add(q)?;
    if p.is_zero() || q.is_zero() {
        return Ok(false);
    }
    if p.degree_in(var) == 0 && q.degree_in(var) == 0 {
        return Err(Error::ConstantInVariable(p.vars().name(var).to_string()));
    }
    Ok(true)
}

/// Resultant of `p` and `q` regarded as univariate in `var`.
///
/// A zero argument gives the zero resultant. When one argument has degree 0
/// in `var` the result is that argument raised to the other's degree.
pub fn resultant(p: &MPoly, q: &MPoly, var: usize) -> Result<MPoly> {
    if !check_args(p, q, var)? {
        return Ok(MPoly::zero(p.vars()));
    }
    Ok(res_forms(p, q, var).unwrap_or_else(|| res_interp(p, q, var)))
}

/// Resultant of two forms via the chart `y = 1` of another variable. The
/// leading coefficients in `var` are nonzero forms and survive the
/// specialization; the result is a form of degree `m Q + n P - m n`.
fn res_forms(p: &MPoly, q: &MPoly, var: usize) -> Option<MPoly> {
    let big_p = p.homogeneous_degree()?;
    let big_q = q.homogeneous_degree()?;
    let mut others = p.support_vars();
    others.extend(q.support_vars());
    others.sort_unstable();
    others.dedup();
    others.retain(|&v| v != var);
    if others.len() < 2 {
        return None;
    }
    let y = others[0];
    let (m, n) = (p.degree_in(var), q.degree_in(var));
    let deg = m * big_q + n * big_p - m * n;
    let one = Rational::one();
    let r = res_interp(&p.eval_var(y, &one), &q.eval_var(y, &one), var);
    let vars = p.vars().clone();
    Some(MPoly::from_terms(
        &vars,
        r.terms().map(|(mono, c)| {
            let mut e = mono.exponents().to_vec();
            e[y] = deg - mono.degree();
            (e, c.clone())
        }),
    ))
}

/// Reference resultant: Bareiss elimination on the polynomial Sylvester matrix.
pub fn sylvester_resultant(p: &MPoly, q: &MPoly, var: usize) -> Result<MPoly> {
    if !check_args(p, q, var)? {
        return Ok(MPoly::zero(p.vars()));
    }
    let mut a = sylvester_matrix(p, q, var);
    let vars = p.vars().clone();
    let n = a.len();
    let mut negate = false;
    let mut prev = MPoly::one(&vars);
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            let Some(i) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(MPoly::zero(&vars));
            };
            a.swap(k, i);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev);
            }
            a[i][k] = MPoly::zero(&vars);
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Discriminant `(-1)^(n(n-1)/2) res(p, p') / lc(p)` in `var`.
pub fn discriminant(p: &MPoly, var: usize) -> Result<MPoly> {
    let n = p.degree_in(var);
    if n == 0 {
        return Err(Error::ConstantInVariable(p.vars().name(var).to_string()));
    }
    let r = resultant(p, &p.derivative(var), var)?;
    let lc = p.leading_coeff_in(var);
    let q = r.try_div(&lc)?.expect("leading coefficient divides the resultant");
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -q } else { q })
}

fn res_interp(p: &MPoly, q: &MPoly, var: usize) -> MPoly {
    let vars = p.vars().clone();
    let others: Vec<usize> = {
        let mut s = p.support_vars();
        s.extend(q.support_vars());
        s.sort_unstable();
        s.dedup();
        s.into_iter().filter(|&v| v != var).collect()
    };
    let Some(&y) = others.first() else {
        let pc: Vec<Rational> = p
            .to_univariate(var)
            .iter()
            .map(|c| c.constant_value().unwrap())
            .collect();
        let qc: Vec<Rational> = q
            .to_univariate(var)
            .iter()
            .map(|c| c.constant_value().unwrap())
            .collect();
        return MPoly::constant(&vars, numeric_resultant(&pc, &qc));
    };

    let pc = p.to_univariate(var);
    let qc = q.to_univariate(var);
    let m = (pc.len() - 1) as u32;
    let n = (qc.len() - 1) as u32;
    let dp = pc.iter().map(|c| c.degree_in(y)).max().unwrap_or(0);
    let dq = qc.iter().map(|c| c.degree_in(y)).max().unwrap_or(0);
    let bound = (n * dp + m * dq) as usize;
    let lp = pc.last().unwrap();
    let lq = qc.last().unwrap();

    let mut xs: Vec<Rational> = Vec::with_capacity(bound + 1);
    let mut values: Vec<MPoly> = Vec::with_capacity(bound + 1);
    let mut k: i64 = 0;
    while xs.len() <= bound {
        let a = rat(if k % 2 == 0 { -(k / 2) } else { k / 2 + 1 });
        k += 1;
        if lp.eval_var(y, &a).is_zero() || lq.eval_var(y, &a).is_zero() {
            continue;
        }
        values.push(res_interp(&p.eval_var(y, &a), &q.eval_var(y, &a), var));
        xs.push(a);
    }
    newton_interpolate(&xs, values, y)
}

/// Interpolates polynomial values in the variable `y`.
fn newton_interpolate(xs: &[Rational], mut dd: Vec<MPoly>, y: usize) -> MPoly {
    let n = xs.len();
    for level in 1..n {
        for i in (level..n).rev() {
            let diff = &dd[i] - &dd[i - 1];
            dd[i] = diff.scale(&(&xs[i] - &xs[i - level]).recip());
        }
    }
    let vars = dd[0].vars().clone();
    let yv = MPoly::var(&vars, y);
    let mut acc = MPoly::zero(&vars);
    for i in (0..n).rev() {
        let lin = &yv - &MPoly::constant(&vars, xs[i].clone());
        acc = &(&acc * &lin) + &dd[i];
    }
    acc
}

/// Determinant of the numeric Sylvester matrix.
pub(crate) fn numeric_resultant(p: &[Rational], q: &[Rational]) -> Rational {
    let m = p.len() - 1;
    let n = q.len() - 1;
    let size = m + n;
    if size == 0 {
        return Rational::one();
    }
    let mut a = vec![vec![Rational::zero(); size]; size];
    for shift in 0..n {
        for k in 0..=m {
            a[shift][shift + k] = p[m - k].clone();
        }
    }
    for shift in 0..m {
        for k in 0..=n {
            a[n + shift][shift + k] = q[n - k].clone();
        }
    }
    determinant(a)
}

fn determinant(mut a: Vec<Vec<Rational>>) -> Rational {
    let n = a.len();
    let mut det = Rational::one();
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Rational::zero();
        };
        if piv != k {
            a.swap(piv, k);
            det = -det;
        }
        let pivot = a[k][k].clone();
        det *= &pivot;
        let inv = pivot.recip();
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] * &inv;
            for j in k + 1..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
        }
    }
    det
}
