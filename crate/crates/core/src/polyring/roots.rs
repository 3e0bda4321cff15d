//! Rational roots of univariate polynomials by p-adic lifting.
//!
//! The squarefree part is reduced modulo a prime that keeps it squarefree,
//! roots modulo the prime are found by exhaustion, lifted with Newton's
//! iteration past the Cauchy-type bound `2 |a_0| |a_n|`, and turned back
//! into fractions by rational reconstruction. Every candidate is verified
//! exactly, so the result never contains a spurious root.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Rational, UPoly};

/// Distinct rational roots in increasing order.
pub fn rational_roots(p: &UPoly) -> Vec<Rational> {
    let mut roots = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return roots;
    }
    let mut g = p.squarefree_part().primitive();
    if g.coeff(0).is_zero() {
        roots.push(Rational::zero());
        g = UPoly::new(g.coeffs()[1..].to_vec());
    }
    match g.degree() {
        None | Some(0) => {}
        Some(1) => roots.push(-g.coeff(0) / g.coeff(1)),
        Some(_) => roots.extend(lifted_roots(&g)),
    }
    roots.sort();
    roots
}

fn lifted_roots(g: &UPoly) -> Vec<Rational> {
    let coeffs = g.integer_coeffs();
    let lc = coeffs.last().unwrap().abs();
    let c0 = coeffs[0].abs();
    let bound = &lc * &c0 * BigInt::from(2);
    let prime = choose_prime(&coeffs);
    let pb = BigInt::from(prime);
    let dcoeffs: Vec<BigInt> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * BigInt::from(k))
        .collect();

    let mut out = Vec::new();
    for r0 in roots_mod_p(&coeffs, prime) {
        let mut r = BigInt::from(r0);
        let mut modulus = pb.clone();
        while modulus <= bound {
            modulus = &modulus * &modulus;
            let f = eval_mod(&coeffs, &r, &modulus);
            let df = eval_mod(&dcoeffs, &r, &modulus);
            let inv = mod_inverse(&df, &modulus).expect("simple root modulo p");
            r = (r - f * inv).mod_floor(&modulus);
        }
        if let Some(q) = reconstruct(&r, &modulus, &c0, &lc) {
            if g.eval(&q).is_zero() {
                out.push(q);
            }
        }
    }
    out
}

fn eval_mod(coeffs: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in coeffs.iter().rev() {
        acc = (acc * x + c).mod_floor(m);
    }
    acc
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Fraction `a/b` with `|a| <= num_bound`, `0 < b <= den_bound` and `a = b r (mod m)`.
fn reconstruct(r: &BigInt, m: &BigInt, num_bound: &BigInt, den_bound: &BigInt) -> Option<Rational> {
    let (mut r0, mut r1) = (m.clone(), r.clone());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1 > num_bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || &t1.abs() > den_bound {
        return None;
    }
    Some(Rational::new(r1, t1))
}

fn roots_mod_p(coeffs: &[BigInt], p: u64) -> Vec<u64> {
    let red = reduce(coeffs, p);
    (0..p)
        .filter(|&x| {
            let mut acc = 0u64;
            for &c in red.iter().rev() {
                acc = (acc * x + c) % p;
            }
            acc == 0
        })
        .collect()
}

fn reduce(coeffs: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    coeffs
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().unwrap())
        .collect()
}

/// Smallest prime above 100 not dividing the leading coefficient and keeping `g` squarefree.
fn choose_prime(coeffs: &[BigInt]) -> u64 {
    let mut p = 101u64;
    loop {
        if is_prime(p) {
            let red = reduce(coeffs, p);
            if *red.last().unwrap() != 0 {
                let der: Vec<u64> = red
                    .iter()
                    .enumerate()
                    .skip(1)
                    .map(|(k, &c)| (c * (k as u64 % p)) % p)
                    .collect();
                if fp_gcd_degree(red, der, p) == 0 {
                    return p;
                }
            }
        }
        p += 2;
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Degree of `gcd(a, b)` over `F_p`.
fn fp_gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> usize {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let inv = pow_mod(*b.last().unwrap(), p - 2, p);
        while a.len() >= b.len() {
            let shift = a.len() - b.len();
            let f = a.last().unwrap() * inv % p;
            for (j, &bj) in b.iter().enumerate() {
                a[shift + j] = (a[shift + j] + p - f * bj % p) % p;
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}
