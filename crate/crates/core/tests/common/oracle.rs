//! Brute-force reference tables.
//!
//! Shares nothing with the engine beyond the definitions: arithmetic is
//! `num-rational`, `(1+x)^γ` comes from signed Stirling numbers of the
//! first kind, `Li_k(1 − e^{−x})` from Stirling numbers of the second kind,
//! and every quotient is a naive long division.

#![allow(clippy::needless_range_loop)]
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;
/// Polynomial in (γ, η, ω) keyed by exponent triple.
pub type Poly = BTreeMap<[u32; 3], Q>;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn parse(s: &str) -> Q {
    s.parse().expect("rational literal")
}

fn factorial(n: usize) -> Q {
    (1..=n).fold(Q::one(), |acc, i| acc * qi(i as i64))
}

fn qpow(base: &Q, e: i32) -> Q {
    let mut acc = Q::one();
    for _ in 0..e.unsigned_abs() {
        acc *= base;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// `s(n, i)`, signed, as rows `0..=n_max`.
fn stirling_first(n_max: usize) -> Vec<Vec<Q>> {
    let mut t = vec![vec![Q::zero(); n_max + 1]; n_max + 1];
    t[0][0] = Q::one();
    for n in 1..=n_max {
        for i in 1..=n {
            t[n][i] = t[n - 1][i - 1].clone() - qi(n as i64 - 1) * &t[n - 1][i];
        }
    }
    t
}

/// `S(n, j)` as rows `0..=n_max`.
fn stirling_second(n_max: usize) -> Vec<Vec<Q>> {
    let mut t = vec![vec![Q::zero(); n_max + 1]; n_max + 1];
    t[0][0] = Q::one();
    for n in 1..=n_max {
        for j in 1..=n {
            t[n][j] = t[n - 1][j - 1].clone() + qi(j as i64) * &t[n - 1][j];
        }
    }
    t
}

/// Product of two scalar series truncated to `len` terms.
pub fn mul(a: &[Q], b: &[Q], len: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `a / b` by long division; `b[0]` must be nonzero.
pub fn div(a: &[Q], b: &[Q], len: usize) -> Vec<Q> {
    assert!(!b[0].is_zero(), "oracle divisor must be a unit");
    let mut out: Vec<Q> = Vec::with_capacity(len);
    for n in 0..len {
        let mut acc = a.get(n).cloned().unwrap_or_else(Q::zero);
        for i in 1..=n.min(b.len() - 1) {
            acc -= &b[i] * &out[n - i];
        }
        out.push(acc / &b[0]);
    }
    out
}

fn power(a: &[Q], e: u32, len: usize) -> Vec<Q> {
    let mut acc = vec![Q::zero(); len];
    acc[0] = Q::one();
    for _ in 0..e {
        acc = mul(&acc, a, len);
    }
    acc
}

/// `Li_k(1 − e^{−x})` through `x^{len−1}`:
/// `[x^n] = (1/n!) Σ_j (−1)^{n−j} j! S(n,j) / j^k`.
pub fn polylog_exp(k: i32, len: usize) -> Vec<Q> {
    let s2 = stirling_second(len);
    (0..len)
        .map(|n| {
            let mut acc = Q::zero();
            for j in 1..=n {
                let sign = if (n - j) % 2 == 0 { Q::one() } else { -Q::one() };
                acc += sign * factorial(j) * &s2[n][j] * qpow(&qi(j as i64), -k);
            }
            acc / factorial(n)
        })
        .collect()
}

/// `log(1+x) / Li_k(1 − e^{−x})`, both sides divided by `x` first.
pub fn log_over_polylog(k: i32, len: usize) -> Vec<Q> {
    let log_over_x: Vec<Q> = (0..len)
        .map(|n| q(if n % 2 == 0 { 1 } else { -1 }, n as i64 + 1))
        .collect();
    let li = polylog_exp(k, len + 1);
    div(&log_over_x, &li[1..], len)
}

/// `(x^m / (λe^x − Σ_{l<m} x^l/l!))^a`
pub fn apostol_core(m: u32, lambda: &Q, a: u32, len: usize) -> Vec<Q> {
    let m = m as usize;
    let base = if lambda.is_one() {
        // x^m / Σ_{l≥m} x^l/l! = 1 / Σ_l x^l/(l+m)!
        let den: Vec<Q> = (0..len).map(|l| factorial(l + m).recip()).collect();
        div(&[Q::one()], &den, len)
    } else {
        let den: Vec<Q> = (0..len)
            .map(|l| {
                let f = factorial(l).recip();
                if l < m {
                    lambda * &f - f
                } else {
                    lambda * &f
                }
            })
            .collect();
        let inv = div(&[Q::one()], &den, len);
        let mut shifted = vec![Q::zero(); m.min(len)];
        shifted.extend(inv.into_iter().take(len.saturating_sub(m)));
        shifted
    };
    power(&base, a, len)
}

/// Members of `(log(1+x)/Li_k(1−e^{−x})) · (1+x)^γ · e^{ηx} · core` for `n ≤ order`.
pub fn gabpdp(k: i32, m: u32, a: u32, lambda: &Q, order: usize) -> Vec<Poly> {
    let len = order + 1;
    let scalar = mul(&log_over_polylog(k, len), &apostol_core(m, lambda, a, len), len);
    product_with_gamma_eta(&scalar, order)
}

/// Members of `log(1+x)/Li_k(1−e^{−x}) · (1+x)^γ`.
pub fn poly_daehee(k: i32, order: usize) -> Vec<Poly> {
    let len = order + 1;
    let scalar = log_over_polylog(k, len);
    let s1 = stirling_first(order);
    (0..=order)
        .map(|n| {
            let mut out = Poly::new();
            // n! Σ_j scalar_{n−j} C(γ, j), C(γ, j) = Σ_i s(j,i) γ^i / j!
            for j in 0..=n {
                for i in 0..=j {
                    let c = factorial(n) * &scalar[n - j] * &s1[j][i] / factorial(j);
                    add(&mut out, [i as u32, 0, 0], c);
                }
            }
            out
        })
        .collect()
}

fn product_with_gamma_eta(scalar: &[Q], order: usize) -> Vec<Poly> {
    let s1 = stirling_first(order);
    (0..=order)
        .map(|n| {
            let mut out = Poly::new();
            // n! Σ_{i+j+l=n} scalar_i · C(γ,j) · η^l / l!
            for i in 0..=n {
                for j in 0..=(n - i) {
                    let l = n - i - j;
                    for e in 0..=j {
                        let c = factorial(n) * &scalar[i] * &s1[j][e] / (factorial(j) * factorial(l));
                        add(&mut out, [e as u32, l as u32, 0], c);
                    }
                }
            }
            out
        })
        .collect()
}

fn add(p: &mut Poly, key: [u32; 3], c: Q) {
    if c.is_zero() {
        return;
    }
    let slot = p.entry(key).or_insert_with(Q::zero);
    *slot += c;
    if slot.is_zero() {
        p.remove(&key);
    }
}

/// `n!·[x^n]` of a scalar series.
pub fn numbers(series: &[Q]) -> Vec<Q> {
    series.iter().enumerate().map(|(n, c)| c * factorial(n)).collect()
}

pub fn bernoulli_numbers(order: usize) -> Vec<Q> {
    let len = order + 1;
    let den: Vec<Q> = (0..len).map(|l| factorial(l + 1).recip()).collect();
    numbers(&div(&[Q::one()], &den, len))
}

pub fn euler_numbers(order: usize) -> Vec<Q> {
    let len = order + 1;
    let den: Vec<Q> = (0..len)
        .map(|l| factorial(l).recip() + if l == 0 { Q::one() } else { Q::zero() })
        .collect();
    numbers(&div(&[qi(2)], &den, len))
}

pub fn daehee_numbers(order: usize) -> Vec<Q> {
    (0..=order)
        .map(|n| {
            let sign = if n % 2 == 0 { Q::one() } else { -Q::one() };
            sign * factorial(n) / qi(n as i64 + 1)
        })
        .collect()
}

pub fn apostol_bernoulli_numbers(lambda: &Q, order: usize) -> Vec<Q> {
    numbers(&apostol_core(1, lambda, 1, order + 1))
}

/// Whether every coefficient is reduced with a positive denominator.
pub fn is_canonical(p: &Poly) -> bool {
    p.values().all(|c| !c.is_zero() && c.denom().is_positive())
}
