//! Divisor functions, gcd sums and the abelian baselines.
//!
//! Everything here is exact. Integer inputs are `i64`; fractional outputs
//! are arbitrary-precision [`Rational`]s.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::Rational;

/// Non-negative gcd with `gcd(x, 0) = |x|` and `gcd(0, 0) = 0`.
pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

fn require_positive(what: &'static str, n: i64) -> Result<()> {
    if n <= 0 {
        return Err(Error::NonPositive { what, value: n });
    }
    Ok(())
}

/// All positive divisors of `n`, in increasing order.
pub fn divisors(n: i64) -> Result<Vec<i64>> {
    require_positive("n", n)?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// `σ_k(n) = Σ_{d | n} d^k` for `k ∈ {0, 1, 2}`.
pub fn sigma(k: u32, n: i64) -> Result<i64> {
    if k > 2 {
        return Err(Error::UnsupportedPower(k));
    }
    Ok(divisors(n)?.into_iter().map(|d| d.pow(k)).sum())
}

/// Upper-triangular Hermite normal forms `[[d, b], [0, ℓ/d]]` of the index-`ℓ`
/// sublattices of `Z²`.
pub fn hnf_sublattices(l: i64) -> Result<Vec<[[i64; 2]; 2]>> {
    require_positive("ℓ", l)?;
    let mut out = Vec::new();
    for d in divisors(l)? {
        for b in 0..d {
            out.push([[d, b], [0, l / d]]);
        }
    }
    Ok(out)
}

/// Number of index-`ℓ` sublattices of `Z²`, counted by explicit enumeration.
pub fn count_sublattices_hnf(l: i64) -> Result<i64> {
    Ok(hnf_sublattices(l)?.len() as i64)
}

/// Divisibility of the class of a linear torus `Z² → Z^{2n}`: the gcd of all
/// 2×2 minors of its `2n × 2` matrix.
pub fn class_divisibility(rows: &[[i64; 2]]) -> Result<i64> {
    if rows.len() < 2 || rows.len() % 2 != 0 {
        return Err(Error::Shape(format!(
            "expected an even number (≥ 2) of rows, got {}",
            rows.len()
        )));
    }
    let mut g = 0;
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            let minor = rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0];
            g = gcd(g, minor);
        }
    }
    Ok(g)
}

/// The triple sum
/// `Σ_{d | gcd(m,n)} Σ_{k=1}^{d} Σ_{ℓ=1}^{|m|/d} 1 / gcd(gcd(m,n), (mk + nℓ)/d)`,
/// evaluated term by term.
pub fn dagger_sum(m: i64, n: i64) -> Result<Rational> {
    if m == 0 {
        return Err(Error::ZeroM);
    }
    let mu = gcd(m, n);
    // every term is 1/g for some g | mu, so tally the g's first
    let mut tally: BTreeMap<i64, i64> = BTreeMap::new();
    for d in divisors(mu)? {
        for k in 1..=d {
            for l in 1..=m.abs() / d {
                let g = gcd(mu, (m * k + n * l) / d);
                *tally.entry(g).or_insert(0) += 1;
            }
        }
    }
    Ok(tally
        .into_iter()
        .fold(Rational::zero(), |acc, (g, count)| {
            acc + Rational::new(BigInt::from(count), BigInt::from(g))
        }))
}

/// Closed form of [`dagger_sum`]: `|m| σ₂(gcd(m,n)) / gcd(m,n)²`.
pub fn dagger_closed_form(m: i64, n: i64) -> Result<Rational> {
    if m == 0 {
        return Err(Error::ZeroM);
    }
    let mu = gcd(m, n);
    Ok(Rational::new(
        BigInt::from(m.abs()) * BigInt::from(sigma(2, mu)?),
        BigInt::from(mu) * BigInt::from(mu),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CesaroCheck {
    pub lhs: i64,
    pub rhs: i64,
    pub equal: bool,
}

/// Both sides of `Σ_{d|n} Σ_{i=1}^{d} f(gcd(i,d)) = Σ_{d|n} f(n/d)·d`.
pub fn cesaro_identity_check<F>(f: F, n: i64) -> Result<CesaroCheck>
where
    F: Fn(i64) -> i64,
{
    let divs = divisors(n)?;
    let lhs = divs
        .iter()
        .map(|&d| (1..=d).map(|i| f(gcd(i, d))).sum::<i64>())
        .sum::<i64>();
    let rhs = divs.iter().map(|&d| f(n / d) * d).sum::<i64>();
    Ok(CesaroCheck {
        lhs,
        rhs,
        equal: lhs == rhs,
    })
}
