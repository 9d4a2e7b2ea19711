//! Moduli components, automorphism counts and the genus-one family
//! invariant, both in closed form and by summing over components.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::arith::{gcd, sigma};
use crate::error::{Error, Result};
use crate::geometry::{eval_class_integrate, solve_torus_data, Real, TorusSolution};
use crate::homology::{H3Class, HomologyClass};
use crate::homs::{enumerate_fully_reduced, normalize_class, HomDerivs};
use crate::nilalg::{h2_pushforward, h3_pushforward, AutWord};
use crate::Rational;

/// `gcd(gcd(m, n), (mk + nℓ)/d)` with absolute values.
pub fn aut_size_formula(d: i64, k: i64, l: i64, m: i64, n: i64) -> Result<i64> {
    if m == 0 {
        return Err(Error::ZeroM);
    }
    let mu = gcd(m, n);
    if d <= 0 || mu % d != 0 {
        return Err(Error::NotADivisor { d, g: mu });
    }
    Ok(gcd(mu, (m * k + n * l) / d))
}

fn int_entry(q: &Rational) -> Result<i64> {
    if !q.is_integer() {
        return Err(Error::InvalidHom);
    }
    q.to_integer().to_i64().ok_or(Error::InvalidHom)
}

/// `[Λ : Z²]` for the lattice `Λ = {v : exp(h(v)) ∈ Γ}`, as the gcd of the
/// 2×2 minors of the rows `(0, g)`, `(∂h₃)`, `(∂h₄ + ½∂h₁∂h₂ − correction)`.
pub fn aut_size_smith(h: &HomDerivs) -> Result<i64> {
    if !h.is_valid() {
        return Err(Error::InvalidHom);
    }
    if !h.p(1).is_zero() || !h.p(2).is_zero() {
        return Err(Error::NotReduced);
    }
    let (a, b) = (int_entry(h.q(1))?, int_entry(h.q(2))?);
    if a == 0 {
        return Err(Error::DegenerateDq);
    }
    let g = gcd(a, b);
    let (ab, bb) = (a / g, b / g);
    let half = Rational::new(1.into(), 2.into());
    let row4_q = h.q(4) + &half * h.q(1) * h.q(2)
        - Rational::from_integer(BigInt::from(g * (g - 1) / 2 * ab * bb));
    let rows = [
        (0, g),
        (int_entry(h.p(3))?, int_entry(h.q(3))?),
        (int_entry(h.p(4))?, int_entry(&row4_q)?),
    ];
    let minor = |i: usize, j: usize| rows[i].0 * rows[j].1 - rows[i].1 * rows[j].0;
    let index = gcd(gcd(minor(0, 1), minor(0, 2)), minor(1, 2));
    if index == 0 {
        return Err(Error::Obstructed);
    }
    Ok(index)
}

/// The labels `(k, ℓ)` under which `aut_size_formula` reproduces
/// `aut_size_smith` for a fully reduced `h` of class `[m, m, n, n]` with
/// `∂_q h₁ = −sgn(m)d`. The map is a bijection onto `1..=d × 1..=|m|/d`.
pub fn aut_labels(h: &HomDerivs, m: i64, n: i64) -> Result<(i64, i64)> {
    if m == 0 {
        return Err(Error::ZeroM);
    }
    let d = int_entry(h.q(1))?.abs();
    let span = m.abs() / d;
    let l_h = int_entry(h.q(3))?;
    let k_h = int_entry(&(h.q(4) + Rational::new(d.into(), 2.into())))?;
    if !(0..span).contains(&l_h) {
        return Err(Error::LabelRange(format!("∂_q h₃ = {l_h} outside [0, {span})")));
    }
    let k = (k_h - m.signum() * n / d - 1).rem_euclid(d) + 1;
    Ok((k, span - l_h))
}

/// `sgn(m)(m² + n²)/gcd(m, n)·(E₁₃₄ + E₂₃₄)`.
pub fn component_eval_class(m: i64, n: i64) -> Result<H3Class> {
    if m == 0 {
        return Err(Error::ZeroM);
    }
    let c = Rational::new(
        BigInt::from(m.signum()) * (BigInt::from(m) * m + BigInt::from(n) * n),
        BigInt::from(gcd(m, n)),
    );
    Ok(H3Class::diagonal(c))
}

/// One connected component of the moduli space in class `[m, m, n, n]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ModuliComponent<F> {
    pub m: i64,
    pub n: i64,
    pub d: i64,
    pub k: i64,
    pub l: i64,
    /// `(k, ℓ)` as seen by [`aut_size_formula`].
    pub aut_k: i64,
    pub aut_l: i64,
    pub hom: HomDerivs,
    pub solution: TorusSolution<F>,
    pub aut_size: i64,
    pub eval_class: H3Class,
}

pub fn moduli_component<F: Real>(m: i64, n: i64, d: i64, k: i64, l: i64) -> Result<ModuliComponent<F>> {
    let hom = crate::homs::reduced_hom(m, n, d, k, l)?;
    let solution = solve_torus_data(&hom)?;
    let aut_size = aut_size_smith(&hom)?;
    let (aut_k, aut_l) = aut_labels(&hom, m, n)?;
    let eval_class = eval_class_integrate(&solution);
    Ok(ModuliComponent {
        m,
        n,
        d,
        k,
        l,
        aut_k,
        aut_l,
        hom,
        solution,
        aut_size,
        eval_class,
    })
}

/// All components of class `[m, m, n, n]`, ordered by `(d, ℓ, k)`.
pub fn moduli_components<F: Real>(m: i64, n: i64) -> Result<Vec<ModuliComponent<F>>> {
    enumerate_fully_reduced(m, n)?
        .into_iter()
        .map(|e| moduli_component(m, n, e.d, e.k, e.l))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Closed,
    Enumerated,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Closed => "closed",
            Method::Enumerated => "enumerated",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GwResult {
    pub input_class: HomologyClass,
    pub normalized: HomologyClass,
    pub m: i64,
    pub n: i64,
    pub gw: H3Class,
    pub method: Method,
}

/// `(m, n)` with `A = [ma, mb, na, nb]`, `gcd(a, b) = 1` and `m > 0`, or
/// `m = 0, n ≥ 0` when `A₁₃ = A₂₃ = 0`.
pub fn class_parameters(a: &HomologyClass) -> Result<(i64, i64)> {
    if !a.plucker_holds() {
        return Err(Error::Plucker(*a));
    }
    let m = gcd(a.a13, a.a23);
    if m == 0 {
        return Ok((0, gcd(a.a14, a.a24)));
    }
    let n = if a.a13 != 0 {
        a.a14 / (a.a13 / m)
    } else {
        a.a24 / (a.a23 / m)
    };
    Ok((m, n))
}

/// `(m² + n²)σ₂(μ)/μ³·(A₁₃E₁₃₄ + A₂₃E₂₃₄)` with `μ = gcd(m, n)`; zero when
/// `m = 0`.
pub fn gw_closed_form(a: &HomologyClass) -> Result<GwResult> {
    let (m, n) = class_parameters(a)?;
    let gw = if m == 0 {
        H3Class::zero()
    } else {
        let mu = gcd(m, n);
        let coeff = Rational::new(
            (BigInt::from(m) * m + BigInt::from(n) * n) * sigma(2, mu)?,
            BigInt::from(mu).pow(3),
        );
        H3Class::new(
            &coeff * Rational::from_integer(a.a13.into()),
            &coeff * Rational::from_integer(a.a23.into()),
            Rational::zero(),
        )
    };
    Ok(GwResult {
        input_class: *a,
        normalized: HomologyClass::normal(m, n),
        m,
        n,
        gw,
        method: Method::Closed,
    })
}

/// Normalise `A` to `[m, m, n, n]`, sum `eval/|Aut|` over all components and
/// push the result back along the inverse word.
pub fn gw_enumerated(a: &HomologyClass) -> Result<GwResult> {
    let (w, normalized): (AutWord, HomologyClass) = normalize_class(a)?;
    let (m, n) = (normalized.a13, normalized.a14);
    let gw = if m == 0 {
        H3Class::zero()
    } else {
        let mut weight = Rational::zero();
        for e in enumerate_fully_reduced(m, n)? {
            weight += Rational::new(1.into(), aut_size_smith(&e.h)?.into());
        }
        let local = component_eval_class(m, n)?.scale(&weight);
        h3_pushforward(&w.inverse(), &local)?
    };
    debug_assert_eq!(h2_pushforward(&w.inverse(), &normalized), *a);
    Ok(GwResult {
        input_class: *a,
        normalized,
        m,
        n,
        gw,
        method: Method::Enumerated,
    })
}
