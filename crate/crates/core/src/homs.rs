//! Lie algebra homomorphisms `R² → 𝔫` stored through their derivative
//! matrices, and their reduction under `SL(2, Z)` reparametrisation.

use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::arith::{divisors, gcd};
use crate::error::{Error, Result};
use crate::homology::HomologyClass;
use crate::nilalg::{AutGen, AutWord, GroupElem, LieAlgElem};
use crate::sl2z::Sl2z;
use crate::Rational;

/// A homomorphism `h` with `h(p, q) = p·dp + q·dq`.
///
/// Row `i` of the associated 4×2 matrix is `(dp.coeff(i), dq.coeff(i))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct HomDerivs {
    pub dp: LieAlgElem<Rational>,
    pub dq: LieAlgElem<Rational>,
}

fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn to_i64(q: &Rational) -> Option<i64> {
    if q.is_integer() {
        q.to_integer().to_i64()
    } else {
        None
    }
}

impl HomDerivs {
    pub fn new(dp: LieAlgElem<Rational>, dq: LieAlgElem<Rational>) -> Self {
        Self { dp, dq }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// Build from rows `(∂_p h_i, ∂_q h_i)`, `i = 1..4`.
    pub fn from_rows(rows: [(Rational, Rational); 4]) -> Self {
        let [(p1, q1), (p2, q2), (p3, q3), (p4, q4)] = rows;
        Self::new(LieAlgElem::new(p1, p2, p3, p4), LieAlgElem::new(q1, q2, q3, q4))
    }

    pub fn rows(&self) -> [(Rational, Rational); 4] {
        [1, 2, 3, 4].map(|i| (self.dp.coeff(i).clone(), self.dq.coeff(i).clone()))
    }

    pub fn p(&self, i: usize) -> &Rational {
        self.dp.coeff(i)
    }

    pub fn q(&self, i: usize) -> &Rational {
        self.dq.coeff(i)
    }

    /// `[∂_p h, ∂_q h] = 0`.
    pub fn is_abelian(&self) -> bool {
        self.dp.bracket(&self.dq).is_zero()
    }

    /// `exp(∂_p h), exp(∂_q h) ∈ Γ`, i.e. `h` descends to a map of tori.
    pub fn is_integral(&self) -> bool {
        GroupElem::exp(&self.dp).in_lattice() && GroupElem::exp(&self.dq).in_lattice()
    }

    pub fn is_valid(&self) -> bool {
        self.is_abelian() && self.is_integral()
    }

    /// `A_ij = ∂_p h_i ∂_q h_j − ∂_q h_i ∂_p h_j`.
    pub fn minor(&self, i: usize, j: usize) -> Rational {
        self.p(i) * self.q(j) - self.q(i) * self.p(j)
    }

    /// Right multiplication of the 4×2 matrix by `Φ`.
    pub fn act(&self, phi: &Sl2z) -> Self {
        let [[a, b], [c, d]] = phi.rows();
        let dp = self.dp.scale(&int(a)) + self.dq.scale(&int(c));
        let dq = self.dp.scale(&int(b)) + self.dq.scale(&int(d));
        Self::new(dp, dq)
    }

    /// Fully reduced: `∂_p h₁ = ∂_p h₂ = 0` and `0 ≤ ∂_q h₃ < ∂_p h₃`.
    pub fn is_fully_reduced(&self) -> bool {
        self.p(1).is_zero()
            && self.p(2).is_zero()
            && self.p(3).is_positive()
            && !self.q(3).is_negative()
            && self.q(3) < self.p(3)
    }
}

impl fmt::Display for HomDerivs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.rows();
        write!(f, "[")?;
        for (i, (p, q)) in rows.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{p}, {q}")?;
        }
        write!(f, "]")
    }
}

pub fn validate(h: &HomDerivs) -> bool {
    h.is_valid()
}

pub fn homology_class(h: &HomDerivs) -> Result<HomologyClass> {
    if !h.is_valid() {
        return Err(Error::InvalidHom);
    }
    let entry = |i, j| to_i64(&h.minor(i, j)).ok_or(Error::InvalidHom);
    Ok(HomologyClass::new(
        entry(1, 3)?,
        entry(2, 3)?,
        entry(1, 4)?,
        entry(2, 4)?,
    ))
}

pub fn plucker_holds(a: &HomologyClass) -> bool {
    a.plucker_holds()
}

pub fn sl2z_act(h: &HomDerivs, phi: [[i64; 2]; 2]) -> Result<HomDerivs> {
    Ok(h.act(&Sl2z::new(phi)?))
}

/// Bezout coefficients `(x, y)` with `a·x + b·y = gcd(a, b)`.
fn bezout(a: i64, b: i64) -> (i64, i64) {
    let e = a.extended_gcd(&b);
    if e.gcd < 0 {
        (-e.x, -e.y)
    } else {
        (e.x, e.y)
    }
}

fn floor_div(a: &Rational, b: &Rational) -> i64 {
    (a / b)
        .floor()
        .to_integer()
        .to_i64()
        .expect("quotient fits in i64")
}

/// The unique fully reduced representative of the `SL(2, Z)` orbit of `h`,
/// together with the `Φ` that reaches it.
pub fn fully_reduce(h: &HomDerivs) -> Result<(Sl2z, HomDerivs)> {
    if !h.is_valid() {
        return Err(Error::InvalidHom);
    }
    let cls = homology_class(h)?;
    if cls.a13 == 0 && cls.a23 == 0 {
        return Err(Error::Obstructed);
    }
    if h.is_fully_reduced() {
        return Ok((Sl2z::IDENTITY, h.clone()));
    }
    // rows 1 and 2 are integral multiples of one primitive (vp, vq)
    let row = [1, 2]
        .into_iter()
        .map(|i| (to_i64(h.p(i)).unwrap(), to_i64(h.q(i)).unwrap()))
        .find(|&(p, q)| p != 0 || q != 0)
        .ok_or(Error::Obstructed)?;
    let g = gcd(row.0, row.1);
    let (vp, vq) = (row.0 / g, row.1 / g);
    let (x, y) = bezout(vp, vq);
    let mut phi = Sl2z::new([[vq, x], [-vp, y]])?;
    let mut out = h.act(&phi);
    if out.p(3).is_negative() {
        phi = phi * Sl2z::MINUS_IDENTITY;
        out = out.act(&Sl2z::MINUS_IDENTITY);
    }
    let shear = Sl2z::shear(-floor_div(out.q(3), out.p(3)));
    phi = phi * shear;
    out = out.act(&shear);
    debug_assert!(out.is_fully_reduced());
    Ok((phi, out))
}

/// One fully reduced representative in class `[m, m, n, n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducedHom {
    pub d: i64,
    pub k: i64,
    /// Summation index in `1..=|m|/d`; `∂_q h₃ = ℓ mod (|m|/d)`.
    pub l: i64,
    pub h: HomDerivs,
}

/// The fully reduced homomorphism with parameters `(d, k, ℓ)` in class
/// `[m, m, n, n]`. `d` must divide `gcd(m, n)`.
pub fn reduced_hom(m: i64, n: i64, d: i64, k: i64, l: i64) -> Result<HomDerivs> {
    if m == 0 {
        return Err(Error::ZeroM);
    }
    let g = gcd(m, n);
    if d <= 0 || g % d != 0 {
        return Err(Error::NotADivisor { d, g });
    }
    let s = m.signum();
    let p3 = m.abs() / d;
    let q4 = int(k) - Rational::new(d.into(), 2.into());
    Ok(HomDerivs::from_rows([
        (int(0), int(-s * d)),
        (int(0), int(-s * d)),
        (int(p3), int(l.rem_euclid(p3))),
        (int(s * n / d), q4),
    ]))
}

/// All fully reduced homomorphisms in class `[m, m, n, n]`, one per torus,
/// ordered by `(d, ℓ, k)`.
pub fn enumerate_fully_reduced(m: i64, n: i64) -> Result<Vec<ReducedHom>> {
    if m == 0 {
        return Err(Error::ZeroM);
    }
    let mut out = Vec::new();
    for d in divisors(gcd(m, n))? {
        for l in 1..=m.abs() / d {
            for k in 1..=d {
                out.push(ReducedHom {
                    d,
                    k,
                    l,
                    h: reduced_hom(m, n, d, k, l)?,
                });
            }
        }
    }
    Ok(out)
}

/// Euclidean algorithm on a column vector by `σ₁`, `σ₂^{±1}`, ending at
/// `(g, g)` with `g = gcd > 0`.
fn euclid_word(mut u: i64, mut v: i64) -> AutWord {
    let mut w = AutWord::empty();
    let mut apply = |g: AutGen, u: &mut i64, v: &mut i64| {
        let (a, b) = g.matrix().apply((*u, *v));
        *u = a;
        *v = b;
        w.push(g);
    };
    while v != 0 {
        let q = u.div_euclid(v);
        let step = if q > 0 { AutGen::Sigma2Inv } else { AutGen::Sigma2 };
        for _ in 0..q.abs() {
            apply(step, &mut u, &mut v);
        }
        apply(AutGen::Sigma1, &mut u, &mut v);
    }
    if u < 0 {
        apply(AutGen::Sigma1, &mut u, &mut v);
        apply(AutGen::Sigma1, &mut u, &mut v);
    }
    apply(AutGen::Sigma1, &mut u, &mut v);
    apply(AutGen::Sigma2, &mut u, &mut v);
    w
}

/// A word `w` with `w_* A = [m, m, n, n]`.
///
/// `m = gcd(A13, A23) > 0` unless `A13 = A23 = 0`; the sign of `n` is then
/// whatever the action forces. When `A13 = A23 = 0` the word normalises
/// `(A14, A24)` instead and `n > 0`.
pub fn normalize_class(a: &HomologyClass) -> Result<(AutWord, HomologyClass)> {
    if !a.plucker_holds() {
        return Err(Error::Plucker(*a));
    }
    if a.is_zero() {
        return Ok((AutWord::empty(), *a));
    }
    let (u, v) = if a.a13 != 0 || a.a23 != 0 {
        (a.a13, a.a23)
    } else {
        (a.a14, a.a24)
    };
    let w = if u == v && u > 0 && a.a14 == a.a24 {
        AutWord::empty()
    } else {
        euclid_word(u, v)
    };
    let out = crate::nilalg::h2_pushforward(&w, a);
    debug_assert!(out.a13 == out.a23 && out.a14 == out.a24);
    Ok((w, out))
}
