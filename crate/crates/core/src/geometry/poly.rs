//! Exact polynomials in three variables `(λ, p, q)`.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::Rational;

/// Sparse polynomial; keys are exponents `[i, j, k]` of `λ^i p^j q^k`.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly3 {
    terms: BTreeMap<[u32; 3], Rational>,
}

impl Poly3 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, [0, 0, 0])
    }

    pub fn monomial(c: Rational, exps: [u32; 3]) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Self { terms }
    }

    /// The variable with index `i` (0 = λ, 1 = p, 2 = q).
    pub fn var(i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        Self::monomial(Rational::one(), e)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    fn insert(&mut self, e: [u32; 3], c: Rational) {
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn deriv(&self, i: usize) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut e2 = *e;
                e2[i] -= 1;
                out.insert(e2, c * Rational::from_integer(e[i].into()));
            }
        }
        out
    }

    pub fn eval(&self, at: [&Rational; 3]) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (e, c)| {
            let mut t = c.clone();
            for (x, k) in at.iter().zip(e) {
                t *= num_traits::pow((*x).clone(), *k as usize);
            }
            acc + t
        })
    }

    /// `∫₀^{b₀} ∫₀^{b₁} ∫₀^{b₂} f dλ dp dq`.
    pub fn integrate_box(&self, upper: [&Rational; 3]) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (e, c)| {
            let mut t = c.clone();
            for (b, k) in upper.iter().zip(e) {
                let k1 = *k as usize + 1;
                t *= num_traits::pow((*b).clone(), k1) / Rational::from_integer(k1.into());
            }
            acc + t
        })
    }
}

impl<'a> Add<&'a Poly3> for &'a Poly3 {
    type Output = Poly3;

    fn add(self, o: &Poly3) -> Poly3 {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.insert(*e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Poly3> for &'a Poly3 {
    type Output = Poly3;

    fn sub(self, o: &Poly3) -> Poly3 {
        self + &(-o)
    }
}

impl<'a> Neg for &'a Poly3 {
    type Output = Poly3;

    fn neg(self) -> Poly3 {
        self.scale(&-Rational::one())
    }
}

impl<'a> Mul<&'a Poly3> for &'a Poly3 {
    type Output = Poly3;

    fn mul(self, o: &Poly3) -> Poly3 {
        let mut out = Poly3::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                out.insert([e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]], c1 * c2);
            }
        }
        out
    }
}

/// A 1-form `Σ c_i d(var_i)` with polynomial coefficients.
pub type OneForm = [Poly3; 3];

/// Exterior derivative of a function.
pub fn d(f: &Poly3) -> OneForm {
    [f.deriv(0), f.deriv(1), f.deriv(2)]
}

/// Coefficient of `dλ∧dp∧dq` in `α∧β∧γ`.
pub fn wedge3(a: &OneForm, b: &OneForm, c: &OneForm) -> Poly3 {
    let minor = |i: usize, j: usize| &(&b[i] * &c[j]) - &(&b[j] * &c[i]);
    let t0 = &a[0] * &minor(1, 2);
    let t1 = &a[1] * &minor(0, 2);
    let t2 = &a[2] * &minor(0, 1);
    &(&t0 - &t1) + &t2
}
