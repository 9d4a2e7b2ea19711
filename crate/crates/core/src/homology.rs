//! Integral second-homology classes and rational third-homology classes of
//! the quotient `Γ\N`.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::Rational;

/// A class `[A13, A23, A14, A24]` in the basis `E_ij` of `H₂`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct HomologyClass {
    pub a13: i64,
    pub a23: i64,
    pub a14: i64,
    pub a24: i64,
}

impl HomologyClass {
    pub const ZERO: Self = Self::new(0, 0, 0, 0);

    pub const fn new(a13: i64, a23: i64, a14: i64, a24: i64) -> Self {
        Self { a13, a23, a14, a24 }
    }

    /// `[m, m, n, n]`.
    pub const fn normal(m: i64, n: i64) -> Self {
        Self::new(m, m, n, n)
    }

    pub fn to_array(self) -> [i64; 4] {
        [self.a13, self.a23, self.a14, self.a24]
    }

    pub fn is_zero(&self) -> bool {
        *self == Self::ZERO
    }

    /// `A13·A24 = A14·A23`, the necessary condition for a torus class.
    pub fn plucker_holds(&self) -> bool {
        i128::from(self.a13) * i128::from(self.a24) == i128::from(self.a14) * i128::from(self.a23)
    }
}

impl fmt::Display for HomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}, {}]", self.a13, self.a23, self.a14, self.a24)
    }
}

/// A class `e134·E134 + e234·E234 + e124·E124` in `H₃ ⊗ Q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct H3Class {
    pub e134: Rational,
    pub e234: Rational,
    pub e124: Rational,
}

impl H3Class {
    pub fn new(e134: Rational, e234: Rational, e124: Rational) -> Self {
        Self { e134, e234, e124 }
    }

    pub fn from_ints(e134: i64, e234: i64, e124: i64) -> Self {
        Self::new(
            Rational::from_integer(e134.into()),
            Rational::from_integer(e234.into()),
            Rational::from_integer(e124.into()),
        )
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// `c·(E134 + E234)`.
    pub fn diagonal(c: Rational) -> Self {
        Self::new(c.clone(), c, Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.e134.is_zero() && self.e234.is_zero() && self.e124.is_zero()
    }

    pub fn is_integral(&self) -> bool {
        [&self.e134, &self.e234, &self.e124]
            .iter()
            .all(|c| c.is_integer())
    }

    /// Integer coefficients, if every coefficient is integral.
    pub fn to_integers(&self) -> Option<[BigInt; 3]> {
        self.is_integral().then(|| {
            [
                self.e134.to_integer(),
                self.e234.to_integer(),
                self.e124.to_integer(),
            ]
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(
            &self.e134 * c,
            &self.e234 * c,
            &self.e124 * c,
        )
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }
}

impl Add for H3Class {
    type Output = H3Class;

    fn add(self, rhs: Self) -> Self {
        Self::new(
            self.e134 + rhs.e134,
            self.e234 + rhs.e234,
            self.e124 + rhs.e124,
        )
    }
}

impl<'a> Add<&'a H3Class> for H3Class {
    type Output = H3Class;

    fn add(self, rhs: &'a H3Class) -> Self {
        Self::new(
            self.e134 + &rhs.e134,
            self.e234 + &rhs.e234,
            self.e124 + &rhs.e124,
        )
    }
}

impl<'a> Mul<&'a Rational> for &'a H3Class {
    type Output = H3Class;

    fn mul(self, rhs: &'a Rational) -> H3Class {
        self.scale(rhs)
    }
}

impl fmt::Display for H3Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}·E134 + {}·E234 + {}·E124",
            self.e134, self.e234, self.e124
        )
    }
}
