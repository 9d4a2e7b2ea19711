//! The two-step nilpotent group `N` (Heisenberg group times `R`), its Lie
//! algebra, the integer lattice `Γ`, and the automorphisms `φ₁, φ₂` of `Γ`.
//!
//! The group is modelled by upper-triangular matrices
//!
//! ```text
//! | 1 x z 0 |
//! | 0 1 y 0 |
//! | 0 0 1 0 |
//! | 0 0 0 t |
//! ```
//!
//! with `t > 0` stored through its logarithm, and the Lie algebra basis is
//! `n₁ = ∂_y`, `n₂ = ∂_x`, `n₃ = ∂_t`, `n₄ = ∂_z`. All operations are generic
//! over the coordinate ring so the same code serves exact rationals and
//! floating point.

use std::fmt::Debug;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Num;

use crate::error::{Error, Result};
use crate::homology::{H3Class, HomologyClass};
use crate::sl2z::Sl2z;

/// Coordinate ring for Lie algebra and group elements.
pub trait Scalar: Clone + PartialEq + Debug + Num + Neg<Output = Self> {
    fn two() -> Self {
        Self::one() + Self::one()
    }

    fn half(&self) -> Self {
        self.clone() / Self::two()
    }
}

impl<T> Scalar for T where T: Clone + PartialEq + Debug + Num + Neg<Output = T> {}

/// Scalars that can say whether they are integers.
pub trait Integrality {
    fn is_integral(&self) -> bool;
}

impl<T: Clone + Integer> Integrality for Ratio<T> {
    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

impl Integrality for f64 {
    fn is_integral(&self) -> bool {
        self.is_finite() && self.fract() == 0.0
    }
}

impl Integrality for f32 {
    fn is_integral(&self) -> bool {
        self.is_finite() && self.fract() == 0.0
    }
}

/// `y·n₁ + x·n₂ + t·n₃ + z·n₄`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LieAlgElem<T> {
    pub y: T,
    pub x: T,
    pub t: T,
    pub z: T,
}

impl<T: Scalar> LieAlgElem<T> {
    /// Coordinates in basis order `n₁, n₂, n₃, n₄`.
    pub fn new(c1: T, c2: T, c3: T, c4: T) -> Self {
        Self {
            y: c1,
            x: c2,
            t: c3,
            z: c4,
        }
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::zero())
    }

    /// Basis vector `n_i`, `i ∈ 1..=4`.
    pub fn basis(i: usize) -> Self {
        let mut e = Self::zero();
        *e.coeff_mut(i) = T::one();
        e
    }

    pub fn coeff(&self, i: usize) -> &T {
        match i {
            1 => &self.y,
            2 => &self.x,
            3 => &self.t,
            4 => &self.z,
            _ => panic!("basis index {i} out of range 1..=4"),
        }
    }

    pub fn coeff_mut(&mut self, i: usize) -> &mut T {
        match i {
            1 => &mut self.y,
            2 => &mut self.x,
            3 => &mut self.t,
            4 => &mut self.z,
            _ => panic!("basis index {i} out of range 1..=4"),
        }
    }

    pub fn to_array(&self) -> [T; 4] {
        [self.y.clone(), self.x.clone(), self.t.clone(), self.z.clone()]
    }

    pub fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(
            self.y.clone() * c.clone(),
            self.x.clone() * c.clone(),
            self.t.clone() * c.clone(),
            self.z.clone() * c.clone(),
        )
    }

    /// Lie bracket. Only `[n₂, n₁] = n₄` is nonzero among basis brackets.
    pub fn bracket(&self, other: &Self) -> Self {
        let c4 = self.x.clone() * other.y.clone() - other.x.clone() * self.y.clone();
        Self::new(T::zero(), T::zero(), T::zero(), c4)
    }

    /// Euclidean inner product; the basis `n₁..n₄` is orthonormal.
    pub fn dot(&self, other: &Self) -> T {
        self.y.clone() * other.y.clone()
            + self.x.clone() * other.x.clone()
            + self.t.clone() * other.t.clone()
            + self.z.clone() * other.z.clone()
    }

    pub fn map<U, F: Fn(&T) -> U>(&self, f: F) -> LieAlgElem<U> {
        LieAlgElem {
            y: f(&self.y),
            x: f(&self.x),
            t: f(&self.t),
            z: f(&self.z),
        }
    }
}

impl<T: Scalar> Add for LieAlgElem<T> {
    type Output = Self;

    fn add(self, o: Self) -> Self {
        Self::new(self.y + o.y, self.x + o.x, self.t + o.t, self.z + o.z)
    }
}

impl<T: Scalar> Sub for LieAlgElem<T> {
    type Output = Self;

    fn sub(self, o: Self) -> Self {
        Self::new(self.y - o.y, self.x - o.x, self.t - o.t, self.z - o.z)
    }
}

impl<'a, T: Scalar> Add<&'a LieAlgElem<T>> for &'a LieAlgElem<T> {
    type Output = LieAlgElem<T>;

    fn add(self, o: Self) -> LieAlgElem<T> {
        self.clone() + o.clone()
    }
}

impl<'a, T: Scalar> Sub<&'a LieAlgElem<T>> for &'a LieAlgElem<T> {
    type Output = LieAlgElem<T>;

    fn sub(self, o: Self) -> LieAlgElem<T> {
        self.clone() - o.clone()
    }
}

impl<T: Scalar> Neg for LieAlgElem<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new(-self.y, -self.x, -self.t, -self.z)
    }
}

/// `[X, Y]`.
pub fn bracket<T: Scalar>(x: &LieAlgElem<T>, y: &LieAlgElem<T>) -> LieAlgElem<T> {
    x.bracket(y)
}

/// `X + Y + ½[X, Y]`, the full Baker-Campbell-Hausdorff product in a
/// two-step nilpotent algebra.
pub fn bch_mul<T: Scalar>(x: &LieAlgElem<T>, y: &LieAlgElem<T>) -> LieAlgElem<T> {
    x + y + x.bracket(y).half_elem()
}

impl<T: Scalar> LieAlgElem<T> {
    fn half_elem(&self) -> Self {
        self.map(|c| c.half())
    }
}

/// Group element in coordinates `(x, y, z, log t)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GroupElem<T> {
    pub x: T,
    pub y: T,
    pub z: T,
    pub logt: T,
}

impl<T: Scalar> GroupElem<T> {
    pub fn new(x: T, y: T, z: T, logt: T) -> Self {
        Self { x, y, z, logt }
    }

    pub fn identity() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::zero())
    }

    /// Matrix product: `(x,y,z,s)·(x',y',z',s') = (x+x', y+y', z+z'+xy', s+s')`.
    pub fn mul(&self, o: &Self) -> Self {
        Self::new(
            self.x.clone() + o.x.clone(),
            self.y.clone() + o.y.clone(),
            self.z.clone() + o.z.clone() + self.x.clone() * o.y.clone(),
            self.logt.clone() + o.logt.clone(),
        )
    }

    pub fn inverse(&self) -> Self {
        Self::new(
            -self.x.clone(),
            -self.y.clone(),
            self.x.clone() * self.y.clone() - self.z.clone(),
            -self.logt.clone(),
        )
    }

    pub fn exp(v: &LieAlgElem<T>) -> Self {
        Self::new(
            v.x.clone(),
            v.y.clone(),
            v.z.clone() + (v.y.clone() * v.x.clone()).half(),
            v.t.clone(),
        )
    }

    pub fn log(&self) -> LieAlgElem<T> {
        LieAlgElem::new(
            self.y.clone(),
            self.x.clone(),
            self.logt.clone(),
            self.z.clone() - (self.x.clone() * self.y.clone()).half(),
        )
    }

    pub fn map<U, F: Fn(&T) -> U>(&self, f: F) -> GroupElem<U> {
        GroupElem {
            x: f(&self.x),
            y: f(&self.y),
            z: f(&self.z),
            logt: f(&self.logt),
        }
    }
}

impl<T: Scalar + Integrality> GroupElem<T> {
    /// Membership in `Γ`: integer `x, y, z` and `log t`.
    pub fn in_lattice(&self) -> bool {
        self.x.is_integral()
            && self.y.is_integral()
            && self.z.is_integral()
            && self.logt.is_integral()
    }
}

pub fn exp<T: Scalar>(v: &LieAlgElem<T>) -> GroupElem<T> {
    GroupElem::exp(v)
}

pub fn log<T: Scalar>(g: &GroupElem<T>) -> LieAlgElem<T> {
    g.log()
}

pub fn group_mul<T: Scalar>(a: &GroupElem<T>, b: &GroupElem<T>) -> GroupElem<T> {
    a.mul(b)
}

pub fn in_lattice<T: Scalar + Integrality>(g: &GroupElem<T>) -> bool {
    g.in_lattice()
}

/// Generators of the `SL(2, Z)` action on `Γ` and on homology.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AutGen {
    Sigma1,
    Sigma2,
    Sigma1Inv,
    Sigma2Inv,
}

impl AutGen {
    pub const ALL: [AutGen; 4] = [
        AutGen::Sigma1,
        AutGen::Sigma2,
        AutGen::Sigma1Inv,
        AutGen::Sigma2Inv,
    ];

    pub fn inverse(self) -> Self {
        match self {
            AutGen::Sigma1 => AutGen::Sigma1Inv,
            AutGen::Sigma2 => AutGen::Sigma2Inv,
            AutGen::Sigma1Inv => AutGen::Sigma1,
            AutGen::Sigma2Inv => AutGen::Sigma2,
        }
    }

    /// `σ₁ = [[0,-1],[1,0]]`, `σ₂ = [[1,1],[0,1]]`.
    pub fn matrix(self) -> Sl2z {
        match self {
            AutGen::Sigma1 => Sl2z::S,
            AutGen::Sigma2 => Sl2z::T,
            AutGen::Sigma1Inv => Sl2z::S.inverse(),
            AutGen::Sigma2Inv => Sl2z::T.inverse(),
        }
    }

    /// The automorphism `φ_i` (or its inverse) of `N` preserving `Γ`.
    pub fn apply<T: Scalar>(self, g: &GroupElem<T>) -> GroupElem<T> {
        let GroupElem { x, y, z, logt } = g.clone();
        match self {
            // (x, y, z) ↦ (-y, x, z - xy)
            AutGen::Sigma1 => GroupElem::new(-y.clone(), x.clone(), z - x * y, logt),
            // (x, y, z) ↦ (y, -x, z - xy)
            AutGen::Sigma1Inv => GroupElem::new(y.clone(), -x.clone(), z - x * y, logt),
            // (x, y, z) ↦ (x + y, y, z + y(y+1)/2)
            AutGen::Sigma2 => {
                let shift = (y.clone() * (y.clone() + T::one())).half();
                GroupElem::new(x + y.clone(), y, z + shift, logt)
            }
            AutGen::Sigma2Inv => {
                let shift = (y.clone() * (y.clone() + T::one())).half();
                GroupElem::new(x - y.clone(), y, z - shift, logt)
            }
        }
    }
}

/// A word in `σ₁^{±1}, σ₂^{±1}`, applied left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AutWord(pub Vec<AutGen>);

impl AutWord {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, g: AutGen) {
        self.0.push(g);
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.iter().rev().map(|g| g.inverse()).collect())
    }

    /// The matrix of the whole word acting on column vectors; the first
    /// letter acts first.
    pub fn matrix(&self) -> Sl2z {
        self.0
            .iter()
            .fold(Sl2z::IDENTITY, |acc, g| g.matrix() * acc)
    }
}

impl FromIterator<AutGen> for AutWord {
    fn from_iter<I: IntoIterator<Item = AutGen>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

pub fn aut_apply<T: Scalar>(w: &AutWord, g: &GroupElem<T>) -> GroupElem<T> {
    w.0.iter().fold(g.clone(), |acc, gen| gen.apply(&acc))
}

/// Push a second-homology class forward: each generator acts on the pairs
/// `(A13, A23)` and `(A14, A24)` as column vectors.
pub fn h2_pushforward(w: &AutWord, a: &HomologyClass) -> HomologyClass {
    let m = w.matrix();
    let (a13, a23) = m.apply((a.a13, a.a23));
    let (a14, a24) = m.apply((a.a14, a.a24));
    HomologyClass::new(a13, a23, a14, a24)
}

/// Push a third-homology class forward: the pair `(E134, E234)` transforms
/// like `(A13, A23)`. Classes with an `E124` part are rejected.
pub fn h3_pushforward(w: &AutWord, c: &H3Class) -> Result<H3Class> {
    if !num_traits::Zero::is_zero(&c.e124) {
        return Err(Error::NonzeroE124);
    }
    let rows = w.matrix().rows();
    let to_q = |v: i64| crate::Rational::from_integer(v.into());
    let e134 = to_q(rows[0][0]) * &c.e134 + to_q(rows[0][1]) * &c.e234;
    let e234 = to_q(rows[1][0]) * &c.e134 + to_q(rows[1][1]) * &c.e234;
    Ok(H3Class::new(e134, e234, c.e124.clone()))
}
