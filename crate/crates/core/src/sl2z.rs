use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// An integer 2×2 matrix of determinant one, `[[a, b], [c, d]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Sl2z {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl Sl2z {
    pub const IDENTITY: Self = Self { a: 1, b: 0, c: 0, d: 1 };
    /// `[[0, -1], [1, 0]]`
    pub const S: Self = Self { a: 0, b: -1, c: 1, d: 0 };
    /// `[[1, 1], [0, 1]]`
    pub const T: Self = Self { a: 1, b: 1, c: 0, d: 1 };
    pub const MINUS_IDENTITY: Self = Self { a: -1, b: 0, c: 0, d: -1 };

    pub fn new(rows: [[i64; 2]; 2]) -> Result<Self> {
        let det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0];
        if det != 1 {
            return Err(Error::NotUnimodular(det));
        }
        Ok(Self {
            a: rows[0][0],
            b: rows[0][1],
            c: rows[1][0],
            d: rows[1][1],
        })
    }

    /// `[[1, k], [0, 1]]`
    pub const fn shear(k: i64) -> Self {
        Self { a: 1, b: k, c: 0, d: 1 }
    }

    pub fn rows(&self) -> [[i64; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }

    pub fn inverse(&self) -> Self {
        Self {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: (i64, i64)) -> (i64, i64) {
        (self.a * v.0 + self.b * v.1, self.c * v.0 + self.d * v.1)
    }
}

impl Mul for Sl2z {
    type Output = Sl2z;

    fn mul(self, o: Sl2z) -> Sl2z {
        Sl2z {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }
}

impl fmt::Display for Sl2z {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}
