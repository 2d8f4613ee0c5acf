use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Integer wave vector `k = (k1, k2)` of the torus mode `e_k = exp(i(k1 x1 + k2 x2))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticeMode {
    pub k1: i64,
    pub k2: i64,
}

impl LatticeMode {
    pub const ZERO: LatticeMode = LatticeMode { k1: 0, k2: 0 };

    pub const fn new(k1: i64, k2: i64) -> Self {
        LatticeMode { k1, k2 }
    }

    /// `(k1, -k2)`
    pub const fn flip(self) -> Self {
        LatticeMode::new(self.k1, -self.k2)
    }

    pub const fn cross(self, other: Self) -> i64 {
        self.k1 * other.k2 - self.k2 * other.k1
    }

    pub const fn dot(self, other: Self) -> i64 {
        self.k1 * other.k1 + self.k2 * other.k2
    }

    pub const fn norm2(self) -> i64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        (self.norm2() as f64).sqrt()
    }

    pub const fn is_zero(self) -> bool {
        self.k1 == 0 && self.k2 == 0
    }

    pub const fn scale(self, c: i64) -> Self {
        LatticeMode::new(c * self.k1, c * self.k2)
    }

    /// Polar angle `atan2(k2, k1)`.
    pub fn angle(self) -> f64 {
        (self.k2 as f64).atan2(self.k1 as f64)
    }
}

impl From<(i64, i64)> for LatticeMode {
    fn from((k1, k2): (i64, i64)) -> Self {
        LatticeMode::new(k1, k2)
    }
}

impl Neg for LatticeMode {
    type Output = LatticeMode;
    fn neg(self) -> Self {
        LatticeMode::new(-self.k1, -self.k2)
    }
}

impl Add for LatticeMode {
    type Output = LatticeMode;
    fn add(self, o: Self) -> Self {
        LatticeMode::new(self.k1 + o.k1, self.k2 + o.k2)
    }
}

impl Sub for LatticeMode {
    type Output = LatticeMode;
    fn sub(self, o: Self) -> Self {
        LatticeMode::new(self.k1 - o.k1, self.k2 - o.k2)
    }
}

impl fmt::Display for LatticeMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.k1, self.k2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn involutions(a in -50i64..50, b in -50i64..50) {
            let k = LatticeMode::new(a, b);
            prop_assert_eq!(-(-k), k);
            prop_assert_eq!(k.flip().flip(), k);
        }

        #[test]
        fn cross_antisymmetric(a in -50i64..50, b in -50i64..50, c in -50i64..50, d in -50i64..50) {
            let k = LatticeMode::new(a, b);
            let l = LatticeMode::new(c, d);
            prop_assert_eq!(k.cross(l), -l.cross(k));
            prop_assert_eq!(k.cross(k), 0);
            prop_assert_eq!(k.dot(l), l.dot(k));
        }
    }

    #[test]
    fn norms() {
        let k = LatticeMode::new(3, -4);
        assert_eq!(k.norm2(), 25);
        assert_eq!(k.norm(), 5.0);
        assert_eq!(LatticeMode::new(1, 0).cross(LatticeMode::new(0, 1)), 1);
    }
}
