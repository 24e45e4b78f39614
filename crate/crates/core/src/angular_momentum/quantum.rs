use std::fmt;

/// A non-negative angular momentum stored as `2J`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfIntegerJ {
    twice_j: u32,
}

impl HalfIntegerJ {
    pub const fn from_twice(twice_j: u32) -> Self {
        Self { twice_j }
    }

    pub const fn integer(j: u32) -> Self {
        Self { twice_j: 2 * j }
    }

    pub const fn twice(self) -> u32 {
        self.twice_j
    }

    pub fn is_integer(self) -> bool {
        self.twice_j.is_multiple_of(2)
    }

    pub fn value(self) -> f64 {
        f64::from(self.twice_j) / 2.0
    }

    /// Number of magnetic sublevels, `2J + 1`.
    pub fn multiplicity(self) -> usize {
        self.twice_j as usize + 1
    }

    /// Projections `-J, -J+1, ..., J`.
    pub fn projections(self) -> impl DoubleEndedIterator<Item = HalfInt> + Clone {
        let tj = self.twice_j as i32;
        (0..=self.twice_j as i32).map(move |k| HalfInt::from_twice(2 * k - tj))
    }
}

impl From<u32> for HalfIntegerJ {
    fn from(j: u32) -> Self {
        Self::integer(j)
    }
}

impl fmt::Display for HalfIntegerJ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice_j / 2)
        } else {
            write!(f, "{}/2", self.twice_j)
        }
    }
}

/// A signed half-integer (magnetic projection) stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    twice: i32,
}

impl HalfInt {
    pub const fn from_twice(twice: i32) -> Self {
        Self { twice }
    }

    pub const fn integer(m: i32) -> Self {
        Self { twice: 2 * m }
    }

    pub const fn twice(self) -> i32 {
        self.twice
    }

    pub fn value(self) -> f64 {
        f64::from(self.twice) / 2.0
    }
}

impl From<i32> for HalfInt {
    fn from(m: i32) -> Self {
        Self::integer(m)
    }
}

impl std::ops::Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_twice(-self.twice)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}
