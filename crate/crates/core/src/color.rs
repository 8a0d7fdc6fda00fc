//! Face colors as elements of the ring Z3.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

/// A face color, an element of Z3 stored by its representative in {0, 1, 2}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub struct Color(u8);

impl Color {
    pub const ZERO: Color = Color(0);
    pub const ONE: Color = Color(1);
    pub const TWO: Color = Color(2);

    pub const ALL: [Color; 3] = [Color::ZERO, Color::ONE, Color::TWO];

    /// Reduces an arbitrary integer modulo 3.
    pub fn from_int(i: i64) -> Self {
        Color(i.rem_euclid(3) as u8)
    }

    /// The integer representative in {0, 1, 2}.
    pub fn value(self) -> u8 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn as_i64(self) -> i64 {
        self.0 as i64
    }

    /// True if the two colors may sit on adjacent faces.
    pub fn adjacent_to(self, other: Color) -> bool {
        self != other
    }
}

impl Add for Color {
    type Output = Color;
    fn add(self, rhs: Color) -> Color {
        Color((self.0 + rhs.0) % 3)
    }
}

impl Add<i64> for Color {
    type Output = Color;
    fn add(self, rhs: i64) -> Color {
        Color::from_int(self.as_i64() + rhs)
    }
}

impl Sub for Color {
    type Output = Color;
    fn sub(self, rhs: Color) -> Color {
        Color((self.0 + 3 - rhs.0) % 3)
    }
}

impl Sub<i64> for Color {
    type Output = Color;
    fn sub(self, rhs: i64) -> Color {
        Color::from_int(self.as_i64() - rhs)
    }
}

impl Neg for Color {
    type Output = Color;
    fn neg(self) -> Color {
        Color((3 - self.0) % 3)
    }
}

impl From<Color> for u8 {
    fn from(c: Color) -> u8 {
        c.0
    }
}

impl TryFrom<u8> for Color {
    type Error = String;
    fn try_from(v: u8) -> Result<Self, Self::Error> {
        if v < 3 {
            Ok(Color(v))
        } else {
            Err(format!("color value {v} is not in {{0, 1, 2}}"))
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
