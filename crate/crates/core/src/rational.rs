//! Exact rational arithmetic for toughness values and proof inequalities.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A reduced fraction `num/den` with `den >= 1`.
///
/// Arithmetic panics on `i64` overflow; all values in this crate are ratios
/// of vertex counts and small polynomial expressions in them.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    pub fn new(num: i64, den: i64) -> Result<Self, Error> {
        if den == 0 {
            return Err(Error::InvalidParameter("zero denominator".into()));
        }
        Ok(Self::reduce(num as i128, den as i128))
    }

    pub const fn integer(v: i64) -> Self {
        Rational { num: v, den: 1 }
    }

    /// `a / b` for counts; panics if `b == 0`.
    pub fn ratio(a: usize, b: usize) -> Self {
        assert!(b != 0, "ratio with zero denominator");
        Self::reduce(a as i128, b as i128)
    }

    fn reduce(num: i128, den: i128) -> Self {
        let (mut num, mut den) = if den < 0 { (-num, -den) } else { (num, den) };
        let g = num.gcd(&den);
        if g > 1 {
            num /= g;
            den /= g;
        }
        Rational {
            num: i64::try_from(num).expect("rational numerator overflow"),
            den: i64::try_from(den).expect("rational denominator overflow"),
        }
    }

    pub const fn numer(self) -> i64 {
        self.num
    }

    pub const fn denom(self) -> i64 {
        self.den
    }

    pub const fn is_integer(self) -> bool {
        self.den == 1
    }

    pub fn floor(self) -> i64 {
        Integer::div_floor(&self.num, &self.den)
    }

    pub fn ceil(self) -> i64 {
        -Integer::div_floor(&-self.num, &self.den)
    }

    pub fn is_negative(self) -> bool {
        self.num < 0
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::ZERO
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::integer(v)
    }
}

impl From<usize> for Rational {
    fn from(v: usize) -> Self {
        Rational::integer(i64::try_from(v).expect("count fits in i64"))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational::reduce(
            self.num as i128 * rhs.den as i128 + rhs.num as i128 * self.den as i128,
            self.den as i128 * rhs.den as i128,
        )
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        self + (-rhs)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational::reduce(
            self.num as i128 * rhs.num as i128,
            self.den as i128 * rhs.den as i128,
        )
    }
}

impl Div for Rational {
    type Output = Rational;
    /// Panics on division by zero.
    fn div(self, rhs: Rational) -> Rational {
        assert!(rhs.num != 0, "division by zero rational");
        Rational::reduce(
            self.num as i128 * rhs.den as i128,
            self.den as i128 * rhs.num as i128,
        )
    }
}

/// Always renders as `p/q`, including integers (`1/1`, `0/1`).
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `p/q` or a bare integer `p`.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidParameter(format!("not a rational: {s:?}"));
        let s = s.trim();
        match s.split_once('/') {
            Some((p, q)) => {
                let p: i64 = p.trim().parse().map_err(|_| bad())?;
                let q: i64 = q.trim().parse().map_err(|_| bad())?;
                Rational::new(p, q)
            }
            None => match s.split_once('.') {
                // Finite decimals such as "0.7".
                Some((int, frac))
                    if !frac.is_empty() && frac.bytes().all(|b| b.is_ascii_digit()) =>
                {
                    let neg = int.starts_with('-');
                    let int: i64 = match int.trim_start_matches(['-', '+']) {
                        "" => 0,
                        t => t.parse().map_err(|_| bad())?,
                    };
                    let scale = 10i64.checked_pow(frac.len() as u32).ok_or_else(bad)?;
                    let f: i64 = frac.parse().map_err(|_| bad())?;
                    let p = int
                        .checked_mul(scale)
                        .and_then(|v| v.checked_add(f))
                        .ok_or_else(bad)?;
                    Rational::new(if neg { -p } else { p }, scale)
                }
                _ => s.parse::<i64>().map(Rational::integer).map_err(|_| bad()),
            },
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
