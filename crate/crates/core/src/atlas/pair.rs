use std::fmt;
use std::hash::Hash;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integer type backing the exact rationals (`i64`, `i128`, `BigInt`, ...).
pub trait ExactInt:
    Integer + Signed + Clone + FromPrimitive + ToPrimitive + fmt::Debug + fmt::Display + Hash + Send + Sync + 'static
{
}

impl<T> ExactInt for T where
    T: Integer + Signed + Clone + FromPrimitive + ToPrimitive + fmt::Debug + fmt::Display + Hash + Send + Sync + 'static
{
}

/// A point `(x, y) = (1/p, 1/q)` of the closed unit square, stored exactly.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(bound(serialize = "I: Serialize", deserialize = "I: Deserialize<'de> + ExactInt"))]
pub struct ExponentPair<I: ExactInt = i64> {
    x: Ratio<I>,
    y: Ratio<I>,
}

impl<I: ExactInt> ExponentPair<I> {
    pub fn new(x: Ratio<I>, y: Ratio<I>) -> Result<Self> {
        let unit = |v: &Ratio<I>| !v.is_negative() && *v <= Ratio::one();
        if !unit(&x) || !unit(&y) {
            return Err(Error::Domain(format!("pair ({x}, {y}) is outside the unit square")));
        }
        Ok(Self { x, y })
    }

    /// Pair `(xn/xd, yn/yd)`.
    pub fn from_fractions(xn: i64, xd: i64, yn: i64, yd: i64) -> Result<Self> {
        if xd == 0 || yd == 0 {
            return Err(Error::Domain("zero denominator".into()));
        }
        Self::new(super::rat(xn, xd), super::rat(yn, yd))
    }

    /// Parses two strings of the form `"num/den"` or `"num"`.
    pub fn parse(x: &str, y: &str) -> Result<Self> {
        Self::new(parse_rational(x)?, parse_rational(y)?)
    }

    pub fn x(&self) -> &Ratio<I> {
        &self.x
    }

    pub fn y(&self) -> &Ratio<I> {
        &self.y
    }

    /// `x - y = 1/p - 1/q`.
    pub fn gap(&self) -> Ratio<I> {
        self.x.clone() - self.y.clone()
    }

    /// `(x, y)' = (1 - y, 1 - x)`.
    pub fn dual(&self) -> Self {
        Self {
            x: Ratio::one() - self.y.clone(),
            y: Ratio::one() - self.x.clone(),
        }
    }

    pub fn is_diagonal(&self) -> bool {
        self.x == self.y
    }

    /// `(p, q)` as floats, with `1/0` mapped to infinity.
    pub fn exponents_f64(&self) -> (f64, f64) {
        let inv = |r: &Ratio<I>| {
            if r.is_zero() {
                f64::INFINITY
            } else {
                r.denom().to_f64().unwrap_or(f64::NAN) / r.numer().to_f64().unwrap_or(f64::NAN)
            }
        };
        (inv(&self.x), inv(&self.y))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        let f = |r: &Ratio<I>| r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN);
        (f(&self.x), f(&self.y))
    }

    pub(crate) fn as_point(&self) -> (Ratio<I>, Ratio<I>) {
        (self.x.clone(), self.y.clone())
    }
}

impl<I: ExactInt> fmt::Display for ExponentPair<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Parses `"num/den"`, `"num"` or a negative variant into an exact rational.
pub fn parse_rational<I: ExactInt>(s: &str) -> Result<Ratio<I>> {
    let bad = || Error::Parse(format!("malformed rational {s:?}; expected \"num/den\""));
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: i64 = n.parse().map_err(|_| bad())?;
    let d: i64 = d.parse().map_err(|_| bad())?;
    if d == 0 {
        return Err(bad());
    }
    Ok(super::rat(n, d))
}
