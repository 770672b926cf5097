use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational plane coordinate.
///
/// Always kept in canonical form (positive denominator, reduced), so
/// equality, ordering and hashing agree. No floating point is involved in
/// any predicate; `to_f64` exists only for rendering.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coord(BigRational);

impl Coord {
    pub fn new(r: BigRational) -> Self {
        Coord(r)
    }

    pub fn from_int(n: i64) -> Self {
        Coord(BigRational::from_integer(BigInt::from(n)))
    }

    /// Exact fraction `n/d`. Panics on `d == 0`.
    pub fn frac(n: i64, d: i64) -> Self {
        Coord(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn zero() -> Self {
        Coord(BigRational::zero())
    }

    pub fn one() -> Self {
        Coord(BigRational::one())
    }

    pub fn half() -> Self {
        Coord::frac(1, 2)
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    /// Largest integer not exceeding the value.
    pub fn floor_i64(&self) -> i64 {
        self.0
            .floor()
            .to_integer()
            .to_i64()
            .expect("coordinate magnitude exceeds i64 range")
    }

    /// Fractional part in `[0, 1)`.
    pub fn fract(&self) -> Coord {
        Coord(&self.0 - self.0.floor())
    }

    /// Midpoint of two coordinates.
    pub fn midpoint(a: &Coord, b: &Coord) -> Coord {
        Coord((&a.0 + &b.0) / BigRational::from_integer(BigInt::from(2)))
    }

    /// Lossy conversion used only when emitting SVG scenes.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(0.0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // BigRational renders reduced `n` or `n/d` with positive d.
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Failure to parse a coordinate string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseCoordError {
    pub input: String,
}

impl fmt::Display for ParseCoordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid coordinate {:?}", self.input)
    }
}

impl std::error::Error for ParseCoordError {}

impl FromStr for Coord {
    type Err = ParseCoordError;

    /// Accepts integers (`"3"`, `"-2"`), decimals (`"0.35"`) and fractions
    /// (`"7/20"`, `"-7/20"`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseCoordError {
            input: s.to_string(),
        };
        let t = s.trim();
        if t.is_empty() {
            return Err(err());
        }
        if let Some((n, d)) = t.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| err())?;
            let d: BigInt = d.trim().parse().map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            return Ok(Coord(BigRational::new(n, d)));
        }
        let (neg, body) = match t.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, t.strip_prefix('+').unwrap_or(t)),
        };
        let value = if let Some((int_part, frac_part)) = body.split_once('.') {
            if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            let int_part = if int_part.is_empty() { "0" } else { int_part };
            if !int_part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
            let whole: BigInt = int_part.parse().map_err(|_| err())?;
            let frac: BigInt = frac_part.parse().map_err(|_| err())?;
            BigRational::new(whole * &scale + frac, scale)
        } else {
            if !body.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            let n: BigInt = body.parse().map_err(|_| err())?;
            BigRational::from_integer(n)
        };
        Ok(Coord(if neg { -value } else { value }))
    }
}

macro_rules! coord_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for Coord {
            type Output = Coord;
            fn $method(self, rhs: Coord) -> Coord {
                Coord(self.0 $op rhs.0)
            }
        }
        impl<'a> $trait<&'a Coord> for &Coord {
            type Output = Coord;
            fn $method(self, rhs: &'a Coord) -> Coord {
                Coord(&self.0 $op &rhs.0)
            }
        }
        impl $trait<&Coord> for Coord {
            type Output = Coord;
            fn $method(self, rhs: &Coord) -> Coord {
                Coord(self.0 $op &rhs.0)
            }
        }
        impl $trait<Coord> for &Coord {
            type Output = Coord;
            fn $method(self, rhs: Coord) -> Coord {
                Coord(&self.0 $op rhs.0)
            }
        }
    };
}

coord_binop!(Add, add, +);
coord_binop!(Sub, sub, -);
coord_binop!(Mul, mul, *);
coord_binop!(Div, div, /);

impl Neg for Coord {
    type Output = Coord;
    fn neg(self) -> Coord {
        Coord(-self.0)
    }
}

impl Neg for &Coord {
    type Output = Coord;
    fn neg(self) -> Coord {
        Coord(-&self.0)
    }
}

impl From<i64> for Coord {
    fn from(n: i64) -> Self {
        Coord::from_int(n)
    }
}
