//! Arbitrary-precision integers with an inline fast path.
//!
//! Nearly every coefficient in this crate fits in a machine word, so values
//! are kept as `i64` until an operation overflows, at which point they are
//! promoted to a heap-allocated [`BigInt`]. A `Big` value that fits back into
//! an `i64` is always demoted, so equality stays structural.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Int {
    Small(i64),
    Big(BigInt),
}

impl Int {
    pub const ZERO: Int = Int::Small(0);
    pub const ONE: Int = Int::Small(1);

    fn from_big(b: BigInt) -> Int {
        match b.to_i64() {
            Some(x) => Int::Small(x),
            None => Int::Big(b),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        match self {
            Int::Small(x) => BigInt::from(*x),
            Int::Big(b) => b.clone(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Int::Small(x) => Some(*x),
            Int::Big(_) => None,
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        matches!(self, Int::Small(0))
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        matches!(self, Int::Small(1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Int::Small(x) => *x < 0,
            Int::Big(b) => b.is_negative(),
        }
    }

    pub fn abs(&self) -> Int {
        match self {
            Int::Small(x) => match x.checked_abs() {
                Some(a) => Int::Small(a),
                None => Int::Big(BigInt::from(*x).abs()),
            },
            Int::Big(b) => Int::from_big(b.abs()),
        }
    }

    /// `self += a * b` without intermediate allocation on the small path.
    #[inline]
    pub fn add_mul(&mut self, a: &Int, b: &Int) {
        if let (Int::Small(s), Int::Small(x), Int::Small(y)) = (&*self, a, b) {
            if let Some(p) = x.checked_mul(*y) {
                if let Some(t) = s.checked_add(p) {
                    *self = Int::Small(t);
                    return;
                }
            }
        }
        let prod = a * b;
        *self += &prod;
    }

    /// Exact division; `None` if `d` does not divide `self` or `d` is zero.
    pub fn div_exact(&self, d: &Int) -> Option<Int> {
        if d.is_zero() {
            return None;
        }
        match (self, d) {
            (Int::Small(a), Int::Small(b)) => {
                if let (Some(q), Some(rem)) = (a.checked_div(*b), a.checked_rem(*b)) {
                    return if rem == 0 { Some(Int::Small(q)) } else { None };
                }
                let (a, b) = (BigInt::from(*a), BigInt::from(*b));
                (&a % &b).is_zero().then(|| Int::from_big(a / b))
            }
            _ => {
                let (a, b) = (self.to_bigint(), d.to_bigint());
                (&a % &b).is_zero().then(|| Int::from_big(a / b))
            }
        }
    }
}

impl Default for Int {
    fn default() -> Self {
        Int::ZERO
    }
}

impl From<i64> for Int {
    fn from(x: i64) -> Self {
        Int::Small(x)
    }
}

impl From<i32> for Int {
    fn from(x: i32) -> Self {
        Int::Small(x as i64)
    }
}

impl From<BigInt> for Int {
    fn from(b: BigInt) -> Self {
        Int::from_big(b)
    }
}

impl fmt::Debug for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Int::Small(x) => write!(f, "{x}"),
            Int::Big(b) => write!(f, "{b}"),
        }
    }
}

impl FromStr for Int {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.parse::<i64>() {
            Ok(x) => Ok(Int::Small(x)),
            Err(_) => s.parse::<BigInt>().map(Int::from_big),
        }
    }
}

impl PartialOrd for Int {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Int {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => a.cmp(b),
            _ => self.to_bigint().cmp(&other.to_bigint()),
        }
    }
}

impl<'a> Add<&'a Int> for &'a Int {
    type Output = Int;

    #[inline]
    fn add(self, rhs: &'a Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, rhs) {
            if let Some(s) = a.checked_add(*b) {
                return Int::Small(s);
            }
        }
        Int::from_big(self.to_bigint() + rhs.to_bigint())
    }
}

impl<'a> Sub<&'a Int> for &'a Int {
    type Output = Int;

    #[inline]
    fn sub(self, rhs: &'a Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, rhs) {
            if let Some(s) = a.checked_sub(*b) {
                return Int::Small(s);
            }
        }
        Int::from_big(self.to_bigint() - rhs.to_bigint())
    }
}

impl<'a> Mul<&'a Int> for &'a Int {
    type Output = Int;

    #[inline]
    fn mul(self, rhs: &'a Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, rhs) {
            if let Some(s) = a.checked_mul(*b) {
                return Int::Small(s);
            }
        }
        Int::from_big(self.to_bigint() * rhs.to_bigint())
    }
}

impl Neg for &Int {
    type Output = Int;

    fn neg(self) -> Int {
        match self {
            Int::Small(a) => match a.checked_neg() {
                Some(x) => Int::Small(x),
                None => Int::Big(-BigInt::from(*a)),
            },
            Int::Big(b) => Int::from_big(-b),
        }
    }
}

impl Neg for Int {
    type Output = Int;

    fn neg(self) -> Int {
        -&self
    }
}

impl AddAssign<&Int> for Int {
    #[inline]
    fn add_assign(&mut self, rhs: &Int) {
        if let (Int::Small(a), Int::Small(b)) = (&*self, rhs) {
            if let Some(s) = a.checked_add(*b) {
                *self = Int::Small(s);
                return;
            }
        }
        *self = &*self + rhs;
    }
}

impl SubAssign<&Int> for Int {
    #[inline]
    fn sub_assign(&mut self, rhs: &Int) {
        if let (Int::Small(a), Int::Small(b)) = (&*self, rhs) {
            if let Some(s) = a.checked_sub(*b) {
                *self = Int::Small(s);
                return;
            }
        }
        *self = &*self - rhs;
    }
}
