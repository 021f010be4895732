use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use super::int::Int;

/// An element of `Z[v, v^-1]`.
///
/// Stored densely: `coeffs[k]` is the coefficient of `v^(low + k)`. The first
/// and last stored coefficients are nonzero, and the zero polynomial has no
/// coefficients and `low == 0`, so derived equality is equality of values.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<Int>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, 1)
    }

    /// The indeterminate `v`.
    pub fn v() -> Self {
        LaurentPoly::monomial(1, 1)
    }

    /// `c * v^e`.
    pub fn monomial(e: i64, c: impl Into<Int>) -> Self {
        let c = c.into();
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            low: e,
            coeffs: vec![c],
        }
    }

    pub fn constant(c: impl Into<Int>) -> Self {
        LaurentPoly::monomial(0, c)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<Int>,
    {
        let terms: Vec<(i64, Int)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        if terms.is_empty() {
            return LaurentPoly::zero();
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![Int::ZERO; (hi - lo + 1) as usize];
        for (e, c) in &terms {
            coeffs[(e - lo) as usize] += c;
        }
        LaurentPoly::from_dense(lo, coeffs)
    }

    fn from_dense(low: i64, mut coeffs: Vec<Int>) -> Self {
        let mut p = LaurentPoly {
            low,
            coeffs: Vec::new(),
        };
        std::mem::swap(&mut p.coeffs, &mut coeffs);
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Int::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn min_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Largest exponent with a nonzero coefficient.
    pub fn max_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, e: i64) -> Int {
        let k = e - self.low;
        if k < 0 || k >= self.coeffs.len() as i64 {
            Int::ZERO
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Int)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// If the polynomial is `c * v^e`, returns `(e, c)`.
    pub fn as_monomial(&self) -> Option<(i64, &Int)> {
        (self.coeffs.len() == 1).then(|| (self.low, &self.coeffs[0]))
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &Int) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly::from_dense(self.low, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// The ring involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        let hi = self.max_exponent().unwrap();
        LaurentPoly {
            low: -hi,
            coeffs: self.coeffs.iter().rev().cloned().collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `self += c * v^k * other`, the workhorse of every linear combination in
    /// the crate.
    pub fn add_scaled_shifted(&mut self, other: &LaurentPoly, c: &Int, k: i64) {
        if other.is_zero() || c.is_zero() {
            return;
        }
        let olow = other.low + k;
        let ohigh = olow + other.coeffs.len() as i64 - 1;
        if self.is_zero() {
            self.low = olow;
            self.coeffs = other.coeffs.iter().map(|x| x * c).collect();
            self.normalize();
            return;
        }
        let shigh = self.low + self.coeffs.len() as i64 - 1;
        if olow < self.low {
            let pad = (self.low - olow) as usize;
            self.coeffs
                .splice(0..0, std::iter::repeat_n(Int::ZERO, pad));
            self.low = olow;
        }
        if ohigh > shigh {
            self.coeffs
                .resize((ohigh - self.low + 1) as usize, Int::ZERO);
        }
        let base = (olow - self.low) as usize;
        if c.is_one() {
            for (i, x) in other.coeffs.iter().enumerate() {
                self.coeffs[base + i] += x;
            }
        } else {
            for (i, x) in other.coeffs.iter().enumerate() {
                self.coeffs[base + i].add_mul(x, c);
            }
        }
        self.normalize();
    }

    /// `self += a * b`.
    pub fn add_product(&mut self, a: &LaurentPoly, b: &LaurentPoly) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        if let Some((e, c)) = a.as_monomial() {
            let c = c.clone();
            self.add_scaled_shifted(b, &c, e);
            return;
        }
        let prod = a * b;
        *self += &prod;
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`
    /// in `Z[v, v^-1]`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        // Long division from the top degree; units of Z[v,v^-1] are +-v^k, so
        // the leading coefficient of d must divide at every step.
        let dlead = d.coeffs.last().unwrap();
        let dhigh = d.max_exponent().unwrap();
        let dlen = d.coeffs.len();
        let mut rem = self.coeffs.clone();
        let rlow = self.low;
        let qlen = rem.len() as i64 - dlen as i64 + 1;
        if qlen <= 0 {
            return None;
        }
        let mut quot = vec![Int::ZERO; qlen as usize];
        for qi in (0..qlen as usize).rev() {
            let top = qi + dlen - 1;
            let c = &rem[top];
            if c.is_zero() {
                continue;
            }
            let q = c.div_exact(dlead)?;
            for (j, dc) in d.coeffs.iter().enumerate() {
                let sub = dc * &q;
                rem[qi + j] -= &sub;
            }
            quot[qi] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        // rem index i <-> exponent rlow + i; quotient index qi pairs with
        // d's top term at rlow + qi + dlen - 1, so its exponent is that minus
        // dhigh.
        let qlow = rlow + dlen as i64 - 1 - dhigh;
        Some(LaurentPoly::from_dense(qlow, quot))
    }

    /// Exact evaluation at a rational value of `v` (must be nonzero when
    /// negative exponents are present).
    pub fn eval_rational(&self, v: &BigRational) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        // Horner on the dense coefficients, then multiply by v^low.
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v + BigRational::from_integer(c.to_bigint());
        }
        acc * rational_pow(v, self.low)
    }

    /// Evaluation at `v = 1`.
    pub fn eval_at_one(&self) -> Int {
        let mut acc = Int::ZERO;
        for c in &self.coeffs {
            acc += c;
        }
        acc
    }
}

pub(crate) fn rational_pow(v: &BigRational, e: i64) -> BigRational {
    let mut base = if e < 0 { v.recip() } else { v.clone() };
    let mut k = e.unsigned_abs();
    let mut acc = BigRational::one();
    while k > 0 {
        if k & 1 == 1 {
            acc = &acc * &base;
        }
        base = &base * &base;
        k >>= 1;
    }
    acc
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<Int> for LaurentPoly {
    fn from(c: Int) -> Self {
        LaurentPoly::constant(c)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (e, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "v")?,
                (1, false) => write!(f, "{abs}*v")?,
                (_, true) => write!(f, "v^{e}")?,
                (_, false) => write!(f, "{abs}*v^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_scaled_shifted(rhs, &Int::ONE, 0);
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_scaled_shifted(rhs, &Int::from(-1), 0);
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![Int::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j].add_mul(a, b);
            }
        }
        LaurentPoly::from_dense(self.low + rhs.low, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.add_scaled_shifted(rhs, &Int::ONE, 0);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        self.add_scaled_shifted(rhs, &Int::from(-1), 0);
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::one();
        for p in iter {
            acc = &acc * &p;
        }
        acc
    }
}

/// JSON form: `[[exponent, coefficient], ...]` sorted by exponent.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.num_terms()))?;
        for (e, c) in self.terms() {
            seq.serialize_element(&(e, c))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let pairs: Vec<(i64, Int)> = Vec::deserialize(deserializer)?;
        if pairs.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(de::Error::custom("exponents must be strictly increasing"));
        }
        if pairs.iter().any(|(_, c)| c.is_zero()) {
            return Err(de::Error::custom("zero coefficients are not allowed"));
        }
        Ok(LaurentPoly::from_terms(pairs))
    }
}

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Int::Small(x) => serializer.serialize_i64(*x),
            Int::Big(b) => {
                let num: serde_json::Number =
                    b.to_string().parse().map_err(serde::ser::Error::custom)?;
                num.serialize(serializer)
            }
        }
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let num = serde_json::Number::deserialize(deserializer)?;
        let s = num.to_string();
        s.parse::<BigInt>()
            .map(Int::from)
            .map_err(|_| de::Error::custom(format!("expected an integer, found {s}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn ring_examples() {
        let a = p(&[(1, 1), (-1, 1)]);
        let b = p(&[(1, 1), (-1, -1)]);
        assert_eq!(&a * &b, p(&[(2, 1), (-2, -1)]));
        assert_eq!(&a + &LaurentPoly::zero(), a);
        let one_v = p(&[(0, 1), (1, 1)]);
        assert_eq!(&one_v * &one_v, p(&[(0, 1), (1, 2), (2, 1)]));
    }

    #[test]
    fn cancellation_is_canonical() {
        let a = p(&[(3, 2), (-2, 5)]);
        assert_eq!(&a - &a, LaurentPoly::zero());
        let b = p(&[(3, 2), (0, 1)]);
        let c = p(&[(3, -2), (1, 4)]);
        let s = &b + &c;
        assert_eq!(s, p(&[(0, 1), (1, 4)]));
        assert_eq!(s.min_exponent(), Some(0));
        assert_eq!(s.max_exponent(), Some(1));
    }

    #[test]
    fn bar_examples() {
        assert_eq!(p(&[(2, 1), (0, 3)]).bar(), p(&[(-2, 1), (0, 3)]));
        let q = p(&[(5, -3), (-1, 2), (0, 7)]);
        assert_eq!(q.bar().bar(), q);
    }

    #[test]
    fn exact_division() {
        let vmv = p(&[(1, 1), (-1, -1)]);
        let num = p(&[(3, 1), (-3, -1)]);
        assert_eq!(num.div_exact(&vmv), Some(p(&[(2, 1), (0, 1), (-2, 1)])));
        assert_eq!(p(&[(0, 1)]).div_exact(&vmv), None);
        assert_eq!(p(&[(4, 6)]).div_exact(&p(&[(1, 3)])), Some(p(&[(3, 2)])));
        assert_eq!(p(&[(4, 6)]).div_exact(&p(&[(1, 4)])), None);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[(1, 1), (-1, 1)]).to_string(), "v + v^-1");
        assert_eq!(p(&[(0, -2), (2, 3)]).to_string(), "3*v^2 - 2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_form() {
        let a = p(&[(1, 1), (-1, 1)]);
        assert_eq!(serde_json::to_string(&a).unwrap(), "[[-1,1],[1,1]]");
        let back: LaurentPoly = serde_json::from_str("[[-1,1],[1,1]]").unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<LaurentPoly>("[[1,1],[-1,1]]").is_err());
        let big = LaurentPoly::constant("100000000000000000000000".parse::<Int>().unwrap());
        let s = serde_json::to_string(&big).unwrap();
        assert_eq!(s, "[[0,100000000000000000000000]]");
        assert_eq!(serde_json::from_str::<LaurentPoly>(&s).unwrap(), big);
    }

    #[test]
    fn rational_evaluation() {
        let a = p(&[(1, 1), (-1, 1)]);
        let two = BigRational::from_integer(2.into());
        let expect = BigRational::new(5.into(), 2.into());
        assert_eq!(a.eval_rational(&two), expect);
        assert_eq!(a.eval_at_one(), Int::from(2));
    }
}
