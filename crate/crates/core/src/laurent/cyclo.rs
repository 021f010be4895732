//! Exact arithmetic in `Q(eps) = Q[v]/(Phi_l(v))`, `eps` a primitive `l`-th
//! root of unity with `l` odd.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::poly::LaurentPoly;
use crate::error::{Error, Result};

/// Integer coefficients of the cyclotomic polynomial `Phi_l`, lowest degree
/// first.
pub fn cyclotomic_polynomial(l: u32) -> Vec<BigInt> {
    assert!(l >= 1);
    // v^l - 1 = prod_{d | l} Phi_d(v).
    let mut num: Vec<BigInt> = vec![BigInt::zero(); l as usize + 1];
    num[0] = BigInt::from(-1);
    num[l as usize] = BigInt::one();
    for d in 1..l {
        if l.is_multiple_of(d) {
            num = int_poly_div_exact(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = &den[dd];
    let mut q = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..q.len()).rev() {
        let c = &rem[k + dd] / lead;
        for (j, x) in den.iter().enumerate() {
            rem[k + j] -= &c * x;
        }
        q[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    q
}

/// An element of `Q(eps)`, stored as its unique representative of degree
/// below `deg Phi_l`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloScalar {
    l: u32,
    coeffs: Vec<BigRational>,
}

fn check_order(l: u32) -> Result<()> {
    if l == 0 || l.is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "root-of-unity order must be odd and positive, got {l}"
        )));
    }
    Ok(())
}

fn modulus(l: u32) -> &'static [BigRational] {
    static MODULI: OnceLock<Mutex<HashMap<u32, &'static [BigRational]>>> = OnceLock::new();
    let mut map = MODULI.get_or_init(Default::default).lock().unwrap();
    map.entry(l).or_insert_with(|| {
        let m: Vec<BigRational> = cyclotomic_polynomial(l)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        Box::leak(m.into_boxed_slice())
    })
}

/// Reduces a dense rational polynomial modulo the monic `m`.
fn reduce_mod(mut p: Vec<BigRational>, m: &[BigRational]) -> Vec<BigRational> {
    let d = m.len() - 1;
    while p.len() > d {
        let c = p.pop().unwrap();
        if c.is_zero() {
            continue;
        }
        let base = p.len() - d;
        for j in 0..d {
            p[base + j] -= &c * &m[j];
        }
    }
    p.resize(d, BigRational::zero());
    p
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Quotient and remainder of rational polynomial division; `b` nonzero
/// after trimming.
fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let b = trim(b.to_vec());
    let mut rem = trim(a.to_vec());
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut q = vec![BigRational::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let k = rem.len() - b.len();
        let c = rem.last().unwrap() / &lead;
        for (j, y) in b.iter().enumerate() {
            rem[k + j] -= &c * y;
        }
        q[k] = c;
        rem.pop();
        rem = trim(rem);
    }
    (q, rem)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect()
}

impl CycloScalar {
    pub fn zero(l: u32) -> Result<Self> {
        check_order(l)?;
        let d = modulus(l).len() - 1;
        Ok(CycloScalar {
            l,
            coeffs: vec![BigRational::zero(); d],
        })
    }

    pub fn one(l: u32) -> Result<Self> {
        let mut z = CycloScalar::zero(l)?;
        z.coeffs[0] = BigRational::one();
        Ok(z)
    }

    /// `eps` itself.
    pub fn root(l: u32) -> Result<Self> {
        CycloScalar::from_laurent(&LaurentPoly::v(), l)
    }

    /// Builds from an arbitrary rational polynomial in `eps`, reducing it.
    pub fn from_coeffs(l: u32, coeffs: Vec<BigRational>) -> Result<Self> {
        check_order(l)?;
        Ok(CycloScalar {
            l,
            coeffs: reduce_mod(coeffs, modulus(l)),
        })
    }

    /// Image of `p` under `v -> eps`.
    pub fn from_laurent(p: &LaurentPoly, l: u32) -> Result<Self> {
        check_order(l)?;
        let li = l as i64;
        // eps^l = 1, so fold exponents mod l first.
        let mut folded = vec![BigRational::zero(); l as usize];
        for (e, c) in p.terms() {
            folded[e.rem_euclid(li) as usize] += BigRational::from_integer(c.to_bigint());
        }
        Ok(CycloScalar {
            l,
            coeffs: reduce_mod(folded, modulus(l)),
        })
    }

    pub fn order(&self) -> u32 {
        self.l
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    fn same_order(&self, other: &CycloScalar) {
        assert_eq!(self.l, other.l, "mixing different roots of unity");
    }

    pub fn add(&self, other: &CycloScalar) -> CycloScalar {
        self.same_order(other);
        CycloScalar {
            l: self.l,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &CycloScalar) -> CycloScalar {
        self.same_order(other);
        CycloScalar {
            l: self.l,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> CycloScalar {
        CycloScalar {
            l: self.l,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, other: &CycloScalar) -> CycloScalar {
        self.same_order(other);
        if self.coeffs.len() == 1 {
            return CycloScalar {
                l: self.l,
                coeffs: vec![&self.coeffs[0] * &other.coeffs[0]],
            };
        }
        CycloScalar {
            l: self.l,
            coeffs: reduce_mod(poly_mul(&self.coeffs, &other.coeffs), modulus(self.l)),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<CycloScalar> {
        if self.is_zero() {
            return None;
        }
        if self.coeffs.len() == 1 {
            return Some(CycloScalar {
                l: self.l,
                coeffs: vec![self.coeffs[0].recip()],
            });
        }
        // Extended Euclid: find s with s * self = 1 mod Phi_l.
        let m = modulus(self.l);
        let (mut r0, mut r1) = (m.to_vec(), trim(self.coeffs.clone()));
        let (mut s0, mut s1): (Vec<BigRational>, Vec<BigRational>) =
            (Vec::new(), vec![BigRational::one()]);
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let s2 = trim(poly_sub(&s0, &poly_mul(&q, &s1)));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is a nonzero constant since Phi_l is irreducible.
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].recip();
        let s: Vec<BigRational> = s0.into_iter().map(|x| x * &c).collect();
        Some(CycloScalar {
            l: self.l,
            coeffs: reduce_mod(s, m),
        })
    }
}

impl fmt::Debug for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let body = match k {
                0 => format!("{c}"),
                1 => format!("{c}*e"),
                _ => format!("{c}*e^{k}"),
            };
            parts.push(body);
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CycloRepr {
    l: u32,
    coeffs: Vec<String>,
}

/// JSON form: `{"l": 3, "coeffs": ["1", "-1/2"]}`, coefficients of
/// `1, eps, eps^2, ...` as exact rationals.
impl Serialize for CycloScalar {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        CycloRepr {
            l: self.l,
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CycloScalar {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let repr = CycloRepr::deserialize(deserializer)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| s.parse::<BigRational>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        CycloScalar::from_coeffs(repr.l, coeffs).map_err(serde::de::Error::custom)
    }
}

/// Image of `p` under `v -> eps`, `eps` a primitive `l`-th root of unity.
pub fn eval_at_root(p: &LaurentPoly, l: u32) -> Result<CycloScalar> {
    CycloScalar::from_laurent(p, l)
}
