use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};

use super::matrix::ThetaMatrix;
use crate::error::{Error, Result};
use crate::laurent::{compositions, Int, LaurentPoly};

/// An element `sum_A c_A [A]` of `S(n, r)` with coefficients in `Z[v, v^-1]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SchurElement {
    n: usize,
    r: usize,
    terms: BTreeMap<ThetaMatrix, LaurentPoly>,
}

impl SchurElement {
    pub fn zero(n: usize, r: usize) -> Self {
        SchurElement {
            n,
            r,
            terms: BTreeMap::new(),
        }
    }

    /// `[A]`.
    pub fn basis(a: ThetaMatrix) -> Self {
        let mut x = SchurElement::zero(a.n(), a.sigma() as usize);
        x.terms.insert(a, LaurentPoly::one());
        x
    }

    /// `1 = sum_{mu in Lambda(n, r)} [diag(mu)]`.
    pub fn unit(n: usize, r: usize) -> Self {
        let mut x = SchurElement::zero(n, r);
        for mu in compositions(n, r as i64) {
            x.terms
                .insert(ThetaMatrix::diag(&mu).expect("natural"), LaurentPoly::one());
        }
        x
    }

    pub fn from_terms<I>(n: usize, r: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ThetaMatrix, LaurentPoly)>,
    {
        let mut x = SchurElement::zero(n, r);
        for (a, c) in terms {
            x.add_term(a, &c)?;
        }
        Ok(x)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ThetaMatrix, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: &ThetaMatrix) -> LaurentPoly {
        self.terms.get(a).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, a: ThetaMatrix, c: &LaurentPoly) -> Result<()> {
        if a.n() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: a.n(),
            });
        }
        if a.sigma() as usize != self.r {
            return Err(Error::Domain(format!(
                "{a} does not have degree {}",
                self.r
            )));
        }
        self.push(a, c, &Int::ONE, 0);
        Ok(())
    }

    /// `self += k * v^e * c * [a]` without validation.
    pub(crate) fn push(&mut self, a: ThetaMatrix, c: &LaurentPoly, k: &Int, e: i64) {
        debug_assert_eq!(a.n(), self.n);
        debug_assert_eq!(a.sigma() as usize, self.r);
        match self.terms.entry(a) {
            Entry::Vacant(slot) => {
                let mut p = LaurentPoly::zero();
                p.add_scaled_shifted(c, k, e);
                if !p.is_zero() {
                    slot.insert(p);
                }
            }
            Entry::Occupied(mut slot) => {
                slot.get_mut().add_scaled_shifted(c, k, e);
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// `self += c * other`, without validation.
    pub(crate) fn add_scaled(&mut self, other: &SchurElement, c: &LaurentPoly) {
        if let Some((e, k)) = c.as_monomial() {
            let k = k.clone();
            for (a, x) in &other.terms {
                self.push(a.clone(), x, &k, e);
            }
        } else {
            for (a, x) in &other.terms {
                self.push(a.clone(), &(x * c), &Int::ONE, 0);
            }
        }
    }

    fn check_same_space(&self, other: &SchurElement) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: other.n,
            });
        }
        if self.r != other.r {
            return Err(Error::Domain(format!(
                "degrees {} and {} differ",
                self.r, other.r
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &SchurElement) -> Result<SchurElement> {
        self.check_same_space(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &LaurentPoly::one());
        Ok(out)
    }

    pub fn sub(&self, other: &SchurElement) -> Result<SchurElement> {
        self.check_same_space(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &LaurentPoly::constant(-1));
        Ok(out)
    }

    pub fn scale(&self, c: &LaurentPoly) -> SchurElement {
        let mut out = SchurElement::zero(self.n, self.r);
        out.add_scaled(self, c);
        out
    }
}

impl fmt::Debug for SchurElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SchurElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (a, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){a}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct WireTerm {
    matrix: ThetaMatrix,
    coeff: LaurentPoly,
}

#[derive(Serialize, Deserialize)]
struct Wire {
    n: usize,
    r: usize,
    terms: Vec<WireTerm>,
}

impl Serialize for SchurElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let wire = Wire {
            n: self.n,
            r: self.r,
            terms: self
                .terms
                .iter()
                .map(|(a, c)| WireTerm {
                    matrix: a.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        };
        wire.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SchurElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = Wire::deserialize(d)?;
        let mut x = SchurElement::zero(wire.n, wire.r);
        for t in wire.terms {
            if t.coeff.is_zero() {
                return Err(de::Error::custom(format!(
                    "zero coefficient on {}",
                    t.matrix
                )));
            }
            if x.terms.contains_key(&t.matrix) {
                return Err(de::Error::custom(format!("duplicate key {}", t.matrix)));
            }
            x.add_term(t.matrix, &t.coeff).map_err(de::Error::custom)?;
        }
        Ok(x)
    }
}
