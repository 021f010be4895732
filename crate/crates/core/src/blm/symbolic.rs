use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::laurent::{Int, IntVector, LaurentPoly};
use crate::schur::{element_a, ProductEngine, SchurElement, ThetaMatrix};

/// The index `(A, delta, lam)` of `A(delta, lam)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct Key {
    #[serde(rename = "A")]
    pub a: ThetaMatrix,
    pub delta: IntVector,
    #[serde(rename = "lambda")]
    pub lam: IntVector,
}

impl Key {
    pub fn new(a: ThetaMatrix, delta: IntVector, lam: IntVector) -> Result<Key> {
        let n = a.n();
        for v in [&delta, &lam] {
            if v.len() != n {
                return Err(Error::Dimension {
                    expected: n,
                    found: v.len(),
                });
            }
        }
        if !a.has_zero_diagonal() {
            return Err(Error::Domain(format!("{a} has a nonzero diagonal")));
        }
        if !lam.is_natural() {
            return Err(Error::Domain(format!("{lam} has a negative entry")));
        }
        Ok(Key { a, delta, lam })
    }

    /// Whether `delta` lies in `{0,1}^n`, i.e. the key belongs to the basis
    /// of elements `A(delta, lam)` with binary `delta`.
    pub fn is_reduced(&self) -> bool {
        self.delta.iter().all(|&d| d == 0 || d == 1)
    }
}

impl fmt::Display for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.a, self.delta, self.lam)
    }
}

/// A finite `Z[v, v^-1]`-combination of elements `A(delta, lam)` of `V(n)`.
#[derive(Clone, PartialEq, Eq)]
pub struct SymbolicElement {
    n: usize,
    terms: BTreeMap<Key, LaurentPoly>,
}

impl SymbolicElement {
    pub fn zero(n: usize) -> Self {
        SymbolicElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// `A(delta, lam)`.
    pub fn single(a: ThetaMatrix, delta: IntVector, lam: IntVector) -> Result<Self> {
        let n = a.n();
        let mut x = SymbolicElement::zero(n);
        x.terms.insert(Key::new(a, delta, lam)?, LaurentPoly::one());
        Ok(x)
    }

    /// `1 = 0(0, 0)`.
    pub fn one(n: usize) -> Self {
        SymbolicElement::single(
            ThetaMatrix::zero(n),
            IntVector::zeros(n),
            IntVector::zeros(n),
        )
        .expect("valid")
    }

    pub fn n(&self) -> usize {
        self.n
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

    pub fn terms(&self) -> impl Iterator<Item = (&Key, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &Key) -> LaurentPoly {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, key: Key, c: &LaurentPoly) -> Result<()> {
        if key.a.n() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: key.a.n(),
            });
        }
        let key = Key::new(key.a, key.delta, key.lam)?;
        self.push(key, c, &Int::ONE, 0);
        Ok(())
    }

    /// `self += k v^e c * key` without validation.
    pub(crate) fn push(&mut self, key: Key, c: &LaurentPoly, k: &Int, e: i64) {
        debug_assert!(key.a.has_zero_diagonal() && key.lam.is_natural());
        match self.terms.entry(key) {
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

    /// `self += c * other` without validation.
    pub(crate) fn add_scaled(&mut self, other: &SymbolicElement, c: &LaurentPoly) {
        for (key, x) in &other.terms {
            if let Some((e, k)) = c.as_monomial() {
                self.push(key.clone(), x, k, e);
            } else {
                self.push(key.clone(), &(x * c), &Int::ONE, 0);
            }
        }
    }

    pub fn add(&self, other: &SymbolicElement) -> Result<SymbolicElement> {
        if self.n != other.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: other.n,
            });
        }
        let mut out = self.clone();
        out.add_scaled(other, &LaurentPoly::one());
        Ok(out)
    }

    pub fn sub(&self, other: &SymbolicElement) -> Result<SymbolicElement> {
        if self.n != other.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: other.n,
            });
        }
        let mut out = self.clone();
        out.add_scaled(other, &LaurentPoly::constant(-1));
        Ok(out)
    }

    pub fn scale(&self, c: &LaurentPoly) -> SymbolicElement {
        let mut out = SymbolicElement::zero(self.n);
        out.add_scaled(self, c);
        out
    }
}

impl fmt::Debug for SymbolicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SymbolicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (key, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){key}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct WireTerm {
    #[serde(rename = "A")]
    a: ThetaMatrix,
    delta: IntVector,
    lambda: IntVector,
    coeff: LaurentPoly,
}

/// A JSON list of `{"A", "delta", "lambda", "coeff"}` objects. The rank of
/// an empty list cannot be recovered and deserializes as `n = 0`.
impl Serialize for SymbolicElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let wire: Vec<WireTerm> = self
            .terms
            .iter()
            .map(|(k, c)| WireTerm {
                a: k.a.clone(),
                delta: k.delta.clone(),
                lambda: k.lam.clone(),
                coeff: c.clone(),
            })
            .collect();
        wire.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymbolicElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = Vec::<WireTerm>::deserialize(d)?;
        let n = wire.first().map_or(0, |t| t.a.n());
        let mut x = SymbolicElement::zero(n);
        for t in wire {
            if t.coeff.is_zero() {
                return Err(de::Error::custom("zero coefficient"));
            }
            let key = Key::new(t.a, t.delta, t.lambda).map_err(de::Error::custom)?;
            if key.a.n() != n {
                return Err(de::Error::custom(Error::Dimension {
                    expected: n,
                    found: key.a.n(),
                }));
            }
            if x.terms.contains_key(&key) {
                return Err(de::Error::custom(format!("duplicate key {key}")));
            }
            x.terms.insert(key, t.coeff);
        }
        Ok(x)
    }
}

/// The components `r = 0..=r_max` of an element of `prod_r S(n, r)`.
/// Serializes as `{"n", "components"}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TruncatedElement {
    n: usize,
    components: Vec<SchurElement>,
}

impl TruncatedElement {
    pub fn zero(n: usize, r_max: usize) -> Self {
        TruncatedElement {
            n,
            components: (0..=r_max).map(|r| SchurElement::zero(n, r)).collect(),
        }
    }

    pub fn one(n: usize, r_max: usize) -> Self {
        TruncatedElement {
            n,
            components: (0..=r_max).map(|r| SchurElement::unit(n, r)).collect(),
        }
    }

    pub fn from_components(n: usize, components: Vec<SchurElement>) -> Result<Self> {
        for (r, c) in components.iter().enumerate() {
            if c.n() != n {
                return Err(Error::Dimension {
                    expected: n,
                    found: c.n(),
                });
            }
            if c.degree() != r {
                return Err(Error::Domain(format!(
                    "component {r} has degree {}",
                    c.degree()
                )));
            }
        }
        Ok(TruncatedElement { n, components })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r_max(&self) -> usize {
        self.components.len() - 1
    }

    pub fn components(&self) -> &[SchurElement] {
        &self.components
    }

    pub fn component(&self, r: usize) -> &SchurElement {
        &self.components[r]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(SchurElement::is_zero)
    }

    fn check(&self, other: &TruncatedElement) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: other.n,
            });
        }
        if self.components.len() != other.components.len() {
            return Err(Error::Dimension {
                expected: self.components.len(),
                found: other.components.len(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &TruncatedElement) -> Result<TruncatedElement> {
        self.check(other)?;
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(x, y)| x.add(y))
            .collect::<Result<_>>()?;
        Ok(TruncatedElement {
            n: self.n,
            components,
        })
    }

    pub fn sub(&self, other: &TruncatedElement) -> Result<TruncatedElement> {
        self.check(other)?;
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(x, y)| x.sub(y))
            .collect::<Result<_>>()?;
        Ok(TruncatedElement {
            n: self.n,
            components,
        })
    }

    pub fn scale(&self, c: &LaurentPoly) -> TruncatedElement {
        TruncatedElement {
            n: self.n,
            components: self.components.iter().map(|x| x.scale(c)).collect(),
        }
    }

    /// Componentwise product.
    pub fn product(
        &self,
        other: &TruncatedElement,
        engine: &ProductEngine,
    ) -> Result<TruncatedElement> {
        self.check(other)?;
        let components = self
            .components
            .par_iter()
            .zip(&other.components)
            .map(|(x, y)| engine.product(x, y))
            .collect::<Result<_>>()?;
        Ok(TruncatedElement {
            n: self.n,
            components,
        })
    }
}

/// `x` in `prod_{r <= r_max} S(n, r)`, expanding each key by `A(delta, lam, r)`.
pub fn realize(x: &SymbolicElement, r_max: usize) -> Result<TruncatedElement> {
    let n = x.n;
    let components = (0..=r_max)
        .into_par_iter()
        .map(|r| {
            let mut acc = SchurElement::zero(n, r);
            for (key, c) in &x.terms {
                if key.a.sigma() as usize > r {
                    continue;
                }
                let y = element_a(&key.a, &key.delta, &key.lam, r)?;
                acc.add_scaled(&y, c);
            }
            Ok(acc)
        })
        .collect::<Result<_>>()?;
    Ok(TruncatedElement { n, components })
}
