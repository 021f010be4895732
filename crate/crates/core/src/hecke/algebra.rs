use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use super::group::SymmetricGroup;
use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::laurent::{Int, LaurentPoly};

/// An element `sum_w c_w T_w` of the Hecke algebra `H(r)` over `Z[v, v^-1]`
/// with `q = v^2`.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElt {
    r: usize,
    terms: BTreeMap<Permutation, LaurentPoly>,
}

impl HeckeElt {
    pub fn zero(r: usize) -> Self {
        HeckeElt {
            r,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(r: usize) -> Self {
        HeckeElt::basis(Permutation::identity(r))
    }

    /// `T_w`.
    pub fn basis(w: Permutation) -> Self {
        let r = w.degree();
        let mut terms = BTreeMap::new();
        terms.insert(w, LaurentPoly::one());
        HeckeElt { r, terms }
    }

    /// `T_{s_i}`, 0-based.
    pub fn generator(r: usize, i: usize) -> Self {
        HeckeElt::basis(Permutation::simple(r, i))
    }

    pub fn degree(&self) -> usize {
        self.r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Permutation) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, w: Permutation, c: &LaurentPoly) {
        assert_eq!(w.degree(), self.r, "degree mismatch");
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c.clone());
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &HeckeElt) -> Result<HeckeElt> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &LaurentPoly) -> HeckeElt {
        let terms = self
            .terms
            .iter()
            .map(|(w, x)| (w.clone(), x * c))
            .filter(|(_, x)| !x.is_zero())
            .collect();
        HeckeElt { r: self.r, terms }
    }

    pub fn multiply(&self, other: &HeckeElt) -> Result<HeckeElt> {
        self.check_degree(other)?;
        let g = SymmetricGroup::get(self.r)?;
        let left = to_dense(g, self);
        let mut acc = vec![LaurentPoly::zero(); g.order()];
        for (w, c) in &other.terms {
            let prod = right_mul_word(g, &left, &w.reduced_word());
            for (a, p) in acc.iter_mut().zip(&prod) {
                a.add_product(p, c);
            }
        }
        Ok(from_dense(g, &acc))
    }

    fn check_degree(&self, other: &HeckeElt) -> Result<()> {
        if self.r != other.r {
            return Err(Error::Dimension {
                expected: self.r,
                found: other.r,
            });
        }
        Ok(())
    }
}

impl fmt::Debug for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})T{w}")?;
        }
        Ok(())
    }
}

pub(crate) fn to_dense(g: &SymmetricGroup, x: &HeckeElt) -> Vec<LaurentPoly> {
    let mut out = vec![LaurentPoly::zero(); g.order()];
    for (w, c) in &x.terms {
        out[g.index_of(w)] = c.clone();
    }
    out
}

pub(crate) fn from_dense(g: &SymmetricGroup, x: &[LaurentPoly]) -> HeckeElt {
    let terms = x
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (g.element(k).clone(), c.clone()))
        .collect();
    HeckeElt {
        r: g.degree(),
        terms,
    }
}

/// `x * T_{s_i}` on dense coefficient vectors.
pub(crate) fn right_mul_simple(
    g: &SymmetricGroup,
    x: &[LaurentPoly],
    i: usize,
) -> Vec<LaurentPoly> {
    let mut out = vec![LaurentPoly::zero(); x.len()];
    let minus_one = Int::from(-1);
    for (w, c) in x.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let ws = g.right_simple(w, i);
        if g.length(ws) > g.length(w) {
            out[ws] += c;
        } else {
            // T_w T_s = (q-1) T_w + q T_{ws} when ws < w.
            out[w].add_scaled_shifted(c, &Int::ONE, 2);
            out[w].add_scaled_shifted(c, &minus_one, 0);
            out[ws].add_scaled_shifted(c, &Int::ONE, 2);
        }
    }
    out
}

/// `x * T_{s_{i_1}} ... T_{s_{i_m}}`.
pub(crate) fn right_mul_word(
    g: &SymmetricGroup,
    x: &[LaurentPoly],
    word: &[usize],
) -> Vec<LaurentPoly> {
    let mut cur = x.to_vec();
    for &i in word {
        cur = right_mul_simple(g, &cur, i);
    }
    cur
}
