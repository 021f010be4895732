//! Base change along `v -> eps`, `eps` a primitive `l`-th root of unity with
//! `l` odd, applied to truncated elements of `prod_r S(n, r)`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::blm::{realize, SymbolicElement, TruncatedElement};
use crate::error::{Error, Result};
use crate::laurent::{compositions, CycloScalar, IntVector};
use crate::linalg::eliminate;
use crate::schur::{theta_pm_matrices, ProductEngine, SchurElement, ThetaMatrix};
use crate::uqgl::{coordinate_map, coordinate_vectors};

/// An element of `S_k(n, r)`, `k = Q(eps)`, in the basis `[A]_eps`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CycloSchurElement {
    n: usize,
    r: usize,
    l: u32,
    #[serde(serialize_with = "serialize_terms")]
    terms: BTreeMap<ThetaMatrix, CycloScalar>,
}

fn serialize_terms<S: serde::Serializer>(
    terms: &BTreeMap<ThetaMatrix, CycloScalar>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Term<'a> {
        matrix: &'a ThetaMatrix,
        coeff: &'a CycloScalar,
    }
    s.collect_seq(terms.iter().map(|(matrix, coeff)| Term { matrix, coeff }))
}

impl CycloSchurElement {
    pub fn zero(n: usize, r: usize, l: u32) -> Result<Self> {
        CycloScalar::zero(l)?;
        Ok(CycloSchurElement {
            n,
            r,
            l,
            terms: BTreeMap::new(),
        })
    }

    /// `[A] ⊗ 1` extended linearly.
    pub fn from_schur(x: &SchurElement, l: u32) -> Result<Self> {
        let mut out = CycloSchurElement::zero(x.n(), x.degree(), l)?;
        for (a, c) in x.terms() {
            let s = CycloScalar::from_laurent(c, l)?;
            if !s.is_zero() {
                out.terms.insert(a.clone(), s);
            }
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.r
    }

    pub fn order(&self) -> u32 {
        self.l
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ThetaMatrix, &CycloScalar)> {
        self.terms.iter()
    }

    fn add_scaled(&mut self, other: &CycloSchurElement, c: &CycloScalar) {
        for (a, x) in &other.terms {
            let y = x.mul(c);
            match self.terms.entry(a.clone()) {
                Entry::Vacant(slot) => {
                    if !y.is_zero() {
                        slot.insert(y);
                    }
                }
                Entry::Occupied(mut slot) => {
                    let s = slot.get().add(&y);
                    if s.is_zero() {
                        slot.remove();
                    } else {
                        *slot.get_mut() = s;
                    }
                }
            }
        }
    }

    fn check(&self, other: &CycloSchurElement) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: other.n,
            });
        }
        if self.r != other.r || self.l != other.l {
            return Err(Error::Domain(format!(
                "mixing S_k({}, {}) at l = {} with S_k({}, {}) at l = {}",
                self.n, self.r, self.l, other.n, other.r, other.l
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &CycloSchurElement) -> Result<CycloSchurElement> {
        self.check(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &CycloScalar::one(self.l)?);
        Ok(out)
    }

    pub fn scale(&self, c: &CycloScalar) -> CycloSchurElement {
        let mut out = CycloSchurElement {
            terms: BTreeMap::new(),
            ..self.clone()
        };
        out.add_scaled(self, c);
        out
    }

    /// Product in `S_k(n, r)`: the integral structure constants of `engine`,
    /// specialized.
    pub fn product(
        &self,
        other: &CycloSchurElement,
        engine: &ProductEngine,
    ) -> Result<CycloSchurElement> {
        self.check(other)?;
        let mut out = CycloSchurElement {
            terms: BTreeMap::new(),
            ..self.clone()
        };
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if a.co() != b.ro() {
                    continue;
                }
                let p = CycloSchurElement::from_schur(&engine.basis_product(a, b)?, self.l)?;
                out.add_scaled(&p, &ca.mul(cb));
            }
        }
        Ok(out)
    }
}

impl fmt::Display for CycloSchurElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (a, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})[{a}]")?;
        }
        Ok(())
    }
}

/// Components `r = 0..=r_max` of an element of `prod_r S_k(n, r)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CycloTruncatedElement {
    n: usize,
    l: u32,
    components: Vec<CycloSchurElement>,
}

impl CycloTruncatedElement {
    pub fn one(n: usize, r_max: usize, l: u32) -> Result<Self> {
        specialize(&TruncatedElement::one(n, r_max), l)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u32 {
        self.l
    }

    pub fn r_max(&self) -> usize {
        self.components.len() - 1
    }

    pub fn components(&self) -> &[CycloSchurElement] {
        &self.components
    }

    pub fn component(&self, r: usize) -> &CycloSchurElement {
        &self.components[r]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(CycloSchurElement::is_zero)
    }

    fn check(&self, other: &CycloTruncatedElement) -> Result<()> {
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

    pub fn add(&self, other: &CycloTruncatedElement) -> Result<CycloTruncatedElement> {
        self.check(other)?;
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(x, y)| x.add(y))
            .collect::<Result<_>>()?;
        Ok(CycloTruncatedElement {
            components,
            ..*self
        })
    }

    pub fn scale(&self, c: &CycloScalar) -> CycloTruncatedElement {
        CycloTruncatedElement {
            components: self.components.iter().map(|x| x.scale(c)).collect(),
            ..*self
        }
    }

    /// Componentwise product.
    pub fn product(
        &self,
        other: &CycloTruncatedElement,
        engine: &ProductEngine,
    ) -> Result<CycloTruncatedElement> {
        self.check(other)?;
        let components = self
            .components
            .par_iter()
            .zip(&other.components)
            .map(|(x, y)| x.product(y, engine))
            .collect::<Result<_>>()?;
        Ok(CycloTruncatedElement {
            components,
            ..*self
        })
    }
}

/// The image of `x` under `v -> eps`, coefficientwise.
pub fn specialize(x: &TruncatedElement, l: u32) -> Result<CycloTruncatedElement> {
    CycloScalar::zero(l)?;
    let components = x
        .components()
        .par_iter()
        .map(|c| CycloSchurElement::from_schur(c, l))
        .collect::<Result<_>>()?;
    Ok(CycloTruncatedElement {
        n: x.n(),
        l,
        components,
    })
}

/// Whether `K_i^l` becomes the unit in each degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KlReport {
    pub n: usize,
    /// 0-based.
    pub i: usize,
    pub l: u32,
    pub r_max: usize,
    pub holds: bool,
    pub failing_degree: Option<usize>,
}

/// Compares the image of `0(l e_i, 0)` with the unit in every degree `r <= r_max`.
pub fn check_kl_trivial(n: usize, i: usize, l: u32, r_max: usize) -> Result<KlReport> {
    if i >= n {
        return Err(Error::Domain(format!("index {i} needs i < n = {n}")));
    }
    let delta = IntVector::unit(n, i).scaled(l as i64);
    let k = SymbolicElement::single(ThetaMatrix::zero(n), delta, IntVector::zeros(n))?;
    let x = specialize(&realize(&k, r_max)?, l)?;
    let one = CycloTruncatedElement::one(n, r_max, l)?;
    let failing_degree = (0..=r_max).find(|&r| x.component(r) != one.component(r));
    Ok(KlReport {
        n,
        i,
        l,
        r_max,
        holds: failing_degree.is_none(),
        failing_degree,
    })
}

/// Index `(A, lam)` of `A(0)_eps 0(-lam, lam)_eps`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BkIndex {
    #[serde(rename = "A")]
    pub a: ThetaMatrix,
    #[serde(rename = "lambda")]
    pub lam: IntVector,
}

/// All `(A, lam)` with `sigma(A) + sigma(lam) <= bound`.
pub fn bk_indices(n: usize, bound: i64) -> Vec<BkIndex> {
    let mut out = Vec::new();
    for a in theta_pm_matrices(n, bound) {
        for s in 0..=bound - a.sigma() {
            for lam in compositions(n, s) {
                out.push(BkIndex { a: a.clone(), lam });
            }
        }
    }
    out
}

/// The family `{A(0)_eps 0(-lam, lam)_eps}` up to degree `r_max`.
pub fn bk_family(
    n: usize,
    bound: i64,
    l: u32,
    r_max: usize,
    engine: &ProductEngine,
) -> Result<(Vec<BkIndex>, Vec<CycloTruncatedElement>)> {
    CycloScalar::zero(l)?;
    let idx = bk_indices(n, bound);
    let zero = IntVector::zeros(n);
    let images = idx
        .par_iter()
        .map(|k| {
            let a0 = realize(
                &SymbolicElement::single(k.a.clone(), zero.clone(), zero.clone())?,
                r_max,
            )?;
            let torus =
                SymbolicElement::single(ThetaMatrix::zero(n), k.lam.scaled(-1), k.lam.clone())?;
            let x = a0.product(&realize(&torus, r_max)?, engine)?;
            specialize(&x, l)
        })
        .collect::<Result<_>>()?;
    Ok((idx, images))
}

/// Rank of a family over `Q(eps)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycloVerdict {
    pub l: u32,
    pub size: usize,
    pub coordinates: usize,
    pub rank: usize,
    pub independent: bool,
    pub kernel: Option<Vec<CycloScalar>>,
    pub r_max: usize,
    pub note: String,
}

/// Exact rank of `family` over `Q(eps)`.
pub fn cyclo_independence(family: &[CycloTruncatedElement], l: u32) -> Result<CycloVerdict> {
    let one = CycloScalar::one(l)?;
    let r_max = family.first().map_or(0, CycloTruncatedElement::r_max);
    let mut coords: BTreeMap<(usize, ThetaMatrix), usize> = BTreeMap::new();
    for x in family {
        if x.l != l {
            return Err(Error::Domain(format!(
                "family member at l = {} in a check at l = {l}",
                x.l
            )));
        }
        for (r, c) in x.components.iter().enumerate() {
            for a in c.terms.keys() {
                coords.entry((r, a.clone())).or_insert(0);
            }
        }
    }
    for (k, slot) in coords.values_mut().enumerate() {
        *slot = k;
    }
    let rows: Vec<_> = family
        .par_iter()
        .map(|x| {
            let mut v = BTreeMap::new();
            for (r, c) in x.components.iter().enumerate() {
                for (a, s) in &c.terms {
                    v.insert(coords[&(r, a.clone())], s.clone());
                }
            }
            v
        })
        .collect();
    let e = eliminate(&rows, &one);
    let independent = e.kernel.is_none();
    let note = if independent {
        format!("independent over Q(eps) at truncation r <= {r_max}: a finite-degree witness, not a proof")
    } else {
        format!(
            "rank {} < {} over Q(eps) in degrees r <= {r_max}",
            e.rank,
            family.len()
        )
    };
    Ok(CycloVerdict {
        l,
        size: family.len(),
        coordinates: coords.len(),
        rank: e.rank,
        independent,
        kernel: e.kernel,
        r_max,
        note,
    })
}

/// Independence of the `B_k` family with `sigma(A) + sigma(lam) <= bound`.
pub fn bk_independence(
    n: usize,
    bound: i64,
    l: u32,
    r_max: usize,
    engine: &ProductEngine,
) -> Result<CycloVerdict> {
    let (_, family) = bk_family(n, bound, l, r_max, engine)?;
    cyclo_independence(&family, l)
}

/// Rank of an integral family over `Q(eps)`, for comparison with its rank over `Q(v)`.
pub fn specialized_rank(family: &[TruncatedElement], l: u32) -> Result<usize> {
    let coords = coordinate_map(family);
    let rows = coordinate_vectors(family, &coords, |p| {
        CycloScalar::from_laurent(p, l).expect("odd l")
    });
    Ok(eliminate(&rows, &CycloScalar::one(l)?).rank)
}

#[cfg(test)]
mod tests {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::laurent::{Int, LaurentPoly};
    use crate::schur::theta_matrices;

    fn random_element(rng: &mut ChaCha8Rng, n: usize, r: usize) -> SchurElement {
        let all = theta_matrices(n, r as i64);
        let mut x = SchurElement::zero(n, r);
        for _ in 0..3 {
            let a = all[rng.gen_range(0..all.len())].clone();
            let c = LaurentPoly::from_terms([
                (rng.gen_range(-3..=3), rng.gen_range(-2..=2)),
                (rng.gen_range(-3..=3), 1),
            ]);
            x.add_term(a, &c).unwrap();
        }
        x
    }

    #[test]
    fn unit_and_even_order() {
        let one = TruncatedElement::one(2, 3);
        assert_eq!(
            specialize(&one, 3).unwrap(),
            CycloTruncatedElement::one(2, 3, 3).unwrap()
        );
        assert!(matches!(specialize(&one, 4), Err(Error::Domain(_))));
    }

    #[test]
    fn specialization_is_multiplicative() {
        let engine = ProductEngine::default();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (n, r) in [(2, 3), (3, 2), (2, 4)] {
            for l in [1, 3, 5] {
                let x = random_element(&mut rng, n, r);
                let y = random_element(&mut rng, n, r);
                let xy = engine.product(&x, &y).unwrap();
                let lhs = CycloSchurElement::from_schur(&xy, l).unwrap();
                let (sx, sy) = (
                    CycloSchurElement::from_schur(&x, l).unwrap(),
                    CycloSchurElement::from_schur(&y, l).unwrap(),
                );
                assert_eq!(lhs, sx.product(&sy, &engine).unwrap());
            }
        }
    }

    #[test]
    fn order_one_is_evaluation_at_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let x = random_element(&mut rng, 2, 3);
        let s = CycloSchurElement::from_schur(&x, 1).unwrap();
        for (a, c) in x.terms() {
            let at_one = c.eval_at_one();
            match s.terms.get(a) {
                Some(v) => assert_eq!(
                    v.coeffs()[0],
                    num_rational::BigRational::from_integer(at_one.to_bigint())
                ),
                None => assert_eq!(at_one, Int::ZERO),
            }
        }
    }

    #[test]
    fn kl_triviality() {
        for l in [1, 3, 5] {
            for n in [2, 3] {
                for i in 0..n {
                    assert!(
                        check_kl_trivial(n, i, l, 4).unwrap().holds,
                        "n={n} i={i} l={l}"
                    );
                }
            }
        }
        // K_1^3 at eps of order 5 is not trivial.
        let k = SymbolicElement::single(
            ThetaMatrix::zero(2),
            IntVector::from([3, 0]),
            IntVector::zeros(2),
        )
        .unwrap();
        let x = specialize(&realize(&k, 2).unwrap(), 5).unwrap();
        assert_ne!(x, CycloTruncatedElement::one(2, 2, 5).unwrap());
    }

    #[test]
    fn bk_small_cases() {
        let engine = ProductEngine::default();
        let (idx, fam) = bk_family(2, 0, 3, 3, &engine).unwrap();
        assert_eq!(idx.len(), 1);
        assert_eq!(fam[0], CycloTruncatedElement::one(2, 3, 3).unwrap());
        let (_, fam) = bk_family(2, 1, 3, 4, &engine).unwrap();
        assert!(cyclo_independence(&fam, 3).unwrap().independent);
        let eps = CycloScalar::root(3).unwrap();
        let mut forced = fam.clone();
        forced.push(fam[0].scale(&eps));
        let v = cyclo_independence(&forced, 3).unwrap();
        assert!(!v.independent);
        assert_eq!(v.rank, fam.len());
    }
}
