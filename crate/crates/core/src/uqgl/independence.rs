//! Exact rank of finite families in `prod_{r <= r_max} S(n, r)` over `Q(v)`.
//!
//! Coefficients are evaluated at integer points `v = p`; the rank at any
//! point is a lower bound for the rank over `Q(v)`, so full rank at one point
//! certifies independence.

use std::collections::BTreeMap;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use super::pbw::{pbw_indices, pbw_monomial, PBWIndex};
use crate::blm::{realize, SymbolicElement, TruncatedElement};
use crate::error::Result;
use crate::laurent::{Int, LaurentPoly};
use crate::linalg::{eliminate, primitive_integer_vector, SparseVector};
use crate::schur::{ProductEngine, ThetaMatrix};

pub const DEFAULT_EVALUATION_POINTS: [i64; 4] = [2, 3, 5, 7];

/// Outcome of a rank computation for a family of truncated elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndependenceVerdict {
    pub size: usize,
    /// Number of coordinates `(r, [A])` in the union of the supports.
    pub coordinates: usize,
    /// Largest rank observed over the evaluation points tried.
    pub rank: usize,
    pub independent: bool,
    /// The point `v = p` at which full rank was found.
    pub certified_at: Option<i64>,
    pub points_tried: Vec<i64>,
    /// A primitive integer dependency at the last point tried, when no point
    /// gives full rank.
    pub kernel: Option<Vec<Int>>,
    pub r_max: usize,
    pub note: String,
}

/// Assigns a coordinate number to every `(r, [A])` in the supports.
pub fn coordinate_map(family: &[TruncatedElement]) -> BTreeMap<(usize, ThetaMatrix), usize> {
    let mut keys = BTreeMap::new();
    for x in family {
        for (r, c) in x.components().iter().enumerate() {
            for (a, _) in c.terms() {
                keys.entry((r, a.clone())).or_insert(0);
            }
        }
    }
    for (k, slot) in keys.values_mut().enumerate() {
        *slot = k;
    }
    keys
}

/// Sparse coordinate vectors with coefficients mapped by `f`.
pub fn coordinate_vectors<F, G>(
    family: &[TruncatedElement],
    coords: &BTreeMap<(usize, ThetaMatrix), usize>,
    f: G,
) -> Vec<SparseVector<F>>
where
    F: Send,
    G: Fn(&LaurentPoly) -> F + Sync,
{
    family
        .par_iter()
        .map(|x| {
            let mut v = SparseVector::new();
            for (r, c) in x.components().iter().enumerate() {
                for (a, p) in c.terms() {
                    v.insert(coords[&(r, a.clone())], f(p));
                }
            }
            v
        })
        .collect()
}

/// Rank of `family` over `Q(v)` by evaluation at `points`.
pub fn independence_check(family: &[TruncatedElement], points: &[i64]) -> IndependenceVerdict {
    let coords = coordinate_map(family);
    let r_max = family.first().map_or(0, TruncatedElement::r_max);
    let one = BigRational::from_integer(1.into());
    let mut verdict = IndependenceVerdict {
        size: family.len(),
        coordinates: coords.len(),
        rank: 0,
        independent: false,
        certified_at: None,
        points_tried: Vec::new(),
        kernel: None,
        r_max,
        note: String::new(),
    };
    if family.is_empty() {
        verdict.independent = true;
    }
    for &p in points {
        if verdict.independent {
            break;
        }
        let v = BigRational::from_integer(p.into());
        let rows = coordinate_vectors(family, &coords, |c| c.eval_rational(&v));
        let e = eliminate(&rows, &one);
        verdict.points_tried.push(p);
        verdict.rank = verdict.rank.max(e.rank);
        match e.kernel {
            None => {
                verdict.independent = true;
                verdict.certified_at = Some(p);
                verdict.kernel = None;
            }
            Some(k) => verdict.kernel = Some(primitive_integer_vector(&k)),
        }
    }
    verdict.note = if verdict.independent {
        format!("independent at truncation r <= {r_max}: a finite-degree witness, not a proof for the full product over all r")
    } else if verdict.size > verdict.coordinates {
        format!(
            "dependent: {} elements span at most {} coordinates in degrees r <= {r_max}",
            verdict.size, verdict.coordinates
        )
    } else {
        format!("rank {} < {} at every evaluation point tried in degrees r <= {r_max}; dependency over Q(v) is likely but not certified", verdict.rank, verdict.size)
    };
    verdict
}

/// The `B_3`-type family `{A(delta, lam) : sigma(A) + sigma(lam) <= bound, delta in {0,1}^n}`.
pub fn b3_family(
    n: usize,
    bound: i64,
    r_max: usize,
) -> Result<(Vec<PBWIndex>, Vec<TruncatedElement>)> {
    let idx = pbw_indices(n, bound);
    let images = idx
        .par_iter()
        .map(|i| {
            realize(
                &SymbolicElement::single(i.a.clone(), i.delta.clone(), i.lam.clone())?,
                r_max,
            )
        })
        .collect::<Result<_>>()?;
    Ok((idx, images))
}

/// The PBW-type monomials with `sigma(A) + sigma(lam) <= bound`.
pub fn pbw_family(
    n: usize,
    bound: i64,
    r_max: usize,
    engine: &ProductEngine,
) -> Result<(Vec<PBWIndex>, Vec<TruncatedElement>)> {
    let idx = pbw_indices(n, bound);
    let images = idx
        .par_iter()
        .map(|i| pbw_monomial(i, r_max, engine))
        .collect::<Result<_>>()?;
    Ok((idx, images))
}

/// Smallest `r_max` in `from..=to` at which `family_at(r_max)` is independent.
pub fn first_independent_truncation<F>(
    from: usize,
    to: usize,
    family_at: F,
) -> Result<Option<(usize, IndependenceVerdict)>>
where
    F: Fn(usize) -> Result<Vec<TruncatedElement>>,
{
    for r in from..=to {
        let v = independence_check(&family_at(r)?, &DEFAULT_EVALUATION_POINTS);
        if v.independent {
            return Ok(Some((r, v)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::SchurElement;

    #[test]
    fn trivial_families() {
        let x = realize(&SymbolicElement::one(2), 2).unwrap();
        let v = independence_check(std::slice::from_ref(&x), &DEFAULT_EVALUATION_POINTS);
        assert!(v.independent);
        assert_eq!(v.certified_at, Some(2));
        let two = x.scale(&LaurentPoly::constant(2));
        let v = independence_check(&[x, two], &DEFAULT_EVALUATION_POINTS);
        assert!(!v.independent);
        assert_eq!(v.kernel, Some(vec![Int::from(2), Int::from(-1)]));
        assert_eq!(v.points_tried, DEFAULT_EVALUATION_POINTS.to_vec());
    }

    #[test]
    fn v_dependent_combination_is_not_missed() {
        // [diag(1,0)] and v [diag(1,0)] are dependent over Q(v).
        let x = TruncatedElement::from_components(
            2,
            vec![
                SchurElement::zero(2, 0),
                SchurElement::basis(ThetaMatrix::diag(&[1, 0].into()).unwrap()),
            ],
        )
        .unwrap();
        let v = independence_check(
            &[x.clone(), x.scale(&LaurentPoly::v())],
            &DEFAULT_EVALUATION_POINTS,
        );
        assert!(!v.independent);
    }

    #[test]
    fn small_pbw_family_is_independent() {
        let (_, images) = pbw_family(2, 1, 4, &ProductEngine::default()).unwrap();
        let v = independence_check(&images, &DEFAULT_EVALUATION_POINTS);
        assert!(v.independent, "{v:?}");
    }

    #[test]
    fn bound_two_pbw_family_needs_degree_six() {
        // The 24 torus monomials (A = 0) lie in the span of the diagonal
        // elements, which has dimension 1 + 2 + ... + 6 = 21 in degrees r <= 5.
        let engine = ProductEngine::default();
        let (idx, images) = pbw_family(2, 2, 5, &engine).unwrap();
        assert_eq!(
            idx.iter().filter(|i| i.a == ThetaMatrix::zero(2)).count(),
            24
        );
        assert!(!independence_check(&images, &DEFAULT_EVALUATION_POINTS).independent);
        let (_, images) = pbw_family(2, 2, 6, &engine).unwrap();
        assert!(independence_check(&images, &DEFAULT_EVALUATION_POINTS).independent);
    }
}
