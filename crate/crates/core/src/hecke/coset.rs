use std::collections::VecDeque;
use std::ops::Range;

use super::algebra::HeckeElt;
use super::group::SymmetricGroup;
use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::laurent::{IntVector, LaurentPoly};
use crate::schur::ThetaMatrix;

/// A triple `(lam, d, mu)` with `d` the distinguished (minimal length)
/// representative of its `(S_lam, S_mu)` double coset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CosetIndex {
    pub lam: IntVector,
    pub d: Permutation,
    pub mu: IntVector,
}

/// The `i`-th block `R_i^lam` of consecutive letters, 0-based.
pub fn row_blocks(lam: &IntVector, i: usize) -> Result<Range<usize>> {
    if i >= lam.len() {
        return Err(Error::Domain(format!("block {i} out of range for {lam}")));
    }
    check_composition(lam)?;
    let start: i64 = lam[..i].iter().sum();
    Ok(start as usize..(start + lam[i]) as usize)
}

fn check_composition(lam: &IntVector) -> Result<()> {
    if !lam.is_natural() {
        return Err(Error::Domain(format!("{lam} is not a composition")));
    }
    Ok(())
}

/// Block index of each letter.
pub(crate) fn block_map(lam: &IntVector) -> Vec<usize> {
    lam.iter()
        .enumerate()
        .flat_map(|(i, &x)| std::iter::repeat_n(i, x as usize))
        .collect()
}

/// Simple reflections `s_i` lying in `S_lam`.
pub(crate) fn young_generators(lam: &IntVector) -> Vec<usize> {
    let blocks = block_map(lam);
    (0..blocks.len().saturating_sub(1))
        .filter(|&i| blocks[i] == blocks[i + 1])
        .collect()
}

pub fn in_young_subgroup(w: &Permutation, lam: &IntVector) -> bool {
    let blocks = block_map(lam);
    blocks.len() == w.degree() && (0..w.degree()).all(|k| blocks[w.apply(k)] == blocks[k])
}

/// `x_lam = sum_{w in S_lam} T_w`.
pub fn x_lambda(lam: &IntVector) -> Result<HeckeElt> {
    check_composition(lam)?;
    let r = lam.sum() as usize;
    let g = SymmetricGroup::get(r)?;
    let mut x = HeckeElt::zero(r);
    for w in g.elements().iter().filter(|w| in_young_subgroup(w, lam)) {
        x.add_term(w.clone(), &LaurentPoly::one());
    }
    Ok(x)
}

/// Closure of `start` under `w -> s_i w` for `i` in `left` and `w -> w s_j`
/// for `j` in `right`. Young subgroups are generated by their simple
/// reflections, so this is the double coset `S_lam w S_mu`.
pub(crate) fn orbit(
    g: &SymmetricGroup,
    start: usize,
    left: &[usize],
    right: &[usize],
) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    let mut queue = VecDeque::from([start]);
    seen[start] = true;
    let mut out = Vec::new();
    while let Some(w) = queue.pop_front() {
        out.push(w);
        let lefts = left
            .iter()
            .map(|&i| g.index_of(&g.element(w).mul_simple_left(i)));
        let rights = right.iter().map(|&j| g.right_simple(w, j));
        for x in lefts.chain(rights) {
            if !seen[x] {
                seen[x] = true;
                queue.push_back(x);
            }
        }
    }
    out.sort_unstable();
    out
}

pub(crate) struct DoubleCoset {
    pub rep: usize,
    pub members: Vec<usize>,
}

/// All `(S_lam, S_mu)` double cosets, found by scanning `S_r` in
/// lexicographic order; each representative is the minimal-length member.
pub(crate) fn double_cosets(
    g: &SymmetricGroup,
    lam: &IntVector,
    mu: &IntVector,
) -> Vec<DoubleCoset> {
    let (left, right) = (young_generators(lam), young_generators(mu));
    let mut covered = vec![false; g.order()];
    let mut out = Vec::new();
    for w in 0..g.order() {
        if covered[w] {
            continue;
        }
        let members = orbit(g, w, &left, &right);
        for &x in &members {
            covered[x] = true;
        }
        let rep = *members
            .iter()
            .min_by_key(|&&x| g.length(x))
            .expect("nonempty orbit");
        out.push(DoubleCoset { rep, members });
    }
    out
}

fn check_pair(lam: &IntVector, mu: &IntVector) -> Result<usize> {
    check_composition(lam)?;
    check_composition(mu)?;
    if lam.sum() != mu.sum() {
        return Err(Error::Domain(format!(
            "{lam} and {mu} have different sizes"
        )));
    }
    Ok(lam.sum() as usize)
}

/// The distinguished `(S_lam, S_mu)` double coset representatives.
pub fn distinguished_reps(lam: &IntVector, mu: &IntVector) -> Result<Vec<Permutation>> {
    let r = check_pair(lam, mu)?;
    let g = SymmetricGroup::get(r)?;
    Ok(double_cosets(g, lam, mu)
        .into_iter()
        .map(|c| g.element(c.rep).clone())
        .collect())
}

/// `a_{kl} = |R_k^lam ∩ d R_l^mu|`.
pub fn coset_to_matrix(c: &CosetIndex) -> Result<ThetaMatrix> {
    let r = check_pair(&c.lam, &c.mu)?;
    if c.lam.len() != c.mu.len() {
        return Err(Error::Dimension {
            expected: c.lam.len(),
            found: c.mu.len(),
        });
    }
    if c.d.degree() != r {
        return Err(Error::Dimension {
            expected: r,
            found: c.d.degree(),
        });
    }
    let n = c.lam.len();
    let (row_of, col_of) = (block_map(&c.lam), block_map(&c.mu));
    let mut entries = vec![0u32; n * n];
    for x in 0..r {
        entries[row_of[c.d.apply(x)] * n + col_of[x]] += 1;
    }
    ThetaMatrix::new(n, entries)
}

/// Inverse of [`coset_to_matrix`]. Built directly: the letters of each
/// column block `R_l^mu` are sent, in increasing order, to the first unused
/// letters of `R_1^lam` (`a_{1l}` of them), then of `R_2^lam`, and so on.
/// The result is increasing on every `R_l^mu` and its inverse on every
/// `R_k^lam`, which characterizes the minimal representative.
pub fn matrix_to_coset(a: &ThetaMatrix) -> CosetIndex {
    let n = a.n();
    let (lam, mu) = (a.ro(), a.co());
    let mut next: Vec<usize> = (0..n)
        .map(|k| lam[..k].iter().sum::<i64>() as usize)
        .collect();
    let mut images = Vec::with_capacity(a.sigma() as usize);
    for l in 0..n {
        for (k, slot) in next.iter_mut().enumerate() {
            for _ in 0..a.get(k, l) {
                images.push(*slot);
                *slot += 1;
            }
        }
    }
    let d = Permutation::from_images(images).expect("block assignment is a bijection");
    CosetIndex { lam, d, mu }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::compositions;
    use crate::schur::theta_matrices;

    fn iv(xs: &[i64]) -> IntVector {
        IntVector::from(xs)
    }

    #[test]
    fn blocks() {
        assert_eq!(row_blocks(&iv(&[2, 1]), 0).unwrap(), 0..2);
        assert_eq!(row_blocks(&iv(&[2, 1]), 1).unwrap(), 2..3);
        assert!(row_blocks(&iv(&[0, 3]), 0).unwrap().is_empty());
        assert!(row_blocks(&iv(&[0, 3]), 2).is_err());
    }

    #[test]
    fn representative_examples() {
        let id = Permutation::identity(2);
        let s = Permutation::simple(2, 0);
        assert_eq!(
            distinguished_reps(&iv(&[1, 1]), &iv(&[1, 1])).unwrap(),
            vec![id.clone(), s]
        );
        assert_eq!(
            distinguished_reps(&iv(&[2]), &iv(&[2])).unwrap(),
            vec![id.clone()]
        );
        assert_eq!(
            distinguished_reps(&iv(&[1, 1]), &iv(&[2])).unwrap(),
            vec![id]
        );
        assert!(distinguished_reps(&iv(&[1, 1]), &iv(&[3])).is_err());
    }

    #[test]
    fn x_lambda_examples() {
        assert_eq!(x_lambda(&iv(&[1, 1])).unwrap(), HeckeElt::one(2));
        let s2 = HeckeElt::one(2).add(&HeckeElt::generator(2, 0)).unwrap();
        assert_eq!(x_lambda(&iv(&[2])).unwrap(), s2);
        let s21 = HeckeElt::one(3).add(&HeckeElt::generator(3, 0)).unwrap();
        assert_eq!(x_lambda(&iv(&[2, 1])).unwrap(), s21);
    }

    #[test]
    fn matrix_examples() {
        let lam = iv(&[1, 1]);
        let c = CosetIndex {
            lam: lam.clone(),
            d: Permutation::identity(2),
            mu: lam.clone(),
        };
        assert_eq!(
            coset_to_matrix(&c).unwrap(),
            ThetaMatrix::diag(&lam).unwrap()
        );
        let c = CosetIndex {
            lam: lam.clone(),
            d: Permutation::simple(2, 0),
            mu: lam,
        };
        let expect = ThetaMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(coset_to_matrix(&c).unwrap(), expect);
    }

    #[test]
    fn cosets_partition_and_biject_with_matrices() {
        for n in 1..=4usize {
            for r in 0..=4i64 {
                let g = SymmetricGroup::get(r as usize).unwrap();
                let comps = compositions(n, r);
                let mut count = 0;
                for lam in &comps {
                    for mu in &comps {
                        let cosets = double_cosets(g, lam, mu);
                        let total: usize = cosets.iter().map(|c| c.members.len()).sum();
                        assert_eq!(total, g.order());
                        for c in &cosets {
                            let d = g.element(c.rep).clone();
                            let idx = CosetIndex {
                                lam: lam.clone(),
                                d: d.clone(),
                                mu: mu.clone(),
                            };
                            let a = coset_to_matrix(&idx).unwrap();
                            assert_eq!((a.ro(), a.co()), (lam.clone(), mu.clone()));
                            assert_eq!(matrix_to_coset(&a), idx);
                            // every member of the coset gives the same matrix
                            for &w in &c.members {
                                let other = CosetIndex {
                                    d: g.element(w).clone(),
                                    ..idx.clone()
                                };
                                assert_eq!(coset_to_matrix(&other).unwrap(), a);
                            }
                        }
                        count += cosets.len();
                    }
                }
                assert_eq!(count, theta_matrices(n, r).len(), "n={n} r={r}");
                for a in theta_matrices(n, r) {
                    assert_eq!(coset_to_matrix(&matrix_to_coset(&a)).unwrap(), a);
                }
            }
        }
    }
}
