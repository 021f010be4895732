use std::sync::OnceLock;

use super::perm::Permutation;
use crate::error::{Error, Result};

/// Largest degree for which group tables can be built.
pub const MAX_TABLE_DEGREE: usize = 8;

/// `S_r` listed lexicographically, with lengths and right multiplication by
/// simple reflections precomputed. Built once per degree and shared.
pub struct SymmetricGroup {
    r: usize,
    elements: Vec<Permutation>,
    lengths: Vec<u32>,
    right_simple: Vec<Vec<u32>>,
}

impl SymmetricGroup {
    pub fn get(r: usize) -> Result<&'static SymmetricGroup> {
        static TABLES: [OnceLock<SymmetricGroup>; MAX_TABLE_DEGREE + 1] =
            [const { OnceLock::new() }; MAX_TABLE_DEGREE + 1];
        if r > MAX_TABLE_DEGREE {
            return Err(Error::Resource {
                r,
                cap: MAX_TABLE_DEGREE,
            });
        }
        Ok(TABLES[r].get_or_init(|| SymmetricGroup::build(r)))
    }

    fn build(r: usize) -> SymmetricGroup {
        let mut elements = Vec::new();
        let mut cur: Vec<usize> = (0..r).collect();
        loop {
            elements.push(Permutation::from_images(cur.clone()).expect("valid"));
            if !next_permutation(&mut cur) {
                break;
            }
        }
        let lengths = elements.iter().map(Permutation::length).collect();
        let right_simple = elements
            .iter()
            .map(|w| {
                (0..r.saturating_sub(1))
                    .map(|i| w.mul_simple_right(i).lex_rank() as u32)
                    .collect()
            })
            .collect();
        SymmetricGroup {
            r,
            elements,
            lengths,
            right_simple,
        }
    }

    pub fn degree(&self) -> usize {
        self.r
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    #[inline]
    pub fn element(&self, k: usize) -> &Permutation {
        &self.elements[k]
    }

    #[inline]
    pub fn length(&self, k: usize) -> u32 {
        self.lengths[k]
    }

    /// Index of `w * s_i`.
    #[inline]
    pub fn right_simple(&self, k: usize, i: usize) -> usize {
        self.right_simple[k][i] as usize
    }

    pub fn index_of(&self, w: &Permutation) -> usize {
        debug_assert_eq!(w.degree(), self.r);
        w.lex_rank()
    }

    pub fn compose(&self, a: usize, b: usize) -> usize {
        self.elements[a].compose(&self.elements[b]).lex_rank()
    }
}

fn next_permutation(xs: &mut [usize]) -> bool {
    let n = xs.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}
