use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, .., r-1}` in one-line notation: `images[k] = w(k)`.
///
/// Composition is right-to-left, `(u * w)(k) = u(w(k))`, so multiplying by
/// `s_i` on the right swaps the entries in positions `i` and `i+1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(r: usize) -> Self {
        Permutation {
            images: (0..r as u8).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let r = images.len();
        let mut seen = vec![false; r];
        for &x in &images {
            if x >= r || seen[x] {
                return Err(Error::Domain(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u8).collect(),
        })
    }

    /// The simple transposition `s_i = (i, i+1)`, 0-based.
    pub fn simple(r: usize, i: usize) -> Self {
        assert!(i + 1 < r, "s_{i} does not exist in S_{r}");
        let mut w = Permutation::identity(r);
        w.images.swap(i, i + 1);
        w
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, k: usize) -> usize {
        self.images[k] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&x| x as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, &x)| k == x as usize)
    }

    /// Number of inversions.
    pub fn length(&self) -> u32 {
        let mut n = 0;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    n += 1;
                }
            }
        }
        n
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other
                .images
                .iter()
                .map(|&k| self.images[k as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.images.len()];
        for (k, &x) in self.images.iter().enumerate() {
            inv[x as usize] = k as u8;
        }
        Permutation { images: inv }
    }

    /// `self * s_i`.
    pub fn mul_simple_right(&self, i: usize) -> Permutation {
        let mut w = self.clone();
        w.images.swap(i, i + 1);
        w
    }

    /// `s_i * self`.
    pub fn mul_simple_left(&self, i: usize) -> Permutation {
        let (a, b) = (i as u8, i as u8 + 1);
        let images = self
            .images
            .iter()
            .map(|&x| {
                if x == a {
                    b
                } else if x == b {
                    a
                } else {
                    x
                }
            })
            .collect();
        Permutation { images }
    }

    /// A reduced word `[i_1, .., i_m]` with `self = s_{i_1} ... s_{i_m}`,
    /// found by bubble sort.
    pub fn reduced_word(&self) -> Vec<usize> {
        // Sorting by adjacent swaps gives self * s_{j_1} ... s_{j_m} = id,
        // so the word is the swap sequence reversed.
        let mut w = self.images.clone();
        let mut swaps = Vec::new();
        let r = w.len();
        for pass in 0..r {
            for j in 0..r.saturating_sub(pass + 1) {
                if w[j] > w[j + 1] {
                    w.swap(j, j + 1);
                    swaps.push(j);
                }
            }
        }
        swaps.reverse();
        swaps
    }

    /// Position of `self` in the lexicographic listing of `S_r`.
    pub fn lex_rank(&self) -> usize {
        let r = self.images.len();
        let mut rank = 0;
        for i in 0..r {
            let smaller = self.images[i + 1..]
                .iter()
                .filter(|&&x| x < self.images[i])
                .count();
            rank = rank * (r - i) + smaller;
        }
        rank
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// One-line notation with 1-based entries, e.g. `[2,1,3]`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x + 1)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(xs: &[usize]) -> Permutation {
        Permutation::from_images(xs.to_vec()).unwrap()
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![1, 2]).is_err());
    }

    #[test]
    fn composition_convention() {
        let s0 = Permutation::simple(3, 0);
        let s1 = Permutation::simple(3, 1);
        // (s0 s1)(2) = s0(s1(2)) = s0(1) = 0.
        assert_eq!(s0.compose(&s1).apply(2), 0);
        assert_eq!(s0.compose(&s1), s0.mul_simple_right(1));
        assert_eq!(s0.compose(&s1), s1.mul_simple_left(0));
        let w = perm(&[2, 0, 3, 1]);
        assert!(w.compose(&w.inverse()).is_identity());
    }

    #[test]
    fn reduced_words_have_length_many_letters() {
        let w = perm(&[3, 1, 0, 2]);
        let word = w.reduced_word();
        assert_eq!(word.len() as u32, w.length());
        let rebuilt = word
            .iter()
            .fold(Permutation::identity(4), |acc, &i| acc.mul_simple_right(i));
        assert_eq!(rebuilt, w);
    }

    #[test]
    fn lex_rank_orders_s3() {
        let all = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        for (k, p) in all.iter().enumerate() {
            assert_eq!(perm(p).lex_rank(), k);
        }
    }

    #[test]
    fn display_is_one_based() {
        assert_eq!(perm(&[1, 0, 2]).to_string(), "[2,1,3]");
    }
}
