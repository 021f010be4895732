use std::fmt;

use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::laurent::{compositions, IntVector};

/// An `n x n` matrix over `N`, indexing the basis `[A]` of `S(n, sigma(A))`.
///
/// The derived order compares `n` first and then entries row-major, which is
/// the canonical key order for every element type in the crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThetaMatrix {
    n: usize,
    entries: Vec<u32>,
}

impl ThetaMatrix {
    /// Row-major entries.
    pub fn new(n: usize, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::Dimension {
                expected: n * n,
                found: entries.len(),
            });
        }
        Ok(ThetaMatrix { n, entries })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::Dimension {
                    expected: n,
                    found: row.len(),
                });
            }
            for &x in row {
                let x = u32::try_from(x).map_err(|_| {
                    Error::Domain(format!("matrix entry {x} is not a small natural number"))
                })?;
                entries.push(x);
            }
        }
        Ok(ThetaMatrix { n, entries })
    }

    /// Row-major signed entries; `None` when some entry is negative, which
    /// is how the convention `[A] = 0` for such `A` enters every formula.
    pub fn from_signed(n: usize, entries: &[i64]) -> Option<Self> {
        debug_assert_eq!(entries.len(), n * n);
        let entries = entries
            .iter()
            .map(|&x| u32::try_from(x).ok())
            .collect::<Option<Vec<u32>>>()?;
        Some(ThetaMatrix { n, entries })
    }

    pub fn zero(n: usize) -> Self {
        ThetaMatrix {
            n,
            entries: vec![0; n * n],
        }
    }

    /// `E_{i,j}` (0-based).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = ThetaMatrix::zero(n);
        m.entries[i * n + j] = 1;
        m
    }

    pub fn diag(lam: &IntVector) -> Result<Self> {
        if !lam.is_natural() {
            return Err(Error::Domain(format!(
                "diagonal {lam} has a negative entry"
            )));
        }
        let n = lam.len();
        let mut m = ThetaMatrix::zero(n);
        for (i, &x) in lam.iter().enumerate() {
            m.entries[i * n + i] = x as u32;
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j] as i64
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn signed_entries(&self) -> Vec<i64> {
        self.entries.iter().map(|&x| x as i64).collect()
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).collect())
            .collect()
    }

    /// `sigma(A)`, the degree `r` with `A in Theta(n, r)`.
    pub fn sigma(&self) -> i64 {
        self.entries.iter().map(|&x| x as i64).sum()
    }

    pub fn ro(&self) -> IntVector {
        IntVector::new(
            (0..self.n)
                .map(|i| (0..self.n).map(|j| self.get(i, j)).sum())
                .collect(),
        )
    }

    pub fn co(&self) -> IntVector {
        IntVector::new(
            (0..self.n)
                .map(|j| (0..self.n).map(|i| self.get(i, j)).sum())
                .collect(),
        )
    }

    pub fn diagonal(&self) -> IntVector {
        IntVector::new((0..self.n).map(|i| self.get(i, i)).collect())
    }

    pub fn is_diagonal(&self) -> bool {
        self.off_diagonal_entries().next().is_none()
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i) == 0)
    }

    /// Nonzero off-diagonal entries as `(i, j, a_ij)`.
    pub fn off_diagonal_entries(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        (0..self.n * self.n).filter_map(move |k| {
            let (i, j) = (k / self.n, k % self.n);
            (i != j && self.entries[k] != 0).then(|| (i, j, self.entries[k] as i64))
        })
    }

    /// `A` with its diagonal cleared.
    pub fn off_diagonal(&self) -> ThetaMatrix {
        let mut m = self.clone();
        for i in 0..self.n {
            m.entries[i * self.n + i] = 0;
        }
        m
    }

    /// `A + diag(mu)`, or `None` if an entry would become negative.
    pub fn plus_diag(&self, mu: &IntVector) -> Option<ThetaMatrix> {
        let mut m = self.clone();
        for (i, &x) in mu.iter().enumerate() {
            let k = i * self.n + i;
            m.entries[k] = u32::try_from(m.entries[k] as i64 + x).ok()?;
        }
        Some(m)
    }

    /// Adds `delta` to entry `(i, j)`; `None` if it would become negative.
    pub fn add_at(&self, i: usize, j: usize, delta: i64) -> Option<ThetaMatrix> {
        let mut m = self.clone();
        let k = i * self.n + j;
        m.entries[k] = u32::try_from(m.entries[k] as i64 + delta).ok()?;
        Some(m)
    }

    /// `(A^+, A^-)`, the strictly upper and strictly lower parts of a matrix
    /// with zero diagonal.
    pub fn theta_pm_decompose(&self) -> Result<(ThetaMatrix, ThetaMatrix)> {
        if !self.has_zero_diagonal() {
            return Err(Error::Domain(format!("{self} has a nonzero diagonal")));
        }
        let mut upper = ThetaMatrix::zero(self.n);
        let mut lower = ThetaMatrix::zero(self.n);
        for (i, j, x) in self.off_diagonal_entries() {
            let target = if i < j { &mut upper } else { &mut lower };
            target.entries[i * self.n + j] = x as u32;
        }
        Ok((upper, lower))
    }
}

/// All of `Theta(n, r)` in canonical order.
pub fn theta_matrices(n: usize, r: i64) -> Vec<ThetaMatrix> {
    // Lexicographic compositions of r into n^2 parts are already in
    // row-major order.
    compositions(n * n, r)
        .into_iter()
        .map(|c| ThetaMatrix {
            n,
            entries: c.iter().map(|&x| x as u32).collect(),
        })
        .collect()
}

/// All zero-diagonal `A` with `sigma(A) <= max_sigma`, in canonical order.
pub fn theta_pm_matrices(n: usize, max_sigma: i64) -> Vec<ThetaMatrix> {
    let off = n * n - n;
    let mut out: Vec<ThetaMatrix> = (0..=max_sigma)
        .flat_map(|s| compositions(off, s))
        .map(|c| {
            let mut m = ThetaMatrix::zero(n);
            let mut it = c.iter();
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        m.entries[i * n + j] = *it.next().expect("length n^2 - n") as u32;
                    }
                }
            }
            m
        })
        .collect();
    out.sort();
    out
}

impl fmt::Debug for ThetaMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ThetaMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl Serialize for ThetaMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<&[u32]> = self.entries.chunks(self.n.max(1)).collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ThetaMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<i64>>::deserialize(d)?;
        ThetaMatrix::from_rows(&rows).map_err(de::Error::custom)
    }
}
