use std::fmt;
use std::ops::{Add, Deref, Sub};

use serde::{Deserialize, Serialize};

/// A length-`n` integer vector: weights `delta` in `Z^n`, compositions
/// `lambda` in `N^n`, and the unit vectors `e_i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntVector(Vec<i64>);

impl IntVector {
    pub fn new(entries: Vec<i64>) -> Self {
        IntVector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        IntVector(vec![0; n])
    }

    /// `e_i` (0-based).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        IntVector(v)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }

    /// `sigma(lam) = sum_i lam_i`.
    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn dot(&self, other: &IntVector) -> i64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn is_natural(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Entrywise `self <= other`.
    pub fn le(&self, other: &IntVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn scaled(&self, k: i64) -> IntVector {
        IntVector(self.0.iter().map(|x| x * k).collect())
    }

    pub fn with(&self, i: usize, value: i64) -> IntVector {
        let mut v = self.0.clone();
        v[i] = value;
        IntVector(v)
    }

    pub fn add_at(&self, i: usize, delta: i64) -> IntVector {
        let mut v = self.0.clone();
        v[i] += delta;
        IntVector(v)
    }
}

impl Deref for IntVector {
    type Target = [i64];

    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for IntVector {
    fn from(v: Vec<i64>) -> Self {
        IntVector(v)
    }
}

impl From<&[i64]> for IntVector {
    fn from(v: &[i64]) -> Self {
        IntVector(v.to_vec())
    }
}

impl<const N: usize> From<[i64; N]> for IntVector {
    fn from(v: [i64; N]) -> Self {
        IntVector(v.to_vec())
    }
}

impl Add<&IntVector> for &IntVector {
    type Output = IntVector;

    fn add(self, rhs: &IntVector) -> IntVector {
        debug_assert_eq!(self.len(), rhs.len());
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&IntVector> for &IntVector {
    type Output = IntVector;

    fn sub(self, rhs: &IntVector) -> IntVector {
        debug_assert_eq!(self.len(), rhs.len());
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Debug for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// All `nu` in `N^n` with `lo <= nu <= hi` entrywise, in lexicographic order.
pub fn box_range(lo: &IntVector, hi: &IntVector) -> Vec<IntVector> {
    let n = lo.len();
    let mut out = Vec::new();
    if lo.iter().zip(hi.iter()).any(|(a, b)| a > b) {
        return out;
    }
    let mut cur = lo.0.clone();
    loop {
        out.push(IntVector(cur.clone()));
        let mut k = n;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cur[k] < hi[k] {
                cur[k] += 1;
                for j in k + 1..n {
                    cur[j] = lo[j];
                }
                break;
            }
        }
    }
}

/// All weak compositions of `r` into `n` parts, lexicographically increasing.
pub fn compositions(n: usize, r: i64) -> Vec<IntVector> {
    let mut out = Vec::new();
    if n == 0 {
        if r == 0 {
            out.push(IntVector(Vec::new()));
        }
        return out;
    }
    if r < 0 {
        return out;
    }
    let mut cur = vec![0i64; n];
    fn rec(cur: &mut Vec<i64>, k: usize, left: i64, out: &mut Vec<IntVector>) {
        let n = cur.len();
        if k == n - 1 {
            cur[k] = left;
            out.push(IntVector(cur.clone()));
            return;
        }
        for x in 0..=left {
            cur[k] = x;
            rec(cur, k + 1, left - x, out);
        }
    }
    rec(&mut cur, 0, r, &mut out);
    out
}
