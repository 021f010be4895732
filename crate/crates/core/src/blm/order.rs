//! The partial order `≼` on `Θ±(n)` and the norm `‖A‖`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::schur::ThetaMatrix;

/// `σ_{i,j}(A)`, 0-based. For `i < j` it is `sum_{s <= i, t >= j} a_{s,t}`;
/// for `i > j` it is `sum_{s <= j, t >= i} a_{t,s}`.
pub fn sigma_ij(a: &ThetaMatrix, i: usize, j: usize) -> i64 {
    let n = a.n();
    if i < j {
        (0..=i)
            .flat_map(|s| (j..n).map(move |t| (s, t)))
            .map(|(s, t)| a.get(s, t))
            .sum()
    } else if i > j {
        (0..=j)
            .flat_map(|s| (i..n).map(move |t| (t, s)))
            .map(|(t, s)| a.get(t, s))
            .sum()
    } else {
        0
    }
}

fn check(b: &ThetaMatrix, a: &ThetaMatrix) -> Result<()> {
    if b.n() != a.n() {
        return Err(Error::Dimension {
            expected: a.n(),
            found: b.n(),
        });
    }
    for m in [a, b] {
        if !m.has_zero_diagonal() {
            return Err(Error::Domain(format!("{m} has a nonzero diagonal")));
        }
    }
    Ok(())
}

/// `b ≼ a`.
pub fn preceq(b: &ThetaMatrix, a: &ThetaMatrix) -> Result<bool> {
    check(b, a)?;
    let n = a.n();
    Ok((0..n).all(|i| (0..n).all(|j| i == j || sigma_ij(b, i, j) <= sigma_ij(a, i, j))))
}

/// `b ≺ a`: `b ≼ a` with some partial sum strictly smaller.
pub fn precedes(b: &ThetaMatrix, a: &ThetaMatrix) -> Result<bool> {
    check(b, a)?;
    let n = a.n();
    let mut strict = false;
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            match sigma_ij(b, i, j).cmp(&sigma_ij(a, i, j)) {
                Ordering::Greater => return Ok(false),
                Ordering::Less => strict = true,
                Ordering::Equal => {}
            }
        }
    }
    Ok(strict)
}

/// `Less` when `b ≺ a`, `Greater` when `a ≺ b`, `None` when equal or incomparable.
pub fn order_compare(b: &ThetaMatrix, a: &ThetaMatrix) -> Result<Option<Ordering>> {
    if precedes(b, a)? {
        Ok(Some(Ordering::Less))
    } else if precedes(a, b)? {
        Ok(Some(Ordering::Greater))
    } else {
        Ok(None)
    }
}

/// `‖A‖ = sum_{r != s} (|s-r|)(|s-r|+1)/2 a_{rs}`.
pub fn norm(a: &ThetaMatrix) -> u64 {
    a.off_diagonal_entries()
        .map(|(r, s, x)| {
            let d = r.abs_diff(s) as u64;
            d * (d + 1) / 2 * x as u64
        })
        .sum()
}
