use std::borrow::Cow;

use super::element::SchurElement;
use super::matrix::ThetaMatrix;
use crate::error::{Error, Result};
use crate::laurent::{
    balanced_binomial, balanced_binomial_ref, compositions, vector_binomial, Int, IntVector,
    LaurentPoly,
};

pub(crate) fn binom(n: i64, t: i64) -> Cow<'static, LaurentPoly> {
    debug_assert!(t >= 0);
    match balanced_binomial_ref(n, t as u32) {
        Some(p) => Cow::Borrowed(p),
        None => Cow::Owned(balanced_binomial(n, t as u32)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `[diag(lam)][A]` or `[A][diag(lam)]`.
pub fn diag_mult(lam: &IntVector, a: &ThetaMatrix, side: Side) -> Result<SchurElement> {
    if lam.len() != a.n() {
        return Err(Error::Dimension {
            expected: a.n(),
            found: lam.len(),
        });
    }
    if !lam.is_natural() || lam.sum() != a.sigma() {
        return Err(Error::Domain(format!(
            "{lam} is not in Lambda({}, {})",
            a.n(),
            a.sigma()
        )));
    }
    let hit = match side {
        Side::Left => *lam == a.ro(),
        Side::Right => *lam == a.co(),
    };
    Ok(if hit {
        SchurElement::basis(a.clone())
    } else {
        SchurElement::zero(a.n(), a.sigma() as usize)
    })
}

fn check_row(h: usize, n: usize) -> Result<()> {
    if h + 1 >= n {
        return Err(Error::Domain(format!(
            "row index {h} needs h + 1 < n = {n}"
        )));
    }
    Ok(())
}

/// `[B_m][A]` for `B_m = diag(ro(A)) + m E_{h,h+1} - m E_{h+1,h+1}` (0-based `h`).
pub fn multiply_bm(h: usize, m: i64, a: &ThetaMatrix) -> Result<SchurElement> {
    let n = a.n();
    check_row(h, n)?;
    let ro = a.ro();
    if m < 0 || m > ro[h + 1] {
        return Err(Error::Domain(format!("m = {m} outside 0..={}", ro[h + 1])));
    }
    let mut out = SchurElement::zero(n, a.sigma() as usize);
    let base = a.signed_entries();
    for t in compositions(n, m) {
        if (0..n).any(|u| t[u] > a.get(h + 1, u)) {
            continue;
        }
        let mut e = 0;
        let mut coeff = Cow::Owned(LaurentPoly::one());
        let mut entries = base.clone();
        for u in 0..n {
            let tu = t[u];
            if tu == 0 {
                continue;
            }
            let upper: i64 = (u..n).map(|j| a.get(h, j)).sum();
            let lower: i64 = (u + 1..n).map(|j| a.get(h + 1, j)).sum();
            let cross: i64 = t[u + 1..].iter().sum();
            e += tu * (upper - lower + cross);
            // bar[[a+t over t]] = v^{-t a} [a+t over t]
            let ahu = a.get(h, u);
            e -= tu * ahu;
            coeff = Cow::Owned(&*coeff * &*binom(ahu + tu, tu));
            entries[h * n + u] += tu;
            entries[(h + 1) * n + u] -= tu;
        }
        let key = ThetaMatrix::from_signed(n, &entries).expect("t_u <= a_{h+1,u}");
        out.push(key, &coeff, &Int::ONE, e);
    }
    Ok(out)
}

/// `[C_m][A]` for `C_m = diag(ro(A)) - m E_{h,h} + m E_{h+1,h}` (0-based `h`).
pub fn multiply_cm(h: usize, m: i64, a: &ThetaMatrix) -> Result<SchurElement> {
    let n = a.n();
    check_row(h, n)?;
    let ro = a.ro();
    if m < 0 || m > ro[h] {
        return Err(Error::Domain(format!("m = {m} outside 0..={}", ro[h])));
    }
    let mut out = SchurElement::zero(n, a.sigma() as usize);
    let base = a.signed_entries();
    for t in compositions(n, m) {
        if (0..n).any(|u| t[u] > a.get(h, u)) {
            continue;
        }
        let mut e = 0;
        let mut coeff = Cow::Owned(LaurentPoly::one());
        let mut entries = base.clone();
        for u in 0..n {
            let tu = t[u];
            if tu == 0 {
                continue;
            }
            let lower: i64 = (0..=u).map(|j| a.get(h + 1, j)).sum();
            let upper: i64 = (0..u).map(|j| a.get(h, j)).sum();
            let cross: i64 = t[u + 1..].iter().sum();
            e += tu * (lower - upper + cross);
            let ahu = a.get(h + 1, u);
            e -= tu * ahu;
            coeff = Cow::Owned(&*coeff * &*binom(ahu + tu, tu));
            entries[h * n + u] -= tu;
            entries[(h + 1) * n + u] += tu;
        }
        let key = ThetaMatrix::from_signed(n, &entries).expect("t_u <= a_{h,u}");
        out.push(key, &coeff, &Int::ONE, e);
    }
    Ok(out)
}

/// `A(delta, lam, r) = sum_{mu in Lambda(n, r - sigma(A))} v^{mu.delta} [mu over lam] [A + diag(mu)]`
/// for `A` with zero diagonal.
pub fn element_a(
    a: &ThetaMatrix,
    delta: &IntVector,
    lam: &IntVector,
    r: usize,
) -> Result<SchurElement> {
    let n = a.n();
    for v in [delta, lam] {
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
    let mut out = SchurElement::zero(n, r);
    let rest = r as i64 - a.sigma();
    for mu in compositions(n, rest) {
        let c = vector_binomial(&mu, lam)?;
        if c.is_zero() {
            continue;
        }
        out.push(
            a.plus_diag(&mu).expect("natural"),
            &c,
            &Int::ONE,
            mu.dot(delta),
        );
    }
    Ok(out)
}

/// [`element_a`] for signed off-diagonal entries (row-major, diagonal
/// ignored); zero whenever an off-diagonal entry is negative.
pub fn element_a_signed(
    n: usize,
    entries: &[i64],
    delta: &IntVector,
    lam: &IntVector,
    r: usize,
) -> Result<SchurElement> {
    if entries.len() != n * n {
        return Err(Error::Dimension {
            expected: n * n,
            found: entries.len(),
        });
    }
    let mut off = entries.to_vec();
    for i in 0..n {
        off[i * n + i] = 0;
    }
    match ThetaMatrix::from_signed(n, &off) {
        Some(a) => element_a(&a, delta, lam, r),
        None => Ok(SchurElement::zero(n, r)),
    }
}
