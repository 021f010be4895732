//! The ordered product of divided powers attached to `A` in `Θ±(n)` and its
//! leading term `A(0)`.

use serde::Serialize;

use super::formulas::{delta_reduce, left_e, left_f};
use super::order::{norm, precedes};
use super::symbolic::{realize, Key, SymbolicElement, TruncatedElement};
use crate::error::{Error, Result};
use crate::laurent::{IntVector, LaurentPoly};
use crate::schur::ThetaMatrix;

/// A divided-power factor, 0-based `h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Factor {
    /// `(m E_{h,h+1})(0)`.
    E { h: usize, m: i64 },
    /// `(m E_{h+1,h})(0)`.
    F { h: usize, m: i64 },
}

impl Factor {
    /// `self * x`.
    pub fn apply(&self, x: &SymbolicElement) -> Result<SymbolicElement> {
        match *self {
            Factor::E { h, m } => left_e(m, h, x),
            Factor::F { h, m } => left_f(m, h, x),
        }
    }

    /// `self` as an element of `V(n)`.
    pub fn element(&self, n: usize) -> Result<SymbolicElement> {
        let (i, j, m) = match *self {
            Factor::E { h, m } => (h, h + 1, m),
            Factor::F { h, m } => (h + 1, h, m),
        };
        if j.max(i) >= n {
            return Err(Error::Domain(format!("{self:?} needs n > {}", i.max(j))));
        }
        let a = ThetaMatrix::zero(n)
            .add_at(i, j, m)
            .ok_or_else(|| Error::Domain(format!("divided power {m} is negative")))?;
        SymbolicElement::single(a, IntVector::zeros(n), IntVector::zeros(n))
    }
}

/// The factors of `E^(A+) F^(A-)` from left to right, omitting `m = 0`.
///
/// `E^(A+) = M_n ... M_2` with
/// `M_j = (a_{j-1,j} E_{j-1,j}) (a_{j-2,j} E_{j-2,j-1} E_{j-1,j}) ... (a_{1j} E_{1,2} ... E_{j-1,j})`
/// in 1-based indices, each `(a E_{i,i+1} ... E_{j-1,j})` standing for
/// `(a E_{i,i+1})(0) ... (a E_{j-1,j})(0)`. `F^(A-) = M'_2 ... M'_n` with
/// `M'_j = (a_{j1} E_{j,j-1} ... E_{2,1}) ... (a_{j,j-1} E_{j,j-1})`.
pub fn pbw_factors(a: &ThetaMatrix) -> Result<Vec<Factor>> {
    if !a.has_zero_diagonal() {
        return Err(Error::Domain(format!("{a} has a nonzero diagonal")));
    }
    let n = a.n();
    let mut out = Vec::new();
    for j in (1..n).rev() {
        for i in (0..j).rev() {
            let m = a.get(i, j);
            if m > 0 {
                out.extend((i..j).map(|h| Factor::E { h, m }));
            }
        }
    }
    for j in 1..n {
        for i in 0..j {
            let m = a.get(j, i);
            if m > 0 {
                out.extend((i..j).rev().map(|h| Factor::F { h, m }));
            }
        }
    }
    Ok(out)
}

/// The ordered product of `factors` in `V(n)`, with binary `delta` keys.
pub fn factor_product(n: usize, factors: &[Factor]) -> Result<SymbolicElement> {
    let mut x = SymbolicElement::one(n);
    for f in factors.iter().rev() {
        x = delta_reduce(&f.apply(&x)?);
    }
    Ok(x)
}

/// Outcome of the leading-term check for one matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangularReport {
    #[serde(rename = "A")]
    pub a: ThetaMatrix,
    pub factors: Vec<Factor>,
    /// Coefficient of `A(0)` in the product.
    pub leading: LaurentPoly,
    /// Number of other keys.
    pub lower_terms: usize,
    /// Other keys `(B, delta, lam)` with `B ≺ A` failing or `‖B‖ >= ‖A‖`.
    pub violations: Vec<Key>,
    /// Whether the realized product agrees with the componentwise product of
    /// the realized factors, when that comparison was made.
    pub cross_checked: Option<bool>,
}

impl TriangularReport {
    pub fn passed(&self) -> bool {
        self.leading.is_one() && self.violations.is_empty() && self.cross_checked != Some(false)
    }
}

/// The product attached to `a`, realized up to `r_max`, with its report.
pub fn triangular_product(
    a: &ThetaMatrix,
    r_max: usize,
) -> Result<(TruncatedElement, TriangularReport)> {
    let (x, report) = triangular_symbolic(a)?;
    Ok((realize(&x, r_max)?, report))
}

/// The symbolic product attached to `a` with its report.
pub fn triangular_symbolic(a: &ThetaMatrix) -> Result<(SymbolicElement, TriangularReport)> {
    let n = a.n();
    let factors = pbw_factors(a)?;
    let x = factor_product(n, &factors)?;
    let lead = Key {
        a: a.clone(),
        delta: IntVector::zeros(n),
        lam: IntVector::zeros(n),
    };
    let na = norm(a);
    let mut violations = Vec::new();
    for (key, _) in x.terms() {
        if *key == lead {
            continue;
        }
        if !precedes(&key.a, a)? || norm(&key.a) >= na {
            violations.push(key.clone());
        }
    }
    let leading = x.coeff(&lead);
    let report = TriangularReport {
        a: a.clone(),
        factors,
        lower_terms: x.len() - usize::from(!leading.is_zero()),
        leading,
        violations,
        cross_checked: None,
    };
    Ok((x, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::{theta_pm_matrices, ProductEngine};

    #[test]
    fn factor_order() {
        let a = ThetaMatrix::from_rows(&[vec![0, 1, 2], vec![3, 0, 4], vec![5, 6, 0]]).unwrap();
        let f = pbw_factors(&a).unwrap();
        use Factor::*;
        assert_eq!(
            f,
            vec![
                E { h: 1, m: 4 },
                E { h: 0, m: 2 },
                E { h: 1, m: 2 },
                E { h: 0, m: 1 },
                F { h: 0, m: 3 },
                F { h: 1, m: 5 },
                F { h: 0, m: 5 },
                F { h: 1, m: 6 },
            ]
        );
    }

    #[test]
    fn single_generator() {
        let a = ThetaMatrix::unit(2, 0, 1);
        let (x, rep) = triangular_symbolic(&a).unwrap();
        assert_eq!(
            x,
            SymbolicElement::single(a, IntVector::zeros(2), IntVector::zeros(2)).unwrap()
        );
        assert!(rep.passed());
        assert_eq!(rep.lower_terms, 0);
    }

    #[test]
    fn two_by_two_with_both_parts() {
        let a = ThetaMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        let (x, rep) = triangular_symbolic(&a).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert!(rep.lower_terms > 0);
        assert!(x
            .terms()
            .all(|(k, _)| k.a == a || k.a == ThetaMatrix::zero(2)));
        let engine = ProductEngine::default();
        let e = Factor::E { h: 0, m: 1 }.element(2).unwrap();
        let f = Factor::F { h: 0, m: 1 }.element(2).unwrap();
        let direct = realize(&e, 4)
            .unwrap()
            .product(&realize(&f, 4).unwrap(), &engine)
            .unwrap();
        assert_eq!(realize(&x, 4).unwrap(), direct);
    }

    #[test]
    fn leading_coefficient_is_one_in_rank_two() {
        for a in theta_pm_matrices(2, 3) {
            let (_, rep) = triangular_symbolic(&a).unwrap();
            assert!(rep.passed(), "{rep:?}");
        }
    }
}
