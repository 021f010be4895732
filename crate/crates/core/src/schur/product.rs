use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::element::SchurElement;
use super::formulas::{multiply_bm, multiply_cm};
use super::matrix::ThetaMatrix;
use crate::error::{Error, Result};
use crate::hecke::{oracle_product, DEFAULT_ORACLE_CAP};
use crate::laurent::{IntVector, LaurentPoly};

/// How basis products are evaluated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductMode {
    /// Closed formulas where the left factor allows, the oracle otherwise.
    #[default]
    Auto,
    /// Closed formulas only; other products are an error.
    Formula,
    /// The Hecke-algebra oracle for every product.
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductEngine {
    pub mode: ProductMode,
    pub oracle_cap: usize,
}

impl Default for ProductEngine {
    fn default() -> Self {
        ProductEngine {
            mode: ProductMode::Auto,
            oracle_cap: DEFAULT_ORACLE_CAP,
        }
    }
}

/// Closed-form products: diagonal factors on either side, and left factors
/// of the form `B_m` or `C_m`. Assumes `co(a) = ro(b)`.
fn formula_product(a: &ThetaMatrix, b: &ThetaMatrix) -> Option<Result<SchurElement>> {
    if a.is_diagonal() {
        return Some(Ok(SchurElement::basis(b.clone())));
    }
    if b.is_diagonal() {
        return Some(Ok(SchurElement::basis(a.clone())));
    }
    let mut off = a.off_diagonal_entries();
    let (i, j, m) = off.next()?;
    if off.next().is_some() {
        return None;
    }
    // With co(a) = ro(b), a single off-diagonal entry pins down the diagonal.
    if j == i + 1 {
        Some(multiply_bm(i, m, b))
    } else if i == j + 1 {
        Some(multiply_cm(j, m, b))
    } else {
        None
    }
}

impl ProductEngine {
    pub fn new(mode: ProductMode, oracle_cap: usize) -> Self {
        ProductEngine { mode, oracle_cap }
    }

    /// `[a] * [b]`.
    pub fn basis_product(&self, a: &ThetaMatrix, b: &ThetaMatrix) -> Result<SchurElement> {
        if a.n() != b.n() {
            return Err(Error::Dimension {
                expected: a.n(),
                found: b.n(),
            });
        }
        if a.sigma() != b.sigma() {
            return Err(Error::Domain(format!("{a} and {b} have different degrees")));
        }
        if self.mode == ProductMode::Oracle {
            return oracle_product(a, b, self.oracle_cap);
        }
        if a.co() != b.ro() {
            return Ok(SchurElement::zero(a.n(), a.sigma() as usize));
        }
        match (formula_product(a, b), self.mode) {
            (Some(p), _) => p,
            (None, ProductMode::Formula) => {
                Err(Error::Domain(format!("no closed formula for [{a}][{b}]")))
            }
            (None, _) => oracle_product(a, b, self.oracle_cap),
        }
    }

    /// Bilinear extension of [`ProductEngine::basis_product`].
    pub fn product(&self, x: &SchurElement, y: &SchurElement) -> Result<SchurElement> {
        if x.n() != y.n() {
            return Err(Error::Dimension {
                expected: x.n(),
                found: y.n(),
            });
        }
        if x.degree() != y.degree() {
            return Err(Error::Domain(format!(
                "degrees {} and {} differ",
                x.degree(),
                y.degree()
            )));
        }
        let mut by_row: BTreeMap<IntVector, Vec<(&ThetaMatrix, &LaurentPoly)>> = BTreeMap::new();
        for (b, c) in y.terms() {
            by_row.entry(b.ro()).or_default().push((b, c));
        }
        let mut out = SchurElement::zero(x.n(), x.degree());
        for (a, ca) in x.terms() {
            let Some(right) = by_row.get(&a.co()) else {
                continue;
            };
            for &(b, cb) in right {
                let p = self.basis_product(a, b)?;
                out.add_scaled(&p, &(ca * cb));
            }
        }
        Ok(out)
    }
}

/// [`ProductEngine::product`] with the default engine.
pub fn general_product(x: &SchurElement, y: &SchurElement) -> Result<SchurElement> {
    ProductEngine::default().product(x, y)
}
