//! The PBW-type monomials `E^(A+) prod_i K_i^{delta_i} [K_i;0 over lam_i] F^(A-)`.

use serde::{Deserialize, Serialize};

use super::word::{Generator, GeneratorWord};
use super::zeta::{zeta, zeta_symbolic};
use crate::blm::{pbw_factors, Factor, SymbolicElement, TruncatedElement};
use crate::error::{Error, Result};
use crate::laurent::{box_range, compositions, IntVector};
use crate::schur::{theta_pm_matrices, ProductEngine, ThetaMatrix};

/// Index `(A, delta, lam)` of a PBW-type monomial.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PBWIndex {
    #[serde(rename = "A")]
    pub a: ThetaMatrix,
    pub delta: IntVector,
    #[serde(rename = "lambda")]
    pub lam: IntVector,
}

impl PBWIndex {
    pub fn new(a: ThetaMatrix, delta: IntVector, lam: IntVector) -> Result<Self> {
        let n = a.n();
        for v in [&delta, &lam] {
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
        if !delta.iter().all(|&d| d == 0 || d == 1) {
            return Err(Error::Domain(format!("{delta} is not binary")));
        }
        if !lam.is_natural() {
            return Err(Error::Domain(format!("{lam} has a negative entry")));
        }
        Ok(PBWIndex { a, delta, lam })
    }

    pub fn n(&self) -> usize {
        self.a.n()
    }

    /// `sigma(A) + sigma(lam)`.
    pub fn weight(&self) -> i64 {
        self.a.sigma() + self.lam.sum()
    }
}

/// All indices with `sigma(A) + sigma(lam) <= bound`, ordered by `A`, then
/// `lam`, then `delta`.
pub fn pbw_indices(n: usize, bound: i64) -> Vec<PBWIndex> {
    let ones = IntVector::new(vec![1; n]);
    let mut out = Vec::new();
    for a in theta_pm_matrices(n, bound) {
        for s in 0..=bound - a.sigma() {
            for lam in compositions(n, s) {
                for delta in box_range(&IntVector::zeros(n), &ones) {
                    out.push(PBWIndex {
                        a: a.clone(),
                        delta,
                        lam: lam.clone(),
                    });
                }
            }
        }
    }
    out
}

/// The generator word of the monomial attached to `idx`.
pub fn pbw_word(idx: &PBWIndex) -> Result<GeneratorWord> {
    let n = idx.n();
    let factors = pbw_factors(&idx.a)?;
    let split = factors
        .iter()
        .position(|f| matches!(f, Factor::F { .. }))
        .unwrap_or(factors.len());
    let divided = |f: &Factor| match *f {
        Factor::E { h, m } => Generator::DividedE { h, m },
        Factor::F { h, m } => Generator::DividedF { h, m },
    };
    let mut gens: Vec<Generator> = factors[..split].iter().map(divided).collect();
    gens.extend(torus(idx));
    gens.extend(factors[split..].iter().map(divided));
    let w = GeneratorWord::new(gens);
    w.validate(n)?;
    Ok(w)
}

fn torus(idx: &PBWIndex) -> Vec<Generator> {
    let mut gens = Vec::new();
    for i in 0..idx.n() {
        if idx.delta[i] == 1 {
            gens.push(Generator::k(i));
        }
        if idx.lam[i] > 0 {
            gens.push(Generator::KBinom { i, t: idx.lam[i] });
        }
    }
    gens
}

/// `zeta` of the monomial, componentwise up to `r_max`.
pub fn pbw_monomial(
    idx: &PBWIndex,
    r_max: usize,
    engine: &ProductEngine,
) -> Result<TruncatedElement> {
    zeta(&pbw_word(idx)?, idx.n(), r_max, engine)
}

/// `zeta` of the monomial inside `V(n)`, with binary `delta` keys.
pub fn pbw_symbolic(idx: &PBWIndex) -> Result<SymbolicElement> {
    zeta_symbolic(&pbw_word(idx)?, idx.n())
}
