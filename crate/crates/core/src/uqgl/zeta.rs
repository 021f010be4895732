//! The realization map `zeta: U(n) -> prod_r S(n, r)`.

use super::word::{Generator, GeneratorWord};
use crate::blm::{
    delta_reduce, left_e, left_f, left_torus, realize, SymbolicElement, TruncatedElement,
};
use crate::error::Result;
use crate::laurent::IntVector;
use crate::schur::{ProductEngine, ThetaMatrix};

/// The single key `zeta(g)`: `(m E_{h,h+1})(0)`, `(m E_{h+1,h})(0)`,
/// `0(+-e_i)` or `0(0, t e_i)`.
pub fn generator_element(g: &Generator, n: usize) -> Result<SymbolicElement> {
    g.validate(n)?;
    let z = IntVector::zeros(n);
    let (a, delta, lam) = match *g {
        Generator::DividedE { h, m } => (
            ThetaMatrix::zero(n).add_at(h, h + 1, m).expect("m >= 0"),
            z.clone(),
            z,
        ),
        Generator::DividedF { h, m } => (
            ThetaMatrix::zero(n).add_at(h + 1, h, m).expect("m >= 0"),
            z.clone(),
            z,
        ),
        Generator::K { i, sign } => (
            ThetaMatrix::zero(n),
            IntVector::unit(n, i).scaled(sign as i64),
            z,
        ),
        Generator::KBinom { i, t } => (ThetaMatrix::zero(n), z, IntVector::unit(n, i).scaled(t)),
    };
    SymbolicElement::single(a, delta, lam)
}

/// `g * x` computed with the closed formulas.
pub fn apply_generator(g: &Generator, x: &SymbolicElement) -> Result<SymbolicElement> {
    let n = x.n();
    g.validate(n)?;
    match *g {
        Generator::DividedE { h, m } => left_e(m, h, x),
        Generator::DividedF { h, m } => left_f(m, h, x),
        Generator::K { i, sign } => left_torus(
            &IntVector::unit(n, i).scaled(sign as i64),
            &IntVector::zeros(n),
            x,
        ),
        Generator::KBinom { i, t } => {
            left_torus(&IntVector::zeros(n), &IntVector::unit(n, i).scaled(t), x)
        }
    }
}

/// `zeta(word)` inside `V(n)`, with binary `delta` keys.
pub fn zeta_symbolic(word: &GeneratorWord, n: usize) -> Result<SymbolicElement> {
    word.validate(n)?;
    let mut x = SymbolicElement::one(n);
    for g in word.generators().iter().rev() {
        x = delta_reduce(&apply_generator(g, &x)?);
    }
    Ok(x)
}

/// `zeta(word)` in `prod_{r <= r_max} S(n, r)`: each generator is realized
/// and the images are multiplied componentwise. Products are taken from the
/// right so the left factor is always a generator image.
pub fn zeta(
    word: &GeneratorWord,
    n: usize,
    r_max: usize,
    engine: &ProductEngine,
) -> Result<TruncatedElement> {
    word.validate(n)?;
    let mut acc = TruncatedElement::one(n, r_max);
    for g in word.generators().iter().rev() {
        let x = realize(&generator_element(g, n)?, r_max)?;
        acc = x.product(&acc, engine)?;
    }
    Ok(acc)
}
