//! Fixtures shared by the benchmarks.

use qschur::blm::SymbolicElement;
use qschur::{IntVector, ThetaMatrix};

/// `[[a, b], [c, d]]` with the given entries.
pub fn matrix2(a: i64, b: i64, c: i64, d: i64) -> ThetaMatrix {
    ThetaMatrix::from_rows(&[vec![a, b], vec![c, d]]).expect("natural entries")
}

/// `A(delta, lam)` as a single symbolic key.
pub fn key(a: ThetaMatrix, delta: &[i64], lam: &[i64]) -> SymbolicElement {
    SymbolicElement::single(a, IntVector::from(delta), IntVector::from(lam))
        .expect("matching ranks")
}
