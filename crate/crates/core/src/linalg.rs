//! Exact rank and kernel computations over `Q` and `Q(eps)` for finite
//! families of sparse vectors.

use std::collections::BTreeMap;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::laurent::{CycloScalar, Int};

/// Field operations needed by the elimination.
pub trait FieldElement: Clone + PartialEq + Debug + Send + Sync {
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn inv(&self) -> Option<Self>;
}

impl FieldElement for BigRational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

impl FieldElement for CycloScalar {
    fn is_zero(&self) -> bool {
        CycloScalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        CycloScalar::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        CycloScalar::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        CycloScalar::mul(self, other)
    }
    fn inv(&self) -> Option<Self> {
        CycloScalar::inv(self)
    }
}

/// A sparse vector indexed by coordinate number.
pub type SparseVector<F> = BTreeMap<usize, F>;

/// `x -= c * y`, dropping zeros.
fn axpy<F: FieldElement>(x: &mut SparseVector<F>, c: &F, y: &SparseVector<F>) {
    for (&k, yk) in y {
        let d = c.mul(yk);
        match x.get_mut(&k) {
            Some(xk) => {
                *xk = xk.sub(&d);
                if xk.is_zero() {
                    x.remove(&k);
                }
            }
            None => {
                let zero = d.sub(&d);
                x.insert(k, zero.sub(&d));
            }
        }
    }
}

/// Result of eliminating a family of vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct Elimination<F> {
    pub rank: usize,
    /// First dependency found: `sum_i c_i x_i = 0` with `c` nonzero.
    pub kernel: Option<Vec<F>>,
}

/// Row-echelon elimination of `vectors` in order. `one` fixes the field
/// (for `Q(eps)`, the order of `eps`).
pub fn eliminate<F: FieldElement>(vectors: &[SparseVector<F>], one: &F) -> Elimination<F> {
    let zero = one.sub(one);
    let m = vectors.len();
    // pivot column -> (row with pivot entry 1, combination of inputs)
    let mut basis: BTreeMap<usize, (SparseVector<F>, SparseVector<F>)> = BTreeMap::new();
    let mut kernel = None;
    for (idx, v) in vectors.iter().enumerate() {
        let mut row: SparseVector<F> = v
            .iter()
            .filter(|(_, x)| !x.is_zero())
            .map(|(&k, x)| (k, x.clone()))
            .collect();
        let mut combo: SparseVector<F> = BTreeMap::from([(idx, one.clone())]);
        let mut cursor = 0;
        while let Some((k, c)) = row
            .range(cursor..)
            .find(|(k, _)| basis.contains_key(k))
            .map(|(&k, c)| (k, c.clone()))
        {
            let (b, bc) = &basis[&k];
            axpy(&mut row, &c, b);
            axpy(&mut combo, &c, bc);
            cursor = k + 1;
        }
        match row.keys().next().copied() {
            Some(p) => {
                let inv = row[&p].inv().expect("nonzero pivot");
                let scale =
                    |s: SparseVector<F>| s.into_iter().map(|(k, x)| (k, x.mul(&inv))).collect();
                basis.insert(p, (scale(row), scale(combo)));
            }
            None => {
                if kernel.is_none() {
                    kernel = Some(
                        (0..m)
                            .map(|i| combo.get(&i).cloned().unwrap_or_else(|| zero.clone()))
                            .collect(),
                    );
                }
            }
        }
    }
    Elimination {
        rank: basis.len(),
        kernel,
    }
}

/// Clears denominators and common factors, making the first nonzero entry positive.
pub fn primitive_integer_vector(v: &[BigRational]) -> Vec<Int> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints.into_iter().map(Int::from).collect();
    }
    if ints
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative())
    {
        g = -g;
    }
    ints.into_iter().map(|x| Int::from(x / &g)).collect()
}
