//! Quantum integers, Gaussian binomials and multinomials.
//!
//! Two normalizations are used side by side: the balanced quantum integer
//! `[i] = (v^i - v^-i)/(v - v^-1)`, which is bar-invariant, and the
//! unbalanced `[[i]] = (v^{2i} - 1)/(v^2 - 1) = v^{i-1}[i]`. Binomials with
//! negative top entries are defined by the falling-factorial quotient.

use std::sync::OnceLock;

use super::int::Int;
use super::poly::LaurentPoly;
use super::vector::IntVector;
use crate::error::{Error, Result};

/// `[i]`.
pub fn balanced_bracket(i: i64) -> LaurentPoly {
    // v^{i-1} + v^{i-3} + ... + v^{1-i} for i > 0.
    let sign = i.signum();
    let k = i.abs();
    LaurentPoly::from_terms((0..k).map(|s| (k - 1 - 2 * s, sign)))
}

/// `[[i]]`.
pub fn unbalanced_bracket(i: i64) -> LaurentPoly {
    if i >= 0 {
        LaurentPoly::from_terms((0..i).map(|s| (2 * s, 1)))
    } else {
        // (v^{2i} - 1)/(v^2 - 1) = -(v^{-2} + v^{-4} + ... + v^{2i}).
        LaurentPoly::from_terms((1..=-i).map(|s| (-2 * s, -1)))
    }
}

/// `[t]! = [1][2]...[t]`.
pub fn balanced_factorial(t: u32) -> LaurentPoly {
    (1..=t as i64).map(balanced_bracket).product()
}

/// `[[t]]! = [[1]][[2]]...[[t]]`.
pub fn unbalanced_factorial(t: u32) -> LaurentPoly {
    (1..=t as i64).map(unbalanced_bracket).product()
}

fn falling_quotient(
    n: i64,
    t: u32,
    bracket: fn(i64) -> LaurentPoly,
    fact: fn(u32) -> LaurentPoly,
) -> LaurentPoly {
    if t == 0 {
        return LaurentPoly::one();
    }
    let num: LaurentPoly = (0..t as i64).map(|s| bracket(n - s)).product();
    num.div_exact(&fact(t))
        .expect("quantum binomial quotient is always exact in Z[v,v^-1]")
}

const TABLE_MIN: i64 = -24;
const TABLE_MAX: i64 = 40;
const TABLE_T: u32 = 16;

struct BinomialTable {
    balanced: Vec<Vec<LaurentPoly>>,
}

fn table() -> &'static BinomialTable {
    static TABLE: OnceLock<BinomialTable> = OnceLock::new();
    TABLE.get_or_init(|| BinomialTable {
        balanced: (TABLE_MIN..=TABLE_MAX)
            .map(|n| {
                (0..=TABLE_T)
                    .map(|t| falling_quotient(n, t, balanced_bracket, balanced_factorial))
                    .collect()
            })
            .collect(),
    })
}

/// `[N over t]` for any integer `N`.
pub fn balanced_binomial(n: i64, t: u32) -> LaurentPoly {
    if (TABLE_MIN..=TABLE_MAX).contains(&n) && t <= TABLE_T {
        return table().balanced[(n - TABLE_MIN) as usize][t as usize].clone();
    }
    falling_quotient(n, t, balanced_bracket, balanced_factorial)
}

/// Borrowing variant of [`balanced_binomial`] for hot loops; `None` outside
/// the precomputed range.
pub(crate) fn balanced_binomial_ref(n: i64, t: u32) -> Option<&'static LaurentPoly> {
    ((TABLE_MIN..=TABLE_MAX).contains(&n) && t <= TABLE_T)
        .then(|| &table().balanced[(n - TABLE_MIN) as usize][t as usize])
}

/// `[[N over t]]` for any integer `N`.
pub fn unbalanced_binomial(n: i64, t: u32) -> LaurentPoly {
    // [[N over t]] = v^{t(N-t)} [N over t].
    balanced_binomial(n, t).shift(t as i64 * (n - t as i64))
}

/// `[mu over lam] = prod_i [mu_i over lam_i]`.
pub fn vector_binomial(mu: &IntVector, lam: &IntVector) -> Result<LaurentPoly> {
    if mu.len() != lam.len() {
        return Err(Error::Dimension {
            expected: mu.len(),
            found: lam.len(),
        });
    }
    if !lam.is_natural() {
        return Err(Error::Domain(format!(
            "lower entries must be natural, got {lam}"
        )));
    }
    let mut acc = LaurentPoly::one();
    for (&m, &l) in mu.iter().zip(lam.iter()) {
        let b = balanced_binomial(m, l as u32);
        if b.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        acc = &acc * &b;
    }
    Ok(acc)
}

/// `[total; a, b, c] = prod_i [total_i]! / ([a_i]! [b_i]! [c_i]!)`.
pub fn trinomial(
    total: &IntVector,
    a: &IntVector,
    b: &IntVector,
    c: &IntVector,
) -> Result<LaurentPoly> {
    let n = total.len();
    for v in [a, b, c] {
        if v.len() != n {
            return Err(Error::Dimension {
                expected: n,
                found: v.len(),
            });
        }
    }
    let mut acc = LaurentPoly::one();
    for i in 0..n {
        let (x, y, z) = (a[i], b[i], c[i]);
        if x < 0 || y < 0 || z < 0 || x + y + z != total[i] {
            return Err(Error::Domain(format!(
                "{total} is not the entrywise sum of {a}, {b}, {c} over the naturals"
            )));
        }
        acc = &acc * &scalar_trinomial(x as u32, y as u32, z as u32);
    }
    Ok(acc)
}

/// `[x+y+z]! / ([x]! [y]! [z]!)`, computed as a product of two binomials.
pub fn scalar_trinomial(x: u32, y: u32, z: u32) -> LaurentPoly {
    let total = (x + y + z) as i64;
    &balanced_binomial(total, x) * &balanced_binomial(total - x as i64, y)
}

/// Unbalanced multinomial `[[x+y+z]]! / ([[x]]! [[y]]! [[z]]!)`.
pub fn unbalanced_trinomial(x: u32, y: u32, z: u32) -> LaurentPoly {
    let total = (x + y + z) as i64;
    &unbalanced_binomial(total, x) * &unbalanced_binomial(total - x as i64, y)
}

/// `v^e` as a polynomial; convenience for formula code.
#[inline]
pub fn vpow(e: i64) -> LaurentPoly {
    LaurentPoly::monomial(e, Int::ONE)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    // Independent oracle: q-Pascal recursion in the balanced normalization,
    // [N; t] = v^{-t}[N-1; t] + v^{N-t}[N-1; t-1], run downward from N = 0
    // for negative N via [N-1; t] = v^t([N; t] - v^{N-t}[N-1; t-1]).
    fn pascal(n: i64, t: u32) -> LaurentPoly {
        if t == 0 {
            return LaurentPoly::one();
        }
        if n == 0 {
            return LaurentPoly::zero();
        }
        let t64 = t as i64;
        if n > 0 {
            pascal(n - 1, t).shift(-t64) + pascal(n - 1, t - 1).shift(n - t64)
        } else {
            // Solve the recursion at N+1 for [N; t].
            let up = pascal(n + 1, t);
            let side = pascal(n, t - 1).shift(n + 1 - t64);
            (up - side).shift(t64)
        }
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(balanced_bracket(2), p(&[(1, 1), (-1, 1)]));
        assert_eq!(balanced_bracket(0), LaurentPoly::zero());
        assert_eq!(balanced_bracket(-1), p(&[(0, -1)]));
        assert_eq!(unbalanced_bracket(3), p(&[(4, 1), (2, 1), (0, 1)]));
        assert_eq!(unbalanced_bracket(1), LaurentPoly::one());
        assert_eq!(unbalanced_bracket(-1), p(&[(-2, -1)]));
    }

    #[test]
    fn bracket_division_oracle() {
        let vmv = p(&[(1, 1), (-1, -1)]);
        let v2m1 = p(&[(2, 1), (0, -1)]);
        for i in -8..=8i64 {
            let num = p(&[(i, 1), (-i, -1)]);
            assert_eq!(num.div_exact(&vmv).unwrap(), balanced_bracket(i), "[{i}]");
            let num = p(&[(2 * i, 1), (0, -1)]);
            assert_eq!(
                num.div_exact(&v2m1).unwrap(),
                unbalanced_bracket(i),
                "[[{i}]]"
            );
            assert_eq!(unbalanced_bracket(i), balanced_bracket(i).shift(i - 1));
        }
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(
            balanced_binomial(4, 2),
            p(&[(4, 1), (2, 1), (0, 2), (-2, 1), (-4, 1)])
        );
        assert_eq!(balanced_binomial(3, 0), LaurentPoly::one());
        assert_eq!(balanced_binomial(-1, 1), p(&[(0, -1)]));
        assert_eq!(balanced_binomial(2, 3), LaurentPoly::zero());
    }

    #[test]
    fn binomial_matches_pascal_oracle() {
        for n in -7..=9 {
            for t in 0..=5 {
                assert_eq!(balanced_binomial(n, t), pascal(n, t), "[{n}; {t}]");
                assert_eq!(balanced_binomial(n, t).bar(), balanced_binomial(n, t));
            }
        }
    }

    #[test]
    fn table_agrees_with_direct_computation() {
        for n in [-24, -3, 0, 7, 40] {
            for t in [0, 1, 5, 16] {
                assert_eq!(
                    balanced_binomial(n, t),
                    falling_quotient(n, t, balanced_bracket, balanced_factorial)
                );
            }
        }
        assert_eq!(balanced_binomial(41, 2), pascal(41, 2));
    }

    #[test]
    fn vector_binomial_examples() {
        let v = |xs: &[i64]| IntVector::new(xs.to_vec());
        assert_eq!(
            vector_binomial(&v(&[2, 2]), &v(&[1, 0])).unwrap(),
            balanced_bracket(2)
        );
        assert_eq!(
            vector_binomial(&v(&[-3, 5]), &v(&[0, 0])).unwrap(),
            LaurentPoly::one()
        );
        assert_eq!(
            vector_binomial(&v(&[1, 1]), &v(&[1, 1])).unwrap(),
            LaurentPoly::one()
        );
        assert!(matches!(
            vector_binomial(&v(&[1, 1]), &v(&[1])),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn trinomial_examples() {
        let v = |xs: &[i64]| IntVector::new(xs.to_vec());
        assert_eq!(
            trinomial(&v(&[2]), &v(&[1]), &v(&[1]), &v(&[0])).unwrap(),
            balanced_bracket(2)
        );
        assert_eq!(
            trinomial(&v(&[3, 2]), &v(&[3, 2]), &v(&[0, 0]), &v(&[0, 0])).unwrap(),
            LaurentPoly::one()
        );
        assert_eq!(
            trinomial(&v(&[3]), &v(&[1]), &v(&[1]), &v(&[1])).unwrap(),
            &balanced_bracket(3) * &balanced_bracket(2)
        );
        assert!(matches!(
            trinomial(&v(&[3]), &v(&[1]), &v(&[1]), &v(&[0])),
            Err(Error::Domain(_))
        ));
    }
}
