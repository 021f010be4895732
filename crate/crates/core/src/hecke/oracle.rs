//! Multiplication in `S(n, r)` straight from its definition as the
//! endomorphism algebra of `⊕_lam x_lam H(r)`.
//!
//! `[A] = v^{-d_A} phi_A`, where `phi_A` sends `x_mu h` to
//! `sum_{x in S_lam d S_mu} T_x h` for `A <-> (lam, d, mu)` and kills the
//! other summands. `[A][B]` is the composite "apply `phi_B`, then `phi_A`".

use super::algebra::right_mul_word;
use super::coset::{
    coset_to_matrix, double_cosets, matrix_to_coset, orbit, young_generators, CosetIndex,
};
use super::group::SymmetricGroup;
use crate::error::{Error, Result};
use crate::laurent::{Int, IntVector, LaurentPoly};
use crate::schur::{SchurElement, ThetaMatrix};

pub const DEFAULT_ORACLE_CAP: usize = 6;

/// `d_A = sum_{i >= k, j < l} a_{ij} a_{kl}`.
pub fn d_a(a: &ThetaMatrix) -> u64 {
    let n = a.n();
    let mut total = 0u64;
    for i in 0..n {
        for j in 0..n {
            let x = a.get(i, j) as u64;
            if x == 0 {
                continue;
            }
            for k in 0..=i {
                for l in j + 1..n {
                    total += x * a.get(k, l) as u64;
                }
            }
        }
    }
    total
}

/// The matrix of `c` together with the factor `v^{-d_A}` taking `phi_A` to `[A]`.
pub fn phi_to_normalized(c: &CosetIndex) -> Result<(ThetaMatrix, LaurentPoly)> {
    let a = coset_to_matrix(c)?;
    let scale = LaurentPoly::monomial(-(d_a(&a) as i64), 1);
    Ok((a, scale))
}

fn indicator(g: &SymmetricGroup, members: &[usize]) -> Vec<LaurentPoly> {
    let mut x = vec![LaurentPoly::zero(); g.order()];
    for &w in members {
        x[w] = LaurentPoly::one();
    }
    x
}

/// Writes `y in x_mu H(r)` as `x_mu h` with `h = sum_d c_d T_d` over minimal
/// right coset representatives. Each right coset `S_mu d` must carry the
/// constant coefficient `c_d`, since `x_mu T_d = sum_{u in S_mu} T_{ud}`.
fn divide_by_x(
    g: &SymmetricGroup,
    y: &[LaurentPoly],
    mu: &IntVector,
) -> Result<Vec<(usize, LaurentPoly)>> {
    let gens = young_generators(mu);
    let mut covered = vec![false; g.order()];
    let mut h = Vec::new();
    for w in 0..g.order() {
        if covered[w] || y[w].is_zero() {
            continue;
        }
        let coset = orbit(g, w, &gens, &[]);
        let d = *coset
            .iter()
            .min_by_key(|&&x| g.length(x))
            .expect("nonempty");
        for &x in &coset {
            covered[x] = true;
            if y[x] != y[d] {
                return Err(Error::Internal(format!(
                    "element is not in x_{mu} H: T{} and T{} differ",
                    g.element(x),
                    g.element(d)
                )));
            }
        }
        h.push((d, y[d].clone()));
    }
    Ok(h)
}

/// `[A] * [B]` in the normalized basis, computed in the Hecke algebra.
pub fn oracle_product(a: &ThetaMatrix, b: &ThetaMatrix, cap: usize) -> Result<SchurElement> {
    if a.n() != b.n() {
        return Err(Error::Dimension {
            expected: a.n(),
            found: b.n(),
        });
    }
    let (n, r) = (a.n(), a.sigma() as usize);
    if b.sigma() as usize != r {
        return Err(Error::Domain(format!("{a} and {b} have different degrees")));
    }
    if r > cap {
        return Err(Error::Resource { r, cap });
    }
    let mut out = SchurElement::zero(n, r);
    if a.co() != b.ro() {
        return Ok(out);
    }
    let g = SymmetricGroup::get(r)?;
    let ca = matrix_to_coset(a);
    let cb = matrix_to_coset(b);
    let (lam, mu, nu) = (&ca.lam, &ca.mu, &cb.mu);

    // phi_B(x_nu) = sum over S_mu d' S_nu, rewritten as x_mu h.
    let tb = orbit(
        g,
        g.index_of(&cb.d),
        &young_generators(mu),
        &young_generators(nu),
    );
    let h = divide_by_x(g, &indicator(g, &tb), mu)?;

    // phi_A(x_mu h) = (sum over S_lam d S_mu) h.
    let ta = orbit(
        g,
        g.index_of(&ca.d),
        &young_generators(lam),
        &young_generators(mu),
    );
    let ta = indicator(g, &ta);
    let mut z = vec![LaurentPoly::zero(); g.order()];
    for (d, c) in &h {
        let prod = right_mul_word(g, &ta, &g.element(*d).reduced_word());
        for (acc, p) in z.iter_mut().zip(&prod) {
            acc.add_product(p, c);
        }
    }

    // Read off phi_C-coordinates: z must be constant on (S_lam, S_nu) double cosets.
    let shift = d_a(a) as i64 + d_a(b) as i64;
    for coset in double_cosets(g, lam, nu) {
        let c = &z[coset.rep];
        if let Some(&bad) = coset.members.iter().find(|&&w| &z[w] != c) {
            return Err(Error::Internal(format!(
                "product is not constant on the double coset of {}: T{} differs",
                g.element(coset.rep),
                g.element(bad)
            )));
        }
        if c.is_zero() {
            continue;
        }
        let idx = CosetIndex {
            lam: lam.clone(),
            d: g.element(coset.rep).clone(),
            mu: nu.clone(),
        };
        let m = coset_to_matrix(&idx)?;
        let e = d_a(&m) as i64 - shift;
        out.push(m, c, &Int::ONE, e);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::schur::theta_matrices;

    fn m(rows: &[&[i64]]) -> ThetaMatrix {
        ThetaMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn product(x: &SchurElement, y: &SchurElement) -> SchurElement {
        let mut out = SchurElement::zero(x.n(), x.degree());
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                let p = oracle_product(a, b, DEFAULT_ORACLE_CAP).unwrap();
                out.add_scaled(&p, &(ca * cb));
            }
        }
        out
    }

    #[test]
    fn d_a_examples() {
        assert_eq!(d_a(&m(&[&[2, 0], &[0, 3]])), 0);
        assert_eq!(d_a(&m(&[&[0, 1], &[1, 0]])), 1);
        // Only a_{12} a_{22} could pair, and it needs 2 < 2.
        assert_eq!(d_a(&m(&[&[0, 1], &[0, 1]])), 0);
        assert_eq!(d_a(&m(&[&[0, 1], &[1, 1]])), 2);
    }

    #[test]
    fn two_dimensional_example() {
        let p =
            oracle_product(&ThetaMatrix::unit(2, 0, 1), &ThetaMatrix::unit(2, 1, 0), 6).unwrap();
        assert_eq!(p, SchurElement::basis(ThetaMatrix::unit(2, 0, 0)));
    }

    #[test]
    fn diagonal_factors_act_by_projection() {
        for a in theta_matrices(2, 3) {
            for lam in crate::laurent::compositions(2, 3) {
                let d = ThetaMatrix::diag(&lam).unwrap();
                let left = oracle_product(&d, &a, 6).unwrap();
                let right = oracle_product(&a, &d, 6).unwrap();
                let expect = |hit: bool| {
                    if hit {
                        SchurElement::basis(a.clone())
                    } else {
                        SchurElement::zero(2, 3)
                    }
                };
                assert_eq!(left, expect(lam == a.ro()));
                assert_eq!(right, expect(lam == a.co()));
            }
        }
    }

    #[test]
    fn unit_and_orthogonality() {
        let one = SchurElement::unit(3, 3);
        for a in theta_matrices(3, 3).into_iter().step_by(7) {
            let x = SchurElement::basis(a.clone());
            assert_eq!(product(&one, &x), x);
            assert_eq!(product(&x, &one), x);
            for b in theta_matrices(3, 3).into_iter().step_by(11) {
                if a.co() != b.ro() {
                    assert!(oracle_product(&a, &b, 6).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn associativity_on_random_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (n, r) in [(2, 3), (2, 4), (3, 3), (3, 4)] {
            let all = theta_matrices(n, r);
            for _ in 0..12 {
                let a = all.choose(&mut rng).unwrap().clone();
                let bs: Vec<_> = all.iter().filter(|b| b.ro() == a.co()).collect();
                let b = (*bs.choose(&mut rng).unwrap()).clone();
                let cs: Vec<_> = all.iter().filter(|c| c.ro() == b.co()).collect();
                let c = (*cs.choose(&mut rng).unwrap()).clone();
                let (x, y, z) = (
                    SchurElement::basis(a),
                    SchurElement::basis(b),
                    SchurElement::basis(c),
                );
                assert_eq!(product(&product(&x, &y), &z), product(&x, &product(&y, &z)));
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let a = ThetaMatrix::diag(&IntVector::from([4, 3])).unwrap();
        assert_eq!(
            oracle_product(&a, &a, 6),
            Err(Error::Resource { r: 7, cap: 6 })
        );
    }
}
