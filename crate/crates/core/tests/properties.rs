//! Property tests for the algebraic invariants, each against an
//! independent computation.

use proptest::prelude::*;
use proptest::sample::Index;

use qschur::blm::{
    delta_reduce, formula1_product, formula2_e, formula2_f, norm, precedes, realize,
    SymbolicElement, TruncatedElement,
};
use qschur::hecke::{coset_to_matrix, matrix_to_coset, oracle_product};
use qschur::laurent::{
    balanced_binomial, balanced_bracket, compositions, eval_at_root, unbalanced_bracket,
    vector_binomial, vpow,
};
use qschur::schur::{
    element_a, multiply_bm, multiply_cm, theta_matrices, theta_pm_matrices, ProductEngine,
    ProductMode,
};
use qschur::specialize::{specialize, CycloSchurElement};
use qschur::uqgl::{zeta, Generator, GeneratorWord};
use qschur::{IntVector, LaurentPoly, SchurElement, ThetaMatrix};

const CAP: usize = 6;

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..=6, -5i64..=5), 0..5).prop_map(LaurentPoly::from_terms)
}

fn ivec(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = IntVector> {
    prop::collection::vec(lo..=hi, n).prop_map(IntVector::new)
}

fn pick<T: Clone>(xs: &[T], i: Index) -> T {
    xs[i.index(xs.len())].clone()
}

/// Random element of `S(n, r)` with up to three terms.
fn schur_element(n: usize, r: usize, idx: &[(Index, LaurentPoly)]) -> SchurElement {
    let all = theta_matrices(n, r as i64);
    let mut x = SchurElement::zero(n, r);
    for (i, c) in idx {
        x.add_term(pick(&all, *i), c).unwrap();
    }
    x
}

fn oracle() -> ProductEngine {
    ProductEngine::new(ProductMode::Oracle, CAP)
}

fn same_components(x: &TruncatedElement, y: &TruncatedElement) -> bool {
    (0..=x.r_max()).all(|r| x.component(r) == y.component(r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn balanced_binomials_are_bar_invariant(n in -6i64..=6, t in 0u32..=4) {
        let b = balanced_binomial(n, t);
        prop_assert_eq!(b.bar(), b);
    }

    #[test]
    fn unbalanced_brackets_are_shifted_balanced_ones(i in -6i64..=6) {
        prop_assert_eq!(unbalanced_bracket(i), &vpow(i - 1) * &balanced_bracket(i));
    }

    #[test]
    fn evaluation_at_a_root_is_multiplicative(p in poly(), q in poly(), l in prop::sample::select(vec![1u32, 3, 5, 7, 9])) {
        let lhs = eval_at_root(&(&p * &q), l).unwrap();
        let rhs = eval_at_root(&p, l).unwrap().mul(&eval_at_root(&q, l).unwrap());
        prop_assert_eq!(lhs, rhs);
        let sum = eval_at_root(&(&p + &q), l).unwrap();
        prop_assert_eq!(sum, eval_at_root(&p, l).unwrap().add(&eval_at_root(&q, l).unwrap()));
    }

    #[test]
    fn cosets_and_matrices_correspond(n in 1usize..=3, r in 0usize..=4, i in any::<Index>()) {
        let a = pick(&theta_matrices(n, r as i64), i);
        prop_assert_eq!(coset_to_matrix(&matrix_to_coset(&a)).unwrap(), a);
    }

    #[test]
    fn oracle_product_is_associative(
        n in 2usize..=3,
        r in 1usize..=3,
        xs in prop::collection::vec((any::<Index>(), poly()), 1..3),
        ys in prop::collection::vec((any::<Index>(), poly()), 1..3),
        zs in prop::collection::vec((any::<Index>(), poly()), 1..3),
    ) {
        let (x, y, z) = (schur_element(n, r, &xs), schur_element(n, r, &ys), schur_element(n, r, &zs));
        let e = oracle();
        let lhs = e.product(&e.product(&x, &y).unwrap(), &z).unwrap();
        let rhs = e.product(&x, &e.product(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn oracle_respects_row_and_column_sums(n in 2usize..=3, r in 0usize..=3, i in any::<Index>(), j in any::<Index>()) {
        let all = theta_matrices(n, r as i64);
        let (a, b) = (pick(&all, i), pick(&all, j));
        let p = oracle_product(&a, &b, CAP).unwrap();
        if a.co() != b.ro() {
            prop_assert!(p.is_zero());
        }
        for (c, _) in p.terms() {
            prop_assert_eq!((c.ro(), c.co()), (a.ro(), b.co()));
        }
    }

    #[test]
    fn diagonal_sum_is_a_two_sided_unit(n in 2usize..=3, r in 0usize..=3, xs in prop::collection::vec((any::<Index>(), poly()), 1..4)) {
        let x = schur_element(n, r, &xs);
        let mut unit = SchurElement::zero(n, r);
        for mu in compositions(n, r as i64) {
            unit.add_term(ThetaMatrix::diag(&mu).unwrap(), &LaurentPoly::one()).unwrap();
        }
        let e = oracle();
        prop_assert_eq!(e.product(&unit, &x).unwrap(), x.clone());
        prop_assert_eq!(e.product(&x, &unit).unwrap(), x);
    }

    #[test]
    fn blm_outputs_shift_two_row_sums(n in 2usize..=3, r in 0usize..=4, i in any::<Index>(), h in any::<Index>(), m in any::<Index>()) {
        let a = pick(&theta_matrices(n, r as i64), i);
        let h = h.index(n - 1);
        let ro = a.ro();
        let (mb, mc) = (m.index(ro[h + 1] as usize + 1) as i64, m.index(ro[h] as usize + 1) as i64);
        for (raise, m, p) in [(true, mb, multiply_bm(h, mb, &a).unwrap()), (false, mc, multiply_cm(h, mc, &a).unwrap())] {
            let expect = if raise { ro.add_at(h, m).add_at(h + 1, -m) } else { ro.add_at(h, -m).add_at(h + 1, m) };
            for (b, _) in p.terms() {
                prop_assert_eq!(b.ro(), expect.clone());
                prop_assert_eq!(b.co(), a.co());
            }
        }
    }

    #[test]
    fn element_a_term_count(n in 2usize..=3, i in any::<Index>(), delta in ivec(3, -2, 2), lam in ivec(3, 0, 2), r in 0usize..=5) {
        let a = pick(&theta_pm_matrices(n, 2), i);
        let (delta, lam) = (IntVector::new(delta.iter().take(n).copied().collect()), IntVector::new(lam.iter().take(n).copied().collect()));
        let x = element_a(&a, &delta, &lam, r).unwrap();
        let expect = if (a.sigma() as usize) > r {
            0
        } else {
            compositions(n, r as i64 - a.sigma()).iter().filter(|mu| !vector_binomial(mu, &lam).unwrap().is_zero()).count()
        };
        prop_assert_eq!(x.len(), expect);
    }

    #[test]
    fn norm_decreases_along_the_order(n in 2usize..=3, i in any::<Index>(), j in any::<Index>()) {
        let all = theta_pm_matrices(n, 3);
        let (a, b) = (pick(&all, i), pick(&all, j));
        if precedes(&b, &a).unwrap() {
            prop_assert!(norm(&b) < norm(&a));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn formula1_matches_the_oracle(
        n in 2usize..=3,
        gamma in ivec(3, -2, 2),
        mu in ivec(3, 0, 2),
        i in any::<Index>(),
        delta in ivec(3, -2, 2),
        lam in ivec(3, 0, 2),
    ) {
        let cut = |v: &IntVector| IntVector::new(v.iter().take(n).copied().collect());
        let (gamma, mu, delta, lam) = (cut(&gamma), cut(&mu), cut(&delta), cut(&lam));
        let a = pick(&theta_pm_matrices(n, 3), i);
        let x = formula1_product(&gamma, &mu, &a, &delta, &lam).unwrap();
        let left = realize(&SymbolicElement::single(ThetaMatrix::zero(n), gamma, mu).unwrap(), 4).unwrap();
        let right = realize(&SymbolicElement::single(a, delta, lam).unwrap(), 4).unwrap();
        prop_assert!(same_components(&realize(&x, 4).unwrap(), &left.product(&right, &oracle()).unwrap()));
    }

    #[test]
    fn formula2_matches_the_oracle(
        n in 2usize..=3,
        raise in any::<bool>(),
        h in any::<Index>(),
        m in 0i64..=2,
        i in any::<Index>(),
        delta in ivec(3, -2, 2),
        lam in ivec(3, 0, 2),
    ) {
        let cut = |v: &IntVector| IntVector::new(v.iter().take(n).copied().collect());
        let (delta, lam, h) = (cut(&delta), cut(&lam), h.index(n - 1));
        let a = pick(&theta_pm_matrices(n, 3), i);
        let (x, g) = if raise {
            (formula2_e(m, h, &a, &delta, &lam).unwrap(), ThetaMatrix::zero(n).add_at(h, h + 1, m).unwrap())
        } else {
            (formula2_f(m, h, &a, &delta, &lam).unwrap(), ThetaMatrix::zero(n).add_at(h + 1, h, m).unwrap())
        };
        let o = IntVector::zeros(n);
        let left = realize(&SymbolicElement::single(g, o.clone(), o).unwrap(), 4).unwrap();
        let right = realize(&SymbolicElement::single(a, delta, lam).unwrap(), 4).unwrap();
        prop_assert!(same_components(&realize(&x, 4).unwrap(), &left.product(&right, &oracle()).unwrap()));
    }

    #[test]
    fn delta_reduction_preserves_realization(
        n in 2usize..=3,
        terms in prop::collection::vec((any::<Index>(), ivec(3, -4, 4), ivec(3, 0, 2), poly()), 1..4),
    ) {
        let all = theta_pm_matrices(n, 2);
        let mut x = SymbolicElement::zero(n);
        for (i, d, l, c) in terms {
            let cut = |v: &IntVector| IntVector::new(v.iter().take(n).copied().collect());
            x = x.add(&SymbolicElement::single(pick(&all, i), cut(&d), cut(&l)).unwrap().scale(&c)).unwrap();
        }
        let y = delta_reduce(&x);
        prop_assert!(y.terms().all(|(k, _)| k.is_reduced()));
        prop_assert!(same_components(&realize(&y, 4).unwrap(), &realize(&x, 4).unwrap()));
    }

    #[test]
    fn divided_powers_are_single_keys(n in 2usize..=3, h in any::<Index>(), m in 0i64..=3, raise in any::<bool>()) {
        let h = h.index(n - 1);
        let (g, a) = if raise {
            (Generator::DividedE { h, m }, ThetaMatrix::zero(n).add_at(h, h + 1, m).unwrap())
        } else {
            (Generator::DividedF { h, m }, ThetaMatrix::zero(n).add_at(h + 1, h, m).unwrap())
        };
        let o = IntVector::zeros(n);
        let z = zeta(&GeneratorWord::new(vec![g]), n, 4, &ProductEngine::default()).unwrap();
        prop_assert_eq!(z, realize(&SymbolicElement::single(a, o.clone(), o).unwrap(), 4).unwrap());
    }

    #[test]
    fn specialization_is_a_homomorphism(
        n in 2usize..=3,
        r in 1usize..=3,
        l in prop::sample::select(vec![1u32, 3, 5]),
        xs in prop::collection::vec((any::<Index>(), poly()), 1..3),
        ys in prop::collection::vec((any::<Index>(), poly()), 1..3),
    ) {
        let (x, y) = (schur_element(n, r, &xs), schur_element(n, r, &ys));
        let e = ProductEngine::default();
        let lhs = CycloSchurElement::from_schur(&e.product(&x, &y).unwrap(), l).unwrap();
        let rhs = CycloSchurElement::from_schur(&x, l).unwrap().product(&CycloSchurElement::from_schur(&y, l).unwrap(), &e).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn truncated_specialization_is_a_homomorphism(n in 2usize..=3, l in prop::sample::select(vec![1u32, 3]), i in any::<Index>(), j in any::<Index>()) {
        let all = theta_pm_matrices(n, 2);
        let o = IntVector::zeros(n);
        let x = realize(&SymbolicElement::single(pick(&all, i), o.clone(), o.clone()).unwrap(), 3).unwrap();
        let y = realize(&SymbolicElement::single(pick(&all, j), IntVector::unit(n, 0), o).unwrap(), 3).unwrap();
        let e = ProductEngine::default();
        let lhs = specialize(&x.product(&y, &e).unwrap(), l).unwrap();
        let rhs = specialize(&x, l).unwrap().product(&specialize(&y, l).unwrap(), &e).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
