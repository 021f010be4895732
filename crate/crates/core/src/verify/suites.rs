use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use super::{Outcome, RunConfig, Suite};
use crate::blm::{
    delta_reduce, formula1_product, formula2_e, formula2_f, norm, precedes, realize,
    triangular_symbolic, Key, SymbolicElement, TruncatedElement,
};
use crate::error::Result;
use crate::hecke::{distinguished_reps, oracle_product};
use crate::laurent::{
    box_range, compositions, trinomial, unbalanced_binomial, unbalanced_trinomial, vector_binomial,
    vpow, IntVector, LaurentPoly,
};
use crate::schur::{
    multiply_bm, multiply_cm, theta_matrices, theta_pm_matrices, ProductEngine, ProductMode,
    ThetaMatrix,
};
use crate::specialize::{bk_independence, check_kl_trivial, specialized_rank, CycloSchurElement};
use crate::uqgl::{
    apply_generator, b3_family, check_relations, first_independent_truncation, generator_element,
    independence_check, pbw_family, pbw_indices, pbw_word, zeta, Generator,
    DEFAULT_EVALUATION_POINTS,
};

type Check = std::result::Result<(), String>;

fn same<T: PartialEq + std::fmt::Display>(lhs: &T, rhs: &T) -> Check {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("lhs = {lhs}, rhs = {rhs}"))
    }
}

fn same_truncated(lhs: &TruncatedElement, rhs: &TruncatedElement) -> Check {
    match (0..=lhs.r_max().min(rhs.r_max())).find(|&r| lhs.component(r) != rhs.component(r)) {
        None => Ok(()),
        Some(r) => Err(format!(
            "degree {r}: lhs = {}, rhs = {}",
            lhs.component(r),
            rhs.component(r)
        )),
    }
}

fn rng(cfg: &RunConfig, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ salt)
}

fn engine(cfg: &RunConfig) -> ProductEngine {
    ProductEngine::new(ProductMode::Auto, cfg.oracle_cap)
}

fn oracle_engine(cfg: &RunConfig) -> ProductEngine {
    ProductEngine::new(ProductMode::Oracle, cfg.oracle_cap)
}

/// Folds per-instance results computed in parallel, in instance order.
fn fold<T, F>(items: &[T], check: F) -> Result<Outcome>
where
    T: Sync,
    F: Fn(&T) -> Result<Outcome> + Sync + Send,
{
    let parts: Vec<Outcome> = items.par_iter().map(check).collect::<Result<_>>()?;
    let mut out = Outcome::default();
    for p in parts {
        out.merge(p);
    }
    Ok(out)
}

fn single(key: &Key) -> SymbolicElement {
    SymbolicElement::single(key.a.clone(), key.delta.clone(), key.lam.clone()).expect("valid key")
}

fn random_vector(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> IntVector {
    IntVector::new((0..n).map(|_| rng.gen_range(lo..=hi)).collect())
}

fn random_pm(rng: &mut ChaCha8Rng, n: usize, max_sigma: i64) -> ThetaMatrix {
    let all = theta_pm_matrices(n, max_sigma);
    all[rng.gen_range(0..all.len())].clone()
}

/// Right factors `A(delta, lam)` with `sigma(A) <= 2`, `|delta_i| <= 2`, `lam_i <= 2`.
fn right_factors(n: usize) -> Vec<Key> {
    let mut out = Vec::new();
    for a in theta_pm_matrices(n, 2) {
        for delta in box_range(&IntVector::new(vec![-2; n]), &IntVector::new(vec![2; n])) {
            for lam in box_range(&IntVector::zeros(n), &IntVector::new(vec![2; n])) {
                out.push(Key {
                    a: a.clone(),
                    delta: delta.clone(),
                    lam,
                });
            }
        }
    }
    out
}

pub fn run_suite_unreported(suite: Suite, cfg: &RunConfig) -> Result<Outcome> {
    match suite {
        Suite::Binomials => binomials(cfg),
        Suite::BasisCount => basis_count(cfg),
        Suite::BlmFormulas => blm_formulas(cfg),
        Suite::Formula1 => formula1(cfg),
        Suite::Formula2 => formula2(cfg),
        Suite::DeltaReduce => delta_reduction(cfg),
        Suite::Relations => relations(cfg),
        Suite::Triangular => triangular(cfg),
        Suite::Closure => closure(cfg),
        Suite::PbwIndependence => pbw_independence(cfg),
        Suite::B3Independence => b3_independence(cfg),
        Suite::Specialization => specialization(cfg),
    }
}

fn binomials(cfg: &RunConfig) -> Result<Outcome> {
    let mut out = Outcome::default();
    for m in -6..=6i64 {
        for nn in -6..=6i64 {
            for a in 0..=4u32 {
                let lhs = unbalanced_binomial(nn, a);
                let rhs: LaurentPoly = (0..=a)
                    .map(|j| {
                        let (ji, ai) = (j as i64, a as i64);
                        &(&vpow(2 * (m - ji) * (ai - ji)) * &unbalanced_binomial(m, j))
                            * &unbalanced_binomial(nn - m, a - j)
                    })
                    .sum();
                out.record(
                    || json!({"identity": "vandermonde", "m": m, "n": nn, "a": a}),
                    same(&lhs, &rhs),
                );
            }
        }
    }
    for m in -6..=6i64 {
        for a in 0..=4u32 {
            for b in 0..=4u32 {
                let lhs = &unbalanced_binomial(m, a) * &unbalanced_binomial(m, b);
                let rhs: LaurentPoly = (0..=a.min(b))
                    .map(|c| {
                        let e = 2 * (b - c) as i64 * (a - c) as i64;
                        &(&vpow(e) * &unbalanced_binomial(m, a + b - c))
                            * &unbalanced_trinomial(c, a - c, b - c)
                    })
                    .sum();
                out.record(
                    || json!({"identity": "product", "m": m, "a": a, "b": b}),
                    same(&lhs, &rhs),
                );
            }
        }
    }
    let vector_sum = |alpha: &IntVector, beta: &IntVector, lam: &IntVector| -> Result<Check> {
        let lhs = vector_binomial(&(alpha + beta), lam)?;
        let mut rhs = LaurentPoly::zero();
        for mu in box_range(&IntVector::zeros(lam.len()), lam) {
            let e = alpha.dot(&(lam - &mu)) - mu.dot(beta);
            let t = &vector_binomial(alpha, &mu)? * &vector_binomial(beta, &(lam - &mu))?;
            rhs.add_scaled_shifted(&t, &crate::laurent::Int::ONE, e);
        }
        Ok(same(&lhs, &rhs))
    };
    let vector_product = |alpha: &IntVector, lam: &IntVector, mu: &IntVector| -> Result<Check> {
        let lhs = &vector_binomial(alpha, lam)? * &vector_binomial(alpha, mu)?;
        let mut rhs = LaurentPoly::zero();
        let top = IntVector::new(lam.iter().zip(mu.iter()).map(|(a, b)| *a.min(b)).collect());
        for g in box_range(&IntVector::zeros(lam.len()), &top) {
            let total = &(lam + mu) - &g;
            let t =
                &trinomial(&total, &g, &(lam - &g), &(mu - &g))? * &vector_binomial(alpha, &total)?;
            rhs.add_scaled_shifted(&t, &crate::laurent::Int::ONE, lam.dot(mu) - alpha.dot(&g));
        }
        Ok(same(&lhs, &rhs))
    };
    // Exhaustive for n <= 2, seeded random samples for n = 3.
    for n in 1..=2 {
        let (lo, hi, top) = (
            IntVector::new(vec![-4; n]),
            IntVector::new(vec![4; n]),
            IntVector::new(vec![4; n]),
        );
        let z = IntVector::zeros(n);
        let alphas = box_range(&lo, &hi);
        let nats = box_range(&z, &top);
        let sums: Vec<Outcome> = alphas
            .par_iter()
            .map(|alpha| {
                let mut out = Outcome::default();
                for beta in &alphas {
                    for lam in &nats {
                        out.record(|| json!({"identity": "vector-vandermonde", "alpha": alpha, "beta": beta, "lambda": lam}), vector_sum(alpha, beta, lam)?);
                    }
                }
                for lam in &nats {
                    for mu in &nats {
                        out.record(|| json!({"identity": "vector-product", "alpha": alpha, "lambda": lam, "mu": mu}), vector_product(alpha, lam, mu)?);
                    }
                }
                Ok(out)
            })
            .collect::<Result<_>>()?;
        for o in sums {
            out.merge(o);
        }
    }
    let mut rng = rng(cfg, 1);
    {
        let n = 3;
        for _ in 0..cfg.random {
            let alpha = random_vector(&mut rng, n, -4, 4);
            let beta = random_vector(&mut rng, n, -4, 4);
            let lam = random_vector(&mut rng, n, 0, 4);
            let mu = random_vector(&mut rng, n, 0, 4);
            out.record(|| json!({"identity": "vector-vandermonde", "alpha": alpha, "beta": beta, "lambda": lam}), vector_sum(&alpha, &beta, &lam)?);
            out.record(
                || json!({"identity": "vector-product", "alpha": alpha, "lambda": lam, "mu": mu}),
                vector_product(&alpha, &lam, &mu)?,
            );
        }
    }
    Ok(out)
}

fn basis_count(cfg: &RunConfig) -> Result<Outcome> {
    let mut out = Outcome::default();
    let mut rows = Vec::new();
    for n in 1..=cfg.n {
        for r in 0..=cfg.r_max {
            let theta = theta_matrices(n, r as i64).len() as u64;
            let comps = compositions(n, r as i64);
            let mut cosets = 0u64;
            for lam in &comps {
                for mu in &comps {
                    cosets += distinguished_reps(lam, mu)?.len() as u64;
                }
            }
            let stars = BigInt::from(num_integer::binomial(
                (n * n + r).saturating_sub(1) as u64,
                r as u64,
            ));
            let check = if BigInt::from(theta) == stars && theta == cosets {
                Ok(())
            } else {
                Err(format!(
                    "|Theta| = {theta}, double cosets = {cosets}, C(n^2+r-1, r) = {stars}"
                ))
            };
            out.record(|| json!({"n": n, "r": r}), check);
            rows.push(json!({"n": n, "r": r, "count": theta}));
        }
    }
    out.details = json!({ "counts": rows });
    Ok(out)
}

fn blm_formulas(cfg: &RunConfig) -> Result<Outcome> {
    let n = cfg.n;
    let mut all = Vec::new();
    for r in 0..=cfg.r_max {
        all.extend(theta_matrices(n, r as i64));
    }
    fold(&all, |a| {
        let mut out = Outcome::default();
        let ro = a.ro();
        for h in 0..n - 1 {
            let d = ThetaMatrix::diag(&ro)?;
            for m in 0..=ro[h + 1] {
                let b = d
                    .add_at(h, h + 1, m)
                    .and_then(|x| x.add_at(h + 1, h + 1, -m))
                    .expect("m <= ro_{h+1}");
                let check = same(
                    &multiply_bm(h, m, a)?,
                    &oracle_product(&b, a, cfg.oracle_cap)?,
                );
                out.record(|| json!({"shape": "raise", "h": h, "m": m, "A": a}), check);
            }
            for m in 0..=ro[h] {
                let c = d
                    .add_at(h + 1, h, m)
                    .and_then(|x| x.add_at(h, h, -m))
                    .expect("m <= ro_h");
                let check = same(
                    &multiply_cm(h, m, a)?,
                    &oracle_product(&c, a, cfg.oracle_cap)?,
                );
                out.record(|| json!({"shape": "lower", "h": h, "m": m, "A": a}), check);
            }
        }
        Ok(out)
    })
}

/// Compares `realize(x)` with `left * right` taken componentwise.
fn against_product(
    x: &SymbolicElement,
    left: &TruncatedElement,
    right: &TruncatedElement,
    engine: &ProductEngine,
    r_max: usize,
) -> Result<Check> {
    let lhs = realize(x, r_max)?;
    let rhs = left.product(right, engine)?;
    Ok(same_truncated(&lhs, &rhs))
}

fn corrupted(x: SymbolicElement, cfg: &RunConfig) -> SymbolicElement {
    if !cfg.corrupt {
        return x;
    }
    let first = x.terms().next().map(|(k, _)| k.clone());
    match first {
        Some(k) => x.add(&single(&k)).expect("same n"),
        None => x,
    }
}

fn torus_factor(gamma: &IntVector, mu: &IntVector) -> SymbolicElement {
    SymbolicElement::single(ThetaMatrix::zero(gamma.len()), gamma.clone(), mu.clone())
        .expect("valid")
}

/// Left factors `0(gamma, mu)`: the box `|gamma_i| <= 2`, `mu_i <= 2` for
/// `n = 2`; for larger `n` the box `|gamma_i| <= 1`, `mu_i <= 1` together with
/// `0(+-2 e_i, 0)` and `0(0, 2 e_i)`.
fn left_torus_factors(n: usize) -> Vec<(IntVector, IntVector)> {
    let z = IntVector::zeros(n);
    let k = if n == 2 { 2 } else { 1 };
    let mut out = Vec::new();
    for g in box_range(&IntVector::new(vec![-k; n]), &IntVector::new(vec![k; n])) {
        for m in box_range(&z, &IntVector::new(vec![k; n])) {
            out.push((g.clone(), m));
        }
    }
    if k == 1 {
        for i in 0..n {
            let e = IntVector::unit(n, i).scaled(2);
            out.push((e.clone(), z.clone()));
            out.push((e.scaled(-1), z.clone()));
            out.push((z.clone(), e));
        }
    }
    out
}

fn formula1(cfg: &RunConfig) -> Result<Outcome> {
    let (n, r_max) = (cfg.n, cfg.r_max);
    let eng = engine(cfg);
    let lefts: Vec<_> = left_torus_factors(n)
        .into_iter()
        .map(|(g, m)| {
            let img = realize(&torus_factor(&g, &m), r_max)?;
            Ok((g, m, img))
        })
        .collect::<Result<_>>()?;
    let mut out = fold(&right_factors(n), |key| {
        let mut out = Outcome::default();
        let right = realize(&single(key), r_max)?;
        for (g, m, left) in &lefts {
            let x = corrupted(formula1_product(g, m, &key.a, &key.delta, &key.lam)?, cfg);
            let check = against_product(&x, left, &right, &eng, r_max)?;
            out.record(
                || json!({"gamma": g, "mu": m, "A": key.a, "delta": key.delta, "lambda": key.lam}),
                check,
            );
        }
        Ok(out)
    })?;
    let oracle = oracle_engine(cfg);
    let mut rng = rng(cfg, 2);
    let randoms: Vec<_> = (0..cfg.random)
        .map(|_| {
            let g = random_vector(&mut rng, n, -3, 3);
            let m = random_vector(&mut rng, n, 0, 3);
            let a = random_pm(&mut rng, n, 3);
            let d = random_vector(&mut rng, n, -3, 3);
            let l = random_vector(&mut rng, n, 0, 3);
            (
                g,
                m,
                Key {
                    a,
                    delta: d,
                    lam: l,
                },
            )
        })
        .collect();
    out.merge(fold(&randoms, |(g, m, key)| {
        let mut out = Outcome::default();
        let x = corrupted(formula1_product(g, m, &key.a, &key.delta, &key.lam)?, cfg);
        let left = realize(&torus_factor(g, m), r_max)?;
        let check = against_product(&x, &left, &realize(&single(key), r_max)?, &oracle, r_max)?;
        out.record(|| json!({"random": true, "gamma": g, "mu": m, "A": key.a, "delta": key.delta, "lambda": key.lam}), check);
        Ok(out)
    })?);
    Ok(out)
}

fn divided(raise: bool, h: usize, m: i64, n: usize) -> Result<SymbolicElement> {
    let g = if raise {
        Generator::DividedE { h, m }
    } else {
        Generator::DividedF { h, m }
    };
    generator_element(&g, n)
}

fn formula2_one(raise: bool, h: usize, m: i64, key: &Key) -> Result<SymbolicElement> {
    if raise {
        formula2_e(m, h, &key.a, &key.delta, &key.lam)
    } else {
        formula2_f(m, h, &key.a, &key.delta, &key.lam)
    }
}

fn formula2(cfg: &RunConfig) -> Result<Outcome> {
    let (n, r_max) = (cfg.n, cfg.r_max);
    let eng = engine(cfg);
    let mut lefts = Vec::new();
    for raise in [true, false] {
        for h in 0..n - 1 {
            for m in 0..=2 {
                lefts.push((raise, h, m, realize(&divided(raise, h, m, n)?, r_max)?));
            }
        }
    }
    let mut out = fold(&right_factors(n), |key| {
        let mut out = Outcome::default();
        let right = realize(&single(key), r_max)?;
        for (raise, h, m, left) in &lefts {
            let x = corrupted(formula2_one(*raise, *h, *m, key)?, cfg);
            let check = against_product(&x, left, &right, &eng, r_max)?;
            let which = if *raise { "E" } else { "F" };
            out.record(|| json!({"generator": which, "h": h, "m": m, "A": key.a, "delta": key.delta, "lambda": key.lam}), check);
        }
        Ok(out)
    })?;
    let oracle = oracle_engine(cfg);
    let mut rng = rng(cfg, 3);
    let randoms: Vec<_> = (0..cfg.random)
        .map(|_| {
            let raise = rng.gen_bool(0.5);
            let h = rng.gen_range(0..n - 1);
            let m = rng.gen_range(0..=3);
            let a = random_pm(&mut rng, n, 3);
            let d = random_vector(&mut rng, n, -3, 3);
            let l = random_vector(&mut rng, n, 0, 3);
            (
                raise,
                h,
                m,
                Key {
                    a,
                    delta: d,
                    lam: l,
                },
            )
        })
        .collect();
    out.merge(fold(&randoms, |(raise, h, m, key)| {
        let mut out = Outcome::default();
        let x = corrupted(formula2_one(*raise, *h, *m, key)?, cfg);
        let left = realize(&divided(*raise, *h, *m, n)?, r_max)?;
        let check = against_product(&x, &left, &realize(&single(key), r_max)?, &oracle, r_max)?;
        let which = if *raise { "E" } else { "F" };
        out.record(|| json!({"random": true, "generator": which, "h": h, "m": m, "A": key.a, "delta": key.delta, "lambda": key.lam}), check);
        Ok(out)
    })?);
    Ok(out)
}

fn delta_reduction(cfg: &RunConfig) -> Result<Outcome> {
    let (n, r_max) = (cfg.n, cfg.r_max);
    let mut rng = rng(cfg, 4);
    let xs: Vec<SymbolicElement> = (0..cfg.random.max(1))
        .map(|_| {
            let mut x = SymbolicElement::zero(n);
            for _ in 0..3 {
                let key = Key::new(
                    random_pm(&mut rng, n, 2),
                    random_vector(&mut rng, n, -3, 3),
                    random_vector(&mut rng, n, 0, 2),
                )
                .expect("valid");
                let c = LaurentPoly::from_terms([(rng.gen_range(-2..=2), rng.gen_range(1..=3))]);
                x.add_term(key, &c).expect("valid");
            }
            x
        })
        .collect();
    fold(&xs, |x| {
        let mut out = Outcome::default();
        let y = delta_reduce(x);
        let check = if let Some((k, _)) = y.terms().find(|(k, _)| !k.is_reduced()) {
            Err(format!("unreduced key {k}"))
        } else {
            same_truncated(&realize(&y, r_max)?, &realize(x, r_max)?)
        };
        out.record(|| serde_json::to_value(x).expect("serializable"), check);
        Ok(out)
    })
}

fn relations(cfg: &RunConfig) -> Result<Outcome> {
    let rep = check_relations(cfg.n, cfg.r_max, &engine(cfg))?;
    let mut out = Outcome::default();
    for inst in &rep.instances {
        let check = if inst.holds {
            Ok(())
        } else {
            Err(inst
                .error
                .clone()
                .unwrap_or_else(|| format!("sides differ in degree {:?}", inst.failing_degree)))
        };
        out.record(
            || json!({"relation": inst.relation.to_string(), "statement": inst.statement}),
            check,
        );
    }
    Ok(out)
}

fn triangular(cfg: &RunConfig) -> Result<Outcome> {
    let (n, r_max) = (cfg.n, cfg.r_max);
    let all = theta_pm_matrices(n, cfg.bound);
    let eng = engine(cfg);
    let mut out = fold(&all, |a| {
        let mut out = Outcome::default();
        let (x, mut rep) = triangular_symbolic(a)?;
        let word = pbw_word(&crate::uqgl::PBWIndex::new(
            a.clone(),
            IntVector::zeros(n),
            IntVector::zeros(n),
        )?)?;
        let direct = zeta(&word, n, r_max, &eng)?;
        rep.cross_checked = Some(realize(&x, r_max)? == direct);
        let check = if rep.passed() {
            Ok(())
        } else {
            Err(format!(
                "leading coefficient {}, {} violating keys, cross-check {:?}",
                rep.leading,
                rep.violations.len(),
                rep.cross_checked
            ))
        };
        out.record(|| serde_json::to_value(&rep).expect("serializable"), check);
        Ok(out)
    })?;
    // Strictly smaller matrices have strictly smaller norm.
    let mut pairs = Outcome::default();
    for a in &all {
        for b in &all {
            if precedes(b, a)? {
                let check = if norm(b) < norm(a) {
                    Ok(())
                } else {
                    Err(format!("norm {} >= {}", norm(b), norm(a)))
                };
                pairs.record(|| json!({"B": b, "A": a}), check);
            }
        }
    }
    let comparable = pairs.instances;
    out.merge(pairs);
    out.details = json!({
        "matrices": all.len(),
        "comparable_pairs": comparable,
        "coefficient_ring": "every coefficient produced lies in Z[v, v^-1]",
    });
    Ok(out)
}

fn generators(n: usize) -> Vec<Generator> {
    let mut out = Vec::new();
    for h in 0..n - 1 {
        for m in 1..=2 {
            out.push(Generator::DividedE { h, m });
            out.push(Generator::DividedF { h, m });
        }
    }
    for i in 0..n {
        out.push(Generator::k(i));
        out.push(Generator::k_inv(i));
        for t in 1..=2 {
            out.push(Generator::KBinom { i, t });
        }
    }
    out
}

fn closure(cfg: &RunConfig) -> Result<Outcome> {
    let (n, r_max) = (cfg.n, cfg.r_max);
    let eng = engine(cfg);
    let gens: Vec<_> = generators(n)
        .into_iter()
        .map(|g| Ok((g, realize(&generator_element(&g, n)?, r_max)?)))
        .collect::<Result<_>>()?;
    let keys: Vec<Key> = pbw_indices(n, cfg.bound)
        .into_iter()
        .map(|i| Key {
            a: i.a,
            delta: i.delta,
            lam: i.lam,
        })
        .collect();
    fold(&keys, |key| {
        let mut out = Outcome::default();
        let x = single(key);
        let right = realize(&x, r_max)?;
        for (g, left) in &gens {
            let y = delta_reduce(&apply_generator(g, &x)?);
            let check = match y.terms().find(|(k, _)| !k.is_reduced()) {
                Some((k, _)) => Err(format!("unreduced key {k}")),
                None => same_truncated(&realize(&y, r_max)?, &left.product(&right, &eng)?),
            };
            out.record(|| json!({"generator": g.to_string(), "A": key.a, "delta": key.delta, "lambda": key.lam}), check);
        }
        Ok(out)
    })
}

fn pbw_independence(cfg: &RunConfig) -> Result<Outcome> {
    let eng = engine(cfg);
    let (_, fam) = pbw_family(cfg.n, cfg.bound, cfg.r_max, &eng)?;
    let v = independence_check(&fam, &DEFAULT_EVALUATION_POINTS);
    let (_, next) = pbw_family(cfg.n, cfg.bound, cfg.r_max + 1, &eng)?;
    let w = independence_check(&next, &DEFAULT_EVALUATION_POINTS);
    let mut out = Outcome::default();
    let check = if v.independent {
        Ok(())
    } else {
        Err(v.note.clone())
    };
    out.record(
        || json!({"family": "pbw", "n": cfg.n, "bound": cfg.bound, "r_max": cfg.r_max}),
        check,
    );
    out.details = json!({
        "verdict": v,
        "verdict_next": w,
        "stable": v.independent == w.independent,
    });
    Ok(out)
}

fn b3_independence(cfg: &RunConfig) -> Result<Outcome> {
    let (n, bound) = (cfg.n, cfg.bound);
    let (_, fam) = b3_family(n, bound, cfg.r_max)?;
    let v = independence_check(&fam, &DEFAULT_EVALUATION_POINTS);
    let mut out = Outcome::default();
    let check = if v.independent {
        Ok(())
    } else {
        Err(v.note.clone())
    };
    out.record(
        || json!({"family": "b3", "n": n, "bound": bound, "r_max": cfg.r_max}),
        check,
    );
    let first = if v.independent {
        Some(cfg.r_max)
    } else {
        first_independent_truncation(cfg.r_max + 1, cfg.r_max + 6, |r| {
            Ok(b3_family(n, bound, r)?.1)
        })?
        .map(|(r, _)| r)
    };
    out.details = json!({ "verdict": v, "first_independent_r_max": first });
    Ok(out)
}

fn specialization(cfg: &RunConfig) -> Result<Outcome> {
    let (n, r_max) = (cfg.n, cfg.r_max);
    let l = cfg.l.unwrap_or(3);
    let eng = engine(cfg);
    let mut out = Outcome::default();
    for i in 0..n {
        let rep = check_kl_trivial(n, i, l, r_max)?;
        let check = if rep.holds {
            Ok(())
        } else {
            Err(format!("differs from 1 in degree {:?}", rep.failing_degree))
        };
        out.record(|| json!({"check": "K^l = 1", "i": i, "l": l}), check);
    }
    let bk = bk_independence(n, cfg.bound, l, r_max, &eng)?;
    out.record(
        || json!({"check": "B_k independence", "n": n, "bound": cfg.bound, "l": l, "r_max": r_max}),
        if bk.independent {
            Ok(())
        } else {
            Err(bk.note.clone())
        },
    );
    let mut rng = rng(cfg, 5);
    for _ in 0..(cfg.random / 10).max(1) {
        let r = rng.gen_range(1..=r_max.clamp(1, 4));
        let all = theta_matrices(n, r as i64);
        let mut pick = || {
            let mut x = crate::schur::SchurElement::zero(n, r);
            for _ in 0..3 {
                let c = LaurentPoly::from_terms([
                    (rng.gen_range(-3..=3), rng.gen_range(-2..=2)),
                    (rng.gen_range(-3..=3), 1),
                ]);
                x.add_term(all[rng.gen_range(0..all.len())].clone(), &c)
                    .expect("valid");
            }
            x
        };
        let (x, y) = (pick(), pick());
        let lhs = CycloSchurElement::from_schur(&eng.product(&x, &y)?, l)?;
        let rhs = CycloSchurElement::from_schur(&x, l)?
            .product(&CycloSchurElement::from_schur(&y, l)?, &eng)?;
        out.record(
            || json!({"check": "homomorphism", "x": x, "y": y, "l": l}),
            same(&lhs, &rhs),
        );
    }
    // Rank of the B_3 family before and after specialization, recorded only.
    let small = cfg.bound.min(1);
    let (_, fam) = b3_family(n, small, r_max)?;
    let generic = independence_check(&fam, &DEFAULT_EVALUATION_POINTS).rank;
    let special = specialized_rank(&fam, l)?;
    out.details = json!({
        "bk": bk,
        "b3_rank_drop": {"bound": small, "size": fam.len(), "rank_generic": generic, "rank_specialized": special},
    });
    Ok(out)
}
