//! The defining relations of `U(n)` checked on their images under `zeta`.

use rayon::prelude::*;
use serde::Serialize;

use super::word::{Generator, GeneratorWord};
use super::zeta::zeta;
use crate::blm::{realize, SymbolicElement, TruncatedElement};
use crate::error::{Error, Result};
use crate::laurent::{IntVector, LaurentPoly};
use crate::schur::{ProductEngine, SchurElement, ThetaMatrix};

type Combination = Vec<(LaurentPoly, GeneratorWord)>;

/// One instance of a relation and its outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationInstance {
    /// The relation letter `a` to `g`.
    pub relation: char,
    /// Human-readable form with 1-based indices.
    pub statement: String,
    pub holds: bool,
    /// Smallest degree `r` at which the two sides differ.
    pub failing_degree: Option<usize>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub n: usize,
    pub r_max: usize,
    pub instances: Vec<RelationInstance>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.instances.iter().all(|x| x.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationInstance> {
        self.instances.iter().filter(|x| !x.holds)
    }
}

enum Rhs {
    Words(Combination),
    /// `(K_i K_{i+1}^-1 - K_i^-1 K_{i+1}) / (v - v^-1)`.
    KTilde(usize),
}

struct Spec {
    relation: char,
    statement: String,
    lhs: Combination,
    rhs: Rhs,
}

fn word(gens: &[Generator]) -> GeneratorWord {
    GeneratorWord::new(gens.to_vec())
}

fn one() -> LaurentPoly {
    LaurentPoly::one()
}

fn serre(x: fn(usize) -> Generator, i: usize, j: usize) -> Combination {
    vec![
        (one(), word(&[x(i), x(i), x(j)])),
        (
            -LaurentPoly::from_terms([(1, 1), (-1, 1)]),
            word(&[x(i), x(j), x(i)]),
        ),
        (one(), word(&[x(j), x(i), x(i)])),
    ]
}

fn specs(n: usize) -> Vec<Spec> {
    let (e, f, k, ki) = (Generator::e, Generator::f, Generator::k, Generator::k_inv);
    let kd = |i: usize, j: usize| i64::from(i == j);
    let mut out = Vec::new();
    let mut push = |relation, statement: String, lhs: Combination, rhs: Rhs| {
        out.push(Spec {
            relation,
            statement,
            lhs,
            rhs,
        })
    };
    for i in 0..n {
        for j in i + 1..n {
            push(
                'a',
                format!("K{0} K{1} = K{1} K{0}", i + 1, j + 1),
                vec![(one(), word(&[k(i), k(j)]))],
                Rhs::Words(vec![(one(), word(&[k(j), k(i)]))]),
            );
        }
        push(
            'a',
            format!("K{0} K{0}^-1 = 1", i + 1),
            vec![(one(), word(&[k(i), ki(i)]))],
            Rhs::Words(vec![(one(), word(&[]))]),
        );
        push(
            'a',
            format!("K{0}^-1 K{0} = 1", i + 1),
            vec![(one(), word(&[ki(i), k(i)]))],
            Rhs::Words(vec![(one(), word(&[]))]),
        );
    }
    for i in 0..n {
        for j in 0..n - 1 {
            let eb = kd(i, j) - kd(i, j + 1);
            push(
                'b',
                format!("K{} E{} = v^{eb} E{} K{}", i + 1, j + 1, j + 1, i + 1),
                vec![(one(), word(&[k(i), e(j)]))],
                Rhs::Words(vec![(LaurentPoly::monomial(eb, 1), word(&[e(j), k(i)]))]),
            );
            let ec = -eb;
            push(
                'c',
                format!("K{} F{} = v^{ec} F{} K{}", i + 1, j + 1, j + 1, i + 1),
                vec![(one(), word(&[k(i), f(j)]))],
                Rhs::Words(vec![(LaurentPoly::monomial(ec, 1), word(&[f(j), k(i)]))]),
            );
        }
    }
    for i in 0..n - 1 {
        for j in i + 2..n - 1 {
            push(
                'd',
                format!("E{0} E{1} = E{1} E{0}", i + 1, j + 1),
                vec![(one(), word(&[e(i), e(j)]))],
                Rhs::Words(vec![(one(), word(&[e(j), e(i)]))]),
            );
            push(
                'd',
                format!("F{0} F{1} = F{1} F{0}", i + 1, j + 1),
                vec![(one(), word(&[f(i), f(j)]))],
                Rhs::Words(vec![(one(), word(&[f(j), f(i)]))]),
            );
        }
    }
    for i in 0..n - 1 {
        for j in 0..n - 1 {
            let lhs = vec![
                (one(), word(&[e(i), f(j)])),
                (LaurentPoly::constant(-1), word(&[f(j), e(i)])),
            ];
            if i == j {
                push(
                    'e',
                    format!(
                        "E{0} F{0} - F{0} E{0} = (K{0} K{1}^-1 - K{0}^-1 K{1}) / (v - v^-1)",
                        i + 1,
                        i + 2
                    ),
                    lhs,
                    Rhs::KTilde(i),
                );
            } else {
                push(
                    'e',
                    format!("E{} F{} - F{} E{} = 0", i + 1, j + 1, j + 1, i + 1),
                    lhs,
                    Rhs::Words(Vec::new()),
                );
            }
        }
    }
    for i in 0..n - 1 {
        for j in 0..n - 1 {
            if i.abs_diff(j) == 1 {
                push(
                    'f',
                    format!(
                        "E{0}^2 E{1} - (v + v^-1) E{0} E{1} E{0} + E{1} E{0}^2 = 0",
                        i + 1,
                        j + 1
                    ),
                    serre(e, i, j),
                    Rhs::Words(Vec::new()),
                );
                push(
                    'g',
                    format!(
                        "F{0}^2 F{1} - (v + v^-1) F{0} F{1} F{0} + F{1} F{0}^2 = 0",
                        i + 1,
                        j + 1
                    ),
                    serre(f, i, j),
                    Rhs::Words(Vec::new()),
                );
            }
        }
    }
    out
}

fn combine(
    c: &Combination,
    n: usize,
    r_max: usize,
    engine: &ProductEngine,
) -> Result<TruncatedElement> {
    let mut acc = TruncatedElement::zero(n, r_max);
    for (coeff, w) in c {
        acc = acc.add(&zeta(w, n, r_max, engine)?.scale(coeff))?;
    }
    Ok(acc)
}

/// Exact division of every coefficient by `d`.
pub fn divide_exact(x: &TruncatedElement, d: &LaurentPoly) -> Result<TruncatedElement> {
    let mut components = Vec::with_capacity(x.r_max() + 1);
    for (r, c) in x.components().iter().enumerate() {
        let mut terms = Vec::with_capacity(c.len());
        for (a, p) in c.terms() {
            let q = p
                .div_exact(d)
                .ok_or_else(|| Error::Domain(format!("{p} is not divisible by {d} at [{a}]")))?;
            terms.push((a.clone(), q));
        }
        components.push(SchurElement::from_terms(x.n(), r, terms)?);
    }
    TruncatedElement::from_components(x.n(), components)
}

fn k_tilde(i: usize, n: usize, r_max: usize) -> Result<TruncatedElement> {
    let d = IntVector::unit(n, i).add_at(i + 1, -1);
    let zero = ThetaMatrix::zero(n);
    let plus = SymbolicElement::single(zero.clone(), d.clone(), IntVector::zeros(n))?;
    let minus = SymbolicElement::single(zero, d.scaled(-1), IntVector::zeros(n))?;
    let num = realize(&plus.sub(&minus)?, r_max)?;
    divide_exact(&num, &LaurentPoly::from_terms([(1, 1), (-1, -1)]))
}

fn check(spec: &Spec, n: usize, r_max: usize, engine: &ProductEngine) -> RelationInstance {
    let sides = (|| {
        let lhs = combine(&spec.lhs, n, r_max, engine)?;
        let rhs = match &spec.rhs {
            Rhs::Words(c) => combine(c, n, r_max, engine)?,
            Rhs::KTilde(i) => k_tilde(*i, n, r_max)?,
        };
        Ok::<_, Error>((lhs, rhs))
    })();
    let (holds, failing_degree, error) = match sides {
        Ok((lhs, rhs)) => {
            let bad = (0..=r_max).find(|&r| lhs.component(r) != rhs.component(r));
            (bad.is_none(), bad, None)
        }
        Err(e) => (false, None, Some(e.to_string())),
    };
    RelationInstance {
        relation: spec.relation,
        statement: spec.statement.clone(),
        holds,
        failing_degree,
        error,
    }
}

/// Instantiates relations (a) to (g) for every valid index pair and checks
/// each one in every degree `r <= r_max`.
pub fn check_relations(n: usize, r_max: usize, engine: &ProductEngine) -> Result<RelationReport> {
    if n < 2 {
        return Err(Error::Domain(format!("relations need n >= 2, got {n}")));
    }
    let instances = specs(n)
        .par_iter()
        .map(|s| check(s, n, r_max, engine))
        .collect();
    Ok(RelationReport {
        n,
        r_max,
        instances,
    })
}
