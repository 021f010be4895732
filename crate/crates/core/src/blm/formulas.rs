//! Closed multiplication rules inside `V(n)`, stated on the elements
//! `A(delta, lam)`: left multiplication by `0(gamma, mu)` and by the divided
//! powers `(m E_{h,h+1})(0)` and `(m E_{h+1,h})(0)`.

use std::collections::BTreeMap;

use super::symbolic::{Key, SymbolicElement};
use crate::error::{Error, Result};
use crate::laurent::{box_range, compositions, Int, IntVector, LaurentPoly};
use crate::schur::formulas::binom;
use crate::schur::ThetaMatrix;

fn check_dims(n: usize, vs: &[&IntVector]) -> Result<()> {
    for v in vs {
        if v.len() != n {
            return Err(Error::Dimension {
                expected: n,
                found: v.len(),
            });
        }
    }
    Ok(())
}

fn check_natural(v: &IntVector) -> Result<()> {
    if !v.is_natural() {
        return Err(Error::Domain(format!("{v} has a negative entry")));
    }
    Ok(())
}

fn check_pm(a: &ThetaMatrix) -> Result<()> {
    if !a.has_zero_diagonal() {
        return Err(Error::Domain(format!("{a} has a nonzero diagonal")));
    }
    Ok(())
}

/// `prod_i [top_i over bottom_i]`.
fn binom_product(top: &[i64], bottom: &[i64]) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for (&t, &b) in top.iter().zip(bottom) {
        if b == 0 {
            continue;
        }
        let x = binom(t, b);
        if x.is_zero() {
            return LaurentPoly::zero();
        }
        acc = &acc * &*x;
    }
    acc
}

/// `[x+y+z]! / ([x]! [y]! [z]!)` for naturals.
fn trinomial3(x: i64, y: i64, z: i64) -> LaurentPoly {
    debug_assert!(x >= 0 && y >= 0 && z >= 0);
    if x == 0 {
        return binom(y + z, y).into_owned();
    }
    &*binom(x + y + z, x) * &*binom(y + z, y)
}

/// `0(gamma, mu) * A(delta, lam)`.
pub fn formula1_product(
    gamma: &IntVector,
    mu: &IntVector,
    a: &ThetaMatrix,
    delta: &IntVector,
    lam: &IntVector,
) -> Result<SymbolicElement> {
    let n = a.n();
    check_dims(n, &[gamma, mu, delta, lam])?;
    check_natural(mu)?;
    check_natural(lam)?;
    check_pm(a)?;
    let ro = a.ro();
    let mut out = SymbolicElement::zero(n);
    for nu in box_range(&IntVector::zeros(n), mu) {
        let lo = IntVector::new((0..n).map(|i| (nu[i] - lam[i]).max(0)).collect());
        let mut a_nu = LaurentPoly::zero();
        for j in box_range(&lo, &nu) {
            let mut c = binom_product(&ro, &j);
            if c.is_zero() {
                continue;
            }
            for i in 0..n {
                c = &c * &trinomial3(nu[i] - j[i], lam[i] - nu[i] + j[i], mu[i] - nu[i]);
            }
            let e = ro.dot(&(&(gamma + mu) - &j)) + lam.dot(&(mu - &j));
            a_nu.add_scaled_shifted(&c, &Int::ONE, e);
        }
        if a_nu.is_zero() {
            continue;
        }
        let key = Key {
            a: a.clone(),
            delta: &(gamma + delta) - &nu,
            lam: &(lam + mu) - &nu,
        };
        out.push(key, &a_nu, &Int::ONE, 0);
    }
    Ok(out)
}

/// Which divided power multiplies from the left.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Direction {
    /// `(m E_{h,h+1})(0)`.
    Raise,
    /// `(m E_{h+1,h})(0)`.
    Lower,
}

/// Both divided-power rules. The lowering rule is the raising rule with the
/// roles of rows `h` and `h+1` exchanged and all inequalities between
/// column indices reversed; `p` is the row gaining entries and `q` the row
/// losing them.
fn formula2(
    dir: Direction,
    m: i64,
    h: usize,
    a: &ThetaMatrix,
    delta: &IntVector,
    lam: &IntVector,
) -> Result<SymbolicElement> {
    let n = a.n();
    check_dims(n, &[delta, lam])?;
    check_natural(lam)?;
    check_pm(a)?;
    if h + 1 >= n {
        return Err(Error::Domain(format!(
            "row index {h} needs h + 1 < n = {n}"
        )));
    }
    if m < 0 {
        return Err(Error::Domain(format!("divided power {m} is negative")));
    }
    let (p, q) = match dir {
        Direction::Raise => (h, h + 1),
        Direction::Lower => (h + 1, h),
    };
    // `before(x, y)` is `x < y` for raising and `x > y` for lowering.
    let before = |x: usize, y: usize| match dir {
        Direction::Raise => x < y,
        Direction::Lower => x > y,
    };
    let mut out = SymbolicElement::zero(n);
    let base = a.signed_entries();
    for t in compositions(n, m) {
        let mut entries = base.clone();
        for u in 0..n {
            if u != p {
                entries[p * n + u] += t[u];
            }
            if u != q {
                entries[q * n + u] -= t[u];
            }
        }
        // Summands whose matrix acquires a negative entry vanish.
        let Some(key_a) = ThetaMatrix::from_signed(n, &entries) else {
            continue;
        };

        let mut g0 = 0i64;
        let mut bars = LaurentPoly::one();
        for u in 0..n {
            let tu = t[u];
            if tu == 0 {
                continue;
            }
            for jj in 0..n {
                if jj != p && (jj == u || before(u, jj)) {
                    g0 += a.get(p, jj) * tu;
                }
                if jj != q && before(u, jj) {
                    g0 -= a.get(q, jj) * tu;
                }
            }
            if u != p {
                // bar[[a+t over t]] = v^{-t a}[a+t over t]
                let apu = a.get(p, u);
                g0 -= tu * apu;
                bars = &bars * &*binom(apu + tu, tu);
            }
        }
        for u in 0..n {
            for u2 in 0..n {
                let restricted = match dir {
                    Direction::Raise => u2,
                    Direction::Lower => u,
                };
                if u < u2 && restricted != h && restricted != h + 1 {
                    g0 += t[u] * t[u2];
                }
            }
        }
        g0 += -t[p] * delta[p] + t[q] * delta[q];
        let (tp, tq) = (t[p], t[q]);
        let before_p: i64 = (0..n).filter(|&u| before(u, p)).map(|u| t[u]).sum();
        let before_q: i64 = (0..n).filter(|&u| before(u, q)).map(|u| t[u]).sum();

        for k in 0..=lam[q] {
            let last = binom(tq, lam[q] - k);
            if last.is_zero() {
                continue;
            }
            let outer = &bars * &*last;
            for j in 0..=lam[p] {
                let neg = binom(-tp, lam[p] - j);
                if neg.is_zero() {
                    continue;
                }
                let inner = &outer * &*neg;
                for c in 0..=tp.min(j) {
                    let coeff = &inner * &trinomial3(c, tp - c, j - c);
                    let e = g0 + 2 * j * tp - k * tq;
                    let mut d = delta.clone();
                    d = d.add_at(p, before_p + lam[p] - j - c);
                    d = d.add_at(q, lam[q] - k - before_q);
                    let l = lam.with(p, tp + j - c).with(q, k);
                    out.push(
                        Key {
                            a: key_a.clone(),
                            delta: d,
                            lam: l,
                        },
                        &coeff,
                        &Int::ONE,
                        e,
                    );
                }
            }
        }
    }
    Ok(out)
}

/// `(m E_{h,h+1})(0) * A(delta, lam)`, 0-based `h`.
pub fn formula2_e(
    m: i64,
    h: usize,
    a: &ThetaMatrix,
    delta: &IntVector,
    lam: &IntVector,
) -> Result<SymbolicElement> {
    formula2(Direction::Raise, m, h, a, delta, lam)
}

/// `(m E_{h+1,h})(0) * A(delta, lam)`, 0-based `h`.
pub fn formula2_f(
    m: i64,
    h: usize,
    a: &ThetaMatrix,
    delta: &IntVector,
    lam: &IntVector,
) -> Result<SymbolicElement> {
    formula2(Direction::Lower, m, h, a, delta, lam)
}

fn left_linear<F>(x: &SymbolicElement, f: F) -> Result<SymbolicElement>
where
    F: Fn(&Key) -> Result<SymbolicElement>,
{
    let mut out = SymbolicElement::zero(x.n());
    for (key, c) in x.terms() {
        out.add_scaled(&f(key)?, c);
    }
    Ok(out)
}

/// `0(gamma, mu) * x`.
pub fn left_torus(
    gamma: &IntVector,
    mu: &IntVector,
    x: &SymbolicElement,
) -> Result<SymbolicElement> {
    left_linear(x, |k| formula1_product(gamma, mu, &k.a, &k.delta, &k.lam))
}

/// `(m E_{h,h+1})(0) * x`.
pub fn left_e(m: i64, h: usize, x: &SymbolicElement) -> Result<SymbolicElement> {
    left_linear(x, |k| formula2_e(m, h, &k.a, &k.delta, &k.lam))
}

/// `(m E_{h+1,h})(0) * x`.
pub fn left_f(m: i64, h: usize, x: &SymbolicElement) -> Result<SymbolicElement> {
    left_linear(x, |k| formula2_f(m, h, &k.a, &k.delta, &k.lam))
}

/// `x * y` where every key of `x` is a torus element `0(gamma, mu)` or a
/// divided power `(m E_{h,h+1})(0)`, `(m E_{h+1,h})(0)`.
pub fn symbolic_product(x: &SymbolicElement, y: &SymbolicElement) -> Result<SymbolicElement> {
    if x.n() != y.n() {
        return Err(Error::Dimension {
            expected: x.n(),
            found: y.n(),
        });
    }
    let mut out = SymbolicElement::zero(y.n());
    for (k, c) in x.terms() {
        let mut off = k.a.off_diagonal_entries();
        let p = match (off.next(), off.next()) {
            (None, _) => left_torus(&k.delta, &k.lam, y)?,
            (Some((i, j, m)), None) if k.delta.is_zero() && k.lam.is_zero() && j == i + 1 => {
                left_e(m, i, y)?
            }
            (Some((i, j, m)), None) if k.delta.is_zero() && k.lam.is_zero() && i == j + 1 => {
                left_f(m, j, y)?
            }
            _ => {
                return Err(Error::Domain(format!(
                    "no closed formula for a left factor with key {k}"
                )))
            }
        };
        out.add_scaled(&p, c);
    }
    Ok(out)
}

/// Rewrites every key into one with `delta` in `{0,1}^n` using
/// `A(d, l) = v^{l_i}(v^{l_i+1} - v^{-l_i-1}) A(d - e_i, l + e_i) + v^{2 l_i} A(d - 2e_i, l)`
/// when `d_i >= 2` and
/// `A(d, l) = -v^{-l_i}(v^{l_i+1} - v^{-l_i-1}) A(d + e_i, l + e_i) + v^{-2 l_i} A(d + 2e_i, l)`
/// when `d_i <= -1`.
pub fn delta_reduce(x: &SymbolicElement) -> SymbolicElement {
    let mut out = SymbolicElement::zero(x.n());
    let mut pending: BTreeMap<Key, LaurentPoly> =
        x.terms().map(|(k, c)| (k.clone(), c.clone())).collect();
    // Each step lowers sum_i max(d_i - 1, -d_i, 0), so the loop ends.
    while let Some((key, c)) = pending.pop_first() {
        if c.is_zero() {
            continue;
        }
        let Some(i) = key.delta.iter().position(|&d| !(0..=1).contains(&d)) else {
            out.push(key, &c, &Int::ONE, 0);
            continue;
        };
        let (d, l) = (key.delta[i], key.lam[i]);
        let mut add = |delta: IntVector, lam: IntVector, p: LaurentPoly| {
            let entry = pending
                .entry(Key {
                    a: key.a.clone(),
                    delta,
                    lam,
                })
                .or_default();
            entry.add_product(&c, &p);
        };
        let gap = LaurentPoly::from_terms([(l + 1, 1), (-l - 1, -1)]);
        if d >= 2 {
            add(key.delta.add_at(i, -1), key.lam.add_at(i, 1), gap.shift(l));
            add(
                key.delta.add_at(i, -2),
                key.lam.clone(),
                LaurentPoly::monomial(2 * l, 1),
            );
        } else {
            add(key.delta.add_at(i, 1), key.lam.add_at(i, 1), -gap.shift(-l));
            add(
                key.delta.add_at(i, 2),
                key.lam.clone(),
                LaurentPoly::monomial(-2 * l, 1),
            );
        }
    }
    out
}

/// `0(delta, lam) * A(0)` expanded as
/// `sum_{j <= lam} v^{ro(A).(delta + lam - j)} [ro(A) over j] A(delta - j, lam - j)`.
/// Correction keys keep their raw `delta - j`; apply [`delta_reduce`] for
/// binary `delta` throughout.
pub fn b1_expand(delta: &IntVector, lam: &IntVector, a: &ThetaMatrix) -> Result<SymbolicElement> {
    let n = a.n();
    check_dims(n, &[delta, lam])?;
    check_natural(lam)?;
    check_pm(a)?;
    if !delta.iter().all(|&d| d == 0 || d == 1) {
        return Err(Error::Domain(format!("{delta} is not binary")));
    }
    let ro = a.ro();
    let mut out = SymbolicElement::zero(n);
    for j in box_range(&IntVector::zeros(n), lam) {
        let c = binom_product(&ro, &j);
        let e = ro.dot(&(&(delta + lam) - &j));
        let key = Key {
            a: a.clone(),
            delta: delta - &j,
            lam: lam - &j,
        };
        out.push(key, &c, &Int::ONE, e);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blm::realize;
    use crate::schur::ProductEngine;

    fn iv(xs: &[i64]) -> IntVector {
        IntVector::from(xs)
    }

    fn single(a: &ThetaMatrix, d: &IntVector, l: &IntVector) -> SymbolicElement {
        SymbolicElement::single(a.clone(), d.clone(), l.clone()).unwrap()
    }

    fn truncated_product(
        x: &SymbolicElement,
        y: &SymbolicElement,
        r_max: usize,
    ) -> crate::blm::TruncatedElement {
        realize(x, r_max)
            .unwrap()
            .product(&realize(y, r_max).unwrap(), &ProductEngine::default())
            .unwrap()
    }

    #[test]
    fn formula1_with_zero_mu_is_a_shift() {
        let a = ThetaMatrix::from_rows(&[vec![0, 1], vec![2, 0]]).unwrap();
        let (g, d, l) = (iv(&[1, -2]), iv(&[0, 1]), iv(&[2, 1]));
        let x = formula1_product(&g, &iv(&[0, 0]), &a, &d, &l).unwrap();
        let expect = single(&a, &(&g + &d), &l).scale(&LaurentPoly::monomial(a.ro().dot(&g), 1));
        assert_eq!(x, expect);
    }

    #[test]
    fn formula1_matches_componentwise_products() {
        let a = ThetaMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        let z = ThetaMatrix::zero(2);
        for (g, mu, d, l) in [
            (iv(&[0, 0]), iv(&[1, 2]), iv(&[0, 0]), iv(&[1, 1])),
            (iv(&[1, -1]), iv(&[2, 0]), iv(&[-2, 1]), iv(&[0, 2])),
        ] {
            let x = formula1_product(&g, &mu, &a, &d, &l).unwrap();
            let expect = truncated_product(&single(&z, &g, &mu), &single(&a, &d, &l), 4);
            assert_eq!(realize(&x, 4).unwrap(), expect);
        }
    }

    #[test]
    fn formula2_small_examples() {
        let z = ThetaMatrix::zero(2);
        let o = iv(&[0, 0]);
        assert_eq!(
            formula2_e(1, 0, &z, &o, &o).unwrap(),
            single(&ThetaMatrix::unit(2, 0, 1), &o, &o)
        );
        assert_eq!(
            formula2_f(1, 0, &z, &o, &o).unwrap(),
            single(&ThetaMatrix::unit(2, 1, 0), &o, &o)
        );
        let a = ThetaMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        let (d, l) = (iv(&[1, -1]), iv(&[1, 2]));
        let id = formula2_e(0, 0, &a, &d, &l).unwrap();
        assert_eq!(
            realize(&id, 4).unwrap(),
            realize(&single(&a, &d, &l), 4).unwrap()
        );
    }

    #[test]
    fn formula2_matches_componentwise_products() {
        for n in [2, 3] {
            let a = if n == 2 {
                ThetaMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap()
            } else {
                ThetaMatrix::from_rows(&[vec![0, 0, 1], vec![1, 0, 0], vec![0, 0, 0]]).unwrap()
            };
            let d = IntVector::new((0..n as i64).map(|i| 1 - i).collect());
            let l = IntVector::new((0..n as i64).map(|i| (i + 1) % 2).collect());
            for h in 0..n - 1 {
                for m in 0..=2 {
                    let o = IntVector::zeros(n);
                    let e = single(&ThetaMatrix::zero(n).add_at(h, h + 1, m).unwrap(), &o, &o);
                    let f = single(&ThetaMatrix::zero(n).add_at(h + 1, h, m).unwrap(), &o, &o);
                    let y = single(&a, &d, &l);
                    let xe = formula2_e(m, h, &a, &d, &l).unwrap();
                    assert_eq!(
                        realize(&xe, 4).unwrap(),
                        truncated_product(&e, &y, 4),
                        "E n={n} h={h} m={m}"
                    );
                    let xf = formula2_f(m, h, &a, &d, &l).unwrap();
                    assert_eq!(
                        realize(&xf, 4).unwrap(),
                        truncated_product(&f, &y, 4),
                        "F n={n} h={h} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn delta_reduction_steps() {
        let z = ThetaMatrix::zero(2);
        let x = single(&z, &iv(&[2, 0]), &iv(&[0, 0]));
        let r = delta_reduce(&x);
        let gap = LaurentPoly::from_terms([(1, 1), (-1, -1)]);
        assert_eq!(
            r.coeff(&Key {
                a: z.clone(),
                delta: iv(&[1, 0]),
                lam: iv(&[1, 0])
            }),
            gap
        );
        assert_eq!(
            r.coeff(&Key {
                a: z.clone(),
                delta: iv(&[0, 0]),
                lam: iv(&[0, 0])
            }),
            LaurentPoly::one()
        );
        assert_eq!(r.len(), 2);
        let y = single(&z, &iv(&[-1, 0]), &iv(&[0, 0]));
        let r = delta_reduce(&y);
        assert_eq!(
            r.coeff(&Key {
                a: z.clone(),
                delta: iv(&[0, 0]),
                lam: iv(&[1, 0])
            }),
            -gap
        );
        assert_eq!(
            r.coeff(&Key {
                a: z,
                delta: iv(&[1, 0]),
                lam: iv(&[0, 0])
            }),
            LaurentPoly::one()
        );
    }

    #[test]
    fn delta_reduction_preserves_realization() {
        let a = ThetaMatrix::from_rows(&[vec![0, 1], vec![0, 0]]).unwrap();
        let x = single(&a, &iv(&[3, -2]), &iv(&[1, 0]))
            .add(&single(&a, &iv(&[-1, 2]), &iv(&[0, 2])))
            .unwrap();
        let r = delta_reduce(&x);
        assert!(r.terms().all(|(k, _)| k.is_reduced()));
        assert_eq!(realize(&r, 4).unwrap(), realize(&x, 4).unwrap());
    }

    #[test]
    fn b1_examples() {
        let a = ThetaMatrix::from_rows(&[vec![0, 2], vec![1, 0]]).unwrap();
        let d = iv(&[1, 0]);
        let x = b1_expand(&d, &iv(&[0, 0]), &a).unwrap();
        assert_eq!(
            x,
            single(&a, &d, &iv(&[0, 0])).scale(&LaurentPoly::monomial(a.ro().dot(&d), 1))
        );
        let z = ThetaMatrix::zero(2);
        assert_eq!(
            b1_expand(&d, &iv(&[2, 1]), &z).unwrap(),
            single(&z, &d, &iv(&[2, 1]))
        );
        let l = iv(&[1, 2]);
        let x = b1_expand(&d, &l, &a).unwrap();
        let o = iv(&[0, 0]);
        assert_eq!(x, formula1_product(&d, &l, &a, &o, &o).unwrap());
        assert!(b1_expand(&iv(&[2, 0]), &l, &a).is_err());
    }

    #[test]
    fn symbolic_products_dispatch_on_the_left_factor() {
        let a = ThetaMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        let y = single(&a, &iv(&[1, 0]), &iv(&[0, 1]));
        let (o, z) = (iv(&[0, 0]), ThetaMatrix::zero(2));
        let x = single(&z, &iv(&[1, -1]), &iv(&[1, 0]))
            .add(&single(&ThetaMatrix::unit(2, 0, 1), &o, &o))
            .unwrap();
        let p = symbolic_product(&x, &y).unwrap();
        assert_eq!(realize(&p, 4).unwrap(), truncated_product(&x, &y, 4));
        let f2 = single(&ThetaMatrix::zero(2).add_at(1, 0, 2).unwrap(), &o, &o);
        assert_eq!(
            realize(&symbolic_product(&f2, &y).unwrap(), 4).unwrap(),
            truncated_product(&f2, &y, 4)
        );
        assert!(matches!(symbolic_product(&y, &x), Err(Error::Domain(_))));
    }
}
