//! λ-ring and Adams operations on virtual characters.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::Character;
use crate::error::{Error, Result};
use crate::exactpoly::{rat, ExactPoly, LaurentPoly, Rational};
use crate::linalg::Reducer;

/// `ψ^k`: `t_i ↦ t_i^k`.
pub fn adams(k: u32, chi: &Character) -> Character {
    let n = chi.poly().nvars();
    let k = k as i32;
    chi.with_poly(
        chi.poly()
            .map_monomials(n, |e| (e.iter().map(|x| x * k).collect(), Rational::one())),
    )
}

/// `binom(m, k)` for rational `m`.
fn binomial(m: &Rational, k: usize) -> Rational {
    (0..k).fold(Rational::one(), |acc, j| {
        acc * (m - rat(j as i64)) / rat(j as i64 + 1)
    })
}

/// `λ^0(χ), …, λ^d(χ)` as the coefficients of `λ_q(χ) = Π_μ (1 + t^μ q)^{m_μ}`,
/// truncated after `q^d`. Negative multiplicities expand as power series,
/// which is `λ_q(χ_+)·λ_q(χ_-)^{-1}`.
pub fn lambda_series(d: usize, chi: &Character) -> Vec<Character> {
    let n = chi.poly().nvars();
    let mut series = vec![LaurentPoly::zero(n); d + 1];
    series[0] = LaurentPoly::one(n);
    for (mu, m) in chi.poly().terms() {
        // coefficients of (1 + t^μ q)^m
        let factor: Vec<LaurentPoly> = (0..=d)
            .map(|k| {
                let exps = mu.iter().map(|x| x * k as i32).collect();
                LaurentPoly::monomial(exps, binomial(m, k)).with_nvars(n)
            })
            .collect();
        let mut next = vec![LaurentPoly::zero(n); d + 1];
        for (i, a) in series.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in factor.iter().enumerate().take(d + 1 - i) {
                if !b.is_zero() {
                    next[i + j] = &next[i + j] + &(a * b);
                }
            }
        }
        series = next;
    }
    series.into_iter().map(|p| chi.with_poly(p)).collect()
}

/// `λ^d(χ)`.
pub fn lambda_op(d: usize, chi: &Character) -> Character {
    lambda_series(d, chi).pop().expect("series has d+1 terms")
}

/// `(S^2 χ, Λ^2 χ) = ((χ^2 + ψ^2 χ)/2, (χ^2 - ψ^2 χ)/2)`.
pub fn sym2_alt2(chi: &Character) -> (Character, Character) {
    let sq = chi.poly() * chi.poly();
    let psi = adams(2, chi).into_poly();
    let half = Rational::new(1.into(), 2.into());
    (
        chi.with_poly((&sq + &psi).scale(&half)),
        chi.with_poly((&sq - &psi).scale(&half)),
    )
}

/// Exponent vectors `a` with `Σ j·a_j ≤ max_weight`, `a_j` attached to the
/// `j`-th generator.
fn weighted_monomials(ngens: usize, max_weight: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for j in 1..=ngens as u32 {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u32>| {
                let used: u32 = prefix
                    .iter()
                    .enumerate()
                    .map(|(i, a)| (i as u32 + 1) * a)
                    .sum();
                (0..=(max_weight - used) / j).map(move |a| {
                    let mut v = prefix.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out.sort_by_key(|a| {
        let w: u32 = a.iter().enumerate().map(|(i, x)| (i as u32 + 1) * x).sum();
        (w, std::cmp::Reverse(a.clone()))
    });
    out
}

/// Expresses each target as a polynomial in `y_j = λ^j(χ)`, `1 ≤ j ≤ ngens`,
/// using monomials of weighted degree at most `max_weight` (`deg y_j = j`).
/// The returned polynomials live in `ngens` variables.
pub fn lambda_generation_witness(
    chi: &Character,
    ngens: usize,
    targets: &[LaurentPoly],
    max_weight: u32,
) -> Result<Vec<ExactPoly>> {
    let n = chi.poly().nvars();
    let gens: Vec<LaurentPoly> = lambda_series(ngens, chi)
        .into_iter()
        .skip(1)
        .map(Character::into_poly)
        .collect();
    let monos = weighted_monomials(ngens, max_weight);
    let products: Vec<LaurentPoly> = monos
        .iter()
        .map(|a| {
            a.iter()
                .zip(&gens)
                .fold(LaurentPoly::one(n), |acc, (k, g)| &acc * &g.pow(*k))
        })
        .collect();
    let mut index: BTreeMap<Vec<i32>, usize> = BTreeMap::new();
    for p in products.iter().chain(targets) {
        for (e, _) in p.terms() {
            let next = index.len();
            index.entry(e.to_vec()).or_insert(next);
        }
    }
    let vector = |p: &LaurentPoly| {
        let mut v = vec![Rational::zero(); index.len()];
        for (e, c) in p.terms() {
            v[index[e]] = c.clone();
        }
        v
    };
    let mut reducer = Reducer::new(index.len());
    let mut accepted = Vec::new();
    for (a, p) in monos.iter().zip(&products) {
        if reducer.insert(&vector(p)).is_some() {
            accepted.push(a.clone());
        }
    }
    targets
        .iter()
        .map(|t| {
            let coeffs = reducer
                .express(&vector(t))
                .ok_or_else(|| Error::NotInSpan(t.to_string()))?;
            Ok(ExactPoly::from_terms(
                ngens,
                accepted.iter().cloned().zip(coeffs),
            ))
        })
        .collect()
}

/// Substitutes `y_j = λ^j(χ)` into a witness polynomial.
pub fn evaluate_in_lambdas(chi: &Character, witness: &ExactPoly) -> Result<LaurentPoly> {
    let gens: Vec<LaurentPoly> = lambda_series(witness.nvars(), chi)
        .into_iter()
        .skip(1)
        .map(Character::into_poly)
        .collect();
    witness.substitute(&gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::parse_poly;
    use crate::repring::{character, weight_system_fundamental};
    use crate::rootdata::{build_root_system, Family, ParabolicSubset, RootSystem};
    use proptest::prelude::*;

    fn lp(s: &str, n: usize) -> LaurentPoly {
        parse_poly(s, 't', Some(n)).unwrap()
    }

    fn borel_char(rs: &RootSystem, p: LaurentPoly) -> Character {
        Character::new(rs, &ParabolicSubset::borel(rs.rank()), p).unwrap()
    }

    #[test]
    fn lambda_of_squared_torus_character() {
        let c1 = RootSystem::extended(Family::C, 1).unwrap();
        let chi = Character::of_group(&c1, lp("t1^2 + t1^-2", 1)).unwrap();
        let s = lambda_series(3, &chi);
        assert_eq!(s[0].poly(), &lp("1", 1));
        assert_eq!(s[1].poly(), chi.poly());
        assert_eq!(s[2].poly(), &lp("1", 1));
        assert!(s[3].poly().is_zero());
    }

    #[test]
    fn lambda_vanishes_above_dimension() {
        let c2 = build_root_system(Family::C, 2).unwrap();
        let chi = character(&weight_system_fundamental(&c2, &[1, 0]).unwrap());
        let s = lambda_series(6, &chi);
        assert!(s[5].poly().is_zero() && s[6].poly().is_zero());
        // λ^2 = e_2 of {t1, t2, t2^-1, t1^-1}
        assert_eq!(
            s[2].poly(),
            &lp("t1*t2 + t1*t2^-1 + t1^-1*t2 + t1^-1*t2^-1 + 2", 2)
        );
        assert_eq!(s[4].poly(), &lp("1", 2));
    }

    #[test]
    fn sym_and_alt_of_defining_reps() {
        let c2 = build_root_system(Family::C, 2).unwrap();
        let chi = character(&weight_system_fundamental(&c2, &[1, 0]).unwrap());
        let (s2, a2) = sym2_alt2(&chi);
        assert_eq!(
            s2.try_sub(&a2).unwrap().into_poly(),
            lp("t1^2 + t1^-2 + t2^2 + t2^-2", 2)
        );
        assert_eq!(a2, lambda_op(2, &chi));

        let b2 = build_root_system(Family::B, 2).unwrap();
        let chi = character(&weight_system_fundamental(&b2, &[1, 0]).unwrap());
        let (s2, a2) = sym2_alt2(&chi);
        assert_eq!(
            s2.try_sub(&a2).unwrap().into_poly(),
            lp("t1^2 + t1^-2 + t2^2 + t2^-2 + 1", 2)
        );

        let triv = Character::one(&b2, &ParabolicSubset::full(2));
        let (s2, a2) = sym2_alt2(&triv);
        assert_eq!(s2, triv);
        assert!(a2.poly().is_zero());
    }

    #[test]
    fn adams_examples() {
        let c1 = RootSystem::extended(Family::C, 1).unwrap();
        let chi = Character::of_group(&c1, lp("t1 + t1^-1", 1)).unwrap();
        assert_eq!(adams(2, &chi).poly(), &lp("t1^2 + t1^-2", 1));
        let one = Character::one(&c1, &ParabolicSubset::full(1));
        assert_eq!(adams(5, &one), one);
    }

    #[test]
    fn generation_witness_rank_two() {
        for f in [Family::B, Family::C] {
            let rs = build_root_system(f, 2).unwrap();
            let chi = Character::of_group(&rs, lp("t1^2 + t1^-2 + t2^2 + t2^-2", 2)).unwrap();
            let u1 = lp("t1^2 + t1^-2", 2);
            let u2 = lp("t2^2 + t2^-2", 2);
            let e1 = &u1 + &u2;
            let e2 = &u1 * &u2;
            let w = lambda_generation_witness(&chi, 2, &[e1.clone(), e2.clone()], 2).unwrap();
            assert_eq!(w[0], parse_poly("x1", 'x', Some(2)).unwrap());
            assert_eq!(w[1], parse_poly("x2 - 2", 'x', Some(2)).unwrap());
            assert_eq!(evaluate_in_lambdas(&chi, &w[1]).unwrap(), e2);
        }
    }

    fn newton_check(chi: &Character, d: usize) {
        // d·λ^d = Σ_{k=1}^{d} (-1)^{k-1} ψ^k(χ)·λ^{d-k}
        let s = lambda_series(d, chi);
        let mut rhs = LaurentPoly::zero(chi.poly().nvars());
        for k in 1..=d {
            let term = adams(k as u32, chi).poly() * s[d - k].poly();
            let sign = if k % 2 == 1 { rat(1) } else { rat(-1) };
            rhs = &rhs + &term.scale(&sign);
        }
        assert_eq!(s[d].poly().scale(&rat(d as i64)), rhs);
    }

    fn arb_char() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((prop::collection::vec(-2i32..=2, 2), -3i64..=3), 0..4)
            .prop_map(|t| LaurentPoly::from_terms(2, t.into_iter().map(|(e, c)| (e, rat(c)))))
    }

    fn arb_effective() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((prop::collection::vec(-2i32..=2, 2), 1i64..=2), 0..4)
            .prop_map(|t| LaurentPoly::from_terms(2, t.into_iter().map(|(e, c)| (e, rat(c)))))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn newton_identities(p in arb_char()) {
            let rs = build_root_system(Family::C, 2).unwrap();
            newton_check(&borel_char(&rs, p), 4);
        }

        #[test]
        fn lambda_of_sum_is_product(p in arb_effective(), q in arb_effective()) {
            let rs = build_root_system(Family::C, 2).unwrap();
            let (a, b) = (borel_char(&rs, p), borel_char(&rs, q));
            let sum = a.try_add(&b).unwrap();
            let (la, lb, ls) = (lambda_series(4, &a), lambda_series(4, &b), lambda_series(4, &sum));
            for d in 0..=4 {
                let mut conv = LaurentPoly::zero(2);
                for i in 0..=d {
                    conv = &conv + &(la[i].poly() * lb[d - i].poly());
                }
                prop_assert_eq!(ls[d].poly(), &conv);
            }
        }

        #[test]
        fn adams_is_multiplicative(p in arb_char(), q in arb_char(), k in 1u32..4) {
            let rs = build_root_system(Family::C, 2).unwrap();
            let (a, b) = (borel_char(&rs, p), borel_char(&rs, q));
            let lhs = adams(k, &a.try_mul(&b).unwrap());
            let rhs = adams(k, &a).try_mul(&adams(k, &b)).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(adams(1, &a), a);
        }
    }
}
