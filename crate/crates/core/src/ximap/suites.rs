//! Verification suites. Each returns a report with one claim per checked
//! identity; errors are reserved for inputs outside a suite's range.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::report::{Claim, Side, VerificationReport};
use super::{
    classical_xi_gl, constant, divisor, eval_in_divisors, levi_generators, xi, xi_poly,
    Proposition, XiContext,
};
use crate::error::{Error, Result};
use crate::exactpoly::{elementary_symmetric, rat, ratio, ExactPoly, LaurentPoly, Rational};
use crate::linalg::Reducer;
use crate::repring::{
    adams, cayley_transform, character, evaluate_in_lambdas, lambda_generation_witness,
    lambda_series, poly_membership, springer_torus_general, springer_torus_sl, sym2_alt2,
    tensor_decompose, torus_point, weight_system, weight_system_fundamental, Character,
};
use crate::rootdata::{
    build_root_system, minimal_coset_reps, Family, ParabolicSubset, RootSystem, WeylElement,
};
use crate::schubert::{
    borel_expand, cup_product, cup_product_chevalley, divided_difference, divided_difference_word,
    restrict_to_parabolic, validate_orientation, SchubertCombination,
};

fn out_of_range(what: impl Into<String>) -> Error {
    Error::OutOfStatedRange(what.into())
}

/// `t_i - t_i^{-1}` (0-based `i`).
fn cayley(n: usize, i: usize) -> LaurentPoly {
    LaurentPoly::cayley_coordinate(n, i)
}

fn cayley_sum(n: usize, range: std::ops::Range<usize>) -> LaurentPoly {
    range.fold(LaurentPoly::zero(n), |acc, i| &acc + &cayley(n, i))
}

/// Runs `f`, turning an error into a failed claim.
fn claim_or_fail(
    claim: &str,
    rs: &RootSystem,
    p: &ParabolicSubset,
    f: impl FnOnce() -> Result<(Side, Side)>,
) -> Claim {
    match f() {
        Ok((lhs, rhs)) => Claim::compare(claim, rs, p, lhs, rhs),
        Err(e) => Claim::failed(claim, rs, p, e),
    }
}

/// A divisor polynomial evaluated on `G/B` and read on `G/P`.
fn divisors_on(rs: &RootSystem, p: &ParabolicSubset, f: &ExactPoly) -> Result<SchubertCombination> {
    restrict_to_parabolic(&eval_in_divisors(rs, f)?, p)
}

fn class(rs: &RootSystem, p: &ParabolicSubset, word: &[usize]) -> Result<SchubertCombination> {
    SchubertCombination::from_word(rs, p, word)
}

fn partition_string(p: &[i64]) -> String {
    let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Partitions with exactly `r` parts (zeros allowed) and `λ_1 ≤ max`.
pub(crate) fn partitions_in_box(r: usize, max: i64) -> Vec<Vec<i64>> {
    fn go(r: usize, cap: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == r {
            out.push(prefix.clone());
            return;
        }
        for x in (0..=cap).rev() {
            prefix.push(x);
            go(r, x, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(r, max, &mut Vec::new(), &mut out);
    out.sort_by_key(|p| (p.iter().sum::<i64>(), std::cmp::Reverse(p.clone())));
    out
}

/// Character of the `GL_r` irreducible with highest weight `λ`, in `r`
/// variables.
fn gl_character(lambda: &[i64]) -> Result<LaurentPoly> {
    let r = lambda.len();
    if r == 1 {
        return Ok(LaurentPoly::monomial(
            vec![lambda[0] as i32],
            Rational::one(),
        ));
    }
    let rs = build_root_system(Family::A, r - 1)?;
    let w: Vec<Rational> = lambda.iter().map(|x| rat(*x)).collect();
    Ok(weight_system(&rs, &w)?.character_poly())
}

/// Littlewood-Richardson multiplicities for `GL_r` from the tensor
/// product decomposition.
fn gl_tensor(mu: &[i64], nu: &[i64]) -> Result<BTreeMap<Vec<i64>, u64>> {
    let r = mu.len();
    if r == 1 {
        return Ok(BTreeMap::from([(vec![mu[0] + nu[0]], 1)]));
    }
    let rs = build_root_system(Family::A, r - 1)?;
    let q = |v: &[i64]| v.iter().map(|x| rat(*x)).collect::<Vec<_>>();
    tensor_decompose(&rs, &q(mu), &q(nu))
}

fn grassmannian(r: usize, n: usize) -> Result<(RootSystem, ParabolicSubset)> {
    if r == 0 || r >= n {
        return Err(out_of_range(format!("need 1 ≤ r ≤ n-1, got r={r}, n={n}")));
    }
    Ok((
        build_root_system(Family::A, n - 1)?,
        ParabolicSubset::maximal(n - 1, r)?,
    ))
}

/// Products in `H*(Gr(r, n))` against the Littlewood-Richardson rule:
/// `ε_{A(μ)}·ε_{A(ν)} = Σ_λ c^λ_{μν} ε_{A(λ)}`, the terms with
/// `λ_1 > n - r` dropping out.
pub fn verify_lr_products(r: usize, n: usize) -> Result<VerificationReport> {
    let (rs, p) = grassmannian(r, n)?;
    let mut report = VerificationReport::new();
    let box_parts = partitions_in_box(r, (n - r) as i64);
    for (a, mu) in box_parts.iter().enumerate() {
        for nu in &box_parts[a..] {
            let name = format!("product {}·{}", partition_string(mu), partition_string(nu));
            report.push(claim_or_fail(&name, &rs, &p, || {
                let lhs = cup_product(&classical_xi_gl(mu, r, n)?, &classical_xi_gl(nu, r, n)?)?;
                let mut rhs = SchubertCombination::zero(&rs, &p)?;
                for (lambda, c) in gl_tensor(mu, nu)? {
                    rhs = &rhs + &classical_xi_gl(&lambda, r, n)?.scale(&rat(c as i64));
                }
                Ok((Side::Schubert(lhs), Side::Schubert(rhs)))
            }));
        }
    }
    Ok(report)
}

/// `ξ` on `GL_n`, `P = P_r`, against the classical map: fundamental
/// characters go to `ε_{s_{r-i+1}⋯s_r}`, every Schur character in the box
/// goes to `ε_{v_{A(λ)}}` (or 0), and products follow the
/// Littlewood-Richardson rule.
pub fn verify_theorem3(r: usize, n: usize) -> Result<VerificationReport> {
    let (rs, p) = grassmannian(r, n)?;
    let ctx = XiContext::new(&rs, &p)?;
    let mut report = VerificationReport::new();
    let first_r: Vec<usize> = (0..r).collect();
    for i in 1..=r {
        let mut omega = vec![0i64; r];
        omega[..i].iter_mut().for_each(|x| *x = 1);
        report.push(claim_or_fail(&format!("fundamental e{i}"), &rs, &p, || {
            let chi = elementary_symmetric(i, &first_r, n)?.to_laurent();
            Ok((
                Side::Schubert(xi_poly(&ctx, &chi)?),
                Side::Schubert(classical_xi_gl(&omega, r, n)?),
            ))
        }));
        report.push(claim_or_fail(&format!("classical e{i}"), &rs, &p, || {
            let word: Vec<usize> = (r - i + 1..=r).collect();
            Ok((
                Side::Schubert(classical_xi_gl(&omega, r, n)?),
                Side::Schubert(class(&rs, &p, &word)?),
            ))
        }));
    }
    for lambda in partitions_in_box(r, (n - r + 1) as i64) {
        let name = format!("schur {}", partition_string(&lambda));
        report.push(claim_or_fail(&name, &rs, &p, || {
            let chi = gl_character(&lambda)?.with_nvars(n);
            Ok((
                Side::Schubert(xi_poly(&ctx, &chi)?),
                Side::Schubert(classical_xi_gl(&lambda, r, n)?),
            ))
        }));
    }
    report.extend(verify_lr_products(r, n)?);
    Ok(report)
}

fn check_proposition_range(prop: Proposition, n: usize, r: usize) -> Result<()> {
    let ok = match prop {
        Proposition::Symplectic | Proposition::OddOrthogonal => n >= 2 && (1..=n).contains(&r),
        Proposition::EvenOrthogonal => n >= 4 && (1..=n - 2).contains(&r),
        Proposition::EvenOrthogonalTop => n >= 4 && (r == n || r + 1 == n),
        Proposition::Borel(Family::A) => false,
        Proposition::Borel(Family::D) => n >= 4,
        Proposition::Borel(_) => n >= 2,
    };
    if ok {
        Ok(())
    } else {
        Err(out_of_range(format!("{} with n={n}, r={r}", prop.name())))
    }
}

/// Checks the explicit images listed for `prop` at `(n, r)`. For
/// [`Proposition::Borel`], `r` is ignored and `P = B`.
pub fn verify_proposition(prop: Proposition, n: usize, r: usize) -> Result<VerificationReport> {
    check_proposition_range(prop, n, r)?;
    match prop {
        Proposition::Symplectic | Proposition::OddOrthogonal | Proposition::EvenOrthogonal => {
            maximal_parabolic(prop, n, r)
        }
        Proposition::EvenOrthogonalTop => spinor_parabolic(n, r),
        Proposition::Borel(f) => borel_images(f, n),
    }
}

/// Degree-1 image, sum-of-squares image and its character identity, and for
/// type D the product image.
fn maximal_parabolic(prop: Proposition, n: usize, r: usize) -> Result<VerificationReport> {
    let family = prop.family();
    let rs = build_root_system(family, n)?;
    let p = ParabolicSubset::maximal(n, r)?;
    let ctx = XiContext::new(&rs, &p)?;
    let y = |j: usize| divisor(n, j);
    let mut report = VerificationReport::new();

    let lead = if family == Family::B && r == n { 4 } else { 2 };
    report.push(claim_or_fail("degree 1", &rs, &p, || {
        Ok((
            Side::Schubert(xi_poly(&ctx, &cayley_sum(n, 0..r))?),
            Side::Schubert(class(&rs, &p, &[r])?.scale(&rat(lead))),
        ))
    }));

    let squares = (r..n).fold(LaurentPoly::zero(n), |acc, i| &acc + &cayley(n, i).pow(2));
    report.push(claim_or_fail("sum of squares as S2 - L2", &rs, &p, || {
        let mut v = (r..n).fold(LaurentPoly::zero(n), |acc, i| {
            &acc + &(&LaurentPoly::var(n, i)
                + &LaurentPoly::monomial(unit_exp(n, i, -1), Rational::one()))
        });
        let mut dim = 2 * (n - r) as i64;
        if family == Family::B {
            v = &v + &LaurentPoly::one(n);
            dim += 1;
        }
        let (s2, a2) = sym2_alt2(&ctx.character(v)?);
        let rhs = &(s2.poly() - a2.poly()) - &LaurentPoly::constant(n, rat(dim));
        Ok((Side::Character(squares.clone()), Side::Character(rhs)))
    }));

    if r == n {
        report.push(
            claim_or_fail("degree 2", &rs, &p, || {
                Ok((
                    Side::Schubert(xi_poly(&ctx, &squares)?),
                    Side::Schubert(SchubertCombination::zero(&rs, &p)?),
                ))
            })
            .with_note(
                "the sum of squares is empty when r = n, so its image is 0; the displayed \
                 right-hand side only applies for r < n",
            ),
        );
    } else {
        let sq = |j: usize| y(j).pow(2);
        let mut f = sq(r);
        for j in r + 1..n {
            f = &f + &sq(j).scale(&rat(2));
        }
        match family {
            Family::C => {
                f = &f + &sq(n);
                for j in r..n {
                    f = &f - &(&y(j) * &y(j + 1)).scale(&rat(2));
                }
            }
            Family::B => {
                f = &f + &sq(n).scale(&rat(4));
                for j in r..n.saturating_sub(1) {
                    f = &f - &(&y(j) * &y(j + 1)).scale(&rat(2));
                }
                f = &f - &(&y(n - 1) * &y(n)).scale(&rat(4));
            }
            _ => {
                f = &f + &sq(n).scale(&rat(2));
                for j in r..n - 1 {
                    f = &f - &(&y(j) * &y(j + 1)).scale(&rat(2));
                }
                f = &f - &(&y(n - 2) * &y(n)).scale(&rat(2));
            }
        }
        let f = f.scale(&rat(4));
        report.push(claim_or_fail("degree 2", &rs, &p, || {
            Ok((
                Side::Schubert(xi_poly(&ctx, &squares)?),
                Side::Schubert(divisors_on(&rs, &p, &f)?),
            ))
        }));
    }

    if family == Family::D {
        let prod = (r..n).fold(LaurentPoly::one(n), |acc, i| &acc * &cayley(n, i));
        let mut f = constant(n, 1i64 << (n - r));
        for i in r + 1..=n - 2 {
            f = &f * &(&y(i) - &y(i - 1));
        }
        f = &f * &(&(&y(n) + &y(n - 1)) - &y(n - 2));
        f = &f * &(&y(n) - &y(n - 1));
        report.push(claim_or_fail("product", &rs, &p, || {
            Ok((
                Side::Schubert(xi_poly(&ctx, &prod)?),
                Side::Schubert(divisors_on(&rs, &p, &f)?),
            ))
        }));
    }
    Ok(report)
}

fn unit_exp(n: usize, i: usize, k: i32) -> Vec<i32> {
    let mut e = vec![0; n];
    e[i] = k;
    e
}

/// Swaps the last two nodes of `D_n`: relabels the words of a Schubert
/// combination.
fn swap_last_nodes(c: &SchubertCombination, p: &ParabolicSubset) -> Result<SchubertCombination> {
    let rs = c.root_system();
    let n = rs.rank();
    let mut out = SchubertCombination::zero(rs, p)?;
    for (w, k) in c.terms() {
        let word: Vec<usize> = w
            .reduced_word()
            .into_iter()
            .map(|i| {
                if i == n {
                    n - 1
                } else if i == n - 1 {
                    n
                } else {
                    i
                }
            })
            .collect();
        out.add_term(&WeylElement::from_word(rs, &word)?, k)?;
    }
    Ok(out)
}

/// `D_n` with `r = n`, and `r = n - 1` through the diagram automorphism.
fn spinor_parabolic(n: usize, r: usize) -> Result<VerificationReport> {
    let rs = build_root_system(Family::D, n)?;
    let pn = ParabolicSubset::maximal(n, n)?;
    let chi = cayley_sum(n, 0..n);
    let expected = class(&rs, &pn, &[n])?.scale(&rat(4));
    let mut report = VerificationReport::new();
    if r == n {
        let ctx = XiContext::new(&rs, &pn)?;
        report.push(claim_or_fail("degree 1", &rs, &pn, || {
            Ok((
                Side::Schubert(xi_poly(&ctx, &chi)?),
                Side::Schubert(expected.clone()),
            ))
        }));
    } else {
        // the automorphism acts on the torus by t_n ↦ t_n^{-1}
        let p = ParabolicSubset::maximal(n, n - 1)?;
        let ctx = XiContext::new(&rs, &p)?;
        let twisted = chi.map_monomials(n, |e| {
            let mut e = e.to_vec();
            e[n - 1] = -e[n - 1];
            (e, Rational::one())
        });
        report.push(
            claim_or_fail("degree 1", &rs, &p, || {
                Ok((
                    Side::Schubert(xi_poly(&ctx, &twisted)?),
                    Side::Schubert(swap_last_nodes(&expected, &p)?),
                ))
            })
            .with_note("r = n-1 obtained from r = n by swapping the last two nodes"),
        );
    }
    Ok(report)
}

/// `ξ^B(t_i - t_i^{-1})` for every `i`.
fn borel_images(family: Family, n: usize) -> Result<VerificationReport> {
    let rs = build_root_system(family, n)?;
    let b = ParabolicSubset::borel(n);
    let ctx = XiContext::new(&rs, &b)?;
    let y = |j: usize| divisor(n, j);
    let mut report = VerificationReport::new();
    for i in 1..=n {
        let f = match (family, i) {
            (Family::B, i) if i == n => &y(n).scale(&rat(2)) - &y(n - 1),
            (Family::D, i) if i == n - 1 => &(&y(n - 1) + &y(n)) - &y(n - 2),
            (Family::D, i) if i == n => &y(n) - &y(n - 1),
            _ => &y(i) - &y(i - 1),
        }
        .scale(&rat(2));
        report.push(claim_or_fail(&format!("t{i} - t{i}^-1"), &rs, &b, || {
            Ok((
                Side::Schubert(xi_poly(&ctx, &cayley(n, i - 1))?),
                Side::Schubert(eval_in_divisors(&rs, &f)?),
            ))
        }));
    }
    Ok(report)
}

/// Test characters for the diagram check: 1, the generators of the bigger
/// Levi's λ-polynomial ring and their pairwise products.
pub fn diagram_test_characters(rs: &RootSystem, q: &ParabolicSubset) -> Result<Vec<LaurentPoly>> {
    let gens: Vec<LaurentPoly> = levi_generators(rs, q)?
        .into_iter()
        .map(|g| g.character.into_poly())
        .collect();
    let mut out = vec![LaurentPoly::one(rs.dim())];
    out.extend(gens.iter().cloned());
    for (a, g) in gens.iter().enumerate() {
        for h in &gens[a..] {
            out.push(g * h);
        }
    }
    Ok(out)
}

/// `π^*∘ξ^Q = ξ^P∘γ` on each test character.
pub fn verify_commutative_diagram(
    ctx_p: &XiContext,
    ctx_q: &XiContext,
    characters: &[LaurentPoly],
) -> Result<VerificationReport> {
    let (p, q) = (ctx_p.parabolic(), ctx_q.parabolic());
    if ctx_p.root_system() != ctx_q.root_system() {
        return Err(Error::TagMismatch);
    }
    if !p.is_subset_of(q) {
        return Err(Error::NotNested {
            inner: p.to_string(),
            outer: q.to_string(),
        });
    }
    let rs = ctx_p.root_system();
    let mut report = VerificationReport::new();
    for chi in characters {
        report.push(claim_or_fail(&format!("diagram on {chi}"), rs, p, || {
            let big = ctx_q.character(chi.clone())?;
            let lhs = xi(ctx_q, &big)?.pullback(p)?;
            let rhs = xi(ctx_p, &big.restrict(p)?)?;
            Ok((Side::Schubert(lhs), Side::Schubert(rhs)))
        }));
    }
    Ok(report)
}

fn so_even(n: usize) -> Result<RootSystem> {
    if n >= 4 {
        build_root_system(Family::D, n)
    } else {
        RootSystem::extended(Family::D, n)
    }
}

/// `Π (t_i - t_i^{-1}) = [V(2ω_n)] - [V(2ω_{n-1})]` for `SO_{2n}`.
pub fn verify_lemma_so(n: usize) -> Result<VerificationReport> {
    if n < 2 {
        return Err(out_of_range(format!("need n ≥ 2, got {n}")));
    }
    let rs = so_even(n)?;
    let full = ParabolicSubset::full(n);
    let mut report = VerificationReport::new();
    report.push(claim_or_fail("product of t_i - t_i^-1", &rs, &full, || {
        let mut a = vec![0i64; n];
        a[n - 1] = 2;
        let mut b = vec![0i64; n];
        b[n - 2] = 2;
        let va = character(&weight_system_fundamental(&rs, &a)?);
        let vb = character(&weight_system_fundamental(&rs, &b)?);
        let prod = (0..n).fold(LaurentPoly::one(n), |acc, i| &acc * &cayley(n, i));
        Ok((
            Side::Character(va.try_sub(&vb)?.into_poly()),
            Side::Character(prod),
        ))
    }));
    Ok(report)
}

/// Every nonzero dominant weight with fundamental coefficients at most
/// `max_coeff` fails polynomial membership. Weights outside the character
/// lattice of the torus (spin weights) are not representations of the
/// matrix group; they are checked to lie outside it and otherwise skipped.
pub fn verify_negative_irreps(
    family: Family,
    n: usize,
    max_coeff: i64,
) -> Result<VerificationReport> {
    let rs = build_root_system(family, n)?;
    let full = ParabolicSubset::full(n);
    let mut report = VerificationReport::new();
    let mut coeffs = vec![0i64; n];
    let mut spin = Vec::new();
    loop {
        // next coefficient vector in {0..max}^n, little-endian
        let mut k = 0;
        while k < n && coeffs[k] == max_coeff {
            coeffs[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
        coeffs[k] += 1;
        let lambda = rs.weight_from_fundamental(&coeffs)?;
        if lambda.iter().any(|x| !x.is_integer()) {
            spin.push(coeffs.clone());
            continue;
        }
        let name = format!("V{coeffs:?}");
        report.push(claim_or_fail(&name, &rs, &full, || {
            let chi = character(&weight_system(&rs, &lambda)?);
            let m = poly_membership(&chi);
            let verdict =
                |member: bool| Side::Text(if member { "member" } else { "not member" }.into());
            Ok((verdict(m.member), verdict(false)))
        }));
    }
    if !spin.is_empty() {
        let claim = Claim::compare(
            "spin weights",
            &rs,
            &full,
            Side::Text(format!("{} weights off the torus lattice", spin.len())),
            Side::Text(format!("{} weights off the torus lattice", spin.len())),
        )
        .with_note(format!("skipped {spin:?}"));
        report.push(claim);
    }
    Ok(report)
}

/// `SL_2`: the torus restriction for `V(ω_1)` and `V(2ω_1)` against a
/// direct trace-form computation.
pub fn verify_springer_examples() -> Result<VerificationReport> {
    let a1 = build_root_system(Family::A, 1)?;
    let full = ParabolicSubset::full(1);
    let z = |k: i32| LaurentPoly::monomial(vec![k], Rational::one());
    // weights k, k-2, …, -k paired with the coroot diag(1,-1)
    let direct = |k: i32| -> LaurentPoly {
        let weights: Vec<i32> = (0..=k).map(|j| k - 2 * j).collect();
        let denom: i64 = weights.iter().map(|m| (m * m) as i64).sum();
        weights.iter().fold(LaurentPoly::zero(1), |acc, m| {
            &acc + &z(*m).scale(&ratio(*m as i64, denom))
        })
    };
    let mut report = VerificationReport::new();
    for k in [1, 2] {
        let name = format!("theta for {k}ω1");
        let mut claim = claim_or_fail(&name, &a1, &full, || {
            let lambda = a1.weight_from_fundamental(&[k as i64])?;
            let h = springer_torus_sl(&a1, &lambda)?;
            Ok((Side::Character(h[0].clone()), Side::Character(direct(k))))
        });
        if k == 2 {
            claim = claim.with_note(
                "trace-form value (z^2 - z^-2)/4; the normalization (z^2 - z^-2)/2 is twice this and gives the same invariant ring",
            );
        }
        report.push(claim);
    }
    report.push(claim_or_fail("invariant ring for 2ω1", &a1, &full, || {
        let lambda = a1.weight_from_fundamental(&[2])?;
        let h = springer_torus_sl(&a1, &lambda)?[0].clone();
        let gen = (&z(2) - &z(-2)).pow(2);
        Ok((
            Side::Character(h.pow(2).scale(&rat(16))),
            Side::Character(gen),
        ))
    }));
    Ok(report)
}

/// Torus restriction of the Springer morphism of the defining
/// representation against the diagonal of the Cayley transform.
pub fn verify_cayley_agreement(family: Family, n: usize) -> Result<VerificationReport> {
    let rs = build_root_system(family, n)?;
    let full = ParabolicSubset::full(n);
    let mut report = VerificationReport::new();
    match (|| -> Result<_> {
        let h = springer_torus_general(&rs, rs.fundamental_weight(1))?;
        let x = cayley_transform(&torus_point(family, n)?, family)?;
        Ok((h, x))
    })() {
        Ok((h, x)) => {
            for i in 0..n {
                report.push(Claim::compare(
                    format!("coordinate {}", i + 1),
                    &rs,
                    &full,
                    Side::Character(h[i].clone()),
                    Side::Character(x[i][i].clone()),
                ));
            }
        }
        Err(e) => report.push(Claim::failed("cayley agreement", &rs, &full, e)),
    }
    Ok(report)
}

/// `e_k(t_1^2 + t_1^{-2}, …)` as explicit polynomials in `λ^j(χ)` for
/// `χ = Σ (t_i^2 + t_i^{-2})` (types B and C).
pub fn verify_lambda_generation(family: Family, n: usize) -> Result<VerificationReport> {
    if !matches!(family, Family::B | Family::C) {
        return Err(Error::UnsupportedFamily(family));
    }
    let rs = build_root_system(family, n)?;
    let full = ParabolicSubset::full(n);
    let u: Vec<LaurentPoly> = (0..n)
        .map(|i| {
            &LaurentPoly::monomial(unit_exp(n, i, 2), Rational::one())
                + &LaurentPoly::monomial(unit_exp(n, i, -2), Rational::one())
        })
        .collect();
    let chi_poly = u.iter().fold(LaurentPoly::zero(n), |acc, x| &acc + x);
    let targets: Vec<LaurentPoly> = (1..=n)
        .map(|k| -> Result<LaurentPoly> {
            elementary_symmetric(k, &(0..n).collect::<Vec<_>>(), n)?.substitute(&u)
        })
        .collect::<Result<_>>()?;
    let mut report = VerificationReport::new();
    let chi = Character::of_group(&rs, chi_poly)?;
    report.push(claim_or_fail("generator is polynomial", &rs, &full, || {
        let m = poly_membership(&chi);
        let verdict =
            |member: bool| Side::Text(if member { "member" } else { "not member" }.into());
        Ok((verdict(m.member), verdict(true)))
    }));
    match lambda_generation_witness(&chi, n, &targets, n as u32) {
        Ok(witnesses) => {
            for (k, (w, t)) in witnesses.iter().zip(&targets).enumerate() {
                let name = format!("e{}", k + 1);
                let claim = claim_or_fail(&name, &rs, &full, || {
                    Ok((
                        Side::Character(evaluate_in_lambdas(&chi, w)?),
                        Side::Character(t.clone()),
                    ))
                });
                report.push(claim.with_note(format!("e{} = {}", k + 1, lambda_witness_string(w))));
            }
        }
        Err(e) => report.push(Claim::failed("lambda witness", &rs, &full, e)),
    }
    Ok(report)
}

/// A witness polynomial written in `λ1, λ2, …`.
pub fn lambda_witness_string(w: &ExactPoly) -> String {
    let mut s = w.fmt_with('y');
    for j in (1..=w.nvars()).rev() {
        s = s.replace(&format!("y{j}"), &format!("λ{j}"));
    }
    s
}

/// `β(ω_i) = ε_{s_i}` for every `i`, after checking the divided-difference
/// orientation.
pub fn verify_borel_anchor(rs: &RootSystem) -> Result<VerificationReport> {
    let n = rs.rank();
    let b = ParabolicSubset::borel(n);
    let mut report = VerificationReport::new();
    report.push(claim_or_fail("orientation", rs, &b, || {
        validate_orientation(rs)?;
        Ok((Side::Text("ok".into()), Side::Text("ok".into())))
    }));
    for i in 1..=n {
        report.push(claim_or_fail(&format!("omega{i}"), rs, &b, || {
            let f = ExactPoly::linear(rs.fundamental_weight(i));
            Ok((
                Side::Schubert(borel_expand(&f, rs, &b)?),
                Side::Schubert(class(rs, &b, &[i])?),
            ))
        }));
    }
    Ok(report)
}

/// `ξ^P` is onto: products of the images of the Levi generators span
/// `H*(G/P)`.
pub fn verify_surjectivity(rs: &RootSystem, p: &ParabolicSubset) -> Result<VerificationReport> {
    let ctx = XiContext::new(rs, p)?;
    let reps = minimal_coset_reps(rs, p)?;
    let top = reps.iter().map(WeylElement::length).max().unwrap_or(0);
    let index: BTreeMap<WeylElement, usize> = reps
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, w)| (w, i))
        .collect();
    let vector = |c: &SchubertCombination| {
        let mut v = vec![Rational::zero(); reps.len()];
        for (w, k) in c.terms() {
            v[index[&w]] = k;
        }
        v
    };
    let mut gens = Vec::new();
    for g in levi_generators(rs, p)? {
        let img = xi(&ctx, &g.character)?;
        let deg = g.preimage.total_degree() as usize;
        if deg > 0 && deg <= top {
            gens.push((img, deg));
        }
    }
    let mut reducer = Reducer::new(reps.len());
    // products of generators with non-decreasing index
    let mut frontier = vec![(SchubertCombination::one(rs, p)?, 0usize, 0usize)];
    reducer.insert(&vector(&frontier[0].0));
    while let Some((c, deg, start)) = frontier.pop() {
        for (k, (g, d)) in gens.iter().enumerate().skip(start) {
            if deg + d > top {
                continue;
            }
            let next = cup_product(&c, g)?;
            if next.is_zero() {
                continue;
            }
            reducer.insert(&vector(&next));
            frontier.push((next, deg + d, k));
        }
    }
    let mut report = VerificationReport::new();
    report.push(Claim::compare(
        "span of generator products",
        rs,
        p,
        Side::Text(format!("rank {}", reducer.rank())),
        Side::Text(format!("rank {}", reps.len())),
    ));
    Ok(report)
}

/// Seed and case count for [`verify_properties`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PropertyConfig {
    pub seed: u64,
    pub cases: usize,
}

impl Default for PropertyConfig {
    fn default() -> Self {
        PropertyConfig {
            seed: 0x5eed,
            cases: 200,
        }
    }
}

fn random_root_system(rng: &mut ChaCha8Rng) -> Result<RootSystem> {
    let family = [Family::A, Family::B, Family::C, Family::D][rng.gen_range(0..4)];
    let rank = match family {
        Family::D => 4,
        Family::A => rng.gen_range(1..=3),
        _ => rng.gen_range(2..=3),
    };
    build_root_system(family, rank)
}

fn random_small_root_system(rng: &mut ChaCha8Rng) -> Result<RootSystem> {
    let family = [Family::A, Family::B, Family::C][rng.gen_range(0..3)];
    let rank = match family {
        Family::A => rng.gen_range(1..=3),
        _ => rng.gen_range(2..=3),
    };
    build_root_system(family, rank)
}

fn random_parabolic(rng: &mut ChaCha8Rng, n: usize) -> Result<ParabolicSubset> {
    let nodes: Vec<usize> = (1..=n).filter(|_| rng.gen_bool(0.4)).collect();
    ParabolicSubset::levi(n, &nodes)
}

fn random_poly(rng: &mut ChaCha8Rng, nvars: usize, max_deg: u32) -> ExactPoly {
    let terms = rng.gen_range(1..=4);
    ExactPoly::from_terms(
        nvars,
        (0..terms).map(|_| {
            let mut e = vec![0u32; nvars];
            for _ in 0..rng.gen_range(0..=max_deg) {
                e[rng.gen_range(0..nvars)] += 1;
            }
            (e, rat(rng.gen_range(-3..=3)))
        }),
    )
}

fn random_laurent(rng: &mut ChaCha8Rng, nvars: usize) -> LaurentPoly {
    let terms = rng.gen_range(1..=3);
    LaurentPoly::from_terms(
        nvars,
        (0..terms).map(|_| {
            let e: Vec<i32> = (0..nvars).map(|_| rng.gen_range(-2..=2)).collect();
            (e, rat(rng.gen_range(-2..=3)))
        }),
    )
}

fn random_class(
    rng: &mut ChaCha8Rng,
    rs: &RootSystem,
    p: &ParabolicSubset,
    max_len: usize,
) -> Result<SchubertCombination> {
    let reps: Vec<WeylElement> = minimal_coset_reps(rs, p)?
        .into_iter()
        .filter(|w| w.length() <= max_len)
        .collect();
    let mut c = SchubertCombination::zero(rs, p)?;
    for _ in 0..rng.gen_range(1..=2) {
        let w = &reps[rng.gen_range(0..reps.len())];
        c.add_term(w, rat(rng.gen_range(-2..=2)))?;
    }
    Ok(c)
}

/// A random λ-polynomial character of the Levi of `p`: a small
/// combination of products of generators.
fn random_xi_input(rng: &mut ChaCha8Rng, ctx: &XiContext) -> Result<LaurentPoly> {
    let rs = ctx.root_system();
    let gens = levi_generators(rs, ctx.parabolic())?;
    let mut out = LaurentPoly::constant(rs.dim(), rat(rng.gen_range(-1..=1)));
    for _ in 0..rng.gen_range(1..=2) {
        let mut m = LaurentPoly::constant(rs.dim(), rat(rng.gen_range(1..=2)));
        for _ in 0..rng.gen_range(1..=2) {
            let g = &gens[rng.gen_range(0..gens.len())];
            if g.preimage.total_degree() <= 2 {
                m = &m * g.character.poly();
            }
        }
        out = &out + &m;
    }
    Ok(out)
}

/// Tally of one property over all cases.
struct Tally {
    name: &'static str,
    passed: usize,
    total: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            passed: 0,
            total: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, outcome: Result<Option<String>>) {
        self.total += 1;
        match outcome {
            Ok(None) => self.passed += 1,
            Ok(Some(msg)) => {
                self.first_failure.get_or_insert(msg);
            }
            Err(e) => {
                self.first_failure.get_or_insert(e.to_string());
            }
        }
    }

    fn claim(self) -> Claim {
        let rs = build_root_system(Family::A, 1).expect("A1 exists");
        let mut c = Claim::compare(
            self.name,
            &rs,
            &ParabolicSubset::borel(1),
            Side::Text(format!("{}/{}", self.passed, self.total)),
            Side::Text(format!("{}/{}", self.total, self.total)),
        );
        c.group = "random".into();
        c.parabolic = "random".into();
        if let Some(f) = self.first_failure {
            c = c.with_note(format!("first failure: {f}"));
        }
        c
    }
}

fn mismatch<T: PartialEq + std::fmt::Display>(what: &str, a: &T, b: &T) -> Option<String> {
    (a != b).then(|| format!("{what}: {a} vs {b}"))
}

/// Seeded randomized checks: nil-Coxeter and braid relations, agreement of
/// the two product algorithms, the λ-ring axioms, multiplicativity of
/// Adams operations and of `ξ`.
pub fn verify_properties(config: PropertyConfig) -> Result<VerificationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut nil = Tally::new("nil-Coxeter and braid relations");
    let mut dual = Tally::new("product algorithms agree");
    let mut axioms = Tally::new("lambda-ring axioms");
    let mut psi = Tally::new("Adams multiplicativity");
    let mut mult = Tally::new("xi multiplicativity");

    for _ in 0..config.cases {
        nil.record((|| {
            let rs = random_root_system(&mut rng)?;
            let f = random_poly(&mut rng, rs.dim(), 4);
            let i = rng.gen_range(1..=rs.rank());
            let j = rng.gen_range(1..=rs.rank());
            let twice = divided_difference(&rs, i, &divided_difference(&rs, i, &f)?)?;
            if !twice.is_zero() {
                return Ok(Some(format!("{rs}: ∂{i}∂{i}({f}) = {twice}")));
            }
            if i == j {
                return Ok(None);
            }
            let m = rs.braid_order(i, j);
            let a: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { i } else { j }).collect();
            let b: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { j } else { i }).collect();
            let (x, y) = (
                divided_difference_word(&rs, &a, &f)?,
                divided_difference_word(&rs, &b, &f)?,
            );
            Ok(mismatch(&format!("{rs} braid {i},{j} on {f}"), &x, &y))
        })());

        dual.record((|| {
            let rs = random_root_system(&mut rng)?;
            let p = random_parabolic(&mut rng, rs.rank())?;
            let a = random_class(&mut rng, &rs, &p, 3)?;
            let b = random_class(&mut rng, &rs, &p, 3)?;
            let (x, y) = (cup_product(&a, &b)?, cup_product_chevalley(&a, &b)?);
            Ok(mismatch(&format!("{rs} {p} ({a})·({b})"), &x, &y))
        })());

        axioms.record((|| {
            let n = rng.gen_range(1..=3);
            let rs = RootSystem::extended(Family::C, n)?;
            let b = ParabolicSubset::borel(n);
            let x = Character::new(&rs, &b, random_laurent(&mut rng, n))?;
            let y = Character::new(&rs, &b, random_laurent(&mut rng, n))?;
            let d = 4;
            let lx = lambda_series(d, &x);
            let ly = lambda_series(d, &y);
            if lx[0].poly() != &LaurentPoly::one(n) {
                return Ok(Some(format!("λ^0({x}) = {}", lx[0])));
            }
            if lx[1] != x {
                return Ok(Some(format!("λ^1({x}) = {}", lx[1])));
            }
            let lsum = lambda_series(d, &x.try_add(&y)?);
            for k in 0..=d {
                let conv = (0..=k).fold(LaurentPoly::zero(n), |acc, a| {
                    &acc + &(lx[a].poly() * ly[k - a].poly())
                });
                if let Some(m) = mismatch(&format!("λ^{k}({x} + {y})"), lsum[k].poly(), &conv) {
                    return Ok(Some(m));
                }
            }
            let one = lambda_series(d, &Character::one(&rs, &b));
            let want: Vec<Rational> = (0..=d).map(|k| rat((k <= 1) as i64)).collect();
            for (k, c) in one.iter().enumerate() {
                if c.poly() != &LaurentPoly::constant(n, want[k].clone()) {
                    return Ok(Some(format!("λ^{k}(1) = {c}")));
                }
            }
            Ok(None)
        })());

        psi.record((|| {
            let n = rng.gen_range(1..=3);
            let rs = RootSystem::extended(Family::C, n)?;
            let b = ParabolicSubset::borel(n);
            let x = Character::new(&rs, &b, random_laurent(&mut rng, n))?;
            let y = Character::new(&rs, &b, random_laurent(&mut rng, n))?;
            let k = rng.gen_range(1..=4);
            let lhs = adams(k, &x.try_mul(&y)?);
            let rhs = adams(k, &x).try_mul(&adams(k, &y))?;
            Ok(mismatch(&format!("ψ^{k}(({x})({y}))"), &lhs, &rhs))
        })());

        mult.record((|| {
            let rs = random_small_root_system(&mut rng)?;
            let p = random_parabolic(&mut rng, rs.rank())?;
            let ctx = XiContext::new(&rs, &p)?;
            let a = random_xi_input(&mut rng, &ctx)?;
            let b = random_xi_input(&mut rng, &ctx)?;
            let lhs = xi_poly(&ctx, &(&a * &b))?;
            let rhs = cup_product(&xi_poly(&ctx, &a)?, &xi_poly(&ctx, &b)?)?;
            Ok(mismatch(&format!("{rs} {p} ξ(({a})({b}))"), &lhs, &rhs))
        })());
    }

    let mut report = VerificationReport::new();
    for t in [nil, dual, axioms, psi, mult] {
        report.push(t.claim());
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_passes(r: Result<VerificationReport>) {
        let r = r.unwrap();
        assert!(!r.is_empty());
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn box_partitions() {
        assert_eq!(
            partitions_in_box(2, 1),
            vec![vec![0, 0], vec![1, 0], vec![1, 1]]
        );
        assert_eq!(partitions_in_box(2, 2).len(), 6);
    }

    #[test]
    fn grassmannian_checks() {
        assert_passes(verify_theorem3(1, 3));
        assert_passes(verify_theorem3(2, 4));
        assert!(verify_theorem3(4, 4).is_err());
    }

    #[test]
    fn propositions_rank_two_and_three() {
        for (n, r) in [(2, 1), (2, 2), (3, 1), (3, 2), (3, 3)] {
            assert_passes(verify_proposition(Proposition::Symplectic, n, r));
            assert_passes(verify_proposition(Proposition::OddOrthogonal, n, r));
        }
        for f in [Family::B, Family::C] {
            assert_passes(verify_proposition(Proposition::Borel(f), 2, 0));
        }
        assert!(verify_proposition(Proposition::EvenOrthogonal, 3, 1).is_err());
        assert!(verify_proposition(Proposition::Symplectic, 2, 3).is_err());
    }

    #[test]
    fn lemma_so_small() {
        assert_passes(verify_lemma_so(2));
        assert_passes(verify_lemma_so(3));
    }

    #[test]
    fn diagram_c2() {
        let c2 = build_root_system(Family::C, 2).unwrap();
        let q = ParabolicSubset::maximal(2, 1).unwrap();
        let ctx_q = XiContext::new(&c2, &q).unwrap();
        let ctx_p = XiContext::new(&c2, &ParabolicSubset::borel(2)).unwrap();
        let chars = diagram_test_characters(&c2, &q).unwrap();
        assert_passes(verify_commutative_diagram(&ctx_p, &ctx_q, &chars));
        assert!(matches!(
            verify_commutative_diagram(&ctx_q, &ctx_p, &chars),
            Err(Error::NotNested { .. })
        ));
    }

    #[test]
    fn springer_and_cayley() {
        assert_passes(verify_springer_examples());
        assert_passes(verify_cayley_agreement(Family::C, 2));
        assert_passes(verify_cayley_agreement(Family::B, 2));
    }

    #[test]
    fn lambda_generation() {
        let r = verify_lambda_generation(Family::C, 2).unwrap();
        assert!(r.passed(), "{r}");
        let notes: Vec<_> = r.notes().map(|(_, n)| n.to_string()).collect();
        assert_eq!(notes, vec!["e1 = λ1", "e2 = λ2 - 2"]);
    }

    #[test]
    fn negative_irreps_c2() {
        assert_passes(verify_negative_irreps(Family::C, 2, 1));
    }

    #[test]
    fn surjective_small() {
        let c2 = build_root_system(Family::C, 2).unwrap();
        for p in [
            ParabolicSubset::borel(2),
            ParabolicSubset::maximal(2, 1).unwrap(),
        ] {
            assert_passes(verify_surjectivity(&c2, &p));
        }
    }

    #[test]
    fn properties_few_cases() {
        assert_passes(verify_properties(PropertyConfig { seed: 7, cases: 5 }));
    }
}
