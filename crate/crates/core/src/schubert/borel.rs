//! Divided differences and the Borel map `S(t*) → H*(G/B)`.

use std::collections::BTreeMap;
use std::collections::HashMap;

use num_traits::Zero;

use super::SchubertCombination;
use crate::error::{Error, Result};
use crate::exactpoly::{rat, ExactPoly, Rational};
use crate::rootdata::{ParabolicSubset, RootSystem, WeylElement};

/// Shape of a simple root in ambient coordinates.
#[derive(Clone, Copy, Debug)]
enum RootShape {
    /// `x_a - x_b`
    Difference(usize, usize),
    /// `c·x_a`
    Scaled(usize, i64),
    /// `x_a + x_b`
    Sum(usize, usize),
}

fn shape(alpha: &[i64]) -> RootShape {
    let nz: Vec<(usize, i64)> = alpha
        .iter()
        .enumerate()
        .filter(|(_, x)| **x != 0)
        .map(|(i, x)| (i, *x))
        .collect();
    match nz.as_slice() {
        [(a, 1), (b, -1)] => RootShape::Difference(*a, *b),
        [(a, 1), (b, 1)] => RootShape::Sum(*a, *b),
        [(a, c)] => RootShape::Scaled(*a, *c),
        _ => unreachable!("not a classical simple root: {alpha:?}"),
    }
}

/// `(x_a^p x_b^q - x_a^q x_b^p)/(x_a - x_b)` as `(i, j, sign)` triples
/// standing for `sign·x_a^i x_b^j`.
fn swap_quotient(p: u32, q: u32) -> Vec<(u32, u32, i64)> {
    if p > q {
        (0..p - q).map(|k| (p - 1 - k, q + k, 1)).collect()
    } else {
        (0..q - p).map(|k| (q - 1 - k, p + k, -1)).collect()
    }
}

/// `∂_i f = (f - s_i f)/α_i`.
pub fn divided_difference(rs: &RootSystem, i: usize, f: &ExactPoly) -> Result<ExactPoly> {
    rs.check_index(i)?;
    if f.nvars() != rs.dim() {
        return Err(Error::VariableCountMismatch(rs.dim(), f.nvars()));
    }
    let n = f.nvars();
    let mut acc: HashMap<Vec<u32>, Rational> = HashMap::new();
    let mut push = |e: Vec<u32>, c: Rational| {
        *acc.entry(e).or_insert_with(Rational::zero) += c;
    };
    let sh = shape(rs.simple_root(i));
    for (e, c) in f.terms() {
        match sh {
            RootShape::Difference(a, b) => {
                for (x, y, s) in swap_quotient(e[a], e[b]) {
                    let mut m = e.to_vec();
                    m[a] = x;
                    m[b] = y;
                    push(m, c * rat(s));
                }
            }
            RootShape::Sum(a, b) => {
                // with y = -x_b the root is x_a - y and s_i swaps x_a, y
                let q = e[b];
                for (x, y, s) in swap_quotient(e[a], q) {
                    let mut m = e.to_vec();
                    m[a] = x;
                    m[b] = y;
                    let parity = (q + y) % 2;
                    let sign = if parity == 1 { -s } else { s };
                    push(m, c * rat(sign));
                }
            }
            RootShape::Scaled(a, k) => {
                if e[a] % 2 == 1 {
                    let mut m = e.to_vec();
                    m[a] -= 1;
                    push(m, c * rat(2) / rat(k));
                }
            }
        }
    }
    Ok(ExactPoly::from_terms(n, acc))
}

/// `∂_{i_1} ∘ ⋯ ∘ ∂_{i_k}`, applying the last letter first.
pub fn divided_difference_word(
    rs: &RootSystem,
    word: &[usize],
    f: &ExactPoly,
) -> Result<ExactPoly> {
    let mut g = f.clone();
    for &i in word.iter().rev() {
        g = divided_difference(rs, i, &g)?;
    }
    Ok(g)
}

/// `β^P(f)` in the Schubert basis of `G/P`. The coefficient of `ε_w` is the
/// constant term of `∂_{i_1}∘⋯∘∂_{i_k} f` for a reduced word of `w`, last
/// letter applied first. For a nonempty `S`, `f` must be `W_L`-invariant.
pub fn borel_expand(
    f: &ExactPoly,
    rs: &RootSystem,
    parabolic: &ParabolicSubset,
) -> Result<SchubertCombination> {
    parabolic.check_rank(rs)?;
    if f.nvars() != rs.dim() {
        return Err(Error::VariableCountMismatch(rs.dim(), f.nvars()));
    }
    for s in parabolic.generators(rs)? {
        if s.act(f)? != *f {
            return Err(Error::NotLeviInvariant);
        }
    }
    let group = rs.weyl_group();
    let mut terms: BTreeMap<usize, Rational> = BTreeMap::new();
    for d in f.degrees() {
        let d = d as usize;
        if d > group.max_length() {
            continue;
        }
        let fd = f.homogeneous_component(d as i64);
        // g[k] = ∂_{w_k} f_d, built from g[s_i w] since w = s_i·(s_i w)
        let mut level: HashMap<usize, ExactPoly> = HashMap::from([(0usize, fd)]);
        for len in 1..=d {
            let mut next = HashMap::new();
            for k in group.of_length(len) {
                if !parabolic.is_minimal_rep(group.element(k)) {
                    continue;
                }
                let (i, parent) = group.left_step(k).expect("non-identity element");
                let Some(g) = level.get(&parent) else {
                    continue;
                };
                let h = divided_difference(rs, i, g)?;
                if !h.is_zero() {
                    next.insert(k, h);
                }
            }
            level = next;
        }
        for (k, g) in level {
            let c = g.constant_term();
            if !c.is_zero() {
                *terms.entry(k).or_insert_with(Rational::zero) += c;
            }
        }
    }
    Ok(SchubertCombination::from_indices(rs, parabolic, terms))
}

/// `ω_i` as a linear polynomial.
pub(crate) fn omega_poly(rs: &RootSystem, i: usize) -> ExactPoly {
    ExactPoly::linear(rs.fundamental_weight(i))
}

/// Checks that the coefficient-extraction orientation reproduces
/// `β(ω_i) = ε_{s_i}` and agrees with the Chevalley rule on `ω_i ω_j`.
pub fn validate_orientation(rs: &RootSystem) -> Result<()> {
    let n = rs.rank();
    let b = ParabolicSubset::borel(n);
    for i in 1..=n {
        let got = borel_expand(&omega_poly(rs, i), rs, &b)?;
        let want = SchubertCombination::class(rs, &b, &WeylElement::simple(rs, i)?)?;
        if got != want {
            return Err(Error::Orientation(format!(
                "{rs}: β(ω{i}) = {got}, expected {want}"
            )));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            let f = &omega_poly(rs, i) * &omega_poly(rs, j);
            let by_dd = borel_expand(&f, rs, &b)?;
            let sj = SchubertCombination::class(rs, &b, &WeylElement::simple(rs, j)?)?;
            let by_chevalley = super::chevalley_product(i, &sj)?;
            if by_dd != by_chevalley {
                return Err(Error::Orientation(format!(
                    "{rs}: β(ω{i}ω{j}) = {by_dd} but Chevalley gives {by_chevalley}"
                )));
            }
        }
    }
    Ok(())
}
