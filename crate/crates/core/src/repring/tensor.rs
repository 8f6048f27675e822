//! Decomposition of characters into irreducible characters.

use std::collections::BTreeMap;

use num_traits::{ToPrimitive, Zero};

use super::weights::{integral_weight, is_dominant_int, weight_system_int};
use crate::error::{Error, Result};
use crate::exactpoly::{LaurentPoly, Rational};
use crate::rootdata::RootSystem;

/// Writes a `W`-invariant Laurent polynomial as `Σ c_ν χ_ν` by repeatedly
/// removing the lexicographically largest weight, which is dominant and
/// maximal for the dominance order.
pub fn decompose_character(
    rs: &RootSystem,
    chi: &LaurentPoly,
) -> Result<BTreeMap<Vec<i64>, Rational>> {
    if chi.nvars() != rs.dim() {
        return Err(Error::VariableCountMismatch(rs.dim(), chi.nvars()));
    }
    let mut rest = chi.clone();
    let mut out = BTreeMap::new();
    let budget = chi.len() + 1;
    for _ in 0..=budget * budget {
        let Some((top, c)) = rest
            .terms()
            .max_by(|a, b| a.0.cmp(b.0))
            .map(|(e, c)| (e.iter().map(|x| *x as i64).collect::<Vec<_>>(), c.clone()))
        else {
            return Ok(out);
        };
        if !is_dominant_int(rs, &top) {
            return Err(Error::NonTerminating(format!(
                "leading weight {top:?} is not dominant; input is not W-invariant"
            )));
        }
        let ws = weight_system_int(rs, &top)?;
        let next = &rest - &ws.character_poly().scale(&c);
        let top32: Vec<i32> = top.iter().map(|x| *x as i32).collect();
        if !next.coeff(&top32).is_zero() {
            return Err(Error::NonTerminating(format!(
                "weight {top:?} did not cancel"
            )));
        }
        rest = next;
        out.insert(top, c);
    }
    Err(Error::NonTerminating(format!(
        "no progress after {} steps",
        budget * budget
    )))
}

/// Multiplicities of `V(ν)` in `V(λ) ⊗ V(μ)`, weights in ambient
/// coordinates.
pub fn tensor_decompose(
    rs: &RootSystem,
    lambda: &[Rational],
    mu: &[Rational],
) -> Result<BTreeMap<Vec<i64>, u64>> {
    let l = integral_weight(rs, lambda)?;
    let m = integral_weight(rs, mu)?;
    let a = weight_system_int(rs, &l)?.character_poly();
    let b = weight_system_int(rs, &m)?.character_poly();
    decompose_character(rs, &(&a * &b))?
        .into_iter()
        .map(|(nu, c)| {
            let k = c
                .to_integer()
                .to_u64()
                .filter(|_| c.is_integer() && !c.is_zero())
                .ok_or_else(|| Error::NonTerminating(format!("multiplicity {c} at {nu:?}")))?;
            Ok((nu, k))
        })
        .collect()
}
