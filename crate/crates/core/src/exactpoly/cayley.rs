//! Rewriting Laurent polynomials in the coordinates `s_i = t_i - t_i^{-1}`.
//!
//! Over `Q[s]`, `Q[t, t^{-1}]` is free with basis `{1, t}`: `t^2 = s·t + 1`
//! and `t^{-1} = t - s`. Hence every Laurent polynomial in `t_1..t_N` is
//! uniquely `A(s) + Σ_U (Π_{i∈U} t_i)·B_U(s)` over nonempty subsets `U`,
//! and it lies in `Q[s_1..s_N]` exactly when every `B_U` vanishes.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{ExactPoly, LaurentPoly, Rational};

#[derive(Clone, Debug, PartialEq)]
pub struct CayleyDecomposition {
    nvars: usize,
    /// `A(s)`, a polynomial in `s_1..s_N`.
    pub principal: ExactPoly,
    /// `U ↦ B_U(s)` keyed by sorted 0-based variable indices; never empty sets.
    pub residual: BTreeMap<Vec<usize>, ExactPoly>,
}

/// `t^k = a_k(s) + t·b_k(s)` as dense coefficient vectors in `s`.
fn power_table(k: i32) -> (Vec<BigInt>, Vec<BigInt>) {
    let mut a = vec![BigInt::one()];
    let mut b: Vec<BigInt> = vec![];
    let shift = |v: &Vec<BigInt>| {
        let mut out = vec![BigInt::zero()];
        out.extend(v.iter().cloned());
        out
    };
    let add = |x: &Vec<BigInt>, y: &Vec<BigInt>, sign: i32| {
        let n = x.len().max(y.len());
        (0..n)
            .map(|i| {
                let xi = x.get(i).cloned().unwrap_or_default();
                let yi = y.get(i).cloned().unwrap_or_default();
                if sign > 0 {
                    xi + yi
                } else {
                    xi - yi
                }
            })
            .collect::<Vec<_>>()
    };
    if k >= 0 {
        for _ in 0..k {
            // t·(a + t b) = b + t (a + s b)
            let nb = add(&a, &shift(&b), 1);
            a = b;
            b = nb;
        }
    } else {
        for _ in 0..(-k) {
            // t^{-1}·(a + t b) = (b - s a) + t a
            let na = add(&b, &shift(&a), -1);
            b = a;
            a = na;
        }
    }
    (a, b)
}

type Mixed = HashMap<(u64, Vec<i32>), Rational>;

fn sparse(v: &[BigInt]) -> Sparse {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(p, c)| (p as i32, Rational::from_integer(c.clone())))
        .collect()
}

type Sparse = Vec<(i32, Rational)>;

/// Expresses `f` in the basis `{Π_{i∈U} t_i}` over `Q[s_1..s_N]`.
pub fn cayley_rewrite(f: &LaurentPoly) -> CayleyDecomposition {
    let n = f.nvars();
    assert!(n < 64, "too many variables for subset masks");
    let mut state: Mixed = f
        .terms()
        .map(|(e, c)| ((0u64, e.to_vec()), c.clone()))
        .collect();
    let mut tables: HashMap<i32, (Sparse, Sparse)> = HashMap::new();
    for j in 0..n {
        let mut next: Mixed = HashMap::with_capacity(state.len() * 2);
        for ((mask, e), c) in state {
            let (a, b) = tables.entry(e[j]).or_insert_with(|| {
                let (a, b) = power_table(e[j]);
                (sparse(&a), sparse(&b))
            });
            for (p, ca) in a.iter() {
                let mut e2 = e.clone();
                e2[j] = *p;
                *next.entry((mask, e2)).or_insert_with(Rational::zero) += &c * ca;
            }
            for (p, cb) in b.iter() {
                let mut e2 = e.clone();
                e2[j] = *p;
                *next
                    .entry((mask | (1 << j), e2))
                    .or_insert_with(Rational::zero) += &c * cb;
            }
        }
        next.retain(|_, c| !c.is_zero());
        state = next;
    }
    let mut principal = ExactPoly::zero(n);
    let mut residual: BTreeMap<Vec<usize>, ExactPoly> = BTreeMap::new();
    for ((mask, e), c) in state {
        let exps: Vec<u32> = e.iter().map(|x| *x as u32).collect();
        if mask == 0 {
            principal.add_term(exps, c);
        } else {
            let subset: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            residual
                .entry(subset)
                .or_insert_with(|| ExactPoly::zero(n))
                .add_term(exps, c);
        }
    }
    residual.retain(|_, p| !p.is_zero());
    let out = CayleyDecomposition {
        nvars: n,
        principal,
        residual,
    };
    debug_assert_eq!(
        &out.reassemble(),
        f,
        "Cayley decomposition does not reassemble"
    );
    out
}

fn binomial_row(p: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..p {
        let next = &row[k as usize] * BigInt::from(p - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}

impl CayleyDecomposition {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// True when the input lies in `Q[s_1..s_N]`.
    pub fn is_polynomial(&self) -> bool {
        self.residual.is_empty()
    }

    /// Substitutes `s_i = t_i - t_i^{-1}` back, one variable at a time.
    pub fn reassemble(&self) -> LaurentPoly {
        let n = self.nvars;
        let mut state: Mixed = HashMap::new();
        let mut push = |mask: u64, p: &ExactPoly| {
            for (e, c) in p.terms() {
                let key = (mask, e.iter().map(|x| *x as i32).collect());
                *state.entry(key).or_insert_with(Rational::zero) += c;
            }
        };
        push(0, &self.principal);
        for (subset, p) in &self.residual {
            let mask = subset.iter().fold(0u64, |m, i| m | (1 << i));
            push(mask, p);
        }
        for j in 0..n {
            let mut next: Mixed = HashMap::with_capacity(state.len() * 2);
            for ((mask, e), c) in state {
                let p = e[j] as u32;
                let extra = i32::from(mask & (1 << j) != 0);
                let rest = mask & !(1 << j);
                for (m, b) in binomial_row(p).into_iter().enumerate() {
                    let mut e2 = e.clone();
                    e2[j] = p as i32 - 2 * m as i32 + extra;
                    let mut coeff = Rational::from_integer(b) * &c;
                    if m % 2 == 1 {
                        coeff = -coeff;
                    }
                    *next.entry((rest, e2)).or_insert_with(Rational::zero) += coeff;
                }
            }
            next.retain(|_, c| !c.is_zero());
            state = next;
        }
        LaurentPoly::from_terms(n, state.into_iter().map(|((_, e), c)| (e, c)))
    }

    /// `Σ_U (Π t_i)·B_U(t - t^{-1})`, the part obstructing polynomiality.
    pub fn residual_part(&self) -> LaurentPoly {
        let only = CayleyDecomposition {
            nvars: self.nvars,
            principal: ExactPoly::zero(self.nvars),
            residual: self.residual.clone(),
        };
        only.reassemble()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::parse_poly;
    use proptest::prelude::*;

    fn lp(s: &str, n: usize) -> LaurentPoly {
        parse_poly(s, 't', Some(n)).unwrap()
    }

    fn sp(s: &str, n: usize) -> ExactPoly {
        parse_poly(s, 's', Some(n)).unwrap()
    }

    #[test]
    fn square_sum_is_polynomial() {
        let d = cayley_rewrite(&lp("t1^2 + t1^-2", 1));
        assert_eq!(d.principal, sp("s1^2 + 2", 1));
        assert!(d.residual.is_empty());
    }

    #[test]
    fn trace_of_defining_rep_leaves_residual() {
        let d = cayley_rewrite(&lp("t1 + t1^-1", 1));
        assert_eq!(d.principal, sp("-s1", 1));
        assert_eq!(d.residual.len(), 1);
        assert_eq!(
            d.residual[&vec![0]],
            ExactPoly::constant(1, Rational::from_integer(2.into()))
        );
        assert_eq!(d.residual_part(), lp("2*t1", 1));
    }

    #[test]
    fn product_of_two_coordinates() {
        let d = cayley_rewrite(&lp("t1*t2 - t1*t2^-1 - t1^-1*t2 + t1^-1*t2^-1", 2));
        assert_eq!(d.principal, sp("s1*s2", 2));
        assert!(d.is_polynomial());
    }

    #[test]
    fn zero_has_empty_decomposition() {
        let d = cayley_rewrite(&LaurentPoly::zero(3));
        assert!(d.principal.is_zero());
        assert!(d.residual.is_empty());
    }

    #[test]
    fn power_table_matches_direct_expansion() {
        // t^k reassembled from its table entry
        for k in -6..=6 {
            let d = cayley_rewrite(&LaurentPoly::monomial(vec![k], Rational::one()));
            assert_eq!(
                d.reassemble(),
                LaurentPoly::monomial(vec![k], Rational::one())
            );
        }
    }

    fn arb_laurent(n: usize) -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((prop::collection::vec(-3i32..=3, n), -9i64..=9), 0..6).prop_map(
            move |terms| {
                LaurentPoly::from_terms(
                    n,
                    terms
                        .into_iter()
                        .map(|(e, c)| (e, Rational::from_integer(c.into()))),
                )
            },
        )
    }

    fn to_s(p: &ExactPoly) -> LaurentPoly {
        let n = p.nvars();
        let imgs: Vec<LaurentPoly> = (0..n)
            .map(|i| LaurentPoly::cayley_coordinate(n, i))
            .collect();
        p.substitute(&imgs).unwrap()
    }

    proptest! {
        #[test]
        fn reassembly_is_identity(f in arb_laurent(3)) {
            let d = cayley_rewrite(&f);
            prop_assert_eq!(d.reassemble(), f);
        }

        #[test]
        fn products_of_polynomial_parts(a in arb_laurent(2), b in arb_laurent(2)) {
            // project onto the polynomial part, then multiply
            let pa = cayley_rewrite(&a).principal;
            let pb = cayley_rewrite(&b).principal;
            let prod = &to_s(&pa) * &to_s(&pb);
            let d = cayley_rewrite(&prod);
            prop_assert!(d.is_polynomial());
            prop_assert_eq!(d.principal, &pa * &pb);
        }
    }
}
