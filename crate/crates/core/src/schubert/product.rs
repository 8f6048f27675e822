//! Products of Schubert classes.
//!
//! Two independent routes: lifting classes to polynomials and expanding the
//! product with divided differences, or writing the left factor as a
//! polynomial in the divisor classes `ε_{s_i}` and applying the Chevalley
//! rule repeatedly. Each route finds its own lifts.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;

use super::borel::{borel_expand, omega_poly};
use super::{restrict_to_parabolic, SchubertCombination};
use crate::error::{Error, Result};
use crate::exactpoly::{ExactPoly, Rational};
use crate::linalg::Reducer;
use crate::rootdata::{Family, ParabolicSubset, RootSystem, WeylElement};

/// `ε_{s_i}·c` by the Chevalley formula
/// `ε_{s_i}ε_w = Σ ⟨ω_i, β^∨⟩ ε_{w s_β}` over positive `β` with
/// `ℓ(w s_β) = ℓ(w) + 1`.
pub fn chevalley_product(i: usize, c: &SchubertCombination) -> Result<SchubertCombination> {
    let rs = c.root_system().clone();
    rs.check_index(i)?;
    if c.parabolic().contains(i) {
        return Err(Error::NotInParabolicImage(format!("s{i}")));
    }
    let group = c.group().clone();
    let omega = rs.fundamental_weight(i).to_vec();
    let reflections: Vec<(WeylElement, Rational)> = rs
        .positive_roots()
        .iter()
        .map(|b| (WeylElement::reflection(&rs, b), rs.pairing(&omega, b)))
        .filter(|(_, p)| !p.is_zero())
        .collect();
    let mut out: BTreeMap<usize, Rational> = BTreeMap::new();
    for (k, coeff) in c.index_terms() {
        let w = group.element(*k);
        let len = group.length_of(*k);
        for (s, p) in &reflections {
            let v = w * s;
            let j = group.index_of(&v).expect("group is closed");
            if group.length_of(j) == len + 1 {
                *out.entry(j).or_insert_with(Rational::zero) += coeff * p;
            }
        }
    }
    out.retain(|_, x| !x.is_zero());
    let borel = SchubertCombination::from_indices(&rs, &ParabolicSubset::borel(rs.rank()), out);
    restrict_to_parabolic(&borel, c.parabolic())
}

/// Exponent vectors of degree `d` in `n` variables, lexicographically
/// descending.
fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

type LiftKey = (Family, usize, usize);
type Lifts = HashMap<usize, Vec<(Vec<u32>, Rational)>>;
type LiftCache = Mutex<HashMap<LiftKey, Arc<HashMap<usize, ExactPoly>>>>;

/// For each `w` of length `d`, a combination of `ω`-monomials whose image
/// is `ε_w`, found by elimination against the supplied expansion.
fn lift_table<F>(rs: &RootSystem, d: usize, mut expand: F) -> Result<Lifts>
where
    F: FnMut(&[u32]) -> Result<SchubertCombination>,
{
    let group = rs.weyl_group();
    let range = group.of_length(d);
    let dim = range.len();
    let mut reducer = Reducer::new(dim);
    let mut accepted: Vec<Vec<u32>> = Vec::new();
    for m in monomials(rs.rank(), d as u32) {
        if reducer.is_full() {
            break;
        }
        let image = expand(&m)?;
        let mut v = vec![Rational::zero(); dim];
        for (k, c) in image.index_terms() {
            debug_assert!(range.contains(k));
            v[k - range.start] = c.clone();
        }
        if reducer.insert(&v).is_some() {
            accepted.push(m);
        }
    }
    if !reducer.is_full() {
        return Err(Error::NotInvertible(format!(
            "divisor classes do not span degree {d} of {rs}"
        )));
    }
    let mut table = HashMap::new();
    for (pos, k) in range.clone().enumerate() {
        let mut unit = vec![Rational::zero(); dim];
        unit[pos] = Rational::from_integer(1.into());
        let combo = reducer.express(&unit).expect("full rank");
        let terms = accepted
            .iter()
            .zip(combo)
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m.clone(), c))
            .collect();
        table.insert(k, terms);
    }
    Ok(table)
}

fn omega_monomial(rs: &RootSystem, m: &[u32]) -> ExactPoly {
    m.iter()
        .enumerate()
        .fold(ExactPoly::one(rs.dim()), |acc, (i, e)| {
            &acc * &omega_poly(rs, i + 1).pow(*e)
        })
}

fn dd_lifts(rs: &RootSystem, d: usize) -> Result<Arc<HashMap<usize, ExactPoly>>> {
    static CACHE: OnceLock<LiftCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (rs.family(), rs.rank(), d);
    if let Some(t) = cache.lock().unwrap().get(&key) {
        return Ok(t.clone());
    }
    let borel = ParabolicSubset::borel(rs.rank());
    let table = lift_table(rs, d, |m| borel_expand(&omega_monomial(rs, m), rs, &borel))?;
    let polys: HashMap<usize, ExactPoly> = table
        .into_iter()
        .map(|(k, terms)| {
            let p = terms.iter().fold(ExactPoly::zero(rs.dim()), |acc, (m, c)| {
                &acc + &omega_monomial(rs, m).scale(c)
            });
            (k, p)
        })
        .collect();
    let t = Arc::new(polys);
    cache.lock().unwrap().insert(key, t.clone());
    Ok(t)
}

fn apply_divisor_monomial(m: &[u32], c: &SchubertCombination) -> Result<SchubertCombination> {
    let mut out = c.clone();
    for (i, e) in m.iter().enumerate() {
        for _ in 0..*e {
            if out.is_zero() {
                return Ok(out);
            }
            out = chevalley_product(i + 1, &out)?;
        }
    }
    Ok(out)
}

type ChevalleyTable = HashMap<usize, Vec<(Vec<u32>, Rational)>>;

fn chevalley_lifts(rs: &RootSystem, d: usize) -> Result<Arc<ChevalleyTable>> {
    static CACHE: OnceLock<Mutex<HashMap<LiftKey, Arc<ChevalleyTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (rs.family(), rs.rank(), d);
    if let Some(t) = cache.lock().unwrap().get(&key) {
        return Ok(t.clone());
    }
    let one = SchubertCombination::one(rs, &ParabolicSubset::borel(rs.rank()))?;
    let t = Arc::new(lift_table(rs, d, |m| apply_divisor_monomial(m, &one))?);
    cache.lock().unwrap().insert(key, t.clone());
    Ok(t)
}

/// A polynomial `f` in the ambient coordinates with `β(f) = ε^B_w`.
pub fn schubert_lift(w: &WeylElement) -> Result<ExactPoly> {
    let rs = w.root_system();
    let group = rs.weyl_group();
    let k = group.index_of(w).expect("element of its own group");
    let table = dd_lifts(rs, group.length_of(k))?;
    Ok(table[&k].clone())
}

/// Cup product by lifting both factors to polynomials and expanding the
/// product with divided differences.
pub fn cup_product(
    a: &SchubertCombination,
    b: &SchubertCombination,
) -> Result<SchubertCombination> {
    a.same_flag_variety(b)?;
    let rs = a.root_system();
    let group = a.group();
    let lift = |c: &SchubertCombination| -> Result<ExactPoly> {
        let mut p = ExactPoly::zero(rs.dim());
        for (k, x) in c.index_terms() {
            let table = dd_lifts(rs, group.length_of(*k))?;
            p = &p + &table[k].scale(x);
        }
        Ok(p)
    };
    let prod = &lift(a)? * &lift(b)?;
    let on_b = borel_expand(&prod, rs, &ParabolicSubset::borel(rs.rank()))?;
    restrict_to_parabolic(&on_b, a.parabolic())
}

/// Cup product by writing `a` as a polynomial in the `ε_{s_i}` and applying
/// the Chevalley formula to `b`.
pub fn cup_product_chevalley(
    a: &SchubertCombination,
    b: &SchubertCombination,
) -> Result<SchubertCombination> {
    a.same_flag_variety(b)?;
    let rs = a.root_system();
    let group = a.group();
    let b_on_b = b.to_borel();
    let mut memo: HashMap<Vec<u32>, SchubertCombination> = HashMap::new();
    let mut out = SchubertCombination::zero(rs, &ParabolicSubset::borel(rs.rank()))?;
    for (k, x) in a.index_terms() {
        let table = chevalley_lifts(rs, group.length_of(*k))?;
        for (m, c) in &table[k] {
            if !memo.contains_key(m) {
                memo.insert(m.clone(), apply_divisor_monomial(m, &b_on_b)?);
            }
            out = &out + &memo[m].scale(&(x * c));
        }
    }
    restrict_to_parabolic(&out, a.parabolic())
}

/// Both product routes, failing if they differ.
pub fn cup_product_checked(
    a: &SchubertCombination,
    b: &SchubertCombination,
) -> Result<SchubertCombination> {
    let dd = cup_product(a, b)?;
    let ch = cup_product_chevalley(a, b)?;
    if dd != ch {
        return Err(Error::ProductPathsDisagree(format!(
            "({a})·({b}): divided differences give {dd}, Chevalley gives {ch}"
        )));
    }
    Ok(dd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::build_root_system;
    use proptest::prelude::*;

    fn class(rs: &RootSystem, p: &ParabolicSubset, word: &[usize]) -> SchubertCombination {
        SchubertCombination::from_word(rs, p, word).unwrap()
    }

    #[test]
    fn chevalley_examples() {
        let a2 = build_root_system(Family::A, 2).unwrap();
        let b = ParabolicSubset::borel(2);
        let s1 = class(&a2, &b, &[1]);
        assert_eq!(chevalley_product(1, &s1).unwrap(), class(&a2, &b, &[2, 1]));
        let e = SchubertCombination::one(&a2, &b).unwrap();
        assert_eq!(chevalley_product(2, &e).unwrap(), class(&a2, &b, &[2]));
        // hyperplane class on P^2
        let p = ParabolicSubset::levi(2, &[2]).unwrap();
        let h = class(&a2, &p, &[1]);
        let h2 = chevalley_product(1, &h).unwrap();
        assert_eq!(h2, class(&a2, &p, &[2, 1]));
        assert!(chevalley_product(1, &h2).unwrap().is_zero());
        assert!(chevalley_product(2, &h).is_err());
    }

    #[test]
    fn gr24_square_of_divisor() {
        let a3 = build_root_system(Family::A, 3).unwrap();
        let p = ParabolicSubset::maximal(3, 2).unwrap();
        let s2 = class(&a3, &p, &[2]);
        let sq = cup_product_checked(&s2, &s2).unwrap();
        let expected = &class(&a3, &p, &[1, 2]) + &class(&a3, &p, &[3, 2]);
        assert_eq!(sq, expected);
    }

    #[test]
    fn unit_and_top_degree() {
        let a2 = build_root_system(Family::A, 2).unwrap();
        let p = ParabolicSubset::levi(2, &[2]).unwrap();
        let one = SchubertCombination::one(&a2, &p).unwrap();
        let h = class(&a2, &p, &[1]);
        let top = class(&a2, &p, &[2, 1]);
        assert_eq!(cup_product(&h, &one).unwrap(), h);
        assert!(cup_product(&top, &h).unwrap().is_zero());
        assert!(cup_product_chevalley(&top, &h).unwrap().is_zero());
    }

    #[test]
    fn lifts_expand_back() {
        let rs = build_root_system(Family::D, 4).unwrap();
        let g = rs.weyl_group();
        let b = ParabolicSubset::borel(4);
        for k in g.of_length(3) {
            let w = g.element(k);
            let f = schubert_lift(w).unwrap();
            assert_eq!(
                borel_expand(&f, &rs, &b).unwrap(),
                SchubertCombination::class(&rs, &b, w).unwrap()
            );
        }
    }

    #[test]
    fn mismatched_tags() {
        let a2 = build_root_system(Family::A, 2).unwrap();
        let b = ParabolicSubset::borel(2);
        let p = ParabolicSubset::levi(2, &[2]).unwrap();
        let x = class(&a2, &b, &[1]);
        let y = class(&a2, &p, &[1]);
        assert_eq!(cup_product(&x, &y), Err(Error::TagMismatch));
    }

    fn random_class(rs: &RootSystem, picks: &[(usize, i64)]) -> SchubertCombination {
        let g = rs.weyl_group();
        let b = ParabolicSubset::borel(rs.rank());
        let mut c = SchubertCombination::zero(rs, &b).unwrap();
        for (k, x) in picks {
            let k = k % g.len();
            if g.length_of(k) <= 3 {
                c.add_term(g.element(k), Rational::from_integer((*x).into()))
                    .unwrap();
            }
        }
        c
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn commutative_and_associative(
            a in prop::collection::vec((0usize..48, -3i64..=3), 1..3),
            b in prop::collection::vec((0usize..48, -3i64..=3), 1..3),
            c in prop::collection::vec((0usize..48, -3i64..=3), 1..3),
            fam in 0usize..3,
        ) {
            let fam = [Family::A, Family::B, Family::C][fam];
            let rs = build_root_system(fam, 3).unwrap();
            let (a, b, c) = (random_class(&rs, &a), random_class(&rs, &b), random_class(&rs, &c));
            let ab = cup_product(&a, &b).unwrap();
            prop_assert_eq!(&ab, &cup_product(&b, &a).unwrap());
            prop_assert_eq!(&ab, &cup_product_chevalley(&a, &b).unwrap());
            let left = cup_product(&ab, &c).unwrap();
            let right = cup_product(&a, &cup_product(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
