//! Cohomology of flag varieties in the Schubert basis.
//!
//! A [`SchubertCombination`] is a rational combination of classes `ε^P_w`
//! for `w ∈ W^P`, where `P` is given by its [`ParabolicSubset`]. Classes
//! on `G/P` are identified with their pullbacks `ε^B_w` on `G/B`.

mod borel;
mod product;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::exactpoly::{parse_rational, Rational};
use crate::rootdata::{ParabolicSubset, RootSystem, WeylElement, WeylGroup};

pub use borel::{borel_expand, divided_difference, divided_difference_word, validate_orientation};
pub use product::{
    chevalley_product, cup_product, cup_product_checked, cup_product_chevalley, schubert_lift,
};

#[derive(Clone)]
pub struct SchubertCombination {
    rs: RootSystem,
    parabolic: ParabolicSubset,
    group: Arc<WeylGroup>,
    // group index ↦ coefficient
    terms: BTreeMap<usize, Rational>,
}

impl PartialEq for SchubertCombination {
    fn eq(&self, other: &Self) -> bool {
        self.rs == other.rs && self.parabolic == other.parabolic && self.terms == other.terms
    }
}

impl Eq for SchubertCombination {}

impl fmt::Debug for SchubertCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}/{}", self.render(), self.rs, self.parabolic)
    }
}

impl SchubertCombination {
    pub fn zero(rs: &RootSystem, parabolic: &ParabolicSubset) -> Result<Self> {
        parabolic.check_rank(rs)?;
        Ok(SchubertCombination {
            rs: rs.clone(),
            parabolic: parabolic.clone(),
            group: rs.weyl_group(),
            terms: BTreeMap::new(),
        })
    }

    /// The unit `ε_e`.
    pub fn one(rs: &RootSystem, parabolic: &ParabolicSubset) -> Result<Self> {
        let mut c = Self::zero(rs, parabolic)?;
        c.terms.insert(0, Rational::one());
        Ok(c)
    }

    /// The single class `ε^P_w`.
    pub fn class(rs: &RootSystem, parabolic: &ParabolicSubset, w: &WeylElement) -> Result<Self> {
        let mut c = Self::zero(rs, parabolic)?;
        c.add_term(w, Rational::one())?;
        Ok(c)
    }

    /// `ε^P_w` for `w = s_{i_1}⋯s_{i_k}`.
    pub fn from_word(rs: &RootSystem, parabolic: &ParabolicSubset, word: &[usize]) -> Result<Self> {
        Self::class(rs, parabolic, &WeylElement::from_word(rs, word)?)
    }

    pub fn from_terms<I>(rs: &RootSystem, parabolic: &ParabolicSubset, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (WeylElement, Rational)>,
    {
        let mut c = Self::zero(rs, parabolic)?;
        for (w, x) in terms {
            c.add_term(&w, x)?;
        }
        Ok(c)
    }

    pub(crate) fn from_indices(
        rs: &RootSystem,
        parabolic: &ParabolicSubset,
        terms: BTreeMap<usize, Rational>,
    ) -> Self {
        let group = rs.weyl_group();
        debug_assert!(terms
            .keys()
            .all(|k| parabolic.is_minimal_rep(group.element(*k))));
        SchubertCombination {
            rs: rs.clone(),
            parabolic: parabolic.clone(),
            group,
            terms: terms.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn add_term(&mut self, w: &WeylElement, c: Rational) -> Result<()> {
        let k = self
            .group
            .index_of(w)
            .ok_or_else(|| Error::InvalidElement(w.to_string()))?;
        if !self.parabolic.is_minimal_rep(w) {
            return Err(Error::NotInParabolicImage(w.word_string()));
        }
        self.add_index(k, c);
        Ok(())
    }

    pub(crate) fn add_index(&mut self, k: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(k).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub(crate) fn index_terms(&self) -> &BTreeMap<usize, Rational> {
        &self.terms
    }

    pub(crate) fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn parabolic(&self) -> &ParabolicSubset {
        &self.parabolic
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &WeylElement) -> Rational {
        self.group
            .index_of(w)
            .and_then(|k| self.terms.get(&k).cloned())
            .unwrap_or_else(Rational::zero)
    }

    /// Coefficient of `ε_{s_{i_1}⋯s_{i_k}}`.
    pub fn coeff_word(&self, word: &[usize]) -> Result<Rational> {
        Ok(self.coeff(&WeylElement::from_word(&self.rs, word)?))
    }

    /// Terms ordered by length, then images.
    pub fn terms(&self) -> Vec<(WeylElement, Rational)> {
        self.terms
            .iter()
            .map(|(k, c)| (self.group.element(*k).clone(), c.clone()))
            .collect()
    }

    /// Largest `ℓ(w)` with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|k| self.group.length_of(*k)).max()
    }

    pub fn homogeneous_component(&self, d: usize) -> Self {
        let mut out = self.clone();
        out.terms.retain(|k, _| self.group.length_of(*k) == d);
        out
    }

    pub fn same_flag_variety(&self, other: &Self) -> Result<()> {
        if self.rs != other.rs || self.parabolic != other.parabolic {
            return Err(Error::TagMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_flag_variety(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_index(*k, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = self.clone();
        if c.is_zero() {
            out.terms.clear();
        } else {
            for v in out.terms.values_mut() {
                *v *= c;
            }
        }
        out
    }

    /// The same classes viewed on `G/B` (`π*` for `G/B → G/P`).
    pub fn to_borel(&self) -> Self {
        let mut out = self.clone();
        out.parabolic = ParabolicSubset::borel(self.rs.rank());
        out
    }

    /// `π*` along `G/P' → G/P` for `P' ⊆ P`, i.e. `S' ⊆ S`.
    pub fn pullback(&self, target: &ParabolicSubset) -> Result<Self> {
        if !target.is_subset_of(&self.parabolic) {
            return Err(Error::NotNested {
                inner: target.to_string(),
                outer: self.parabolic.to_string(),
            });
        }
        let mut out = self.clone();
        out.parabolic = target.clone();
        Ok(out)
    }

    /// `(reduced word, coefficient)` pairs sorted by degree, then word.
    fn sorted_words(&self) -> Vec<(Vec<usize>, Rational)> {
        let mut v: Vec<(Vec<usize>, Rational)> = self
            .terms
            .iter()
            .map(|(k, c)| (self.group.reduced_word_of(*k), c.clone()))
            .collect();
        v.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
        v
    }

    /// Text form such as `2·[s1] - 1·[s2 s1]`; `0` when empty.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (word, c)) in self.sorted_words().into_iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&format!(
                "{}·[{}]",
                c.abs(),
                crate::rootdata::word_to_string(&word)
            ));
        }
        out
    }

    /// List of `{word, coeff}` objects, sorted like [`render`](Self::render).
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.sorted_words()
                .into_iter()
                .map(|(w, c)| {
                    json!({
                        "word": crate::rootdata::word_to_string(&w),
                        "coeff": c.to_string(),
                    })
                })
                .collect(),
        )
    }

    /// Parses the text form produced by [`render`](Self::render). A bare
    /// `[w]` has coefficient 1 and `*` may replace `·`.
    pub fn parse(rs: &RootSystem, parabolic: &ParabolicSubset, s: &str) -> Result<Self> {
        let mut out = Self::zero(rs, parabolic)?;
        let text = s.trim();
        if text == "0" {
            return Ok(out);
        }
        let perr = |pos: usize, msg: &str| Error::Parse {
            pos,
            msg: msg.to_string(),
        };
        let bytes: Vec<(usize, char)> = text.char_indices().collect();
        let mut i = 0;
        let skip_ws = |i: &mut usize| {
            while *i < bytes.len() && bytes[*i].1.is_whitespace() {
                *i += 1;
            }
        };
        let mut first = true;
        loop {
            skip_ws(&mut i);
            if i == bytes.len() {
                if first {
                    return Err(perr(0, "empty combination"));
                }
                break;
            }
            let mut sign = Rational::one();
            match bytes[i].1 {
                '+' if !first => i += 1,
                '-' | '−' => {
                    sign = -sign;
                    i += 1
                }
                _ if !first => return Err(perr(bytes[i].0, "expected '+' or '-'")),
                _ => {}
            }
            first = false;
            skip_ws(&mut i);
            let start = i;
            while i < bytes.len() && bytes[i].1 != '[' {
                i += 1;
            }
            if i == bytes.len() {
                return Err(perr(bytes[start.min(bytes.len() - 1)].0, "expected '['"));
            }
            let coeff_text: String = bytes[start..i].iter().map(|(_, c)| *c).collect();
            let coeff_text = coeff_text.trim().trim_end_matches(['·', '*']).trim();
            let coeff = if coeff_text.is_empty() {
                Rational::one()
            } else {
                parse_rational(coeff_text)?
            };
            let open = i;
            while i < bytes.len() && bytes[i].1 != ']' {
                i += 1;
            }
            if i == bytes.len() {
                return Err(perr(bytes[open].0, "unclosed '['"));
            }
            let word: String = bytes[open + 1..i].iter().map(|(_, c)| *c).collect();
            i += 1;
            let w = WeylElement::parse(rs, &word)?;
            out.add_term(&w, sign * coeff)?;
        }
        Ok(out)
    }
}

impl fmt::Display for SchubertCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl std::ops::Add for &SchubertCombination {
    type Output = SchubertCombination;
    fn add(self, rhs: &SchubertCombination) -> SchubertCombination {
        self.try_add(rhs)
            .expect("classes on different flag varieties")
    }
}

impl std::ops::Sub for &SchubertCombination {
    type Output = SchubertCombination;
    fn sub(self, rhs: &SchubertCombination) -> SchubertCombination {
        self.try_sub(rhs)
            .expect("classes on different flag varieties")
    }
}

/// Reinterprets a combination on `G/B` as one on `G/P`.
pub fn restrict_to_parabolic(
    c: &SchubertCombination,
    parabolic: &ParabolicSubset,
) -> Result<SchubertCombination> {
    parabolic.check_rank(&c.rs)?;
    for k in c.terms.keys() {
        let w = c.group.element(*k);
        if !parabolic.is_minimal_rep(w) {
            return Err(Error::NotInParabolicImage(w.word_string()));
        }
    }
    let mut out = c.clone();
    out.parabolic = parabolic.clone();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::ratio;
    use crate::rootdata::{build_root_system, Family};

    #[test]
    fn render_and_parse_round_trip() {
        let rs = build_root_system(Family::B, 3).unwrap();
        let b = ParabolicSubset::borel(3);
        let c = SchubertCombination::from_terms(
            &rs,
            &b,
            [
                (WeylElement::from_word(&rs, &[1]).unwrap(), ratio(2, 1)),
                (WeylElement::from_word(&rs, &[2, 1]).unwrap(), ratio(-3, 2)),
                (WeylElement::identity(&rs), ratio(1, 1)),
            ],
        )
        .unwrap();
        let text = c.render();
        assert_eq!(text, "1·[e] + 2·[s1] - 3/2·[s2 s1]");
        assert_eq!(SchubertCombination::parse(&rs, &b, &text).unwrap(), c);
        assert_eq!(
            SchubertCombination::parse(&rs, &b, "-[s1] + 2*[s2]")
                .unwrap()
                .render(),
            "-1·[s1] + 2·[s2]"
        );
        assert_eq!(SchubertCombination::zero(&rs, &b).unwrap().render(), "0");
    }

    #[test]
    fn parabolic_keys_must_be_minimal() {
        let rs = build_root_system(Family::A, 2).unwrap();
        let p = ParabolicSubset::levi(2, &[2]).unwrap();
        assert!(SchubertCombination::from_word(&rs, &p, &[2]).is_err());
        assert!(SchubertCombination::from_word(&rs, &p, &[2, 1]).is_ok());
    }

    #[test]
    fn restriction_checks_support() {
        let rs = build_root_system(Family::A, 2).unwrap();
        let b = ParabolicSubset::borel(2);
        let p = ParabolicSubset::levi(2, &[2]).unwrap();
        let ok = SchubertCombination::from_word(&rs, &b, &[2, 1]).unwrap();
        let r = restrict_to_parabolic(&ok, &p).unwrap();
        assert_eq!(r.parabolic(), &p);
        assert_eq!(r.to_borel(), ok);
        let one = SchubertCombination::one(&rs, &b).unwrap();
        assert_eq!(
            restrict_to_parabolic(&one, &p).unwrap(),
            SchubertCombination::one(&rs, &p).unwrap()
        );
        let s1 = SchubertCombination::from_word(&rs, &b, &[1]).unwrap();
        let q = ParabolicSubset::levi(2, &[2]).unwrap();
        assert!(restrict_to_parabolic(&s1, &q).is_ok());
        let bad = SchubertCombination::from_word(&rs, &b, &[2]).unwrap();
        assert!(matches!(
            restrict_to_parabolic(&bad, &p),
            Err(Error::NotInParabolicImage(_))
        ));
    }

    #[test]
    fn json_lists_words_and_coefficients() {
        let rs = build_root_system(Family::C, 2).unwrap();
        let b = ParabolicSubset::borel(2);
        let c = SchubertCombination::from_word(&rs, &b, &[1, 2])
            .unwrap()
            .scale(&ratio(3, 2));
        assert_eq!(
            c.to_json(),
            serde_json::json!([{"word": "s1 s2", "coeff": "3/2"}])
        );
    }
}
