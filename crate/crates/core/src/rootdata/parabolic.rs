//! Standard parabolic subsets and minimal coset representatives.

use std::collections::BTreeSet;
use std::fmt;

use super::{RootSystem, WeylElement};
use crate::error::{Error, Result};

/// The simple-root indices `S ⊆ {1..n}` of a standard Levi subgroup.
/// `S = ∅` is the Borel subgroup and `S = {1..n}∖{r}` the maximal
/// parabolic `P_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParabolicSubset {
    rank: usize,
    nodes: BTreeSet<usize>,
}

impl ParabolicSubset {
    pub fn borel(rank: usize) -> Self {
        ParabolicSubset {
            rank,
            nodes: BTreeSet::new(),
        }
    }

    /// `S = {1..n}`, i.e. `P = G`.
    pub fn full(rank: usize) -> Self {
        ParabolicSubset {
            rank,
            nodes: (1..=rank).collect(),
        }
    }

    pub fn maximal(rank: usize, r: usize) -> Result<Self> {
        if r == 0 || r > rank {
            return Err(Error::InvalidParabolic(format!(
                "maximal:{r} needs 1 ≤ r ≤ {rank}"
            )));
        }
        Ok(ParabolicSubset {
            rank,
            nodes: (1..=rank).filter(|&i| i != r).collect(),
        })
    }

    pub fn levi(rank: usize, nodes: &[usize]) -> Result<Self> {
        if let Some(bad) = nodes.iter().find(|&&i| i == 0 || i > rank) {
            return Err(Error::InvalidParabolic(format!(
                "node {bad} outside 1..={rank}"
            )));
        }
        Ok(ParabolicSubset {
            rank,
            nodes: nodes.iter().copied().collect(),
        })
    }

    /// Accepts `borel`, `full`, `maximal:r` and `levi:1,3` (`levi:` alone is
    /// the Borel).
    pub fn parse(s: &str, rank: usize) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidParabolic(format!("cannot parse {s:?}"));
        if s == "borel" {
            return Ok(Self::borel(rank));
        }
        if s == "full" {
            return Ok(Self::full(rank));
        }
        if let Some(r) = s.strip_prefix("maximal:") {
            let r: usize = r.trim().parse().map_err(|_| bad())?;
            return Self::maximal(rank, r);
        }
        if let Some(list) = s.strip_prefix("levi:") {
            let nodes = list
                .split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            return Self::levi(rank, &nodes);
        }
        Err(bad())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nodes(&self) -> impl Iterator<Item = usize> + '_ {
        self.nodes.iter().copied()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.nodes.contains(&i)
    }

    pub fn is_borel(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.rank == other.rank && self.nodes.is_subset(&other.nodes)
    }

    /// Simple indices not in `S`.
    pub fn complement(&self) -> Vec<usize> {
        (1..=self.rank).filter(|i| !self.contains(*i)).collect()
    }

    /// `r` when `S = {1..n}∖{r}`.
    pub fn maximal_index(&self) -> Option<usize> {
        match self.complement().as_slice() {
            [r] => Some(*r),
            _ => None,
        }
    }

    pub fn check_rank(&self, rs: &RootSystem) -> Result<()> {
        if self.rank != rs.rank() {
            return Err(Error::RankMismatch {
                expected: rs.rank(),
                found: self.rank,
            });
        }
        Ok(())
    }

    /// Generators `s_i, i ∈ S` of `W_L`.
    pub fn generators(&self, rs: &RootSystem) -> Result<Vec<WeylElement>> {
        self.check_rank(rs)?;
        self.nodes().map(|i| WeylElement::simple(rs, i)).collect()
    }

    /// All of `W_L`.
    pub fn levi_weyl_group(&self, rs: &RootSystem) -> Result<Vec<WeylElement>> {
        self.check_rank(rs)?;
        let g = rs.weyl_group();
        Ok(g.elements()
            .iter()
            .enumerate()
            .filter(|(k, _)| g.reduced_word_of(*k).iter().all(|i| self.contains(*i)))
            .map(|(_, w)| w.clone())
            .collect())
    }

    /// True when `w(α_i) > 0` for all `i ∈ S`.
    pub fn is_minimal_rep(&self, w: &WeylElement) -> bool {
        self.nodes().all(|i| !w.has_right_descent(i))
    }
}

impl fmt::Display for ParabolicSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.nodes.is_empty() {
            return f.write_str("borel");
        }
        if let Some(r) = self.maximal_index() {
            return write!(f, "maximal:{r}");
        }
        let list: Vec<String> = self.nodes.iter().map(|i| i.to_string()).collect();
        write!(f, "levi:{}", list.join(","))
    }
}

/// `W^P`: one shortest element per coset `wW_L`, sorted by length then
/// images.
pub fn minimal_coset_reps(rs: &RootSystem, s: &ParabolicSubset) -> Result<Vec<WeylElement>> {
    s.check_rank(rs)?;
    let g = rs.weyl_group();
    Ok(g.elements()
        .iter()
        .filter(|w| s.is_minimal_rep(w))
        .cloned()
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_root_system, Family};

    #[test]
    fn grassmannian_cells() {
        let a3 = build_root_system(Family::A, 3).unwrap();
        let s = ParabolicSubset::levi(3, &[1, 3]).unwrap();
        assert_eq!(s, ParabolicSubset::maximal(3, 2).unwrap());
        assert_eq!(minimal_coset_reps(&a3, &s).unwrap().len(), 6);
    }

    #[test]
    fn full_subset_gives_identity_only() {
        let c3 = build_root_system(Family::C, 3).unwrap();
        let reps = minimal_coset_reps(&c3, &ParabolicSubset::full(3)).unwrap();
        assert_eq!(reps.len(), 1);
        assert!(reps[0].is_identity());
    }

    #[test]
    fn c2_cosets_of_short_reflection() {
        let c2 = build_root_system(Family::C, 2).unwrap();
        let s = ParabolicSubset::levi(2, &[2]).unwrap();
        let reps = minimal_coset_reps(&c2, &s).unwrap();
        let lengths: Vec<usize> = reps.iter().map(|w| w.length()).collect();
        assert_eq!(lengths, vec![0, 1, 2, 3]);
    }

    #[test]
    fn borel_reps_are_the_whole_group() {
        for (f, n, order) in [
            (Family::C, 2, 8),
            (Family::B, 3, 48),
            (Family::C, 3, 48),
            (Family::D, 4, 192),
        ] {
            let rs = build_root_system(f, n).unwrap();
            let reps = minimal_coset_reps(&rs, &ParabolicSubset::borel(n)).unwrap();
            assert_eq!(reps.len(), order);
        }
    }

    #[test]
    fn reps_ascend_on_levi_reflections() {
        for (f, n) in [(Family::A, 3), (Family::B, 3), (Family::D, 4)] {
            let rs = build_root_system(f, n).unwrap();
            for r in 1..=n {
                let s = ParabolicSubset::maximal(n, r).unwrap();
                let reps = minimal_coset_reps(&rs, &s).unwrap();
                let levi = s.levi_weyl_group(&rs).unwrap();
                assert_eq!(reps.len() * levi.len(), rs.weyl_group().len());
                for w in &reps {
                    for i in s.nodes() {
                        let ws = w * &WeylElement::simple(&rs, i).unwrap();
                        assert!(ws.length() > w.length());
                    }
                }
            }
        }
    }

    #[test]
    fn parse_and_display() {
        for text in ["borel", "maximal:2", "levi:1,3,4"] {
            let s = ParabolicSubset::parse(text, 5).unwrap();
            assert_eq!(s.to_string(), text);
        }
        assert_eq!(
            ParabolicSubset::parse("levi:1,3", 3).unwrap().to_string(),
            "maximal:2"
        );
        assert!(ParabolicSubset::parse("maximal:0", 3).is_err());
        assert!(ParabolicSubset::parse("levi:4", 3).is_err());
        assert!(ParabolicSubset::parse("parabolic", 3).is_err());
    }
}
