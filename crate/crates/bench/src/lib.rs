//! Inputs shared by the benchmarks.

use levixi::exactpoly::{elementary_symmetric, rat};
use levixi::{
    build_root_system, ExactPoly, Family, LaurentPoly, ParabolicSubset, RootSystem,
    SchubertCombination,
};

pub fn group(family: Family, rank: usize) -> RootSystem {
    build_root_system(family, rank).expect("benchmark groups are in range")
}

/// `Σ e_k(x)` over all `k`, a dense invariant of degree up to the rank.
pub fn symmetric_sum(rs: &RootSystem) -> ExactPoly {
    let n = rs.dim();
    let vars: Vec<usize> = (0..n).collect();
    (1..=n).fold(ExactPoly::zero(n), |acc, k| {
        &acc + &elementary_symmetric(k, &vars, n).expect("k ≤ n")
    })
}

/// `ε_{s_1} + 2ε_{s_2 s_1}` on `G/B`, a small class to multiply.
pub fn sample_class(rs: &RootSystem) -> SchubertCombination {
    let b = ParabolicSubset::borel(rs.rank());
    let one = SchubertCombination::from_word(rs, &b, &[1]).expect("valid word");
    let two = SchubertCombination::from_word(rs, &b, &[2, 1]).expect("valid word");
    &one + &two.scale(&rat(2))
}

/// `Σ (t_i - t_i^{-1})`.
pub fn cayley_sum(n: usize) -> LaurentPoly {
    (0..n).fold(LaurentPoly::zero(n), |acc, i| {
        &acc + &LaurentPoly::cayley_coordinate(n, i)
    })
}
