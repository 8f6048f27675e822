//! Classical root systems in Bourbaki coordinates.
//!
//! Roots live in `Z^N` with the standard inner product, `N = n+1` for type
//! `A_n` and `N = n` otherwise. Type A carries the full `GL_{n+1}` torus:
//! the fundamental weights are the representatives `ω_i = x_1 + ... + x_i`,
//! which pair correctly with every coroot.

mod parabolic;
mod weyl;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactpoly::{rat, ratio, Rational};

pub use parabolic::{minimal_coset_reps, ParabolicSubset};
pub(crate) use weyl::word_to_string;
pub use weyl::{apply, WeylAction, WeylElement, WeylGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        };
        f.write_str(c)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::Parse {
                pos: 0,
                msg: format!("unknown family {other:?}, expected one of A, B, C, D"),
            }),
        }
    }
}

#[derive(Debug)]
struct Inner {
    family: Family,
    rank: usize,
    dim: usize,
    simple_roots: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
    fundamental_weights: Vec<Vec<Rational>>,
    simple_coroots: Vec<Vec<Rational>>,
    simple_reflections: Vec<Vec<i32>>,
}

/// A classical root system. Cheap to clone; equality is by type and rank.
#[derive(Clone)]
pub struct RootSystem(Arc<Inner>);

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.0.family == other.0.family && self.0.rank == other.0.rank
    }
}

impl Eq for RootSystem {}

impl std::hash::Hash for RootSystem {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.family.hash(state);
        self.0.rank.hash(state);
    }
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.0.family, self.0.rank)
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.0.family, self.0.rank)
    }
}

/// Root system of the given type and rank, within the usual bounds
/// (`A_n` for n ≥ 1, `B_n`/`C_n` for n ≥ 2, `D_n` for n ≥ 3).
pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    let min = match family {
        Family::A => 1,
        Family::B | Family::C => 2,
        Family::D => 3,
    };
    if rank < min {
        return Err(Error::UnsupportedRank { family, rank });
    }
    RootSystem::extended(family, rank)
}

fn unit(dim: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = 1;
    v
}

fn combine(a: &[i64], b: &[i64], sign: i64) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + sign * y).collect()
}

pub(crate) fn dot_ii(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn dot_qi(a: &[Rational], b: &[i64]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(_, y)| **y != 0)
        .map(|(x, y)| x * rat(*y))
        .sum()
}

/// A vector is positive when its first nonzero coordinate is.
pub fn is_positive(v: &[i64]) -> bool {
    v.iter().find(|x| **x != 0).is_some_and(|x| *x > 0)
}

impl RootSystem {
    /// Like [`build_root_system`] but also admits the small cases `B_1`,
    /// `C_1` and `D_2` that appear as blocks of Levi subgroups.
    pub fn extended(family: Family, rank: usize) -> Result<RootSystem> {
        let min = match family {
            Family::D => 2,
            _ => 1,
        };
        if rank < min || rank > 12 {
            return Err(Error::UnsupportedRank { family, rank });
        }
        static CACHE: OnceLock<Mutex<HashMap<(Family, usize), RootSystem>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(rs) = cache.lock().unwrap().get(&(family, rank)) {
            return Ok(rs.clone());
        }
        let rs = RootSystem(Arc::new(Self::construct(family, rank)));
        cache
            .lock()
            .unwrap()
            .entry((family, rank))
            .or_insert(rs.clone());
        Ok(rs)
    }

    fn construct(family: Family, n: usize) -> Inner {
        let dim = if family == Family::A { n + 1 } else { n };
        let e = |i: usize| unit(dim, i);
        let mut simple_roots: Vec<Vec<i64>> = (0..n.min(dim - 1))
            .map(|i| combine(&e(i), &e(i + 1), -1))
            .collect();
        match family {
            Family::A => {}
            Family::B => simple_roots.push(e(n - 1)),
            Family::C => simple_roots.push(combine(&e(n - 1), &e(n - 1), 1)),
            Family::D => simple_roots.push(combine(&e(n - 2), &e(n - 1), 1)),
        }
        let mut positive_roots = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                positive_roots.push(combine(&e(i), &e(j), -1));
                if family != Family::A {
                    positive_roots.push(combine(&e(i), &e(j), 1));
                }
            }
            match family {
                Family::B => positive_roots.push(e(i)),
                Family::C => positive_roots.push(combine(&e(i), &e(i), 1)),
                _ => {}
            }
        }
        positive_roots.sort_by(|a, b| b.cmp(a));

        let prefix = |i: usize| -> Vec<Rational> {
            (0..dim)
                .map(|k| if k < i { rat(1) } else { Rational::zero() })
                .collect()
        };
        let half = |signs: &dyn Fn(usize) -> i64| -> Vec<Rational> {
            (0..dim).map(|k| ratio(signs(k), 2)).collect()
        };
        let fundamental_weights: Vec<Vec<Rational>> = (1..=n)
            .map(|i| match family {
                Family::A | Family::C => prefix(i),
                Family::B if i == n => half(&|_| 1),
                Family::D if i == n => half(&|_| 1),
                Family::D if i == n - 1 => half(&|k| if k == n - 1 { -1 } else { 1 }),
                Family::B | Family::D => prefix(i),
            })
            .collect();
        let simple_coroots = simple_roots.iter().map(|a| coroot(a)).collect();
        let simple_reflections = simple_roots.iter().map(|a| reflection_images(a)).collect();
        Inner {
            family,
            rank: n,
            dim,
            simple_roots,
            positive_roots,
            fundamental_weights,
            simple_coroots,
            simple_reflections,
        }
    }

    pub fn family(&self) -> Family {
        self.0.family
    }

    pub fn rank(&self) -> usize {
        self.0.rank
    }

    /// Number of ambient coordinates.
    pub fn dim(&self) -> usize {
        self.0.dim
    }

    /// `α_i`, 1-based.
    pub fn simple_root(&self, i: usize) -> &[i64] {
        &self.0.simple_roots[i - 1]
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.0.simple_roots
    }

    pub fn simple_coroot(&self, i: usize) -> &[Rational] {
        &self.0.simple_coroots[i - 1]
    }

    /// `ω_i`, 1-based.
    pub fn fundamental_weight(&self, i: usize) -> &[Rational] {
        &self.0.fundamental_weights[i - 1]
    }

    pub fn fundamental_weights(&self) -> &[Vec<Rational>] {
        &self.0.fundamental_weights
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.0.positive_roots
    }

    pub(crate) fn simple_reflection_images(&self, i: usize) -> &[i32] {
        &self.0.simple_reflections[i - 1]
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            return Err(Error::BadIndex {
                index: i,
                max: self.rank(),
            });
        }
        Ok(())
    }

    /// `⟨v, β^∨⟩ = 2(v, β)/(β, β)`.
    pub fn pairing(&self, v: &[Rational], beta: &[i64]) -> Rational {
        dot_qi(v, beta) * rat(2) / rat(dot_ii(beta, beta))
    }

    /// Cartan integer `⟨α_i, α_j^∨⟩`.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        let ai = self.simple_root(i);
        let aj = self.simple_root(j);
        2 * dot_ii(ai, aj) / dot_ii(aj, aj)
    }

    /// Order of `s_i s_j`.
    pub fn braid_order(&self, i: usize, j: usize) -> usize {
        if i == j {
            return 1;
        }
        match self.cartan(i, j) * self.cartan(j, i) {
            0 => 2,
            1 => 3,
            2 => 4,
            _ => 6,
        }
    }

    /// Sum of the fundamental weights.
    pub fn rho(&self) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for w in self.fundamental_weights() {
            for (o, x) in out.iter_mut().zip(w) {
                *o += x;
            }
        }
        out
    }

    /// Linear combination `Σ c_i ω_i` in ambient coordinates.
    pub fn weight_from_fundamental(&self, coeffs: &[i64]) -> Result<Vec<Rational>> {
        if coeffs.len() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: coeffs.len(),
            });
        }
        let mut out = vec![Rational::zero(); self.dim()];
        for (c, w) in coeffs.iter().zip(self.fundamental_weights()) {
            for (o, x) in out.iter_mut().zip(w) {
                *o += x * rat(*c);
            }
        }
        Ok(out)
    }

    /// Coordinates `⟨v, α_i^∨⟩` of `v` against the simple coroots.
    pub fn to_fundamental(&self, v: &[Rational]) -> Vec<Rational> {
        self.simple_roots()
            .iter()
            .map(|a| self.pairing(v, a))
            .collect()
    }

    pub fn is_dominant(&self, v: &[Rational]) -> bool {
        self.simple_roots()
            .iter()
            .all(|a| !self.pairing(v, a).is_negative())
    }

    pub fn weyl_group(&self) -> Arc<WeylGroup> {
        WeylGroup::of(self)
    }
}

pub(crate) fn coroot(beta: &[i64]) -> Vec<Rational> {
    let n2 = dot_ii(beta, beta);
    beta.iter().map(|b| rat(2 * b) / rat(n2)).collect()
}

/// Signed one-line images of the reflection in `β`.
pub(crate) fn reflection_images(beta: &[i64]) -> Vec<i32> {
    let dim = beta.len();
    let n2 = dot_ii(beta, beta);
    (0..dim)
        .map(|k| {
            // s_β(e_k) = e_k - (2β_k/(β,β)) β
            let f = 2 * beta[k];
            let mut img: Vec<i64> = unit(dim, k).iter().map(|x| x * n2).collect();
            for (x, b) in img.iter_mut().zip(beta) {
                *x -= f * b;
            }
            let (pos, val) = img
                .iter()
                .enumerate()
                .find(|(_, x)| **x != 0)
                .expect("reflection of a basis vector is nonzero");
            debug_assert_eq!(val.abs(), n2);
            debug_assert_eq!(img.iter().filter(|x| **x != 0).count(), 1);
            (pos as i32 + 1) * val.signum() as i32
        })
        .collect()
}
