//! Weight multiplicities of irreducible representations (Freudenthal).

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exactpoly::{rat, LaurentPoly, Rational};
use crate::rootdata::{dot_ii, Family, RootSystem};

/// All weights of `V(λ)` with multiplicities, in ambient coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightSystem {
    rs: RootSystem,
    highest: Vec<i64>,
    weights: BTreeMap<Vec<i64>, u64>,
}

impl WeightSystem {
    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn highest_weight(&self) -> &[i64] {
        &self.highest
    }

    pub fn weights(&self) -> &BTreeMap<Vec<i64>, u64> {
        &self.weights
    }

    pub fn multiplicity(&self, mu: &[i64]) -> u64 {
        self.weights.get(mu).copied().unwrap_or(0)
    }

    pub fn dimension(&self) -> u64 {
        self.weights.values().sum()
    }

    /// `Σ m_μ t^μ`.
    pub fn character_poly(&self) -> LaurentPoly {
        let n = self.rs.dim();
        LaurentPoly::from_terms(
            n,
            self.weights
                .iter()
                .map(|(mu, m)| (mu.iter().map(|x| *x as i32).collect(), rat(*m as i64))),
        )
    }
}

/// Ambient coordinates of a lattice weight; `NotInLattice` when a
/// coordinate is fractional (spin weights of types B and D).
pub fn integral_weight(rs: &RootSystem, lambda: &[Rational]) -> Result<Vec<i64>> {
    if lambda.len() != rs.dim() {
        return Err(Error::RankMismatch {
            expected: rs.dim(),
            found: lambda.len(),
        });
    }
    lambda
        .iter()
        .map(|x| {
            if x.is_integer() {
                x.to_integer()
                    .to_i64()
                    .ok_or_else(|| Error::NotInLattice(fmt_q(lambda)))
            } else {
                Err(Error::NotInLattice(fmt_q(lambda)))
            }
        })
        .collect()
}

fn fmt_q(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn fmt_i(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

pub(crate) fn is_dominant_int(rs: &RootSystem, v: &[i64]) -> bool {
    rs.simple_roots().iter().all(|a| dot_ii(v, a) >= 0)
}

/// The dominant element of the Weyl orbit of `v`.
pub fn dominant_representative(rs: &RootSystem, v: &[i64]) -> Vec<i64> {
    match rs.family() {
        Family::A => {
            let mut out = v.to_vec();
            out.sort_unstable_by(|a, b| b.cmp(a));
            out
        }
        Family::B | Family::C => {
            let mut out: Vec<i64> = v.iter().map(|x| x.abs()).collect();
            out.sort_unstable_by(|a, b| b.cmp(a));
            out
        }
        Family::D => {
            let negatives = v.iter().filter(|x| **x < 0).count();
            let mut out: Vec<i64> = v.iter().map(|x| x.abs()).collect();
            out.sort_unstable_by(|a, b| b.cmp(a));
            let last = out.len() - 1;
            if negatives % 2 == 1 && out[last] != 0 {
                out[last] = -out[last];
            }
            out
        }
    }
}

/// A vector pairing positively with every simple root.
fn height_vector(rs: &RootSystem) -> Vec<i64> {
    let n = rs.rank() as i64;
    match rs.family() {
        Family::A => (0..=n).rev().collect(),
        Family::B => (1..=n).rev().collect(),
        Family::C => (1..=n).rev().map(|k| 2 * k - 1).collect(),
        Family::D => (0..n).rev().collect(),
    }
}

fn two_rho(rs: &RootSystem) -> Vec<i64> {
    rs.rho()
        .iter()
        .map(|x| (x * rat(2)).to_integer().to_i64().unwrap())
        .collect()
}

fn add(a: &[i64], b: &[i64], k: i64) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + k * y).collect()
}

/// Weyl dimension formula `Π (λ+ρ, α)/(ρ, α)`.
pub fn weyl_dimension(rs: &RootSystem, lambda: &[i64]) -> Rational {
    let r2 = two_rho(rs);
    let l2 = add(&r2, lambda, 2);
    rs.positive_roots()
        .iter()
        .map(|a| rat(dot_ii(&l2, a)) / rat(dot_ii(&r2, a)))
        .product()
}

fn orbit(rs: &RootSystem, v: &[i64]) -> Vec<Vec<i64>> {
    let mut seen: HashSet<Vec<i64>> = HashSet::from([v.to_vec()]);
    let mut queue = VecDeque::from([v.to_vec()]);
    let mut out = Vec::new();
    while let Some(u) = queue.pop_front() {
        for a in rs.simple_roots() {
            let p = dot_ii(&u, a);
            if p == 0 {
                continue;
            }
            // s_α(u) = u - (2(u,α)/(α,α)) α
            let k = 2 * p / dot_ii(a, a);
            let r = add(&u, a, -k);
            if seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
        out.push(u);
    }
    out
}

/// Weight system of the irreducible representation with highest weight
/// `λ` (ambient coordinates).
pub fn weight_system(rs: &RootSystem, lambda: &[Rational]) -> Result<WeightSystem> {
    let lam = integral_weight(rs, lambda)?;
    weight_system_int(rs, &lam).map(|w| (*w).clone())
}

/// Same as [`weight_system`] for `λ = Σ c_i ω_i`.
pub fn weight_system_fundamental(rs: &RootSystem, coeffs: &[i64]) -> Result<WeightSystem> {
    if coeffs.iter().any(|c| *c < 0) {
        return Err(Error::NotDominant(format!(
            "{coeffs:?} in fundamental weights"
        )));
    }
    weight_system(rs, &rs.weight_from_fundamental(coeffs)?)
}

pub(crate) fn weight_system_int(rs: &RootSystem, lam: &[i64]) -> Result<Arc<WeightSystem>> {
    if lam.len() != rs.dim() {
        return Err(Error::RankMismatch {
            expected: rs.dim(),
            found: lam.len(),
        });
    }
    if !is_dominant_int(rs, lam) {
        return Err(Error::NotDominant(fmt_i(lam)));
    }
    type Key = (Family, usize, Vec<i64>);
    static CACHE: OnceLock<Mutex<HashMap<Key, Arc<WeightSystem>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (rs.family(), rs.rank(), lam.to_vec());
    if let Some(ws) = cache.lock().unwrap().get(&key) {
        return Ok(ws.clone());
    }
    let ws = Arc::new(freudenthal(rs, lam));
    cache.lock().unwrap().insert(key, ws.clone());
    Ok(ws)
}

fn freudenthal(rs: &RootSystem, lam: &[i64]) -> WeightSystem {
    let roots = rs.positive_roots();
    // dominant weights below λ, reached by subtracting positive roots
    let mut dominant: HashSet<Vec<i64>> = HashSet::from([lam.to_vec()]);
    let mut queue = VecDeque::from([lam.to_vec()]);
    while let Some(mu) = queue.pop_front() {
        for a in roots {
            let nu = add(&mu, a, -1);
            if is_dominant_int(rs, &nu) && dominant.insert(nu.clone()) {
                queue.push_back(nu);
            }
        }
    }
    let h = height_vector(rs);
    let mut order: Vec<Vec<i64>> = dominant.into_iter().collect();
    order.sort_by_key(|mu| (dot_ii(&add(lam, mu, -1), &h), std::cmp::Reverse(mu.clone())));

    let r2 = two_rho(rs);
    let lam_shift = add(lam, &r2, 1);
    let mut mult: HashMap<Vec<i64>, i128> = HashMap::new();
    for mu in order {
        if mu == lam {
            mult.insert(mu, 1);
            continue;
        }
        let mut num: i128 = 0;
        for a in roots {
            let mut k = 1;
            loop {
                let nu = add(&mu, a, k);
                let m = mult
                    .get(&dominant_representative(rs, &nu))
                    .copied()
                    .unwrap_or(0);
                if m == 0 {
                    break;
                }
                num += m * dot_ii(&nu, a) as i128;
                k += 1;
            }
        }
        // (λ+ρ,λ+ρ) - (μ+ρ,μ+ρ) = (λ-μ, λ+μ+2ρ)
        let den = dot_ii(&add(lam, &mu, -1), &add(&lam_shift, &mu, 1)) as i128;
        assert!(
            den > 0 && (2 * num) % den == 0,
            "Freudenthal recursion is not integral"
        );
        let m = 2 * num / den;
        if m > 0 {
            mult.insert(mu, m);
        }
    }
    let mut weights = BTreeMap::new();
    for (mu, m) in &mult {
        for v in orbit(rs, mu) {
            weights.insert(v, *m as u64);
        }
    }
    let ws = WeightSystem {
        rs: rs.clone(),
        highest: lam.to_vec(),
        weights,
    };
    assert_eq!(
        rat(ws.dimension() as i64),
        weyl_dimension(rs, lam),
        "weight multiplicities disagree with the Weyl dimension formula"
    );
    ws
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{parse_poly, ratio};
    use crate::rootdata::{build_root_system, WeylElement};

    #[test]
    fn defining_rep_of_c2() {
        let rs = build_root_system(Family::C, 2).unwrap();
        let ws = weight_system_fundamental(&rs, &[1, 0]).unwrap();
        assert_eq!(ws.dimension(), 4);
        assert!(ws.weights().values().all(|m| *m == 1));
        let expected: LaurentPoly = parse_poly("t1 + t2 + t2^-1 + t1^-1", 't', Some(2)).unwrap();
        assert_eq!(ws.character_poly(), expected);
    }

    #[test]
    fn adjoint_of_a1() {
        let rs = build_root_system(Family::A, 1).unwrap();
        let ws = weight_system_fundamental(&rs, &[2]).unwrap();
        assert_eq!(ws.dimension(), 3);
        assert_eq!(ws.weights().len(), 3);
        assert_eq!(ws.multiplicity(&[1, 1]), 1);
    }

    #[test]
    fn d2_square_of_spin_weight() {
        let rs = RootSystem::extended(Family::D, 2).unwrap();
        let ws = weight_system_fundamental(&rs, &[0, 2]).unwrap();
        let expected: LaurentPoly = parse_poly("t1*t2 + 1 + t1^-1*t2^-1", 't', Some(2)).unwrap();
        assert_eq!(ws.character_poly(), expected);
    }

    #[test]
    fn rejects_bad_weights() {
        let b2 = build_root_system(Family::B, 2).unwrap();
        assert!(matches!(
            weight_system_fundamental(&b2, &[0, 1]),
            Err(Error::NotInLattice(_))
        ));
        let c2 = build_root_system(Family::C, 2).unwrap();
        assert!(matches!(
            weight_system(&c2, &[rat(0), rat(1)]),
            Err(Error::NotDominant(_))
        ));
        assert!(matches!(
            weight_system(&c2, &[ratio(1, 2), rat(0)]),
            Err(Error::NotInLattice(_))
        ));
    }

    #[test]
    fn adjoint_representations() {
        // adjoint = rank zero weights plus the roots
        for (f, n, coeffs) in [
            (Family::B, 3, vec![0, 1, 0]),
            (Family::C, 3, vec![2, 0, 0]),
            (Family::D, 4, vec![0, 1, 0, 0]),
        ] {
            let rs = build_root_system(f, n).unwrap();
            let ws = weight_system_fundamental(&rs, &coeffs).unwrap();
            assert_eq!(ws.multiplicity(&vec![0; n]), n as u64);
            assert_eq!(ws.dimension() as usize, n + 2 * rs.positive_roots().len());
        }
    }

    #[test]
    fn multiplicities_are_weyl_invariant() {
        for (f, n) in [
            (Family::A, 2),
            (Family::B, 2),
            (Family::C, 3),
            (Family::D, 4),
        ] {
            let rs = build_root_system(f, n).unwrap();
            let g = rs.weyl_group();
            let mut coeffs = vec![0i64; n];
            loop {
                if let Ok(ws) = weight_system_fundamental(&rs, &coeffs) {
                    assert_eq!(
                        rat(ws.dimension() as i64),
                        weyl_dimension(&rs, ws.highest_weight())
                    );
                    for w in g.elements().iter().step_by(7) {
                        for (mu, m) in ws.weights() {
                            let v = w.apply_coords(mu);
                            assert_eq!(ws.multiplicity(&v), *m);
                        }
                    }
                    let _ = WeylElement::identity(&rs);
                }
                // next coefficient vector in {0,1,2}^n
                let mut i = 0;
                while i < n && coeffs[i] == 2 {
                    coeffs[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
                coeffs[i] += 1;
            }
        }
    }
}
