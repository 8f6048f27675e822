//! The map `ξ^P = β^P ∘ (θ*)^{-1}` from λ-polynomial characters of a Levi
//! subgroup to the cohomology of `G/P`, and suites that check its explicit
//! values.

mod report;
mod suites;

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::exactpoly::{elementary_symmetric, rat, ExactPoly, LaurentPoly, Rational};
use crate::repring::{poly_membership, springer_pullback, Character};
use crate::rootdata::{Family, ParabolicSubset, RootSystem, WeylElement};
use crate::schubert::{borel_expand, cup_product, SchubertCombination};

pub use report::{Claim, Side, VerificationReport};
pub use suites::{
    diagram_test_characters, lambda_witness_string, verify_borel_anchor, verify_cayley_agreement,
    verify_commutative_diagram, verify_lambda_generation, verify_lemma_so, verify_lr_products,
    verify_negative_irreps, verify_properties, verify_proposition, verify_springer_examples,
    verify_surjectivity, verify_theorem3, PropertyConfig,
};

/// `G`, a standard parabolic `P ⊇ B` and the representation `V(ω_1)` that
/// defines the Springer morphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiContext {
    rs: RootSystem,
    parabolic: ParabolicSubset,
}

impl XiContext {
    pub fn new(rs: &RootSystem, parabolic: &ParabolicSubset) -> Result<Self> {
        parabolic.check_rank(rs)?;
        Ok(XiContext {
            rs: rs.clone(),
            parabolic: parabolic.clone(),
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn parabolic(&self) -> &ParabolicSubset {
        &self.parabolic
    }

    /// Always `ω_1`.
    pub fn lambda(&self) -> &[Rational] {
        self.rs.fundamental_weight(1)
    }

    /// Tags a Laurent polynomial as a character of this Levi.
    pub fn character(&self, poly: LaurentPoly) -> Result<Character> {
        Character::new(&self.rs, &self.parabolic, poly)
    }
}

/// `ξ^P(χ)`: finds the preimage of `χ` under the torus restriction of the
/// Springer morphism and applies `β^P`.
pub fn xi(ctx: &XiContext, chi: &Character) -> Result<SchubertCombination> {
    if chi.root_system() != &ctx.rs {
        return Err(Error::TagMismatch);
    }
    let chi = ctx.character(chi.poly().clone())?;
    let m = poly_membership(&chi);
    let f = m.preimage.ok_or_else(|| Error::NotPolynomialCharacter {
        witness: m.witness.map(|w| w.to_string()).unwrap_or_default(),
    })?;
    borel_expand(&f, &ctx.rs, &ctx.parabolic)
}

/// [`xi`] on a bare Laurent polynomial.
pub fn xi_poly(ctx: &XiContext, poly: &LaurentPoly) -> Result<SchubertCombination> {
    xi(ctx, &ctx.character(poly.clone())?)
}

fn check_partition(lambda: &[i64], r: usize) -> Result<()> {
    if lambda.len() != r {
        return Err(Error::BadPartition(format!(
            "{lambda:?} must have exactly {r} parts"
        )));
    }
    if lambda.iter().any(|x| *x < 0) || lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::BadPartition(format!(
            "{lambda:?} is not weakly decreasing and nonnegative"
        )));
    }
    Ok(())
}

/// The classical map on `Rep_poly(GL_r)`: `[V(λ)] ↦ ε_{v_{A(λ)}}` on
/// `Gr(r, n)`, or 0 when `λ_1 > n - r`.
pub fn classical_xi_gl(lambda: &[i64], r: usize, n: usize) -> Result<SchubertCombination> {
    if r == 0 || r >= n {
        return Err(Error::OutOfStatedRange(format!(
            "need 1 ≤ r ≤ n-1, got r={r}, n={n}"
        )));
    }
    check_partition(lambda, r)?;
    let rs = crate::rootdata::build_root_system(Family::A, n - 1)?;
    let p = ParabolicSubset::maximal(n - 1, r)?;
    if lambda[0] > (n - r) as i64 {
        return SchubertCombination::zero(&rs, &p);
    }
    // A(λ) = (1 + λ_r < 2 + λ_{r-1} < … < r + λ_1)
    let a: Vec<i32> = (0..r)
        .map(|i| (i + 1) as i32 + lambda[r - 1 - i] as i32)
        .collect();
    let rest = (1..=n as i32).filter(|x| !a.contains(x));
    let images: Vec<i32> = a.iter().copied().chain(rest).collect();
    let w = WeylElement::from_images(&rs, images)?;
    SchubertCombination::class(&rs, &p, &w)
}

/// One generator of the λ-polynomial character ring of a Levi: the
/// preimage polynomial in `x` and its character.
#[derive(Clone, Debug, PartialEq)]
pub struct LeviGenerator {
    pub preimage: ExactPoly,
    pub character: Character,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum BlockKind {
    /// A `GL` factor; `twisted` when the last coordinate enters as `-x`.
    Linear { twisted: bool },
    /// The `Sp`/`SO` factor carrying the last simple root.
    Classical,
}

/// Coordinate blocks of the Levi `L` (0-based coordinates).
fn levi_blocks(rs: &RootSystem, s: &ParabolicSubset) -> Vec<(Vec<usize>, BlockKind)> {
    let n = rs.rank();
    let dim = rs.dim();
    let mut parent: Vec<usize> = (0..dim).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        if p[i] != i {
            let r = find(p, p[i]);
            p[i] = r;
        }
        p[i]
    }
    let link = |p: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(p, a), find(p, b));
        p[ra.max(rb)] = ra.min(rb);
    };
    let linear_nodes = if rs.family() == Family::A { n } else { n - 1 };
    for i in s.nodes().filter(|i| *i <= linear_nodes) {
        link(&mut parent, i - 1, i);
    }
    let mut classical = false;
    let mut twisted = false;
    if rs.family() != Family::A && s.contains(n) {
        match rs.family() {
            Family::D if !s.contains(n - 1) => {
                link(&mut parent, n - 2, n - 1);
                twisted = true;
            }
            _ => classical = true,
        }
    }
    let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for c in 0..dim {
        let r = find(&mut parent, c);
        blocks.entry(r).or_default().push(c);
    }
    blocks
        .into_values()
        .map(|coords| {
            let last = rs.family() != Family::A && coords.contains(&(n - 1));
            let kind = if last && classical {
                BlockKind::Classical
            } else {
                BlockKind::Linear {
                    twisted: last && twisted,
                }
            };
            (coords, kind)
        })
        .collect()
}

/// Generators of the preimage ring `S(t*)^{W_L}`, one family per block of
/// the Levi: elementary symmetric functions of the block coordinates for a
/// `GL` factor, of their squares for an `Sp`/`SO` factor, plus the product
/// of the coordinates for an even orthogonal factor.
pub fn levi_generators(rs: &RootSystem, s: &ParabolicSubset) -> Result<Vec<LeviGenerator>> {
    s.check_rank(rs)?;
    let dim = rs.dim();
    let mut out = Vec::new();
    for (coords, kind) in levi_blocks(rs, s) {
        let m = coords.len();
        let var = |c: usize, twisted: bool| {
            let x = ExactPoly::var(dim, c);
            if twisted && c == rs.rank() - 1 {
                -x
            } else {
                x
            }
        };
        let polys: Vec<ExactPoly> = match kind {
            BlockKind::Linear { twisted } => {
                let u: Vec<ExactPoly> = coords.iter().map(|c| var(*c, twisted)).collect();
                (1..=m)
                    .map(|k| elementary_in(k, &u))
                    .collect::<Result<_>>()?
            }
            BlockKind::Classical => {
                let sq: Vec<ExactPoly> = coords.iter().map(|c| var(*c, false).pow(2)).collect();
                let top = if rs.family() == Family::D { m - 1 } else { m };
                let mut v: Vec<ExactPoly> = (1..=top)
                    .map(|k| elementary_in(k, &sq))
                    .collect::<Result<_>>()?;
                if rs.family() == Family::D {
                    v.push(
                        coords
                            .iter()
                            .fold(ExactPoly::one(dim), |acc, c| &acc * &var(*c, false)),
                    );
                }
                v
            }
        };
        for f in polys {
            let poly = springer_pullback(rs.family(), &f)?;
            out.push(LeviGenerator {
                character: Character::new(rs, s, poly)?,
                preimage: f,
            });
        }
    }
    Ok(out)
}

/// `e_k(u_1, …, u_m)` for arbitrary polynomials `u_i`.
fn elementary_in(k: usize, u: &[ExactPoly]) -> Result<ExactPoly> {
    let e = elementary_symmetric(k, &(0..u.len()).collect::<Vec<_>>(), u.len())?;
    e.substitute(u)
}

/// The statements that [`verify_proposition`] checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Proposition {
    /// `Sp_{2n}`, maximal parabolic `P_r`.
    Symplectic,
    /// `SO_{2n+1}`, maximal parabolic `P_r`.
    OddOrthogonal,
    /// `SO_{2n}`, maximal parabolic `P_r` with `r ≤ n-2`.
    EvenOrthogonal,
    /// `SO_{2n}`, `r = n` and, through the diagram automorphism, `r = n-1`.
    EvenOrthogonalTop,
    /// Any classical family and `P = B`.
    Borel(Family),
}

impl Proposition {
    pub fn family(&self) -> Family {
        match self {
            Proposition::Symplectic => Family::C,
            Proposition::OddOrthogonal => Family::B,
            Proposition::EvenOrthogonal | Proposition::EvenOrthogonalTop => Family::D,
            Proposition::Borel(f) => *f,
        }
    }

    pub fn name(&self) -> String {
        match self {
            Proposition::Symplectic => "symplectic".into(),
            Proposition::OddOrthogonal => "odd-orthogonal".into(),
            Proposition::EvenOrthogonal => "even-orthogonal".into(),
            Proposition::EvenOrthogonalTop => "even-orthogonal-top".into(),
            Proposition::Borel(f) => format!("borel-{f}"),
        }
    }
}

/// Evaluates a polynomial in the divisor classes `y_j = ε^B_{s_j}` on
/// `G/B`, multiplying with [`cup_product`].
pub fn eval_in_divisors(rs: &RootSystem, p: &ExactPoly) -> Result<SchubertCombination> {
    let n = rs.rank();
    if p.nvars() != n {
        return Err(Error::VariableCountMismatch(n, p.nvars()));
    }
    let b = ParabolicSubset::borel(n);
    let one = SchubertCombination::one(rs, &b)?;
    let divisors: Vec<SchubertCombination> = (1..=n)
        .map(|j| SchubertCombination::from_word(rs, &b, &[j]))
        .collect::<Result<_>>()?;
    let mut memo: HashMap<Vec<u32>, SchubertCombination> = HashMap::new();
    let mut out = SchubertCombination::zero(rs, &b)?;
    for (e, c) in p.terms() {
        let mut acc = one.clone();
        let mut key = vec![0u32; n];
        for (j, k) in e.iter().enumerate() {
            for _ in 0..*k {
                key[j] += 1;
                acc = match memo.get(&key) {
                    Some(v) => v.clone(),
                    None => {
                        let v = cup_product(&acc, &divisors[j])?;
                        memo.insert(key.clone(), v.clone());
                        v
                    }
                };
            }
        }
        out = &out + &acc.scale(c);
    }
    Ok(out)
}

/// `ε_{s_j}` as a variable of [`eval_in_divisors`]; `j = 0` gives 0.
pub fn divisor(n: usize, j: usize) -> ExactPoly {
    if j == 0 {
        ExactPoly::zero(n)
    } else {
        ExactPoly::var(n, j - 1)
    }
}

pub(crate) fn constant(n: usize, c: i64) -> ExactPoly {
    ExactPoly::constant(n, rat(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::parse_poly;
    use crate::rootdata::build_root_system;

    fn lp(s: &str, n: usize) -> LaurentPoly {
        parse_poly(s, 't', Some(n)).unwrap()
    }

    #[test]
    fn xi_examples() {
        let c2 = build_root_system(Family::C, 2).unwrap();
        let p1 = ParabolicSubset::maximal(2, 1).unwrap();
        let ctx = XiContext::new(&c2, &p1).unwrap();
        let got = xi_poly(&ctx, &lp("t1 - t1^-1", 2)).unwrap();
        assert_eq!(got.render(), "2·[s1]");
        assert_eq!(xi_poly(&ctx, &lp("1", 2)).unwrap().render(), "1·[e]");

        let b = XiContext::new(&c2, &ParabolicSubset::borel(2)).unwrap();
        match xi_poly(&b, &lp("t1 + t1^-1", 2)) {
            Err(Error::NotPolynomialCharacter { witness }) => assert_eq!(witness, "2*t1"),
            other => panic!("unexpected {other:?}"),
        }

        let b3 = build_root_system(Family::B, 3).unwrap();
        let ctx = XiContext::new(&b3, &ParabolicSubset::maximal(3, 3).unwrap()).unwrap();
        let got = xi_poly(&ctx, &lp("t1 - t1^-1 + t2 - t2^-1 + t3 - t3^-1", 3)).unwrap();
        assert_eq!(got.render(), "4·[s3]");
    }

    #[test]
    fn classical_map_examples() {
        let got = classical_xi_gl(&[1, 0], 2, 4).unwrap();
        assert_eq!(got.render(), "1·[s2]");
        assert_eq!(classical_xi_gl(&[0, 0], 2, 4).unwrap().render(), "1·[e]");
        assert!(classical_xi_gl(&[3, 0], 2, 4).unwrap().is_zero());
        assert!(matches!(
            classical_xi_gl(&[0, 1], 2, 4),
            Err(Error::BadPartition(_))
        ));
    }

    #[test]
    fn vanishing_rule_on_the_box() {
        for (r, n) in [(1, 3), (2, 4), (2, 5), (3, 5)] {
            let mut parts = vec![0i64; r];
            loop {
                let got = classical_xi_gl(&parts, r, n).unwrap();
                assert_eq!(got.is_zero(), parts[0] > (n - r) as i64);
                // next partition with parts ≤ n - r + 1
                let mut i = r;
                loop {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                    let cap = if i == 0 {
                        (n - r + 1) as i64
                    } else {
                        parts[i - 1]
                    };
                    if parts[i] < cap {
                        parts[i] += 1;
                        for p in parts.iter_mut().skip(i + 1) {
                            *p = 0;
                        }
                        break;
                    }
                    if i == 0 {
                        i = usize::MAX;
                        break;
                    }
                }
                if i == usize::MAX {
                    break;
                }
            }
        }
    }

    #[test]
    fn generators_are_levi_invariant() {
        for (f, n) in [
            (Family::A, 3),
            (Family::B, 3),
            (Family::C, 3),
            (Family::D, 4),
        ] {
            let rs = build_root_system(f, n).unwrap();
            for mask in 0u32..(1 << n) {
                let nodes: Vec<usize> = (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
                let s = ParabolicSubset::levi(n, &nodes).unwrap();
                let gens = levi_generators(&rs, &s).unwrap();
                assert!(!gens.is_empty());
                for g in gens {
                    let m = poly_membership(&g.character);
                    assert_eq!(m.preimage.as_ref(), Some(&g.preimage), "{rs} {s}");
                }
            }
        }
    }
}
