//! Deciding whether a character lies in the image of `S(t*)^{W_L}` under the
//! torus restriction of the Springer morphism of the defining representation.

use serde::Serialize;

use super::Character;
use crate::error::{Error, Result};
use crate::exactpoly::{cayley_rewrite, rat, ExactPoly, LaurentPoly, Rational};
use crate::rootdata::{Family, ParabolicSubset};

/// Outcome of [`poly_membership`].
///
/// `preimage` is the polynomial `f(x)` with `f((t-t^{-1})/2) = χ` (types
/// B, C, D) or `f(t) = χ` (type A). For the full group of type B, C or D,
/// `f = P_f(x^2) + x_1⋯x_n·Q_f(x^2)` with `Q_f` present only in type D.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MembershipResult {
    pub member: bool,
    #[serde(serialize_with = "ser_opt")]
    pub preimage: Option<ExactPoly>,
    #[serde(rename = "P_f", serialize_with = "ser_opt")]
    pub p_f: Option<ExactPoly>,
    #[serde(rename = "Q_f", serialize_with = "ser_opt")]
    pub q_f: Option<ExactPoly>,
    #[serde(serialize_with = "ser_opt")]
    pub witness: Option<LaurentPoly>,
    /// Whether the preimage has integer coefficients.
    pub integral: bool,
}

fn ser_opt<S, T>(v: &Option<T>, s: S) -> std::result::Result<S::Ok, S::Error>
where
    S: serde::Serializer,
    T: std::fmt::Display,
{
    match v {
        Some(x) => s.serialize_some(&x.to_string()),
        None => s.serialize_none(),
    }
}

impl MembershipResult {
    fn rejected(witness: LaurentPoly) -> Self {
        MembershipResult {
            member: false,
            preimage: None,
            p_f: None,
            q_f: None,
            witness: Some(witness),
            integral: false,
        }
    }
}

/// Membership test for `χ` as a character of its Levi.
pub fn poly_membership(chi: &Character) -> MembershipResult {
    let rs = chi.root_system();
    let n = rs.dim();
    let poly = chi.poly();
    if rs.family() == Family::A {
        // θ is the inclusion: member iff χ is a polynomial in t
        return match poly.try_to_poly() {
            Some(f) => MembershipResult {
                member: true,
                integral: f.coefficients_integral(),
                p_f: None,
                preimage: Some(f),
                q_f: None,
                witness: None,
            },
            None => {
                let neg = LaurentPoly::from_terms(
                    n,
                    poly.terms()
                        .filter(|(e, _)| e.iter().any(|x| *x < 0))
                        .map(|(e, c)| (e.to_vec(), c.clone())),
                );
                MembershipResult::rejected(neg)
            }
        };
    }
    let dec = cayley_rewrite(poly);
    if !dec.is_polynomial() {
        return MembershipResult::rejected(dec.residual_part());
    }
    // s_i = t_i - t_i^{-1} = 2 x_i
    let preimage = dec.principal.map_monomials(n, |e| {
        (e.to_vec(), rat(2).pow(e.iter().sum::<u32>() as i32))
    });
    let integral = preimage.coefficients_integral();
    let (p_f, q_f) = if chi.levi() == &ParabolicSubset::full(rs.rank()) {
        split_in_squares(&preimage, rs.family())
    } else {
        (None, None)
    };
    MembershipResult {
        member: true,
        preimage: Some(preimage),
        p_f,
        q_f,
        witness: None,
        integral,
    }
}

/// Splits a `W`-invariant polynomial into its parts in the squares.
fn split_in_squares(f: &ExactPoly, family: Family) -> (Option<ExactPoly>, Option<ExactPoly>) {
    let n = f.nvars();
    let mut even = ExactPoly::zero(n);
    let mut odd = ExactPoly::zero(n);
    for (e, c) in f.terms() {
        if e.iter().all(|x| x % 2 == 0) {
            even.add_term(e.iter().map(|x| x / 2).collect(), c.clone());
        } else if family == Family::D && e.iter().all(|x| x % 2 == 1) {
            odd.add_term(e.iter().map(|x| x / 2).collect(), c.clone());
        } else {
            unreachable!("W-invariant polynomial has a mixed-parity monomial");
        }
    }
    match family {
        Family::D => (Some(even), Some(odd)),
        _ => (Some(even), None),
    }
}

/// Evaluates the preimage at `x_i = (t_i - t_i^{-1})/2` (types B, C, D) or
/// `x_i = t_i` (type A).
pub fn springer_pullback(family: Family, f: &ExactPoly) -> Result<LaurentPoly> {
    let n = f.nvars();
    let half = Rational::new(1.into(), 2.into());
    let images: Vec<LaurentPoly> = (0..n)
        .map(|i| match family {
            Family::A => LaurentPoly::var(n, i),
            _ => LaurentPoly::cayley_coordinate(n, i).scale(&half),
        })
        .collect();
    f.substitute(&images)
}

/// `P_f(x^2) + x_1⋯x_n·Q_f(x^2)` when the split is present.
pub fn recombine(result: &MembershipResult) -> Option<Result<ExactPoly>> {
    let p = result.p_f.as_ref()?;
    let n = p.nvars();
    let squares: Vec<ExactPoly> = (0..n).map(|i| ExactPoly::var(n, i).pow(2)).collect();
    Some((|| {
        let mut g = p.substitute(&squares)?;
        if let Some(q) = &result.q_f {
            let prod = (0..n).fold(ExactPoly::one(n), |acc, i| &acc * &ExactPoly::var(n, i));
            g = &g + &(&prod * &q.substitute(&squares)?);
        }
        Ok(g)
    })())
}

/// Pulls the preimage back to the torus, after checking it against the
/// `P_f`/`Q_f` split.
pub fn resubstitute(family: Family, result: &MembershipResult) -> Result<LaurentPoly> {
    let f = result
        .preimage
        .as_ref()
        .ok_or_else(|| Error::NotPolynomialCharacter {
            witness: result
                .witness
                .as_ref()
                .map(|w| w.to_string())
                .unwrap_or_default(),
        })?;
    if let Some(g) = recombine(result) {
        if g? != *f {
            return Err(Error::InvalidElement(format!(
                "P_f/Q_f split does not reassemble to {f}"
            )));
        }
    }
    springer_pullback(family, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::parse_poly;
    use crate::repring::{character, weight_system_fundamental};
    use crate::rootdata::{build_root_system, RootSystem};

    fn lp(s: &str, n: usize) -> LaurentPoly {
        parse_poly(s, 't', Some(n)).unwrap()
    }

    fn xp(s: &str, n: usize) -> ExactPoly {
        parse_poly(s, 'x', Some(n)).unwrap()
    }

    #[test]
    fn rank_one_symplectic() {
        let c1 = RootSystem::extended(Family::C, 1).unwrap();
        let chi = Character::of_group(&c1, lp("t1^2 + t1^-2", 1)).unwrap();
        let m = poly_membership(&chi);
        assert!(m.member && m.integral);
        assert_eq!(m.p_f, Some(xp("4*x1 + 2", 1)));
        assert_eq!(resubstitute(Family::C, &m).unwrap(), *chi.poly());

        let chi = Character::of_group(&c1, lp("t1 + t1^-1", 1)).unwrap();
        let m = poly_membership(&chi);
        assert!(!m.member);
        assert_eq!(m.witness, Some(lp("2*t1", 1)));
    }

    #[test]
    fn type_d_product_is_odd_part() {
        let d4 = build_root_system(Family::D, 4).unwrap();
        let prod = (0..4).fold(LaurentPoly::one(4), |acc, i| {
            &acc * &LaurentPoly::cayley_coordinate(4, i)
        });
        let chi =
            Character::of_group(&d4, prod.scale(&Rational::new(1.into(), 16.into()))).unwrap();
        let m = poly_membership(&chi);
        assert!(m.member);
        assert_eq!(m.p_f, Some(ExactPoly::zero(4)));
        assert_eq!(m.q_f, Some(ExactPoly::one(4)));
        assert_eq!(resubstitute(Family::D, &m).unwrap(), *chi.poly());
    }

    #[test]
    fn defining_reps_are_not_members() {
        for (f, n) in [(Family::B, 2), (Family::C, 3), (Family::D, 4)] {
            let rs = build_root_system(f, n).unwrap();
            let chi = character(&weight_system_fundamental(&rs, &[1, 0, 0, 0][..n]).unwrap());
            assert!(!poly_membership(&chi).member);
            let psi = crate::repring::adams(2, &chi);
            let m = poly_membership(&psi);
            assert!(m.member, "{rs}");
            assert_eq!(resubstitute(f, &m).unwrap(), *psi.poly());
        }
    }

    #[test]
    fn levi_blocks_accept_odd_cayley_polynomials() {
        let c2 = build_root_system(Family::C, 2).unwrap();
        let p1 = ParabolicSubset::maximal(2, 1).unwrap();
        let chi = Character::new(&c2, &p1, lp("t1 - t1^-1", 2)).unwrap();
        let m = poly_membership(&chi);
        assert!(m.member);
        assert_eq!(m.preimage, Some(xp("2*x1", 2)));
    }

    #[test]
    fn type_a_inclusion() {
        let a2 = build_root_system(Family::A, 2).unwrap();
        let chi = Character::of_group(&a2, lp("t1 + t2 + t3", 3)).unwrap();
        let m = poly_membership(&chi);
        assert_eq!(m.preimage, Some(xp("x1 + x2 + x3", 3)));
        let dual = Character::of_group(&a2, lp("t1^-1 + t2^-1 + t3^-1", 3)).unwrap();
        assert!(!poly_membership(&dual).member);
    }
}
