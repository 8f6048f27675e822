//! Characters of Levi subgroups restricted to the maximal torus.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactpoly::{LaurentPoly, Rational};
use crate::rootdata::{Family, ParabolicSubset, RootSystem};

use super::weights::WeightSystem;

/// A `W_L`-invariant Laurent polynomial in `t_1..t_N`, tagged with the
/// root system of `G` and the Levi `L` it is a (virtual) character of.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    rs: RootSystem,
    levi: ParabolicSubset,
    poly: LaurentPoly,
}

impl Character {
    /// Checks invariance under the simple reflections of `L`.
    pub fn new(rs: &RootSystem, levi: &ParabolicSubset, poly: LaurentPoly) -> Result<Self> {
        levi.check_rank(rs)?;
        if poly.nvars() != rs.dim() {
            return Err(Error::VariableCountMismatch(rs.dim(), poly.nvars()));
        }
        for s in levi.generators(rs)? {
            if s.act(&poly)? != poly {
                return Err(Error::NotLeviInvariant);
            }
        }
        Ok(Character {
            rs: rs.clone(),
            levi: levi.clone(),
            poly,
        })
    }

    /// A character of `G` itself.
    pub fn of_group(rs: &RootSystem, poly: LaurentPoly) -> Result<Self> {
        Self::new(rs, &ParabolicSubset::full(rs.rank()), poly)
    }

    pub(crate) fn from_parts_unchecked(
        rs: &RootSystem,
        levi: &ParabolicSubset,
        poly: LaurentPoly,
    ) -> Self {
        Character {
            rs: rs.clone(),
            levi: levi.clone(),
            poly,
        }
    }

    pub fn one(rs: &RootSystem, levi: &ParabolicSubset) -> Self {
        Self::from_parts_unchecked(rs, levi, LaurentPoly::one(rs.dim()))
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn levi(&self) -> &ParabolicSubset {
        &self.levi
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.poly
    }

    pub fn into_poly(self) -> LaurentPoly {
        self.poly
    }

    /// Value at the identity.
    pub fn dimension(&self) -> Rational {
        self.poly.terms().map(|(_, c)| c.clone()).sum()
    }

    /// True when every multiplicity is nonnegative.
    pub fn is_effective(&self) -> bool {
        self.poly
            .terms()
            .all(|(_, c)| *c >= Rational::from_integer(0.into()))
    }

    /// Type A only: no negative exponents, i.e. a polynomial representation
    /// of `GL`.
    pub fn is_polynomial(&self) -> bool {
        self.rs.family() == Family::A && self.poly.try_to_poly().is_some()
    }

    /// Restriction to a smaller Levi.
    pub fn restrict(&self, smaller: &ParabolicSubset) -> Result<Self> {
        if !smaller.is_subset_of(&self.levi) {
            return Err(Error::NotNested {
                inner: smaller.to_string(),
                outer: self.levi.to_string(),
            });
        }
        Ok(Self::from_parts_unchecked(
            &self.rs,
            smaller,
            self.poly.clone(),
        ))
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.rs != other.rs || self.levi != other.levi {
            return Err(Error::TagMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self::from_parts_unchecked(
            &self.rs,
            &self.levi,
            &self.poly + &other.poly,
        ))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self::from_parts_unchecked(
            &self.rs,
            &self.levi,
            &self.poly - &other.poly,
        ))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self::from_parts_unchecked(
            &self.rs,
            &self.levi,
            &self.poly * &other.poly,
        ))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_parts_unchecked(&self.rs, &self.levi, self.poly.scale(c))
    }

    pub fn pow(&self, k: u32) -> Self {
        Self::from_parts_unchecked(&self.rs, &self.levi, self.poly.pow(k))
    }

    pub(crate) fn with_poly(&self, poly: LaurentPoly) -> Self {
        Self::from_parts_unchecked(&self.rs, &self.levi, poly)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// `Σ m_μ t^μ` as a character of `G`.
pub fn character(ws: &WeightSystem) -> Character {
    let rs = ws.root_system();
    Character::from_parts_unchecked(rs, &ParabolicSubset::full(rs.rank()), ws.character_poly())
}
