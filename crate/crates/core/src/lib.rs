//! Exact computation of the map from λ-polynomial representation rings of
//! Levi subgroups of classical groups to the cohomology of flag varieties.
//!
//! The crate is organised bottom-up:
//!
//! * [`rootdata`]: classical root systems in Bourbaki coordinates, Weyl
//!   groups as signed permutations, parabolic subsets and coset
//!   representatives.
//! * [`exactpoly`]: polynomials and Laurent polynomials over exact
//!   rationals, the text grammar, and the Cayley-coordinate rewriting.
//! * [`schubert`]: divided differences, the Borel map, Chevalley and cup
//!   products in the Schubert basis.
//! * [`repring`]: weight systems, characters, tensor products, λ-ring
//!   operations, polynomial membership and the Springer morphism on the
//!   torus.
//! * [`ximap`]: the composite map ξ and the verification suites.

#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod exactpoly;
pub mod linalg;
pub mod repring;
pub mod rootdata;
pub mod schubert;
pub mod ximap;

pub use error::{Error, Result};
pub use exactpoly::{
    cayley_rewrite, elementary_symmetric, CayleyDecomposition, ExactPoly, LaurentPoly, Rational,
};
pub use repring::{
    adams, cayley_transform, character, lambda_op, poly_membership, springer_torus_general,
    sym2_alt2, tensor_decompose, weight_system, Character, MembershipResult, WeightSystem,
};
pub use rootdata::{build_root_system, Family, ParabolicSubset, RootSystem, WeylElement};
pub use schubert::{
    borel_expand, chevalley_product, cup_product, divided_difference, restrict_to_parabolic,
    SchubertCombination,
};
pub use ximap::{classical_xi_gl, xi, Proposition, VerificationReport, XiContext};
