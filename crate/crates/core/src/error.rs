use thiserror::Error;

use crate::rootdata::Family;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("rank {rank} is not supported for type {family}")]
    UnsupportedRank { family: Family, rank: usize },
    #[error("type {0} has no matrix realization for this operation")]
    UnsupportedFamily(Family),
    #[error("rank mismatch: expected {expected} coordinates, got {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("variable count mismatch: {0} vs {1}")]
    VariableCountMismatch(usize, usize),
    #[error("index {index} out of range 0..={max}")]
    BadIndex { index: usize, max: usize },
    #[error("invalid Weyl group element: {0}")]
    InvalidElement(String),
    #[error("invalid parabolic subset: {0}")]
    InvalidParabolic(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("polynomial is not invariant under the Levi Weyl group")]
    NotLeviInvariant,
    #[error("combinations live on different flag varieties")]
    TagMismatch,
    #[error("class {0} is not indexed by a minimal coset representative")]
    NotInParabolicImage(String),
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("weight {0} is not in the lattice of the group")]
    NotInLattice(String),
    #[error("tensor decomposition failed to terminate: {0}")]
    NonTerminating(String),
    #[error("trace form is degenerate on the Cartan subalgebra")]
    DegenerateForm,
    #[error("matrix does not satisfy the defining relation of type {0}")]
    NotInGroup(Family),
    #[error("not a λ-polynomial character; non-polynomial part {witness}")]
    NotPolynomialCharacter { witness: String },
    #[error("invalid partition: {0}")]
    BadPartition(String),
    #[error("parameters outside the stated range: {0}")]
    OutOfStatedRange(String),
    #[error("parabolic {inner} is not contained in {outer}")]
    NotNested { inner: String, outer: String },
    #[error("cannot invert non-monomial Laurent polynomial {0}")]
    NotInvertible(String),
    #[error("{0} is not in the span of the given products")]
    NotInSpan(String),
    #[error("divided-difference and Chevalley products disagree: {0}")]
    ProductPathsDisagree(String),
    #[error("divided-difference orientation check failed: {0}")]
    Orientation(String),
}
