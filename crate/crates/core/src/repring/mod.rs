//! Representation rings: weight systems, characters, tensor products,
//! λ-operations, polynomial membership and the Springer morphism.

mod character;
mod lambda;
mod membership;
mod springer;
mod tensor;
mod weights;

pub use character::{character, Character};
pub use lambda::{
    adams, evaluate_in_lambdas, lambda_generation_witness, lambda_op, lambda_series, sym2_alt2,
};
pub use membership::{
    poly_membership, recombine, resubstitute, springer_pullback, MembershipResult,
};
pub use springer::{
    cayley_transform, invariant_form, springer_torus_general, springer_torus_sl, torus_point,
};
pub use tensor::{decompose_character, tensor_decompose};
pub use weights::{
    dominant_representative, integral_weight, weight_system, weight_system_fundamental,
    weyl_dimension, WeightSystem,
};
