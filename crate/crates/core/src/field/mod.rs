//! GF(2^t) for odd t, and the quadratic tower GF(q^2) = GF(q)(b) with
//! b^2 + b + 1 = 0.

mod arith;
mod context;
mod element;

pub use context::{
    is_irreducible_gf2, least_irreducible, modulus_from_bits, modulus_to_bits, FieldContext,
    MAX_DEGREE,
};
pub use element::{Fq2Element, FqElement, ProjectivePoint};
