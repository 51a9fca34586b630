//! Permutation polynomials of GF(q^2), q = 2^t with t odd, built from the
//! numerator and denominator of the characteristic-2 Redei function.
//!
//! For positive n and m the polynomials
//!
//! ```text
//! x^(n + m(q+1)) M_n(x^(q-1))    and    x^(n + m(q+1)) N_n(x^(q-1))
//! ```
//!
//! permute GF(q^2) exactly when gcd(n + m(q+1), q-1) = 1 and
//! gcd(n, q^2-1) = 1 (and, for N, n = 1 mod 3). The crate builds them,
//! reduces them modulo x^(q^2) + x, and checks the claim exhaustively.
//!
//! ```
//! use redei::{build_poly, ConstructionParams, Family, FieldContext};
//!
//! let ctx = FieldContext::new(3, None).unwrap();
//! let params = ConstructionParams::new(3, 5, 2, Family::M).unwrap();
//! assert_eq!(build_poly(&ctx, &params).unwrap().to_string(), "x^51 + x^30 + x^23");
//! ```

pub mod cli;
pub mod construct;
pub mod error;
pub mod field;
pub mod redei;
pub mod suite;

pub use construct::{
    brute_force_is_permutation, build_poly, canonical_params, generate_table, theorem_predicate,
    CellStatus, ConstructionParams, Exclusion, SparsePoly, TableCell,
};
pub use error::{Error, Result};
pub use field::{FieldContext, Fq2Element, FqElement, ProjectivePoint};
pub use redei::{Family, ParityPoly, RedeiPair};
