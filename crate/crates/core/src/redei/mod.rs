//! The characteristic-2 Redei function with b^2 + b = 1: its parity-polynomial
//! numerator and denominator, projective evaluation, and identity checks.

pub mod lemmas;
mod parity;
mod rational;

pub use parity::{
    a_coeff, binom_parity, family_poly, mn_closed, mn_recursive, Family, ParityPoly, RedeiPair,
    RedeiRecursion,
};
pub use rational::{
    g_map, gprime_map, phi, phi_inv, projective_line, redei_eval, redei_projective, rho, rho_inv,
};
