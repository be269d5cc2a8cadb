//! Exact combinatorics behind residual Eisenstein series on `Sp_{m+2n}`: signed
//! permutations, reduced coset representatives, parabolic tables relative to
//! `H = Sp_a × Sp_b`, exponent calculus at the residue point, and formal pole
//! order bookkeeping.

pub mod affine;
pub mod combinatorics;
pub mod error;
pub mod exponent;
pub mod matrix;
pub mod meromorphy;
pub mod oracle;
pub mod parabolic;
pub mod report;
pub mod roots;
pub mod suites;
pub mod weyl;

pub use error::{Error, Result};
