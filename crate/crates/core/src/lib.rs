//! Exact λ-ring specialization calculus for symmetric functions, applied to
//! Narayana, Catalan and Schröder polynomials.
//!
//! The crate is layered bottom-up:
//!
//! - [`arith`]: exact scalars and generalized binomial coefficients
//! - [`poly`] and [`series`]: Laurent polynomials in `q`, `q2` and truncated
//!   power series over them
//! - [`partitions`]: partitions and small exhaustive enumerations
//! - [`lambda`]: `h`, `e`, `p`, `m`, `s` at formal alphabets, Hall–Littlewood
//!   principal specializations, S-fractions
//! - [`sequences`]: Narayana polynomials and their relatives
//! - [`identities`]: the verification registry and suite runner
//! - [`dsl`]: a bracket-notation query language over the engine

pub mod arith;
pub mod dsl;
pub mod error;
pub mod identities;
pub mod lambda;
pub mod partitions;
pub mod poly;
pub mod sequences;
pub mod series;

pub use arith::Rat;
pub use error::{Error, Result};
pub use lambda::{Alphabet, HSequence};
pub use partitions::Partition;
pub use poly::PolyQQ;
pub use series::TruncSeries;
