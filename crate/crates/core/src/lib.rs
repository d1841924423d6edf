//! Lengths of plane Cremona maps.
//!
//! The crate works on the Picard-Manin lattice of the plane ([`lattice`]),
//! computes lengths and predecessor chains of homaloidal types
//! ([`homaloidal`]), handles monomial maps given by integer `2x2` matrices
//! ([`monomial`]), and provides brute-force cross-checks ([`oracle`]).

pub mod error;
pub mod homaloidal;
pub mod lattice;
pub mod monomial;
pub mod notation;
pub mod oracle;

pub use error::{Error, Result};
pub use homaloidal::{HomaloidalType, HudsonOutcome};
pub use lattice::{LatticeClass, PointLabel};
pub use monomial::{IntMatrix2, LrWord};
pub use notation::{parse_class, parse_matrix, parse_matrix_or_word, parse_word, RawClass};
