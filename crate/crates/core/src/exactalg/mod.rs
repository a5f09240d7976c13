//! Exact polynomial and matrix arithmetic: resultant elimination, weighted
//! leading forms, normalization and the polynomial JSON format.

mod matrix;
pub mod json;
pub mod normalize;
pub mod parse;
pub mod poly;
pub mod resultant;
pub mod weights;

pub use json::{PolyJson, TermJson};
pub use matrix::Matrix;
pub use normalize::{normalize, primitive_normalized};
pub use parse::parse_poly;
pub use poly::{Exponent, MPoly};
pub use resultant::resultant;
pub use weights::{leading_form, DegreeWeights};
