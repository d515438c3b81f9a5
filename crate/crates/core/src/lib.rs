//! Exact computer algebra for quadratic algebras and their quantum-group
//! machinery: FRT bialgebras, twisting pairs and their 2-cocycles, Koszul
//! duals, bullet products, Zhang twists, and twisted solutions of the
//! quantum Yang-Baxter equation.
//!
//! The coefficient field is generic over [`scalars::Field`]; the two
//! instantiations are the exact rationals [`Rational`] and the rational
//! functions [`RatFunc`] in the deformation parameter q. Aliases for the
//! main types over each field live at the crate root.

pub mod linalg;
pub mod scalars;
pub mod tensor;
pub mod twist;

pub use scalars::{Field, QPoly, RatFunc, Rational, ScalarError};

/// End(V⊗V) tensor over ℚ(q) (symbolic q).
pub type QqTensor = tensor::EndTensor<RatFunc>;
/// End(V⊗V) tensor over ℚ (specialized q).
pub type QTensor = tensor::EndTensor<Rational>;
