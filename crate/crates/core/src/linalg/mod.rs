//! Exact dense matrices and sparse row echelon forms over a [`Field`].

mod echelon;
mod matrix;

pub use echelon::{Echelon, SparseVec};
pub use matrix::Matrix;
