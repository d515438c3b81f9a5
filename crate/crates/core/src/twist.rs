//! The classical Yang-Baxter operator R_q and twisted solutions.

use crate::scalars::{Field, ScalarError};
use crate::tensor::{EndTensor, TensorError};
use num_traits::Zero;
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum TwistError {
    /// q = 0 passed to the classical operator.
    ZeroParameter,
    /// The matrix is singular or does not define a twisting pair; carries
    /// the first violated FRT relation (k,l,i,j) when there is one.
    InvalidPair(Option<(usize, usize, usize, usize)>),
    /// A closed-form case applied to a base/alpha it does not cover.
    CaseMismatch(String),
    Tensor(TensorError),
    Scalar(ScalarError),
}

impl fmt::Display for TwistError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwistError::ZeroParameter => write!(f, "q must be nonzero"),
            TwistError::InvalidPair(None) => write!(f, "alpha is not an admissible twisting pair"),
            TwistError::InvalidPair(Some((k, l, i, j))) => write!(
                f,
                "alpha violates the FRT relation (k,l,i,j) = ({k},{l},{i},{j})"
            ),
            TwistError::CaseMismatch(msg) => write!(f, "closed-form case mismatch: {msg}"),
            TwistError::Tensor(e) => write!(f, "{e}"),
            TwistError::Scalar(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for TwistError {}

impl From<TensorError> for TwistError {
    fn from(e: TensorError) -> Self {
        TwistError::Tensor(e)
    }
}

impl From<ScalarError> for TwistError {
    fn from(e: ScalarError) -> Self {
        TwistError::Scalar(e)
    }
}

/// The classical Yang-Baxter operator: R_q(v_i⊗v_j) is q·v_i⊗v_i on the
/// diagonal, v_i⊗v_j for i<j, and v_i⊗v_j + (q−q⁻¹)·v_j⊗v_i for i>j.
pub fn classical_rq<K: Field>(n: usize, q: &K) -> Result<EndTensor<K>, TwistError> {
    if q.is_zero() {
        return Err(TwistError::ZeroParameter);
    }
    let mut r = EndTensor::zero(n)?;
    let cross = q.clone() - q.inv()?;
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                r.add_to(i, i, i, i, q.clone());
            } else {
                r.add_to(i, j, i, j, K::one());
                if i > j {
                    r.add_to(j, i, i, j, cross.clone());
                }
            }
        }
    }
    Ok(r)
}
