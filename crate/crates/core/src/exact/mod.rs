pub mod matrix;
pub mod scalar;
pub mod tensor;

pub use matrix::ExactMatrix;
pub use scalar::ExactScalar;
pub use tensor::{decompose_sigma2, perm_operator, swap_operator, Sigma2Decomposition, TensorOperator};
