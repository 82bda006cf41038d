//! Exact scalars and the dense/sparse multilinear-algebra kernel.

mod linmap;
mod matrix;
mod scalar;
mod sparse;
mod tensor;

pub use linmap::LinMap;
pub use matrix::Matrix;
pub use scalar::{FieldCtx, Scalar};
pub use sparse::SparseEchelon;
pub use tensor::{compare_pipelines, materialize, Mismatch, TensorVec};
