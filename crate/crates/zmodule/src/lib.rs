//! Exact integer linear algebra: dense matrices over a Euclidean integer type,
//! Smith normal form with transforms, and finitely presented abelian groups.
//!
//! The algorithms are generic over any `num_traits` signed integer; the rest of
//! the workspace uses the arbitrary-precision aliases below.

pub mod group;
pub mod matrix;
pub mod smith;

pub use group::{AbGroup, Decomposition, Presentation};
pub use matrix::Matrix;
pub use smith::{left_kernel, right_kernel, smith_normal_form, Smith};

use num_integer::Integer;
use num_traits::Signed;
use std::fmt::{Debug, Display};

/// Integer types the algorithms run over.
pub trait Scalar: Integer + Signed + Clone + Debug + Display {}
impl<T: Integer + Signed + Clone + Debug + Display> Scalar for T {}

pub type Int = num_bigint::BigInt;
pub type IntMatrix = Matrix<Int>;
pub type IntSmith = Smith<Int>;
