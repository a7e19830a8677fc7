//! Exact computations with adjoint orbits of complex semi-simple Lie algebras
//! and their cohomogeneity under the compact real form.

pub mod algebra;
pub mod branching;
pub mod classify;
pub mod cohom;
pub mod error;
pub mod flags;
pub mod linalg;
pub mod nilpotent;
pub mod roots;
pub mod sl2;

pub use algebra::{AlgebraElement, ChevalleyAlgebra, CompactFormBasis};
pub use error::{AtlasError, Result};
pub use linalg::{IntegerMatrix, Rational, RationalMatrix};
pub use roots::{CartanElement, CartanType, Family, Root, RootSubsystem, RootSystem, SimpleType};
