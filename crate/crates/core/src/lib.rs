//! Exact computations on smooth complete toric varieties: divisor polytopes,
//! Okounkov bodies, Minkowski bases and Minkowski decompositions.

pub mod catalog;
pub mod decompose;
pub mod error;
pub mod fans;
pub mod linalg;
pub mod okounkov;
pub mod parallel;
pub mod polyhedra;
pub mod rational;
pub mod tmb;
pub mod toric;
pub mod typecone;

pub use decompose::{Coefficients, DecomposeReport};
pub use error::{Error, Result};
pub use fans::{Cone, Fan, FanReport};
pub use okounkov::TFlag;
pub use polyhedra::{AffineChart, HalfSpace, Polyhedron};
pub use rational::{IVec, QVec, Rat};
pub use toric::{ClassBasis, DivisorClass, ToricDivisor, ToricVariety};
pub use parallel::Execution;
pub use tmb::{BasisElement, BasisReport};
