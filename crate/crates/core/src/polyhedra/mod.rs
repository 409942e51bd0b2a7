//! Exact rational polyhedra in both representations.
//!
//! A [`Polyhedron`] always carries its vertices, its recession rays and a
//! canonical inequality description. Empty and lower-dimensional polyhedra
//! are ordinary values. Only pointed polyhedra are supported; every
//! polyhedron this crate builds from a complete fan is pointed.

mod dd;
mod polyhedron;

pub use polyhedron::{AffineChart, HalfSpace, Polyhedron};
