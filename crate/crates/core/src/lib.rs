//! Exact combinatorics around positroid varieties.
//!
//! The crate is organised bottom-up: [`coxeter`] supplies finite and affine
//! permutations, [`juggling`] the bounded juggling patterns indexing positroid
//! varieties, [`pipedream`] and [`strip`] the classical and affine pipe dreams,
//! [`complex`] subword complexes and Stanley–Reisner ideals, [`algebra`] a small
//! polynomial engine with Gröbner bases, [`afflag`] the lattice construction and
//! [`diagrams`] Le and Cauchon diagrams. [`verify`] ties the pieces together.

pub mod afflag;
pub mod algebra;
pub mod complex;
pub mod coxeter;
pub mod diagrams;
pub mod error;
pub mod juggling;
pub mod linalg;
pub mod pipedream;
pub mod strip;
pub mod verify;

pub use error::{Error, Result};
