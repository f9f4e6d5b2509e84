//! Exact-arithmetic kernels for lattice point configurations.
//!
//! Given a finite set of integer points `A` in `Z^n`, this crate computes the
//! combinatorial invariants of the associated projective toric variety `X_A`:
//! the face lattice of the convex hull, normalized lattice volumes of faces,
//! local Euler obstructions on every torus orbit, the codimension and degree
//! of the dual (discriminant) variety, and characteristic-cycle multiplicities
//! of torus-invariant constructible data. The same machinery runs on pointed
//! rational cones for the affine (normal toric) case.
//!
//! Every computation is exact: all arithmetic is arbitrary-precision integer
//! or rational, and floating point is banned throughout.

pub mod arith;
pub mod charcycle;
pub mod discriminant;
pub mod error;
pub mod euler;
pub mod hull;
pub mod lattice;
pub mod matrix;
pub mod polytope;
pub mod samples;
pub mod subdiagram;
pub mod volume;

pub use arith::{Int, Rat};
pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Size guards for the paths whose cost is exponential in the dimension
/// (Hilbert bases, Ehrhart point counting).
#[derive(Clone, Debug)]
pub struct Options {
    pub max_dim: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { max_dim: 4 }
    }
}
