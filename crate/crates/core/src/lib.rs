//! Group frames over cyclic and generalized dihedral groups.
//!
//! The crate builds unit-norm tight frames as orbits of a seed vector under a
//! unitary group representation and measures how close their coherence comes
//! to the Welch bound. Three families are supported:
//!
//! - harmonic frames from a prime-order cyclic group, with the exponents taken
//!   from a multiplicative subgroup of `(Z/nZ)^×` ([`frame::build_prime_group_frame`]);
//! - direct products of cyclic groups ([`frame::build_abelian_frame`]);
//! - generalized dihedral groups seeded with a Zadoff-Chu sequence
//!   ([`frame::build_dihedral_frame`]).
//!
//! Exact modular arithmetic lives in [`numtheory`]; coherence, tightness,
//! inner-product spectra and the closed-form coherence bounds live in
//! [`analysis`]. Seeded random baselines are in [`baselines`], and the plain
//! text matrix format is in [`frame_file`].

pub mod analysis;
pub mod baselines;
mod error;
pub mod frame;
pub mod frame_file;
pub mod numtheory;
pub mod report;
pub mod table1;
pub mod verify;

pub use error::{Error, Result};
pub use frame::FrameMatrix;
pub use num_complex::Complex64;
