//! Finite d-lattices, d-Boolean algebras, d-frames and their bitopological
//! spectra.
//!
//! Every structure is finite and stored extensionally; every predicate is an
//! exhaustive scan that reports the first failure together with a witness.

pub mod bits;
pub mod bitop;
pub mod corpus;
pub mod dot;
pub mod duality;
pub mod dlattice;
mod error;
pub mod ideals;
pub mod io;
pub mod lattice;
pub mod props;
pub mod report;

pub use dlattice::{
    bool4, db, decompose, enumerate_dlattice_homs, factor_through_db, find_dlattice_iso, from_dbl, lambda, omega,
    to_dbl, DBooleanAlgebra, DLattice, DLatticeHom, DblObject, Side,
};
pub use error::{Error, Result};
pub use lattice::{
    birkhoff, build_lattice, complement, find_lattice_iso, prime_ideals, pseudo_complement, Elem, FiniteLattice,
    FinitePoset, LatticeHom, LatticeIdeal,
};
pub use report::{StructReport, Violation};
