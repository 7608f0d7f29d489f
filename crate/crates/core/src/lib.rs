//! Computational tools for finite racks and quandles.
//!
//! Everything here works on dense, finite carriers: a rack on `n` points is an
//! `n × n` operation table, groups are given by permutations or Cayley tables,
//! and subgroups of `ℤⁿ` are integer lattices in Hermite normal form. The
//! crate covers
//!
//! - axiom checks, orbits, quotients, coverings and reduced quotients ([`rack`]);
//! - inner automorphism groups and their lower central series ([`permgroup`]);
//! - quandle nilpotency, both through `Inn(Q)` and through the reductivity
//!   identities, universal nilpotent quotients and covering chains
//!   ([`nilpotency`]);
//! - the classification of 2-nilpotent quandles by families of lattices and the
//!   computation of their enveloping groups ([`lattice`], [`two_nilpotent`]);
//! - the coset construction of quandles from groups and presentations of
//!   enveloping groups ([`group_model`]);
//! - free nilpotent groups and quandles through the truncated Magnus
//!   expansion ([`magnus`]);
//! - tangential derivations of free Lie rings and their trace ([`lie_trace`]);
//! - welded braid actions on colourings ([`welded`]).
//!
//! The crate is `no_std` and only needs `alloc`. File formats and the command
//! line driver live in the `nilquandle-cli` crate.
#![no_std]

extern crate alloc;

pub mod catalog;
pub mod cayley;
pub mod error;
pub mod group_model;
pub mod lattice;
pub mod lie_trace;
pub mod magnus;
pub mod nilpotency;
pub mod permgroup;
pub mod rack;
pub mod tensor;
pub mod two_nilpotent;
mod union_find;
pub mod welded;
pub mod words;

pub use cayley::CayleyGroup;
pub use error::{Axiom, Error, Result};
pub use lattice::{IntLattice, IntMatrix};
pub use nilpotency::NilpotencyReport;
pub use permgroup::{PermGroup, Permutation, DEFAULT_ORDER_CAP};
pub use rack::{Congruence, FiniteRack, QuandleMorphism};
pub use two_nilpotent::TwoNilpotentData;
pub use words::Word;
