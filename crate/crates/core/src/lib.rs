//! Exact computations with the pointed Hopf algebras `H_D` built from a group
//! datum: simple and projective modules, annihilators, and the ideal lattice.

pub mod catalog;
pub mod expr;
pub mod field;
pub mod groups;
pub mod hopf;
pub mod ideals;
pub mod modules;

pub use field::{Cyclotomic, CyclotomicField, ExactMatrix, FieldError, Rational, Subspace};
pub use groups::{CharacterTable, FiniteGroup, GroupError, LinearCharacter};
pub use hopf::{DatumError, DatumInput, DatumKind, GroupDatum, HopfElement, HopfError};
pub use ideals::{Generator, Ideal, IdealError, NormalForm};
pub use modules::{ModuleError, ModuleLabel, ModuleRep, Tau};
