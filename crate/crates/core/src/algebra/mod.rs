//! Hyperfields, orderings and homomorphisms.

pub mod element;
pub mod group;
pub mod hom;
pub mod hyperfield;
pub mod table;

pub use element::{HElem, HSet, Sgn, Unit};
pub use group::{GroupKind, GroupVal};
pub use hom::Homomorphism;
pub use hyperfield::{Base, Hyperfield};
pub use table::{Axiom, AxiomReport, AxiomViolation, TableHyperfield};
