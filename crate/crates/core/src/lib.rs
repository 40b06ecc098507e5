//! Exact ordered hyperfields and convex geometry over them.
//!
//! Elements are plain values ([`HElem`]); every operation takes the
//! [`Hyperfield`] instance explicitly. Multivalued sums come back as
//! [`HSet`]s, which are finite lists or symbolic balanced sets `a ⊞ -a`.

pub mod algebra;
pub mod convex;
pub mod error;
pub mod fm;
pub mod form;
pub mod halfspace;
pub mod hemispace;
pub mod lift;
pub mod oracle;
pub mod parse;
pub mod svg;
pub mod util;

pub use algebra::{Base, GroupKind, GroupVal, HElem, HSet, Hyperfield, Sgn, TableHyperfield, Unit};
pub use error::{Error, Result};
pub use form::AffineForm;
