//! Points, combinations and hulls.

pub mod finite;
pub mod membership;
pub mod point;

pub use finite::{bits, hull_finite, hull_finite_opts, is_convex, FiniteConvexSet, FiniteSpace, Mask};
pub use membership::{member_conv_stringent, member_conv_stringent_with, membership_matrix, MembershipResult};
pub use point::{cartesian, combine, homogenize, intersect, project, HPoint, Mode, PointSetResult};
