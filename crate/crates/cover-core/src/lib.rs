//! Calculus of epimorphisms ("covers") of finite groups.
//!
//! The library is organized around four layers:
//!
//! * [`group`] / [`hom`] — finite groups as Cayley tables, subgroups,
//!   quotients, and exhaustive homomorphism search;
//! * [`square`] — commuting squares of epimorphisms, fiber products,
//!   domination, indecomposability, and fundaments;
//! * [`module`] / [`cohomology`] / [`invariants`] — simple modules over a
//!   group, second cohomology as a vector space over the endomorphism field,
//!   and the multiplicity/support invariants of fundamental covers;
//! * [`engine`] — the embedding property, basic and superbasic covers, and
//!   the smallest-embedding-cover fixed point.
//!
//! Every value is immutable after construction and every operation is a pure
//! function, so the whole API is safe to call from multiple threads.

pub mod caps;
pub mod cohomology;
pub mod engine;
pub mod error;
pub mod fp;
pub mod group;
pub mod groups;
pub mod hom;
pub mod invariants;
pub mod module;
pub mod square;

pub use caps::Caps;
pub use error::{CoverError, Result};
pub use group::{FiniteGroup, Subgroup};
pub use hom::GroupHom;
pub use square::{CoverFamily, FiberProduct, Square, SquareStatus};
