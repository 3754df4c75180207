//! Exact computer algebra for the Temperley-Lieb algebra and the graded
//! polynomial rings attached to its diagram basis.
//!
//! The crate has three layers:
//!
//! - **Diagrams and traces** ([`diagram`], [`tl`], [`laurent`]): crossingless
//!   matchings, their composition with circle bookkeeping, and a family of
//!   Laurent-polynomial trace and pairing maps on the algebra they span.
//! - **Polynomial rings and ideals** ([`poly`], [`ideal`], [`weyl`],
//!   [`linalg`]): a graded ring with a symmetric-group action and divided
//!   difference operators, rewriting systems for a family of graded ideals,
//!   Hilbert series, and the line arrangements whose vanishing loci recover
//!   the same quotients.
//! - **Cell modules** ([`cells`]): the standard modules of the algebra with
//!   their bilinear forms, filtrations, and distinguished basis words.
//!
//! The [`verify`] module cross-checks the layers against each other and
//! produces structured [`report`]s suitable for machine or human reading.
//!
//! Everything is exact (arbitrary-precision integers and rationals; Laurent
//! polynomials with integer coefficients) and deterministic: containers are
//! ordered, and the parallel execution path ([`par`]) preserves input order.

pub mod error;
pub mod laurent;
pub mod par;
pub mod diagram;
pub mod tl;
pub mod poly;
pub mod linalg;
pub mod ideal;
pub mod weyl;
pub mod cells;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use laurent::{LaurentPoly, RationalFn};
pub use diagram::{CapDiagram, ClosureStats, Diagram, Matching};
pub use tl::{TLElement, Trace};
pub use poly::{Poly, Rat};
pub use cells::{CellElement, CellModule, InducedModule, VElement};
pub use report::{CheckRecord, Report, Status};
pub use verify::{Suite, SuiteConfig};
