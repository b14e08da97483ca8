//! Exact computation of Ramanujan's polynomials `R_m(u, x)` and the number
//! families tied to them: Stirling numbers of the second kind, 2-associated
//! Stirling numbers, second-order Eulerian numbers, the tree function and
//! constrained set partitions.
//!
//! Every quantity is computed with arbitrary-precision integers or rationals,
//! usually along two independent routes, and the identities linking them are
//! checked by the [`suite`] driver.

pub mod bipoly;
pub mod error;
pub mod numkernel;
pub mod partitions;
pub mod ramanujan;
pub mod report;
pub mod series;
pub mod suite;
pub mod triangles;

pub use bipoly::{BiPoly, QPolyX, UniPoly, UniPolyX};
pub use error::{Error, Result};
pub use numkernel::{Integer, Rational};
pub use report::{Status, VerifyReport};
