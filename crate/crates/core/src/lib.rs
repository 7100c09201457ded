//! Hilbert functions, h-polynomials and filtration invariants of associated
//! graded rings and modules, computed exactly.
//!
//! Three ring classes are covered, each with its own backend:
//!
//! - [`semigroup`]: numerical semigroup rings in dimension one, their
//!   Artinian reductions and canonical modules;
//! - [`monomial`]: primary monomial ideals in two or three variables;
//! - [`hypersurface`]: modules over `Q/(Π^e)` for a DVR `Q`.
//!
//! [`gradedhom`] is an independent brute-force oracle for graded `*Hom`
//! spaces over finite-dimensional graded algebras, and [`verify`] sweeps
//! corpora through both routes.

pub mod error;
pub mod gradedhom;
pub mod hypersurface;
pub mod laurent;
mod linalg;
pub mod monomial;
pub mod par;
pub mod semigroup;
pub mod verify;

pub use error::{Error, Result};
pub use gradedhom::{GradedAlgebra, GradedModuleRep, Matrix};
pub use hypersurface::HypersurfaceModule;
pub use laurent::{fit_h_polynomial, HilbertSeries, LaurentPoly, DEFAULT_WINDOW};
pub use monomial::{AInvariant, MonomialIdeal, DEFAULT_MAX_N};
pub use par::Execution;
pub use semigroup::{NumericalSemigroup, SemigroupModule};
