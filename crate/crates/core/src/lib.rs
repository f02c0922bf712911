//! Combinatorics, cell closures, cohomology classes and singularities of
//! regular Hessenberg varieties for the minimal indecomposable Hessenberg
//! space, in every simple Lie type.
//!
//! The modules build on each other bottom-up:
//!
//! - [`roots`]: root systems, parabolic subsystems, Dynkin sub-diagram types.
//! - [`weyl`]: Weyl group elements, descents, coset decompositions.
//! - [`hess`]: admissibility, cell decompositions, closures, Poincaré polynomials.
//! - [`singular`]: smoothness of fixed points and of Hessenberg–Schubert varieties.
//! - [`classes`]: K-theory and cohomology classes in factored and expanded form.
//! - [`oracle`]: type-A Jacobian computations with exact rational arithmetic.

pub mod classes;
pub mod error;
pub mod exec;
pub mod hess;
pub mod oracle;
pub mod perm;
pub mod roots;
pub mod singular;
pub mod weyl;

pub use error::{Error, Result};
pub use exec::Exec;
pub use hess::{AdmissibleDecomposition, HessConfig};
pub use roots::{CartanDatum, Family, ParabolicSubsystem, Root, RootSystem};
pub use singular::{SmoothnessVerdict, Verdict};
pub use weyl::{Composition, WeylElement, DEFAULT_BOUND};
