//! Exact combinatorics of real-form orbits in complex flag manifolds.
//!
//! An orbit of a real form in a complex flag manifold is encoded by a pair
//! consisting of a conjugation on the root lattice (the real form, relative to
//! a Cartan subalgebra) and a parabolic set of roots (the flag type).  From
//! that pair this crate computes, exactly over the integers: CR dimension and
//! codimension, isotropy decomposition dimensions, finite-type and
//! nondegeneracy tests, the canonical reduction tower down to the real core,
//! fiber component counts, fundamental groups, and the space of algebraic arc
//! components.
//!
//! No floating point is used anywhere; every invariant is an integer or a
//! finitely presented abelian group.

pub mod arc;
pub mod bitset;
pub mod error;
pub mod lattice;
pub(crate) mod linalg;
pub mod oracle;
pub mod parabolic;
pub mod realform;
pub mod reduce;
pub mod report;
pub mod topo;

pub use arc::{ArcRelation, ArcReport, KjStatus};
pub use bitset::RootSet;
pub use error::Error;
pub use lattice::{Chamber, DynkinSpec, RootSystem, SimpleType, WeylWord};
pub use parabolic::{CrAlgebraSpec, IsotropyDims, ParabolicSet};
pub use realform::{CayleySet, Compactness, Conjugation, RootClass, SatakeEntry};
pub use reduce::{FiberReport, FibrationPredicates, ReductionTrace, StageTag};
pub use report::{analyze, AnalysisReport, OrbitDocument};
pub use topo::{GroupPresentation, SubgroupDescription};

pub type Result<T> = std::result::Result<T, Error>;
