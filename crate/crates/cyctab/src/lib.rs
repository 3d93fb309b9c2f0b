//! Cyclic descent maps for skew standard Young tableaux.
//!
//! The core construction is the bijection `φ = Rot_NW⁻¹ ∘ pro ∘ Rot_SE` on
//! `SYT(λ/μ)` together with the cyclic descent function
//! `cDes(T) = Des(T) ∪ {n iff 1 ∈ Des(φT)}`, defined for every skew shape
//! that is not a connected ribbon. The crate provides:
//!
//! - [`shape`]: skew shapes, boundaries, corner classification, enumeration;
//! - [`tableau`]: standard Young tableaux, descent sets, symmetries, I/O;
//! - [`dynamics`]: promotion, demotion and the three path notions;
//! - [`rotation`]: the rotation operators `Rot_SE`/`Rot_NW` and their
//!   explicit inverses via balance points;
//! - [`cyclic`]: `φ`, `cDes`, axiom verification, fibers, orbits, and the
//!   path-lemma suite;
//! - [`special_cases`]: the earlier special-case constructions from the
//!   literature, used as independent cross-checks.

pub mod cyclic;
pub mod dynamics;
pub mod rotation;
pub mod shape;
pub mod special_cases;
pub mod tableau;

pub use cyclic::{cdes, orbit, orbit_census, path_lemma_suite, phi, phi_inverse, verify_cdm};
pub use dynamics::{demote, promote, promotion_path, pseudo_promotion_path, Path, PathKind};
pub use rotation::{analyze, rotate, rotate_inverse, RotationAnalysis};
pub use shape::{enumerate_shapes, Cell, Partition, ShapeFilter, Side, SkewShape};
pub use tableau::{enumerate_syt, DescentSet, Tableau};
