//! Finite groups of orthogonal transformations of euclidean 5-space and their relatives:
//! permutation group algorithms, exact character tables, F2 cohomology, rational
//! orthogonal models and structural classification.

pub mod cayley;
pub mod chartab;
pub mod classes;
pub mod cohom;
pub mod construct;
pub mod error;
pub mod group;
pub mod hom;
pub mod orthomodels;
pub mod perm;
pub mod schreier;
pub mod structure;
pub mod subgroups;

pub use chartab::{character_table, embeds_orthogonally, CharacterTable, Cyclotomic, Variant};
pub use classes::{conjugacy_classes, ConjugacyClasses};
pub use cohom::{h1, h2, F2Matrix, GModule};
pub use construct::{build, Presentation, VerifiedPresentation};
pub use error::{Error, Result};
pub use group::{Elements, GroupJson, Limits, PermGroup};
pub use hom::{validate_hom, Homomorphism};
pub use perm::Permutation;
pub use schreier::StabilizerChain;
pub use structure::{classify_theorem, isomorphic, monomorphisms, normal_structure, splits};
