//! Group families, products, presentations and the construction language.

pub mod actions;
pub mod catalog;
pub mod dsl;
pub mod families;
pub mod presentation;
pub mod products;

pub use dsl::{build, eval, parse, Arg, GroupExpr};
pub use families::{
    alt, binary_dihedral, binary_polyhedral, cyclic, dihedral_2n, elem_ab, psl2,
    psl27_from_presentation, q8, sl2p_on_vectors, sym, BinaryKind,
};
pub use presentation::{
    check_presentation, todd_coxeter, verify_presentation, verify_presentation_within, CosetTable,
    Presentation, DEFAULT_TC_BUDGET,
    PresentationCheck, VerifiedPresentation, Word,
};
pub use products::{
    central_product, direct_product, milnor_q, question_group, semidirect_product, wreath_z2,
    CentralProduct,
};
