//! Finite groups by full enumeration: permutation and matrix carriers,
//! conjugacy classes, power maps and the standard constructors.

mod element;
mod make;
mod model;

pub use element::{parse_cycles, GroupElement, Matrix, Perm};
pub use make::{
    alternating, cyclic, dihedral, first_irreducible_quadratic, gl2, nonsplit_matrix, pgl2, quaternion, sl2,
    subgroup_tori_and_unipotent, symmetric, Gl2Subgroups,
};
pub use model::{group_closure, ConjugacyClass, Group, GroupKind, GroupModel, DEFAULT_MAX_ORDER};

use crate::exact::ExactError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("group closure exceeded the bound of {bound} elements")]
    BoundExceeded { bound: usize },
    #[error("generators do not share a carrier type and dimension")]
    MixedCarriers,
    #[error("image list is not a bijection")]
    NotBijection,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("malformed group element")]
    Parse,
    #[error("operation requires a GL2(F_q) model built by make_gl2")]
    NotGl2,
    #[error("{0}")]
    InvalidParameter(&'static str),
    #[error(transparent)]
    Field(#[from] ExactError),
}
