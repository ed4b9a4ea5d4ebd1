//! `R^q`, quadratic algebras defined through it, and explicit `U_q(gl_n)`
//! modules.

mod quadratic;
mod rmatrix;
pub mod sparse;
mod uq;

pub use quadratic::{
    build_algebra, center_suite, hilbert_series, hilbert_suite, AlgebraKind, HilbertRow, QuadraticAlgebra,
    DEFAULT_WORD_LIMIT,
};
pub use rmatrix::{flip, hecke_holds, kron, mutated_r_matrix, r21, r_matrix, ybe_check, ybe_holds, RMatrix};
pub use uq::{uq_relation_check, UqGen, UqModel, UqMutation, UqRep, WtVector};
