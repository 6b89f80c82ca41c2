//! Submodules of free modules `R^p`, matrix-induced homomorphisms and the Gröbner engine
//! behind membership, syzygies, kernels, colengths and generic ranks.

mod colength;
mod element;
mod groebner;
mod hom;
mod matrix;
mod quotient;
mod rank;
mod submodule;
pub(crate) mod vector;

pub use colength::{colength, Colength};
pub use element::{parse_element, ModuleElement};
pub use hom::{hom_compose, MatrixHom};
pub use matrix::Matrix;
pub use quotient::PresentedQuotient;
pub use rank::{generic_rank, matrix_rank};
pub use submodule::{syzygies, Submodule};
