//! Doubles of modules embedded in finite free modules over exact polynomial rings.
//!
//! The crate is organised bottom-up:
//!
//! * [`poly`]: exact multivariate polynomials over the rationals, grevlex order,
//!   ring morphisms given by substitution, and the text syntax used by session files.
//! * [`module`]: submodules of free modules with a Gröbner engine (membership,
//!   syzygies, kernels, images, colengths, generic ranks) and matrix-induced
//!   homomorphisms.
//! * [`double`]: the double construction on elements, modules, homomorphisms,
//!   quotients and direct sums, plus doubles relative to a map germ.
//! * [`complex`]: bounded chain complexes, chain maps, homotopies and their doubles.
//! * [`verify`]: seeded instance generation and the property catalog.

pub mod complex;
pub mod double;
pub mod error;
pub mod module;
pub mod poly;
pub mod verify;

pub use error::{Error, Result};
pub use module::{
    colength, generic_rank, Colength, MatrixHom, ModuleElement, PresentedQuotient, Submodule,
};
pub use poly::{Monomial, PolyRing, Polynomial, Rational, RingMorphism};
