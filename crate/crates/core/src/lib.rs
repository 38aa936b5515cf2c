//! Exact-arithmetic construction and verification of the Iwahori-Hecke
//! algebra representations of braid groups, the rescaled representations of
//! punctured-sphere mapping class groups obtained from them, and the genus-2
//! symplectic machinery used to constrain their kernels.
//!
//! Everything is computed over exact coefficient fields (Q, Q(q), Q(t));
//! there is no floating point anywhere in this crate.

pub mod braid;
pub mod burau;
pub mod exact;
pub mod hecke;
pub mod jones;
pub mod symplectic;
pub mod tableaux;

pub use braid::{enumerate_words, BraidWord, Permutation, WordFilter};
pub use exact::{ExactMatrix, LaurentPolynomial, RationalFunction, Var};
pub use hecke::HeckeRep;
pub use jones::JonesRep;
pub use tableaux::{StandardTableau, YoungDiagram};
