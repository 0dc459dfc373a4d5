//! Exact-arithmetic toolkit over GF(2) for a rank-2 vector bundle on
//! P2 x P2 and the nonclassical Enriques surfaces arising as zero sets of
//! its sections.
//!
//! The crate is organized around the pipeline:
//! cohomology tables and section spaces ([`sheafcoh`]) -> ideals of zero
//! schemes and their invariants ([`groebner`], [`enriques`]) -> cycle-class
//! and Euler-characteristic cross-checks ([`chow`]). Everything reduces to
//! bit-packed linear algebra over GF(2) ([`gf2`]) and bigraded polynomial
//! arithmetic ([`bipoly`]).

pub mod bipoly;
pub mod chow;
pub mod gf2;
pub mod enriques;
pub mod groebner;
pub mod sheafcoh;

pub use bipoly::{BiDegree, BiPoly, Monomial, Var};
pub use gf2::BitMatrix;
