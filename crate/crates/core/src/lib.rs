//! Crystal combinatorics of type-A galleries.
//!
//! A gallery for `SL_n` is a sequence of strictly increasing columns over the
//! alphabet `1..=n`, each shorter than `n`. Galleries carry Kashiwara root
//! operators ([`crystal`]), read to words, and normalize to semistandard
//! tableaux in the plactic monoid ([`plactic`]). The connected components of
//! the resulting crystal are copies of `B(λ)` ([`graph`]); sending a gallery
//! to the label `(λ, tableau)` of its normal form is a surjective crystal
//! morphism onto MV-cycle labels ([`mv`]). [`affine`] computes the affine
//! roots crossed along a gallery's lattice path.

pub mod affine;
pub mod crystal;
pub mod error;
pub mod gallery;
pub mod graph;
pub mod mv;
pub mod plactic;
pub mod weight;

pub use error::{Error, Result};
pub use gallery::{Column, Gallery, LatticePoint, Rank, Word};
pub use weight::{DominantWeight, WeightVector};
