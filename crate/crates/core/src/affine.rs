//! Affine roots crossed by a gallery's lattice path, and the arithmetic behind
//! the invariance of a gallery's cycle under inserting a full column word
//! `1 2 ⋯ n`.
//!
//! For the segment from `γ_i` to `γ_{i+1}` the crossing set holds the affine
//! roots `(α, m)` with `α ∈ Φ⁺`, `(α, γ_i) = m` and `(α, γ_{i+1}) > m`: the
//! walls through the segment's start that the segment leaves on their
//! positive side. Levels are computed on the partial-sum lift starting at the
//! origin, never on canonicalized weights.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::gallery::{Column, Gallery, LatticePoint, Rank, Word};
use crate::weight::WeightVector;

/// `(ε_a − ε_b, m)` with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineRoot {
    pub a: usize,
    pub b: usize,
    pub level: i64,
}

impl AffineRoot {
    pub fn pair(&self, x: &LatticePoint) -> i64 {
        x.pair(self.a, self.b)
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(e{}-e{},{})", self.a, self.b, self.level)
    }
}

/// `Φ⁺` as pairs `(a, b)`, `a < b`, in lexicographic order.
pub fn positive_roots(rank: Rank) -> Vec<(usize, usize)> {
    let n = rank.get();
    (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect()
}

/// One crossing set per path segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingSets {
    pub segments: Vec<Vec<AffineRoot>>,
}

fn segment_crossings(rank: Rank, start: &LatticePoint, end: &LatticePoint) -> Vec<AffineRoot> {
    positive_roots(rank)
        .into_iter()
        .filter_map(|(a, b)| {
            let m = start.pair(a, b);
            (end.pair(a, b) > m).then_some(AffineRoot { a, b, level: m })
        })
        .collect()
}

pub fn crossing_sets_of_path(rank: Rank, points: &[LatticePoint]) -> CrossingSets {
    CrossingSets { segments: points.windows(2).map(|w| segment_crossings(rank, &w[0], &w[1])).collect() }
}

pub fn crossing_sets(gallery: &Gallery) -> CrossingSets {
    crossing_sets_of_path(gallery.rank(), &gallery.path_vertices())
}

/// `γ_{1⋯n}`, the gallery of the word `1 2 ⋯ n`.
pub fn full_column_word_gallery(rank: Rank) -> Gallery {
    Gallery::from_word(rank, &Word((1..=rank.get()).collect())).expect("letters in range")
}

pub fn weight_of_full_column_word(rank: Rank) -> WeightVector {
    full_column_word_gallery(rank).weight()
}

/// `η = γ ∗ γ_{1⋯n} ∗ δ`. Products read right to left, so in reading order
/// `η` lists the columns of `δ`, then the singletons `1, …, n`, then the
/// columns of `γ`. Returns `η` and the number `k` of columns before the
/// inserted block.
pub fn insert_full_column(gamma: &Gallery, delta: &Gallery) -> Result<(Gallery, usize)> {
    if gamma.rank() != delta.rank() {
        return Err(Error::RankMismatch { left: gamma.rank().get(), right: delta.rank().get() });
    }
    let block = full_column_word_gallery(gamma.rank());
    let eta = Gallery::concat(gamma, &Gallery::concat(&block, delta)?)?;
    Ok((eta, delta.len()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointnessCheck {
    pub holds: bool,
    /// Crossing sets of the `n` inserted segments.
    pub inserted: Vec<Vec<AffineRoot>>,
    /// Two inserted segments (0-based within the block) sharing a root.
    pub witness: Option<(usize, usize, AffineRoot)>,
}

/// The crossing sets of the `n` inserted segments are pairwise disjoint.
pub fn appendix_disjointness(gamma: &Gallery, delta: &Gallery) -> Result<DisjointnessCheck> {
    let (eta, k) = insert_full_column(gamma, delta)?;
    let n = eta.rank().get();
    let sets = crossing_sets(&eta).segments;
    let inserted: Vec<Vec<AffineRoot>> = sets[k..k + n].to_vec();
    let mut witness = None;
    'search: for p in 0..n {
        for q in p + 1..n {
            if let Some(root) = inserted[p].iter().find(|r| inserted[q].contains(r)) {
                witness = Some((p, q, *root));
                break 'search;
            }
        }
    }
    Ok(DisjointnessCheck { holds: witness.is_none(), inserted, witness })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerCheck {
    pub holds: bool,
    /// Path vertex where the inserted block starts.
    pub start: LatticePoint,
    /// Inserted segment and root with `(α, start) > m`.
    pub witness: Option<(usize, AffineRoot)>,
}

/// Every `(α, m)` crossed by the inserted block satisfies
/// `(α, start) ≤ m`, i.e. the block start lies in `H⁻_{α,m}`.
pub fn stabilizer_condition(gamma: &Gallery, delta: &Gallery) -> Result<StabilizerCheck> {
    let (eta, k) = insert_full_column(gamma, delta)?;
    let n = eta.rank().get();
    let start = eta.path_vertices().swap_remove(k);
    let sets = crossing_sets(&eta).segments;
    let witness = sets[k..k + n]
        .iter()
        .enumerate()
        .find_map(|(p, set)| set.iter().find(|r| r.pair(&start) > r.level).map(|r| (p, *r)));
    Ok(StabilizerCheck { holds: witness.is_none(), start, witness })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncationCheck {
    pub holds: bool,
    /// Segment of `γ ∗ δ` whose crossing set differs from its counterpart
    /// in `η`.
    pub witness: Option<usize>,
}

/// Outside the inserted block the crossing sets of `η` coincide with those
/// of `γ ∗ δ`: the segments before it are identical and those after are
/// shifted by the all-ones vector, which no root sees.
pub fn truncation_agreement(gamma: &Gallery, delta: &Gallery) -> Result<TruncationCheck> {
    let (eta, k) = insert_full_column(gamma, delta)?;
    let n = eta.rank().get();
    let plain = crossing_sets(&Gallery::concat(gamma, delta)?).segments;
    let long = crossing_sets(&eta).segments;
    let witness = (0..plain.len()).find(|&s| {
        let t = if s < k { s } else { s + n };
        plain[s] != long[t]
    });
    Ok(TruncationCheck { holds: witness.is_none(), witness })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AppendixReport {
    pub disjointness: DisjointnessCheck,
    pub stabilizer: StabilizerCheck,
    pub truncation: TruncationCheck,
}

impl AppendixReport {
    pub fn holds(&self) -> bool {
        self.disjointness.holds && self.stabilizer.holds && self.truncation.holds
    }
}

pub fn appendix_check(gamma: &Gallery, delta: &Gallery) -> Result<AppendixReport> {
    Ok(AppendixReport {
        disjointness: appendix_disjointness(gamma, delta)?,
        stabilizer: stabilizer_condition(gamma, delta)?,
        truncation: truncation_agreement(gamma, delta)?,
    })
}

/// A gallery with up to `max_columns` columns of random lengths and entries.
pub fn random_gallery<R: Rng + ?Sized>(rng: &mut R, rank: Rank, max_columns: usize) -> Gallery {
    let n = rank.get();
    let len = rng.random_range(0..=max_columns);
    let columns = (0..len)
        .map(|_| {
            let d = rng.random_range(1..n);
            let bits = rand::seq::index::sample(rng, n, d).into_iter().fold(0u64, |acc, k| acc | (1u64 << k));
            Column::from_bits(bits)
        })
        .collect();
    Gallery::from_columns(rank, columns).expect("random columns are valid")
}
