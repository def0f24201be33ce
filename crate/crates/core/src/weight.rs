//! Weights of `SL_n` realized as integer count vectors modulo the all-ones
//! vector.

use std::fmt;

use crate::error::{Error, Result};
use crate::gallery::Rank;

/// Element of `Z^n / <(1,..,1)>`, stored with minimum coordinate zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector {
    counts: Vec<i64>,
}

impl WeightVector {
    /// Canonicalizes an arbitrary integer vector. Panics on an empty vector.
    pub fn from_counts(mut counts: Vec<i64>) -> Self {
        let min = *counts.iter().min().expect("weight vector needs at least one coordinate");
        for c in &mut counts {
            *c -= min;
        }
        WeightVector { counts }
    }

    pub fn zero(rank: Rank) -> Self {
        WeightVector { counts: vec![0; rank.get()] }
    }

    /// The simple root `α_i = ε_i − ε_{i+1}`.
    pub fn simple_root(rank: Rank, i: usize) -> Result<Self> {
        rank.check_index(i)?;
        let mut counts = vec![0; rank.get()];
        counts[i - 1] = 1;
        counts[i] = -1;
        Ok(Self::from_counts(counts))
    }

    pub fn counts(&self) -> &[i64] {
        &self.counts
    }

    pub fn rank(&self) -> usize {
        self.counts.len()
    }

    /// `(μ, α_i^∨) = c_i − c_{i+1}`.
    pub fn pairing(&self, i: usize) -> Result<i64> {
        if i == 0 || i >= self.counts.len() {
            return Err(Error::IndexOutOfRange { i, max: self.counts.len().saturating_sub(1) });
        }
        Ok(self.counts[i - 1] - self.counts[i])
    }

    pub fn is_dominant(&self) -> bool {
        self.counts.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn plus(&self, other: &WeightVector) -> Result<WeightVector> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch { left: self.rank(), right: other.rank() });
        }
        Ok(Self::from_counts(self.counts.iter().zip(&other.counts).map(|(a, b)| a + b).collect()))
    }

    pub fn minus(&self, other: &WeightVector) -> Result<WeightVector> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch { left: self.rank(), right: other.rank() });
        }
        Ok(Self::from_counts(self.counts.iter().zip(&other.counts).map(|(a, b)| a - b).collect()))
    }

    /// Dominance order `self ≤ upper`: `upper − self` is a nonnegative
    /// integer combination of simple roots.
    pub fn dominated_by(&self, upper: &WeightVector) -> bool {
        self.root_coordinates(upper).is_some_and(|k| k.iter().all(|&x| x >= 0))
    }

    /// Coordinates `k_i` with `upper − self = Σ k_i α_i`, if the difference
    /// lies in the root lattice.
    pub fn root_coordinates(&self, upper: &WeightVector) -> Option<Vec<i64>> {
        let n = self.rank() as i64;
        if upper.rank() != self.rank() {
            return None;
        }
        let diff: Vec<i64> = upper.counts.iter().zip(&self.counts).map(|(a, b)| a - b).collect();
        let total: i64 = diff.iter().sum();
        if total.rem_euclid(n) != 0 {
            return None;
        }
        let shift = total / n;
        let mut acc = 0;
        Some(
            diff[..diff.len() - 1]
                .iter()
                .map(|d| {
                    acc += d - shift;
                    acc
                })
                .collect(),
        )
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.counts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Dominant weight `λ = Σ m_i ω_i` in fundamental coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominantWeight {
    coords: Vec<u32>,
}

impl DominantWeight {
    pub fn new(rank: Rank, coords: Vec<u32>) -> Result<Self> {
        if coords.len() != rank.get() - 1 {
            return Err(Error::RankMismatch { left: rank.get(), right: coords.len() + 1 });
        }
        Ok(DominantWeight { coords })
    }

    pub fn zero(rank: Rank) -> Self {
        DominantWeight { coords: vec![0; rank.get() - 1] }
    }

    /// The fundamental weight `ω_i = ε_1 + ⋯ + ε_i`.
    pub fn fundamental(rank: Rank, i: usize) -> Result<Self> {
        rank.check_index(i)?;
        let mut coords = vec![0; rank.get() - 1];
        coords[i - 1] = 1;
        Ok(DominantWeight { coords })
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn rank(&self) -> Rank {
        Rank::new(self.coords.len() + 1).expect("coords come from a valid rank")
    }

    /// `c_k = Σ_{i ≥ k} m_i`, with `c_n = 0`.
    pub fn to_weight(&self) -> WeightVector {
        let mut counts = vec![0i64; self.coords.len() + 1];
        for k in (0..self.coords.len()).rev() {
            counts[k] = counts[k + 1] + i64::from(self.coords[k]);
        }
        WeightVector::from_counts(counts)
    }

    pub fn from_weight(weight: &WeightVector) -> Result<Self> {
        if !weight.is_dominant() {
            return Err(Error::NotDominant(weight.counts.clone()));
        }
        let coords = weight.counts.windows(2).map(|w| (w[0] - w[1]) as u32).collect();
        Ok(DominantWeight { coords })
    }

    /// Number of columns of the tableau shape attached to `λ`.
    pub fn column_count(&self) -> usize {
        self.coords.iter().map(|&m| m as usize).sum()
    }

    /// Column lengths of the shape attached to `λ`, weakly increasing:
    /// `m_1` ones, then `m_2` twos, and so on.
    pub fn shape(&self) -> Vec<usize> {
        self.coords.iter().enumerate().flat_map(|(i, &m)| std::iter::repeat_n(i + 1, m as usize)).collect()
    }

    /// Weight of the sum of fundamental weights indexed by column lengths.
    pub fn from_column_lengths(rank: Rank, lengths: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut coords = vec![0u32; rank.get() - 1];
        for d in lengths {
            if d == 0 || d >= rank.get() {
                return Err(Error::ShapeInvalid { shape: vec![d], n: rank.get() });
            }
            coords[d - 1] += 1;
        }
        Ok(DominantWeight { coords })
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(i, &m)| if m == 1 { format!("w{}", i + 1) } else { format!("{m}w{}", i + 1) })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}
