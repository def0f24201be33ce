//! The map from galleries to MV-cycle labels.
//!
//! An MV cycle in `Z(λ)_μ` is named by the pair `(λ, T)` with `T` the unique
//! semistandard tableau of shape attached to `λ` and weight `μ`. A gallery is
//! sent to the label of its plactic normal form, so fibers are plactic
//! classes intersected with a fixed shape.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::gallery::{galleries_of_shape, Gallery, Rank};
use crate::graph::{components_of_shape, decompose, highest_weight_vertex};
use crate::plactic::{enumerate_ssyt, is_ssyt, normal_form};
use crate::weight::{DominantWeight, WeightVector};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MvLabel {
    lambda: DominantWeight,
    tableau: Gallery,
    mu: WeightVector,
}

impl MvLabel {
    /// Checks that `tableau` is semistandard of the shape attached to
    /// `lambda`; `μ` is read off the tableau.
    pub fn new(lambda: DominantWeight, tableau: Gallery) -> Result<Self> {
        if lambda.rank() != tableau.rank() {
            return Err(Error::RankMismatch { left: lambda.rank().get(), right: tableau.rank().get() });
        }
        if !is_ssyt(&tableau) {
            return Err(Error::InvalidLabel(format!("{tableau} is not a semistandard tableau")));
        }
        if tableau.shape() != lambda.shape() {
            return Err(Error::InvalidLabel(format!(
                "tableau {tableau} has shape {:?}, {lambda} needs {:?}",
                tableau.shape(),
                lambda.shape()
            )));
        }
        let mu = tableau.weight();
        debug_assert!(mu.dominated_by(&lambda.to_weight()));
        Ok(MvLabel { lambda, tableau, mu })
    }

    pub fn lambda(&self) -> &DominantWeight {
        &self.lambda
    }

    pub fn tableau(&self) -> &Gallery {
        &self.tableau
    }

    pub fn mu(&self) -> &WeightVector {
        &self.mu
    }
}

/// `φ(γ)`: the label of the normal form of `γ`.
pub fn phi(gallery: &Gallery) -> MvLabel {
    let tableau = normal_form(gallery);
    let lambda = DominantWeight::from_column_lengths(tableau.rank(), tableau.shape())
        .expect("normal form columns are shorter than n");
    let mu = gallery.weight();
    debug_assert_eq!(mu, tableau.weight());
    MvLabel { lambda, tableau, mu }
}

/// All galleries of shape `shape` mapped to `label`, in canonical order.
pub fn fiber(label: &MvLabel, shape: &[usize]) -> Result<Vec<Gallery>> {
    Ok(galleries_of_shape(label.lambda.rank(), shape)?
        .into_iter()
        .filter(|g| normal_form(g) == label.tableau)
        .collect())
}

/// `λ ↦ n^λ_d` over `X⁺_d`.
pub fn image_weights(rank: Rank, shape: &[usize]) -> Result<BTreeMap<DominantWeight, usize>> {
    Ok(decompose(rank, shape)?.entries.into_iter().map(|e| (e.lambda, e.multiplicity)).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurjectivityEntry {
    pub lambda: DominantWeight,
    /// Number of semistandard tableaux of shape attached to `λ`.
    pub expected: usize,
    pub hit: usize,
    pub missed: Vec<Gallery>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurjectivityReport {
    pub entries: Vec<SurjectivityEntry>,
}

impl SurjectivityReport {
    pub fn is_surjective(&self) -> bool {
        self.entries.iter().all(|e| e.missed.is_empty())
    }
}

/// For each `λ ∈ X⁺_d`, checks that every tableau of shape attached to `λ`
/// (enumerated directly) is the normal form of some gallery of shape `d`.
pub fn verify_surjectivity(rank: Rank, shape: &[usize]) -> Result<SurjectivityReport> {
    let weights = image_weights(rank, shape)?;
    let image: BTreeSet<MvLabel> = galleries_of_shape(rank, shape)?.iter().map(phi).collect();
    let entries = weights
        .into_keys()
        .map(|lambda| {
            let all = enumerate_ssyt(&lambda);
            let missed: Vec<Gallery> = all
                .iter()
                .filter(|t| {
                    let label =
                        MvLabel::new(lambda.clone(), (*t).clone()).expect("enumerated tableaux are valid labels");
                    !image.contains(&label)
                })
                .cloned()
                .collect();
            SurjectivityEntry { expected: all.len(), hit: all.len() - missed.len(), missed, lambda }
        })
        .collect();
    Ok(SurjectivityReport { entries })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentImage {
    pub highest_weight_vertex: Gallery,
    pub lambda: DominantWeight,
    pub size: usize,
    /// `φ` restricted to the component is injective.
    pub injective: bool,
    /// The image is exactly the set of tableaux of shape attached to `λ`.
    pub onto_lambda: bool,
    /// `φ` commutes with every `f_i` on the component.
    pub commutes: bool,
}

/// Per-component check that `φ` is an isomorphism onto `Z(λ)`.
pub fn component_images(rank: Rank, shape: &[usize]) -> Result<Vec<ComponentImage>> {
    let comps = components_of_shape(rank, shape)?;
    let mut out = Vec::with_capacity(comps.len());
    for comp in comps {
        let hw = highest_weight_vertex(&comp.vertices()[0]);
        let lambda = DominantWeight::from_weight(&hw.weight())?;
        let labels: Vec<MvLabel> = comp.vertices().iter().map(phi).collect();
        let distinct: BTreeSet<&Gallery> = labels.iter().map(|l| &l.tableau).collect();
        let injective = distinct.len() == comp.len();
        let expected: BTreeSet<Gallery> = enumerate_ssyt(&lambda).into_iter().collect();
        let onto_lambda = labels.iter().all(|l| l.lambda == lambda)
            && distinct.into_iter().cloned().collect::<BTreeSet<_>>() == expected;
        let mut commutes = true;
        for (k, label) in labels.iter().enumerate() {
            for i in rank.simple_roots() {
                let down = comp.f_edge(k, i).map(|t| &labels[t].tableau);
                let image = crate::crystal::f(&label.tableau, i)?;
                if down != image.as_ref() {
                    commutes = false;
                }
            }
        }
        out.push(ComponentImage {
            highest_weight_vertex: hw,
            lambda,
            size: comp.len(),
            injective,
            onto_lambda,
            commutes,
        });
    }
    Ok(out)
}
