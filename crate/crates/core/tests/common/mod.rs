//! Exhaustive checks shared by the property tests and the acceptance suite.
//! Each check returns the first counterexample as an error message.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use gallery_crystal::affine::{appendix_check, crossing_sets, positive_roots};
use gallery_crystal::crystal::{e, epsilon, f, phi as phi_i};
use gallery_crystal::gallery::{galleries_of_shape, shapes_up_to};
use gallery_crystal::graph::{
    components_of_shape, connected_component, generate_b_lambda, highest_weight_vertex, is_isomorphic, weyl_dimension,
};
use gallery_crystal::mv::{fiber, image_weights, phi, verify_surjectivity, MvLabel};
use gallery_crystal::plactic::{enumerate_ssyt, is_ssyt, normal_form, PlacticOracle};
use gallery_crystal::{DominantWeight, Gallery, Rank, WeightVector, Word};

pub type Check = Result<(), String>;

pub fn rank(n: usize) -> Rank {
    Rank::new(n).unwrap()
}

pub fn gallery(n: usize, text: &str) -> Gallery {
    Gallery::parse(rank(n), text).unwrap()
}

pub fn word_gallery(n: usize, letters: &[usize]) -> Gallery {
    Gallery::from_word(rank(n), &Word(letters.to_vec())).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Every gallery of every shape with at most `max_boxes` boxes.
pub fn galleries_up_to(n: usize, max_boxes: usize) -> Vec<Gallery> {
    shapes_up_to(rank(n), max_boxes).iter().flat_map(|d| galleries_of_shape(rank(n), d).unwrap()).collect()
}

/// All words over `1..=n` of length at most `max_len`, shortest first.
pub fn words_up_to(n: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word(vec![])];
    let mut layer = vec![Vec::<usize>::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                (1..=n).map(move |l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned().map(Word));
    }
    out
}

fn word_image(g: &Gallery) -> Gallery {
    Gallery::from_word(g.rank(), &g.word()).unwrap()
}

/// Crystal axioms, shape preservation, the word-reading morphism and the
/// characterization of dominant galleries, at one vertex.
pub fn crystal_axioms_at(g: &Gallery) -> Check {
    let rank = g.rank();
    let wt = g.weight();
    let mut all_e_zero = true;
    for i in rank.simple_roots() {
        let alpha = WeightVector::simple_root(rank, i).unwrap();
        let (eps, ph) = (epsilon(g, i).unwrap() as i64, phi_i(g, i).unwrap() as i64);
        ensure(ph - eps == wt.pairing(i).unwrap(), || format!("string axiom fails at {g}, i={i}"))?;
        let down = f(g, i).unwrap();
        let up = e(g, i).unwrap();
        ensure((ph == 0) == down.is_none(), || format!("phi=0 iff f=0 fails at {g}, i={i}"))?;
        ensure((eps == 0) == up.is_none(), || format!("eps=0 iff e=0 fails at {g}, i={i}"))?;
        if let Some(h) = &down {
            ensure(e(h, i).unwrap().as_ref() == Some(g), || format!("e_{i} f_{i} {g} != {g}"))?;
            ensure(h.weight() == wt.minus(&alpha).unwrap(), || format!("weight shift fails for f_{i} {g}"))?;
            ensure(h.shape() == g.shape(), || format!("f_{i} changes the shape of {g}"))?;
            ensure(epsilon(h, i).unwrap() as i64 == eps + 1, || format!("eps(f {g}) != eps + 1"))?;
        }
        if let Some(h) = &up {
            all_e_zero = false;
            ensure(f(h, i).unwrap().as_ref() == Some(g), || format!("f_{i} e_{i} {g} != {g}"))?;
            ensure(h.weight() == wt.plus(&alpha).unwrap(), || format!("weight shift fails for e_{i} {g}"))?;
            ensure(h.shape() == g.shape(), || format!("e_{i} changes the shape of {g}"))?;
            ensure(phi_i(h, i).unwrap() as i64 == ph + 1, || format!("phi(e {g}) != phi + 1"))?;
        }
        let w = word_image(g);
        ensure(f(&w, i).unwrap() == down.as_ref().map(word_image), || {
            format!("word reading fails to commute with f_{i} at {g}")
        })?;
        ensure(e(&w, i).unwrap() == up.as_ref().map(word_image), || {
            format!("word reading fails to commute with e_{i} at {g}")
        })?;
    }
    ensure(g.is_dominant() == all_e_zero, || format!("dominance mismatch at {g}"))?;
    ensure(g.is_dominant() == word_image(g).is_dominant(), || format!("word image dominance mismatch at {g}"))
}

pub fn crystal_axioms(n: usize, max_boxes: usize) -> Result<usize, String> {
    let all = galleries_up_to(n, max_boxes);
    for g in &all {
        crystal_axioms_at(g)?;
    }
    Ok(all.len())
}

/// Rewriting classes and normal-form fibers give the same relation on all
/// pairs of words up to `max_len`.
pub fn oracle_agreement(n: usize, max_len: usize) -> Result<usize, String> {
    let r = rank(n);
    let mut oracle = PlacticOracle::new(r, max_len);
    let words = words_up_to(n, max_len);
    let class: Vec<usize> = words.iter().map(|w| oracle.class_of(w)).collect();
    let forms: Vec<Gallery> = words.iter().map(|w| normal_form(&Gallery::from_word(r, w).unwrap())).collect();
    let mut pairs = 0;
    for a in 0..words.len() {
        for b in a..words.len() {
            pairs += 1;
            ensure((class[a] == class[b]) == (forms[a] == forms[b]), || {
                format!(
                    "words {} and {}: oracle {} vs normal form {}",
                    words[a],
                    words[b],
                    class[a] == class[b],
                    forms[a] == forms[b]
                )
            })?;
        }
    }
    Ok(pairs)
}

/// Every dominant weight with Weyl dimension at most `bound`.
pub fn dominant_weights_up_to_dimension(n: usize, bound: u128) -> Vec<DominantWeight> {
    fn rec(n: usize, prefix: &mut Vec<u32>, bound: u128, out: &mut Vec<DominantWeight>) {
        let weight = |p: &[u32]| {
            let mut m = p.to_vec();
            m.resize(n - 1, 0);
            DominantWeight::new(Rank::new(n).unwrap(), m).unwrap()
        };
        if prefix.len() == n - 1 {
            out.push(weight(prefix));
            return;
        }
        // the dimension strictly grows in every coordinate
        for m in 0.. {
            prefix.push(m);
            let fits = weyl_dimension(&weight(prefix)) <= bound;
            if fits {
                rec(n, prefix, bound, out);
            }
            prefix.pop();
            if !fits {
                break;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), bound, &mut out);
    out
}

/// `|B(λ)|` against Weyl's formula, and the weight multiset and vertex set of
/// `B(λ)` against direct tableau enumeration.
pub fn dimension_and_multiplicities(lambda: &DominantWeight) -> Check {
    let graph = generate_b_lambda(lambda);
    let dim = weyl_dimension(lambda);
    ensure(graph.len() as u128 == dim, || format!("|B({lambda})| = {} but Weyl gives {dim}", graph.len()))?;
    ensure(graph.vertices().iter().all(is_ssyt), || format!("B({lambda}) has a non-tableau vertex"))?;
    let tableaux = enumerate_ssyt(lambda);
    let mut by_crystal: BTreeMap<WeightVector, usize> = BTreeMap::new();
    for v in graph.vertices() {
        *by_crystal.entry(v.weight()).or_default() += 1;
    }
    let mut by_tableaux: BTreeMap<WeightVector, usize> = BTreeMap::new();
    for t in &tableaux {
        *by_tableaux.entry(t.weight()).or_default() += 1;
    }
    ensure(by_crystal == by_tableaux, || format!("weight multiplicities of B({lambda}) differ from tableau contents"))?;
    ensure(graph.vertices() == tableaux.as_slice(), || format!("B({lambda}) is not the set of tableaux"))
}

/// Surjectivity onto all labels, injectivity on components, fibers
/// partitioning `Γ(d)`, and component counts per `λ`.
pub fn label_map_for_shape(n: usize, shape: &[usize]) -> Check {
    let r = rank(n);
    let all = galleries_of_shape(r, shape).unwrap();
    let expected: usize = shape.iter().map(|&d| binomial(n, d)).product();
    ensure(all.len() == expected, || format!("|Γ({shape:?})| = {} != {expected}", all.len()))?;

    let report = verify_surjectivity(r, shape).unwrap();
    ensure(report.is_surjective(), || format!("phi misses labels on shape {shape:?}: {report:?}"))?;

    // fibers: grouping by label against fiber()
    let mut groups: BTreeMap<MvLabel, Vec<Gallery>> = BTreeMap::new();
    for g in &all {
        groups.entry(phi(g)).or_default().push(g.clone());
    }
    let mut covered = 0;
    for (label, members) in &groups {
        let fib = fiber(label, shape).unwrap();
        ensure(&fib == members, || format!("fiber of {} on {shape:?} disagrees with grouping", label.tableau()))?;
        covered += fib.len();
    }
    ensure(covered == expected, || format!("fibers cover {covered} of {expected} galleries on {shape:?}"))?;

    // per component: injective, every member maps to the same λ
    let comps = components_of_shape(r, shape).unwrap();
    let mut per_lambda: BTreeMap<DominantWeight, usize> = BTreeMap::new();
    for comp in &comps {
        let labels: Vec<MvLabel> = comp.vertices().iter().map(phi).collect();
        let distinct: BTreeSet<&Gallery> = labels.iter().map(MvLabel::tableau).collect();
        ensure(distinct.len() == comp.len(), || format!("phi not injective on a component of {shape:?}"))?;
        let lambdas: BTreeSet<&DominantWeight> = labels.iter().map(MvLabel::lambda).collect();
        ensure(lambdas.len() == 1, || format!("component of {shape:?} meets several λ"))?;
        *per_lambda.entry(lambdas.into_iter().next().unwrap().clone()).or_default() += 1;
    }
    // n^λ_d counted directly as dominant galleries of weight λ
    let mut dominant: BTreeMap<DominantWeight, usize> = BTreeMap::new();
    for g in all.iter().filter(|g| g.is_dominant()) {
        *dominant.entry(DominantWeight::from_weight(&g.weight()).unwrap()).or_default() += 1;
    }
    ensure(per_lambda == dominant, || {
        format!("component multiplicities {per_lambda:?} != dominant counts {dominant:?}")
    })?;
    ensure(image_weights(r, shape).unwrap() == dominant, || format!("image_weights disagrees on {shape:?}"))
}

pub fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

/// The three full column insertion checks on one pair.
pub fn appendix_at(gamma: &Gallery, delta: &Gallery) -> Check {
    let report = appendix_check(gamma, delta).unwrap();
    ensure(report.holds(), || format!("insertion checks fail for γ={gamma:?} δ={delta:?}: {report:?}"))
}

pub fn galleries_with_columns(n: usize, max_columns: usize) -> Vec<Gallery> {
    (0..=max_columns)
        .flat_map(|len| {
            let shapes: Vec<Vec<usize>> =
                shapes_up_to(rank(n), len * (n - 1)).into_iter().filter(|s| s.len() == len).collect();
            shapes.into_iter().flat_map(move |s| galleries_of_shape(rank(n), &s).unwrap())
        })
        .collect()
}

/// `#{i : α ∈ S_i} − #{i : (α,·) drops on segment i} = (α, end) − (α, 0)`.
pub fn crossing_sum_rule(g: &Gallery) -> Check {
    let sets = crossing_sets(g).segments;
    let points = g.path_vertices();
    let roots = positive_roots(g.rank());
    for s in &sets {
        ensure(s.len() <= roots.len(), || format!("oversized crossing set on {g}"))?;
    }
    for &(a, b) in &roots {
        let up = sets.iter().filter(|s| s.iter().any(|r| (r.a, r.b) == (a, b))).count() as i64;
        let down = points.windows(2).filter(|w| w[1].pair(a, b) < w[0].pair(a, b)).count() as i64;
        let net = points.last().unwrap().pair(a, b) - points[0].pair(a, b);
        ensure(up - down == net, || format!("sum rule fails on {g} for e{a}-e{b}"))?;
    }
    Ok(())
}

/// The highest weight vertex reached by applying `e` in the order given by
/// `choices` (cycled) agrees with the default search.
pub fn highest_weight_order_independent(g: &Gallery, choices: &[usize]) -> Check {
    let mut current = g.clone();
    let mut k = 0;
    loop {
        let options: Vec<Gallery> = current.rank().simple_roots().filter_map(|i| e(&current, i).unwrap()).collect();
        if options.is_empty() {
            break;
        }
        let pick = choices.get(k % choices.len().max(1)).copied().unwrap_or(0) % options.len();
        current = options[pick].clone();
        k += 1;
    }
    ensure(current == highest_weight_vertex(g), || format!("highest weight of {g} depends on order"))
}

/// Components of equal highest weight are isomorphic, distinct ones are not.
pub fn components_isomorphic_by_weight(n: usize, shape: &[usize]) -> Check {
    let comps = components_of_shape(rank(n), shape).unwrap();
    let hw: Vec<WeightVector> = comps.iter().map(|c| c.vertices()[c.sources()[0]].weight()).collect();
    for a in 0..comps.len() {
        for b in a..comps.len() {
            let iso = is_isomorphic(&comps[a], &comps[b]).unwrap().is_some();
            ensure(iso == (hw[a] == hw[b]), || format!("isomorphism vs weight mismatch on {shape:?}"))?;
        }
    }
    Ok(())
}

/// Labeled `f`-edges of the component of `g`, by display strings.
pub fn edge_set(g: &Gallery) -> BTreeSet<(String, usize, String)> {
    connected_component(g).labeled_edges().into_iter().collect()
}

pub fn edges(list: &[(&str, usize, &str)]) -> BTreeSet<(String, usize, String)> {
    list.iter().map(|&(a, i, b)| (a.to_string(), i, b.to_string())).collect()
}
