//! Finite crystal graphs of galleries: connected components, highest weight
//! vertices, `B(λ)`, isomorphism testing and the decomposition of `Γ(d)`.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::crystal::{e, f};
use crate::error::{Error, Result};
use crate::gallery::{galleries_of_shape, Column, Gallery, Rank};
use crate::weight::DominantWeight;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub i: usize,
}

/// Vertices in canonical order; an edge `from -i-> to` means
/// `f_i(from) = to`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalGraph {
    rank: Rank,
    vertices: Vec<Gallery>,
    index: HashMap<Gallery, usize>,
    edges: Vec<Edge>,
    /// `out[v][i - 1]` is the target of the `i`-edge leaving `v`.
    out: Vec<Vec<Option<usize>>>,
    into: Vec<Vec<Option<usize>>>,
}

impl CrystalGraph {
    /// Induced graph on a set of galleries. Edges leaving the set are dropped.
    pub fn from_vertices(rank: Rank, vertices: impl IntoIterator<Item = Gallery>) -> Result<Self> {
        let mut vertices: Vec<Gallery> = vertices.into_iter().collect();
        for v in &vertices {
            if v.rank() != rank {
                return Err(Error::RankMismatch { left: rank.get(), right: v.rank().get() });
            }
        }
        vertices.sort();
        vertices.dedup();
        let index: HashMap<Gallery, usize> = vertices.iter().cloned().enumerate().map(|(k, v)| (v, k)).collect();
        let mut edges = Vec::new();
        for (k, v) in vertices.iter().enumerate() {
            for i in rank.simple_roots() {
                if let Some(t) = f(v, i)? {
                    if let Some(&to) = index.get(&t) {
                        edges.push(Edge { from: k, to, i });
                    }
                }
            }
        }
        edges.sort();
        let mut out = vec![vec![None; rank.get() - 1]; vertices.len()];
        let mut into = out.clone();
        for e in &edges {
            out[e.from][e.i - 1] = Some(e.to);
            into[e.to][e.i - 1] = Some(e.from);
        }
        Ok(CrystalGraph { rank, vertices, index, edges, out, into })
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn vertices(&self) -> &[Gallery] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, g: &Gallery) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn contains(&self, g: &Gallery) -> bool {
        self.index.contains_key(g)
    }

    /// Target of the `i`-edge leaving vertex `v`.
    pub fn f_edge(&self, v: usize, i: usize) -> Option<usize> {
        self.out[v][i - 1]
    }

    pub fn e_edge(&self, v: usize, i: usize) -> Option<usize> {
        self.into[v][i - 1]
    }

    /// Vertices with no incoming edge.
    pub fn sources(&self) -> Vec<usize> {
        let mut has_in = vec![false; self.vertices.len()];
        for e in &self.edges {
            has_in[e.to] = true;
        }
        (0..self.vertices.len()).filter(|&k| !has_in[k]).collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            adj[e.from].push(e.to);
            adj[e.to].push(e.from);
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.vertices.len()
    }

    /// Edges as `(source, i, target)` gallery strings.
    pub fn labeled_edges(&self) -> Vec<(String, usize, String)> {
        self.edges.iter().map(|e| (self.vertices[e.from].to_string(), e.i, self.vertices[e.to].to_string())).collect()
    }
}

/// `Conn(γ)`: closure of `{γ}` under every `f_i` and `e_i`.
pub fn connected_component(gallery: &Gallery) -> CrystalGraph {
    let rank = gallery.rank();
    let mut seen: std::collections::HashSet<Gallery> = std::collections::HashSet::from([gallery.clone()]);
    let mut queue = VecDeque::from([gallery.clone()]);
    while let Some(v) = queue.pop_front() {
        for i in rank.simple_roots() {
            for next in [f(&v, i), e(&v, i)] {
                if let Some(w) = next.expect("index in range") {
                    if seen.insert(w.clone()) {
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    CrystalGraph::from_vertices(rank, seen).expect("single rank")
}

/// Applies `e_i` with the smallest applicable `i` until none applies.
pub fn highest_weight_vertex(gallery: &Gallery) -> Gallery {
    let mut current = gallery.clone();
    'outer: loop {
        for i in current.rank().simple_roots() {
            if let Some(next) = e(&current, i).expect("index in range") {
                current = next;
                continue 'outer;
            }
        }
        return current;
    }
}

/// The tableau with `m_i` columns of length `i`, shortest first in reading
/// order, each column filled `1..d`.
pub fn canonical_dominant_gallery(lambda: &DominantWeight) -> Gallery {
    let rank = lambda.rank();
    let columns = lambda.shape().into_iter().map(Column::initial).collect();
    Gallery::from_columns(rank, columns).expect("column lengths are below n")
}

pub fn generate_b_lambda(lambda: &DominantWeight) -> CrystalGraph {
    connected_component(&canonical_dominant_gallery(lambda))
}

/// Vertex map of a crystal isomorphism, indexed by vertices of the first
/// graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isomorphism {
    pub map: Vec<usize>,
}

/// Simultaneous breadth-first search from the unique sources, matching edge
/// labels in both directions and weights.
pub fn is_isomorphic(a: &CrystalGraph, b: &CrystalGraph) -> Result<Option<Isomorphism>> {
    if !a.is_connected() || !b.is_connected() {
        return Err(Error::NotConnected);
    }
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch { left: a.rank().get(), right: b.rank().get() });
    }
    if a.len() != b.len() || a.edges().len() != b.edges().len() {
        return Ok(None);
    }
    if a.is_empty() {
        return Ok(Some(Isomorphism { map: Vec::new() }));
    }
    let (sa, sb) = (a.sources(), b.sources());
    if sa.len() != 1 || sb.len() != 1 {
        return Ok(None);
    }
    let mut map: Vec<Option<usize>> = vec![None; a.len()];
    let mut used = vec![false; b.len()];
    map[sa[0]] = Some(sb[0]);
    used[sb[0]] = true;
    let mut queue = VecDeque::from([sa[0]]);
    while let Some(u) = queue.pop_front() {
        let v = map[u].unwrap();
        if a.vertices()[u].weight() != b.vertices()[v].weight() {
            return Ok(None);
        }
        for i in a.rank().simple_roots() {
            for (nu, nv) in [(a.f_edge(u, i), b.f_edge(v, i)), (a.e_edge(u, i), b.e_edge(v, i))] {
                match (nu, nv) {
                    (None, None) => {}
                    (Some(x), Some(y)) => match map[x] {
                        Some(m) if m == y => {}
                        Some(_) => return Ok(None),
                        None => {
                            if used[y] {
                                return Ok(None);
                            }
                            map[x] = Some(y);
                            used[y] = true;
                            queue.push_back(x);
                        }
                    },
                    _ => return Ok(None),
                }
            }
        }
    }
    let map: Option<Vec<usize>> = map.into_iter().collect();
    Ok(map.map(|map| Isomorphism { map }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionEntry {
    pub lambda: DominantWeight,
    pub multiplicity: usize,
    /// Highest weight vertices of the components, in canonical order.
    pub representatives: Vec<Gallery>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub rank: Rank,
    pub shape: Vec<usize>,
    pub total: usize,
    pub entries: Vec<DecompositionEntry>,
}

impl Decomposition {
    pub fn multiplicity(&self, lambda: &DominantWeight) -> usize {
        self.entries.iter().find(|e| &e.lambda == lambda).map_or(0, |e| e.multiplicity)
    }
}

/// Connected components of `Γ(d)`, in canonical order of their highest
/// weight vertices.
pub fn components_of_shape(rank: Rank, shape: &[usize]) -> Result<Vec<CrystalGraph>> {
    let all = galleries_of_shape(rank, shape)?;
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for g in all {
        if seen.contains(&g) {
            continue;
        }
        let comp = connected_component(&g);
        seen.extend(comp.vertices().iter().cloned());
        out.push(comp);
    }
    Ok(out)
}

/// Groups the components of `Γ(d)` by highest weight.
pub fn decompose(rank: Rank, shape: &[usize]) -> Result<Decomposition> {
    let comps = components_of_shape(rank, shape)?;
    let total = comps.iter().map(CrystalGraph::len).sum();
    let mut groups: BTreeMap<DominantWeight, Vec<Gallery>> = BTreeMap::new();
    for comp in &comps {
        let sources = comp.sources();
        assert_eq!(sources.len(), 1, "component without a unique highest weight vertex");
        let hw = &comp.vertices()[sources[0]];
        assert!(hw.is_dominant(), "highest weight vertex {hw} is not dominant");
        let lambda = DominantWeight::from_weight(&hw.weight())?;
        groups.entry(lambda).or_default().push(hw.clone());
    }
    let entries = groups
        .into_iter()
        .map(|(lambda, mut reps)| {
            reps.sort();
            DecompositionEntry { lambda, multiplicity: reps.len(), representatives: reps }
        })
        .collect();
    Ok(Decomposition { rank, shape: shape.to_vec(), total, entries })
}

/// Weyl's dimension formula `Π_{i<j} (c_i − c_j + j − i)/(j − i)`.
pub fn weyl_dimension(lambda: &DominantWeight) -> u128 {
    let c = lambda.to_weight();
    let c = c.counts();
    let n = c.len();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..n {
        for j in i + 1..n {
            let gap = (j - i) as u128;
            num = num.checked_mul((c[i] - c[j]) as u128 + gap).expect("dimension overflow");
            den = den.checked_mul(gap).expect("dimension overflow");
        }
    }
    debug_assert_eq!(num % den, 0);
    num / den
}
