//! Brute-force plactic classes by closing words under single rewrites.
//!
//! Relations, for the right-to-left column reading of galleries:
//!
//! * `y x z ≡ y z x` for `x ≤ y < z`
//! * `z x y ≡ x z y` for `x < y ≤ z`
//! * `1 2 ⋯ n ≡ ∅`, inserted or deleted anywhere.
//!
//! Words are indexed densely by length and base-`n` value, and the closure
//! is a union-find over every word of length at most `max_len + n`. This
//! bound keeps the search finite; it connects every class at test scale but
//! is not claimed to be sufficient in general.

use crate::gallery::{Rank, Word};

/// Union-find over all words up to a length bound.
pub struct PlacticOracle {
    rank: Rank,
    max_len: usize,
    bound: usize,
    /// `offsets[len]` is the index of the first word of length `len`.
    offsets: Vec<usize>,
    parent: Vec<u32>,
}

impl PlacticOracle {
    pub fn new(rank: Rank, max_len: usize) -> Self {
        let n = rank.get();
        let bound = max_len + n;
        let mut offsets = Vec::with_capacity(bound + 2);
        let mut total = 0usize;
        for len in 0..=bound {
            offsets.push(total);
            total += n.pow(len as u32);
        }
        offsets.push(total);
        let mut oracle = PlacticOracle { rank, max_len, bound, offsets, parent: (0..total as u32).collect() };
        oracle.close();
        oracle
    }

    fn index(&self, letters: &[usize]) -> usize {
        let n = self.rank.get();
        self.offsets[letters.len()] + letters.iter().fold(0, |acc, &l| acc * n + (l - 1))
    }

    fn decode(&self, len: usize, mut value: usize, out: &mut Vec<usize>) {
        let n = self.rank.get();
        out.clear();
        out.resize(len, 0);
        for slot in out.iter_mut().rev() {
            *slot = value % n + 1;
            value /= n;
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let p = self.parent[x] as usize;
            self.parent[x] = self.parent[p];
            x = p;
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo as u32;
        }
    }

    fn close(&mut self) {
        let n = self.rank.get();
        let mut word = Vec::new();
        let mut other = Vec::new();
        for len in 0..=self.bound {
            for value in 0..n.pow(len as u32) {
                self.decode(len, value, &mut word);
                let here = self.offsets[len] + value;
                for p in 0..len.saturating_sub(2) {
                    let (u, v, w) = (word[p], word[p + 1], word[p + 2]);
                    // y x z -> y z x with x ≤ y < z
                    if v <= u && u < w {
                        other.clone_from(&word);
                        other.swap(p + 1, p + 2);
                        let there = self.index(&other);
                        self.union(here, there);
                    }
                    // z x y -> x z y with x < y ≤ z
                    if v < w && w <= u {
                        other.clone_from(&word);
                        other.swap(p, p + 1);
                        let there = self.index(&other);
                        self.union(here, there);
                    }
                }
                // delete a factor 1 2 ⋯ n
                if len >= n {
                    for p in 0..=len - n {
                        if (0..n).all(|k| word[p + k] == k + 1) {
                            other.clear();
                            other.extend_from_slice(&word[..p]);
                            other.extend_from_slice(&word[p + n..]);
                            let there = self.index(&other);
                            self.union(here, there);
                        }
                    }
                }
            }
        }
    }

    /// Class representative for a word of length at most the search bound.
    pub fn class_of(&mut self, word: &Word) -> usize {
        assert!(word.len() <= self.bound, "word longer than the oracle's search bound");
        let idx = self.index(word.letters());
        self.find(idx)
    }

    pub fn same_class(&mut self, a: &Word, b: &Word) -> bool {
        self.class_of(a) == self.class_of(b)
    }

    /// Partition of all words of length at most `max_len`: each class sorted
    /// by (length, letters), classes sorted by their first word.
    pub fn classes(&mut self) -> Vec<Vec<Word>> {
        let n = self.rank.get();
        let mut groups: std::collections::BTreeMap<usize, Vec<Word>> = Default::default();
        let mut word = Vec::new();
        for len in 0..=self.max_len {
            for value in 0..n.pow(len as u32) {
                self.decode(len, value, &mut word);
                let root = self.find(self.offsets[len] + value);
                groups.entry(root).or_default().push(Word(word.clone()));
            }
        }
        let mut classes: Vec<Vec<Word>> = groups
            .into_values()
            .map(|mut c| {
                c.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
                c
            })
            .collect();
        classes.sort_by(|a, b| {
            let (x, y) = (&a[0], &b[0]);
            x.len().cmp(&y.len()).then_with(|| x.cmp(y))
        });
        classes
    }
}

pub fn oracle_plactic_classes(max_len: usize, rank: Rank) -> Vec<Vec<Word>> {
    PlacticOracle::new(rank, max_len).classes()
}
