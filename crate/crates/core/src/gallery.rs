//! Galleries, their words, weights and lattice paths.
//!
//! A gallery is stored in *reading order*: index 0 is the rightmost column of
//! the displayed arrangement. The text form lists columns in display order
//! (left to right) separated by `|`, each column top to bottom separated by
//! `,`, so `3|1,2|5|2` has reading-order columns `[2],[5],[1,2],[3]` and word
//! `2 5 1 2 3`. The empty gallery prints as the empty string.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::weight::WeightVector;

/// The `n` of `SL_n`; the alphabet is `1..=n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rank(usize);

impl Rank {
    /// Columns are bitsets over the alphabet, which caps the rank.
    pub const MAX: usize = 64;

    pub fn new(n: usize) -> Result<Self> {
        if (2..=Self::MAX).contains(&n) {
            Ok(Rank(n))
        } else {
            Err(Error::RankOutOfRange(n))
        }
    }

    pub fn get(self) -> usize {
        self.0
    }

    /// Checks `1 ≤ i ≤ n − 1`.
    pub fn check_index(self, i: usize) -> Result<()> {
        if i == 0 || i >= self.0 {
            Err(Error::IndexOutOfRange { i, max: self.0 - 1 })
        } else {
            Ok(())
        }
    }

    pub fn check_letter(self, letter: usize) -> Result<()> {
        if letter == 0 || letter > self.0 {
            Err(Error::LetterOutOfRange { letter, n: self.0 })
        } else {
            Ok(())
        }
    }

    pub fn simple_roots(self) -> std::ops::Range<usize> {
        1..self.0
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A strictly increasing column of letters, stored as a bitset (bit `k − 1`
/// set iff letter `k` is present).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Column(u64);

impl Column {
    pub fn from_bits(bits: u64) -> Self {
        Column(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `1, 2, …, len`.
    pub fn initial(len: usize) -> Self {
        if len >= 64 {
            Column(u64::MAX)
        } else {
            Column((1u64 << len) - 1)
        }
    }

    pub fn singleton(letter: usize) -> Self {
        Column(1u64 << (letter - 1))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, letter: usize) -> bool {
        (1..=64).contains(&letter) && self.0 & (1u64 << (letter - 1)) != 0
    }

    /// Letters top to bottom.
    pub fn entries(self) -> impl Iterator<Item = usize> + Clone {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let k = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(k + 1)
            }
        })
    }

    /// Entry in row `row` (0 = top), if the column is that long.
    pub fn entry(self, row: usize) -> Option<usize> {
        self.entries().nth(row)
    }

    /// Replaces `from` by `to`; `None` if `from` is absent or `to` present.
    pub fn replace(self, from: usize, to: usize) -> Option<Column> {
        if !self.contains(from) || self.contains(to) {
            return None;
        }
        Some(Column((self.0 & !(1u64 << (from - 1))) | (1u64 << (to - 1))))
    }
}

impl Ord for Column {
    fn cmp(&self, other: &Self) -> Ordering {
        self.entries().cmp(other.entries())
    }
}

impl PartialOrd for Column {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.entries()).finish()
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, e) in self.entries().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Validates a raw column given top to bottom. `max_len` is `n − 1` for
/// galleries and `n` inside plactic normalization.
pub(crate) fn column_from_entries(rank: Rank, index: usize, entries: &[usize], max_len: usize) -> Result<Column> {
    if entries.is_empty() {
        return Err(Error::EmptyColumn { column: index });
    }
    let mut bits = 0u64;
    for &e in entries {
        rank.check_letter(e)?;
    }
    if entries.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NonIncreasingColumn { column: index, entries: entries.to_vec() });
    }
    if entries.len() > max_len {
        return Err(Error::ColumnTooLong { column: index, len: entries.len(), max: max_len });
    }
    for &e in entries {
        bits |= 1u64 << (e - 1);
    }
    Ok(Column(bits))
}

/// A lattice point of `Z^n`, not reduced modulo the all-ones vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint(pub Vec<i64>);

impl LatticePoint {
    pub fn origin(rank: Rank) -> Self {
        LatticePoint(vec![0; rank.get()])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// `(ε_a − ε_b, x) = x_a − x_b` with 1-based `a`, `b`.
    pub fn pair(&self, a: usize, b: usize) -> i64 {
        self.0[a - 1] - self.0[b - 1]
    }

    pub fn shifted(&self, column: Column) -> LatticePoint {
        let mut next = self.0.clone();
        for e in column.entries() {
            next[e - 1] += 1;
        }
        LatticePoint(next)
    }

    pub fn to_weight(&self) -> WeightVector {
        WeightVector::from_counts(self.0.clone())
    }

    /// Inside the closed dominant chamber: weakly decreasing coordinates.
    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }
}

/// A word over `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn new(rank: Rank, letters: Vec<usize>) -> Result<Self> {
        for &l in &letters {
            rank.check_letter(l)?;
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Letters separated by spaces or commas; for `n ≤ 9` a bare digit string
    /// such as `25123` is also accepted.
    pub fn parse(rank: Rank, text: &str) -> Result<Self> {
        let text = text.trim();
        let letters: Vec<usize> = if text.contains([' ', ',', '\t']) {
            text.split([' ', ',', '\t'])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad letter {t:?} in word"))))
                .collect::<Result<_>>()?
        } else if text.is_empty() {
            Vec::new()
        } else if rank.get() <= 9 {
            text.chars()
                .map(|c| {
                    c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad letter {c:?} in word")))
                })
                .collect::<Result<_>>()?
        } else {
            vec![text.parse::<usize>().map_err(|_| Error::Parse(format!("bad letter {text:?} in word")))?]
        };
        Word::new(rank, letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A filling of a sequence of columns, strictly increasing down each column,
/// with every column of length at most `n − 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gallery {
    rank: Rank,
    columns: Vec<Column>,
}

impl Gallery {
    pub fn empty(rank: Rank) -> Self {
        Gallery { rank, columns: Vec::new() }
    }

    /// Validates columns given in reading order, each top to bottom.
    pub fn new(rank: Rank, columns: &[Vec<usize>]) -> Result<Self> {
        let columns = columns
            .iter()
            .enumerate()
            .map(|(k, c)| column_from_entries(rank, k, c, rank.get() - 1))
            .collect::<Result<_>>()?;
        Ok(Gallery { rank, columns })
    }

    /// Same as [`Gallery::new`] but with columns in display order.
    pub fn from_display(rank: Rank, columns: &[Vec<usize>]) -> Result<Self> {
        Self::new(rank, &columns.iter().rev().cloned().collect::<Vec<_>>())
    }

    /// Caller guarantees every column is nonempty and shorter than `n`.
    pub(crate) fn from_columns_unchecked(rank: Rank, columns: Vec<Column>) -> Self {
        debug_assert!(columns.iter().all(|c| !c.is_empty() && c.len() < rank.get()));
        Gallery { rank, columns }
    }

    pub fn from_columns(rank: Rank, columns: Vec<Column>) -> Result<Self> {
        for (k, c) in columns.iter().enumerate() {
            if c.is_empty() {
                return Err(Error::EmptyColumn { column: k });
            }
            if c.bits() >> rank.get() != 0 {
                let letter = 64 - c.bits().leading_zeros() as usize;
                return Err(Error::LetterOutOfRange { letter, n: rank.get() });
            }
            if c.len() >= rank.get() {
                return Err(Error::ColumnTooLong { column: k, len: c.len(), max: rank.get() - 1 });
            }
        }
        Ok(Gallery { rank, columns })
    }

    /// The gallery `γ_w` of shape `(1, …, 1)` whose word is `w`.
    pub fn from_word(rank: Rank, word: &Word) -> Result<Self> {
        let columns = word
            .letters()
            .iter()
            .map(|&l| rank.check_letter(l).map(|_| Column::singleton(l)))
            .collect::<Result<_>>()?;
        Ok(Gallery { rank, columns })
    }

    /// Parses the display text form, e.g. `3|1,2|5|2`.
    pub fn parse(rank: Rank, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Gallery::empty(rank));
        }
        let display: Vec<Vec<usize>> = text
            .split('|')
            .map(|col| {
                col.split(',')
                    .map(|e| {
                        let e = e.trim();
                        e.parse::<usize>().map_err(|_| Error::Parse(format!("bad entry {e:?} in gallery {text:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        // error indices refer to display positions
        let columns = display
            .iter()
            .enumerate()
            .rev()
            .map(|(k, c)| column_from_entries(rank, k, c, rank.get() - 1))
            .collect::<Result<Vec<_>>>()?;
        Ok(Gallery { rank, columns })
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    /// Columns in reading order.
    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// Column lengths in reading order.
    pub fn shape(&self) -> Vec<usize> {
        self.columns.iter().map(|c| c.len()).collect()
    }

    pub fn box_count(&self) -> usize {
        self.columns.iter().map(|c| c.len()).sum()
    }

    pub fn word(&self) -> Word {
        Word(self.columns.iter().flat_map(|c| c.entries()).collect())
    }

    /// `γ2 ∗ γ1`: the columns of `first` are read before those of `second`.
    pub fn concat(second: &Gallery, first: &Gallery) -> Result<Gallery> {
        if second.rank != first.rank {
            return Err(Error::RankMismatch { left: second.rank.get(), right: first.rank.get() });
        }
        let mut columns = first.columns.clone();
        columns.extend_from_slice(&second.columns);
        Ok(Gallery { rank: first.rank, columns })
    }

    pub fn weight(&self) -> WeightVector {
        let mut counts = vec![0i64; self.rank.get()];
        for c in &self.columns {
            for e in c.entries() {
                counts[e - 1] += 1;
            }
        }
        WeightVector::from_counts(counts)
    }

    /// Vertices `γ_0 = 0, γ_1, …, γ_r` of the lattice path, as raw partial
    /// sums of column indicator vectors.
    pub fn path_vertices(&self) -> Vec<LatticePoint> {
        let mut points = Vec::with_capacity(self.columns.len() + 1);
        points.push(LatticePoint::origin(self.rank));
        for &c in &self.columns {
            let next = points.last().unwrap().shifted(c);
            points.push(next);
        }
        points
    }

    /// The path stays in the dominant chamber. Checking vertices suffices
    /// because the chamber is convex.
    pub fn is_dominant(&self) -> bool {
        let mut point = vec![0i64; self.rank.get()];
        for &c in &self.columns {
            for e in c.entries() {
                point[e - 1] += 1;
            }
            if point.windows(2).any(|w| w[0] < w[1]) {
                return false;
            }
        }
        true
    }

    pub(crate) fn with_column(&self, index: usize, column: Column) -> Gallery {
        let mut columns = self.columns.clone();
        columns[index] = column;
        Gallery { rank: self.rank, columns }
    }
}

impl Ord for Gallery {
    /// Rank, then shape, then column entries, all in reading order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank
            .cmp(&other.rank)
            .then_with(|| self.columns.iter().map(|c| c.len()).cmp(other.columns.iter().map(|c| c.len())))
            .then_with(|| self.columns.cmp(&other.columns))
    }
}

impl PartialOrd for Gallery {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Gallery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.columns.iter().rev().enumerate() {
            if k > 0 {
                write!(f, "|")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Parses a shape such as `1,2,1,1` (reading order).
pub fn parse_shape(text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad shape entry {t:?}"))))
        .collect()
}

pub fn check_shape(rank: Rank, shape: &[usize]) -> Result<()> {
    if shape.iter().any(|&d| d == 0 || d >= rank.get()) {
        return Err(Error::ShapeInvalid { shape: shape.to_vec(), n: rank.get() });
    }
    Ok(())
}

/// Every gallery of the given shape, in canonical order.
pub fn galleries_of_shape(rank: Rank, shape: &[usize]) -> Result<Vec<Gallery>> {
    check_shape(rank, shape)?;
    let choices: Vec<Vec<Column>> = shape
        .iter()
        .map(|&d| {
            let mut cols: Vec<Column> =
                (0u64..(1u64 << rank.get())).filter(|b| b.count_ones() as usize == d).map(Column).collect();
            cols.sort();
            cols
        })
        .collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(shape.len());
    fn rec(choices: &[Vec<Column>], current: &mut Vec<Column>, rank: Rank, out: &mut Vec<Gallery>) {
        if current.len() == choices.len() {
            out.push(Gallery { rank, columns: current.clone() });
            return;
        }
        for &c in &choices[current.len()] {
            current.push(c);
            rec(choices, current, rank, out);
            current.pop();
        }
    }
    rec(&choices, &mut current, rank, &mut out);
    Ok(out)
}

/// All shapes (reading order) with at most `max_boxes` boxes for rank `n`.
pub fn shapes_up_to(rank: Rank, max_boxes: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![(Vec::<usize>::new(), 0usize)];
    while let Some((shape, boxes)) = frontier.pop() {
        for d in 1..rank.get() {
            if boxes + d <= max_boxes {
                let mut next = shape.clone();
                next.push(d);
                out.push(next.clone());
                frontier.push((next, boxes + d));
            }
        }
    }
    out.sort();
    out
}

impl FromStr for Rank {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let n = s.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad rank {s:?}")))?;
        Rank::new(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: usize) -> Rank {
        Rank::new(n).unwrap()
    }

    fn g(n: usize, s: &str) -> Gallery {
        Gallery::parse(r(n), s).unwrap()
    }

    #[test]
    fn rank_bounds() {
        assert!(Rank::new(1).is_err());
        assert!(Rank::new(65).is_err());
        assert_eq!(Rank::new(2).unwrap().get(), 2);
    }

    #[test]
    fn validate_example_gallery() {
        let gamma = g(5, "3|1,2|5|2");
        assert_eq!(gamma.shape(), vec![1, 1, 2, 1]);
        let cols: Vec<Vec<usize>> = gamma.columns().iter().map(|c| c.entries().collect()).collect();
        assert_eq!(cols, vec![vec![2], vec![5], vec![1, 2], vec![3]]);
        assert_eq!(gamma.to_string(), "3|1,2|5|2");
    }

    #[test]
    fn validate_errors() {
        assert!(matches!(Gallery::parse(r(3), "2,1"), Err(Error::NonIncreasingColumn { .. })));
        assert!(matches!(Gallery::parse(r(3), "1,2,3"), Err(Error::ColumnTooLong { .. })));
        assert!(matches!(Gallery::parse(r(3), "4"), Err(Error::LetterOutOfRange { letter: 4, n: 3 })));
        assert!(matches!(Gallery::parse(r(3), "0"), Err(Error::LetterOutOfRange { letter: 0, n: 3 })));
        assert!(matches!(Gallery::parse(r(3), "1||2"), Err(Error::Parse(_))));
        assert!(matches!(Gallery::parse(r(3), "1,1"), Err(Error::NonIncreasingColumn { .. })));
        assert!(matches!(Gallery::new(r(3), &[vec![]]), Err(Error::EmptyColumn { column: 0 })));
    }

    #[test]
    fn words() {
        assert_eq!(g(5, "3|1,2|5|2").word().letters(), &[2, 5, 1, 2, 3]);
        assert_eq!(g(5, "3|2|1|5|2").word().letters(), &[2, 5, 1, 2, 3]);
        assert!(Gallery::empty(r(4)).word().is_empty());
    }

    #[test]
    fn from_word_examples() {
        let w = Word::parse(r(5), "25123").unwrap();
        assert_eq!(Gallery::from_word(r(5), &w).unwrap(), g(5, "3|2|1|5|2"));
        assert_eq!(Gallery::from_word(r(3), &Word::default()).unwrap(), Gallery::empty(r(3)));
        let w = Word::parse(r(3), "1 3 2").unwrap();
        assert_eq!(Gallery::from_word(r(3), &w).unwrap().to_string(), "2|3|1");
        assert!(matches!(Word::parse(r(3), "1 4"), Err(Error::LetterOutOfRange { .. })));
    }

    #[test]
    fn word_parsing_forms() {
        assert_eq!(Word::parse(r(5), "2 5 1,2 3").unwrap().letters(), &[2, 5, 1, 2, 3]);
        assert_eq!(Word::parse(r(12), "12").unwrap().letters(), &[12]);
        assert_eq!(Word::parse(r(12), "1 12").unwrap().letters(), &[1, 12]);
        assert!(Word::parse(r(3), "").unwrap().is_empty());
        assert!(matches!(Word::parse(r(3), "1x"), Err(Error::Parse(_))));
    }

    #[test]
    fn concat_examples() {
        let col12 = g(3, "1,2");
        let one = g(3, "1");
        let nu = Gallery::concat(&col12, &one).unwrap();
        assert_eq!(nu.to_string(), "1,2|1");
        assert_eq!(Gallery::concat(&Gallery::empty(r(3)), &one).unwrap(), one);
        let w123 = Gallery::from_word(r(3), &Word(vec![1, 2, 3])).unwrap();
        let c = Gallery::concat(&w123, &one).unwrap();
        assert_eq!(c.shape(), vec![1, 1, 1, 1]);
        assert_eq!(c.word().letters(), &[1, 1, 2, 3]);
        assert!(matches!(Gallery::concat(&g(4, "1"), &one), Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn weights_and_paths() {
        let nu = g(3, "1,2|1");
        assert_eq!(nu.weight().counts(), &[2, 1, 0]);
        let delta = g(3, "2|3|1");
        assert_eq!(delta.weight(), WeightVector::zero(r(3)));
        assert_eq!(Gallery::empty(r(3)).weight().counts(), &[0, 0, 0]);

        let pts: Vec<Vec<i64>> = nu.path_vertices().into_iter().map(|p| p.0).collect();
        assert_eq!(pts, vec![vec![0, 0, 0], vec![1, 0, 0], vec![2, 1, 0]]);
        let w123 = Gallery::from_word(r(3), &Word(vec![1, 2, 3])).unwrap();
        let pts: Vec<Vec<i64>> = w123.path_vertices().into_iter().map(|p| p.0).collect();
        assert_eq!(pts, vec![vec![0, 0, 0], vec![1, 0, 0], vec![1, 1, 0], vec![1, 1, 1]]);
        assert_eq!(Gallery::empty(r(3)).path_vertices().len(), 1);
    }

    #[test]
    fn dominance_examples() {
        assert!(g(3, "1,2|1").is_dominant());
        assert!(g(3, "1|1,2").is_dominant());
        assert!(!g(3, "2|3|1").is_dominant());
        assert!(Gallery::empty(r(3)).is_dominant());
    }

    #[test]
    fn column_order_is_lexicographic_on_entries() {
        let a = Column::from_bits(0b101); // [1,3]
        let b = Column::from_bits(0b010); // [2]
        assert!(a < b);
        assert_eq!(Column::initial(3).entries().collect::<Vec<_>>(), vec![1, 2, 3]);
    }

    #[test]
    fn enumerates_shapes() {
        assert_eq!(galleries_of_shape(r(3), &[1, 1, 1]).unwrap().len(), 27);
        assert_eq!(galleries_of_shape(r(4), &[2, 3]).unwrap().len(), 24);
        assert_eq!(galleries_of_shape(r(3), &[]).unwrap(), vec![Gallery::empty(r(3))]);
        assert!(matches!(galleries_of_shape(r(3), &[3]), Err(Error::ShapeInvalid { .. })));
        // compositions of k ≤ 3 into parts ≤ 2: 1 + 1 + 2 + 3
        assert_eq!(shapes_up_to(r(3), 3).len(), 7);
    }
}
