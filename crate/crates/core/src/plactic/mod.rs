//! The plactic monoid of `SL_n`: Knuth relations together with the column
//! relation `1 2 ⋯ n = ∅`, normalized through Schensted row insertion.
//!
//! The word of a gallery reads columns right to left, each top to bottom,
//! which is the reverse of the usual column reading word. Row insertion is
//! therefore applied to the word read from its last letter to its first.

pub mod oracle;

use crate::error::{Error, Result};
use crate::gallery::{Column, Gallery, Rank, Word};
use crate::weight::DominantWeight;

pub use oracle::{oracle_plactic_classes, PlacticOracle};

/// A semistandard tableau stored by rows (English convention: row 0 on top,
/// rows left-justified and weakly decreasing in length). Columns of length
/// `n` are allowed here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    rank: Rank,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn empty(rank: Rank) -> Self {
        Tableau { rank, rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Schensted row insertion of one letter.
    pub fn insert(&mut self, letter: usize) {
        let mut carry = letter;
        for row in &mut self.rows {
            match row.iter().position(|&x| x > carry) {
                Some(p) => carry = std::mem::replace(&mut row[p], carry),
                None => {
                    row.push(carry);
                    return;
                }
            }
        }
        self.rows.push(vec![carry]);
    }

    /// Columns in display order (left to right).
    pub fn display_columns(&self) -> Vec<Column> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width)
            .map(|j| {
                let bits = self
                    .rows
                    .iter()
                    .take_while(|row| row.len() > j)
                    .fold(0u64, |acc, row| acc | (1u64 << (row[j] - 1)));
                Column::from_bits(bits)
            })
            .collect()
    }

    /// Number of columns of full length `n`.
    pub fn full_columns(&self) -> usize {
        self.rows.get(self.rank.get() - 1).map_or(0, Vec::len)
    }

    /// Drops every column of length `n`; these are the leftmost columns and
    /// each is filled `1..n`.
    pub fn strip_full_columns(&self) -> Gallery {
        let full = self.full_columns();
        let mut columns: Vec<Column> = self.display_columns().into_iter().skip(full).collect();
        columns.reverse();
        debug_assert!(columns.iter().all(|c| c.len() < self.rank.get()));
        Gallery::from_columns_unchecked(self.rank, columns)
    }
}

/// Row-inserts the letters of `word` from last to first.
pub fn rsk_insert(rank: Rank, word: &Word) -> Result<Tableau> {
    let mut t = Tableau::empty(rank);
    for &l in word.letters().iter().rev() {
        rank.check_letter(l)?;
        t.insert(l);
    }
    Ok(t)
}

pub fn strip_full_columns(t: &Tableau) -> Gallery {
    t.strip_full_columns()
}

/// The unique semistandard tableau with columns shorter than `n` that is
/// plactic equivalent to `gallery`.
pub fn normal_form(gallery: &Gallery) -> Gallery {
    let rank = gallery.rank();
    let mut current = gallery.word();
    // Stripping then reinserting is stable after one round for a genuine
    // tableau; the loop guards the invariant.
    for _ in 0..=gallery.len() {
        let t = rsk_insert(rank, &current).expect("gallery letters are in range");
        let stripped = t.strip_full_columns();
        if t.full_columns() == 0 {
            return stripped;
        }
        current = stripped.word();
    }
    unreachable!("full-column stripping did not stabilize")
}

pub fn equivalent(gamma: &Gallery, delta: &Gallery) -> Result<bool> {
    if gamma.rank() != delta.rank() {
        return Err(Error::RankMismatch { left: gamma.rank().get(), right: delta.rank().get() });
    }
    Ok(normal_form(gamma) == normal_form(delta))
}

/// Column lengths weakly increase in reading order and rows weakly increase
/// left to right in display.
pub fn is_ssyt(gallery: &Gallery) -> bool {
    let cols = gallery.columns();
    if cols.windows(2).any(|w| w[0].len() > w[1].len()) {
        return false;
    }
    // reading order: w[1] is left of w[0] in display and at least as long
    cols.windows(2).all(|w| {
        let (right, left) = (w[0], w[1]);
        right.entries().zip(left.entries()).all(|(r, l)| l <= r)
    })
}

/// Every semistandard tableau of the shape attached to `lambda`, filled
/// cell by cell along rows; returned as galleries in canonical order.
pub fn enumerate_ssyt(lambda: &DominantWeight) -> Vec<Gallery> {
    let rank = lambda.rank();
    let n = rank.get();
    let counts = lambda.to_weight();
    // row k has length c_{k+1}
    let row_lengths: Vec<usize> = counts.counts()[..n - 1].iter().map(|&c| c as usize).filter(|&c| c > 0).collect();
    let cells: Vec<(usize, usize)> =
        row_lengths.iter().enumerate().flat_map(|(k, &len)| (0..len).map(move |j| (k, j))).collect();
    let mut grid: Vec<Vec<usize>> = row_lengths.iter().map(|&len| vec![0; len]).collect();
    let mut out = Vec::new();

    fn fill(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        n: usize,
        rank: Rank,
        out: &mut Vec<Gallery>,
    ) {
        if idx == cells.len() {
            let t = Tableau { rank, rows: grid.clone() };
            out.push(t.strip_full_columns());
            return;
        }
        let (k, j) = cells[idx];
        let mut lo = 1;
        if j > 0 {
            lo = lo.max(grid[k][j - 1]);
        }
        if k > 0 {
            lo = lo.max(grid[k - 1][j] + 1);
        }
        // leave room for the rows below in this column
        let below = grid[k + 1..].iter().take_while(|row| row.len() > j).count();
        let hi = n - below;
        for v in lo..=hi {
            grid[k][j] = v;
            fill(idx + 1, cells, grid, n, rank, out);
        }
        grid[k][j] = 0;
    }

    fill(0, &cells, &mut grid, n, rank, &mut out);
    out.sort();
    out
}
