//! Root operators `e_i`, `f_i` on galleries via the i-signature.
//!
//! Columns are tagged in display order (left to right): `+` if only `i`
//! occurs, `−` if only `i + 1` occurs, `∅` otherwise. After dropping `∅` and
//! cancelling adjacent `(− +)` pairs the survivors read `(+)^s (−)^r`; `f_i`
//! changes the rightmost surviving `+`, `e_i` the leftmost surviving `−`.

use std::fmt;

use crate::error::{Error, Result};
use crate::gallery::Gallery;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tag {
    Plus,
    Minus,
    None,
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tag::Plus => "+",
            Tag::Minus => "-",
            Tag::None => "∅",
        })
    }
}

/// Uncancelled tags, as reading-order column indices listed in display order
/// (left to right).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SignatureReduction {
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
}

impl SignatureReduction {
    /// `φ_i`, the number of surviving `+`.
    pub fn s(&self) -> usize {
        self.plus.len()
    }

    /// `ε_i`, the number of surviving `−`.
    pub fn r(&self) -> usize {
        self.minus.len()
    }
}

/// Tags in display order.
pub fn i_signature(gallery: &Gallery, i: usize) -> Result<Vec<Tag>> {
    gallery.rank().check_index(i)?;
    Ok(gallery
        .columns()
        .iter()
        .rev()
        .map(|c| match (c.contains(i), c.contains(i + 1)) {
            (true, false) => Tag::Plus,
            (false, true) => Tag::Minus,
            _ => Tag::None,
        })
        .collect())
}

/// Bracket matching: scanning left to right, each `+` cancels the most recent
/// unmatched `−`.
pub fn reduce_signature(tags: &[Tag]) -> SignatureReduction {
    let r = tags.len();
    let mut open_minus: Vec<usize> = Vec::new();
    let mut plus = Vec::new();
    for (k, &t) in tags.iter().enumerate() {
        match t {
            Tag::Minus => open_minus.push(k),
            Tag::Plus => {
                if open_minus.pop().is_none() {
                    plus.push(k);
                }
            }
            Tag::None => {}
        }
    }
    let to_reading = |k: usize| r - 1 - k;
    SignatureReduction {
        plus: plus.into_iter().map(to_reading).collect(),
        minus: open_minus.into_iter().map(to_reading).collect(),
    }
}

pub fn signature_reduction(gallery: &Gallery, i: usize) -> Result<SignatureReduction> {
    Ok(reduce_signature(&i_signature(gallery, i)?))
}

/// `f_i(γ)`, or `None` for the crystal's zero.
pub fn f(gallery: &Gallery, i: usize) -> Result<Option<Gallery>> {
    let red = signature_reduction(gallery, i)?;
    let Some(&target) = red.plus.last() else {
        return Ok(None);
    };
    let col = gallery.columns()[target];
    let next = col.replace(i, i + 1).ok_or(Error::BrokenColumn { column: target })?;
    Ok(Some(gallery.with_column(target, next)))
}

/// `e_i(γ)`, or `None` for the crystal's zero.
pub fn e(gallery: &Gallery, i: usize) -> Result<Option<Gallery>> {
    let red = signature_reduction(gallery, i)?;
    let Some(&target) = red.minus.first() else {
        return Ok(None);
    };
    let col = gallery.columns()[target];
    let next = col.replace(i + 1, i).ok_or(Error::BrokenColumn { column: target })?;
    Ok(Some(gallery.with_column(target, next)))
}

/// Applies `f_i` (or `e_i` when `raise`) `times` times; `None` as soon as the
/// zero is reached.
pub fn apply_repeated(gallery: &Gallery, i: usize, times: usize, raise: bool) -> Result<Option<Gallery>> {
    let mut current = gallery.clone();
    for _ in 0..times {
        let next = if raise { e(&current, i)? } else { f(&current, i)? };
        match next {
            Some(g) => current = g,
            None => return Ok(None),
        }
    }
    Ok(Some(current))
}

pub fn epsilon(gallery: &Gallery, i: usize) -> Result<usize> {
    Ok(signature_reduction(gallery, i)?.r())
}

pub fn phi(gallery: &Gallery, i: usize) -> Result<usize> {
    Ok(signature_reduction(gallery, i)?.s())
}
