//! Finite ground sets and their subsets.
//!
//! Points are indexed `0..n` and carry string labels. Subsets are bitmasks,
//! so a dense set function is a flat table of `2^n` entries indexed by mask.

use std::fmt;

use crate::error::{Error, Result};

/// Default cap on the number of points for which dense `2^n` tables may be
/// materialized. Raising it is explicit (`GroundSet::with_limit`).
pub const DEFAULT_MAX_POINTS: usize = 16;

/// Subset masks are stored in a `u32`, so no ground set may exceed this.
pub const ABSOLUTE_MAX_POINTS: usize = 30;

/// A finite set of labelled points.
///
/// The `limit` caps dense-table materialization: generator-presented games on
/// larger grounds stay representable (their operations are sparse), but any
/// operation that would build a `2^n` table fails with `GroundTooLarge`.
#[derive(Clone, Debug)]
pub struct GroundSet {
    labels: Vec<String>,
    limit: usize,
}

impl GroundSet {
    /// Ground set with the default dense-table cap of 16 points.
    pub fn new(labels: Vec<String>) -> Result<Self> {
        Self::with_limit(labels, DEFAULT_MAX_POINTS)
    }

    /// Ground set with an explicit dense-table cap (at most 30).
    pub fn with_limit(labels: Vec<String>, limit: usize) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::EmptyGround);
        }
        if labels.len() > ABSOLUTE_MAX_POINTS || limit > ABSOLUTE_MAX_POINTS {
            return Err(Error::TooManyPoints {
                points: labels.len().max(limit),
                limit: ABSOLUTE_MAX_POINTS,
            });
        }
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() || label.contains(',') {
                return Err(Error::BadLabel(label.clone()));
            }
            if labels[..i].contains(label) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(GroundSet { labels, limit })
    }

    /// Convenience constructor for tests and built-in examples.
    pub fn from_names(names: &[&str]) -> Result<Self> {
        Self::new(names.iter().map(|s| s.to_string()).collect())
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, point: usize) -> &str {
        &self.labels[point]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn points(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    pub fn full_subset(&self) -> Subset {
        Subset::full(self.n())
    }

    /// Number of entries in a dense table over this ground set.
    pub fn table_len(&self) -> usize {
        1usize << self.n()
    }

    /// All `2^n` subsets in mask order. Call only after [`Self::ensure_dense`].
    pub fn subsets(&self) -> impl Iterator<Item = Subset> {
        (0..self.table_len() as u32).map(Subset::from_mask)
    }

    /// All nonempty subsets in mask order.
    pub fn nonempty_subsets(&self) -> impl Iterator<Item = Subset> {
        (1..self.table_len() as u32).map(Subset::from_mask)
    }

    /// Checks that a dense `2^n` table may be built over this ground set.
    pub fn ensure_dense(&self) -> Result<()> {
        if self.n() > self.limit {
            return Err(Error::GroundTooLarge {
                points: self.n(),
                limit: self.limit,
            });
        }
        Ok(())
    }

    /// Renders a subset as its comma-joined labels, in point order. The empty
    /// set renders as the empty string.
    pub fn render_subset(&self, s: Subset) -> String {
        s.points()
            .map(|i| self.label(i))
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parses a comma-joined label string back into a subset.
    pub fn parse_subset(&self, key: &str) -> Option<Subset> {
        if key.is_empty() {
            return Some(Subset::EMPTY);
        }
        let mut s = Subset::EMPTY;
        for part in key.split(',') {
            s = s.with(self.index_of(part)?);
        }
        Some(s)
    }
}

// Equality ignores the dense-table limit: two grounds are the same space
// whenever they have the same labelled points.
impl PartialEq for GroundSet {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
    }
}

impl Eq for GroundSet {}

pub(crate) fn check_same_ground(a: &GroundSet, b: &GroundSet) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::GroundMismatch)
    }
}

/// A subset of a ground set, stored as a bitmask over point indices.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_mask(mask: u32) -> Self {
        Subset(mask)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn full(n: usize) -> Self {
        Subset(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(point: usize) -> Self {
        Subset(1 << point)
    }

    pub fn from_points(points: &[usize]) -> Self {
        points.iter().fold(Subset::EMPTY, |s, &i| s.with(i))
    }

    pub fn contains(self, point: usize) -> bool {
        self.0 & (1 << point) != 0
    }

    pub fn with(self, point: usize) -> Self {
        Subset(self.0 | (1 << point))
    }

    pub fn without(self, point: usize) -> Self {
        Subset(self.0 & !(1 << point))
    }

    pub fn union(self, other: Self) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Point indices in increasing order.
    pub fn points(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..u32::BITS as usize).filter(move |i| mask & (1 << i) != 0)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, p) in self.points().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
