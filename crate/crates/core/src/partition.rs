//! Partitions, cells, and exact slope geometry.
//!
//! A partition is stored as its weakly decreasing sequence of positive parts.
//! `parts[0]` is the *bottom* row of the French-style Ferrers diagram, so the
//! cell `(row, col)` sits `row` lines above the bottom, both indices 0-based.
//! All slope computations are exact rational arithmetic; no floating point is
//! used anywhere.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact arbitrary-precision fraction, always in lowest terms with a positive
/// denominator (guaranteed by construction).
pub type Rational = BigRational;

/// Build a [`Rational`] from machine integers. Panics on a zero denominator.
pub fn rational(numerator: i64, denominator: i64) -> Rational {
    BigRational::new(BigInt::from(numerator), BigInt::from(denominator))
}

/// A cell of a Ferrers diagram: `row` 0 is the bottom line, `col` 0 the
/// leftmost column.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

/// An integer partition: weakly decreasing positive parts, no trailing zeros.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Build a partition, stripping trailing zeros. Errors unless the parts
    /// are weakly decreasing and (after stripping) positive.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotAPartition);
        }
        Ok(Partition { parts })
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of non-zero parts (rows).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `k`-th part (0-based), reading 0 past the end.
    pub fn part(&self, k: usize) -> u32 {
        self.parts.get(k).copied().unwrap_or(0)
    }

    /// Total number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Whether `inner` is a sub-partition: `inner_k <= self_k` for all rows.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len()
            && inner
                .parts
                .iter()
                .enumerate()
                .all(|(k, &p)| p <= self.part(k))
    }

    /// Whether the cell lies inside the shape.
    pub fn has_cell(&self, c: Cell) -> bool {
        c.row < self.len() && (c.col as u32) < self.part(c.row)
    }

    /// All cells, bottom row first, left to right.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts.iter().enumerate().flat_map(|(row, &p)| {
            (0..p as usize).map(move |col| Cell::new(row, col))
        })
    }

    fn check_cell(&self, c: Cell) -> Result<()> {
        if self.has_cell(c) {
            Ok(())
        } else {
            Err(Error::CellOutsideShape(c.row, c.col))
        }
    }

    /// Cells strictly to the right of `c` in its row.
    pub fn arm(&self, c: Cell) -> Result<u32> {
        self.check_cell(c)?;
        Ok(self.part(c.row) - 1 - c.col as u32)
    }

    /// Cells strictly above `c` in its column.
    pub fn leg(&self, c: Cell) -> Result<u32> {
        self.check_cell(c)?;
        let col = c.col as u32;
        Ok(self.parts[c.row + 1..]
            .iter()
            .take_while(|&&p| p > col)
            .count() as u32)
    }

    /// Admissible slope interval of a cell:
    /// `(leg/(arm+leg+1), (leg+1)/(arm+leg+1))`.
    pub fn cell_slope_interval(&self, c: Cell) -> Result<(Rational, Rational)> {
        let arm = self.arm(c)? as i64;
        let leg = self.leg(c)? as i64;
        let den = arm + leg + 1;
        Ok((rational(leg, den), rational(leg + 1, den)))
    }

    /// `(max of lower endpoints, min of upper endpoints)` over all cells.
    pub fn slope_bounds(&self) -> Result<(Rational, Rational)> {
        if self.is_empty() {
            return Err(Error::EmptyPartition);
        }
        let mut lo: Option<Rational> = None;
        let mut hi: Option<Rational> = None;
        for c in self.cells() {
            let (a, b) = self.cell_slope_interval(c)?;
            if lo.as_ref().map_or(true, |m| a > *m) {
                lo = Some(a);
            }
            if hi.as_ref().map_or(true, |m| b < *m) {
                hi = Some(b);
            }
        }
        Ok((lo.unwrap(), hi.unwrap()))
    }

    /// A partition is triangular iff the global slope interval is non-empty
    /// (strict comparison). The empty partition is triangular by convention.
    pub fn is_triangular(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        let (lo, hi) = self.slope_bounds().expect("non-empty");
        lo < hi
    }

    /// Midpoint of the global slope interval; only defined on triangular
    /// partitions. For the empty partition returns 1/2 (midpoint of (0,1)),
    /// which is never consulted since there are no cells.
    pub fn mean_slope(&self) -> Result<Rational> {
        if !self.is_triangular() {
            return Err(Error::NotTriangular);
        }
        if self.is_empty() {
            return Ok(rational(1, 2));
        }
        let (lo, hi) = self.slope_bounds()?;
        let two = BigRational::from_integer(BigInt::from(2));
        Ok((lo + hi) / two)
    }

    /// Cells of `self` that are slope-similar for the probe value `mean`:
    /// the cell's admissible interval (computed in `self`) satisfies
    /// `lo < mean <= hi`.
    pub fn similar_cells_for_mean(&self, mean: &Rational) -> Vec<Cell> {
        self.cells()
            .filter(|&c| {
                let (lo, hi) = self.cell_slope_interval(c).expect("own cell");
                lo < *mean && *mean <= hi
            })
            .collect()
    }

    /// Whether *every* cell is slope-similar for the probe value `mean`.
    pub fn is_mean_similar(&self, mean: &Rational) -> bool {
        self.similar_cells_for_mean(mean).len() == self.size()
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.parts.clone()
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.parts.len()))?;
        for p in &self.parts {
            seq.serialize_element(p)?;
        }
        seq.end()
    }
}

impl fmt::Display for Partition {
    /// Text format: comma-separated parts, e.g. `7,6,4,3,1`; the empty
    /// partition prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the comma-separated format; empty string or `0` is the empty
    /// partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let parts: Vec<u32> = s
            .split(',')
            .map(|tok| {
                tok.trim().parse::<u32>().map_err(|e| Error::Parse {
                    what: "partition",
                    detail: format!("{tok:?}: {e}"),
                })
            })
            .collect::<Result<_>>()?;
        Partition::new(parts)
    }
}

/// A triangular Dyck path: a sub-partition `inner` drawn inside a triangular
/// `outer` shape.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TriangularDyckPath {
    outer: Partition,
    inner: Partition,
}

impl TriangularDyckPath {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.is_triangular() {
            return Err(Error::NotTriangular);
        }
        if !outer.contains(&inner) {
            return Err(Error::NotContained);
        }
        Ok(TriangularDyckPath { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of cells of `outer` outside `inner`.
    pub fn area(&self) -> usize {
        self.outer.size() - self.inner.size()
    }
}

/// All partitions of size exactly `n` that are triangular, in lexicographically
/// decreasing order.
pub fn enumerate_triangular_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend(n, n, &mut stack, &mut out);
    out
}

fn descend(remaining: usize, max_part: usize, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        let p = Partition::new(stack.clone()).expect("weakly decreasing by construction");
        if p.is_triangular() {
            out.push(p);
        }
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        stack.push(part as u32);
        descend(remaining - part, part, stack, out);
        stack.pop();
    }
}

/// Every sub-partition of `p`, each exactly once, graded by size then in
/// lexicographic order of the part vectors.
pub fn enumerate_subpartitions(p: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    sub_descend(p, 0, u32::MAX, &mut stack, &mut out);
    out.sort_by(|a, b| (a.size(), a.parts()).cmp(&(b.size(), b.parts())));
    out
}

fn sub_descend(
    p: &Partition,
    row: usize,
    cap: u32,
    stack: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    out.push(Partition::new(stack.clone()).expect("weakly decreasing by construction"));
    if row >= p.len() {
        return;
    }
    for part in 1..=p.part(row).min(cap) {
        stack.push(part);
        sub_descend(p, row + 1, part, stack, out);
        stack.pop();
    }
}

/// Closed-form slope bounds of a triangular 2-partition `(m,n)` with two
/// genuine rows (`m >= n >= 1`), used as a test oracle against the generic
/// cell scan.
pub fn two_part_slope_bounds(m: u32, n: u32) -> (Rational, Rational) {
    assert!(m >= n && n >= 1);
    let lo = rational(1, (m - n + 2) as i64);
    // The binding cells for the upper bound are (0,0), (0,n) (when it
    // exists), and (1,0).
    let mut hi = rational(2, (m + 1) as i64).min(rational(1, n as i64));
    if m > n {
        hi = hi.min(rational(1, (m - n) as i64));
    }
    (lo, hi)
}
