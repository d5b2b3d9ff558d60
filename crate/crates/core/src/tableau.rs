//! Standard Young tableaux on triangular shapes and the three path
//! statistics: area, slope-similar cells, and deficit cells.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{Cell, Partition, Rational, TriangularDyckPath};

/// A standard Young tableau: a bijective labeling of the cells of a shape by
/// `1..=size`, strictly increasing along rows (left to right) and columns
/// (bottom to top). Rows are stored bottom first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
    /// `positions[l-1]` is the cell carrying label `l`.
    positions: Vec<Cell>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = Partition::new(
            rows.iter().map(|r| r.len() as u32).collect::<Vec<_>>(),
        )
        .map_err(|_| Error::NotStandard)?;
        if shape.len() != rows.len() {
            // A zero-length row in the middle is not a valid shape.
            return Err(Error::NotStandard);
        }
        let n = shape.size();
        let mut positions = vec![None; n];
        for (r, row) in rows.iter().enumerate() {
            for (c, &label) in row.iter().enumerate() {
                if label < 1 || label as usize > n {
                    return Err(Error::NotStandard);
                }
                if positions[label as usize - 1].replace(Cell::new(r, c)).is_some() {
                    return Err(Error::NotStandard);
                }
                if c > 0 && row[c - 1] >= label {
                    return Err(Error::NotStandard);
                }
                if r > 0 && rows[r - 1][c] >= label {
                    return Err(Error::NotStandard);
                }
            }
        }
        let positions = positions
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::NotStandard)?;
        Ok(StandardTableau { shape, rows, positions })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.positions.len()
    }

    /// Label rows, bottom row first.
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn label(&self, c: Cell) -> Result<u32> {
        self.rows
            .get(c.row)
            .and_then(|row| row.get(c.col))
            .copied()
            .ok_or(Error::CellOutsideShape(c.row, c.col))
    }

    /// Cell carrying the given label (1-based).
    pub fn cell_of_label(&self, label: u32) -> Result<Cell> {
        if label == 0 {
            return Err(Error::ParameterOutOfRange("label"));
        }
        self.positions
            .get(label as usize - 1)
            .copied()
            .ok_or(Error::ParameterOutOfRange("label"))
    }

    /// Shape formed by the cells with labels `<= k`. A valid partition for
    /// every `k` because labels increase along rows and columns.
    pub fn prefix_shape(&self, k: u32) -> Partition {
        let parts: Vec<u32> = self
            .rows
            .iter()
            .map(|row| row.iter().take_while(|&&l| l <= k).count() as u32)
            .collect();
        Partition::new(parts).expect("prefix of a standard tableau is a shape")
    }
}

impl Serialize for StandardTableau {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(serializer)
    }
}

impl fmt::Display for StandardTableau {
    /// Text format: bracketed rows bottom to top, e.g. `[1,2,4][3,5]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "[]");
        }
        for row in &self.rows {
            let s: Vec<String> = row.iter().map(|l| l.to_string()).collect();
            write!(f, "[{}]", s.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for StandardTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |detail: String| Error::Parse { what: "tableau", detail };
        if s == "[]" {
            return StandardTableau::new(Vec::new());
        }
        if !s.starts_with('[') || !s.ends_with(']') {
            return Err(bad("expected bracketed rows".into()));
        }
        let rows: Vec<Vec<u32>> = s[1..s.len() - 1]
            .split("][")
            .map(|row| {
                row.split(',')
                    .map(|tok| {
                        tok.trim()
                            .parse::<u32>()
                            .map_err(|e| bad(format!("{tok:?}: {e}")))
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        StandardTableau::new(rows)
    }
}

/// Area, similar-cell count, and deficit-cell count of one path, with
/// `area + sim + deficit = |shape|`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct PathStatistics {
    pub area: usize,
    pub sim: usize,
    pub deficit: usize,
}

/// Cells of `inner` whose admissible interval (computed in `inner`) contains
/// the mean slope of `outer` under the half-open rule `lo < mean <= hi`.
pub fn slope_similar_cells(path: &TriangularDyckPath) -> Vec<Cell> {
    let mean = path.outer().mean_slope().expect("outer is triangular");
    path.inner().similar_cells_for_mean(&mean)
}

/// Hook corners of label inversions between `mu` and its complement in the
/// shape of `theta`: for every pair `c1 in mu`, `c2 in shape \ mu` lying in
/// distinct rows and distinct columns with `theta(c1) > theta(c2)`, the corner
/// `(min row, min col)` is a deficit cell. Corners are deduplicated.
pub fn deficit_cells(theta: &StandardTableau, mu: &Partition) -> Result<Vec<Cell>> {
    let shape = theta.shape();
    if !shape.contains(mu) {
        return Err(Error::NotContained);
    }
    let mut inside = Vec::new();
    let mut outside = Vec::new();
    for c in shape.cells() {
        let entry = (c, theta.label(c)?);
        if mu.has_cell(c) {
            inside.push(entry);
        } else {
            outside.push(entry);
        }
    }
    let mut corners = Vec::new();
    for &(c1, l1) in &inside {
        for &(c2, l2) in &outside {
            if c1.row != c2.row && c1.col != c2.col && l1 > l2 {
                corners.push(Cell::new(c1.row.min(c2.row), c1.col.min(c2.col)));
            }
        }
    }
    corners.sort_unstable();
    corners.dedup();
    Ok(corners)
}

/// The statistics triple for the path `(shape of theta, mu)`:
/// `area = |shape| - |mu|`, `deficit = #deficit cells`,
/// `sim = |mu| - deficit`.
pub fn statistics(theta: &StandardTableau, mu: &Partition) -> Result<PathStatistics> {
    let deficit = deficit_cells(theta, mu)?.len();
    Ok(PathStatistics {
        area: theta.shape().size() - mu.size(),
        sim: mu.size() - deficit,
        deficit,
    })
}

/// The unique standard Young tableau of a triangular shape whose every label
/// prefix is a mean-similar sub-shape. Built greedily: at each step exactly
/// one addable corner keeps the grown shape mean-similar.
pub fn triangular_tableau(p: &Partition) -> Result<StandardTableau> {
    if !p.is_triangular() {
        return Err(Error::NotTriangular);
    }
    let mean = p.mean_slope()?;
    let mut rows: Vec<Vec<u32>> = Vec::new();
    let mut mu: Vec<u32> = Vec::new();
    for label in 1..=p.size() as u32 {
        let mut chosen = None;
        for r in 0..=mu.len() {
            let filled = mu.get(r).copied().unwrap_or(0);
            let addable = filled < p.part(r) && (r == 0 || filled < mu[r - 1]);
            if !addable {
                continue;
            }
            let mut grown = mu.clone();
            if r == grown.len() {
                grown.push(1);
            } else {
                grown[r] += 1;
            }
            let candidate = Partition::new(grown).expect("grown corner keeps a shape");
            if candidate.is_mean_similar(&mean) {
                if chosen.replace(r).is_some() {
                    return Err(Error::Internal(
                        "more than one mean-similar extension at a step",
                    ));
                }
            }
        }
        let r = chosen.ok_or(Error::Internal("no mean-similar extension at a step"))?;
        if r == mu.len() {
            mu.push(0);
            rows.push(Vec::new());
        }
        mu[r] += 1;
        rows[r].push(label);
    }
    StandardTableau::new(rows)
}

/// Fast construction of the triangular tableau: sort the cells by the sweep
/// key `mean*(col+1) + (1-mean)*(row+1)`, ties broken by `col - row`
/// ascending, and label them in that order. Must agree with
/// [`triangular_tableau`]; the agreement is cross-checked in tests.
pub fn triangular_tableau_by_sort(p: &Partition) -> Result<StandardTableau> {
    if !p.is_triangular() {
        return Err(Error::NotTriangular);
    }
    let mean = p.mean_slope()?;
    let complement = Rational::from_integer(1.into()) - mean.clone();
    let mut cells: Vec<Cell> = p.cells().collect();
    cells.sort_by_cached_key(|c| {
        let key = mean.clone() * Rational::from_integer(((c.col + 1) as i64).into())
            + complement.clone() * Rational::from_integer(((c.row + 1) as i64).into());
        // Ties encode the limit slope approaching the mean from below, so
        // among equal keys the cell further right comes first.
        (key, c.row as i64 - c.col as i64)
    });
    let mut rows: Vec<Vec<u32>> = p.parts().iter().map(|&len| vec![0; len as usize]).collect();
    for (index, c) in cells.iter().enumerate() {
        rows[c.row][c.col] = index as u32 + 1;
    }
    StandardTableau::new(rows)
}

/// The top-down tableau: with a counter starting at `|p|`, repeatedly sweep
/// the rows from top to bottom, assigning the counter to the last unlabeled
/// cell of each row that still has one (one cell per row per sweep) and
/// decrementing, until all cells are labeled.
pub fn top_down_tableau(p: &Partition) -> Result<StandardTableau> {
    if p.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let mut remaining: Vec<u32> = p.parts().to_vec();
    let mut rows: Vec<Vec<u32>> =
        p.parts().iter().map(|&len| vec![0; len as usize]).collect();
    let mut counter = p.size() as u32;
    while counter > 0 {
        for r in (0..p.len()).rev() {
            if remaining[r] > 0 {
                remaining[r] -= 1;
                rows[r][remaining[r] as usize] = counter;
                counter -= 1;
            }
        }
    }
    StandardTableau::new(rows)
}

/// Largest valid row-regular index for the shape `(m,n)`: `m - 2(n-1)`.
pub fn max_row_regular_index(m: u32, n: u32) -> u32 {
    m - 2 * (n - 1)
}

/// The `i`-row-regular tableau of the triangular 2-partition `(m,n)`: upper
/// row labeled `n+i, n+i+2, ..., n+i+2(n-1)`, lower row carrying the
/// remaining labels in increasing order. `i = 1` is minimal and
/// `i = m-2(n-1)` maximal.
pub fn row_regular_tableau(m: u32, n: u32, i: u32) -> Result<StandardTableau> {
    if n < 1 || !two_part(m, n)?.is_triangular() {
        return Err(Error::NotTriangular);
    }
    if i < 1 || i > max_row_regular_index(m, n) {
        return Err(Error::IndexOutOfRange);
    }
    let upper: Vec<u32> = (0..n).map(|k| n + i + 2 * k).collect();
    let lower: Vec<u32> = (1..=m + n).filter(|l| !upper.contains(l)).collect();
    debug_assert_eq!(lower.len(), m as usize);
    StandardTableau::new(vec![lower, upper])
}

fn two_part(m: u32, n: u32) -> Result<Partition> {
    if m < n {
        return Err(Error::NotAPartition);
    }
    Partition::new(if n == 0 { vec![m] } else { vec![m, n] })
}

/// All standard Young tableaux of the shape, by label-by-label backtracking;
/// deterministic order (corners tried bottom row first).
pub fn enumerate_standard_tableaux(p: &Partition) -> Vec<StandardTableau> {
    let mut rows: Vec<Vec<u32>> =
        p.parts().iter().map(|&len| vec![0; len as usize]).collect();
    let mut filled = vec![0u32; p.len()];
    let mut out = Vec::new();
    place_label(p, 1, &mut rows, &mut filled, &mut out);
    out
}

fn place_label(
    p: &Partition,
    label: u32,
    rows: &mut Vec<Vec<u32>>,
    filled: &mut Vec<u32>,
    out: &mut Vec<StandardTableau>,
) {
    if label > p.size() as u32 {
        out.push(StandardTableau::new(rows.clone()).expect("construction is standard"));
        return;
    }
    for r in 0..p.len() {
        if filled[r] < p.part(r) && (r == 0 || filled[r] < filled[r - 1]) {
            rows[r][filled[r] as usize] = label;
            filled[r] += 1;
            place_label(p, label + 1, rows, filled, out);
            filled[r] -= 1;
        }
    }
}
