//! Shifted diagrams and shifted tableaux, the shape `λ(P)` of a path, and the
//! correspondence between diagram cells and lattice points.

mod count;
mod standard;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use count::{count_increasing, count_weak, count_weak_exact, enumerate_increasing, enumerate_weak, for_each_filling, FillRule};
pub use standard::{count_standard_by_corners, count_standard_formula};

use crate::error::{Error, Result};
use crate::paths::{HeightProfile, KEncoding, Path, Step};

/// A strict partition `λ_1 > λ_2 > ... > λ_m > 0`. The empty partition is allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Shape {
    parts: Vec<usize>,
}

impl Shape {
    pub fn new(parts: Vec<usize>) -> Result<Shape> {
        if parts.last() == Some(&0) {
            return Err(Error::InvalidShape("parts must be positive".into()));
        }
        if let Some(i) = (1..parts.len()).find(|&i| parts[i] >= parts[i - 1]) {
            return Err(Error::InvalidShape(format!(
                "parts must strictly decrease, but λ_{} = {} and λ_{} = {}",
                i,
                parts[i - 1],
                i + 1,
                parts[i]
            )));
        }
        Ok(Shape { parts })
    }

    /// `λ(P)` for a path starting with a down-step: `λ_i = n - i - k_i + 1`.
    pub fn of_path(p: &Path) -> Result<Shape> {
        if p.first() != Some(Step::Down) {
            return Err(Error::MustStartWithDown(p.to_string()));
        }
        let n = p.len();
        let enc = p.k_encoding();
        let parts = (1..=enc.downs()).map(|i| n - i - enc.get(i) + 1).collect();
        Shape::new(parts)
    }

    /// The unique path starting with a down-step whose shape is `self`.
    pub fn base_path(&self) -> Result<Path> {
        let n = match self.parts.first() {
            Some(&n) => n,
            None => return Err(Error::InvalidShape("the empty shape has no base path".into())),
        };
        let m = self.parts.len();
        if self.parts.iter().enumerate().any(|(i, &l)| l + i > n) {
            return Err(Error::InvalidShape("shape does not fit in the staircase of its first row".into()));
        }
        let mut k: Vec<usize> = self.parts.iter().enumerate().map(|(i, &l)| n - i - l).collect();
        k.push(n - m);
        Path::from_k_encoding(&KEncoding::new(k)?)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// `λ_i` (1-based); 0 past the last row.
    pub fn row_len(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn first_row(&self) -> usize {
        self.row_len(1)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Whether `(i, j)` is a cell: `1 <= i <= m` and `i <= j <= λ_i + i - 1`.
    pub fn contains(&self, i: usize, j: usize) -> bool {
        i >= 1 && i <= self.rows() && j >= i && j < self.row_len(i) + i
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().enumerate().flat_map(|(r, &l)| (r + 1..r + 1 + l).map(move |j| (r + 1, j)))
    }

    /// Last column index of row `i`.
    pub fn row_end(&self, i: usize) -> usize {
        self.row_len(i) + i - 1
    }

    /// Whether every cell of `self` is a cell of `other`.
    pub fn is_subshape_of(&self, other: &Shape) -> bool {
        self.rows() <= other.rows() && (1..=self.rows()).all(|i| self.row_len(i) <= other.row_len(i))
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for Shape {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Shape {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Shape, D::Error> {
        Shape::new(Vec::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// `λ(P)` of a path starting with a down-step.
pub fn shape_of(p: &Path) -> Result<Shape> {
    Shape::of_path(p)
}

/// Maps cell `(i, j)` of a diagram with first row `n` to the lattice point
/// `(n + i - j, n - i - j)`.
pub fn cell_point(n: usize, i: usize, j: usize) -> Result<(i64, i64)> {
    if i < 1 || i > j || j > n {
        return Err(Error::CellOutOfRange { n, i: i as i64, j: j as i64 });
    }
    let (n, i, j) = (n as i64, i as i64, j as i64);
    Ok((n + i - j, n - i - j))
}

/// Inverse of [`cell_point`].
pub fn point_cell(n: usize, x: i64, y: i64) -> Result<(usize, usize)> {
    let err = Error::PointOutOfRange { n, x, y };
    if (x - y).rem_euclid(2) != 0 {
        return Err(err);
    }
    let i = (x - y) / 2;
    let j = n as i64 - (x + y) / 2;
    if i < 1 || i > j || j > n as i64 {
        return Err(err);
    }
    Ok((i as usize, j as usize))
}

/// The path `P` of length `n` whose region `F(P)` (the cells between `P` and
/// `u^n`) is the given set of staircase cells. Every point `(x, h)` of the
/// result satisfies `h = x - 2c`, where `c` counts the region's cells on the
/// diagonal `j - i = n - x`; those cells must be `i = 1..=c`.
pub fn region_path(n: usize, in_region: impl Fn(usize, usize) -> bool) -> Result<Path> {
    let mut heights = Vec::with_capacity(n + 1);
    heights.push(0);
    for x in 1..=n {
        let on_diagonal = |i: usize| in_region(i, n + i - x);
        let c = (1..=x).take_while(|&i| on_diagonal(i)).count();
        if let Some(i) = (c + 1..=x).find(|&i| on_diagonal(i)) {
            return Err(Error::InvalidShape(format!(
                "cell ({}, {}) lies below a gap of the region",
                i,
                n + i - x
            )));
        }
        heights.push(x as i32 - 2 * c as i32);
    }
    let profile = HeightProfile::new(heights)
        .map_err(|e| Error::InvalidShape(format!("the region is not bounded by a path: {}", e)))?;
    Ok(Path::from_heights(&profile))
}

/// Whether cell `(i, j)` of the staircase of size `n = |P|` lies in `F(P)`.
pub fn in_region(heights: &HeightProfile, i: usize, j: usize) -> bool {
    let n = heights.len();
    if i < 1 || i > j || j > n {
        return false;
    }
    let x = n + i - j;
    let y = x as i32 - 2 * i as i32;
    heights.at(x) <= y
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TableauClass {
    Weak,
    Increasing,
    Standard,
    Invalid,
}

/// Classifies raw rows (row `i` implicitly shifted by `i - 1`). The most
/// specific class is returned; standard tableaux are also increasing.
pub fn tableau_class(rows: &[Vec<u32>]) -> TableauClass {
    let parts: Vec<usize> = rows.iter().map(|r| r.len()).collect();
    let shape = match Shape::new(parts) {
        Ok(s) => s,
        Err(_) => return TableauClass::Invalid,
    };
    if rows.iter().flatten().any(|&t| t == 0) {
        return TableauClass::Invalid;
    }
    let get = |i: usize, j: usize| rows[i - 1][j - i];
    let mut strict = true;
    for (i, j) in shape.cells() {
        let t = get(i, j);
        for (a, b) in [(i, j + 1), (i + 1, j)] {
            if shape.contains(a, b) {
                let s = get(a, b);
                if s < t {
                    return TableauClass::Invalid;
                }
                if s == t {
                    strict = false;
                }
            }
        }
    }
    if !strict {
        return TableauClass::Weak;
    }
    let n = shape.size();
    let mut seen = vec![false; n + 1];
    let standard = rows.iter().flatten().all(|&t| {
        let t = t as usize;
        t <= n && !std::mem::replace(&mut seen[t], true)
    });
    if standard {
        TableauClass::Standard
    } else {
        TableauClass::Increasing
    }
}

/// A filling of a shifted diagram with positive integers, weakly increasing
/// along rows and columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShiftedTableau {
    shape: Shape,
    rows: Vec<Vec<u32>>,
}

impl ShiftedTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<ShiftedTableau> {
        let shape = Shape::new(rows.iter().map(|r| r.len()).collect())?;
        if tableau_class(&rows) == TableauClass::Invalid {
            return Err(Error::InvalidTableau(
                "entries must be positive and weakly increase along rows and columns".into(),
            ));
        }
        Ok(ShiftedTableau { shape, rows })
    }

    /// Builds the tableau of `shape` with entry `value(i, j)` in cell `(i, j)`.
    pub fn from_fn(shape: &Shape, mut value: impl FnMut(usize, usize) -> u32) -> Result<ShiftedTableau> {
        let rows = (1..=shape.rows()).map(|i| (i..=shape.row_end(i)).map(|j| value(i, j)).collect()).collect();
        ShiftedTableau::new(rows)
    }

    /// Like [`ShiftedTableau::from_fn`] with a fallible entry function.
    pub fn try_from_fn(shape: &Shape, mut value: impl FnMut(usize, usize) -> Result<u32>) -> Result<ShiftedTableau> {
        let mut rows = Vec::with_capacity(shape.rows());
        for i in 1..=shape.rows() {
            let row = (i..=shape.row_end(i)).map(|j| value(i, j)).collect::<Result<Vec<u32>>>()?;
            rows.push(row);
        }
        ShiftedTableau::new(rows)
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry of cell `(i, j)`, if it is a cell.
    pub fn get(&self, i: usize, j: usize) -> Option<u32> {
        if self.shape.contains(i, j) {
            Some(self.rows[i - 1][j - i])
        } else {
            None
        }
    }

    /// Entry of a cell known to exist.
    pub fn at(&self, i: usize, j: usize) -> u32 {
        self.rows[i - 1][j - i]
    }

    /// The largest entry; 0 for the empty tableau.
    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn class(&self) -> TableauClass {
        tableau_class(&self.rows)
    }

    pub fn is_increasing(&self) -> bool {
        matches!(self.class(), TableauClass::Increasing | TableauClass::Standard)
    }

    /// Whether the set of entries is exactly `{1, ..., k}`.
    pub fn entries_form_interval(&self, k: u32) -> bool {
        let mut seen = vec![false; k as usize + 1];
        for &t in self.rows.iter().flatten() {
            if t > k {
                return false;
            }
            seen[t as usize] = true;
        }
        seen[1..].iter().all(|&b| b)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tableaux always serialize")
    }

    pub fn from_json(text: &str) -> Result<ShiftedTableau> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    shape: Vec<usize>,
    rows: Vec<Vec<u32>>,
}

impl Serialize for ShiftedTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableauJson { shape: self.shape.parts.clone(), rows: self.rows.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ShiftedTableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<ShiftedTableau, D::Error> {
        let raw = TableauJson::deserialize(d)?;
        let lens: Vec<usize> = raw.rows.iter().map(|r| r.len()).collect();
        if lens != raw.shape {
            return Err(serde::de::Error::custom(format!(
                "row lengths {:?} do not match the shape {:?}",
                lens, raw.shape
            )));
        }
        ShiftedTableau::new(raw.rows).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for ShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}
