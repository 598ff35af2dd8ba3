//! The map behind the Dyck-prefix sum. For a Dyck prefix
//! `P = a_0 u a_1 ... u a_k`, increasing tableaux `T` of shape `λ(duP)` with
//! `max(T) = |P| + 2` correspond to multichains `P = W_0 <= ... <= W_{h+k+1}`
//! with `h = max_l hv(a_l)`, where `duW_r` bounds the cells
//! `F_r = {(i, j) : t_ij <= i + j + b_jr}` and
//! `b_jr = min(h - r + k, l(j)) + (h - r)[r <= h]`.
//!
//! The band index `l(j)` comes from the anchor cells `(i_l, j_l)` of the last
//! points of the components `a_l`: `l(j) = k` for `j < j_k`, `l(j) = ν` for
//! `j_ν <= j < j_{ν-1}`, and `l(n) = -1`.

use crate::error::{Error, Result};
use crate::lattice::{hv_or_zero, is_type_v, Multichain};
use crate::paths::{decompose_prefix, Path, Step};
use crate::tableaux::{in_region, region_path, Shape, ShiftedTableau};

/// Decomposition data of a Dyck prefix `P` used by the map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixBands {
    pub prefix: Path,
    pub components: Vec<Path>,
    /// `k`, the final height of `P`.
    pub k: usize,
    /// `h = max_l hv(a_l)`, with `hv(ε) = 0`.
    pub h: usize,
    /// `n = |P| + 2`.
    pub n: usize,
    /// `j_l` for `l = -1, 0, ..., k` (stored at index `l + 1`).
    anchor_columns: Vec<usize>,
    /// Start index (in `P`) of each component.
    starts: Vec<usize>,
}

impl PrefixBands {
    pub fn new(p: &Path) -> Result<PrefixBands> {
        let components = decompose_prefix(p)?;
        let k = components.len() - 1;
        let h = components.iter().map(hv_or_zero).max().unwrap_or(0) as usize;
        let n = p.len() + 2;
        let mut anchor_columns = Vec::with_capacity(k + 2);
        let mut half = 0;
        anchor_columns.push(n);
        for (l, a) in components.iter().enumerate() {
            half += a.len() / 2;
            anchor_columns.push(n - 1 - l - half);
        }
        let mut starts = Vec::with_capacity(k + 1);
        let mut pos = 0;
        for a in &components {
            starts.push(pos);
            pos += a.len() + 1;
        }
        Ok(PrefixBands { prefix: p.clone(), components, k, h, n, anchor_columns, starts })
    }

    /// The anchor cell `(i_l, j_l)` for `l` in `-1..=k`.
    pub fn anchor(&self, l: i64) -> (usize, usize) {
        let half: usize = self.components.iter().take((l + 1) as usize).map(|a| a.len() / 2).sum();
        (1 + half, self.column(l))
    }

    fn column(&self, l: i64) -> usize {
        self.anchor_columns[(l + 1) as usize]
    }

    /// The band index `l(j)` of column `j`.
    pub fn band(&self, j: usize) -> i64 {
        if j == self.n {
            return -1;
        }
        let k = self.k as i64;
        if j < self.column(k) {
            return k;
        }
        (0..=k).find(|&v| self.column(v) <= j && j < self.column(v - 1)).expect("columns are covered by the bands")
    }

    /// `b_jr = min(h - r + k, l(j)) + (h - r)[r <= h]`.
    pub fn offset(&self, j: usize, r: usize) -> i64 {
        let (h, k, r) = (self.h as i64, self.k as i64, r as i64);
        let base = (h - r + k).min(self.band(j));
        if r <= h {
            base + h - r
        } else {
            base
        }
    }

    /// Number of members of the multichain, `h + k + 2`.
    pub fn members(&self) -> usize {
        self.h + self.k + 2
    }

    /// Splits a path of length `|P|` at the component boundaries of `P`,
    /// requiring up-steps at the separators.
    fn segments(&self, w: &Path) -> Option<Vec<Path>> {
        let mut out = Vec::with_capacity(self.k + 1);
        for (l, a) in self.components.iter().enumerate() {
            let s = self.starts[l];
            if l < self.k && w.steps()[s + a.len()] != Step::Up {
                return None;
            }
            out.push(w.slice(s..s + a.len()));
        }
        Some(out)
    }
}

/// Checks the structure of `(W_r)`: for `r <= h` each `W_r` is
/// `w_r0 u w_r1 ... u w_rk` with Dyck `w_rl` of length `|a_l|`,
/// `w_rl = a_l` for `r <= h - h_l`, and `(w_rl)_{h - h_l <= r <= h}` is of
/// type V; for `h <= r <= h + k`, `w_h0 u ... u w_{h, h+k-r}` is a prefix of
/// `W_r`.
pub fn check_prefix_chain(bands: &PrefixBands, w: &[Path]) -> Result<()> {
    if w.len() != bands.members() {
        return Err(Error::BoundViolation(format!("the multichain needs {} members, found {}", bands.members(), w.len())));
    }
    if w[0] != bands.prefix {
        return Err(Error::BoundViolation(format!("W_0 = {} must equal P = {}", w[0], bands.prefix)));
    }
    let (h, k) = (bands.h, bands.k);
    let mut segs = Vec::with_capacity(h + 1);
    for (r, wr) in w.iter().enumerate().take(h + 1) {
        let s = bands.segments(wr).filter(|s| s.iter().all(Path::is_dyck)).ok_or_else(|| {
            Error::BoundViolation(format!("W_{} = {} does not split along the components of P", r, wr))
        })?;
        segs.push(s);
    }
    for (l, a) in bands.components.iter().enumerate() {
        let hl = hv_or_zero(a) as usize;
        for (r, s) in segs.iter().enumerate().take(h - hl + 1) {
            if &s[l] != a {
                return Err(Error::BoundViolation(format!("w_{},{} = {} must equal a_{} = {}", r, l, s[l], l, a)));
            }
        }
        let band: Vec<Path> = segs[h - hl..=h].iter().map(|s| s[l].clone()).collect();
        if !is_type_v(&band) {
            return Err(Error::BoundViolation(format!("the components w_r,{} for r >= {} are not of type V", l, h - hl)));
        }
    }
    let top = &w[h];
    for (r, wr) in w.iter().enumerate().take(h + k + 1).skip(h) {
        let keep = h + k - r;
        let end = bands.starts[keep] + bands.components[keep].len();
        if wr.steps()[..end] != top.steps()[..end] {
            return Err(Error::BoundViolation(format!("W_{} does not start with the first {} components of W_{}", r, keep + 1, h)));
        }
    }
    Ok(())
}

/// The multichain `(W_r)_{r = 0..=h+k+1}` of an increasing tableau of shape
/// `λ(duP)` with maximum `|P| + 2`.
pub fn prefix_map(t: &ShiftedTableau) -> Result<Multichain> {
    let dup = t.shape().base_path()?;
    if dup.len() < 2 || dup.steps()[1] != Step::Up {
        return Err(Error::BoundViolation(format!("the base path {} must start with du", dup)));
    }
    let p = dup.slice(2..dup.len());
    let bands = PrefixBands::new(&p)?;
    if !t.is_increasing() {
        return Err(Error::InvalidTableau("T must be an increasing tableau".into()));
    }
    if t.max_entry() as usize != bands.n {
        return Err(Error::BoundViolation(format!("max(T) = {} but must equal |duP| = {}", t.max_entry(), bands.n)));
    }
    let n = bands.n;
    let mut paths = Vec::with_capacity(bands.members());
    for r in 0..bands.members() {
        let inside = |i: usize, j: usize| {
            t.get(i, j).is_some_and(|v| v as i64 <= (i + j) as i64 + bands.offset(j, r))
        };
        let path = region_path(n, inside).map_err(|e| Error::BoundViolation(format!("F_{} is not a diagram: {}", r, e)))?;
        if path.steps()[..2] != [Step::Down, Step::Up] {
            return Err(Error::Invariant(format!("the boundary of F_{} does not start with du", r)));
        }
        paths.push(path.slice(2..n));
    }
    check_prefix_chain(&bands, &paths).map_err(|e| Error::Invariant(e.to_string()))?;
    Multichain::new(paths).map_err(|e| Error::Invariant(e.to_string()))
}

/// Inverse of [`prefix_map`]: `t_ij = i + j + b_jr` on `F_r \ F_{r+1}`, where
/// `F_r` is the region of `duW_r`.
pub fn prefix_map_inverse(w: &Multichain) -> Result<ShiftedTableau> {
    let bands = PrefixBands::new(w.bottom())?;
    check_prefix_chain(&bands, w.paths())?;
    let n = bands.n;
    let du = Path::new(vec![Step::Down, Step::Up]);
    let regions: Vec<_> = w.paths().iter().map(|q| du.concat(q).heights()).collect();
    let shape = Shape::of_path(&du.concat(&bands.prefix))?;
    let t = ShiftedTableau::try_from_fn(&shape, |i, j| {
        let r = (0..regions.len()).rev().find(|&r| in_region(&regions[r], i, j)).expect("F_0 is the whole diagram");
        let v = (i + j) as i64 + bands.offset(j, r);
        u32::try_from(v).map_err(|_| Error::Invariant(format!("entry {} at ({}, {})", v, i, j)))
    })
    .map_err(|e| Error::BoundViolation(format!("the multichain does not give a tableau: {}", e)))?;
    if !t.is_increasing() || t.max_entry() as usize != n {
        return Err(Error::BoundViolation(format!("the multichain does not give an increasing tableau with maximum {}", n)));
    }
    Ok(t)
}
