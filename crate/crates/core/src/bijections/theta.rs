//! The bijection between multichains `P = P_0 <= ... <= P_k = u^n` and
//! shifted tableaux of shape `λ(P)` with entries at most `k`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{classify_multichain, Multichain, MultichainClass};
use crate::paths::{HeightProfile, Path, Step};
use crate::tableaux::{Shape, ShiftedTableau};

/// The data shared by a multichain and its tableau: the bottom path, the
/// number of steps `k`, and the shape `λ(P)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaContext {
    pub base: Path,
    pub k: usize,
    pub shape: Shape,
}

impl ThetaContext {
    pub fn new(base: Path, k: usize) -> Result<ThetaContext> {
        let shape = Shape::of_path(&base)?;
        Ok(ThetaContext { base, k, shape })
    }

    /// `k - max(T) + 1`, the number of members equal to the bottom path.
    pub fn repeated_bottoms(&self, t: &ShiftedTableau) -> Result<usize> {
        let max = t.max_entry() as usize;
        if max > self.k {
            return Err(Error::BoundViolation(format!("max(T) = {} exceeds k = {}", max, self.k)));
        }
        Ok(self.k - max + 1)
    }
}

/// `t_ij = k - ξ`, where `ξ` is the largest index with
/// `h_{n+i-j}(P_ξ) <= n - i - j`.
pub fn theta(c: &Multichain) -> Result<ShiftedTableau> {
    if c.bottom().first() != Some(Step::Down) {
        return Err(Error::MustStartWithDown(c.bottom().to_string()));
    }
    if !c.top().is_all_up() {
        return Err(Error::InvalidMultichain(format!("the top member {} is not u^{}", c.top(), c.base_length())));
    }
    theta_on_region(c)
}

/// `θ` for a multichain ending at `u^n` with an arbitrary bottom; the
/// tableau lives on the region between the bottom path and `u^n`.
pub(crate) fn theta_on_region(c: &Multichain) -> Result<ShiftedTableau> {
    let n = c.base_length();
    let k = c.length();
    let heights: Vec<HeightProfile> = c.paths().iter().map(Path::heights).collect();
    let h0 = &heights[0];
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for i in 1..=n {
        let mut row = Vec::new();
        for j in i..=n {
            let x = n + i - j;
            let y = x as i32 - 2 * i as i32;
            if h0.at(x) > y {
                continue;
            }
            let xi = (0..=k).rev().find(|&xi| heights[xi].at(x) <= y).expect("the bottom lies below the cell");
            if xi == k {
                return Err(Error::InvalidMultichain("the top member is not u^n".into()));
            }
            row.push((k - xi) as u32);
        }
        if row.is_empty() {
            break;
        }
        rows.push(row);
    }
    ShiftedTableau::new(rows)
}

/// The multichain of a tableau: `P_ξ` bounds the cells with entries
/// `<= k - ξ`.
pub fn theta_inv(t: &ShiftedTableau, k: usize) -> Result<Multichain> {
    let n = t.shape().first_row();
    if n == 0 {
        return Err(Error::InvalidShape("the empty shape has no base path".into()));
    }
    theta_inv_on(t, n, k)
}

/// `θ⁻¹` with an explicit base length, allowing the empty tableau for the
/// empty base path.
pub(crate) fn theta_inv_on(t: &ShiftedTableau, n: usize, k: usize) -> Result<Multichain> {
    if t.max_entry() as usize > k {
        return Err(Error::BoundViolation(format!("max(T) = {} exceeds k = {}", t.max_entry(), k)));
    }
    if t.shape().first_row() > n {
        return Err(Error::InvalidShape(format!("{} does not fit a base path of length {}", t.shape(), n)));
    }
    // count[x][v] = number of cells on diagonal x with entry <= v
    let mut count = vec![vec![0i32; k + 1]; n + 1];
    for (i, j) in t.shape().cells() {
        let x = n + i - j;
        count[x][t.at(i, j) as usize] += 1;
    }
    for row in count.iter_mut() {
        for v in 1..=k {
            row[v] += row[v - 1];
        }
    }
    let mut paths = Vec::with_capacity(k + 1);
    for xi in 0..=k {
        let mut h = Vec::with_capacity(n + 1);
        h.push(0);
        for (x, row) in count.iter().enumerate().skip(1) {
            h.push(x as i32 - 2 * row[k - xi]);
        }
        let profile = HeightProfile::new(h).map_err(|e| Error::InvalidTableau(format!("boundary is not a path: {}", e)))?;
        paths.push(Path::from_heights(&profile));
    }
    Multichain::new(paths)
}

/// Classifies the multichain of `T` from the tableau alone (chain iff the
/// entries form `[k]`, small intervals iff increasing, saturated iff
/// standard with entries `[k]`) and checks the result against the
/// classification of `θ⁻¹(T, k)`.
pub fn classify_via_theta(t: &ShiftedTableau, k: usize) -> Result<MultichainClass> {
    let chain = theta_inv(t, k)?;
    let is_chain = t.entries_form_interval(k as u32);
    let small_intervals = t.is_increasing();
    let is_saturated = t.class() == crate::tableaux::TableauClass::Standard && is_chain;
    let from_tableau = MultichainClass { is_chain, small_intervals, is_saturated };
    let from_chain = classify_multichain(&chain, true)?;
    if from_tableau != from_chain {
        return Err(Error::Invariant(format!(
            "tableau-side classification {:?} differs from chain-side {:?} for {}",
            from_tableau, from_chain, t
        )));
    }
    Ok(from_tableau)
}
