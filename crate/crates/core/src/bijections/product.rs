//! Tableau decompositions behind the product rules for minimal chains:
//! splitting the tableau of `P_1 P_2` into tableaux for `P_1` and `d P_2`,
//! and deleting the forced first row of the tableau of `d P`.

use crate::error::{Error, Result};
use crate::paths::{Path, Step};
use crate::tableaux::{Shape, ShiftedTableau};

fn require_increasing(t: &ShiftedTableau, what: &str) -> Result<()> {
    if !t.is_increasing() {
        return Err(Error::InvalidTableau(format!("{} must be an increasing tableau", what)));
    }
    Ok(())
}

fn require_max(t: &ShiftedTableau, expected: usize, what: &str) -> Result<()> {
    if t.max_entry() as usize != expected {
        return Err(Error::BoundViolation(format!("max({}) = {} but must equal {}", what, t.max_entry(), expected)));
    }
    Ok(())
}

/// `t_ij - offset`, failing if the cell is missing or the result is not positive.
pub(crate) fn shifted_entry(t: &ShiftedTableau, i: usize, j: usize, offset: u32) -> Result<u32> {
    match t.get(i, j) {
        Some(v) if v > offset => Ok(v - offset),
        Some(v) => Err(Error::BoundViolation(format!("entry {} at ({}, {}) must exceed {}", v, i, j, offset))),
        None => Err(Error::Invariant(format!("cell ({}, {}) is missing from {}", i, j, t.shape()))),
    }
}

/// Checks the factor conditions: `P_1` a Dyck suffix other than `d`, `P_2`
/// a nonempty Dyck prefix.
fn check_factors(p1: &Path, p2: &Path) -> Result<()> {
    if p1.first() != Some(Step::Down) {
        return Err(Error::MustStartWithDown(p1.to_string()));
    }
    if !p1.is_dyck_suffix() {
        return Err(Error::NotDyckSuffix(p1.to_string()));
    }
    if p1.len() == 1 {
        return Err(Error::BoundViolation("the left factor must differ from d".into()));
    }
    if p2.is_empty() {
        return Err(Error::BoundViolation("the right factor must be nonempty".into()));
    }
    if !p2.is_dyck_prefix() {
        return Err(Error::NotDyckPrefix(p2.to_string()));
    }
    Ok(())
}

/// Splits an increasing tableau `T` of shape `λ(P_1 P_2)` with
/// `max(T) = 2 m_1 + n_2 - 1` into
/// `t¹_ij = t_{i, j+n_2} - n_2` (shape `λ(P_1)`, max `2 m_1 - 1`) and
/// `t²_ij = t_{i+m_1-1, j+m_1-1} - 2(m_1 - 1)` (shape `λ(d P_2)`, max `n_2 + 1`).
pub fn split_product(t: &ShiftedTableau, n2: usize, m1: usize) -> Result<(ShiftedTableau, ShiftedTableau)> {
    let p = t.shape().base_path()?;
    let n = p.len();
    if n2 == 0 || n2 >= n {
        return Err(Error::BoundViolation(format!("n_2 = {} must lie in [1, {}]", n2, n.saturating_sub(1))));
    }
    let (p1, p2) = (p.slice(0..n - n2), p.slice(n - n2..n));
    check_factors(&p1, &p2)?;
    if p1.downs() != m1 {
        return Err(Error::BoundViolation(format!("m_1 = {} but the left factor {} has {} down-steps", m1, p1, p1.downs())));
    }
    require_increasing(t, "T")?;
    require_max(t, 2 * m1 + n2 - 1, "T")?;

    let s1 = Shape::of_path(&p1)?;
    let s2 = Shape::of_path(&p2.prepend(Step::Down))?;
    let t1 = ShiftedTableau::try_from_fn(&s1, |i, j| shifted_entry(t, i, j + n2, n2 as u32))?;
    let shift = 2 * (m1 as u32 - 1);
    let t2 = ShiftedTableau::try_from_fn(&s2, |i, j| shifted_entry(t, i + m1 - 1, j + m1 - 1, shift))?;

    for (i, j) in t.shape().cells() {
        let covered = s1.contains(i, j.wrapping_sub(n2)) || (i >= m1 && j >= m1 && s2.contains(i + 1 - m1, j + 1 - m1));
        if !covered && t.at(i, j) as usize != i + j - 1 {
            return Err(Error::Invariant(format!("residual cell ({}, {}) holds {} instead of {}", i, j, t.at(i, j), i + j - 1)));
        }
    }
    require_increasing(&t1, "T_1")?;
    require_max(&t1, 2 * m1 - 1, "T_1")?;
    require_increasing(&t2, "T_2")?;
    require_max(&t2, n2 + 1, "T_2")?;
    Ok((t1, t2))
}

/// Inverse of [`split_product`]: the factors are read off the shapes of
/// `T_1` (for `P_1`) and `T_2` (for `d P_2`).
pub fn merge_product(t1: &ShiftedTableau, t2: &ShiftedTableau) -> Result<ShiftedTableau> {
    let p1 = t1.shape().base_path()?;
    let dp2 = t2.shape().base_path()?;
    let p2 = dp2.slice(1..dp2.len());
    check_factors(&p1, &p2)?;
    let (m1, n2) = (p1.downs(), p2.len());
    require_increasing(t1, "T_1")?;
    require_max(t1, 2 * m1 - 1, "T_1")?;
    require_increasing(t2, "T_2")?;
    require_max(t2, n2 + 1, "T_2")?;

    let shape = Shape::of_path(&p1.concat(&p2))?;
    let shift = 2 * (m1 as u32 - 1);
    let mut clash = None;
    let t = ShiftedTableau::from_fn(&shape, |i, j| {
        let from1 = t1.shape().contains(i, j.wrapping_sub(n2)).then(|| t1.at(i, j - n2) + n2 as u32);
        let from2 = (i >= m1 && j >= m1 && t2.shape().contains(i + 1 - m1, j + 1 - m1))
            .then(|| t2.at(i + 1 - m1, j + 1 - m1) + shift);
        match (from1, from2) {
            (Some(a), Some(b)) if a != b => {
                clash = Some((i, j, a, b));
                a
            }
            (Some(a), _) | (None, Some(a)) => a,
            (None, None) => (i + j - 1) as u32,
        }
    })
    .map_err(|e| Error::Invariant(format!("merged filling is not a tableau: {}", e)))?;
    if let Some((i, j, a, b)) = clash {
        return Err(Error::BoundViolation(format!("the factors disagree at the shared cell ({}, {}): {} vs {}", i, j, a, b)));
    }
    require_increasing(&t, "the merged tableau")?;
    require_max(&t, 2 * m1 + n2 - 1, "the merged tableau")?;
    Ok(t)
}

/// Deletes the first row of an increasing tableau `T` of shape `λ(dP)`,
/// where `P = u^k Q` is a Dyck prefix with a return point and `Q` starts
/// with `d`: `t'_ij = t_{i+1, j+1} - 2`.
pub fn strip_first_row(t: &ShiftedTableau) -> Result<ShiftedTableau> {
    let dp = t.shape().base_path()?;
    let p = dp.slice(1..dp.len());
    let q = p.strip_leading_ups();
    check_return_prefix(&p, &q)?;
    require_increasing(t, "T")?;
    require_max(t, p.len() + 1, "T")?;
    let expected: Vec<u32> = (1..=p.len() as u32 + 1).collect();
    if t.rows()[0] != expected {
        return Err(Error::BoundViolation(format!("the first row must be 1..{}", p.len() + 1)));
    }
    let rows: Vec<Vec<u32>> = t.rows()[1..].iter().map(|r| r.iter().map(|v| v - 2).collect()).collect();
    let stripped = ShiftedTableau::new(rows)?;
    if stripped.shape().base_path()? != q {
        return Err(Error::Invariant("the remaining rows do not have the shape of Q".into()));
    }
    require_max(&stripped, p.len() - 1, "T'")?;
    Ok(stripped)
}

/// Inverse of [`strip_first_row`]: `|P| = max(T') + 1` and `P = u^k Q` with
/// `Q` the base path of `T'`.
pub fn restore_first_row(stripped: &ShiftedTableau) -> Result<ShiftedTableau> {
    let q = stripped.shape().base_path()?;
    let len_p = stripped.max_entry() as usize + 1;
    if len_p <= q.len() {
        return Err(Error::BoundViolation(format!("max(T') = {} is too small for Q = {}", stripped.max_entry(), q)));
    }
    let p = Path::all_up(len_p - q.len()).concat(&q);
    check_return_prefix(&p, &q)?;
    require_increasing(stripped, "T'")?;
    let mut rows = vec![(1..=len_p as u32 + 1).collect::<Vec<u32>>()];
    rows.extend(stripped.rows().iter().map(|r| r.iter().map(|v| v + 2).collect()));
    let t = ShiftedTableau::new(rows).map_err(|e| Error::BoundViolation(format!("cannot prepend the first row: {}", e)))?;
    if t.shape().base_path()? != p.prepend(Step::Down) {
        return Err(Error::BoundViolation("T' does not fit under a first row of length |P| + 1".into()));
    }
    require_increasing(&t, "T")?;
    Ok(t)
}

fn check_return_prefix(p: &Path, q: &Path) -> Result<()> {
    if !p.is_dyck_prefix() {
        return Err(Error::NotDyckPrefix(p.to_string()));
    }
    if p.classify().return_points.is_empty() {
        return Err(Error::BoundViolation(format!("{} has no return point", p)));
    }
    if q.len() == p.len() || q.first() != Some(Step::Down) {
        return Err(Error::BoundViolation(format!("{} must be u^k Q with k >= 1 and Q starting with d", p)));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(rows: &[&[u32]]) -> ShiftedTableau {
        ShiftedTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn strip_example() {
        let t = tab(&[&[1, 2, 3], &[3]]);
        let s = strip_first_row(&t).unwrap();
        assert_eq!(s.rows(), &[vec![1]]);
        assert_eq!(restore_first_row(&s).unwrap(), t);
    }

    #[test]
    fn split_rejects_degenerate_factors() {
        // dP_2 with P_1 = d.
        let t = tab(&[&[1, 2], &[3]]);
        assert!(split_product(&t, 1, 1).is_err());
        assert!(split_product(&t, 0, 1).is_err());
    }
}
