//! The map behind the prime-factor sum: increasing tableaux `T` of shape
//! `λ(Pd)` with `max(T) = 2m + 1`, where `a = u^{k_1} P` is a Dyck path of
//! semilength `m`, correspond to weak tableaux `V` of shape `λ(P)` with
//! `v_ij = 1` exactly for `j <= m` and `v_ij <= 2m + 3 - i - j`. Through `θ`,
//! `V` is a multichain of Dyck paths from `a` to `u^m d^m` whose first
//! `hv(a) + 1` members form a type-V multichain.

use serde::Serialize;

use super::product::shifted_entry;
use super::theta::{theta_inv_on, theta_on_region};
use crate::error::{Error, Result};
use crate::lattice::{hv_or_zero, is_type_v, Multichain};
use crate::paths::{Path, Step};
use crate::tableaux::{Shape, ShiftedTableau};

/// The image of [`prime_map`]: the Dyck path `a` determined by the shape of
/// `T`, and the tableau `V`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeImage {
    pub dyck: Path,
    pub v: ShiftedTableau,
}

/// Splits a Dyck path `a` into `(k_1, P)` with `a = u^{k_1} P` and `P`
/// empty or starting with `d`.
fn split_dyck(a: &Path) -> Result<(usize, Path)> {
    if !a.is_dyck() {
        return Err(Error::NotDyck(a.to_string()));
    }
    Ok((a.leading_ups(), a.strip_leading_ups()))
}

/// `λ(P)`, empty for `P = ε`.
fn shape_or_empty(p: &Path) -> Result<Shape> {
    if p.is_empty() {
        Ok(Shape::default())
    } else {
        Shape::of_path(p)
    }
}

/// Checks the two bounds on `V`: `v_ij = 1` iff `j <= m`, and
/// `v_ij <= 2m + 3 - i - j`.
fn check_v_bounds(v: &ShiftedTableau, m: usize) -> Result<()> {
    for (i, j) in v.shape().cells() {
        let x = v.at(i, j) as i64;
        if (x == 1) != (j <= m) {
            return Err(Error::BoundViolation(format!(
                "v_{},{} = {} but entries equal 1 exactly in the columns j <= m = {}",
                i, j, x, m
            )));
        }
        let cap = 2 * m as i64 + 3 - (i + j) as i64;
        if x > cap {
            return Err(Error::BoundViolation(format!("v_{},{} = {} exceeds 2m + 3 - i - j = {}", i, j, x, cap)));
        }
    }
    Ok(())
}

/// `v_ij = 1` for `j <= m` and `v_ij = t_{i,j+1} + 2 - i - j` otherwise.
pub fn prime_map(t: &ShiftedTableau) -> Result<PrimeImage> {
    let pd = t.shape().base_path()?;
    if pd.steps().last() != Some(&Step::Down) {
        return Err(Error::BoundViolation(format!("the base path {} must end with d", pd)));
    }
    let p = pd.slice(0..pd.len() - 1);
    let m = p.downs();
    if p.ups() > m {
        return Err(Error::NotDyck(format!("u^k{} for every k", p)));
    }
    let a = Path::all_up(2 * m - p.len()).concat(&p);
    if !a.is_dyck() {
        return Err(Error::NotDyck(a.to_string()));
    }
    if !t.is_increasing() {
        return Err(Error::InvalidTableau("T must be an increasing tableau".into()));
    }
    if t.max_entry() as usize != 2 * m + 1 {
        return Err(Error::BoundViolation(format!("max(T) = {} but must equal 2m + 1 = {}", t.max_entry(), 2 * m + 1)));
    }
    let hv = hv_or_zero(&a) as i64;
    for (i, j) in t.shape().cells() {
        let x = t.at(i, j) as i64;
        let (i64_, j64) = (i as i64, j as i64);
        if j <= m + 1 && x != i64_ + j64 - 1 {
            return Err(Error::Invariant(format!("t_{},{} = {} but columns j <= m + 1 are forced to i + j - 1", i, j, x)));
        }
        if x > i64_ + j64 + hv {
            return Err(Error::Invariant(format!("t_{},{} = {} exceeds i + j + hv(a) = {}", i, j, x, i64_ + j64 + hv)));
        }
    }
    let shape = shape_or_empty(&p)?;
    let v = ShiftedTableau::try_from_fn(&shape, |i, j| {
        if j <= m {
            Ok(1)
        } else {
            shifted_entry(t, i, j + 1, (i + j - 2) as u32)
        }
    })?;
    check_v_bounds(&v, m).map_err(|e| Error::Invariant(e.to_string()))?;
    Ok(PrimeImage { dyck: a, v })
}

/// Inverse of [`prime_map`]: `t_ij = i + j - 1` for `j <= m + 1` and
/// `t_ij = v_{i,j-1} + i + j - 3` otherwise.
pub fn prime_map_inverse(v: &ShiftedTableau, a: &Path) -> Result<ShiftedTableau> {
    let (_, p) = split_dyck(a)?;
    let m = p.downs();
    let shape = shape_or_empty(&p)?;
    if v.shape() != &shape {
        return Err(Error::BoundViolation(format!("V has shape {} but λ({}) = {}", v.shape(), p, shape)));
    }
    check_v_bounds(v, m)?;
    let pd = p.append(Step::Down);
    let t = ShiftedTableau::try_from_fn(&Shape::of_path(&pd)?, |i, j| {
        if j <= m + 1 {
            Ok((i + j - 1) as u32)
        } else {
            Ok(v.at(i, j - 1) + (i + j - 3) as u32)
        }
    })?;
    if !t.is_increasing() || t.max_entry() as usize != 2 * m + 1 {
        return Err(Error::BoundViolation(format!("V does not come from an increasing tableau with maximum {}", 2 * m + 1)));
    }
    Ok(t)
}

/// The multichain `σ_0 = a <= ... <= σ_{k-1} = u^m d^m <= σ_k = u^{2m}` of
/// `V`, with `k = hv(a) + 3` and `σ_ξ = u^{k_1} s_ξ` for the multichain
/// `(s_ξ) = θ⁻¹(V, k)` over `P`.
pub fn v_tableau_to_type_v_chain(v: &ShiftedTableau, a: &Path) -> Result<Multichain> {
    let (k1, p) = split_dyck(a)?;
    let m = p.downs();
    let shape = shape_or_empty(&p)?;
    if v.shape() != &shape {
        return Err(Error::BoundViolation(format!("V has shape {} but λ({}) = {}", v.shape(), p, shape)));
    }
    check_v_bounds(v, m)?;
    let k = hv_or_zero(a) as usize + 3;
    let s = theta_inv_on(v, p.len(), k)?;
    let lift = Path::all_up(k1);
    let sigma: Vec<Path> = s.paths().iter().map(|q| lift.concat(q)).collect();
    check_sigma(&sigma, a, m)?;
    Multichain::new(sigma)
}

/// Inverse of [`v_tableau_to_type_v_chain`].
pub fn type_v_chain_to_v_tableau(chain: &Multichain, a: &Path) -> Result<ShiftedTableau> {
    let (k1, p) = split_dyck(a)?;
    let m = p.downs();
    let k = hv_or_zero(a) as usize + 3;
    if chain.length() != k {
        return Err(Error::BoundViolation(format!("the multichain has {} steps but needs hv(a) + 3 = {}", chain.length(), k)));
    }
    if chain.paths().iter().any(|q| q.leading_ups() < k1 || q.len() != a.len()) {
        return Err(Error::BoundViolation(format!("every member must start with u^{} and have length {}", k1, a.len())));
    }
    check_sigma(chain.paths(), a, m)?;
    let s = Multichain::new(chain.paths().iter().map(|q| q.slice(k1..q.len())).collect())?;
    let v = theta_on_region(&s)?;
    check_v_bounds(&v, m)?;
    Ok(v)
}

fn check_sigma(sigma: &[Path], a: &Path, m: usize) -> Result<()> {
    let k = sigma.len() - 1;
    if &sigma[0] != a {
        return Err(Error::Invariant(format!("σ_0 = {} differs from a = {}", sigma[0], a)));
    }
    if sigma[k - 1] != Path::tent(m) || sigma[k] != Path::all_up(2 * m) {
        return Err(Error::BoundViolation("the multichain must end with u^m d^m <= u^{2m}".into()));
    }
    if !sigma[..k].iter().all(Path::is_dyck) {
        return Err(Error::BoundViolation("the members below the top must be Dyck paths".into()));
    }
    if !is_type_v(&sigma[..k - 2]) {
        return Err(Error::BoundViolation("the first hv(a) + 1 members are not a type-V multichain".into()));
    }
    Ok(())
}
