//! Counting functions: the interval sizes `I` and `J`, type-V multichain
//! counts `V(a, b)`, the number `f(P)` of minimum-length small-interval
//! chains from `P` to `u^n` (by tableaux and by recursion), the prime and
//! prefix sums, saturated-chain counts and multichain counts.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::{count_interval, degree_formula, hv_or_zero, interval_paths, valleys_up_to, Multichain};
use crate::paths::{decompose_prefix, decompose_prime, Path, Step};
use crate::tableaux::{count_increasing, count_standard_formula, count_weak_exact, Shape};

/// Default cap on `|duP|` for [`prop3_rhs`].
pub const PREFIX_SUM_LIMIT: usize = 12;

pub(crate) fn serialize_decimal<S: Serializer>(value: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&value.to_str_radix(10))
}

/// How a value of `f` was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    Bruteforce,
    Tableaux,
    Recursive,
}

/// One step of the recursive evaluation of `f`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum Reduction {
    /// `f(P) = f(u^r P)`, with `u^r P` a Dyck prefix.
    Lift { ups: usize, path: Path },
    /// `f(uQ) = f(Q)`.
    StripUp { path: Path },
    /// `f(a_0 u B) = f(a_0) f(duB)` for a nonempty Dyck path `a_0`.
    SplitComponent { left: Path, right: Path },
    /// `f(duB)` as the prefix sum over `B`.
    PrefixSum {
        prefix: Path,
        #[serde(serialize_with = "serialize_decimal")]
        value: BigUint,
    },
    /// `f(ubd R) = f(ubd) f(dR) = f(ubd) f(R)` for a nonempty Dyck path `R`.
    SplitPrime { left: Path, right: Path },
    /// `f(ubd)` as the prime sum over `b`.
    PrimeSum {
        dyck: Path,
        #[serde(serialize_with = "serialize_decimal")]
        value: BigUint,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FResult {
    #[serde(serialize_with = "serialize_decimal")]
    pub value: BigUint,
    pub route: Route,
    pub trace: Vec<Reduction>,
}

fn require_dyck(a: &Path) -> Result<()> {
    if a.is_dyck() {
        Ok(())
    } else {
        Err(Error::NotDyck(a.to_string()))
    }
}

/// `I(a) = |[a, u^m d^m]|` for a Dyck path `a` of semilength `m`.
pub fn i_count(a: &Path) -> Result<BigUint> {
    require_dyck(a)?;
    count_interval(a, &Path::tent(a.len() / 2))
}

/// `J(P) = |[P, u^{|P|}]|`.
pub fn j_count(p: &Path) -> BigUint {
    count_interval(p, &Path::all_up(p.len())).expect("every path lies below the top")
}

/// The Dyck paths `y >= x` that share with `x` all valleys at heights `<= level`.
fn type_v_successors(x: &Path, level: i32) -> Vec<Path> {
    let key = valleys_up_to(x, level);
    interval_paths(x, &Path::tent(x.len() / 2))
        .expect("a Dyck path lies below the tent")
        .into_iter()
        .filter(|y| valleys_up_to(y, level) == key)
        .collect()
}

/// `V(a, s)` for every `s` with `V(a, s) != 0`, in lexicographic order of `s`.
pub fn v_counts_from(a: &Path) -> Result<BTreeMap<Path, BigUint>> {
    require_dyck(a)?;
    let h = hv_or_zero(a);
    let mut current = BTreeMap::from([(a.clone(), BigUint::one())]);
    for j in 1..=h {
        let mut next: BTreeMap<Path, BigUint> = BTreeMap::new();
        for (x, c) in &current {
            for y in type_v_successors(x, h - j) {
                *next.entry(y).or_default() += c;
            }
        }
        current = next;
    }
    Ok(current)
}

/// The number of type-V multichains from `a` to `b`.
pub fn v_count(a: &Path, b: &Path) -> Result<BigUint> {
    require_dyck(a)?;
    require_dyck(b)?;
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
    }
    Ok(v_counts_from(a)?.remove(b).unwrap_or_else(BigUint::zero))
}

/// Every type-V multichain starting at `a`, with its endpoint, sorted by
/// endpoint and then by the multichain.
pub fn enumerate_type_v(a: &Path) -> Result<Vec<(Path, Multichain)>> {
    require_dyck(a)?;
    let h = hv_or_zero(a);
    let mut out = Vec::new();
    fn extend(chain: &mut Vec<Path>, h: i32, out: &mut Vec<(Path, Multichain)>) {
        let j = chain.len() as i32;
        if j > h {
            let c = Multichain::new(chain.clone()).expect("members increase");
            out.push((chain[chain.len() - 1].clone(), c));
            return;
        }
        for y in type_v_successors(&chain[chain.len() - 1], h - j) {
            chain.push(y);
            extend(chain, h, out);
            chain.pop();
        }
    }
    extend(&mut vec![a.clone()], h, &mut out);
    out.sort();
    Ok(out)
}

/// `Σ_{s >= a} V(a, s) I(s)`, which equals `f(uad)`.
pub fn prop2_rhs(a: &Path) -> Result<BigUint> {
    let mut total = BigUint::zero();
    for (s, v) in v_counts_from(a)? {
        total += v * i_count(&s)?;
    }
    Ok(total)
}

/// `Σ Π_l V(a_l, s_l) J(s_0 V_1)` for `P = a_0 u a_1 ... u a_k`, with
/// `|duP|` capped at [`PREFIX_SUM_LIMIT`]. This equals `f(duP)`.
pub fn prop3_rhs(p: &Path) -> Result<BigUint> {
    prop3_rhs_with_limit(p, Some(PREFIX_SUM_LIMIT))
}

/// [`prop3_rhs`] with an explicit cap on `|duP|` (`None` for no cap).
///
/// The sum runs over Dyck paths `s_l >= a_l` and Dyck prefixes `V_i` of the
/// same length as `u s_i V_{i+1}` with `V_i >= u s_i V_{i+1}` and
/// `V_{k+1} = ε`. The `V_i` are accumulated from `i = k` down to `1` with
/// multiplicities, so each choice of `s_k, ..., s_1` is visited once.
pub fn prop3_rhs_with_limit(p: &Path, limit: Option<usize>) -> Result<BigUint> {
    if let Some(limit) = limit {
        if p.len() + 2 > limit {
            return Err(Error::LimitExceeded { what: "|duP|", size: p.len() + 2, limit });
        }
    }
    let parts = decompose_prefix(p)?;
    let choices = parts
        .iter()
        .map(|a| v_counts_from(a).map(|m| m.into_iter().collect::<Vec<_>>()))
        .collect::<Result<Vec<_>>>()?;
    let mut j_cache: BTreeMap<Path, BigUint> = BTreeMap::new();
    let mut total = BigUint::zero();
    let tails = BTreeMap::from([(Path::empty(), BigUint::one())]);
    descend(parts.len() - 1, &choices, &tails, &BigUint::one(), &mut j_cache, &mut total);
    Ok(total)
}

fn descend(
    i: usize,
    choices: &[Vec<(Path, BigUint)>],
    tails: &BTreeMap<Path, BigUint>,
    weight: &BigUint,
    j_cache: &mut BTreeMap<Path, BigUint>,
    total: &mut BigUint,
) {
    if i == 0 {
        for (s0, w0) in &choices[0] {
            for (v1, c) in tails {
                let word = s0.concat(v1);
                let j = j_cache.entry(word).or_insert_with_key(j_count);
                *total += weight * w0 * c * &*j;
            }
        }
        return;
    }
    for (s, w) in &choices[i] {
        let mut next: BTreeMap<Path, BigUint> = BTreeMap::new();
        for (tail, c) in tails {
            let lower = s.prepend(Step::Up).concat(tail);
            let top = Path::all_up(lower.len());
            for v in interval_paths(&lower, &top).expect("every path lies below the top") {
                *next.entry(v).or_default() += c;
            }
        }
        descend(i - 1, choices, &next, &(weight * w), j_cache, total);
    }
}

/// `f(P)` as the number of increasing tableaux of shape `λ(P')` whose
/// entries form `[δ(P')]`, where `P'` is `P` without its first ascent.
pub fn f_by_tableaux(p: &Path) -> BigUint {
    let q = p.strip_leading_ups();
    if q.is_empty() {
        return BigUint::one();
    }
    let shape = Shape::of_path(&q).expect("the path starts with d");
    count_increasing(&shape, degree_formula(&q) as u32, true)
}

/// `f(P)` from the product rules, the prime sum and the prefix sum.
///
/// `P` is first lifted to the Dyck prefix `Q = u^r P`. While `Q = a_0 u B`
/// ends above zero, either `a_0 = ε` and a leading up-step is dropped, or
/// `f(Q) = f(a_0) f(duB)` with the second factor a prefix sum. A Dyck path
/// `Q = u b d R` splits off its first prime factor, evaluated by the prime
/// sum.
pub fn f_recursive(p: &Path) -> FResult {
    let mut trace = Vec::new();
    let value = if p.is_all_up() {
        BigUint::one()
    } else {
        let r = (-p.min_height()).max(0) as usize;
        let q = Path::all_up(r).concat(p);
        if r > 0 {
            trace.push(Reduction::Lift { ups: r, path: q.clone() });
        }
        f_dyck_prefix(q, &mut trace)
    };
    FResult { value, route: Route::Recursive, trace }
}

fn f_dyck_prefix(mut q: Path, trace: &mut Vec<Reduction>) -> BigUint {
    let mut value = BigUint::one();
    loop {
        if q.is_empty() {
            return value;
        }
        let parts = decompose_prefix(&q).expect("a Dyck prefix");
        if parts.len() > 1 {
            if parts[0].is_empty() {
                q = q.slice(1..q.len());
                trace.push(Reduction::StripUp { path: q.clone() });
                continue;
            }
            let left = parts[0].clone();
            let b = q.slice(left.len() + 1..q.len());
            let du = Path::new(vec![Step::Down, Step::Up]);
            trace.push(Reduction::SplitComponent { left: left.clone(), right: du.concat(&b) });
            let rhs = prop3_rhs_with_limit(&b, None).expect("a Dyck prefix");
            trace.push(Reduction::PrefixSum { prefix: b, value: rhs.clone() });
            value *= rhs;
            q = left;
            continue;
        }
        let primes = decompose_prime(&q).expect("a Dyck path");
        let first = primes[0].clone();
        let rest = q.slice(first.len() + 2..q.len());
        if !rest.is_empty() {
            trace.push(Reduction::SplitPrime { left: q.slice(0..first.len() + 2), right: rest.clone() });
        }
        let rhs = prop2_rhs(&first).expect("a Dyck path");
        trace.push(Reduction::PrimeSum { dyck: first, value: rhs.clone() });
        value *= rhs;
        q = rest;
    }
}

/// The number of saturated chains from `P` to `u^n`: standard tableaux of
/// shape `λ(P')`, `P'` being `P` without its first ascent.
pub fn saturated_count(p: &Path) -> Result<BigUint> {
    let q = p.strip_leading_ups();
    if q.is_empty() {
        return Err(Error::InvalidShape(format!("λ({}) is empty", p)));
    }
    Ok(count_standard_formula(&Shape::of_path(&q)?))
}

/// The number of multichains `P = P_0 = ... = P_{μ-1} < P_μ <= ... <= P_k = u^n`:
/// weak tableaux of shape `λ(P')` with maximum exactly `k - μ + 1`.
pub fn multichain_counts(p: &Path, k: usize, mu: usize) -> Result<BigUint> {
    if mu < 1 || mu > k {
        return Err(Error::BoundViolation(format!("μ = {} must lie in [1, k] = [1, {}]", mu, k)));
    }
    let q = p.strip_leading_ups();
    if q.is_empty() {
        return Ok(BigUint::zero());
    }
    Ok(count_weak_exact(&Shape::of_path(&q)?, (k - mu + 1) as u32))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Path {
        s.parse().unwrap()
    }

    fn big(v: u32) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn interval_counts() {
        assert_eq!(i_count(&p("uudd")).unwrap(), big(1));
        assert_eq!(i_count(&p("udud")).unwrap(), big(2));
        assert_eq!(i_count(&p("")).unwrap(), big(1));
        assert!(i_count(&p("du")).is_err());
        assert_eq!(j_count(&p("ud")), big(2));
        assert_eq!(j_count(&p("du")), big(3));
        assert_eq!(j_count(&p("")), big(1));
    }

    #[test]
    fn type_v_counts() {
        assert_eq!(v_count(&p("udud"), &p("udud")).unwrap(), big(1));
        assert_eq!(v_count(&p("udud"), &p("uudd")).unwrap(), big(0));
        assert_eq!(v_count(&p(""), &p("")).unwrap(), big(1));
        assert!(v_count(&p("ud"), &p("udud")).is_err());
        let listed = enumerate_type_v(&p("uduudd")).unwrap();
        let counts = v_counts_from(&p("uduudd")).unwrap();
        let total: BigUint = counts.values().sum();
        assert_eq!(BigUint::from(listed.len()), total);
    }

    #[test]
    fn f_small_values() {
        assert_eq!(f_by_tableaux(&p("dd")), big(1));
        assert_eq!(f_by_tableaux(&p("dudd")), big(2));
        assert_eq!(f_by_tableaux(&p("dduu")), big(1));
        for w in ["dd", "dudd", "dduu", "uudd", "duduud", "ddudu", ""] {
            assert_eq!(f_recursive(&p(w)).value, f_by_tableaux(&p(w)), "{}", w);
        }
        let top = f_recursive(&p("uuuu"));
        assert_eq!(top.value, big(1));
        assert!(top.trace.is_empty());
    }

    #[test]
    fn sums() {
        assert_eq!(prop2_rhs(&p("")).unwrap(), big(1));
        assert_eq!(prop2_rhs(&p("ud")).unwrap(), big(1));
        assert_eq!(prop3_rhs(&p("")).unwrap(), big(1));
        assert_eq!(prop3_rhs(&p("uud")).unwrap(), f_by_tableaux(&p("duuud")));
        let long = Path::all_up(11);
        assert!(matches!(prop3_rhs(&long), Err(Error::LimitExceeded { .. })));
    }

    #[test]
    fn saturated_and_multichains() {
        assert_eq!(saturated_count(&p("dd")).unwrap(), big(1));
        assert_eq!(saturated_count(&p("duduud")).unwrap(), big(198));
        assert_eq!(saturated_count(&p("ud")).unwrap(), big(1));
        assert!(saturated_count(&p("uu")).is_err());
        assert_eq!(multichain_counts(&p("d"), 2, 1).unwrap(), big(1));
        assert_eq!(multichain_counts(&p("d"), 2, 2).unwrap(), big(1));
        assert_eq!(multichain_counts(&p("uu"), 2, 1).unwrap(), big(0));
        assert!(multichain_counts(&p("d"), 2, 3).is_err());
    }

    #[test]
    fn trace_serializes_counts_as_strings() {
        let r = f_recursive(&p("dudd"));
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["value"], "2");
        assert_eq!(json["route"], "recursive");
    }
}
