//! Exhaustive cross-checks between the fast counting paths, the bijections
//! and the reference enumerations. Each suite walks its inputs by increasing
//! length, so the first mismatch reported is a smallest counterexample.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::Serialize;

use crate::bijections::{
    check_prefix_chain, classify_via_theta, merge_product, prefix_map, prefix_map_inverse, prime_map, prime_map_inverse, restore_first_row,
    split_product, strip_first_row, theta, theta_inv, type_v_chain_to_v_tableau, v_tableau_to_type_v_chain, PrefixBands, ThetaContext,
};
use crate::error::{Error, Result};
use crate::formulas::{f_by_tableaux, f_recursive, prop2_rhs, prop3_rhs_with_limit, v_counts_from};
use crate::lattice::{classify_multichain, hv_or_zero, valleys_up_to};
use crate::oracles::{count_saturated_chains, enumerate_type_v_brute, f_bruteforce, for_each_multichain};
use crate::paths::{Path, Step};
use crate::tableaux::{
    count_increasing, count_standard_by_corners, count_standard_formula, count_weak, enumerate_increasing, enumerate_weak,
    Shape,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Suite {
    #[serde(rename = "bijections")]
    Bijections,
    #[serde(rename = "f-threeway")]
    FThreeway,
    #[serde(rename = "hook")]
    Hook,
    #[serde(rename = "prop2")]
    Prop2,
    #[serde(rename = "prop3")]
    Prop3,
    #[serde(rename = "theta")]
    Theta,
    #[serde(rename = "typeV")]
    TypeV,
}

impl Suite {
    pub const ALL: [Suite; 7] =
        [Suite::Bijections, Suite::FThreeway, Suite::Hook, Suite::Prop2, Suite::Prop3, Suite::Theta, Suite::TypeV];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bijections => "bijections",
            Suite::FThreeway => "f-threeway",
            Suite::Hook => "hook",
            Suite::Prop2 => "prop2",
            Suite::Prop3 => "prop3",
            Suite::Theta => "theta",
            Suite::TypeV => "typeV",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown suite {:?}", s)))
    }
}

/// Options shared by the suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Upper bound on the length of the words checked.
    pub max_n: usize,
    /// Upper bound on the multichain length for the `theta` suite; `None`
    /// checks every `k <= n + 2`.
    pub max_k: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub max_n: usize,
    pub instances: u64,
    /// The first mismatch, if any.
    pub counterexample: Option<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Accumulates instance counts and stops at the first mismatch.
#[derive(Debug, Default)]
pub struct Tally {
    pub instances: u64,
    pub failure: Option<String>,
}

impl Tally {
    pub fn new() -> Tally {
        Tally { instances: 0, failure: None }
    }

    pub fn failed(&self) -> bool {
        self.failure.is_some()
    }

    /// Records one instance; the error side describes a mismatch.
    pub fn check(&mut self, outcome: std::result::Result<(), String>) {
        self.instances += 1;
        if let Err(msg) = outcome {
            self.failure.get_or_insert(msg);
        }
    }

    pub fn finish(self, suite: Suite, max_n: usize) -> SuiteOutcome {
        SuiteOutcome { suite, max_n, instances: self.instances, counterexample: self.failure }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn paths_up_to(max_n: usize) -> impl Iterator<Item = Path> {
    (0..=max_n).flat_map(Path::all_of_length)
}

fn down_paths_up_to(max_n: usize) -> impl Iterator<Item = Path> {
    paths_up_to(max_n).filter(|p| p.first() == Some(Step::Down))
}

fn dyck_paths_up_to(max_n: usize) -> impl Iterator<Item = Path> {
    (0..=max_n).step_by(2).flat_map(Path::all_of_length).filter(Path::is_dyck)
}

fn dyck_prefixes_up_to(max_n: usize) -> impl Iterator<Item = Path> {
    paths_up_to(max_n).filter(Path::is_dyck_prefix)
}

pub fn run_suite(suite: Suite, options: &VerifyOptions) -> SuiteOutcome {
    let n = options.max_n;
    let tally = match suite {
        Suite::FThreeway => f_threeway(n),
        Suite::Prop2 => prop2(n),
        Suite::Prop3 => prop3(n),
        Suite::Hook => hook(n),
        Suite::Theta => theta_suite(n, options.max_k),
        Suite::Bijections => bijections(n),
        Suite::TypeV => type_v(n),
    };
    tally.finish(suite, n)
}

/// Runs the given suites in name order.
pub fn run_suites(suites: &[Suite], options: &VerifyOptions) -> Vec<SuiteOutcome> {
    let mut ordered = suites.to_vec();
    ordered.sort_by_key(|s| s.name());
    ordered.dedup();
    ordered.iter().map(|&s| run_suite(s, options)).collect()
}

/// Brute force, tableaux and recursion agree on `f(P)` for `|P| <= max_n`.
pub fn f_threeway(max_n: usize) -> Tally {
    let mut tally = Tally::new();
    for p in paths_up_to(max_n) {
        let brute = f_bruteforce(&p).value;
        let tab = f_by_tableaux(&p);
        let rec = f_recursive(&p).value;
        tally.check(ensure(brute == tab && tab == rec, || {
            format!("f({}): brute force {}, tableaux {}, recursion {}", p, brute, tab, rec)
        }));
        if tally.failed() {
            break;
        }
    }
    tally
}

/// The prime sum over `a` equals `f(uad)` for `|uad| <= max_n`.
pub fn prop2(max_n: usize) -> Tally {
    let mut tally = Tally::new();
    for a in dyck_paths_up_to(max_n.saturating_sub(2)) {
        let uad = a.prepend(Step::Up).append(Step::Down);
        let f = f_bruteforce(&uad).value;
        let rhs = prop2_rhs(&a);
        tally.check(ensure(rhs.as_ref() == Ok(&f), || format!("a = {}: f(uad) = {} but the prime sum gives {:?}", a, f, rhs)));
        if tally.failed() {
            break;
        }
    }
    tally
}

/// The prefix sum over `P` equals `f(duP)` for `|duP| <= max_n`.
pub fn prop3(max_n: usize) -> Tally {
    let mut tally = Tally::new();
    for p in dyck_prefixes_up_to(max_n.saturating_sub(2)) {
        let dup = p.prepend(Step::Up).prepend(Step::Down);
        let f = f_bruteforce(&dup).value;
        let rhs = prop3_rhs_with_limit(&p, None);
        tally.check(ensure(rhs.as_ref() == Ok(&f), || format!("P = {}: f(duP) = {} but the prefix sum gives {:?}", p, f, rhs)));
        if tally.failed() {
            break;
        }
    }
    tally
}

/// The product formula for standard tableaux agrees with corner removal and
/// with the number of saturated chains, for `λ(P)` with `P` starting with
/// `d` and `|P| <= max_n`.
pub fn hook(max_n: usize) -> Tally {
    let mut tally = Tally::new();
    for p in down_paths_up_to(max_n) {
        let shape = Shape::of_path(&p).expect("the path starts with d");
        let formula = count_standard_formula(&shape);
        let corners = count_standard_by_corners(&shape);
        let chains = count_saturated_chains(&p);
        tally.check(ensure(formula == corners && corners == chains, || {
            format!("λ({}) = {}: formula {}, corner removal {}, saturated chains {}", p, shape, formula, corners, chains)
        }));
        if tally.failed() {
            break;
        }
    }
    tally
}

/// `θ` and `θ⁻¹` invert each other, the classification flags agree and
/// `k - max(T) + 1` counts the repeated bottoms.
pub fn theta_suite(max_n: usize, max_k: Option<usize>) -> Tally {
    let mut tally = Tally::new();
    'outer: for p in down_paths_up_to(max_n) {
        let k_cap = max_k.map_or(p.len() + 2, |k| k.min(p.len() + 2));
        for k in 1..=k_cap {
            if !check_theta_instance(&p, k, &mut tally, None) {
                break 'outer;
            }
        }
    }
    tally
}

/// Checks every multichain from `p` of length `k` and every tableau of shape
/// `λ(p)` with maximum at most `k`. Returns `false` once a mismatch has been
/// recorded or the deadline passed.
pub fn check_theta_instance(p: &Path, k: usize, tally: &mut Tally, deadline: Option<std::time::Instant>) -> bool {
    let ctx = ThetaContext::new(p.clone(), k).expect("the path starts with d");
    let mut chains = BigUint::default();
    let complete = for_each_multichain(p, k, |c| {
        if deadline.is_some_and(|d| std::time::Instant::now() >= d) {
            return false;
        }
        chains += 1u32;
        tally.check(check_theta_chain(&ctx, c));
        !tally.failed()
    });
    if !complete || tally.failed() {
        return false;
    }
    let expected = count_weak(&ctx.shape, k as u32);
    tally.check(ensure(chains == expected, || {
        format!("{} multichains from {} of length {} but {} tableaux", chains, p, k, expected)
    }));
    if tally.failed() {
        return false;
    }
    if deadline.is_none() {
        for t in enumerate_weak(&ctx.shape, k as u32) {
            let back = theta_inv(&t, k).and_then(|c| theta(&c));
            tally.check(ensure(back.as_ref() == Ok(&t), || format!("θ(θ⁻¹({}, {})) = {:?}", t, k, back)));
            if tally.failed() {
                return false;
            }
        }
    }
    true
}

fn check_theta_chain(ctx: &ThetaContext, c: &crate::lattice::Multichain) -> std::result::Result<(), String> {
    let t = theta(c).map_err(|e| format!("θ({}) failed: {}", c, e))?;
    ensure(t.shape() == &ctx.shape && t.max_entry() as usize <= ctx.k, || format!("θ({}) = {} lies outside the codomain", c, t))?;
    let back = theta_inv(&t, ctx.k).map_err(|e| format!("θ⁻¹({}) failed: {}", t, e))?;
    ensure(&back == c, || format!("θ⁻¹(θ({})) = {}", c, back))?;
    let from_tableau = classify_via_theta(&t, ctx.k).map_err(|e| format!("{}: {}", c, e))?;
    let from_chain = classify_multichain(c, true).map_err(|e| format!("{}: {}", c, e))?;
    ensure(from_tableau == from_chain, || format!("{}: tableau flags {:?} but chain flags {:?}", c, from_tableau, from_chain))?;
    let repeated = c.paths().iter().filter(|q| *q == c.bottom()).count();
    let from_max = ctx.repeated_bottoms(&t).map_err(|e| e.to_string())?;
    ensure(repeated == from_max, || format!("{}: {} repeated bottoms but k - max(T) + 1 = {}", c, repeated, from_max))
}

/// Round trips, codomains and cardinalities of the four tableau
/// decompositions, each over inputs of word length at most `max_n`.
pub fn bijections(max_n: usize) -> Tally {
    let mut tally = Tally::new();
    split_suite(max_n, &mut tally);
    strip_suite(max_n, &mut tally);
    prime_suite(max_n, &mut tally);
    prefix_suite(max_n, &mut tally);
    tally
}

/// Increasing tableaux of `λ(P)` whose maximum is exactly `max`.
fn increasing_of(p: &Path, max: usize) -> Vec<crate::tableaux::ShiftedTableau> {
    enumerate_increasing(&Shape::of_path(p).expect("the path starts with d"), max as u32, true)
}

fn count_of(p: &Path, max: usize) -> BigUint {
    count_increasing(&Shape::of_path(p).expect("the path starts with d"), max as u32, true)
}

/// Splitting the tableaux of `P_1 P_2` into those of `P_1` and `d P_2`.
pub fn split_suite(max_n: usize, tally: &mut Tally) {
    for p in down_paths_up_to(max_n) {
        for cut in 2..p.len() {
            let (p1, p2) = (p.slice(0..cut), p.slice(cut..p.len()));
            if !p1.is_dyck_suffix() || !p2.is_dyck_prefix() {
                continue;
            }
            let (m1, n2) = (p1.downs(), p2.len());
            let max = 2 * m1 + n2 - 1;
            let dp2 = p2.prepend(Step::Down);
            let domain = increasing_of(&p, max);
            for t in &domain {
                let outcome = split_product(t, n2, m1)
                    .map_err(|e| format!("split of {} at {}: {}", t, cut, e))
                    .and_then(|(t1, t2)| {
                        ensure(t1.shape() == &Shape::of_path(&p1).unwrap() && t1.max_entry() as usize == 2 * m1 - 1, || {
                            format!("T_1 = {} is outside its codomain", t1)
                        })?;
                        ensure(t2.shape() == &Shape::of_path(&dp2).unwrap() && t2.max_entry() as usize == n2 + 1, || {
                            format!("T_2 = {} is outside its codomain", t2)
                        })?;
                        let merged = merge_product(&t1, &t2).map_err(|e| e.to_string())?;
                        ensure(&merged == t, || format!("merge(split({})) = {}", t, merged))
                    });
                tally.check(outcome);
                if tally.failed() {
                    return;
                }
            }
            let product = count_of(&p1, 2 * m1 - 1) * count_of(&dp2, n2 + 1);
            tally.check(ensure(BigUint::from(domain.len()) == product, || {
                format!("{} = {}·{}: {} tableaux but {} pairs", p, p1, p2, domain.len(), product)
            }));
            if tally.failed() {
                return;
            }
        }
    }
}

/// Deleting the forced first row of the tableaux of `dP`.
pub fn strip_suite(max_n: usize, tally: &mut Tally) {
    for p in dyck_prefixes_up_to(max_n.saturating_sub(1)) {
        let q = p.strip_leading_ups();
        if q.len() == p.len() || q.first() != Some(Step::Down) || p.classify().return_points.is_empty() {
            continue;
        }
        let dp = p.prepend(Step::Down);
        let domain = increasing_of(&dp, p.len() + 1);
        for t in &domain {
            let outcome = strip_first_row(t).map_err(|e| format!("strip of {}: {}", t, e)).and_then(|s| {
                ensure(s.shape() == &Shape::of_path(&q).unwrap() && s.max_entry() as usize == p.len() - 1, || {
                    format!("stripped tableau {} is outside its codomain", s)
                })?;
                let back = restore_first_row(&s).map_err(|e| e.to_string())?;
                ensure(&back == t, || format!("restore(strip({})) = {}", t, back))
            });
            tally.check(outcome);
            if tally.failed() {
                return;
            }
        }
        let image = count_of(&q, p.len() - 1);
        tally.check(ensure(BigUint::from(domain.len()) == image, || {
            format!("dP = {}: {} tableaux but {} for Q", dp, domain.len(), image)
        }));
        if tally.failed() {
            return;
        }
    }
}

/// The prime map and its realization by type-V multichains.
pub fn prime_suite(max_n: usize, tally: &mut Tally) {
    for a in dyck_paths_up_to(max_n) {
        let m = a.len() / 2;
        let pd = a.strip_leading_ups().append(Step::Down);
        let domain = increasing_of(&pd, 2 * m + 1);
        for t in &domain {
            let outcome = prime_map(t).map_err(|e| format!("prime map of {}: {}", t, e)).and_then(|img| {
                ensure(img.dyck == a, || format!("prime map of {} recovers {} instead of {}", t, img.dyck, a))?;
                let back = prime_map_inverse(&img.v, &a).map_err(|e| e.to_string())?;
                ensure(&back == t, || format!("inverse prime map of {} gives {}", img.v, back))?;
                let chain = v_tableau_to_type_v_chain(&img.v, &a).map_err(|e| e.to_string())?;
                let h = hv_or_zero(&a) as usize;
                ensure(crate::lattice::is_type_v(&chain.paths()[..=h]), || format!("{} is not of type V", chain))?;
                let v = type_v_chain_to_v_tableau(&chain, &a).map_err(|e| e.to_string())?;
                ensure(v == img.v, || format!("V = {} realizes {} which maps back to {}", img.v, chain, v))
            });
            tally.check(outcome);
            if tally.failed() {
                return;
            }
        }
        let rhs = prop2_rhs(&a).expect("a Dyck path");
        tally.check(ensure(BigUint::from(domain.len()) == rhs, || {
            format!("a = {}: {} tableaux but the prime sum is {}", a, domain.len(), rhs)
        }));
        if tally.failed() {
            return;
        }
    }
}

/// The prefix map to multichains `(W_r)`.
pub fn prefix_suite(max_n: usize, tally: &mut Tally) {
    for p in dyck_prefixes_up_to(max_n.saturating_sub(2)) {
        let dup = p.prepend(Step::Up).prepend(Step::Down);
        let domain = increasing_of(&dup, p.len() + 2);
        let bands = PrefixBands::new(&p).expect("a Dyck prefix");
        for t in &domain {
            let outcome = prefix_map(t).map_err(|e| format!("prefix map of {}: {}", t, e)).and_then(|w| {
                ensure(w.bottom() == &p, || format!("prefix map of {} starts at {}", t, w.bottom()))?;
                check_prefix_chain(&bands, w.paths()).map_err(|e| format!("prefix map of {}: {}", t, e))?;
                let back = prefix_map_inverse(&w).map_err(|e| e.to_string())?;
                ensure(&back == t, || format!("inverse prefix map of {} gives {}", w, back))
            });
            tally.check(outcome);
            if tally.failed() {
                return;
            }
        }
        let rhs = prop3_rhs_with_limit(&p, None).expect("a Dyck prefix");
        tally.check(ensure(BigUint::from(domain.len()) == rhs, || {
            format!("P = {}: {} tableaux but the prefix sum is {}", p, domain.len(), rhs)
        }));
        if tally.failed() {
            return;
        }
    }
}

/// Type-V counts agree with the enumeration from the definition, and
/// `V(a, b) != 0` exactly when `a <= b` share their low valleys.
pub fn type_v(max_n: usize) -> Tally {
    let mut tally = Tally::new();
    let by_length: BTreeMap<usize, Vec<Path>> =
        dyck_paths_up_to(max_n).fold(BTreeMap::new(), |mut acc, a| {
            acc.entry(a.len()).or_insert_with(Vec::new).push(a);
            acc
        });
    for dycks in by_length.values() {
        for a in dycks {
            let counts = v_counts_from(a).expect("a Dyck path");
            let low = |x: &Path| valleys_up_to(x, x.lv().unwrap_or(0));
            for b in dycks {
                let v = counts.get(b).cloned().unwrap_or_default();
                let shares = crate::lattice::leq(a, b) && low(a) == low(b);
                tally.check(ensure((v != BigUint::default()) == shares, || {
                    format!("V({}, {}) = {} but the low valleys {} match", a, b, v, if shares { "do" } else { "do not" })
                }));
                if tally.failed() {
                    return tally;
                }
            }
            if a.len() <= 8 {
                let mut brute: BTreeMap<Path, BigUint> = BTreeMap::new();
                for (b, _) in enumerate_type_v_brute(a).expect("a Dyck path") {
                    *brute.entry(b).or_default() += 1u32;
                }
                tally.check(ensure(brute == counts, || format!("type-V counts from {} differ from enumeration", a)));
                if tally.failed() {
                    return tally;
                }
            }
        }
    }
    tally
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_at_small_sizes() {
        let options = VerifyOptions { max_n: 5, max_k: Some(3) };
        for outcome in run_suites(&Suite::ALL, &options) {
            assert!(outcome.passed(), "{}: {:?}", outcome.suite, outcome.counterexample);
            assert!(outcome.instances > 0, "{}", outcome.suite);
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
