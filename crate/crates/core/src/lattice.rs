//! The pointwise order on paths of a fixed length: comparison, join/meet,
//! covers, filling, degree, interval counts and multichains.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::paths::{parse_path, HeightProfile, Path, Step};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Comparison {
    Equal,
    Less,
    Greater,
    Incomparable,
}

fn check_lengths(p: &Path, q: &Path) -> Result<()> {
    if p.len() != q.len() {
        return Err(Error::LengthMismatch { left: p.len(), right: q.len() });
    }
    Ok(())
}

pub fn compare(p: &Path, q: &Path) -> Result<Comparison> {
    check_lengths(p, q)?;
    let (hp, hq) = (p.heights(), q.heights());
    let mut below = false;
    let mut above = false;
    for (a, b) in hp.as_slice().iter().zip(hq.as_slice()) {
        match a.cmp(b) {
            Ordering::Less => below = true,
            Ordering::Greater => above = true,
            Ordering::Equal => {}
        }
    }
    Ok(match (below, above) {
        (false, false) => Comparison::Equal,
        (true, false) => Comparison::Less,
        (false, true) => Comparison::Greater,
        (true, true) => Comparison::Incomparable,
    })
}

/// `P <= Q` in the lattice; false for paths of different lengths.
pub fn leq(p: &Path, q: &Path) -> bool {
    matches!(compare(p, q), Ok(Comparison::Equal | Comparison::Less))
}

/// Heightwise maximum and minimum.
pub fn join_meet(p: &Path, q: &Path) -> Result<(Path, Path)> {
    check_lengths(p, q)?;
    let (hp, hq) = (p.heights(), q.heights());
    let pair = |f: fn(i32, i32) -> i32| {
        let h: Vec<i32> = hp.as_slice().iter().zip(hq.as_slice()).map(|(a, b)| f(*a, *b)).collect();
        Path::from_heights(&HeightProfile::new(h).expect("max/min of two paths is a path"))
    };
    Ok((pair(i32::max), pair(i32::min)))
}

/// `l(P, Q) = (1/2) * sum_i (h_i(Q) - h_i(P))`.
pub fn chain_length(p: &Path, q: &Path) -> Result<u64> {
    match compare(p, q)? {
        Comparison::Equal | Comparison::Less => {}
        _ => return Err(Error::Incomparable),
    }
    let (hp, hq) = (p.heights(), q.heights());
    let total: i64 = hp.as_slice().iter().zip(hq.as_slice()).map(|(a, b)| (b - a) as i64).sum();
    Ok((total / 2) as u64)
}

/// Raises the points at the given (1-based) valley positions by 2.
pub fn flip_valleys(p: &Path, positions: &[usize]) -> Path {
    let mut steps = p.steps().to_vec();
    for &x in positions {
        steps[x - 1] = Step::Up;
        if x < steps.len() {
            steps[x] = Step::Down;
        }
    }
    Path::new(steps)
}

/// One cover per valley, in valley order.
pub fn covers(p: &Path) -> Vec<Path> {
    p.valley_positions().into_iter().map(|x| flip_valleys(p, &[x])).collect()
}

/// The join of all covers: every valley turned into a peak.
pub fn filling(p: &Path) -> Path {
    flip_valleys(p, &p.valley_positions())
}

/// Number of fillings needed to reach `u^n`, by iteration.
pub fn degree(p: &Path) -> u64 {
    let mut q = p.clone();
    let mut count = 0;
    while !q.is_all_up() {
        q = filling(&q);
        count += 1;
    }
    count
}

/// `|P| - 1 - lv(P)`, or 0 for `u^n`.
pub fn degree_formula(p: &Path) -> u64 {
    match p.lv() {
        None => 0,
        Some(lv) => (p.len() as i64 - 1 - lv as i64) as u64,
    }
}

/// `|[P, Q]|` by a dynamic programme over the heights allowed at each point.
pub fn count_interval(p: &Path, q: &Path) -> Result<BigUint> {
    match compare(p, q)? {
        Comparison::Equal | Comparison::Less => {}
        _ => return Err(Error::Incomparable),
    }
    let (lo, hi) = (p.heights(), q.heights());
    // ways[h - lo_i] = number of admissible prefixes ending at height h
    let mut ways = vec![BigUint::one()];
    for i in 1..=p.len() {
        let (l0, l1, h1) = (lo.at(i - 1), lo.at(i), hi.at(i));
        let mut next = vec![BigUint::zero(); ((h1 - l1) / 2 + 1) as usize];
        for (idx, w) in ways.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            let h = l0 + 2 * idx as i32;
            for nh in [h - 1, h + 1] {
                if nh >= l1 && nh <= h1 {
                    next[((nh - l1) / 2) as usize] += w;
                }
            }
        }
        ways = next;
    }
    Ok(ways.into_iter().sum())
}

/// All paths in `[P, Q]`, in lexicographic order.
pub fn interval_paths(p: &Path, q: &Path) -> Result<Vec<Path>> {
    match compare(p, q)? {
        Comparison::Equal | Comparison::Less => {}
        _ => return Err(Error::Incomparable),
    }
    let (lo, hi) = (p.heights(), q.heights());
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(p.len());
    fn rec(lo: &HeightProfile, hi: &HeightProfile, h: i32, steps: &mut Vec<Step>, out: &mut Vec<Path>) {
        let i = steps.len();
        if i == lo.len() {
            out.push(Path::new(steps.clone()));
            return;
        }
        for step in [Step::Down, Step::Up] {
            let nh = h + step.delta();
            if nh >= lo.at(i + 1) && nh <= hi.at(i + 1) {
                steps.push(step);
                rec(lo, hi, nh, steps, out);
                steps.pop();
            }
        }
    }
    rec(&lo, &hi, 0, &mut steps, &mut out);
    Ok(out)
}

/// A weakly increasing sequence `P_0 <= P_1 <= ... <= P_k` of paths of a
/// common length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multichain {
    paths: Vec<Path>,
}

impl Multichain {
    pub fn new(paths: Vec<Path>) -> Result<Multichain> {
        if paths.is_empty() {
            return Err(Error::InvalidMultichain("a multichain has at least one member".into()));
        }
        for i in 1..paths.len() {
            check_lengths(&paths[0], &paths[i])?;
            if !leq(&paths[i - 1], &paths[i]) {
                return Err(Error::InvalidMultichain(format!(
                    "member {} ({}) is not below member {} ({})",
                    i - 1,
                    paths[i - 1],
                    i,
                    paths[i]
                )));
            }
        }
        Ok(Multichain { paths })
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn into_paths(self) -> Vec<Path> {
        self.paths
    }

    /// Common length `n` of the members.
    pub fn base_length(&self) -> usize {
        self.paths[0].len()
    }

    /// The number of steps `k` (one less than the number of members).
    pub fn length(&self) -> usize {
        self.paths.len() - 1
    }

    pub fn bottom(&self) -> &Path {
        &self.paths[0]
    }

    pub fn top(&self) -> &Path {
        self.paths.last().expect("nonempty")
    }

    /// Text form: one word per line, bottom first; the empty path is written `ε`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for p in &self.paths {
            if p.is_empty() {
                s.push('ε');
            } else {
                s.push_str(&p.to_string());
            }
            s.push('\n');
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<Multichain> {
        let mut paths = Vec::new();
        for (line_no, line) in text.lines().enumerate() {
            let word = line.trim();
            if word.is_empty() || word.starts_with('#') {
                continue;
            }
            if word == "ε" {
                paths.push(Path::empty());
                continue;
            }
            paths.push(parse_path(word).map_err(|e| Error::Parse(format!("line {}: {}", line_no + 1, e)))?);
        }
        Multichain::new(paths)
    }
}

impl fmt::Display for Multichain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.paths.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", words.join(" <= "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MultichainClass {
    pub is_chain: bool,
    pub small_intervals: bool,
    pub is_saturated: bool,
}

/// Classifies a multichain. With `top_required`, the top member must be `u^n`.
pub fn classify_multichain(c: &Multichain, top_required: bool) -> Result<MultichainClass> {
    let n = c.base_length();
    if top_required && !c.top().is_all_up() {
        return Err(Error::InvalidMultichain(format!("top member {} is not u^{}", c.top(), n)));
    }
    let paths = c.paths();
    let is_chain = paths.windows(2).all(|w| w[0] != w[1]);
    let small_intervals = paths.windows(2).all(|w| is_small_step(&w[0], &w[1]));
    let length = chain_length(c.bottom(), c.top())?;
    let is_saturated = is_chain && small_intervals && c.length() as u64 == length;
    Ok(MultichainClass { is_chain, small_intervals, is_saturated })
}

/// Whether `Q` arises from `P <= Q` by raising a (possibly empty) set of
/// valleys of `P`.
fn is_small_step(p: &Path, q: &Path) -> bool {
    let (hp, hq) = (p.heights(), q.heights());
    let valleys = p.valley_positions();
    (1..=p.len()).all(|x| match hq.at(x) - hp.at(x) {
        0 => true,
        2 => valleys.contains(&x),
        _ => false,
    })
}

/// The valleys of `p` at height at most `level`, as `(position, height)` pairs.
pub fn valleys_up_to(p: &Path, level: i32) -> Vec<(usize, i32)> {
    p.valley_peak_profile()
        .valleys
        .iter()
        .filter(|v| v.height <= level)
        .map(|v| (v.position, v.height))
        .collect()
}

/// Highest valley height with the convention `hv(ε) = 0`.
pub fn hv_or_zero(p: &Path) -> i32 {
    p.hv().unwrap_or(0)
}

/// Whether `σ_0 <= ... <= σ_h` is a type-V multichain: Dyck paths with
/// `h = hv(σ_0)` such that `σ_j` and `σ_{j-1}` have the same valleys at every
/// height `<= h - j`.
pub fn is_type_v(chain: &[Path]) -> bool {
    let Some(first) = chain.first() else {
        return false;
    };
    let h = hv_or_zero(first);
    if chain.len() != h as usize + 1 || !chain.iter().all(Path::is_dyck) {
        return false;
    }
    (1..chain.len()).all(|j| {
        let level = h - j as i32;
        leq(&chain[j - 1], &chain[j]) && valleys_up_to(&chain[j - 1], level) == valleys_up_to(&chain[j], level)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Path {
        s.parse().unwrap()
    }

    #[test]
    fn compare_examples() {
        assert_eq!(compare(&p("ud"), &p("du")).unwrap(), Comparison::Greater);
        assert_eq!(compare(&p("udu"), &p("uud")).unwrap(), Comparison::Less);
        assert_eq!(compare(&p("dud"), &p("dud")).unwrap(), Comparison::Equal);
        assert_eq!(compare(&p("uddu"), &p("duud")).unwrap(), Comparison::Incomparable);
        assert!(compare(&p("u"), &p("ud")).is_err());
    }

    #[test]
    fn join_meet_examples() {
        assert_eq!(join_meet(&p("ud"), &p("du")).unwrap(), (p("ud"), p("du")));
        assert_eq!(join_meet(&p("udud"), &p("duud")).unwrap(), (p("udud"), p("duud")));
        assert_eq!(join_meet(&p("uddu"), &p("duud")).unwrap(), (p("udud"), p("dudu")));
    }

    #[test]
    fn chain_length_examples() {
        assert_eq!(chain_length(&p("dud"), &p("dud")).unwrap(), 0);
        assert_eq!(chain_length(&p("dd"), &p("uu")).unwrap(), 3);
        assert_eq!(chain_length(&p("duduud"), &Path::all_up(6)).unwrap(), 11);
        assert_eq!(chain_length(&p("uu"), &p("dd")), Err(Error::Incomparable));
    }

    #[test]
    fn covers_filling_degree_examples() {
        assert!(covers(&p("uuu")).is_empty());
        assert_eq!(covers(&p("dd")), vec![p("du")]);
        assert_eq!(covers(&p("duduud")).len(), 3);
        assert_eq!(filling(&p("uuu")), p("uuu"));
        assert_eq!(filling(&p("dd")), p("du"));
        assert_eq!(filling(&p("du")), p("ud"));
        assert_eq!(filling(&p("ud")), p("uu"));
        assert_eq!(filling(&p("dduu")), p("dudu"));
        assert_eq!(degree(&Path::all_up(5)), 0);
        assert_eq!(degree(&p("dd")), 3);
        assert_eq!(degree(&p("duduud")), 6);
        assert_eq!(degree_formula(&p("duduud")), 6);
    }

    #[test]
    fn interval_examples() {
        assert_eq!(count_interval(&p("udd"), &p("udd")).unwrap(), BigUint::from(1u8));
        assert_eq!(count_interval(&p("udud"), &p("uudd")).unwrap(), BigUint::from(2u8));
        assert_eq!(count_interval(&p("du"), &p("uu")).unwrap(), BigUint::from(3u8));
        assert_eq!(count_interval(&p("dd"), &p("uu")).unwrap(), BigUint::from(4u8));
        assert_eq!(count_interval(&p(""), &p("")).unwrap(), BigUint::from(1u8));
        assert_eq!(interval_paths(&p("dd"), &p("uu")).unwrap(), vec![p("dd"), p("du"), p("ud"), p("uu")]);
    }

    #[test]
    fn multichain_classification_examples() {
        let c = Multichain::new(vec![p("dd"), p("du"), p("ud"), p("uu")]).unwrap();
        let k = classify_multichain(&c, true).unwrap();
        assert!(k.is_chain && k.small_intervals && k.is_saturated);
        let c = Multichain::new(vec![p("dd"), p("dd")]).unwrap();
        let k = classify_multichain(&c, false).unwrap();
        assert!(!k.is_chain && k.small_intervals && !k.is_saturated);
        let c = Multichain::new(vec![p("dd"), p("uu")]).unwrap();
        let k = classify_multichain(&c, true).unwrap();
        assert!(k.is_chain && !k.small_intervals && !k.is_saturated);
        assert!(Multichain::new(vec![p("uu"), p("dd")]).is_err());
        assert!(classify_multichain(&Multichain::new(vec![p("dd")]).unwrap(), true).is_err());
    }

    #[test]
    fn multichain_text_round_trip() {
        let c = Multichain::new(vec![p("dd"), p("du"), p("uu")]).unwrap();
        assert_eq!(c.to_text(), "dd\ndu\nuu\n");
        assert_eq!(Multichain::parse_text(&c.to_text()).unwrap(), c);
        let e = Multichain::new(vec![p(""), p("")]).unwrap();
        assert_eq!(Multichain::parse_text(&e.to_text()).unwrap(), e);
        assert!(Multichain::parse_text("dd\nxu\n").is_err());
    }

    fn arb_pair(max: usize) -> impl Strategy<Value = (Path, Path)> {
        (0..=max).prop_flat_map(|n| {
            (0..1u64 << n, 0..1u64 << n).prop_map(move |(a, b)| (Path::from_bits(a, n), Path::from_bits(b, n)))
        })
    }

    proptest! {
        #[test]
        fn lattice_laws((a, b) in arb_pair(10)) {
            let (j, m) = join_meet(&a, &b).unwrap();
            prop_assert!(leq(&a, &j) && leq(&b, &j) && leq(&m, &a) && leq(&m, &b));
            prop_assert_eq!(join_meet(&b, &a).unwrap(), (j.clone(), m.clone()));
            prop_assert_eq!(join_meet(&a, &a).unwrap(), (a.clone(), a.clone()));
            prop_assert_eq!(join_meet(&a, &m).unwrap().0, a.clone());
            prop_assert_eq!(join_meet(&a, &j).unwrap().1, a.clone());
        }

        #[test]
        fn filling_is_join_of_covers((a, _b) in arb_pair(12)) {
            let fill = filling(&a);
            prop_assert!(leq(&a, &fill));
            let join = covers(&a).iter().fold(a.clone(), |acc, c| join_meet(&acc, c).unwrap().0);
            prop_assert_eq!(join, fill);
            prop_assert_eq!(degree(&a), degree_formula(&a));
        }

        #[test]
        fn interval_count_matches_listing((a, b) in arb_pair(10)) {
            let (j, m) = join_meet(&a, &b).unwrap();
            let listed = interval_paths(&m, &j).unwrap();
            prop_assert_eq!(count_interval(&m, &j).unwrap(), BigUint::from(listed.len()));
            prop_assert!(listed.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
