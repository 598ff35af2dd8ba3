//! Binary paths over the steps `u = (1,1)` and `d = (1,-1)`, their height
//! profiles, k-encodings, valley/peak data and Dyck decompositions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One step of a path. `Down` sorts before `Up` so that the derived order on
/// paths is the lexicographic order of their words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Down,
    Up,
}

impl Step {
    pub fn delta(self) -> i32 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Step::Up => 'u',
            Step::Down => 'd',
        }
    }
}

/// A finite word over `{u, d}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    steps: Vec<Step>,
}

impl Path {
    pub fn new(steps: Vec<Step>) -> Path {
        Path { steps }
    }

    pub fn empty() -> Path {
        Path::default()
    }

    /// `u^n`, the top element of the lattice of paths of length `n`.
    pub fn all_up(n: usize) -> Path {
        Path::new(vec![Step::Up; n])
    }

    pub fn all_down(n: usize) -> Path {
        Path::new(vec![Step::Down; n])
    }

    /// `u^m d^m`, the top Dyck path of semilength `m`.
    pub fn tent(m: usize) -> Path {
        let mut steps = vec![Step::Up; m];
        steps.extend(std::iter::repeat_n(Step::Down, m));
        Path::new(steps)
    }

    /// Builds the path of length `n` whose `i`-th step is `u` iff bit `i` of
    /// `bits` is set.
    pub fn from_bits(bits: u64, n: usize) -> Path {
        assert!(n <= 64, "paths built from a bit mask have at most 64 steps");
        Path::new(
            (0..n)
                .map(|i| if (bits >> i) & 1 == 1 { Step::Up } else { Step::Down })
                .collect(),
        )
    }

    /// All `2^n` paths of length `n`, in lexicographic order of their words.
    pub fn all_of_length(n: usize) -> impl Iterator<Item = Path> {
        assert!(n < 64, "too many paths to enumerate");
        (0..1u64 << n).map(move |w| {
            // Reverse the bit order so that the iteration is lexicographic.
            Path::new(
                (0..n)
                    .map(|i| if (w >> (n - 1 - i)) & 1 == 1 { Step::Up } else { Step::Down })
                    .collect(),
            )
        })
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn ups(&self) -> usize {
        self.steps.iter().filter(|s| **s == Step::Up).count()
    }

    pub fn downs(&self) -> usize {
        self.len() - self.ups()
    }

    pub fn is_all_up(&self) -> bool {
        self.steps.iter().all(|s| *s == Step::Up)
    }

    pub fn first(&self) -> Option<Step> {
        self.steps.first().copied()
    }

    pub fn concat(&self, other: &Path) -> Path {
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        Path::new(steps)
    }

    pub fn prepend(&self, step: Step) -> Path {
        let mut steps = Vec::with_capacity(self.len() + 1);
        steps.push(step);
        steps.extend_from_slice(&self.steps);
        Path::new(steps)
    }

    pub fn append(&self, step: Step) -> Path {
        let mut steps = self.steps.clone();
        steps.push(step);
        Path::new(steps)
    }

    /// The sub-word of steps `range` (0-based, half open).
    pub fn slice(&self, range: std::ops::Range<usize>) -> Path {
        Path::new(self.steps[range].to_vec())
    }

    /// Length of the leading ascent.
    pub fn leading_ups(&self) -> usize {
        self.steps.iter().take_while(|s| **s == Step::Up).count()
    }

    /// The path with its leading ascent removed.
    pub fn strip_leading_ups(&self) -> Path {
        self.slice(self.leading_ups()..self.len())
    }

    pub fn final_height(&self) -> i32 {
        self.steps.iter().map(|s| s.delta()).sum()
    }

    /// Minimum height over all points, including the origin.
    pub fn min_height(&self) -> i32 {
        let mut h = 0;
        let mut min = 0;
        for s in &self.steps {
            h += s.delta();
            min = min.min(h);
        }
        min
    }

    pub fn heights(&self) -> HeightProfile {
        let mut h = Vec::with_capacity(self.len() + 1);
        let mut y = 0;
        h.push(0);
        for s in &self.steps {
            y += s.delta();
            h.push(y);
        }
        HeightProfile(h)
    }

    pub fn from_heights(profile: &HeightProfile) -> Path {
        Path::new(
            profile
                .0
                .windows(2)
                .map(|w| if w[1] > w[0] { Step::Up } else { Step::Down })
                .collect(),
        )
    }

    pub fn k_encoding(&self) -> KEncoding {
        let mut k = Vec::with_capacity(self.downs() + 1);
        let mut ups = 0;
        for s in &self.steps {
            match s {
                Step::Up => ups += 1,
                Step::Down => k.push(ups),
            }
        }
        k.push(ups);
        KEncoding { k }
    }

    pub fn from_k_encoding(enc: &KEncoding) -> Result<Path> {
        enc.validate()?;
        let m = enc.k.len() - 1;
        let mut steps = Vec::new();
        let mut ups = 0;
        for (i, &ki) in enc.k.iter().enumerate() {
            steps.extend(std::iter::repeat_n(Step::Up, ki - ups));
            ups = ki;
            if i < m {
                steps.push(Step::Down);
            }
        }
        Ok(Path::new(steps))
    }

    pub fn valley_peak_profile(&self) -> ValleyPeakProfile {
        let h = self.heights();
        let n = self.len();
        let mut valleys = Vec::new();
        let mut peaks = Vec::new();
        for i in 1..=n {
            let step = self.steps[i - 1];
            let run_ends = i == n || self.steps[i] != step;
            if run_ends {
                let p = Point { position: i, height: h.at(i) };
                match step {
                    Step::Down => valleys.push(p),
                    Step::Up => peaks.push(p),
                }
            }
        }
        let lowest_valley = valleys.iter().map(|p| p.height).min();
        let highest_valley = valleys.iter().map(|p| p.height).max();
        ValleyPeakProfile { valleys, peaks, lowest_valley, highest_valley }
    }

    /// Positions (1-based point indices) of the valleys.
    pub fn valley_positions(&self) -> Vec<usize> {
        self.valley_peak_profile().valleys.iter().map(|p| p.position).collect()
    }

    /// Lowest valley height; `None` for valley-free paths.
    pub fn lv(&self) -> Option<i32> {
        self.valley_peak_profile().lowest_valley
    }

    /// Highest valley height; `None` for valley-free paths.
    pub fn hv(&self) -> Option<i32> {
        self.valley_peak_profile().highest_valley
    }

    pub fn classify(&self) -> PathClass {
        let h = self.heights();
        let min = h.0.iter().copied().min().unwrap_or(0);
        let last = h.0.last().copied().unwrap_or(0);
        let is_dyck_prefix = min >= 0;
        let is_dyck_suffix = min == last;
        let return_points = if is_dyck_prefix {
            (1..h.0.len()).filter(|&i| h.0[i] == 0).collect()
        } else {
            Vec::new()
        };
        PathClass {
            is_dyck: is_dyck_prefix && last == 0,
            is_dyck_prefix,
            is_dyck_suffix,
            return_points,
        }
    }

    pub fn is_dyck(&self) -> bool {
        self.min_height() == 0 && self.final_height() == 0
    }

    pub fn is_dyck_prefix(&self) -> bool {
        self.min_height() >= 0
    }

    pub fn is_dyck_suffix(&self) -> bool {
        self.min_height() == self.final_height()
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

impl FromStr for Path {
    type Err = Error;

    fn from_str(text: &str) -> Result<Path> {
        parse_path(text)
    }
}

impl Serialize for Path {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Path {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Path, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_path(&text).map_err(serde::de::Error::custom)
    }
}

/// Parses a word over `{u, d}` (either case). The index in the error is the
/// character position of the first offending symbol.
pub fn parse_path(text: &str) -> Result<Path> {
    text.chars()
        .enumerate()
        .map(|(index, c)| match c {
            'u' | 'U' => Ok(Step::Up),
            'd' | 'D' => Ok(Step::Down),
            found => Err(Error::InvalidStep { index, found }),
        })
        .collect::<Result<Vec<_>>>()
        .map(Path::new)
}

pub fn format_path(p: &Path) -> String {
    p.to_string()
}

/// Heights `h_0 = 0, h_1, ..., h_n` of the points of a path.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HeightProfile(Vec<i32>);

impl HeightProfile {
    /// Validates a full profile starting at `h_0 = 0`.
    pub fn new(heights: Vec<i32>) -> Result<HeightProfile> {
        if heights.first() != Some(&0) {
            return Err(Error::InvalidHeights { index: 0 });
        }
        for i in 1..heights.len() {
            if (heights[i] - heights[i - 1]).abs() != 1 {
                return Err(Error::InvalidHeights { index: i });
            }
        }
        Ok(HeightProfile(heights))
    }

    /// Validates the profile `h_1, ..., h_n` with the origin left implicit.
    pub fn from_points(points: &[i32]) -> Result<HeightProfile> {
        let mut h = Vec::with_capacity(points.len() + 1);
        h.push(0);
        h.extend_from_slice(points);
        HeightProfile::new(h)
    }

    /// Height of point `i` (`0 <= i <= n`).
    pub fn at(&self, i: usize) -> i32 {
        self.0[i]
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The heights `h_1, ..., h_n` (origin excluded).
    pub fn points(&self) -> &[i32] {
        &self.0[1..]
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.0
    }
}

/// `k_i` = number of up-steps before the `i`-th down-step, for
/// `i = 1..=m`, followed by `k_{m+1}` = total number of up-steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KEncoding {
    pub k: Vec<usize>,
}

impl KEncoding {
    pub fn new(k: Vec<usize>) -> Result<KEncoding> {
        let enc = KEncoding { k };
        enc.validate()?;
        Ok(enc)
    }

    fn validate(&self) -> Result<()> {
        if self.k.is_empty() {
            return Err(Error::InvalidEncoding("the encoding needs the final entry k_(m+1)".into()));
        }
        if let Some(i) = (1..self.k.len()).find(|&i| self.k[i] < self.k[i - 1]) {
            return Err(Error::InvalidEncoding(format!(
                "k_{} = {} is smaller than k_{} = {}",
                i + 1,
                self.k[i],
                i,
                self.k[i - 1]
            )));
        }
        Ok(())
    }

    /// Number of down-steps `m`.
    pub fn downs(&self) -> usize {
        self.k.len() - 1
    }

    /// `k_i` for `1 <= i <= m + 1`.
    pub fn get(&self, i: usize) -> usize {
        self.k[i - 1]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Point {
    pub position: usize,
    pub height: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValleyPeakProfile {
    pub valleys: Vec<Point>,
    pub peaks: Vec<Point>,
    pub lowest_valley: Option<i32>,
    pub highest_valley: Option<i32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathClass {
    pub is_dyck: bool,
    pub is_dyck_prefix: bool,
    pub is_dyck_suffix: bool,
    /// Non-initial points of height zero; empty unless the path is a Dyck prefix.
    pub return_points: Vec<usize>,
}

/// `a = u a_1 d u a_2 d ... u a_k d` with every `a_i` Dyck.
pub fn decompose_prime(a: &Path) -> Result<Vec<Path>> {
    if !a.is_dyck() {
        return Err(Error::NotDyck(a.to_string()));
    }
    let h = a.heights();
    let mut parts = Vec::new();
    let mut start = 0;
    for i in 1..=a.len() {
        if h.at(i) == 0 {
            parts.push(a.slice(start + 1..i - 1));
            start = i;
        }
    }
    Ok(parts)
}

pub fn compose_prime(parts: &[Path]) -> Path {
    let mut steps = Vec::new();
    for p in parts {
        steps.push(Step::Up);
        steps.extend_from_slice(p.steps());
        steps.push(Step::Down);
    }
    Path::new(steps)
}

/// `P = a_0 u a_1 u ... u a_k` with every `a_i` Dyck and `k` the final height.
pub fn decompose_prefix(p: &Path) -> Result<Vec<Path>> {
    if !p.is_dyck_prefix() {
        return Err(Error::NotDyckPrefix(p.to_string()));
    }
    let h = p.heights();
    let k = p.final_height();
    // The separator climbing from level l to l + 1 is the step leaving the
    // last visit of level l.
    let mut parts = Vec::with_capacity(k as usize + 1);
    let mut start = 0;
    for level in 0..k {
        let last = (0..=p.len()).rev().find(|&i| h.at(i) == level).expect("level is visited");
        parts.push(p.slice(start..last));
        start = last + 1;
    }
    parts.push(p.slice(start..p.len()));
    Ok(parts)
}

pub fn compose_prefix(parts: &[Path]) -> Path {
    join_with(parts, Step::Up)
}

/// `P = a_0 d a_1 d ... d a_k` with every `a_i` Dyck and `k = -min height`.
pub fn decompose_suffix(p: &Path) -> Result<Vec<Path>> {
    if !p.is_dyck_suffix() {
        return Err(Error::NotDyckSuffix(p.to_string()));
    }
    let h = p.heights();
    let depth = -p.min_height();
    // The separator descending to level -l is the step that first reaches it.
    let mut parts = Vec::with_capacity(depth as usize + 1);
    let mut start = 0;
    for level in 1..=depth {
        let first = (0..=p.len()).find(|&i| h.at(i) == -level).expect("level is visited");
        parts.push(p.slice(start..first - 1));
        start = first;
    }
    parts.push(p.slice(start..p.len()));
    Ok(parts)
}

pub fn compose_suffix(parts: &[Path]) -> Path {
    join_with(parts, Step::Down)
}

fn join_with(parts: &[Path], sep: Step) -> Path {
    let mut steps = Vec::new();
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            steps.push(sep);
        }
        steps.extend_from_slice(p.steps());
    }
    Path::new(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Path {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(p(""), Path::empty());
        assert_eq!(p("DuDUud").to_string(), "duduud");
        assert_eq!(parse_path("dux"), Err(Error::InvalidStep { index: 2, found: 'x' }));
    }

    #[test]
    fn heights_examples() {
        assert_eq!(p("duduud").heights().points(), &[-1, 0, -1, 0, 1, 0]);
        assert_eq!(p("uuu").heights().points(), &[1, 2, 3]);
        assert!(p("").heights().points().is_empty());
        assert_eq!(HeightProfile::from_points(&[1, 3]), Err(Error::InvalidHeights { index: 2 }));
    }

    #[test]
    fn k_encoding_examples() {
        assert_eq!(p("duduud").k_encoding().k, vec![0, 1, 3, 3]);
        assert_eq!(p("ddd").k_encoding().k, vec![0, 0, 0, 0]);
        assert_eq!(p("uu").k_encoding().k, vec![2]);
        assert!(KEncoding::new(vec![1, 0]).is_err());
    }

    #[test]
    fn valley_examples() {
        let prof = p("duduud").valley_peak_profile();
        let v: Vec<_> = prof.valleys.iter().map(|q| (q.position, q.height)).collect();
        assert_eq!(v, vec![(1, -1), (3, -1), (6, 0)]);
        assert_eq!((prof.lowest_valley, prof.highest_valley), (Some(-1), Some(0)));
        let up = p("uuuu").valley_peak_profile();
        assert!(up.valleys.is_empty() && up.lowest_valley.is_none() && up.highest_valley.is_none());
        assert_eq!(p("d").lv(), Some(-1));
        assert_eq!(p("d").hv(), Some(-1));
    }

    #[test]
    fn classify_examples() {
        let c = p("uudd").classify();
        assert!(c.is_dyck && c.is_dyck_prefix && c.is_dyck_suffix);
        assert_eq!(c.return_points, vec![4]);
        let c = p("uud").classify();
        assert!(c.is_dyck_prefix && !c.is_dyck && !c.is_dyck_suffix && c.return_points.is_empty());
        let c = p("dud").classify();
        assert!(c.is_dyck_suffix && !c.is_dyck_prefix);
    }

    #[test]
    fn decomposition_examples() {
        assert_eq!(decompose_prime(&p("uudd")).unwrap(), vec![p("ud")]);
        assert_eq!(decompose_prime(&p("udud")).unwrap(), vec![p(""), p("")]);
        assert!(decompose_prime(&p("")).unwrap().is_empty());
        assert!(decompose_prime(&p("du")).is_err());
        assert_eq!(decompose_prefix(&p("uud")).unwrap(), vec![p(""), p("ud")]);
        assert_eq!(decompose_prefix(&p("uudd")).unwrap(), vec![p("uudd")]);
        assert_eq!(decompose_suffix(&p("dud")).unwrap(), vec![p(""), p("ud")]);
        assert!(decompose_prefix(&p("d")).is_err());
        assert!(decompose_suffix(&p("u")).is_err());
    }

    #[test]
    fn lexicographic_enumeration() {
        let words: Vec<String> = Path::all_of_length(2).map(|q| q.to_string()).collect();
        assert_eq!(words, vec!["dd", "du", "ud", "uu"]);
    }

    fn arb_path(max: usize) -> impl Strategy<Value = Path> {
        prop::collection::vec(prop::bool::ANY, 0..=max)
            .prop_map(|v| Path::new(v.into_iter().map(|b| if b { Step::Up } else { Step::Down }).collect()))
    }

    proptest! {
        #[test]
        fn encodings_round_trip(q in arb_path(12)) {
            prop_assert_eq!(Path::from_k_encoding(&q.k_encoding()).unwrap(), q.clone());
            prop_assert_eq!(Path::from_heights(&q.heights()), q.clone());
            prop_assert_eq!(parse_path(&format_path(&q)).unwrap(), q);
        }

        #[test]
        fn valleys_match_descent_runs(q in arb_path(12)) {
            let runs = q.steps().iter().enumerate()
                .filter(|(i, s)| **s == Step::Down && (*i == 0 || q.steps()[i - 1] == Step::Up))
                .count();
            prop_assert_eq!(q.valley_peak_profile().valleys.len(), runs);
        }

        #[test]
        fn decompositions_reassemble(q in arb_path(12)) {
            if let Ok(parts) = decompose_prefix(&q) {
                prop_assert_eq!(parts.len() as i32, q.final_height() + 1);
                prop_assert!(parts.iter().all(Path::is_dyck));
                prop_assert_eq!(compose_prefix(&parts), q.clone());
            }
            if let Ok(parts) = decompose_suffix(&q) {
                prop_assert_eq!(parts.len() as i32, 1 - q.min_height());
                prop_assert!(parts.iter().all(Path::is_dyck));
                prop_assert_eq!(compose_suffix(&parts), q.clone());
            }
            if let Ok(parts) = decompose_prime(&q) {
                prop_assert!(parts.iter().all(Path::is_dyck));
                prop_assert_eq!(compose_prime(&parts), q.clone());
            }
        }
    }
}
