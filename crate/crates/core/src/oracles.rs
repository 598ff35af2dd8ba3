//! Slow reference enumerations built directly from the definitions. Nothing
//! here calls the lattice, counting or bijection code; only the plain data
//! types are shared. Every list is duplicate-free and sorted.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::formulas::{FResult, Route};
use crate::lattice::Multichain;
use crate::paths::{Path, Step};
use crate::tableaux::{Shape, ShiftedTableau, TableauClass};

/// Points `h_0 = 0, ..., h_n`.
fn heights(p: &Path) -> Vec<i32> {
    let mut h = vec![0];
    for s in p.steps() {
        let last = h[h.len() - 1];
        h.push(if *s == Step::Up { last + 1 } else { last - 1 });
    }
    h
}

fn below(p: &Path, q: &Path) -> bool {
    p.len() == q.len() && heights(p).iter().zip(heights(q)).all(|(a, b)| *a <= b)
}

/// `(position, height)` of every valley: a point ending a run of down-steps.
fn valleys(p: &Path) -> Vec<(usize, i32)> {
    let s = p.steps();
    let h = heights(p);
    (1..=s.len()).filter(|&x| s[x - 1] == Step::Down && (x == s.len() || s[x] == Step::Up)).map(|x| (x, h[x])).collect()
}

fn is_dyck(p: &Path) -> bool {
    let h = heights(p);
    h.iter().all(|&v| v >= 0) && h[h.len() - 1] == 0
}

fn all_words(n: usize) -> Vec<Path> {
    (0..1u64 << n)
        .map(|bits| Path::new((0..n).map(|i| if bits >> (n - 1 - i) & 1 == 1 { Step::Up } else { Step::Down }).collect()))
        .collect()
}

/// Paths of the given length lying weakly above `p`, in lexicographic order.
fn above(p: &Path) -> Vec<Path> {
    all_words(p.len()).into_iter().filter(|q| below(p, q)).collect()
}

/// Every path obtained from `p` by raising a nonempty set of valleys.
fn small_steps(p: &Path) -> Vec<Path> {
    let v = valleys(p);
    let mut out = Vec::new();
    for mask in 1u64..1 << v.len() {
        let mut steps = p.steps().to_vec();
        for (b, &(x, _)) in v.iter().enumerate() {
            if mask >> b & 1 == 1 {
                steps[x - 1] = Step::Up;
                if x < steps.len() {
                    steps[x] = Step::Down;
                }
            }
        }
        out.push(Path::new(steps));
    }
    out
}

/// All `R` with `P <= R <= Q`, in lexicographic order.
pub fn enumerate_interval(p: &Path, q: &Path) -> Result<Vec<Path>> {
    if p.len() != q.len() {
        return Err(Error::LengthMismatch { left: p.len(), right: q.len() });
    }
    if !below(p, q) {
        return Err(Error::Incomparable);
    }
    Ok(all_words(p.len()).into_iter().filter(|r| below(p, r) && below(r, q)).collect())
}

/// Breadth-first layers of the small-step graph from `p`: the distance of
/// every reachable path and the shortest-route counts.
fn small_step_bfs(p: &Path) -> BTreeMap<Path, (usize, BigUint)> {
    let mut seen = BTreeMap::from([(p.clone(), (0usize, BigUint::one()))]);
    let mut layer = vec![p.clone()];
    let mut depth = 0;
    while !layer.is_empty() {
        depth += 1;
        let mut next = BTreeSet::new();
        for x in &layer {
            let ways = seen[x].1.clone();
            for y in small_steps(x) {
                match seen.get_mut(&y) {
                    Some((d, c)) if *d == depth => *c += &ways,
                    Some(_) => {}
                    None => {
                        seen.insert(y.clone(), (depth, ways.clone()));
                        next.insert(y);
                    }
                }
            }
        }
        layer = next.into_iter().collect();
    }
    seen
}

/// The number of chains `P = P_0 < ... < P_d = u^n` of minimum length whose
/// steps each raise a nonempty set of valleys, together with that length.
pub fn count_min_chains(p: &Path) -> (BigUint, usize) {
    let top = Path::all_up(p.len());
    let (d, c) = small_step_bfs(p).remove(&top).expect("raising valleys reaches the top");
    (c, d)
}

/// `f(P)` by breadth-first search in the small-step graph.
pub fn f_bruteforce(p: &Path) -> FResult {
    FResult { value: count_min_chains(p).0, route: Route::Bruteforce, trace: Vec::new() }
}

/// All minimum-length small-interval chains from `P` to `u^n`, sorted.
pub fn enumerate_min_chains(p: &Path) -> Vec<Multichain> {
    let dist = small_step_bfs(p);
    let top = Path::all_up(p.len());
    let target = dist[&top].0;
    let mut out = Vec::new();
    fn walk(chain: &mut Vec<Path>, target: usize, top: &Path, dist: &BTreeMap<Path, (usize, BigUint)>, out: &mut Vec<Multichain>) {
        let depth = chain.len() - 1;
        let last = chain[depth].clone();
        if depth == target {
            if &last == top {
                out.push(Multichain::new(chain.clone()).expect("members increase"));
            }
            return;
        }
        for y in small_steps(&last) {
            if dist[&y].0 == depth + 1 {
                chain.push(y);
                walk(chain, target, top, dist, out);
                chain.pop();
            }
        }
    }
    walk(&mut vec![p.clone()], target, &top, &dist, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Visits every multichain `P = P_0 <= ... <= P_k = u^n` in lexicographic
/// order; the visitor returns `false` to stop early. Returns whether the
/// enumeration ran to completion.
pub fn for_each_multichain(p: &Path, k: usize, mut visit: impl FnMut(&Multichain) -> bool) -> bool {
    let top = Path::all_up(p.len());
    if k == 0 {
        return if p == &top { visit(&Multichain::new(vec![p.clone()]).expect("one member")) } else { true };
    }
    let mut ups: BTreeMap<Path, Vec<Path>> = BTreeMap::new();
    fn rec(
        chain: &mut Vec<Path>,
        k: usize,
        top: &Path,
        ups: &mut BTreeMap<Path, Vec<Path>>,
        visit: &mut dyn FnMut(&Multichain) -> bool,
    ) -> bool {
        if chain.len() == k {
            chain.push(top.clone());
            let go = visit(&Multichain::new(chain.clone()).expect("members increase"));
            chain.pop();
            return go;
        }
        let last = chain[chain.len() - 1].clone();
        let next = ups.entry(last.clone()).or_insert_with(|| above(&last)).clone();
        for y in next {
            chain.push(y);
            let go = rec(chain, k, top, ups, visit);
            chain.pop();
            if !go {
                return false;
            }
        }
        true
    }
    rec(&mut vec![p.clone()], k, &top, &mut ups, &mut visit)
}

/// All multichains `P = P_0 <= ... <= P_k = u^n`, sorted.
pub fn enumerate_multichains(p: &Path, k: usize) -> Vec<Multichain> {
    let mut out = Vec::new();
    for_each_multichain(p, k, |c| {
        out.push(c.clone());
        true
    });
    out
}

/// The number of multichains `P = P_0 <= ... <= P_k = u^n`, by summing over
/// the members one at a time.
pub fn count_multichains(p: &Path, k: usize) -> BigUint {
    let top = Path::all_up(p.len());
    if k == 0 {
        return if p == &top { BigUint::one() } else { BigUint::zero() };
    }
    let mut ways = BTreeMap::from([(p.clone(), BigUint::one())]);
    for _ in 1..k {
        let mut next: BTreeMap<Path, BigUint> = BTreeMap::new();
        for (x, c) in &ways {
            for y in above(x) {
                *next.entry(y).or_default() += c;
            }
        }
        ways = next;
    }
    ways.values().sum()
}

/// Every type-V multichain from `a`: `h = hv(a)` further Dyck paths, each
/// above the previous one and sharing its valleys at heights `<= h - j`.
pub fn enumerate_type_v_brute(a: &Path) -> Result<Vec<(Path, Multichain)>> {
    if !is_dyck(a) {
        return Err(Error::NotDyck(a.to_string()));
    }
    let h = valleys(a).iter().map(|v| v.1).max().unwrap_or(0);
    let dyck: Vec<Path> = all_words(a.len()).into_iter().filter(is_dyck).collect();
    let mut chains = vec![vec![a.clone()]];
    for j in 1..=h {
        let level = h - j;
        let mut next = Vec::new();
        for c in &chains {
            let last = &c[c.len() - 1];
            let low: Vec<_> = valleys(last).into_iter().filter(|v| v.1 <= level).collect();
            for y in &dyck {
                let low_y: Vec<_> = valleys(y).into_iter().filter(|v| v.1 <= level).collect();
                if below(last, y) && low == low_y {
                    let mut d = c.clone();
                    d.push(y.clone());
                    next.push(d);
                }
            }
        }
        chains = next;
    }
    let mut out: Vec<(Path, Multichain)> = chains
        .into_iter()
        .map(|c| (c[c.len() - 1].clone(), Multichain::new(c).expect("members increase")))
        .collect();
    out.sort();
    Ok(out)
}

/// Shifted tableaux of `shape` by backtracking over the cells in row-major
/// order. `Weak` and `Increasing` use entries in `[1, max]` (with
/// `exact_max`, the maximum must be attained); `Standard` uses each of
/// `1..=N` once and ignores `max`.
pub fn enumerate_tableaux(shape: &Shape, class: TableauClass, max: u32, exact_max: bool) -> Vec<ShiftedTableau> {
    let cells: Vec<(usize, usize)> = shape.cells().collect();
    let size = cells.len() as u32;
    let mut out = Vec::new();
    let mut values: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    let mut used = vec![false; size as usize + 1];
    let top = match class {
        TableauClass::Standard => size,
        TableauClass::Weak | TableauClass::Increasing => max,
        TableauClass::Invalid => return out,
    };
    #[allow(clippy::too_many_arguments)]
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        class: TableauClass,
        top: u32,
        exact: bool,
        values: &mut BTreeMap<(usize, usize), u32>,
        used: &mut Vec<bool>,
        out: &mut Vec<ShiftedTableau>,
        shape: &Shape,
    ) {
        if idx == cells.len() {
            if exact && class != TableauClass::Standard && !values.values().any(|&v| v == top) {
                return;
            }
            let t = ShiftedTableau::from_fn(shape, |i, j| values[&(i, j)]).expect("a shifted tableau");
            out.push(t);
            return;
        }
        let (i, j) = cells[idx];
        let strict = class != TableauClass::Weak;
        for v in 1..=top {
            let ok_left = values.get(&(i, j.wrapping_sub(1))).is_none_or(|&l| if strict { l < v } else { l <= v });
            let ok_up = values.get(&(i.wrapping_sub(1), j)).is_none_or(|&a| if strict { a < v } else { a <= v });
            if !ok_left || !ok_up || (class == TableauClass::Standard && used[v as usize]) {
                continue;
            }
            values.insert((i, j), v);
            if class == TableauClass::Standard {
                used[v as usize] = true;
            }
            rec(idx + 1, cells, class, top, exact, values, used, out, shape);
            if class == TableauClass::Standard {
                used[v as usize] = false;
            }
            values.remove(&(i, j));
        }
    }
    rec(0, &cells, class, top, exact_max, &mut values, &mut used, &mut out, shape);
    out.sort();
    out
}

/// The number of saturated chains from `P` to `u^n`: routes through single
/// valley raises, counted by memoization on the current path.
pub fn count_saturated_chains(p: &Path) -> BigUint {
    fn routes(p: &Path, memo: &mut BTreeMap<Path, BigUint>) -> BigUint {
        if p.steps().iter().all(|s| *s == Step::Up) {
            return BigUint::one();
        }
        if let Some(c) = memo.get(p) {
            return c.clone();
        }
        let mut total = BigUint::zero();
        for (x, _) in valleys(p) {
            let mut steps = p.steps().to_vec();
            steps[x - 1] = Step::Up;
            if x < steps.len() {
                steps[x] = Step::Down;
            }
            total += routes(&Path::new(steps), memo);
        }
        memo.insert(p.clone(), total.clone());
        total
    }
    routes(p, &mut BTreeMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Path {
        s.parse().unwrap()
    }

    #[test]
    fn intervals() {
        assert_eq!(enumerate_interval(&p("udud"), &p("uudd")).unwrap(), vec![p("udud"), p("uudd")]);
        assert_eq!(enumerate_interval(&p("dud"), &p("dud")).unwrap(), vec![p("dud")]);
        assert_eq!(enumerate_interval(&p("dd"), &p("uu")).unwrap(), vec![p("dd"), p("du"), p("ud"), p("uu")]);
        assert!(enumerate_interval(&p("ud"), &p("du")).is_err());
    }

    #[test]
    fn min_chains() {
        let c = enumerate_min_chains(&p("dd"));
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].to_text(), "dd\ndu\nud\nuu\n");
        let c = enumerate_min_chains(&p("uuu"));
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].length(), 0);
        assert_eq!(enumerate_min_chains(&p("dudd")).len(), 2);
        assert_eq!(count_min_chains(&p("dudd")), (BigUint::from(2u32), 5));
    }

    #[test]
    fn multichains() {
        assert_eq!(enumerate_multichains(&p("d"), 1).len(), 1);
        assert_eq!(enumerate_multichains(&p("d"), 2).len(), 2);
        assert_eq!(count_multichains(&p("dd"), 3), BigUint::from(enumerate_multichains(&p("dd"), 3).len()));
        assert_eq!(count_multichains(&p("uu"), 0), BigUint::one());
    }

    #[test]
    fn type_v() {
        let v = enumerate_type_v_brute(&p("udud")).unwrap();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].0, p("udud"));
        let v = enumerate_type_v_brute(&p("")).unwrap();
        assert_eq!(v.len(), 1);
    }

    #[test]
    fn tableaux() {
        let s = Shape::new(vec![2, 1]).unwrap();
        let t = enumerate_tableaux(&s, TableauClass::Standard, 0, false);
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].rows(), &[vec![1, 2], vec![3]]);
        let s = Shape::new(vec![1]).unwrap();
        assert_eq!(enumerate_tableaux(&s, TableauClass::Weak, 2, false).len(), 2);
        let s = Shape::new(vec![6, 4, 1]).unwrap();
        let inc = enumerate_tableaux(&s, TableauClass::Increasing, 6, true);
        assert_eq!(BigUint::from(inc.len()), f_bruteforce(&p("duduud")).value);
    }

    #[test]
    fn saturated() {
        assert_eq!(count_saturated_chains(&p("dd")), BigUint::one());
        assert_eq!(count_saturated_chains(&p("duduud")), BigUint::from(198u32));
    }
}
