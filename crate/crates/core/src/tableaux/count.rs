//! Counting and enumerating shifted tableaux with bounded entries.
//!
//! Rows are filled top to bottom, each row left to right. A cell's lower
//! bound comes from its left and upper neighbours; for strict fillings the
//! upper bound is lowered by the length of the longest strict chain to the
//! south-east. Counting memoises on the previous row, which is all that
//! constrains the rows below it.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{Shape, ShiftedTableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FillRule {
    /// Rows and columns weakly increasing.
    Weak,
    /// Rows and columns strictly increasing.
    Increasing,
}

struct Filler<'a> {
    shape: &'a Shape,
    max: u32,
    strict: u32,
    /// `depth[i-1][j-i]`: longest strict chain of cells starting south-east of `(i, j)`.
    depth: Vec<Vec<u32>>,
}

impl<'a> Filler<'a> {
    fn new(shape: &'a Shape, max: u32, rule: FillRule) -> Filler<'a> {
        let m = shape.rows();
        let mut depth: Vec<Vec<u32>> = (1..=m).map(|i| vec![0; shape.row_len(i)]).collect();
        for i in (1..=m).rev() {
            for j in (i..=shape.row_end(i)).rev() {
                let mut d = 0;
                if shape.contains(i, j + 1) {
                    d = d.max(depth[i - 1][j + 1 - i] + 1);
                }
                if shape.contains(i + 1, j) {
                    d = d.max(depth[i][j - i - 1] + 1);
                }
                depth[i - 1][j - i] = d;
            }
        }
        let strict = match rule {
            FillRule::Weak => 0,
            FillRule::Increasing => 1,
        };
        Filler { shape, max, strict, depth }
    }

    /// All admissible contents of row `i` below `prev` (row `i - 1`), in
    /// lexicographic order.
    fn rows(&self, i: usize, prev: &[u32]) -> Vec<Vec<u32>> {
        let len = self.shape.row_len(i);
        let mut out = Vec::new();
        let mut row = Vec::with_capacity(len);
        self.extend_row(i, prev, &mut row, &mut out);
        out
    }

    fn extend_row(&self, i: usize, prev: &[u32], row: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let c = row.len();
        if c == self.shape.row_len(i) {
            out.push(row.clone());
            return;
        }
        let mut lo = 1;
        if let Some(&left) = row.last() {
            lo = lo.max(left + self.strict);
        }
        if i > 1 {
            lo = lo.max(prev[c + 1] + self.strict);
        }
        let slack = self.strict * self.depth[i - 1][c];
        if self.max < slack {
            return;
        }
        let hi = self.max - slack;
        for t in lo..=hi {
            row.push(t);
            self.extend_row(i, prev, row, out);
            row.pop();
        }
    }

    /// `(all completions, completions attaining max)` of rows `i..` below `prev`.
    fn count(&self, i: usize, prev: &[u32], memo: &mut HashMap<(usize, Vec<u32>), (BigUint, BigUint)>) -> (BigUint, BigUint) {
        if i > self.shape.rows() {
            return (BigUint::one(), BigUint::zero());
        }
        if let Some(v) = memo.get(&(i, prev.to_vec())) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        let mut hit = BigUint::zero();
        for row in self.rows(i, prev) {
            let (t, h) = self.count(i + 1, &row, memo);
            if row.contains(&self.max) {
                hit += &t;
            } else {
                hit += h;
            }
            total += t;
        }
        memo.insert((i, prev.to_vec()), (total.clone(), hit.clone()));
        (total, hit)
    }

    fn each(&self, i: usize, acc: &mut Vec<Vec<u32>>, visit: &mut dyn FnMut(&[Vec<u32>])) {
        if i > self.shape.rows() {
            visit(acc);
            return;
        }
        let prev = acc.last().cloned().unwrap_or_default();
        for row in self.rows(i, &prev) {
            acc.push(row);
            self.each(i + 1, acc, visit);
            acc.pop();
        }
    }
}

/// Number of fillings of `shape` with entries in `[1, max]` (or with maximum
/// exactly `max` when `exact_max`), counted natively.
pub fn count_fillings(shape: &Shape, max: u32, rule: FillRule, exact_max: bool) -> BigUint {
    if shape.is_empty() {
        // The empty tableau has no entries; it never attains a positive maximum.
        return if exact_max { BigUint::zero() } else { BigUint::one() };
    }
    let filler = Filler::new(shape, max, rule);
    let mut memo = HashMap::new();
    let (total, hit) = filler.count(1, &[], &mut memo);
    if exact_max {
        hit
    } else {
        total
    }
}

/// Increasing tableaux of `shape` with `max(T) <= max_value`, or
/// `max(T) = max_value` when `exact_max`.
pub fn count_increasing(shape: &Shape, max_value: u32, exact_max: bool) -> BigUint {
    count_fillings(shape, max_value, FillRule::Increasing, exact_max)
}

/// Weak tableaux of `shape` with entries in `[1, max_value]`.
pub fn count_weak(shape: &Shape, max_value: u32) -> BigUint {
    count_fillings(shape, max_value, FillRule::Weak, false)
}

/// Weak tableaux of `shape` with maximum exactly `max_value`, as the
/// difference of two bounded counts.
pub fn count_weak_exact(shape: &Shape, max_value: u32) -> BigUint {
    if max_value == 0 {
        return if shape.is_empty() { BigUint::one() } else { BigUint::zero() };
    }
    count_weak(shape, max_value) - count_weak(shape, max_value - 1)
}

/// Visits every filling in row-major lexicographic order.
pub fn for_each_filling(shape: &Shape, max: u32, rule: FillRule, exact_max: bool, mut visit: impl FnMut(ShiftedTableau)) {
    if shape.is_empty() {
        if !exact_max {
            visit(ShiftedTableau::new(Vec::new()).expect("empty tableau"));
        }
        return;
    }
    let filler = Filler::new(shape, max, rule);
    let mut acc = Vec::with_capacity(shape.rows());
    filler.each(1, &mut acc, &mut |rows| {
        if !exact_max || rows.iter().flatten().any(|&t| t == max) {
            visit(ShiftedTableau::new(rows.to_vec()).expect("generated fillings are tableaux"));
        }
    });
}

pub fn enumerate_increasing(shape: &Shape, max_value: u32, exact_max: bool) -> Vec<ShiftedTableau> {
    let mut out = Vec::new();
    for_each_filling(shape, max_value, FillRule::Increasing, exact_max, |t| out.push(t));
    out
}

pub fn enumerate_weak(shape: &Shape, max_value: u32) -> Vec<ShiftedTableau> {
    let mut out = Vec::new();
    for_each_filling(shape, max_value, FillRule::Weak, false, |t| out.push(t));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::TableauClass;

    fn shape(parts: &[usize]) -> Shape {
        Shape::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn increasing_examples() {
        assert_eq!(count_increasing(&shape(&[2, 1]), 3, true), BigUint::from(1u8));
        assert_eq!(count_increasing(&shape(&[4, 2, 1]), 5, true), BigUint::from(2u8));
        assert_eq!(count_increasing(&shape(&[1]), 1, true), BigUint::from(1u8));
        let listed = enumerate_increasing(&shape(&[4, 2, 1]), 5, true);
        let rows: Vec<_> = listed.iter().map(|t| t.rows().to_vec()).collect();
        assert_eq!(rows, vec![vec![vec![1, 2, 3, 4], vec![3, 4], vec![5]], vec![vec![1, 2, 3, 5], vec![3, 4], vec![5]]]);
    }

    #[test]
    fn weak_examples() {
        assert_eq!(count_weak(&shape(&[1]), 2), BigUint::from(2u8));
        assert_eq!(count_weak(&shape(&[1]), 1), BigUint::from(1u8));
        assert_eq!(count_weak(&Shape::default(), 4), BigUint::from(1u8));
        let listed: Vec<_> = enumerate_weak(&shape(&[1]), 2).iter().map(|t| t.rows().to_vec()).collect();
        assert_eq!(listed, vec![vec![vec![1]], vec![vec![2]]]);
    }

    #[test]
    fn counts_match_enumeration_and_exact_routes_agree() {
        for parts in [vec![1], vec![2, 1], vec![3, 1], vec![4, 2, 1], vec![4, 3], vec![5, 3, 1], vec![3, 2, 1]] {
            let s = shape(&parts);
            for max in 1..=8 {
                for rule in [FillRule::Weak, FillRule::Increasing] {
                    let bounded = count_fillings(&s, max, rule, false);
                    let below = count_fillings(&s, max - 1, rule, false);
                    let exact = count_fillings(&s, max, rule, true);
                    assert_eq!(exact.clone() + below, bounded.clone(), "{:?} {} {:?}", parts, max, rule);
                    let mut n = 0u64;
                    for_each_filling(&s, max, rule, false, |t| {
                        assert_ne!(t.class(), TableauClass::Invalid);
                        if rule == FillRule::Increasing {
                            assert!(t.is_increasing());
                        }
                        n += 1;
                    });
                    assert_eq!(BigUint::from(n), bounded);
                }
                assert_eq!(count_weak_exact(&s, max), count_fillings(&s, max, FillRule::Weak, true));
            }
        }
    }

    #[test]
    fn increasing_lower_bound_and_north_west_rigidity() {
        for parts in [vec![4, 2, 1], vec![5, 3, 2], vec![6, 4, 1], vec![5, 4, 2, 1]] {
            let s = shape(&parts);
            for t in enumerate_increasing(&s, 9, false) {
                for (i, j) in s.cells() {
                    let v = t.at(i, j) as usize;
                    assert!(v >= i + j - 1);
                    if v == i + j - 1 {
                        for (a, b) in s.cells().filter(|&(a, b)| a <= i && b <= j) {
                            assert_eq!(t.at(a, b) as usize, a + b - 1);
                        }
                    }
                }
            }
        }
    }
}
