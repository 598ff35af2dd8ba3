//! Standard shifted tableaux: the product formula and a corner-removal count.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Shape;

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `N! / (λ_1! ... λ_m!) * prod_{i<j} (λ_i - λ_j) / (λ_i + λ_j)`, evaluated
/// in exact rational arithmetic.
///
/// Panics if the value is not a nonnegative integer, which cannot happen for
/// a strict partition.
pub fn count_standard_formula(shape: &Shape) -> BigUint {
    let parts = shape.parts();
    let mut value = BigRational::from_integer(factorial(shape.size()));
    for &l in parts {
        value /= BigRational::from_integer(factorial(l));
    }
    for a in 0..parts.len() {
        for b in a + 1..parts.len() {
            let (x, y) = (BigInt::from(parts[a]), BigInt::from(parts[b]));
            value *= BigRational::new(&x - &y, x + y);
        }
    }
    assert!(value.is_integer() && !value.is_negative(), "product formula gave {} for {}", value, shape);
    value.to_integer().to_biguint().expect("nonnegative")
}

/// Counts standard tableaux by removing the cell holding the largest entry,
/// which must be a corner: `g(λ) = sum over corners c of g(λ - c)`.
pub fn count_standard_by_corners(shape: &Shape) -> BigUint {
    let mut memo = HashMap::new();
    corners(shape.parts().to_vec(), &mut memo)
}

fn corners(parts: Vec<usize>, memo: &mut HashMap<Vec<usize>, BigUint>) -> BigUint {
    if parts.is_empty() {
        return BigUint::one();
    }
    if let Some(v) = memo.get(&parts) {
        return v.clone();
    }
    let mut total = BigUint::zero();
    for r in 0..parts.len() {
        let shorter = parts[r] - 1;
        let next = parts.get(r + 1).copied().unwrap_or(0);
        // Removing the last cell of row r keeps the rows strictly decreasing
        // unless it would tie with the row below.
        if shorter > next || (shorter == 0 && next == 0) {
            let mut smaller = parts.clone();
            if shorter == 0 {
                smaller.pop();
            } else {
                smaller[r] = shorter;
            }
            total += corners(smaller, memo);
        }
    }
    memo.insert(parts, total.clone());
    total
}
