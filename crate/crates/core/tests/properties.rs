use num_bigint::BigUint;
use proptest::prelude::*;
use shifted_chains::bijections::{theta, theta_inv};
use shifted_chains::formulas::{f_by_tableaux, f_recursive, multichain_counts};
use shifted_chains::lattice::{classify_multichain, interval_paths};
use shifted_chains::oracles::f_bruteforce;
use shifted_chains::tableaux::{count_weak, shape_of};
use shifted_chains::{Multichain, Path};

fn path(max_len: usize) -> impl Strategy<Value = Path> {
    (0..=max_len).prop_flat_map(|n| (Just(n), 0..(1u64 << n))).prop_map(|(n, bits)| Path::from_bits(bits, n))
}

/// A multichain from a path starting with `d` to the top, each member drawn
/// from the interval above the previous one.
fn multichain() -> impl Strategy<Value = Multichain> {
    (1usize..=6, any::<u64>(), 1usize..=6, prop::collection::vec(any::<usize>(), 6)).prop_map(|(n, bits, k, picks)| {
        let bottom = Path::from_bits(bits, n - 1).prepend(shifted_chains::Step::Down);
        let top = Path::all_up(n);
        let mut paths = vec![bottom];
        for pick in picks.iter().take(k - 1) {
            let above = interval_paths(paths.last().unwrap(), &top).unwrap();
            paths.push(above[pick % above.len()].clone());
        }
        paths.push(top);
        Multichain::new(paths).unwrap()
    })
}

proptest! {
    #[test]
    fn theta_inverts(c in multichain()) {
        let t = theta(&c).unwrap();
        prop_assert_eq!(t.shape(), &shape_of(c.bottom()).unwrap());
        prop_assert!(t.max_entry() as usize <= c.length());
        let class = classify_multichain(&c, true).unwrap();
        prop_assert_eq!(class.small_intervals, t.is_increasing());
        prop_assert_eq!(theta_inv(&t, c.length()).unwrap(), c);
    }

    #[test]
    fn f_routes_agree(p in path(9)) {
        let fast = f_by_tableaux(&p);
        prop_assert_eq!(&f_bruteforce(&p).value, &fast);
        prop_assert_eq!(f_recursive(&p).value, fast);
    }

    #[test]
    fn counts_by_first_move_sum_to_all_multichains(p in path(8), k in 1usize..6) {
        prop_assume!(!p.is_all_up());
        let total: BigUint = (1..=k).map(|mu| multichain_counts(&p, k, mu).unwrap()).sum();
        let shape = shape_of(&p.strip_leading_ups()).unwrap();
        prop_assert_eq!(total, count_weak(&shape, k as u32));
    }
}
