//! Fully worked instances: the staircase multichain of `duduud`, a prime-map
//! pair of semilength 8 and a prefix-map pair on a word of length 38.

use serde::Deserialize;
use shifted_chains::bijections::{
    check_prefix_chain, prefix_map, prefix_map_inverse, prime_map, prime_map_inverse, theta, theta_inv,
    type_v_chain_to_v_tableau, v_tableau_to_type_v_chain, PrefixBands,
};
use shifted_chains::lattice::{hv_or_zero, is_type_v};
use shifted_chains::tableaux::shape_of;
use shifted_chains::{Multichain, Path, ShiftedTableau};

fn fixture(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/fixtures/{}", env!("CARGO_MANIFEST_DIR"), name)).unwrap()
}

fn p(s: &str) -> Path {
    s.parse().unwrap()
}

#[test]
fn staircase_multichain_of_duduud() {
    let chain = Multichain::parse_text(&fixture("duduud_k11.chain")).unwrap();
    assert_eq!(chain.length(), 11);
    assert_eq!(shape_of(&p("duduud")).unwrap().parts(), &[6, 4, 1]);
    let t = theta(&chain).unwrap();
    assert_eq!(t.rows(), &[vec![1, 2, 6, 7, 8, 9], vec![6, 6, 9, 11], vec![8]]);
    assert_eq!(theta_inv(&t, 11).unwrap(), chain);
}

#[derive(Deserialize)]
struct PrimeFixture {
    tableau: Vec<Vec<u32>>,
    v: Vec<Vec<u32>>,
    dyck: String,
}

#[test]
fn prime_map_of_semilength_eight() {
    let f: PrimeFixture = serde_json::from_str(&fixture("prime_map_m8.json")).unwrap();
    let t = ShiftedTableau::new(f.tableau).unwrap();
    assert!(t.is_increasing());
    assert_eq!(t.max_entry(), 17);
    let img = prime_map(&t).unwrap();
    assert_eq!(img.dyck, p(&f.dyck));
    assert_eq!(hv_or_zero(&img.dyck), 2);
    assert_eq!(img.v.rows(), f.v.as_slice());
    assert_eq!(prime_map_inverse(&img.v, &img.dyck).unwrap(), t);

    let chain = v_tableau_to_type_v_chain(&img.v, &img.dyck).unwrap();
    assert_eq!(chain.length(), 5);
    assert!(is_type_v(&chain.paths()[..3]));
    assert_eq!(type_v_chain_to_v_tableau(&chain, &img.dyck).unwrap(), img.v);
}

#[derive(Deserialize)]
struct PrefixFixture {
    tableau: Vec<Vec<u32>>,
    boundaries: Vec<String>,
}

#[test]
fn prefix_map_of_length_thirty_eight() {
    let f: PrefixFixture = serde_json::from_str(&fixture("prefix_map_n38.json")).unwrap();
    let t = ShiftedTableau::new(f.tableau).unwrap();
    assert!(t.is_increasing());
    assert_eq!(t.max_entry(), 39);
    let w = prefix_map(&t).unwrap();
    assert_eq!(w.length(), 6);
    let listed: Vec<Path> = f.boundaries.iter().map(|s| p(&s[2..])).collect();
    for r in [0, 1, 3, 4, 5, 6] {
        assert_eq!(w.paths()[r], listed[r], "W_{}", r);
    }
    // The third boundary in the fixture ends its last component with uudd; the
    // map gives udud, which keeps that component equal to a_k as required.
    assert_eq!(w.paths()[2], p("uuuudddduuduududduududuuuududddduudud"));
    assert_ne!(w.paths()[2], listed[2]);
    let bands = PrefixBands::new(w.bottom()).unwrap();
    assert!(check_prefix_chain(&bands, &listed).is_err());
    assert!(check_prefix_chain(&bands, w.paths()).is_ok());
    assert_eq!(prefix_map_inverse(&w).unwrap(), t);
}
