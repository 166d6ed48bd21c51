//! The identities on root systems outside the acceptance grids.

use pieri_chevalley::paths::generate_paths;
use pieri_chevalley::pieri::{
    verify_characters, verify_commutation, verify_dimensions, verify_strings, verify_theorem,
    GridConfig,
};
use pieri_chevalley::rootdata::{RootSystem, Weight, WeylGroup};

fn group(name: &str) -> WeylGroup {
    WeylGroup::new(RootSystem::new(name.parse().unwrap()).unwrap())
}

#[test]
fn rank_three_and_d4() {
    for (name, lambda_box, mu_box) in [("C2", 2, 2), ("B3", 1, 1), ("C3", 1, 1), ("D4", 1, 0)] {
        let g = group(name);
        let cfg = GridConfig {
            lambda_box,
            mu_box,
            jobs: 4,
        };
        for r in [
            verify_theorem(&g, &cfg).unwrap(),
            verify_commutation(&g, &cfg).unwrap(),
            verify_strings(&g, &cfg).unwrap(),
            verify_dimensions(&g, &cfg).unwrap(),
            verify_characters(&g, &cfg).unwrap(),
        ] {
            assert!(r.passed, "{} {:?}", r.summary(), r.counterexample);
        }
    }
}

#[test]
fn f4_small_representations() {
    let g = group("F4");
    // dimensions 52 and 26
    for (lam, dim) in [([1, 0, 0, 0], 52), ([0, 0, 0, 1], 26)] {
        let ps = generate_paths(&g, &Weight::new(&lam)).unwrap();
        assert_eq!(ps.len(), dim);
    }
}
