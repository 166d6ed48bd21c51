//! Enumerate a Weyl group, its Bruhat order and parabolic cosets.
//!
//! cargo run --example weyl_group -- B2

use pieri_chevalley::rootdata::{RootSystem, SimpleSet, WeylGroup};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "B2".into());
    let rs = RootSystem::new(name.parse().expect("root system like A2")).expect("supported type");
    let g = WeylGroup::new(rs);
    println!("{} has {} elements, w0 = {}", name, g.order(), g.longest());
    for w in g.elements() {
        let covers: Vec<String> = g.bruhat_covers(w).map(|v| v.to_string()).collect();
        println!(
            "{:>10}  length {}  covers [{}]",
            w.to_string(),
            w.length(),
            covers.join(" ")
        );
    }

    // cosets W/W_J for J = {1}
    let j = SimpleSet::from_indices([1]);
    let mut reps: Vec<String> = g
        .elements()
        .iter()
        .map(|w| g.coset_of(w, j).min_rep().to_string())
        .collect();
    reps.sort();
    reps.dedup();
    println!("minimal representatives of W/<s1>: {}", reps.join(" "));
}
