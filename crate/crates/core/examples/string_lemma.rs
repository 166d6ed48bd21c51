//! Split `T^λ_{≤w}` into α_i-strings and check the string identity.
//!
//! cargo run --example string_lemma

use pieri_chevalley::paths::{final_direction, generate_paths, restrict_le};
use pieri_chevalley::pieri::{string_decompose, verify_string_lemma};
use pieri_chevalley::rootdata::{RootSystem, Weight, WeylGroup};

fn main() {
    let g = WeylGroup::new(RootSystem::new("B2".parse().unwrap()).unwrap());
    let lam = Weight::new(&[1, 1]);
    let w = g.from_word(&[1, 2, 1]).unwrap();
    let i = 1;
    let below = restrict_le(&g, &generate_paths(&g, &lam).unwrap(), w).unwrap();
    println!("|T^{lam}_(≤{w})| = {}", below.len());
    for s in string_decompose(&g, &below, i).unwrap() {
        let parts: Vec<String> = s
            .iter()
            .map(|p| {
                format!(
                    "{} (v = {})",
                    p.endpoint(),
                    final_direction(&g, p, w).unwrap()
                )
            })
            .collect();
        println!("  string: {}", parts.join(" -> "));
    }
    match verify_string_lemma(&g, &lam, w, i, 2).unwrap() {
        Some(r) => println!("{}", r.summary()),
        None => println!("s{i} is not a left descent of {w}"),
    }
}
