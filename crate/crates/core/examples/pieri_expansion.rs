//! `y^λ [O_w]` in the Schubert basis, as text and JSON.
//!
//! cargo run --example pieri_expansion -- B2 1,1 s1s2

use pieri_chevalley::cli::{parse_weight, parse_word};
use pieri_chevalley::pieri::{expand, specialize_absolute};
use pieri_chevalley::rootdata::{RootSystem, WeylGroup};

fn main() {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "B2".into());
    let g = WeylGroup::new(RootSystem::new(name.parse().unwrap()).unwrap());
    let lam = parse_weight(&args.next().unwrap_or_else(|| "1,1".into()), g.rank()).unwrap();
    let w = g
        .from_word(&parse_word(&args.next().unwrap_or_else(|| "s1s2".into())).unwrap())
        .unwrap();

    let ex = expand(&g, &lam, w).unwrap();
    println!("y^{lam} [O_{w}] =");
    for (v, c) in ex.terms() {
        println!("  [O_{v}] · ({c})");
    }
    let counts = specialize_absolute(&ex);
    let total: u64 = counts.values().map(|c| u64::try_from(c).unwrap()).sum();
    println!("{} paths in total", total);
    println!("{}", serde_json::to_string_pretty(&ex.to_record()).unwrap());
}
