//! Check the operator identity `Y^λ T_{w⁻¹} = Σ_η T_{v(η,w)⁻¹} Y^{η(1)}`
//! on a grid, in parallel.
//!
//! cargo run --release --example verify_theorem -- A3 1 1 4

use pieri_chevalley::pieri::{verify_theorem, GridConfig};
use pieri_chevalley::rootdata::{RootSystem, WeylGroup};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let arg = |k: usize, d: &str| args.get(k).cloned().unwrap_or_else(|| d.to_string());
    let g = WeylGroup::new(RootSystem::new(arg(0, "A2").parse().unwrap()).unwrap());
    let cfg = GridConfig {
        lambda_box: arg(1, "2").parse().unwrap(),
        mu_box: arg(2, "2").parse().unwrap(),
        jobs: arg(3, "4").parse().unwrap(),
    };
    let report = verify_theorem(&g, &cfg).unwrap();
    println!("{}", report.summary());
    if let Some(ce) = &report.counterexample {
        println!("{}", serde_json::to_string_pretty(ce).unwrap());
        std::process::exit(1);
    }
}
