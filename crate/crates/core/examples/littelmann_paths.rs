//! Generate the paths of shape λ with the root operators and inspect them.
//!
//! cargo run --example littelmann_paths -- G2 1,0

use pieri_chevalley::paths::{format_rational, generate_paths, root_op_e};
use pieri_chevalley::rootdata::{RootSystem, Weight, WeylGroup};

fn main() {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "G2".into());
    let lam: Vec<i64> = args
        .next()
        .unwrap_or_else(|| "1,0".into())
        .split(',')
        .map(|c| c.parse().expect("integer coordinate"))
        .collect();
    let g = WeylGroup::new(RootSystem::new(name.parse().unwrap()).unwrap());
    let lam = Weight::new(&lam);
    let ps = generate_paths(&g, &lam).unwrap();
    println!(
        "{} paths of shape {lam}, Weyl dimension {}",
        ps.len(),
        g.root_system().weyl_dimension(&lam).unwrap()
    );
    for p in &ps {
        let breaks: Vec<String> = p.breaks().iter().map(format_rational).collect();
        let dirs: Vec<String> = p.dirs().iter().map(|d| d.to_string()).collect();
        let raisable: Vec<usize> = (1..=g.rank())
            .filter(|&i| root_op_e(&g, i, p).unwrap().is_some())
            .collect();
        println!(
            "end {:>8}  ι = {:<8} dirs {}  breaks {}  e_i defined for {:?}",
            p.endpoint().to_string(),
            p.initial_direction(&g).min_rep().to_string(),
            dirs.join(" "),
            breaks.join(" "),
            raisable
        );
    }
}
