//! Demazure operators on the group algebra and the Demazure character
//! `T_{w0}(e^λ)`.
//!
//! cargo run --example demazure_operators

use pieri_chevalley::demazure::{demazure_apply, demazure_element};
use pieri_chevalley::grouping::{GroupRingElt, Lattice};
use pieri_chevalley::rootdata::{RootSystem, Weight, WeylGroup};

fn main() {
    let g = WeylGroup::new(RootSystem::new("A2".parse().unwrap()).unwrap());
    let rs = g.root_system();
    let rho = GroupRingElt::monomial(Weight::new(&[1, 1]), Lattice::Y);

    let t1 = demazure_apply(rs, 1, &rho).unwrap();
    println!("T_1(y^ρ) = {t1}");
    println!("T_1 T_1(y^ρ) = {}", demazure_apply(rs, 1, &t1).unwrap());

    for w in g.elements() {
        let f = demazure_element(rs, w, &rho).unwrap();
        println!(
            "w = {w}: T_w(y^ρ) has {} terms, dimension {}",
            f.len(),
            f.augmentation()
        );
    }
    let full = demazure_element(rs, g.longest(), &rho).unwrap();
    println!("character of the adjoint representation: {full}");
}
