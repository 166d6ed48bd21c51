//! Root systems, the weight lattice, Weyl groups, Bruhat order and
//! parabolic cosets.

mod cartan;
mod coset;
mod weight;
mod weyl;

pub use cartan::{
    build_root_system, CartanType, LatticeMap, PositiveRoot, RootSystem, SimpleSet, TypeLetter,
};
pub use coset::ParabolicCoset;
pub use weight::{Weight, MAX_RANK};
pub use weyl::{WeylElement, WeylGroup};
