//! The E7 / E6 x SO(2) flag manifold: the irregular Sasakian structure on
//! the circle bundle over it has exactly 56 closed Reeb orbits, and its
//! basic Hodge numbers are the diagonal Betti data computed here.
//!
//!     cargo run -p sasaki-hodge --example e7_closed_leaves

use sasaki_hodge::flagcoh::compute_flag_cohomology;
use sasaki_hodge::rootsys::{
    exponents, levi_decompose, levi_exponents, CartanType, LeviSpec, RootSystem,
};
use sasaki_hodge::sasaki::{closed_leaf_count_from_flag, diamond_from_flag};

fn main() {
    let e7 = RootSystem::new(CartanType::E, 7).unwrap();
    let levi = LeviSpec::new(&e7, [1, 2, 3, 4, 5, 6]).unwrap();

    let h = levi_decompose(&e7, &levi).unwrap();
    println!("G = E7, degrees {:?}", exponents(&e7).degrees());
    println!("H = {h}, degrees {:?}", levi_exponents(&h).degrees());

    let flag = compute_flag_cohomology(&e7, &levi).unwrap();
    println!("complex dimension of G/H: {}", flag.complex_dimension());
    println!("P_t(G/H) = {}", flag.poincare());
    println!("chi(G/H) = {}", flag.euler());

    let diamond = diamond_from_flag(&flag);
    let diag: Vec<i64> = (0..=diamond.n()).map(|k| diamond.entry(k, k)).collect();
    println!("h^(k,k) along the diagonal: {diag:?}");
    println!(
        "closed leaves of the deformed structure: {}",
        closed_leaf_count_from_flag(&flag)
    );
}
