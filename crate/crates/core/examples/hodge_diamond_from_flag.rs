//! Hodge diamond of the deformed Sasakian structure over Gr(2,4), with the
//! Betti numbers read back off the anti-diagonals.
//!
//!     cargo run -p sasaki-hodge --example hodge_diamond_from_flag

use sasaki_hodge::flagcoh::compute_flag_cohomology;
use sasaki_hodge::rootsys::{CartanType, LeviSpec, RootSystem};
use sasaki_hodge::sasaki::{betti_from_diamond, diamond_from_flag};

fn main() {
    let rs = RootSystem::new(CartanType::A, 3).unwrap();
    let levi = LeviSpec::new(&rs, [1, 3]).unwrap();
    let flag = compute_flag_cohomology(&rs, &levi).unwrap();

    let diamond = diamond_from_flag(&flag);
    println!("h^(p,q) of the structure over Gr(2,4), rows p = 0..{}:", diamond.n());
    for row in diamond.entries() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>2}")).collect();
        println!("  {}", cells.join(" "));
    }

    let betti = betti_from_diamond(&diamond);
    println!("basic Betti numbers: {:?}", betti.entries());
    println!("total = chi = {}", betti.total());
}
