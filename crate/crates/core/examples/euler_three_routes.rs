//! The Euler number of a generalized flag manifold, computed via three
//! independent routes: the degree quotient, the Weyl group index, and the
//! Poincaré polynomial at t = 1.
//!
//!     cargo run -p sasaki-hodge --example euler_three_routes

use sasaki_hodge::flagcoh::{euler_number, euler_weyl, poincare_borel};
use sasaki_hodge::rootsys::{
    exponents, levi_decompose, levi_exponents, CartanType, LeviSpec, RootSystem,
};

fn main() {
    let cases = [
        (CartanType::A, 4, vec![1, 2, 4]),
        (CartanType::B, 3, vec![1, 2]),
        (CartanType::D, 5, vec![2, 3, 4, 5]),
        (CartanType::F, 4, vec![1, 2, 3]),
        (CartanType::G, 2, vec![]),
    ];
    for (ct, rank, nodes) in cases {
        let rs = RootSystem::new(ct, rank).unwrap();
        let levi = LeviSpec::new(&rs, nodes).unwrap();
        let spec = levi_decompose(&rs, &levi).unwrap();

        let g = exponents(&rs);
        let l = levi_exponents(&spec);
        let by_degrees = euler_number(&g, &l).unwrap();
        let by_weyl = euler_weyl(&rs, &levi);
        let at_one = poincare_borel(&g, &l).unwrap().eval_at_one();

        println!("chi({ct}{rank} / {spec})");
        println!("  degree quotient:  {by_degrees}");
        println!("  Weyl group index: {by_weyl}");
        println!("  P(1):             {at_one}");
    }
}
