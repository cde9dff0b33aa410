//! Poincaré polynomials of complex Grassmannians Gr(p, n), computed two
//! ways: the exponent quotient formula and the Bruhat cell enumeration.
//!
//!     cargo run -p sasaki-hodge --example poincare_grassmannian

use sasaki_hodge::flagcoh::{poincare_borel, poincare_coset};
use sasaki_hodge::rootsys::{
    exponents, levi_decompose, levi_exponents, CartanType, LeviSpec, RootSystem,
};

fn main() {
    for n in 2..=6usize {
        for p in 1..n {
            // SU(n) is type A_{n-1}; S(U(p) x U(n-p)) drops node p
            let rs = RootSystem::new(CartanType::A, n - 1).unwrap();
            let nodes: Vec<usize> = (1..n).filter(|&i| i != p).collect();
            let levi = LeviSpec::new(&rs, nodes).unwrap();

            let g = exponents(&rs);
            let l = levi_exponents(&levi_decompose(&rs, &levi).unwrap());
            let borel = poincare_borel(&g, &l).unwrap();
            let bruhat = poincare_coset(&rs, &levi).unwrap();
            assert_eq!(borel, bruhat);

            println!("Gr({p},{n}):  P_t = {borel}");
        }
    }
}
