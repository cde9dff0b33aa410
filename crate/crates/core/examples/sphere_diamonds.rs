//! Basic Hodge diamonds of Sasakian structures on rational homology
//! spheres: the Gysin sequence forces the truncated ring C[z]/(z^(n+1)),
//! one class in each bidegree (k, k).
//!
//!     cargo run -p sasaki-hodge --example sphere_diamonds

use sasaki_hodge::sasaki::{betti_from_diamond, sphere_diamond};

fn main() {
    for n in 1..=5usize {
        let diamond = sphere_diamond(n);
        println!("S^{} (n = {n}):", 2 * n + 1);
        for row in diamond.entries() {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            println!("  {}", cells.join(" "));
        }
        println!("  betti: {:?}", betti_from_diamond(&diamond).entries());
    }
}
