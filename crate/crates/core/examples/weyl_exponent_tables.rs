//! Weyl exponents, topological degrees, root counts, and group orders for
//! the simple types, straight from the height distribution of positive
//! roots.
//!
//!     cargo run -p sasaki-hodge --example weyl_exponent_tables

use sasaki_hodge::rootsys::{exponents, weyl_order, CartanType, RootSystem};

fn main() {
    let types = [
        (CartanType::A, 1),
        (CartanType::A, 4),
        (CartanType::B, 4),
        (CartanType::C, 4),
        (CartanType::D, 5),
        (CartanType::E, 6),
        (CartanType::E, 7),
        (CartanType::E, 8),
        (CartanType::F, 4),
        (CartanType::G, 2),
    ];
    println!(
        "{:<5} {:>7} {:<26} {:<28} {:>12}",
        "type", "#roots", "exponents", "degrees", "|W|"
    );
    for (ct, rank) in types {
        let rs = RootSystem::new(ct, rank).unwrap();
        let exps = exponents(&rs);
        println!(
            "{:<5} {:>7} {:<26} {:<28} {:>12}",
            format!("{ct}{rank}"),
            rs.num_positive_roots(),
            format!("{:?}", exps.weyl_exponents()),
            format!("{:?}", exps.degrees()),
            weyl_order(&rs)
        );
    }
}
