//! Minimal-length coset representatives of a parabolic quotient, with
//! their reduced words. The length multiset is symmetric (Poincaré
//! duality) and its generating polynomial in t^2 is the Poincaré
//! polynomial of G/P.
//!
//!     cargo run -p sasaki-hodge --example coset_words

use sasaki_hodge::rootsys::{parabolic_coset_data, CartanType, LeviSpec, RootSystem};

fn main() {
    let rs = RootSystem::new(CartanType::A, 3).unwrap();
    let levi = LeviSpec::new(&rs, [1, 3]).unwrap();
    let data = parabolic_coset_data(&rs, &levi).unwrap();

    println!(
        "A3 with Levi nodes {{1,3}}: |W| = {}, |W_P| = {}, {} cosets",
        data.group_order(),
        data.subgroup_order(),
        data.count()
    );
    for word in data.representatives() {
        let rendered = if word.is_empty() {
            "e".to_string()
        } else {
            word.iter()
                .map(|&i| format!("s{}", i + 1)) // 1-based node labels
                .collect::<Vec<_>>()
                .join(" ")
        };
        println!("  length {}: {rendered}", word.len());
    }

    let lengths = data.lengths();
    let max = data.max_length();
    println!(
        "length multiset {:?} mirrors to {:?}",
        lengths,
        lengths.iter().map(|l| max - l).collect::<Vec<_>>()
    );
}
