//! Acceptance suite: one test per criterion, each printing a PASS line
//! (run with `cargo test --test acceptance -- --nocapture` to see them).
//!
//! Every expected value is produced by an oracle independent of the code
//! path under test: binomials from factorials, product formulas expanded by
//! exact division, Weyl groups enumerated element by element, and the
//! truncated polynomial ring built by brute-force multiplication.

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use sasaki_hodge::flagcoh::{
    compute_flag_cohomology, euler_number, euler_weyl, poincare_borel, poincare_coset,
};
use sasaki_hodge::polyring::{poly_exact_div, poly_mul, IntPolynomial};
use sasaki_hodge::rootsys::{
    exponents, levi_decompose, levi_exponents, weyl_enumerate, weyl_order, CartanType, LeviSpec,
    RootSystem,
};
use sasaki_hodge::sasaki::{
    betti_from_diamond, builtin_fixtures, carrell_lieberman_check,
    check_finite_closed_leaves_vanishing, check_positivity_vanishing, diamond_from_flag,
    sphere_diamond, validate_diamond, HodgeDiamond, LeafCount, Positivity, SasakiStructureRecord,
    ValidationOptions,
};

// ---------------------------------------------------------------- oracles

fn factorial(k: usize) -> BigUint {
    (1..=k).map(BigUint::from).product()
}

fn binomial(n: usize, p: usize) -> BigUint {
    factorial(n) / (factorial(p) * factorial(n - p))
}

/// The Levi node subset realizing `S(U(p) x U(n-p))` inside `SU(n)`:
/// all nodes of `A_{n-1}` except node `p`.
fn su_levi_nodes(n: usize, p: usize) -> Vec<usize> {
    (1..n).filter(|&i| i != p).collect()
}

fn product_of_factors(ks: impl IntoIterator<Item = usize>) -> IntPolynomial {
    ks.into_iter().fold(IntPolynomial::one(), |acc, k| {
        poly_mul(&acc, &IntPolynomial::one_minus_power(k))
    })
}

/// Expands the classical Grassmannian product formula
/// `prod_{i=1..n-p} (1-t^{2i+2})/(1-t^{2i}) * prod_{i=1..p-1}
/// (1-t^{2(n-p+1)+2i})/(1-t^{2i+2})` by one exact division of the full
/// products.
fn grassmannian_formula(n: usize, p: usize) -> IntPolynomial {
    let mut numerator_powers: Vec<usize> = (1..=n - p).map(|i| 2 * i + 2).collect();
    numerator_powers.extend((1..p).map(|i| 2 * (n - p + 1) + 2 * i));
    let mut denominator_powers: Vec<usize> = (1..=n - p).map(|i| 2 * i).collect();
    denominator_powers.extend((1..p).map(|i| 2 * i + 2));
    poly_exact_div(
        &product_of_factors(numerator_powers),
        &product_of_factors(denominator_powers),
    )
    .expect("product formula divides exactly")
}

/// All subsets of `{1..rank}` in bitmask order.
fn node_subsets(rank: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << rank))
        .map(|mask| (1..=rank).filter(|&i| mask & (1 << (i - 1)) != 0).collect())
        .collect()
}

/// Recovers the multiset of invariant degrees `d` from a Weyl length
/// generating function by backtracking division by geometric sums
/// `1 + t + ... + t^(d-1)`; degrees are produced in non-increasing order.
fn factor_into_geometric_sums(poly: &IntPolynomial) -> Option<Vec<usize>> {
    fn go(p: &IntPolynomial, max_d: usize, out: &mut Vec<usize>) -> bool {
        if p == &IntPolynomial::one() {
            return true;
        }
        let deg = match p.degree() {
            Some(d) if d >= 1 => d,
            _ => return false,
        };
        for d in (2..=(deg + 1).min(max_d)).rev() {
            if let Ok(q) = poly_exact_div(p, &IntPolynomial::geometric_sum(d)) {
                out.push(d);
                if go(&q, d, out) {
                    return true;
                }
                out.pop();
            }
        }
        false
    }
    let mut out = Vec::new();
    let max = poly.degree()? + 1;
    go(poly, max, &mut out).then_some(out)
}

/// The truncated polynomial ring `C[z]/(z^(n+1))` built by brute force:
/// powers of `z` are multiplied out in the ring until they vanish, each
/// surviving power `z^k` contributing one dimension in bidegree `(k, k)`.
fn truncated_ring_diamond(n: usize) -> Vec<Vec<i64>> {
    // ring elements as coefficient vectors in 1, z, ..., z^n
    let trunc_mul = |a: &[i64], b: &[i64]| -> Vec<i64> {
        let mut out = vec![0i64; n + 1];
        for (i, &ca) in a.iter().enumerate() {
            for (j, &cb) in b.iter().enumerate() {
                if ca != 0 && cb != 0 && i + j <= n {
                    out[i + j] += ca * cb;
                }
            }
        }
        out
    };
    let mut z = vec![0i64; n + 1];
    z[1] = 1;
    let mut table = vec![vec![0i64; n + 1]; n + 1];
    let mut power = vec![0i64; n + 1];
    power[0] = 1; // z^0
    let mut k = 0;
    while power.iter().any(|&c| c != 0) {
        // z^k is nonzero in the ring: one basis class in bidegree (k, k)
        table[k][k] += 1;
        power = trunc_mul(&power, &z);
        k += 1;
    }
    assert_eq!(k, n + 1, "z^(n+1) must be the first vanishing power");
    table
}

// -------------------------------------------------------------- criteria

#[test]
fn acceptance_1_grassmannian_and_e7_euler_numbers() {
    for n in 2..=8usize {
        for p in 1..n {
            let rs = RootSystem::new(CartanType::A, n - 1).unwrap();
            let levi = LeviSpec::new(&rs, su_levi_nodes(n, p)).unwrap();
            let g = exponents(&rs);
            let l = levi_exponents(&levi_decompose(&rs, &levi).unwrap());
            let chi = euler_number(&g, &l).unwrap();
            assert_eq!(chi, binomial(n, p), "chi(SU({n})/S(U({p})xU({})))", n - p);
            assert_eq!(euler_weyl(&rs, &levi), binomial(n, p));
        }
    }

    let e7 = RootSystem::new(CartanType::E, 7).unwrap();
    let levi = LeviSpec::new(&e7, [1, 2, 3, 4, 5, 6]).unwrap();
    let g = exponents(&e7);
    let l = levi_exponents(&levi_decompose(&e7, &levi).unwrap());
    assert_eq!(euler_number(&g, &l).unwrap(), BigUint::from(56u32));
    assert_eq!(euler_weyl(&e7, &levi), BigUint::from(56u32));

    println!("ACCEPTANCE 1 PASS: Euler numbers equal n!/((n-p)!p!) for n<=8 and 56 for E7/E6xSO(2)");
}

#[test]
fn acceptance_2_poincare_polynomials_match_product_formulas() {
    for n in 2..=8usize {
        for p in 1..n {
            let rs = RootSystem::new(CartanType::A, n - 1).unwrap();
            let levi = LeviSpec::new(&rs, su_levi_nodes(n, p)).unwrap();
            let g = exponents(&rs);
            let l = levi_exponents(&levi_decompose(&rs, &levi).unwrap());
            let computed = poincare_borel(&g, &l).unwrap();
            let formula = grassmannian_formula(n, p);
            assert_eq!(computed, formula, "P_t mismatch for n={n} p={p}");
        }
    }

    // E7 from its tabulated degree sets, expanded independently
    let e7_degrees = [3usize, 11, 15, 19, 23, 27, 35];
    let e6_so2_degrees = [1usize, 3, 9, 11, 15, 17, 23];
    let numerator = product_of_factors(e7_degrees.iter().map(|&g| g + 1));
    let denominator = product_of_factors(e6_so2_degrees.iter().map(|&l| l + 1));
    let from_table = poly_exact_div(&numerator, &denominator).expect("divides exactly");
    assert_eq!(from_table.eval_at_one(), BigInt::from(56));

    let rs = RootSystem::new(CartanType::E, 7).unwrap();
    let levi = LeviSpec::new(&rs, [1, 2, 3, 4, 5, 6]).unwrap();
    let g = exponents(&rs);
    let l = levi_exponents(&levi_decompose(&rs, &levi).unwrap());
    assert_eq!(g.degrees(), e7_degrees.to_vec());
    assert_eq!(l.degrees(), e6_so2_degrees.to_vec());
    assert_eq!(poincare_borel(&g, &l).unwrap(), from_table);

    println!("ACCEPTANCE 2 PASS: Poincare polynomials match the classical product formulas");
}

#[test]
fn acceptance_3_dual_oracles_agree_on_the_full_sweep() {
    let mut cases = 0usize;
    for (ct, rank) in sweep_types() {
        let rs = RootSystem::new(ct, rank).unwrap();
        let g = exponents(&rs);
        for nodes in node_subsets(rank) {
            let levi = LeviSpec::new(&rs, nodes).unwrap();
            let borel =
                poincare_borel(&g, &levi_exponents(&levi_decompose(&rs, &levi).unwrap()))
                    .unwrap();
            let coset = poincare_coset(&rs, &levi).unwrap();
            assert_eq!(borel, coset, "{ct}{rank} {:?}", levi.nodes());

            let chi = euler_number(&g, &levi_exponents(&levi_decompose(&rs, &levi).unwrap()))
                .unwrap();
            assert_eq!(chi, euler_weyl(&rs, &levi), "{ct}{rank} {:?}", levi.nodes());
            assert_eq!(
                BigInt::from(chi),
                coset.eval_at_one(),
                "{ct}{rank} {:?}",
                levi.nodes()
            );
            cases += 1;
        }
    }
    assert_eq!(cases, 310);
    println!("ACCEPTANCE 3 PASS: Borel and Bruhat routes agree on all {cases} (type, subset) cases");
}

/// Every simple type of rank <= 5, plus E6.
fn sweep_types() -> Vec<(CartanType, usize)> {
    vec![
        (CartanType::A, 1),
        (CartanType::A, 2),
        (CartanType::A, 3),
        (CartanType::A, 4),
        (CartanType::A, 5),
        (CartanType::B, 2),
        (CartanType::B, 3),
        (CartanType::B, 4),
        (CartanType::B, 5),
        (CartanType::C, 3),
        (CartanType::C, 4),
        (CartanType::C, 5),
        (CartanType::D, 4),
        (CartanType::D, 5),
        (CartanType::F, 4),
        (CartanType::G, 2),
        (CartanType::E, 6),
    ]
}

#[test]
fn acceptance_4_exponents_recovered_from_weyl_enumeration() {
    // every simple type with |W| <= 10^5
    let candidates: Vec<(CartanType, usize)> = (1..=9)
        .map(|r| (CartanType::A, r))
        .chain((2..=8).map(|r| (CartanType::B, r)))
        .chain((3..=8).map(|r| (CartanType::C, r)))
        .chain((4..=8).map(|r| (CartanType::D, r)))
        .chain((6..=8).map(|r| (CartanType::E, r)))
        .chain([(CartanType::F, 4), (CartanType::G, 2)])
        .collect();
    let limit = BigUint::from(100_000u32);
    let mut checked = 0usize;
    for (ct, rank) in candidates {
        let rs = RootSystem::new(ct, rank).unwrap();
        if weyl_order(&rs) > limit {
            continue;
        }
        let enumeration = weyl_enumerate(&rs).unwrap();
        let generating = IntPolynomial::from_coefficients(
            enumeration
                .length_histogram()
                .iter()
                .map(|&c| BigInt::from(c)),
        );
        let mut recovered = factor_into_geometric_sums(&generating)
            .unwrap_or_else(|| panic!("{ct}{rank}: generating function must factor"));
        recovered.sort_unstable();
        let expected: Vec<usize> = exponents(&rs)
            .weyl_exponents()
            .iter()
            .map(|m| m + 1)
            .collect();
        assert_eq!(recovered, expected, "{ct}{rank} invariant degrees");

        let product: BigUint = recovered.iter().map(|&d| BigUint::from(d)).product();
        assert_eq!(product, BigUint::from(enumeration.order()), "{ct}{rank}");
        assert_eq!(product, exponents(&rs).group_order(), "{ct}{rank}");
        checked += 1;
    }
    assert_eq!(checked, 22, "expected exactly the 22 types with |W| <= 10^5");
    println!(
        "ACCEPTANCE 4 PASS: length generating functions of {checked} Weyl groups factor into the stored degree tables"
    );
}

#[test]
fn acceptance_5_sphere_diamonds_match_truncated_ring_brute_force() {
    for n in 1..=10usize {
        let expected = truncated_ring_diamond(n);
        let got = sphere_diamond(n);
        assert_eq!(got.n(), n);
        assert_eq!(got.entries(), expected.as_slice(), "n = {n}");
    }
    println!("ACCEPTANCE 5 PASS: sphere diamonds equal C[z]/(z^(n+1)) for n = 1..10");
}

#[test]
fn acceptance_6_fixture_regression() {
    let fixtures = builtin_fixtures();
    let k3 = fixtures
        .iter()
        .find(|r| r.name.contains("K3"))
        .expect("K3 fixture");
    let link = fixtures
        .iter()
        .find(|r| r.name.contains("positive link"))
        .expect("positive link fixture");

    assert_eq!(k3.diamond.entry(2, 0), 1);
    assert_eq!(k3.diamond.entry(0, 2), 1);
    assert_eq!(k3.diamond.entry(1, 1), 20);
    assert_eq!(link.diamond.entry(1, 1), 22);
    assert!(link.diamond.is_diagonal());

    for record in [k3, link] {
        assert!(
            validate_diamond(&record.diamond, ValidationOptions::with_lefschetz()).passed(),
            "{}",
            record.name
        );
        assert_eq!(
            betti_from_diamond(&record.diamond).entries(),
            &[1, 0, 22, 0, 1],
            "{}",
            record.name
        );
    }

    // audited under a claimed positivity, only the link structure survives
    let k3_claimed_positive = SasakiStructureRecord {
        positivity: Positivity::Positive,
        ..k3.clone()
    };
    assert!(!check_positivity_vanishing(&k3_claimed_positive)
        .unwrap()
        .passed());
    assert!(check_positivity_vanishing(link).unwrap().passed());

    // audited under a claimed finite leaf count, the K3 bundle fails
    let k3_claimed_finite = SasakiStructureRecord {
        closed_leaf_count: LeafCount::Finite(24),
        ..k3.clone()
    };
    let report = check_finite_closed_leaves_vanishing(&k3_claimed_finite).unwrap();
    assert!(!report.passed());
    let witnesses: Vec<&str> = report
        .failures()
        .flat_map(|r| r.witnesses.iter().map(String::as_str))
        .collect();
    assert!(witnesses.iter().any(|w| w.starts_with("h^{2,0}")));

    println!("ACCEPTANCE 6 PASS: the two 21#(S^2xS^3) fixtures validate, share Betti (1,0,22,0,1), and split the positivity and finiteness audits");
}

#[test]
fn acceptance_7_flag_diamonds_validate_and_localize() {
    let mut cases = 0usize;
    for (ct, rank) in sweep_types() {
        let rs = RootSystem::new(ct, rank).unwrap();
        for nodes in node_subsets(rank) {
            let levi = LeviSpec::new(&rs, nodes).unwrap();
            let flag = compute_flag_cohomology(&rs, &levi).unwrap();
            let diamond = diamond_from_flag(&flag);

            let report = validate_diamond(&diamond, ValidationOptions::with_lefschetz());
            assert!(report.passed(), "{ct}{rank} {:?}: {report:?}", levi.nodes());

            let chi = i64::try_from(flag.euler().clone()).unwrap();
            let points = HodgeDiamond::new(0, vec![vec![chi]]).unwrap();
            let localization = carrell_lieberman_check(&diamond, &points, 0).unwrap();
            assert!(
                localization.passed(),
                "{ct}{rank} {:?}: {localization:?}",
                levi.nodes()
            );
            cases += 1;
        }
    }
    assert_eq!(cases, 310);
    println!("ACCEPTANCE 7 PASS: all {cases} flag diamonds validate (incl. Lefschetz) and localize to their chi points");
}

#[test]
fn acceptance_8_analytic_results_covered_as_data_regressions_only() {
    // The deformation-invariance and equivariant-formality proofs are not
    // computations; their numerical consequences are pinned here instead:
    // identical basic Betti numbers for both structures on 21#(S^2xS^3)
    // (rigidity at the data level) with distinct diamonds (the Hodge
    // numbers see the CR structure), total basic Betti number 24.
    let fixtures = builtin_fixtures();
    let k3 = &fixtures[0];
    let link = &fixtures[1];
    let b_k3 = betti_from_diamond(&k3.diamond);
    let b_link = betti_from_diamond(&link.diamond);
    assert_eq!(b_k3, b_link);
    assert_eq!(b_k3.total(), BigUint::from(24u32));
    assert_ne!(k3.diamond, link.diamond);
    assert_eq!(BigUint::one() * 24u32, b_link.total());
    println!("ACCEPTANCE 8 PASS: analytic theorems enter only through the fixture-level regressions asserted by criteria 6 and 7");
}
