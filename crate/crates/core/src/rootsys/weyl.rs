//! Weyl group enumeration and minimal-length parabolic coset representatives.
//!
//! Both operations run a breadth-first search on an orbit of a dominant
//! weight, tracked in exact integer fundamental-weight coordinates. A weight
//! with stabilizer `W_P` puts the orbit in bijection with the coset space
//! `W / W_P`; the regular weight (all coordinates 1) enumerates `W` itself.
//! The quotient is explored directly, so a 56-element coset space inside a
//! Weyl group of order 2,903,040 costs 56 states, not millions.

use std::collections::HashMap;

use num_bigint::BigUint;

use super::exponents::{conjugate_partition, weyl_order, ExponentSet};
use super::levi::LeviSpec;
use super::roots::RootSystem;
use super::RootSystemError;

/// Cap on the number of BFS states, guarding against accidental
/// full enumerations of groups like W(E_8).
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 10_000_000;

/// Result of a full Weyl group enumeration: the order together with the
/// number of elements of each Coxeter length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylEnumeration {
    order: u64,
    length_histogram: Vec<u64>,
}

impl WeylEnumeration {
    pub fn order(&self) -> u64 {
        self.order
    }

    /// `length_histogram[l]` = number of elements of length `l`.
    pub fn length_histogram(&self) -> &[u64] {
        &self.length_histogram
    }

    pub fn max_length(&self) -> usize {
        self.length_histogram.len().saturating_sub(1)
    }
}

/// Minimal-length coset representatives of `W / W_P` with exact group and
/// subgroup orders. Words are reduced, use 0-based generator indices, and
/// are lexicographically minimal among the reduced words of their element;
/// they are listed in order of (length, word).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylCosetData {
    representatives: Vec<Vec<u16>>,
    group_order: BigUint,
    subgroup_order: BigUint,
}

impl WeylCosetData {
    pub fn representatives(&self) -> &[Vec<u16>] {
        &self.representatives
    }

    pub fn count(&self) -> usize {
        self.representatives.len()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.representatives.iter().map(Vec::len).collect()
    }

    pub fn max_length(&self) -> usize {
        self.representatives.last().map_or(0, Vec::len)
    }

    pub fn group_order(&self) -> &BigUint {
        &self.group_order
    }

    pub fn subgroup_order(&self) -> &BigUint {
        &self.subgroup_order
    }
}

/// Enumerates the full Weyl group, returning order and length histogram.
/// Refuses when the order exceeds the default budget (for example E_8, of
/// order 696,729,600).
pub fn weyl_enumerate(root_system: &RootSystem) -> Result<WeylEnumeration, RootSystemError> {
    weyl_enumerate_with_budget(root_system, DEFAULT_ENUMERATION_BUDGET)
}

pub fn weyl_enumerate_with_budget(
    root_system: &RootSystem,
    budget: u64,
) -> Result<WeylEnumeration, RootSystemError> {
    let predicted = weyl_order(root_system);
    check_budget(&predicted, budget)?;

    let regular = vec![1i64; root_system.rank()];
    let mut histogram: Vec<u64> = Vec::new();
    let mut order: u64 = 0;
    orbit_bfs(root_system, regular, budget, |depth, _state, _via| {
        if histogram.len() <= depth {
            histogram.resize(depth + 1, 0);
        }
        histogram[depth] += 1;
        order += 1;
    })?;

    Ok(WeylEnumeration {
        order,
        length_histogram: histogram,
    })
}

/// Enumerates the minimal-length representatives of `W / W_P` for the
/// parabolic `W_P` generated by the reflections of `levi`. A representative
/// is exactly an element sending every simple root indexed by the Levi
/// subset to a positive root.
pub fn parabolic_coset_data(
    root_system: &RootSystem,
    levi: &LeviSpec,
) -> Result<WeylCosetData, RootSystemError> {
    parabolic_coset_data_with_budget(root_system, levi, DEFAULT_ENUMERATION_BUDGET)
}

pub fn parabolic_coset_data_with_budget(
    root_system: &RootSystem,
    levi: &LeviSpec,
    budget: u64,
) -> Result<WeylCosetData, RootSystemError> {
    let group_order = weyl_order(root_system);
    let subgroup_order = levi_weyl_order(root_system, levi);
    let predicted = &group_order / &subgroup_order;
    check_budget(&predicted, budget)?;

    // Weight with stabilizer exactly W_P: zero on Levi nodes, one elsewhere.
    let start: Vec<i64> = (1..=root_system.rank())
        .map(|node| if levi.contains(node) { 0 } else { 1 })
        .collect();

    let mut words: Vec<Vec<u16>> = Vec::new();
    orbit_bfs(root_system, start, budget, |_depth, _state, via| {
        let word = match via {
            Some((generator, parent_index)) => {
                let mut w = Vec::with_capacity(words[parent_index].len() + 1);
                w.push(generator as u16);
                w.extend_from_slice(&words[parent_index]);
                w
            }
            None => Vec::new(),
        };
        words.push(word);
    })?;

    Ok(WeylCosetData {
        representatives: words,
        group_order,
        subgroup_order,
    })
}

/// Order of the parabolic (Levi) Weyl subgroup, computed from the induced
/// root subsystem: positive roots supported on the Levi nodes keep their
/// heights, and the conjugate partition of that height distribution gives
/// the subgroup's exponents.
pub fn levi_weyl_order(root_system: &RootSystem, levi: &LeviSpec) -> BigUint {
    levi_subsystem_exponents(root_system, levi).group_order()
}

pub(crate) fn levi_subsystem_exponents(
    root_system: &RootSystem,
    levi: &LeviSpec,
) -> ExponentSet {
    let mut dist: Vec<usize> = Vec::new();
    for root in root_system.positive_roots() {
        let supported = root
            .iter()
            .enumerate()
            .all(|(j, &c)| c == 0 || levi.contains(j + 1));
        if supported {
            let h = root.iter().sum::<i64>() as usize;
            if dist.len() < h {
                dist.resize(h, 0);
            }
            dist[h - 1] += 1;
        }
    }
    ExponentSet::from_exponents(conjugate_partition(&dist))
}

/// Number of positive roots of the Levi subsystem (those supported on the
/// Levi node subset).
pub fn levi_positive_root_count(root_system: &RootSystem, levi: &LeviSpec) -> usize {
    root_system
        .positive_roots()
        .iter()
        .filter(|root| {
            root.iter()
                .enumerate()
                .all(|(j, &c)| c == 0 || levi.contains(j + 1))
        })
        .count()
}

fn check_budget(required: &BigUint, budget: u64) -> Result<(), RootSystemError> {
    if required > &BigUint::from(budget) {
        Err(RootSystemError::EnumerationBudgetExceeded {
            required: required.clone(),
            budget,
        })
    } else {
        Ok(())
    }
}

/// Layered BFS over the orbit of `start` under the simple reflections, in
/// fundamental-weight coordinates. Visits states in deterministic order:
/// depth by depth, generators in ascending node order within a depth, so
/// the visit order of coset representatives is (length, lexicographic word).
/// `on_visit(depth, state, via)` receives `via = (generator, parent visit
/// index)` for every state except the start.
fn orbit_bfs<F>(
    root_system: &RootSystem,
    start: Vec<i64>,
    budget: u64,
    mut on_visit: F,
) -> Result<(), RootSystemError>
where
    F: FnMut(usize, &[i64], Option<(usize, usize)>),
{
    let rank = root_system.rank();
    let mut visited: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut visit_count = 0usize;

    let budget_usize = usize::try_from(budget).unwrap_or(usize::MAX);

    on_visit(0, &start, None);
    visited.insert(start.clone(), visit_count);
    visit_count += 1;

    let mut frontier: Vec<(Vec<i64>, usize)> = vec![(start, 0)];
    let mut depth = 0usize;

    while !frontier.is_empty() {
        depth += 1;
        let mut next: Vec<(Vec<i64>, usize)> = Vec::new();
        for generator in 0..rank {
            for (state, index) in &frontier {
                if state[generator] <= 0 {
                    // zero: fixed by this reflection (same coset);
                    // negative: the image was visited at a smaller depth
                    continue;
                }
                let image = root_system.reflect_weight_coords(generator, state);
                if visited.contains_key(&image) {
                    continue;
                }
                if visit_count >= budget_usize {
                    return Err(RootSystemError::EnumerationBudgetExceeded {
                        required: BigUint::from(budget) + 1u32,
                        budget,
                    });
                }
                on_visit(depth, &image, Some((generator, *index)));
                visited.insert(image.clone(), visit_count);
                next.push((image, visit_count));
                visit_count += 1;
            }
        }
        frontier = next;
    }

    Ok(())
}
