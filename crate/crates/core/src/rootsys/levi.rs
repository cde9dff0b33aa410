//! Levi subgroups from Dynkin diagram node subsets.
//!
//! A subset of nodes determines the equal-rank subgroup generated by the
//! corresponding root subsystem together with the full maximal torus: the
//! semisimple components are the connected components of the induced
//! subdiagram, and the nodes left out contribute central torus rank. Every
//! subgroup representable here has the same rank as the ambient group by
//! construction.

use std::fmt;

use super::cartan::{CartanType, SimpleType};
use super::exponents::{exponents, ExponentSet};
use super::roots::RootSystem;
use super::RootSystemError;

/// Subset of Dynkin diagram nodes (1-based Bourbaki indices) selecting a
/// Levi subgroup of a root system.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LeviSpec {
    nodes: Vec<usize>,
    rank: usize,
}

impl LeviSpec {
    /// Validates node indices against the root system: every node must lie
    /// in `1..=rank` and duplicates are forbidden.
    pub fn new(
        root_system: &RootSystem,
        nodes: impl IntoIterator<Item = usize>,
    ) -> Result<LeviSpec, RootSystemError> {
        Self::with_rank(root_system.rank(), nodes)
    }

    pub fn with_rank(
        rank: usize,
        nodes: impl IntoIterator<Item = usize>,
    ) -> Result<LeviSpec, RootSystemError> {
        let mut nodes: Vec<usize> = nodes.into_iter().collect();
        nodes.sort_unstable();
        for pair in nodes.windows(2) {
            if pair[0] == pair[1] {
                return Err(RootSystemError::DuplicateLeviNode { node: pair[0] });
            }
        }
        if let Some(&bad) = nodes.iter().find(|&&n| n == 0 || n > rank) {
            return Err(RootSystemError::LeviNodeOutOfRange { node: bad, rank });
        }
        Ok(LeviSpec { nodes, rank })
    }

    /// The Borel case: no semisimple part, `H` a maximal torus.
    pub fn empty(root_system: &RootSystem) -> LeviSpec {
        LeviSpec {
            nodes: Vec::new(),
            rank: root_system.rank(),
        }
    }

    /// All nodes: `H = G`.
    pub fn full(root_system: &RootSystem) -> LeviSpec {
        LeviSpec {
            nodes: (1..=root_system.rank()).collect(),
            rank: root_system.rank(),
        }
    }

    /// Sorted 1-based node indices.
    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn contains(&self, node: usize) -> bool {
        self.nodes.binary_search(&node).is_ok()
    }
}

/// A compact group up to isogeny: a product of simple components and a
/// central torus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    simple_components: Vec<SimpleType>,
    torus_rank: usize,
}

impl GroupSpec {
    pub fn new(mut simple_components: Vec<SimpleType>, torus_rank: usize) -> GroupSpec {
        simple_components.sort();
        GroupSpec {
            simple_components,
            torus_rank,
        }
    }

    pub fn torus(rank: usize) -> GroupSpec {
        GroupSpec::new(Vec::new(), rank)
    }

    pub fn simple_components(&self) -> &[SimpleType] {
        &self.simple_components
    }

    pub fn torus_rank(&self) -> usize {
        self.torus_rank
    }

    pub fn total_rank(&self) -> usize {
        self.simple_components
            .iter()
            .map(|c| c.rank())
            .sum::<usize>()
            + self.torus_rank
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for c in &self.simple_components {
            if !first {
                write!(f, " x ")?;
            }
            write!(f, "{c}")?;
            first = false;
        }
        if self.torus_rank > 0 {
            if !first {
                write!(f, " x ")?;
            }
            write!(f, "T^{}", self.torus_rank)?;
            first = false;
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Splits the induced subdiagram on the Levi nodes into connected
/// components, classifies each by type recognition on its sub-Cartan
/// matrix, and records the leftover rank as central torus rank.
pub fn levi_decompose(
    root_system: &RootSystem,
    levi: &LeviSpec,
) -> Result<GroupSpec, RootSystemError> {
    let cartan = root_system.cartan_matrix();
    let nodes = levi.nodes(); // sorted, 1-based

    let mut components: Vec<SimpleType> = Vec::new();
    let mut assigned = vec![false; nodes.len()];
    for start in 0..nodes.len() {
        if assigned[start] {
            continue;
        }
        // gather the connected component of nodes[start], as 0-based indices
        let mut component: Vec<usize> = vec![nodes[start] - 1];
        assigned[start] = true;
        let mut cursor = 0;
        while cursor < component.len() {
            let u = component[cursor];
            cursor += 1;
            for (pos, &node) in nodes.iter().enumerate() {
                let v = node - 1;
                if !assigned[pos] && cartan[u][v] != 0 {
                    assigned[pos] = true;
                    component.push(v);
                }
            }
        }
        components.push(classify_component(cartan, &component)?);
    }

    Ok(GroupSpec::new(
        components,
        root_system.rank() - nodes.len(),
    ))
}

/// Recognizes the simple type of one connected induced subdiagram, given as
/// 0-based node indices into the ambient Cartan matrix.
fn classify_component(
    cartan: &[Vec<i64>],
    component: &[usize],
) -> Result<SimpleType, RootSystemError> {
    let k = component.len();
    let unrecognized = || RootSystemError::UnrecognizedDiagram {
        nodes: component.iter().map(|&v| v + 1).collect(),
    };
    if k == 1 {
        return SimpleType::new(CartanType::A, 1);
    }

    // adjacency with bond multiplicities a_uv * a_vu in {1, 2, 3}
    let mut neighbors: Vec<Vec<usize>> = vec![Vec::new(); k];
    let mut edges: Vec<(usize, usize, i64)> = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let (u, v) = (component[i], component[j]);
            if cartan[u][v] != 0 {
                neighbors[i].push(j);
                neighbors[j].push(i);
                edges.push((i, j, cartan[u][v] * cartan[v][u]));
            }
        }
    }
    if edges.len() != k - 1 {
        return Err(unrecognized()); // a cycle: not a finite-type diagram
    }

    let max_bond = edges.iter().map(|&(_, _, m)| m).max().unwrap();
    if max_bond == 3 {
        return if k == 2 {
            SimpleType::new(CartanType::G, 2)
        } else {
            Err(unrecognized())
        };
    }

    let degrees: Vec<usize> = neighbors.iter().map(Vec::len).collect();
    if max_bond == 2 {
        if edges.iter().filter(|&&(_, _, m)| m == 2).count() != 1
            || degrees.iter().any(|&d| d > 2)
        {
            return Err(unrecognized());
        }
        if k == 2 {
            return SimpleType::new(CartanType::B, 2);
        }
        // walk the path from one leaf and place the double bond
        let path = path_order(&neighbors).ok_or_else(unrecognized)?;
        let double_at = (0..k - 1)
            .find(|&i| {
                let (u, v) = (component[path[i]], component[path[i + 1]]);
                cartan[u][v] * cartan[v][u] == 2
            })
            .unwrap();
        if double_at == 0 || double_at == k - 2 {
            // orient so the double bond sits at the far end
            let (before, after) = if double_at == k - 2 {
                (component[path[k - 2]], component[path[k - 1]])
            } else {
                (component[path[1]], component[path[0]])
            };
            // arrow toward the short root: last node short means type B
            return if cartan[before][after] == -2 {
                SimpleType::new(CartanType::B, k)
            } else {
                SimpleType::new(CartanType::C, k)
            };
        }
        if k == 4 && double_at == 1 {
            return SimpleType::new(CartanType::F, 4);
        }
        return Err(unrecognized());
    }

    // simply laced: a path is type A, one trivalent node is type D or E
    let trivalent: Vec<usize> = (0..k).filter(|&i| degrees[i] == 3).collect();
    match trivalent.len() {
        0 => SimpleType::new(CartanType::A, k),
        1 => {
            let center = trivalent[0];
            let mut branch_lengths: Vec<usize> = neighbors[center]
                .iter()
                .map(|&first| {
                    let mut len = 1;
                    let mut prev = center;
                    let mut at = first;
                    while let Some(&next) =
                        neighbors[at].iter().find(|&&n| n != prev)
                    {
                        prev = at;
                        at = next;
                        len += 1;
                    }
                    len
                })
                .collect();
            branch_lengths.sort_unstable();
            match branch_lengths.as_slice() {
                [1, 1, _] => SimpleType::new(CartanType::D, k),
                [1, 2, 2] => SimpleType::new(CartanType::E, 6),
                [1, 2, 3] => SimpleType::new(CartanType::E, 7),
                [1, 2, 4] => SimpleType::new(CartanType::E, 8),
                _ => Err(unrecognized()),
            }
        }
        _ => Err(unrecognized()),
    }
}

/// Orders the nodes of a path graph from one leaf to the other; `None` if
/// the graph is not a path.
fn path_order(neighbors: &[Vec<usize>]) -> Option<Vec<usize>> {
    let k = neighbors.len();
    let start = (0..k).find(|&i| neighbors[i].len() == 1)?;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut at = start;
    while order.len() < k {
        let &next = neighbors[at].iter().find(|&&n| n != prev)?;
        prev = at;
        at = next;
        order.push(at);
    }
    Some(order)
}

/// Exponent multiset of a product group: the union over the simple
/// components plus one zero exponent (degree 1) per torus factor.
pub fn levi_exponents(group_spec: &GroupSpec) -> ExponentSet {
    let mut acc = ExponentSet::torus(group_spec.torus_rank());
    for &component in group_spec.simple_components() {
        let rs = RootSystem::from_simple_type(component);
        acc = acc.union(&exponents(&rs));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(ct: CartanType, rank: usize) -> RootSystem {
        RootSystem::new(ct, rank).unwrap()
    }

    fn decompose(root: &RootSystem, nodes: &[usize]) -> GroupSpec {
        let levi = LeviSpec::new(root, nodes.iter().copied()).unwrap();
        levi_decompose(root, &levi).unwrap()
    }

    #[test]
    fn levi_spec_validation() {
        let a3 = rs(CartanType::A, 3);
        assert!(LeviSpec::new(&a3, [1, 3]).is_ok());
        assert!(matches!(
            LeviSpec::new(&a3, [1, 1]),
            Err(RootSystemError::DuplicateLeviNode { node: 1 })
        ));
        assert!(matches!(
            LeviSpec::new(&a3, [0]),
            Err(RootSystemError::LeviNodeOutOfRange { node: 0, .. })
        ));
        assert!(matches!(
            LeviSpec::new(&a3, [4]),
            Err(RootSystemError::LeviNodeOutOfRange { node: 4, .. })
        ));
    }

    #[test]
    fn a3_disconnected_nodes_give_two_a1() {
        let a3 = rs(CartanType::A, 3);
        let spec = decompose(&a3, &[1, 3]);
        assert_eq!(
            spec.simple_components(),
            &[
                SimpleType::new(CartanType::A, 1).unwrap(),
                SimpleType::new(CartanType::A, 1).unwrap(),
            ]
        );
        assert_eq!(spec.torus_rank(), 1);
        assert_eq!(spec.total_rank(), 3);
    }

    #[test]
    fn full_diagram_is_the_group_itself() {
        for (ct, rank) in [(CartanType::A, 4), (CartanType::E, 7), (CartanType::B, 3)] {
            let root = rs(ct, rank);
            let spec = decompose(&root, &(1..=rank).collect::<Vec<_>>());
            assert_eq!(spec.simple_components(), &[SimpleType::new(ct, rank).unwrap()]);
            assert_eq!(spec.torus_rank(), 0);
        }
    }

    #[test]
    fn e7_contains_e6() {
        let e7 = rs(CartanType::E, 7);
        let spec = decompose(&e7, &[1, 2, 3, 4, 5, 6]);
        assert_eq!(
            spec.simple_components(),
            &[SimpleType::new(CartanType::E, 6).unwrap()]
        );
        assert_eq!(spec.torus_rank(), 1);
        let degrees = levi_exponents(&spec).degrees();
        assert_eq!(degrees, vec![1, 3, 9, 11, 15, 17, 23]);
    }

    #[test]
    fn e7_contains_d4_around_the_fork() {
        let e7 = rs(CartanType::E, 7);
        let spec = decompose(&e7, &[2, 3, 4, 5]);
        assert_eq!(
            spec.simple_components(),
            &[SimpleType::new(CartanType::D, 4).unwrap()]
        );
    }

    #[test]
    fn e8_subdiagrams() {
        let e8 = rs(CartanType::E, 8);
        let spec = decompose(&e8, &[1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(
            spec.simple_components(),
            &[SimpleType::new(CartanType::E, 7).unwrap()]
        );
        let spec = decompose(&e8, &[2, 3, 4, 5, 6, 7, 8]);
        assert_eq!(
            spec.simple_components(),
            &[SimpleType::new(CartanType::D, 7).unwrap()]
        );
    }

    #[test]
    fn b_and_c_tails() {
        let b5 = rs(CartanType::B, 5);
        let spec = decompose(&b5, &[3, 4, 5]);
        assert_eq!(
            spec.simple_components(),
            &[SimpleType::new(CartanType::B, 3).unwrap()]
        );
        let c5 = rs(CartanType::C, 5);
        let spec = decompose(&c5, &[3, 4, 5]);
        assert_eq!(
            spec.simple_components(),
            &[SimpleType::new(CartanType::C, 3).unwrap()]
        );
        // a rank-2 double-bond component is B_2 whichever way it points
        let spec = decompose(&c5, &[4, 5]);
        assert_eq!(
            spec.simple_components(),
            &[SimpleType::new(CartanType::B, 2).unwrap()]
        );
    }

    #[test]
    fn f4_subdiagrams() {
        let f4 = rs(CartanType::F, 4);
        let spec = decompose(&f4, &[1, 2, 3, 4]);
        assert_eq!(
            spec.simple_components(),
            &[SimpleType::new(CartanType::F, 4).unwrap()]
        );
        let spec = decompose(&f4, &[2, 3, 4]);
        assert_eq!(
            spec.simple_components(),
            &[SimpleType::new(CartanType::C, 3).unwrap()]
        );
        let spec = decompose(&f4, &[1, 2, 3]);
        assert_eq!(
            spec.simple_components(),
            &[SimpleType::new(CartanType::B, 3).unwrap()]
        );
    }

    #[test]
    fn su_n_levi_pattern() {
        // S(U(p) x U(n-p)) inside SU(n): drop node p from A_{n-1}
        let n = 6;
        let p = 2;
        let a5 = rs(CartanType::A, n - 1);
        let nodes: Vec<usize> = (1..n).filter(|&i| i != p).collect();
        let spec = decompose(&a5, &nodes);
        assert_eq!(
            spec.simple_components(),
            &[
                SimpleType::new(CartanType::A, 1).unwrap(),
                SimpleType::new(CartanType::A, 3).unwrap(),
            ]
        );
        assert_eq!(spec.torus_rank(), 1);
        // degrees {1} u {3} u {3,5,7}
        assert_eq!(levi_exponents(&spec).degrees(), vec![1, 3, 3, 5, 7]);
    }

    #[test]
    fn pure_torus_exponents() {
        let spec = GroupSpec::torus(3);
        assert_eq!(levi_exponents(&spec).degrees(), vec![1, 1, 1]);
        assert_eq!(spec.to_string(), "T^3");
    }

    #[test]
    fn group_spec_display() {
        let spec = GroupSpec::new(
            vec![
                SimpleType::new(CartanType::A, 1).unwrap(),
                SimpleType::new(CartanType::E, 6).unwrap(),
            ],
            2,
        );
        assert_eq!(spec.to_string(), "A1 x E6 x T^2");
        assert_eq!(GroupSpec::torus(0).to_string(), "1");
    }
}
