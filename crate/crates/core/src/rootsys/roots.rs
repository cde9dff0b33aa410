//! Root systems: positive roots generated by closure under simple
//! reflections, stored as exact integer vectors in the simple-root basis.

use std::collections::HashSet;

use super::cartan::{CartanType, SimpleType};
use super::RootSystemError;

/// Root system of a simple compact group type. Roots are integer coordinate
/// vectors in the simple-root basis; simple roots are the unit vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    simple_type: SimpleType,
    cartan_matrix: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
}

impl RootSystem {
    /// Builds the root system for a valid simple `(type, rank)` pair by
    /// closing the simple roots under simple reflections.
    pub fn new(cartan_type: CartanType, rank: usize) -> Result<RootSystem, RootSystemError> {
        let simple_type = SimpleType::new(cartan_type, rank)?;
        Ok(Self::from_simple_type(simple_type))
    }

    pub fn from_simple_type(simple_type: SimpleType) -> RootSystem {
        let cartan_matrix = simple_type.cartan_matrix();
        let positive_roots = generate_positive_roots(&cartan_matrix);
        RootSystem {
            simple_type,
            cartan_matrix,
            positive_roots,
        }
    }

    pub fn simple_type(&self) -> SimpleType {
        self.simple_type
    }

    pub fn cartan_type(&self) -> CartanType {
        self.simple_type.cartan_type()
    }

    pub fn rank(&self) -> usize {
        self.simple_type.rank()
    }

    /// Cartan matrix `a[i][j] = <alpha_i, alpha_j^vee>`, 0-based.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan_matrix
    }

    /// Positive roots in the simple-root basis, sorted by height then
    /// lexicographically.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// Number of positive roots of each height; index 0 is height 1.
    pub fn height_distribution(&self) -> Vec<usize> {
        let mut dist = Vec::new();
        for root in &self.positive_roots {
            let h: i64 = root.iter().sum();
            let h = h as usize;
            if dist.len() < h {
                dist.resize(h, 0);
            }
            dist[h - 1] += 1;
        }
        dist
    }

    /// Image of a root-basis coordinate vector under the simple reflection
    /// `s_i` (0-based `i`): only coordinate `i` changes, by the pairing with
    /// the `i`-th coroot.
    pub fn reflect_root_coords(&self, i: usize, coords: &[i64]) -> Vec<i64> {
        let pairing: i64 = coords
            .iter()
            .enumerate()
            .map(|(j, &c)| c * self.cartan_matrix[j][i])
            .sum();
        let mut out = coords.to_vec();
        out[i] -= pairing;
        out
    }

    /// Image of a fundamental-weight-basis coordinate vector under `s_i`:
    /// `mu - mu_i * alpha_i`, with `alpha_i` expanded along row `i` of the
    /// Cartan matrix.
    pub fn reflect_weight_coords(&self, i: usize, coords: &[i64]) -> Vec<i64> {
        let c = coords[i];
        if c == 0 {
            return coords.to_vec();
        }
        let mut out = coords.to_vec();
        for (j, slot) in out.iter_mut().enumerate() {
            *slot -= c * self.cartan_matrix[i][j];
        }
        out
    }

    /// Applies a word in simple reflections (leftmost letter acts last) to a
    /// root-basis vector, i.e. the image under `s_{w_1} s_{w_2} ... s_{w_k}`.
    pub fn apply_word_to_root(&self, word: &[u16], coords: &[i64]) -> Vec<i64> {
        let mut v = coords.to_vec();
        for &i in word.iter().rev() {
            v = self.reflect_root_coords(i as usize, &v);
        }
        v
    }

    /// Coxeter length of the element `s_{w_1} ... s_{w_k}`, computed as the
    /// number of positive roots it maps to negative roots.
    pub fn length_by_inversions(&self, word: &[u16]) -> usize {
        self.positive_roots
            .iter()
            .filter(|root| {
                let image = self.apply_word_to_root(word, root);
                image.iter().all(|&c| c <= 0)
            })
            .count()
    }
}

fn generate_positive_roots(cartan_matrix: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let rank = cartan_matrix.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: Vec<Vec<i64>> = Vec::new();

    for i in 0..rank {
        let mut simple = vec![0i64; rank];
        simple[i] = 1;
        seen.insert(simple.clone());
        queue.push(simple);
    }

    while let Some(root) = queue.pop() {
        for i in 0..rank {
            let pairing: i64 = root
                .iter()
                .enumerate()
                .map(|(j, &c)| c * cartan_matrix[j][i])
                .sum();
            let mut image = root.clone();
            image[i] -= pairing;
            // roots have uniformly signed coordinates; keep the positive ones
            if image.iter().all(|&c| c >= 0) && seen.insert(image.clone()) {
                queue.push(image);
            }
        }
    }

    let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
    roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(ct: CartanType, rank: usize) -> usize {
        RootSystem::new(ct, rank).unwrap().num_positive_roots()
    }

    #[test]
    fn a1_is_the_rank_one_case() {
        let rs = RootSystem::new(CartanType::A, 1).unwrap();
        assert_eq!(rs.num_positive_roots(), 1);
        assert_eq!(rs.cartan_matrix(), &[vec![2]]);
        assert_eq!(rs.positive_roots(), &[vec![1]]);
    }

    #[test]
    fn a2_has_three_positive_roots() {
        assert_eq!(count(CartanType::A, 2), 3);
    }

    #[test]
    fn e7_has_sixty_three_positive_roots() {
        assert_eq!(count(CartanType::E, 7), 63);
    }

    #[test]
    fn classical_and_exceptional_root_counts() {
        assert_eq!(count(CartanType::A, 5), 15); // n(n+1)/2
        assert_eq!(count(CartanType::B, 4), 16); // n^2
        assert_eq!(count(CartanType::C, 4), 16); // n^2
        assert_eq!(count(CartanType::D, 5), 20); // n(n-1)
        assert_eq!(count(CartanType::E, 6), 36);
        assert_eq!(count(CartanType::E, 8), 120);
        assert_eq!(count(CartanType::F, 4), 24);
        assert_eq!(count(CartanType::G, 2), 6);
    }

    #[test]
    fn simple_roots_are_unit_vectors_and_coords_nonnegative() {
        let rs = RootSystem::new(CartanType::F, 4).unwrap();
        for i in 0..4 {
            let mut unit = vec![0i64; 4];
            unit[i] = 1;
            assert!(rs.positive_roots().contains(&unit));
        }
        for root in rs.positive_roots() {
            assert!(root.iter().all(|&c| c >= 0));
        }
    }

    #[test]
    fn g2_highest_root() {
        let rs = RootSystem::new(CartanType::G, 2).unwrap();
        assert!(rs.positive_roots().contains(&vec![3, 2]));
        assert_eq!(rs.height_distribution(), vec![2, 1, 1, 1, 1]);
    }

    #[test]
    fn reflection_negates_own_simple_root() {
        let rs = RootSystem::new(CartanType::B, 3).unwrap();
        let alpha_0 = vec![1, 0, 0];
        assert_eq!(rs.reflect_root_coords(0, &alpha_0), vec![-1, 0, 0]);
    }

    #[test]
    fn longest_element_length_equals_root_count() {
        // In A_2 the word s1 s2 s1 is the longest element, flipping all
        // three positive roots.
        let rs = RootSystem::new(CartanType::A, 2).unwrap();
        assert_eq!(rs.length_by_inversions(&[0, 1, 0]), 3);
        assert_eq!(rs.length_by_inversions(&[]), 0);
        assert_eq!(rs.length_by_inversions(&[0]), 1);
    }
}
