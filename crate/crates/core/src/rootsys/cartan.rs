//! Cartan types, rank validation, and Cartan matrices in Bourbaki numbering.
//!
//! Node numbering follows Bourbaki throughout:
//!
//! ```text
//! A_n   1 - 2 - ... - n
//! B_n   1 - 2 - ... - (n-1) => n          (n short)
//! C_n   1 - 2 - ... - (n-1) <= n          (n long)
//! D_n   1 - 2 - ... - (n-2) < n-1
//!                            \ n
//! E_n   1 - 3 - 4 - 5 - 6 [- 7 [- 8]]
//!               |
//!               2
//! F_4   1 - 2 => 3 - 4
//! G_2   1 ≡> 2                            (1 short)
//! ```

use std::fmt;

use serde::{Deserialize, Serialize};

use super::RootSystemError;

/// Series letter of a simple root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl CartanType {
    pub fn from_letter(c: char) -> Option<CartanType> {
        match c.to_ascii_uppercase() {
            'A' => Some(CartanType::A),
            'B' => Some(CartanType::B),
            'C' => Some(CartanType::C),
            'D' => Some(CartanType::D),
            'E' => Some(CartanType::E),
            'F' => Some(CartanType::F),
            'G' => Some(CartanType::G),
            _ => None,
        }
    }

    pub fn letter(self) -> char {
        match self {
            CartanType::A => 'A',
            CartanType::B => 'B',
            CartanType::C => 'C',
            CartanType::D => 'D',
            CartanType::E => 'E',
            CartanType::F => 'F',
            CartanType::G => 'G',
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A validated simple type: `A_n (n>=1)`, `B_n (n>=2)`, `C_n (n>=3)`,
/// `D_n (n>=4)`, `E_6/E_7/E_8`, `F_4`, `G_2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleType {
    cartan_type: CartanType,
    rank: usize,
}

impl SimpleType {
    pub fn new(cartan_type: CartanType, rank: usize) -> Result<SimpleType, RootSystemError> {
        let ok = match cartan_type {
            CartanType::A => rank >= 1,
            CartanType::B => rank >= 2,
            CartanType::C => rank >= 3,
            CartanType::D => rank >= 4,
            CartanType::E => (6..=8).contains(&rank),
            CartanType::F => rank == 4,
            CartanType::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { cartan_type, rank })
        } else {
            Err(RootSystemError::InvalidType { cartan_type, rank })
        }
    }

    pub fn cartan_type(self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Dynkin diagram edges as `(i, j, a_ij, a_ji)` with 1-based Bourbaki
    /// node indices and Cartan integers `a_ij = <alpha_i, alpha_j^vee>`.
    pub fn edges(self) -> Vec<(usize, usize, i64, i64)> {
        let n = self.rank;
        let mut edges = Vec::new();
        match self.cartan_type {
            CartanType::A => {
                for i in 1..n {
                    edges.push((i, i + 1, -1, -1));
                }
            }
            CartanType::B => {
                for i in 1..n - 1 {
                    edges.push((i, i + 1, -1, -1));
                }
                // alpha_n is short: <alpha_{n-1}, alpha_n^vee> = -2
                edges.push((n - 1, n, -2, -1));
            }
            CartanType::C => {
                for i in 1..n - 1 {
                    edges.push((i, i + 1, -1, -1));
                }
                // alpha_n is long: <alpha_n, alpha_{n-1}^vee> = -2
                edges.push((n - 1, n, -1, -2));
            }
            CartanType::D => {
                // chain 1..n-1 plus the fork edge (n-2, n)
                for i in 1..n - 1 {
                    edges.push((i, i + 1, -1, -1));
                }
                edges.push((n - 2, n, -1, -1));
            }
            CartanType::E => {
                edges.push((1, 3, -1, -1));
                edges.push((2, 4, -1, -1));
                for i in 3..n {
                    edges.push((i, i + 1, -1, -1));
                }
            }
            CartanType::F => {
                edges.push((1, 2, -1, -1));
                // alpha_3, alpha_4 short
                edges.push((2, 3, -2, -1));
                edges.push((3, 4, -1, -1));
            }
            CartanType::G => {
                // alpha_1 short: <alpha_2, alpha_1^vee> = -3
                edges.push((1, 2, -1, -3));
            }
        }
        edges
    }

    /// Cartan matrix `a[i][j] = <alpha_i, alpha_j^vee> = 2(a_i,a_j)/(a_j,a_j)`
    /// with 0-based indices.
    pub fn cartan_matrix(self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (i, j, aij, aji) in self.edges() {
            a[i - 1][j - 1] = aij;
            a[j - 1][i - 1] = aji;
        }
        a
    }

    /// One-line ASCII Dynkin diagram with Bourbaki node labels.
    pub fn dynkin_ascii(self) -> String {
        let n = self.rank;
        let chain = |lo: usize, hi: usize, sep: &str| -> String {
            (lo..=hi)
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(sep)
        };
        match self.cartan_type {
            CartanType::A => chain(1, n, "-"),
            CartanType::B => format!("{}=>{}", chain(1, n - 1, "-"), n),
            CartanType::C => format!("{}<={}", chain(1, n - 1, "-"), n),
            CartanType::D => format!("{}<({},{})", chain(1, n - 2, "-"), n - 1, n),
            CartanType::E => {
                let tail = chain(4, n, "-");
                format!("1-3-{tail} with 2 attached to 4")
            }
            CartanType::F => "1-2=>3-4".to_string(),
            CartanType::G => "1<#2 (triple edge, 1 short)".to_string(),
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.cartan_type, self.rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_bounds_per_series() {
        assert!(SimpleType::new(CartanType::A, 1).is_ok());
        assert!(SimpleType::new(CartanType::A, 0).is_err());
        assert!(SimpleType::new(CartanType::B, 2).is_ok());
        assert!(SimpleType::new(CartanType::B, 1).is_err());
        assert!(SimpleType::new(CartanType::C, 3).is_ok());
        assert!(SimpleType::new(CartanType::C, 2).is_err());
        assert!(SimpleType::new(CartanType::D, 4).is_ok());
        assert!(SimpleType::new(CartanType::D, 3).is_err());
        assert!(SimpleType::new(CartanType::E, 6).is_ok());
        assert!(SimpleType::new(CartanType::E, 9).is_err());
        assert!(SimpleType::new(CartanType::F, 4).is_ok());
        assert!(SimpleType::new(CartanType::F, 5).is_err());
        assert!(SimpleType::new(CartanType::G, 2).is_ok());
        assert!(SimpleType::new(CartanType::G, 3).is_err());
    }

    #[test]
    fn cartan_matrix_a1() {
        let t = SimpleType::new(CartanType::A, 1).unwrap();
        assert_eq!(t.cartan_matrix(), vec![vec![2]]);
    }

    #[test]
    fn cartan_matrix_entries_in_range() {
        let types = [
            (CartanType::A, 5),
            (CartanType::B, 4),
            (CartanType::C, 4),
            (CartanType::D, 5),
            (CartanType::E, 8),
            (CartanType::F, 4),
            (CartanType::G, 2),
        ];
        for (ct, rank) in types {
            let a = SimpleType::new(ct, rank).unwrap().cartan_matrix();
            for (i, row) in a.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    if i == j {
                        assert_eq!(v, 2);
                    } else {
                        assert!((-3..=0).contains(&v), "{ct}{rank} a[{i}][{j}] = {v}");
                    }
                }
            }
        }
    }

    #[test]
    fn g2_cartan_matrix_bourbaki() {
        let a = SimpleType::new(CartanType::G, 2).unwrap().cartan_matrix();
        assert_eq!(a, vec![vec![2, -1], vec![-3, 2]]);
    }

    #[test]
    fn f4_cartan_matrix_bourbaki() {
        let a = SimpleType::new(CartanType::F, 4).unwrap().cartan_matrix();
        assert_eq!(
            a,
            vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -2, 0],
                vec![0, -1, 2, -1],
                vec![0, 0, -1, 2],
            ]
        );
    }

    #[test]
    fn b_and_c_are_transposes() {
        let b = SimpleType::new(CartanType::B, 4).unwrap().cartan_matrix();
        let c = SimpleType::new(CartanType::C, 4).unwrap().cartan_matrix();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(b[i][j], c[j][i]);
            }
        }
    }
}
