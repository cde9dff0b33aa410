//! Group expression parsing: `TYPE RANK` with an optional Levi node list.

use std::fmt;

use thiserror::Error;

use crate::rootsys::{CartanType, RootSystemError, SimpleType};

/// Largest rank the command line accepts; root storage grows quadratically
/// and nothing beyond this is remotely tractable downstream.
pub const MAX_CLI_RANK: usize = 200;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupExprError {
    #[error("parse error at position {position}: expected {expected}")]
    Parse { position: usize, expected: String },
    #[error("invalid rank: {0}")]
    Rank(RootSystemError),
    #[error("rank {rank} exceeds the command-line limit of {MAX_CLI_RANK}")]
    RankTooLarge { rank: usize },
}

/// A parsed group expression such as `E7` or `a3` with an optional Levi
/// node list attached from the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupExpr {
    source: String,
    simple_type: SimpleType,
    levi_nodes: Option<Vec<usize>>,
}

impl GroupExpr {
    pub fn simple_type(&self) -> SimpleType {
        self.simple_type
    }

    pub fn cartan_type(&self) -> CartanType {
        self.simple_type.cartan_type()
    }

    pub fn rank(&self) -> usize {
        self.simple_type.rank()
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn levi_nodes(&self) -> Option<&[usize]> {
        self.levi_nodes.as_deref()
    }

    pub fn with_levi_nodes(mut self, nodes: Vec<usize>) -> GroupExpr {
        self.levi_nodes = Some(nodes);
        self
    }

    /// Canonical form: upper-case letter, no whitespace, sorted node list.
    pub fn render(&self) -> String {
        match &self.levi_nodes {
            None => format!("{}", self.simple_type),
            Some(nodes) => {
                let list: Vec<String> = nodes.iter().map(|n| n.to_string()).collect();
                format!("{} --levi {}", self.simple_type, list.join(","))
            }
        }
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Parses `TYPE RANK`, whitespace-insensitive and case-insensitive in the
/// type letter: `E7`, `a3`, ` B 12 `.
pub fn parse_group_expr(text: &str) -> Result<GroupExpr, GroupExprError> {
    let mut chars = text.char_indices().peekable();

    let (letter_pos, letter) = loop {
        match chars.next() {
            Some((_, c)) if c.is_whitespace() => continue,
            Some((i, c)) => break (i, c),
            None => {
                return Err(GroupExprError::Parse {
                    position: text.len(),
                    expected: "type letter A-G".into(),
                })
            }
        }
    };
    let cartan_type = CartanType::from_letter(letter).ok_or_else(|| GroupExprError::Parse {
        position: letter_pos,
        expected: "type letter A-G".into(),
    })?;

    let mut digits = String::new();
    for (i, c) in chars {
        if c.is_whitespace() {
            continue;
        }
        if c.is_ascii_digit() {
            digits.push(c);
        } else {
            return Err(GroupExprError::Parse {
                position: i,
                expected: "rank digit".into(),
            });
        }
    }
    if digits.is_empty() {
        return Err(GroupExprError::Parse {
            position: text.len(),
            expected: "rank digit".into(),
        });
    }

    let rank: usize = digits.parse().map_err(|_| GroupExprError::RankTooLarge {
        rank: usize::MAX,
    })?;
    if rank > MAX_CLI_RANK {
        return Err(GroupExprError::RankTooLarge { rank });
    }
    let simple_type = SimpleType::new(cartan_type, rank).map_err(GroupExprError::Rank)?;

    Ok(GroupExpr {
        source: text.to_string(),
        simple_type,
        levi_nodes: None,
    })
}

/// Parses a `--levi` argument: either a comma-separated node list like
/// `1,3` or the named alias `@E6` for the E6 subdiagram of E7.
pub fn parse_levi_nodes(text: &str, group: &GroupExpr) -> Result<Vec<usize>, GroupExprError> {
    let trimmed = text.trim();
    if let Some(alias) = trimmed.strip_prefix('@') {
        if alias.eq_ignore_ascii_case("E6") {
            if group.cartan_type() == CartanType::E && group.rank() == 7 {
                return Ok(vec![1, 2, 3, 4, 5, 6]);
            }
            return Err(GroupExprError::Parse {
                position: 0,
                expected: format!("@E6 applies to E7, not {}", group.simple_type()),
            });
        }
        return Err(GroupExprError::Parse {
            position: 0,
            expected: "known alias (@E6)".into(),
        });
    }
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    let mut nodes = Vec::new();
    let mut offset = 0;
    for part in text.split(',') {
        let inner = part.trim();
        if inner.is_empty() || inner.parse::<usize>().is_err() {
            return Err(GroupExprError::Parse {
                position: offset,
                expected: "node index".into(),
            });
        }
        nodes.push(inner.parse().unwrap());
        offset += part.len() + 1;
    }
    Ok(nodes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_plain_expressions() {
        let e7 = parse_group_expr("E7").unwrap();
        assert_eq!(e7.cartan_type(), CartanType::E);
        assert_eq!(e7.rank(), 7);
        assert_eq!(e7.render(), "E7");
    }

    #[test]
    fn case_and_whitespace_insensitive() {
        assert_eq!(parse_group_expr("a3").unwrap().render(), "A3");
        assert_eq!(parse_group_expr("  b 1 2 ").unwrap().render(), "B12");
    }

    #[test]
    fn render_round_trips_to_canonical_form() {
        for s in ["E7", "a3", " g 2", "F4"] {
            let expr = parse_group_expr(s).unwrap();
            let again = parse_group_expr(&expr.render()).unwrap();
            assert_eq!(again.render(), expr.render());
        }
        let with_levi = parse_group_expr("a3").unwrap().with_levi_nodes(vec![1, 3]);
        assert_eq!(with_levi.render(), "A3 --levi 1,3");
    }

    #[test]
    fn e9_is_a_rank_error() {
        assert!(matches!(
            parse_group_expr("E9"),
            Err(GroupExprError::Rank(_))
        ));
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_group_expr("X4") {
            Err(GroupExprError::Parse { position, .. }) => assert_eq!(position, 0),
            other => panic!("{other:?}"),
        }
        match parse_group_expr("A4x") {
            Err(GroupExprError::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("{other:?}"),
        }
        match parse_group_expr("") {
            Err(GroupExprError::Parse { position, .. }) => assert_eq!(position, 0),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn levi_list_and_alias() {
        let e7 = parse_group_expr("E7").unwrap();
        assert_eq!(
            parse_levi_nodes("@E6", &e7).unwrap(),
            vec![1, 2, 3, 4, 5, 6]
        );
        assert_eq!(parse_levi_nodes("1, 3", &e7).unwrap(), vec![1, 3]);
        let a2 = parse_group_expr("A2").unwrap();
        assert!(parse_levi_nodes("@E6", &a2).is_err());
        assert!(parse_levi_nodes("1,,3", &a2).is_err());
        assert!(parse_levi_nodes("@Q8", &a2).is_err());
    }
}
