//! The diamond JSON document: the on-disk interchange format consumed and
//! produced by the command line.
//!
//! ```json
//! {"n": 2, "h": [[1,0,1],[0,20,0],[1,0,1]], "name": "...",
//!  "closed_leaves": "infinite", "positivity": "null"}
//! ```
//!
//! Row index is `p`, column index is `q`. Keys are emitted in exactly this
//! order; optional keys are omitted when absent.

use serde::{Deserialize, Serialize};

use super::{HodgeDiamond, LeafCount, Positivity, SasakiError, SasakiStructureRecord};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiamondDocument {
    pub n: usize,
    pub h: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed_leaves: Option<LeafCount>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub positivity: Option<Positivity>,
}

impl DiamondDocument {
    pub fn from_diamond(diamond: &HodgeDiamond) -> DiamondDocument {
        DiamondDocument {
            n: diamond.n(),
            h: diamond.entries().to_vec(),
            name: None,
            closed_leaves: None,
            positivity: None,
        }
    }

    pub fn from_record(record: &SasakiStructureRecord) -> DiamondDocument {
        DiamondDocument {
            n: record.diamond.n(),
            h: record.diamond.entries().to_vec(),
            name: Some(record.name.clone()),
            closed_leaves: Some(record.closed_leaf_count),
            positivity: Some(record.positivity),
        }
    }

    pub fn diamond(&self) -> Result<HodgeDiamond, SasakiError> {
        HodgeDiamond::new(self.n, self.h.clone())
    }

    /// Interprets the document as a structure record; missing fields
    /// default to an unnamed record with unknown positivity and an
    /// infinite leaf count.
    pub fn record(&self) -> Result<SasakiStructureRecord, SasakiError> {
        Ok(SasakiStructureRecord {
            name: self.name.clone().unwrap_or_else(|| "unnamed".into()),
            diamond: self.diamond()?,
            closed_leaf_count: self.closed_leaves.unwrap_or(LeafCount::Infinite),
            positivity: self.positivity.unwrap_or(Positivity::Unknown),
        })
    }
}
