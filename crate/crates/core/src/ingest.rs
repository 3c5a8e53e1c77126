//! JSON group files.
//!
//! ```json
//! {"kind":"cayley","table":[[0,1],[1,0]]}
//! {"kind":"permutation","degree":3,"generators":[[1,2,0],[1,0,2]]}
//! {"kind":"named","spec":"S4"}
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{from_permutations, FiniteGroup};
use crate::named::make_named;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GroupFile {
    Cayley {
        table: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
    },
    Permutation {
        degree: usize,
        generators: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
    },
    Named {
        spec: String,
    },
}

impl GroupFile {
    pub fn build(&self, max_order: usize) -> Result<FiniteGroup> {
        match self {
            GroupFile::Cayley { table, name } => {
                if table.len() > max_order {
                    return Err(Error::OrderCap { order: table.len() as u128, cap: max_order });
                }
                FiniteGroup::from_table(name.clone().unwrap_or_else(|| "cayley".into()), table)
            }
            GroupFile::Permutation { degree, generators, name } => {
                let g = from_permutations(*degree, generators, max_order)?;
                Ok(match name {
                    Some(n) => g.with_name(n.clone()),
                    None => g,
                })
            }
            GroupFile::Named { spec } => make_named(spec, max_order),
        }
    }
}

pub fn parse_group_json(text: &str, max_order: usize) -> Result<FiniteGroup> {
    let file: GroupFile = serde_json::from_str(text)?;
    file.build(max_order)
}

pub fn load_group_file(path: &Path, max_order: usize) -> Result<FiniteGroup> {
    parse_group_json(&std::fs::read_to_string(path)?, max_order)
}
