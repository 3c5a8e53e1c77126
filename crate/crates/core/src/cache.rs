//! On-disk cache of enumerated subgroup lattices.
//!
//! Files are JSON, named by the SHA-256 of the group's multiplication table.
//! A cache entry only stores the node list; everything else is rebuilt, so a
//! hit yields the same lattice as a fresh enumeration.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::bitset::ElementSet;
use crate::error::Result;
use crate::group::FiniteGroup;
use crate::lattice::{enumerate_subgroups, SubgroupLattice};

pub const CACHE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    key: String,
    order: usize,
    nodes: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CacheOutcome {
    Hit,
    Miss,
    /// The file existed but was unusable; the lattice was recomputed.
    Corrupt(String),
}

pub struct LatticeCache {
    dir: PathBuf,
}

pub fn table_key(g: &FiniteGroup) -> String {
    hex::encode(Sha256::digest(g.table_bytes()))
}

impl LatticeCache {
    pub fn new(dir: impl AsRef<Path>) -> Result<Self> {
        fs::create_dir_all(dir.as_ref())?;
        Ok(LatticeCache { dir: dir.as_ref().to_path_buf() })
    }

    pub fn path_for(&self, g: &FiniteGroup) -> PathBuf {
        self.dir.join(format!("{}.json", table_key(g)))
    }

    fn load(&self, g: &Arc<FiniteGroup>, path: &Path) -> std::result::Result<SubgroupLattice, String> {
        let text = fs::read_to_string(path).map_err(|e| e.to_string())?;
        let file: CacheFile = serde_json::from_str(&text).map_err(|e| e.to_string())?;
        if file.version != CACHE_VERSION {
            return Err(format!("version {} != {CACHE_VERSION}", file.version));
        }
        if file.key != table_key(g) || file.order != g.order() {
            return Err("key does not match the group".into());
        }
        if file.nodes.iter().flatten().any(|&x| x >= g.order()) {
            return Err("element index out of range".into());
        }
        let nodes = file
            .nodes
            .iter()
            .map(|n| ElementSet::from_indices(g.order(), n.iter().copied()))
            .collect();
        let l = SubgroupLattice::from_nodes(Arc::clone(g), nodes).map_err(|e| e.to_string())?;
        if let Some(x) = (0..g.order()).find(|&x| l.index_of(&g.generate(&[x])).is_none()) {
            return Err(format!("cyclic subgroup generated by element {x} is missing"));
        }
        Ok(l)
    }

    pub fn store(&self, l: &SubgroupLattice) -> Result<()> {
        let g = l.group();
        let file = CacheFile {
            version: CACHE_VERSION,
            key: table_key(g),
            order: g.order(),
            nodes: l.nodes().iter().map(|s| s.to_vec()).collect(),
        };
        let path = self.path_for(g);
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, serde_json::to_vec(&file)?)?;
        fs::rename(tmp, path)?;
        Ok(())
    }

    /// Loads the lattice of `g` from the cache or enumerates and stores it.
    pub fn lattice(&self, g: impl Into<Arc<FiniteGroup>>, max_nodes: usize) -> Result<(SubgroupLattice, CacheOutcome)> {
        let g = g.into();
        let path = self.path_for(&g);
        let mut outcome = CacheOutcome::Miss;
        if path.exists() {
            match self.load(&g, &path) {
                Ok(l) if l.len() <= max_nodes => return Ok((l, CacheOutcome::Hit)),
                Ok(_) => outcome = CacheOutcome::Corrupt("cached lattice exceeds node cap".into()),
                Err(e) => outcome = CacheOutcome::Corrupt(e),
            }
        }
        let l = enumerate_subgroups(g, max_nodes)?;
        self.store(&l)?;
        Ok((l, outcome))
    }
}
