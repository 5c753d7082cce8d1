//! Content-addressed on-disk cache of structural sets.
//!
//! Each ring is keyed by the SHA-256 of its label, order and operation
//! tables, so any change to a table is a miss. Files are written to a
//! temporary name in the cache directory and renamed into place.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Context;
use dtring_core::theorems::SetsProvider;
use dtring_core::{RingTable, StructuralSets};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub fn fingerprint(r: &RingTable) -> String {
    let mut h = Sha256::new();
    h.update(r.label().as_bytes());
    h.update([0]);
    h.update((r.order() as u64).to_le_bytes());
    for table in [r.add_table(), r.mul_table()] {
        for cell in table {
            h.update(cell.to_le_bytes());
        }
    }
    hex::encode(h.finalize())
}

#[derive(Serialize, Deserialize)]
struct Entry {
    fingerprint: String,
    label: String,
    sets: StructuralSets,
}

#[derive(Debug, Clone)]
pub struct SetsCache {
    dir: PathBuf,
}

impl SetsCache {
    pub fn open(dir: impl Into<PathBuf>) -> anyhow::Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir).with_context(|| format!("creating cache directory {}", dir.display()))?;
        Ok(Self { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// `None` on a miss. Unreadable or inconsistent files are reported and
    /// treated as misses.
    pub fn load(&self, r: &RingTable) -> Option<StructuralSets> {
        let key = fingerprint(r);
        let path = self.path(&key);
        let bytes = match fs::read(&path) {
            Ok(b) => b,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return None,
            Err(e) => {
                tracing::warn!("ignoring unreadable cache file {}: {e}", path.display());
                return None;
            }
        };
        match serde_json::from_slice::<Entry>(&bytes) {
            Ok(entry) if entry.fingerprint == key && entry.sets.matches(r) => Some(entry.sets),
            Ok(_) => {
                tracing::warn!("ignoring cache file {} that does not match its ring", path.display());
                None
            }
            Err(e) => {
                tracing::warn!("ignoring corrupt cache file {}: {e}", path.display());
                None
            }
        }
    }

    pub fn store(&self, r: &RingTable, sets: &StructuralSets) -> anyhow::Result<()> {
        let key = fingerprint(r);
        let entry = Entry {
            fingerprint: key.clone(),
            label: r.label().to_string(),
            sets: sets.clone(),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        serde_json::to_writer(&mut tmp, &entry)?;
        tmp.flush()?;
        tmp.persist(self.path(&key))?;
        Ok(())
    }
}

impl SetsProvider for SetsCache {
    fn structural_sets(&self, r: &RingTable) -> dtring_core::Result<StructuralSets> {
        if let Some(sets) = self.load(r) {
            return Ok(sets);
        }
        let sets = StructuralSets::compute(r)?;
        if let Err(e) = self.store(r, &sets) {
            tracing::warn!("could not write cache entry for {}: {e:#}", r.label());
        }
        Ok(sets)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use dtring_core::construct::make_zn;

    #[test]
    fn round_trip_and_miss() {
        let dir = tempfile::tempdir().unwrap();
        let cache = SetsCache::open(dir.path()).unwrap();
        let z9 = make_zn(9).unwrap();
        assert!(cache.load(&z9).is_none());
        let sets = cache.structural_sets(&z9).unwrap();
        assert_eq!(cache.load(&z9), Some(sets.clone()));
        assert_eq!(sets, StructuralSets::compute(&z9).unwrap());
        assert!(cache.load(&make_zn(3).unwrap()).is_none());
        assert_ne!(fingerprint(&z9), fingerprint(&make_zn(3).unwrap()));
    }

    #[test]
    fn corrupt_files_are_recomputed() {
        let dir = tempfile::tempdir().unwrap();
        let cache = SetsCache::open(dir.path()).unwrap();
        let z4 = make_zn(4).unwrap();
        fs::write(cache.path(&fingerprint(&z4)), b"{not json").unwrap();
        assert!(cache.load(&z4).is_none());
        let sets = cache.structural_sets(&z4).unwrap();
        assert_eq!(sets.delta.to_vec(), vec![0, 2]);
        assert_eq!(cache.load(&z4), Some(sets));
    }
}
