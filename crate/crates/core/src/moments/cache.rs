//! Persistent moment cache: JSON-lines file, one record per converged
//! moment, keyed by the canonical spec string and the exact tolerance.
//! Reads are exact-match only; appends are serialized.

use crate::error::Result;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::{Mutex, RwLock};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CacheRecord {
    pub key: String,
    pub tol: f64,
    pub value: f64,
    pub err: f64,
    pub engine: String,
}

#[derive(Debug, Default)]
pub struct MomentCache {
    map: RwLock<HashMap<(String, u64), CacheRecord>>,
    file: Option<(PathBuf, Mutex<()>)>,
    hits: RwLock<u64>,
}

fn key_of(key: &str, tol: f64) -> (String, u64) {
    (key.to_owned(), tol.to_bits())
}

impl MomentCache {
    /// In-memory cache only.
    pub fn in_memory() -> MomentCache {
        MomentCache::default()
    }

    /// File-backed cache; loads existing records if the file exists.
    pub fn open(path: &Path) -> Result<MomentCache> {
        let mut map = HashMap::new();
        if path.exists() {
            let f = std::fs::File::open(path)?;
            for line in BufReader::new(f).lines() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                if let Ok(rec) = serde_json::from_str::<CacheRecord>(&line) {
                    map.insert(key_of(&rec.key, rec.tol), rec);
                }
            }
        }
        Ok(MomentCache {
            map: RwLock::new(map),
            file: Some((path.to_owned(), Mutex::new(()))),
            hits: RwLock::new(0),
        })
    }

    pub fn get(&self, key: &str, tol: f64) -> Option<CacheRecord> {
        let r = self.map.read().unwrap().get(&key_of(key, tol)).cloned();
        if r.is_some() {
            *self.hits.write().unwrap() += 1;
        }
        r
    }

    pub fn insert(&self, rec: CacheRecord) {
        let k = key_of(&rec.key, rec.tol);
        {
            let mut m = self.map.write().unwrap();
            if m.contains_key(&k) {
                return;
            }
            m.insert(k, rec.clone());
        }
        if let Some((path, lock)) = &self.file {
            let _guard = lock.lock().unwrap();
            if let Ok(mut f) = std::fs::OpenOptions::new().create(true).append(true).open(path) {
                let _ = writeln!(f, "{}", serde_json::to_string(&rec).unwrap());
            }
        }
    }

    pub fn len(&self) -> usize {
        self.map.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn hits(&self) -> u64 {
        *self.hits.read().unwrap()
    }

    pub fn clear(&self) -> Result<()> {
        self.map.write().unwrap().clear();
        if let Some((path, lock)) = &self.file {
            let _guard = lock.lock().unwrap();
            if path.exists() {
                std::fs::remove_file(path)?;
            }
        }
        Ok(())
    }

    /// All records in deterministic (key-sorted) order.
    pub fn export(&self) -> Vec<CacheRecord> {
        let m = self.map.read().unwrap();
        let mut recs: Vec<CacheRecord> = m.values().cloned().collect();
        recs.sort_by(|a, b| (&a.key, a.tol.to_bits()).cmp(&(&b.key, b.tol.to_bits())));
        recs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_exact_match() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.jsonl");
        let c = MomentCache::open(&path).unwrap();
        c.insert(CacheRecord {
            key: "IKM(1,2;1)".into(),
            tol: 1e-12,
            value: 0.6,
            err: 1e-13,
            engine: "test".into(),
        });
        assert!(c.get("IKM(1,2;1)", 1e-12).is_some());
        assert!(c.get("IKM(1,2;1)", 1e-11).is_none(), "tolerance must match exactly");
        drop(c);
        let c2 = MomentCache::open(&path).unwrap();
        assert_eq!(c2.len(), 1);
        assert_eq!(c2.get("IKM(1,2;1)", 1e-12).unwrap().value, 0.6);
    }
}
