//! Content-addressed result cache stored as JSON lines.
//!
//! Each line is one [`CacheEntry`]. The key hashes the library version, the
//! invariant name and the pair (x, w), so a version bump invalidates every
//! entry. Lines that fail to parse or whose key does not match their fields
//! are skipped with a warning.

use std::collections::HashMap;
use std::fs::{self, File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use log::warn;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const FILE_NAME: &str = "cache.jsonl";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: String,
    pub x: String,
    pub w: String,
    pub invariant: String,
    pub version: String,
    pub value: Value,
    pub timestamp: u64,
}

pub fn cache_key(version: &str, invariant: &str, x: &str, w: &str) -> String {
    let mut h = Sha256::new();
    for part in [version, invariant, x, w] {
        h.update(part.as_bytes());
        h.update([0u8]);
    }
    hex::encode(h.finalize())
}

pub struct Cache {
    path: PathBuf,
    version: String,
    entries: HashMap<String, Value>,
    skipped: usize,
}

impl Cache {
    /// Opens (creating if needed) the cache file in `dir`.
    pub fn open(dir: &Path, version: &str) -> io::Result<Self> {
        fs::create_dir_all(dir)?;
        let path = dir.join(FILE_NAME);
        let mut entries = HashMap::new();
        let mut skipped = 0;
        if path.exists() {
            for (lineno, line) in BufReader::new(File::open(&path)?).lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                match serde_json::from_str::<CacheEntry>(&line) {
                    Ok(e) if e.key == cache_key(&e.version, &e.invariant, &e.x, &e.w) => {
                        entries.insert(e.key, e.value);
                    }
                    Ok(_) => {
                        warn!("{}:{}: key does not match entry, skipped", path.display(), lineno + 1);
                        skipped += 1;
                    }
                    Err(err) => {
                        warn!("{}:{}: corrupt cache line skipped ({err})", path.display(), lineno + 1);
                        skipped += 1;
                    }
                }
            }
        }
        Ok(Self { path, version: version.to_string(), entries, skipped })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// Number of lines ignored while loading.
    pub fn skipped(&self) -> usize {
        self.skipped
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, invariant: &str, x: &str, w: &str) -> Option<&Value> {
        self.entries.get(&cache_key(&self.version, invariant, x, w))
    }

    /// Records a value, appending one line to the file.
    pub fn put(&mut self, invariant: &str, x: &str, w: &str, value: Value) -> io::Result<()> {
        let key = cache_key(&self.version, invariant, x, w);
        let timestamp = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        let entry = CacheEntry {
            key: key.clone(),
            x: x.to_string(),
            w: w.to_string(),
            invariant: invariant.to_string(),
            version: self.version.clone(),
            value: value.clone(),
            timestamp,
        };
        let mut line = serde_json::to_string(&entry).map_err(io::Error::other)?;
        line.push('\n');
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
        file.write_all(line.as_bytes())?;
        self.entries.insert(key, value);
        Ok(())
    }
}
