//! Persistent memo of Gallai counts keyed by canonical form and color count.
//!
//! One JSON object per line: `{"g6": "...", "r": 3, "count": "21"}`. Lines
//! that fail to parse, name a non-canonical graph or carry a non-decimal
//! count are skipped with a warning.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use log::warn;
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::CanonicalForm;

#[derive(Serialize, Deserialize)]
struct Line {
    g6: String,
    r: usize,
    count: String,
}

#[derive(Debug, Default)]
pub struct CountCache {
    path: Option<PathBuf>,
    entries: HashMap<(String, usize), BigUint>,
    skipped: usize,
}

impl CountCache {
    pub fn in_memory() -> Self {
        CountCache::default()
    }

    /// Loads `path` if it exists; new entries are appended to it.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut cache = CountCache {
            path: Some(path.clone()),
            ..CountCache::default()
        };
        let file = match File::open(&path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(cache),
            Err(e) => return Err(e.into()),
        };
        for (number, line) in BufReader::new(file).lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            match parse_line(&line) {
                Some((form, r, count)) => {
                    cache.entries.insert((form.as_str().to_owned(), r), count);
                }
                None => {
                    warn!("{}:{}: skipping corrupt cache line", path.display(), number + 1);
                    cache.skipped += 1;
                }
            }
        }
        Ok(cache)
    }

    pub fn get(&self, form: &CanonicalForm, r: usize) -> Option<&BigUint> {
        self.entries.get(&(form.as_str().to_owned(), r))
    }

    pub fn put(&mut self, form: &CanonicalForm, r: usize, count: &BigUint) -> Result<()> {
        if let Some(path) = &self.path {
            let line = Line {
                g6: form.as_str().to_owned(),
                r,
                count: count.to_string(),
            };
            let mut file = OpenOptions::new().create(true).append(true).open(path)?;
            writeln!(
                file,
                "{}",
                serde_json::to_string(&line).expect("plain struct serializes")
            )?;
        }
        self.entries.insert((form.as_str().to_owned(), r), count.clone());
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Lines ignored while loading.
    pub fn skipped_lines(&self) -> usize {
        self.skipped
    }
}

fn parse_line(line: &str) -> Option<(CanonicalForm, usize, BigUint)> {
    let parsed: Line = serde_json::from_str(line).ok()?;
    if parsed.count.is_empty() || !parsed.count.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let count = parsed.count.parse().ok()?;
    let form = CanonicalForm::from_graph6(&parsed.g6).ok()?;
    Some((form, parsed.r, count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonical_form, Graph};

    #[test]
    fn put_then_get() {
        let mut cache = CountCache::in_memory();
        let k3 = canonical_form(&Graph::complete(3).unwrap()).unwrap();
        assert!(cache.get(&k3, 3).is_none());
        cache.put(&k3, 3, &BigUint::from(21u32)).unwrap();
        assert_eq!(cache.get(&k3, 3), Some(&BigUint::from(21u32)));
        assert!(cache.get(&k3, 4).is_none());
    }

    #[test]
    fn persists_and_skips_corrupt_lines() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("counts.jsonl");
        let k3 = canonical_form(&Graph::complete(3).unwrap()).unwrap();
        {
            let mut cache = CountCache::open(&path).unwrap();
            assert!(cache.is_empty());
            cache.put(&k3, 3, &BigUint::from(21u32)).unwrap();
        }
        let mut text = std::fs::read_to_string(&path).unwrap();
        text.push_str("not json\n");
        text.push_str("{\"g6\":\"Bg\",\"r\":3,\"count\":\"9\"}\n");
        text.push_str("{\"g6\":\"Bw\",\"r\":4,\"count\":\"-1\"}\n");
        std::fs::write(&path, text).unwrap();

        let cache = CountCache::open(&path).unwrap();
        assert_eq!(cache.len(), 1);
        assert_eq!(cache.skipped_lines(), 3);
        assert_eq!(cache.get(&k3, 3), Some(&BigUint::from(21u32)));
    }
}
