use std::io::{BufRead, Write};

use dashmap::DashMap;

use crate::error::{Error, Result};
use crate::exactnum::{parse_integer, render_integer, Integer};
use crate::indexseq::IndexSequence;

/// Concurrent memo table of ψ values.
///
/// Keys do not depend on the ambient size `n`, so one cache can serve any
/// number of queries. Concurrent inserts for the same key always carry the
/// same value; whichever lands last wins.
#[derive(Debug, Default)]
pub struct PsiCache {
    map: DashMap<IndexSequence, Integer>,
}

impl PsiCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn get(&self, key: &IndexSequence) -> Option<Integer> {
        self.map.get(key).map(|v| v.value().clone())
    }

    pub fn insert(&self, key: IndexSequence, value: Integer) {
        self.map.insert(key, value);
    }

    pub fn clear(&self) {
        self.map.clear();
    }

    /// All entries as `(canonical text, value)`, sorted by the text key.
    pub fn records(&self) -> Vec<(String, Integer)> {
        let mut out: Vec<(String, Integer)> = self
            .map
            .iter()
            .map(|e| (e.key().to_string(), e.value().clone()))
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    /// Writes one `<sequence>:<decimal value>` line per entry, sorted by key.
    pub fn save<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        for (key, value) in self.records() {
            writeln!(w, "{key}:{}", render_integer(&value))?;
        }
        w.flush()
    }

    /// Parses the line format written by [`save`](Self::save) without any
    /// re-validation of the values. Blank lines are skipped.
    pub fn parse<R: BufRead>(r: R) -> Result<Self> {
        let cache = Self::new();
        for (idx, line) in r.lines().enumerate() {
            let lineno = idx + 1;
            let line = line.map_err(|e| Error::CacheFormat {
                line: lineno,
                reason: e.to_string(),
            })?;
            if line.trim().is_empty() {
                continue;
            }
            let (key, value) = parse_record(&line).map_err(|e| Error::CacheFormat {
                line: lineno,
                reason: e.to_string(),
            })?;
            if let Some(prev) = cache.get(&key) {
                if prev != value {
                    return Err(Error::CacheFormat {
                        line: lineno,
                        reason: format!("conflicting values for key {key:?}"),
                    });
                }
            }
            cache.insert(key, value);
        }
        Ok(cache)
    }

    /// Parses a cache file, then re-evaluates `spot_checks` entries spread
    /// evenly over the sorted keys before trusting it.
    pub fn load<R: BufRead>(r: R, spot_checks: usize) -> Result<Self> {
        let cache = Self::parse(r)?;
        cache.check_coherence(spot_checks)?;
        Ok(cache)
    }

    /// Recomputes up to `sample` stored values from scratch and compares.
    /// `usize::MAX` checks every entry.
    pub fn check_coherence(&self, sample: usize) -> Result<()> {
        let mut keys: Vec<IndexSequence> = self.map.iter().map(|e| e.key().clone()).collect();
        keys.sort();
        if keys.is_empty() || sample == 0 {
            return Ok(());
        }
        let take = sample.min(keys.len());
        let scratch = PsiCache::new();
        for k in 0..take {
            let key = &keys[k * keys.len() / take];
            let stored = self.get(key).expect("key from this map");
            let expected = super::psi_closed(key, &scratch);
            if stored != expected {
                return Err(Error::CacheIncoherent {
                    key: key.clone(),
                    stored,
                    expected,
                });
            }
        }
        Ok(())
    }
}

/// Parses one `<sequence>:<decimal value>` record.
pub fn parse_record(line: &str) -> Result<(IndexSequence, Integer)> {
    let (key, value) = line.split_once(':').ok_or_else(|| Error::Parse {
        what: "cache record",
        input: line.to_owned(),
    })?;
    Ok((key.parse()?, parse_integer(value)?))
}
