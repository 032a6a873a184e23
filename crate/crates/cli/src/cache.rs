//! On-disk cache of symbolic expansions, one JSON file per `(Λ, N)`.
//!
//! Entries are written to a temporary file and renamed into place. On load
//! an entry is rejected if its version tag or key differs, if it fails to
//! parse, or if `D P = e_Λ P` does not hold; rejected entries are removed
//! with a warning on stderr and the caller recomputes.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use superjack::coeffring::AlphaRational;
use superjack::jack::JackExpansion;
use superjack::ops::op_d;
use superjack::spart::SuperPartition;

pub const CACHE_VERSION: &str = "superjack-cache-1";

#[derive(Debug, Serialize, Deserialize)]
struct Entry {
    version: String,
    key: String,
    coeffs: Vec<(String, String)>,
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

pub fn entry_key(label: &SuperPartition, nvars: usize) -> String {
    format!("jack:{}:N={nvars}", label.key())
}

fn file_name(key: &str) -> String {
    let body: String = key
        .chars()
        .map(|c| match c {
            ';' => '_',
            ',' => '-',
            ':' => '+',
            '=' => '~',
            c => c,
        })
        .collect();
    format!("{body}.json")
}

fn warn(msg: &str) {
    eprintln!("warning: {msg}");
}

impl Cache {
    pub fn new(dir: PathBuf) -> Cache {
        Cache { dir }
    }

    /// `--cache-dir`, else `SUPERJACK_CACHE`, else the config file, else
    /// `$XDG_CACHE_HOME/superjack` or `~/.cache/superjack`.
    pub fn resolve_dir(flag: Option<&Path>, config: Option<&Path>) -> Option<PathBuf> {
        if let Some(d) = flag {
            return Some(d.to_path_buf());
        }
        if let Some(d) = std::env::var_os("SUPERJACK_CACHE") {
            return Some(PathBuf::from(d));
        }
        if let Some(d) = config {
            return Some(d.to_path_buf());
        }
        std::env::var_os("XDG_CACHE_HOME")
            .map(PathBuf::from)
            .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))
            .map(|b| b.join("superjack"))
    }

    pub fn path_for(&self, label: &SuperPartition, nvars: usize) -> PathBuf {
        self.dir.join(file_name(&entry_key(label, nvars)))
    }

    fn evict(&self, path: &Path, why: &str) {
        warn(&format!("evicting cache entry {}: {why}", path.display()));
        let _ = fs::remove_file(path);
    }

    pub fn load(&self, label: &SuperPartition, nvars: usize) -> Option<JackExpansion> {
        let path = self.path_for(label, nvars);
        let text = fs::read_to_string(&path).ok()?;
        match decode(&text, label, nvars) {
            Ok(j) => Some(j),
            Err(why) => {
                self.evict(&path, &why);
                None
            }
        }
    }

    /// Best effort: a failed write only produces a warning.
    pub fn store(&self, j: &JackExpansion) {
        if let Err(e) = self.try_store(j) {
            warn(&format!("cannot write cache entry for {} in {}: {e}", j.label, self.dir.display()));
        }
    }

    fn try_store(&self, j: &JackExpansion) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let entry = Entry {
            version: CACHE_VERSION.to_string(),
            key: entry_key(&j.label, j.nvars),
            coeffs: j.ordered().into_iter().map(|(l, c)| (l.key(), c.to_string())).collect(),
        };
        let body = serde_json::to_string_pretty(&entry).map_err(std::io::Error::other)?;
        let target = self.path_for(&j.label, j.nvars);
        let tmp = self.dir.join(format!(".{}.{}.tmp", file_name(&entry.key), std::process::id()));
        let mut f = fs::File::create(&tmp)?;
        f.write_all(body.as_bytes())?;
        f.sync_all()?;
        drop(f);
        fs::rename(&tmp, &target).inspect_err(|_| {
            let _ = fs::remove_file(&tmp);
        })
    }
}

fn decode(text: &str, label: &SuperPartition, nvars: usize) -> Result<JackExpansion, String> {
    let entry: Entry = serde_json::from_str(text).map_err(|e| format!("unreadable: {e}"))?;
    if entry.version != CACHE_VERSION {
        return Err(format!("version {:?}, expected {CACHE_VERSION:?}", entry.version));
    }
    if entry.key != entry_key(label, nvars) {
        return Err(format!("key {:?} does not match", entry.key));
    }
    let mut coeffs = BTreeMap::new();
    for (l, c) in &entry.coeffs {
        let l = SuperPartition::parse(l).map_err(|e| e.to_string())?;
        let c: AlphaRational = c.parse().map_err(|e| format!("bad coefficient {c:?}: {e}"))?;
        coeffs.insert(l, c);
    }
    if coeffs.get(label) != Some(&AlphaRational::from_i64(1)) {
        return Err("leading coefficient is not 1".into());
    }
    let j = JackExpansion { label: label.clone(), nvars, coeffs };
    let p = j.to_poly();
    let e = AlphaRational::from_poly(label.d_eigenvalue());
    match op_d(&p, &AlphaRational::alpha()) {
        Ok(dp) if dp == p.scale(&e) => Ok(j),
        _ => Err("failed the D-eigenvalue check".into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use superjack::jack::jack_symbolic;

    #[test]
    fn file_names_are_distinct() {
        assert_ne!(file_name("jack:1,0;2:N=4"), file_name("jack:1;0,2:N=4"));
        assert_eq!(file_name("jack:1,0;2:N=4"), "jack+1-0_2+N~4.json");
    }

    #[test]
    fn round_trip_and_tamper() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path().to_path_buf());
        let l = SuperPartition::parse("1;2").unwrap();
        let j = jack_symbolic(&l, 3).unwrap();
        cache.store(&j);
        assert_eq!(cache.load(&l, 3).as_ref(), Some(&*j));
        let path = cache.path_for(&l, 3);
        let text = fs::read_to_string(&path).unwrap();
        let bad = text.replacen("\"1\"", "\"2\"", 1);
        assert_ne!(bad, text);
        fs::write(&path, bad).unwrap();
        assert!(cache.load(&l, 3).is_none());
        assert!(!path.exists());
    }
}
