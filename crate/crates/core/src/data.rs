//! Shipped data files and their checksum manifest.
//!
//! A file inside the data directory must be listed in `MANIFEST.sha256`
//! (sha256sum format) with a matching digest. Files elsewhere are user
//! inputs and are read as they are.

use crate::error::{Error, Result};
use crate::poincare::{Fixture, RationalSeries};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

pub const MANIFEST: &str = "MANIFEST.sha256";

#[derive(Clone, Debug)]
pub struct DataDir {
    root: PathBuf,
    manifest: BTreeMap<String, String>,
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

impl DataDir {
    /// The directory shipped with the crate.
    pub fn default_path() -> PathBuf {
        Path::new(env!("CARGO_MANIFEST_DIR")).join("data")
    }

    pub fn bundled() -> Result<Self> {
        Self::open(Self::default_path())
    }

    pub fn open(root: impl Into<PathBuf>) -> Result<Self> {
        let root: PathBuf = root.into();
        let mpath = root.join(MANIFEST);
        let text = read_file(&mpath)?;
        let mut manifest = BTreeMap::new();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let (hash, name) = line
                .split_once("  ")
                .ok_or_else(|| Error::parse(i + 1, "expected '<sha256>  <file>'").in_file(&mpath))?;
            if hash.len() != 64 || !hash.bytes().all(|b| b.is_ascii_hexdigit()) {
                return Err(Error::parse(i + 1, "malformed digest").in_file(&mpath));
            }
            manifest.insert(name.trim().to_string(), hash.to_ascii_lowercase());
        }
        Ok(DataDir { root, manifest })
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.manifest.keys().map(|s| s.as_str())
    }

    /// A bare file name refers to the data directory; anything with a
    /// path separator is taken as a path.
    pub fn resolve(&self, name: &str) -> PathBuf {
        if name.contains(std::path::MAIN_SEPARATOR) || name.contains('/') {
            PathBuf::from(name)
        } else {
            self.root.join(name)
        }
    }

    fn managed_name(&self, path: &Path) -> Option<String> {
        let dir = path.parent()?.canonicalize().ok()?;
        if dir == self.root.canonicalize().ok()? {
            path.file_name()?.to_str().map(String::from)
        } else {
            None
        }
    }

    pub fn read(&self, name: &str) -> Result<String> {
        let path = self.resolve(name);
        let text = read_file(&path)?;
        if let Some(file) = self.managed_name(&path) {
            let want = self.manifest.get(&file).ok_or_else(|| Error::Unlisted(path.clone()))?;
            if sha256_hex(text.as_bytes()) != *want {
                return Err(Error::Checksum(path));
            }
        }
        Ok(text)
    }

    /// Read and parse, attaching the file name to parse errors.
    pub fn parse_with<T>(&self, name: &str, f: impl FnOnce(&str) -> Result<T>) -> Result<T> {
        let text = self.read(name)?;
        f(&text).map_err(|e| e.in_file(self.resolve(name)))
    }

    pub fn fixture(&self, name: &str) -> Result<Fixture> {
        self.parse_with(name, Fixture::parse)
    }

    pub fn series(&self, name: &str) -> Result<RationalSeries> {
        self.parse_with(name, |t| Fixture::parse(t)?.to_series())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_listed_file_verifies() {
        let d = DataDir::bundled().unwrap();
        assert!(d.names().count() > 20);
        for n in d.names() {
            d.read(n).unwrap();
        }
    }

    #[test]
    fn tampering_is_detected() {
        let tmp = tempfile::tempdir().unwrap();
        std::fs::write(tmp.path().join("a.txt"), "one\n").unwrap();
        std::fs::write(tmp.path().join("b.txt"), "two\n").unwrap();
        let line = format!("{}  a.txt\n", sha256_hex(b"one\n"));
        std::fs::write(tmp.path().join(MANIFEST), line).unwrap();
        let d = DataDir::open(tmp.path()).unwrap();
        assert_eq!(d.read("a.txt").unwrap(), "one\n");
        assert!(matches!(d.read("b.txt"), Err(Error::Unlisted(_))));
        std::fs::write(tmp.path().join("a.txt"), "One\n").unwrap();
        assert!(matches!(d.read("a.txt"), Err(Error::Checksum(_))));
        assert!(matches!(d.read("missing.txt"), Err(Error::Io { .. })));
    }
}
