//! On-disk cache: `<dir>/<kind>/<params>.json`, one file per polynomial.

use std::fs;
use std::io::{ErrorKind, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{Kind, Route, UniversalError, UniversalId, UniversalPoly};
use crate::intpoly::Polynomial;

/// Bumped whenever the on-disk layout changes; older entries are ignored.
pub const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Entry {
    kind: Kind,
    params: Vec<u32>,
    route: Route,
    format_version: u32,
    /// SHA-256 of the canonical text form of `body`.
    digest: String,
    body: Polynomial,
}

fn digest(body: &Polynomial) -> String {
    hex::encode(Sha256::digest(body.to_string().as_bytes()))
}

#[derive(Clone, Debug)]
pub struct PolyCache {
    dir: PathBuf,
}

impl PolyCache {
    pub fn new(dir: impl Into<PathBuf>) -> PolyCache {
        PolyCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, id: UniversalId) -> PathBuf {
        self.dir.join(id.kind().as_str()).join(format!("{}.json", id.file_stem()))
    }

    /// Writes atomically (temp file + rename); concurrent writers of the same
    /// key write identical bytes.
    pub fn put(&self, poly: &UniversalPoly) -> Result<(), UniversalError> {
        let path = self.path_for(poly.id);
        let parent = path.parent().expect("cache paths have a parent");
        fs::create_dir_all(parent)?;
        let entry = Entry {
            kind: poly.id.kind(),
            params: poly.id.params(),
            route: poly.route,
            format_version: FORMAT_VERSION,
            digest: digest(&poly.body),
            body: poly.body.clone(),
        };
        let json = serde_json::to_vec_pretty(&entry).map_err(std::io::Error::other)?;
        let mut tmp = tempfile::NamedTempFile::new_in(parent)?;
        tmp.write_all(&json)?;
        tmp.write_all(b"\n")?;
        tmp.persist(&path).map_err(|e| e.error)?;
        Ok(())
    }

    /// `Ok(None)` on a miss or on an entry written by an older format.
    pub fn get(&self, id: UniversalId) -> Result<Option<UniversalPoly>, UniversalError> {
        let path = self.path_for(id);
        let bytes = match fs::read(&path) {
            Ok(b) => b,
            Err(e) if e.kind() == ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let corrupt = |reason: String| UniversalError::CorruptCache { path: path.display().to_string(), reason };
        let value: serde_json::Value = serde_json::from_slice(&bytes).map_err(|e| corrupt(e.to_string()))?;
        if value.get("format_version").and_then(|v| v.as_u64()) != Some(u64::from(FORMAT_VERSION)) {
            return Ok(None);
        }
        let entry: Entry = serde_json::from_value(value).map_err(|e| corrupt(e.to_string()))?;
        if UniversalId::from_parts(entry.kind, &entry.params) != Some(id) {
            return Err(corrupt(format!("header names {:?} {:?}", entry.kind, entry.params)));
        }
        if digest(&entry.body) != entry.digest {
            return Err(corrupt("digest mismatch".into()));
        }
        if !id.weights_hold(&entry.body) {
            return Err(corrupt("isobaric weight invariant violated".into()));
        }
        Ok(Some(UniversalPoly { id, body: entry.body, route: entry.route }))
    }

    /// All current-format entries, sorted.
    pub fn list(&self) -> Result<Vec<UniversalId>, UniversalError> {
        let mut out = Vec::new();
        for kind in [Kind::Q, Kind::P, Kind::Pnm] {
            let dir = self.dir.join(kind.as_str());
            let rd = match fs::read_dir(&dir) {
                Ok(rd) => rd,
                Err(e) if e.kind() == ErrorKind::NotFound => continue,
                Err(e) => return Err(e.into()),
            };
            for entry in rd {
                let name = entry?.file_name();
                let Some(stem) = name.to_str().and_then(|n| n.strip_suffix(".json")) else {
                    continue;
                };
                let params: Option<Vec<u32>> = stem.split('-').map(|p| p.parse().ok()).collect();
                if let Some(id) = params.and_then(|p| UniversalId::from_parts(kind, &p)) {
                    out.push(id);
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// Removes every entry; returns how many files were deleted.
    pub fn clear(&self) -> Result<usize, UniversalError> {
        let ids = self.list()?;
        for id in &ids {
            fs::remove_file(self.path_for(*id))?;
        }
        Ok(ids.len())
    }
}
