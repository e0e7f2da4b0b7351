//! A directory of result documents keyed by a hash of their header.
//!
//! Entries are published by writing a temporary file in the same directory
//! and renaming it over the key, so a reader sees either no entry or a
//! complete one. Anything that fails to parse or describes a different
//! header is treated as absent.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};
use tempfile::NamedTempFile;

use crate::doc::{Header, ResultDocument};

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: impl Into<PathBuf>) -> io::Result<Cache> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Cache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(header: &Header) -> String {
        let canon = serde_json::to_string(header).expect("headers always serialize");
        hex::encode(Sha256::digest(canon.as_bytes()))
    }

    pub fn path(&self, header: &Header) -> PathBuf {
        self.dir.join(format!("{}.json", Cache::key(header)))
    }

    /// The stored document for `header`, if one is present and trustworthy.
    pub fn load(&self, header: &Header) -> Option<ResultDocument> {
        let text = fs::read_to_string(self.path(header)).ok()?;
        let doc = ResultDocument::from_json(&text).ok()?;
        (doc.header == *header).then_some(doc)
    }

    pub fn store(&self, doc: &ResultDocument) -> io::Result<PathBuf> {
        let target = self.path(&doc.header);
        let mut tmp = NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(doc.to_json().as_bytes())?;
        tmp.as_file().sync_all()?;
        tmp.persist(&target).map_err(|e| e.error)?;
        Ok(target)
    }
}
