//! On-disk solution format: a small JSON document with the pair table in
//! row-major order, 0-based labels. Canonical serialization uses sorted keys
//! and no insignificant whitespace, so canonical files round-trip
//! byte-identically.

use crate::qset::{QsetError, QuadraticSet};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum SolFileError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("unsupported format version {0}")]
    BadVersion(u32),
    #[error("table: {0}")]
    Table(#[from] QsetError),
}

/// Fields are declared in sorted key order; serialization preserves it.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct SolutionFile {
    pub format_version: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
    pub n: usize,
    pub r: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Metadata {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

impl SolutionFile {
    pub fn from_qset(qs: &QuadraticSet, metadata: Option<Metadata>) -> Self {
        SolutionFile {
            format_version: FORMAT_VERSION,
            metadata,
            n: qs.n(),
            r: qs.rmap().iter().map(|&(u, v)| [u, v]).collect(),
        }
    }

    pub fn to_qset(&self) -> Result<QuadraticSet, SolFileError> {
        if self.format_version != FORMAT_VERSION {
            return Err(SolFileError::BadVersion(self.format_version));
        }
        Ok(QuadraticSet::from_table(
            self.n,
            self.r.iter().map(|&[u, v]| (u, v)).collect(),
        )?)
    }

    pub fn to_canonical_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn parse(text: &str) -> Result<Self, SolFileError> {
        Ok(serde_json::from_str(text)?)
    }
}

pub fn read_qset(text: &str) -> Result<QuadraticSet, SolFileError> {
    SolutionFile::parse(text)?.to_qset()
}

pub fn write_qset(qs: &QuadraticSet, name: Option<&str>, provenance: Option<&str>) -> String {
    let metadata = match (name, provenance) {
        (None, None) => None,
        _ => Some(Metadata {
            name: name.map(str::to_string),
            provenance: provenance.map(str::to_string),
        }),
    };
    SolutionFile::from_qset(qs, metadata).to_canonical_json()
}
