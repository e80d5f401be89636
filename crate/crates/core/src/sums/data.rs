//! Committed data files: square-completion certificates and expansion
//! fixtures live under `data/` in this crate and are loaded by id.

use std::path::PathBuf;

use super::gen::CertificateFile;
use crate::{Error, Result};

fn data_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data")
}

pub fn certificate_path(id: &str) -> PathBuf {
    data_root().join("certificates").join(format!("{id}.json"))
}

pub fn fixture_path(id: &str) -> PathBuf {
    data_root().join("fixtures").join(format!("{id}.expansion.json"))
}

/// Loads a committed certificate file by case id.
pub fn load_certificate(id: &str) -> Result<CertificateFile> {
    let path = certificate_path(id);
    let text = std::fs::read_to_string(&path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Loads a committed expansion fixture (canonical JSON) by case id.
pub fn load_fixture(id: &str) -> Result<String> {
    let path = fixture_path(id);
    std::fs::read_to_string(&path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}
