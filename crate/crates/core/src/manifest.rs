//! The versioned list of cases that a batch verification runs.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::analysis::Case;
use crate::error::{Error, Result};

pub const MANIFEST_VERSION: u32 = 1;

/// The built-in verification matrix.
pub const DEFAULT_MANIFEST: &str = include_str!("../data/cases.toml");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub version: u32,
    #[serde(rename = "case", default)]
    pub cases: Vec<Case>,
}

impl Manifest {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let m: Manifest = toml::from_str(text).map_err(|e| Error::Config(format!("manifest: {e}")))?;
        if m.version != MANIFEST_VERSION {
            return Err(Error::Config(format!(
                "manifest version {} is not supported (expected {MANIFEST_VERSION})",
                m.version
            )));
        }
        Ok(m)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read manifest {}: {e}", path.display())))?;
        Self::from_toml_str(&text)
    }

    pub fn builtin() -> Self {
        Self::from_toml_str(DEFAULT_MANIFEST).expect("built-in manifest parses")
    }

    /// Keeps the cases with `m <= m_max`.
    pub fn filter_m_max(mut self, m_max: u32) -> Self {
        self.cases.retain(|c| c.m <= m_max);
        self
    }
}
