//! Optional TOML run configuration. Every key mirrors a command-line flag;
//! flags given on the command line override the file.
//!
//! ```toml
//! n_max = 30
//! m_max = 4
//! identities = ["C42", "C72i"]
//! format = "csv"
//! output = "report.csv"
//! ```

use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::Deserialize;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub n_max: Option<u32>,
    pub m_max: Option<u32>,
    pub oracle_cutoff: Option<u32>,
    pub identities: Option<Vec<String>>,
    pub families: Option<Vec<String>>,
    pub maps: Option<Vec<String>>,
    pub format: Option<String>,
    pub output: Option<PathBuf>,
    pub path: Option<String>,
    pub threads: Option<usize>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("config: cannot read {}", path.display()))?;
        toml::from_str(&text).with_context(|| format!("config: cannot parse {}", path.display()))
    }
}
