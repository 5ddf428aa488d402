//! On-disk cache of whole character tables, one JSON file per `n`.

use std::io::Write as _;
use std::path::{Path, PathBuf};

use hcchar_core::partitions::{odd_partitions, strict_partitions};
use hcchar_core::CharTable;

use crate::format::{from_json, to_json};

pub const CACHE_ENV: &str = "HCCHAR_CACHE";

#[derive(Debug, Clone)]
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    /// Enabled iff `HCCHAR_CACHE` is set to a non-empty path.
    pub fn from_env() -> Self {
        let dir = std::env::var_os(CACHE_ENV)
            .filter(|v| !v.is_empty())
            .map(PathBuf::from);
        Cache { dir }
    }

    pub fn at(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: Some(dir.into()) }
    }

    pub fn disabled() -> Self {
        Cache { dir: None }
    }

    pub fn is_enabled(&self) -> bool {
        self.dir.is_some()
    }

    pub fn path_for(&self, n: u32) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("table-n{n}.json")))
    }

    /// The cached table for `n`. Unreadable, corrupt or mislabelled files
    /// count as a miss.
    pub fn load(&self, n: u32) -> Option<CharTable> {
        let text = std::fs::read_to_string(self.path_for(n)?).ok()?;
        let table = from_json(&text).ok()?;
        let shape_ok = table.n == n && table.lambdas == strict_partitions(n) && table.mus == odd_partitions(n);
        shape_ok.then_some(table)
    }

    /// Writes through a temporary file in the same directory and renames it
    /// into place, so readers never see a partial file.
    pub fn store(&self, table: &CharTable) -> std::io::Result<()> {
        let (Some(dir), Some(path)) = (&self.dir, self.path_for(table.n)) else {
            return Ok(());
        };
        std::fs::create_dir_all(dir)?;
        write_atomic(dir, &path, to_json(table).as_bytes())
    }
}

fn write_atomic(dir: &Path, path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
