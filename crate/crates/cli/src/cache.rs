//! Append-only result cache: one JSON-lines file per subcommand, one
//! `{"params": …, "result": …}` document per line. Lookups match the
//! parameter map exactly and the newest matching line wins. The cache is
//! strictly best-effort: corrupt lines are skipped with a warning and an
//! unusable directory disables caching without failing the run.

use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::PathBuf;

use serde::Serialize;
use serde_json::{json, Value};

/// Environment variable consulted for the cache directory when the
/// command line does not name one.
pub const CACHE_DIR_ENV: &str = "DELLAC_CACHE_DIR";

#[derive(Debug)]
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    /// Builds the cache from the `--cache-dir` flag, falling back to the
    /// environment; absent both, caching is off.
    pub fn from_flag_or_env(flag: Option<PathBuf>) -> Self {
        let dir = flag.or_else(|| std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from));
        Cache { dir }
    }

    /// The newest cached result whose parameter map equals `params`.
    pub fn lookup(&self, file: &str, params: &Value) -> Option<Value> {
        let path = self.dir.as_ref()?.join(file);
        let text = fs::read_to_string(&path).ok()?;
        let mut found = None;
        for (index, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let document: Value = match serde_json::from_str(line) {
                Ok(value) => value,
                Err(_) => {
                    eprintln!(
                        "warning: skipping corrupt cache line {} in {}",
                        index + 1,
                        path.display()
                    );
                    continue;
                }
            };
            if document.get("params") == Some(params) {
                if let Some(result) = document.get("result") {
                    found = Some(result.clone());
                }
            }
        }
        found
    }

    /// Appends a result under its parameter map, disabling the cache on
    /// the first write failure.
    pub fn store<T: Serialize>(&mut self, file: &str, params: &Value, result: &T) {
        let Some(dir) = self.dir.as_ref() else {
            return;
        };
        let line = json!({ "params": params, "result": result }).to_string();
        let outcome = fs::create_dir_all(dir).and_then(|_| {
            let mut handle = OpenOptions::new()
                .create(true)
                .append(true)
                .open(dir.join(file))?;
            writeln!(handle, "{line}")
        });
        if let Err(error) = outcome {
            eprintln!(
                "warning: cache disabled, cannot write {}: {error}",
                dir.display()
            );
            self.dir = None;
        }
    }
}
