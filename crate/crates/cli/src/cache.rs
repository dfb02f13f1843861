//! On-disk cache of classification results, one JSON file per `(n, version)`.
//!
//! Entries are only trusted after they parse, carry the expected key and
//! rebuild into a well-formed classification. Anything else is logged and
//! recomputed.

use std::fs;
use std::path::PathBuf;

use tutte_dfs_core::dfs::{Classification, ClassificationReport};
use tutte_dfs_core::VERSION;

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: PathBuf) -> Self {
        Self { dir }
    }

    fn path(&self, n: usize) -> PathBuf {
        self.dir.join(format!("classify-n{n}-v{VERSION}.json"))
    }

    pub fn load(&self, n: usize) -> Option<Classification> {
        let path = self.path(n);
        let bytes = fs::read(&path).ok()?;
        let parsed = serde_json::from_slice::<ClassificationReport>(&bytes)
            .map_err(|e| e.to_string())
            .and_then(|rep| {
                if rep.n != n || rep.tool_version != VERSION {
                    return Err("key does not match file name".to_string());
                }
                Classification::from_report(&rep).map_err(|e| e.to_string())
            });
        match parsed {
            Ok(cls) => {
                log::info!("using cached classification {}", path.display());
                Some(cls)
            }
            Err(e) => {
                log::warn!("ignoring corrupt cache entry {}: {e}", path.display());
                None
            }
        }
    }

    /// Best effort: a failed write only costs a recompute next time.
    pub fn store(&self, cls: &Classification) {
        let path = self.path(cls.n);
        let tmp = path.with_extension("json.tmp");
        let result = fs::create_dir_all(&self.dir)
            .and_then(|_| {
                let body = serde_json::to_vec(&cls.to_report()).map_err(std::io::Error::other)?;
                fs::write(&tmp, body)
            })
            .and_then(|_| fs::rename(&tmp, &path));
        if let Err(e) = result {
            log::warn!("cannot write cache entry {}: {e}", path.display());
        }
    }
}
