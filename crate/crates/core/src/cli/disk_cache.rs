use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use crate::groebner::cache::BasisStore;

/// Gröbner basis store with one file per key. Writes go through a temporary
/// file and a rename, so concurrent writers of the same key never expose a
/// partial entry.
#[derive(Debug)]
pub struct DiskCache {
    dir: PathBuf,
    counter: AtomicU64,
}

impl DiskCache {
    pub fn open(dir: impl AsRef<Path>) -> std::io::Result<Self> {
        fs::create_dir_all(dir.as_ref())?;
        Ok(DiskCache { dir: dir.as_ref().to_path_buf(), counter: AtomicU64::new(0) })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.gb"))
    }
}

impl BasisStore for DiskCache {
    fn load(&self, key: &str) -> Option<String> {
        fs::read_to_string(self.path(key)).ok()
    }

    fn store(&self, key: &str, value: &str) {
        let n = self.counter.fetch_add(1, Ordering::Relaxed);
        let tmp = self.dir.join(format!(".{key}.{}.{n}.tmp", std::process::id()));
        let res = fs::write(&tmp, value).and_then(|_| fs::rename(&tmp, self.path(key)));
        if let Err(e) = res {
            log::warn!("could not write cache entry {key}: {e}");
            let _ = fs::remove_file(&tmp);
        }
    }

    fn corrupt(&self, key: &str) {
        log::warn!("cache entry {key} is corrupt; recomputing");
        let _ = fs::remove_file(self.path(key));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stores_and_loads() {
        let dir = tempfile::tempdir().unwrap();
        let c = DiskCache::open(dir.path().join("gb")).unwrap();
        assert_eq!(c.load("abc"), None);
        c.store("abc", "hello");
        c.store("abc", "hello");
        assert_eq!(c.load("abc").as_deref(), Some("hello"));
        c.corrupt("abc");
        assert_eq!(c.load("abc"), None);
        assert_eq!(fs::read_dir(c.dir()).unwrap().count(), 0);
    }
}
