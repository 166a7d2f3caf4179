//! Disk persistence for incidence tables, keyed by (degree, tag, version).
//!
//! Enabled when `PST_CACHE_DIR` is set and not switched off with
//! [`set_disk_cache_enabled`]. Unreadable or corrupt files are ignored.

use std::path::PathBuf;
use std::sync::atomic::{AtomicBool, Ordering};

use crate::{IncidenceTable, Tag};

pub const CACHE_ENV: &str = "PST_CACHE_DIR";
pub const CACHE_VERSION: u32 = 1;

/// Tables are only persisted up to this degree.
const MAX_CACHED_DEGREE: u32 = 10;

static ENABLED: AtomicBool = AtomicBool::new(true);

pub fn set_disk_cache_enabled(on: bool) {
    ENABLED.store(on, Ordering::SeqCst);
}

fn dir() -> Option<PathBuf> {
    if !ENABLED.load(Ordering::SeqCst) {
        return None;
    }
    std::env::var_os(CACHE_ENV).map(PathBuf::from)
}

pub fn path_for(d: u32, tag: Tag) -> Option<PathBuf> {
    dir().map(|p| p.join(format!("{tag}-d{d}-v{CACHE_VERSION}.json")))
}

pub(crate) fn load(d: u32, tag: Tag) -> Option<IncidenceTable> {
    let path = path_for(d, tag)?;
    let text = std::fs::read_to_string(path).ok()?;
    let v: serde_json::Value = serde_json::from_str(&text).ok()?;
    let t = IncidenceTable::from_json(&v).ok()?;
    (t.degree == d && t.tag == tag).then_some(t)
}

pub(crate) fn store(t: &IncidenceTable) {
    if t.degree > MAX_CACHED_DEGREE {
        return;
    }
    let Some(path) = path_for(t.degree, t.tag) else { return };
    let Some(parent) = path.parent() else { return };
    if std::fs::create_dir_all(parent).is_err() {
        return;
    }
    let tmp = parent.join(format!(".{}.{}.tmp", path.file_name().unwrap().to_string_lossy(), std::process::id()));
    if std::fs::write(&tmp, t.to_json().to_string()).is_ok() {
        // rename is atomic within a directory
        if std::fs::rename(&tmp, &path).is_err() {
            let _ = std::fs::remove_file(&tmp);
        }
    }
}
