//! Task files, the task runner, result documents and the on-disk basis cache.

mod disk_cache;
mod document;
mod runner;
mod taskfile;

pub use disk_cache::DiskCache;
pub use document::{
    check_json, estimate_json, rational_from_json, rational_json, sequence_json, Format, ResultDocument,
};
pub use runner::{run_task, RunOptions, DEFAULT_ALTERNATING, DEFAULT_N_MAX, DEFAULT_TOL};
pub use taskfile::{parse_taskfile, print_taskfile, ComplexKind, Params, TaskKind, TaskSpec};

/// Environment variable naming the default cache directory.
pub const CACHE_DIR_ENV: &str = "FROBREG_CACHE_DIR";
