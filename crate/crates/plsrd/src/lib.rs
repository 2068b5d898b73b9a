//! File formats, a threaded solver driver, random fixtures and the
//! verification harness on top of [`plsrd_core`].

pub mod error;
pub mod fixtures;
pub mod io;
pub mod solve;
pub mod verify;

pub use error::{Error, Result};
pub use plsrd_core as core;
pub use solve::{default_workers, solve, THREADS_ENV};
