pub mod autgroup;
pub mod catalog;
pub mod error;
pub mod exactlin;
pub mod format;
pub mod grpalg;
pub mod hopf;
pub mod involution;
pub mod report;
pub mod tcat;
pub mod ydl;

pub use error::{Error, Result};
