//! File formats, dataset loading, parallel drivers and the `tgraphlet`
//! command-line tool on top of [`tgraphlet_core`].

pub mod bench;
pub mod cli;
pub mod dataset;
pub mod driver;
mod error;
pub mod export;
pub mod features;
pub mod format;
pub mod manifest;
pub mod psd;
pub mod verify;

pub use error::{Error, Result};
