//! Labeled temporal graphlet kernels.
//!
//! This crate holds the algorithmic core and has no dependency on `std`:
//!
//! - [`tgraph`]: temporal graphs with time-dependent node labels,
//! - [`graphlets`]: canonical codes and codebooks of temporal graphlet classes,
//! - [`exact`]: exact counters (brute force, wedges, stars, triangles and the
//!   general sliding-window framework),
//! - [`approx`]: wedge sampling with and without rejection,
//! - [`kernel`]: feature normalization, Gram matrices and a 1-NN smoke classifier,
//! - [`dissemination`]: SI simulation, classification task generators and a
//!   Barabási–Albert temporal graph generator.
//!
//! File formats, parallel drivers and the command-line tool live in the
//! `tgraphlet` crate.

#![no_std]

extern crate alloc;

pub mod approx;
pub mod dissemination;
mod error;
pub mod exact;
pub mod features;
pub mod graphlets;
pub mod kernel;
pub mod rng;
pub mod tgraph;

pub use error::{Error, Result};
pub use features::{FeatureVector, GraphletCounts};
pub use graphlets::{GraphletCode, GraphletFamily, NodeCounts, Pattern};
pub use tgraph::{
    Dataset, DatasetMeta, GraphRecord, Label, LabelTimeline, NodeId, StaticGraph, TemporalEdge,
    TemporalGraph, Time, Window,
};
