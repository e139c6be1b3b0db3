//! Shortest properly coloured paths in 2-edge-coloured hypercubes.
//!
//! A colouring splits the dimensions of `H_n` into two classes and gives every
//! edge the colour of the dimension it flips. A path is *proper* when
//! consecutive edges have different colours. This crate provides:
//!
//! - the pairwise metrics `o`, `t`, `gamma` and the proper distance
//!   ([`metrics`]);
//! - exact counts of shortest proper paths, including two independent
//!   evaluations of the parity-constrained word count ([`counting`]);
//! - lazy, deterministic enumeration of every shortest proper path
//!   ([`enumeration`]);
//! - a formula-free brute-force engine over generic edge-coloured graphs
//!   ([`oracle`]);
//! - the sweep that confronts all of the above ([`verify`]) and the report
//!   records emitted by the command-line tool ([`report`]).

pub mod coloring;
pub mod counting;
pub mod enumeration;
pub mod error;
pub mod metrics;
pub mod oracle;
pub mod report;
pub mod verify;
pub mod vertex;

pub use coloring::{ColorClass, Coloring};
pub use counting::{
    count_shortest_proper_paths, j1_reference_count, word_count_closed, word_count_sum, PathCount,
    WordConstraint,
};
pub use enumeration::{
    enumerate_shortest_proper_paths, is_proper_path, shortest_path_witness, ProperPath,
};
pub use error::{Error, Result};
pub use metrics::{class_difference, gamma, pair_profile, proper_distance, PairProfile};
pub use vertex::Vertex;
