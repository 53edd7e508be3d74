//! Algorithms on 1-planar drawings: validation, canonical triangulation,
//! unavoidable configurations and light subgraphs, discharging, and
//! acyclic edge coloring with a bounded palette.

pub mod corpus;
pub mod model;
pub mod triangulation;
pub mod structure;
pub mod discharging;
pub mod coloring;
pub mod suite;
