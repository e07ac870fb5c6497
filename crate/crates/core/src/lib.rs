pub mod cli;
pub mod golden;
pub mod lattice;
pub mod lawlang;
pub mod model;
pub mod relcore;
pub mod search;
pub mod structures;
