//! Kostant's chip-firing game on Dynkin diagrams and the Weyl-group structures
//! it computes: reduced words, minimal coset representatives, root sums,
//! automata for reduced-word languages, finiteness classification of graphs
//! and standard Young tableaux.

pub mod error;
pub mod game;
pub mod graph;
pub mod rootsystem;
pub mod weyl;
pub mod automaton;
pub mod classification;
pub mod correspondence;
pub mod report;
pub mod rootsum;
pub mod tableaux;

pub use error::{Error, Result};
