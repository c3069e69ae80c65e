//! Negative-base numeration systems.

pub mod automata;
pub mod cli;
pub mod error;
pub mod expansion;
pub mod numberfield;
pub mod selftest;
pub mod shift_automata;
pub mod transducers;
pub mod words;

pub use error::{Error, Result};
