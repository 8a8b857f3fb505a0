//! Palindromic periodicities in finite and infinite words.

pub mod bwt;
pub mod census;
pub mod classes;
pub mod cli;
pub mod error;
pub mod formulas;
pub mod palindrome;
pub mod periodicity;
pub mod search;
pub mod sequences;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use word::Word;
