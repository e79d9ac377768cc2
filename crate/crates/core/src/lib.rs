//! Polynomial identities of Hopf comodule algebras, computed exactly.

pub mod error;
pub mod cocycle;
pub mod comod;
pub mod exact;
pub mod freealg;
pub mod genbase;
pub mod hopf;
pub mod ident;
pub mod io;
pub mod parse;
pub mod report;
pub mod sparse;

pub use error::{Error, Result};
