//! Exact construction and analysis of m-adic residue codes of prime length
//! over prime fields `F_q` and over the non-chain ring `F_q[v]/(v^s - v)`.

pub mod analysis;
pub mod cli;
pub mod cyclic;
pub mod error;
pub mod families;
pub mod field;
pub mod identities;
pub mod nt;
pub mod poly;
pub mod reference;
pub mod residue;
pub mod ring;
pub mod ring_codes;

pub use error::{Error, Result};
