//! Computational toolkit for left-selfdistributive systems and braids.
//!
//! Laver tables, racks and quandles with their (co)homology, set-theoretic
//! Yang-Baxter solutions, the Garside word-problem engine for braid groups,
//! the Dehornoy ordering with ordinal ranks on three-strand positive braids,
//! minimal conjugacy representatives and the G3 braid Hydra game.

pub mod braid;
pub mod conjugacy;
pub mod error;
pub mod games;
pub mod homology;
pub mod invariants;
pub mod lattice;
pub mod laver;
pub mod magma;
pub mod order;
pub mod ybe;

pub use error::{Error, Result};
