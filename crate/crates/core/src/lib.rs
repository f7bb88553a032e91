// SPDX-License-Identifier: Apache-2.0

//! Count exponents, fluctuation classes and Monte Carlo checks for motifs and
//! graphlets in power-law hidden-variable random graphs.

pub mod count;
pub mod error;
pub mod experiment;
pub mod fluct;
pub mod host;
pub mod hvmodel;
pub mod ingest;
pub mod motif;
pub mod rational;
pub mod varprinciple;

pub use error::{Error, Result};
