// SPDX-License-Identifier: Apache-2.0

//! Count exponents from the variational principle.

pub mod assign;
pub mod exponent;
pub mod optimize;
pub mod piecewise;

pub use assign::{symbolic_exponent, Assignment, Label, Mode};
pub use exponent::{Tau, TauExponent};
pub use optimize::{
    b_from_free_exponent, b_value, free_exponent_from_b, optimize, partition_objective, partition_view,
    typical_exponent_from_b, VariationalResult, VertexClass,
};
pub use piecewise::{piecewise, Piece, PiecewiseExponent};
