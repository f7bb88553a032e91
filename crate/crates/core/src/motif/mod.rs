// SPDX-License-Identifier: Apache-2.0

//! Small motifs: representation, canonical labelling, catalog and merges.

pub mod canon;
pub mod catalog;
pub mod graph;
pub mod merge;

pub use canon::{automorphisms, canonical_form, canonical_graph, is_isomorphic, symmetry_info, CanonicalForm, SymmetryInfo};
pub use catalog::{alias_of, display_name, enumerate_connected, parse_motif, ALIASES};
pub use graph::{SmallGraph, MAX_VERTICES};
pub use merge::{merge_enumerate, MergeEntry, MergeFamily};
