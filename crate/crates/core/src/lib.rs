//! Friendship digraphs: loopless digraphs in which every two distinct
//! vertices have exactly one common out-neighbor.
//!
//! Every such digraph is either a fancy wheel (a hub joined both ways to all
//! other vertices, the rest a disjoint union of directed cycles) or
//! k-regular of order k²−k+1, and the regular ones correspond to
//! (k²−k+1, k, 1) symmetric designs. This crate builds both families,
//! checks their structural consequences on concrete instances, classifies
//! arbitrary digraphs, and enumerates all friendship digraphs of small order.

pub mod bitset;
pub mod construct;
pub mod design;
pub mod digraph;
pub mod error;
pub mod field;
pub mod matching;
pub mod search;
pub mod verify;

pub use bitset::VertexSet;
pub use construct::{
    check_hall_condition, complement_sdr, digraph_from_sbibd, fancy_wheel, HallReport, Sdr,
};
pub use design::{design_from_digraph, projective_plane, validate_sbibd, Design, ValidationReport};
pub use digraph::Digraph;
pub use error::{Error, Result};
pub use field::{FieldElement, FiniteField};
pub use matching::{bipartite_max_matching, Matching};
pub use search::{enumerate_friendship_digraphs, is_isomorphic, CanonicalForm, SearchConfig};
pub use verify::{classify, is_friendship, Classification, PropertyReport, Witness};
