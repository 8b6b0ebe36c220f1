//! Friendliness of trees.
//!
//! Two trees with the same number of edges are *friendly* when some bijection
//! between their edges is realizable: for every pair of distinct vertices at
//! even distance in the first tree, the images of their incident-edge sets are
//! unlinked in the second tree. Unions of disjoint circles on a sphere are
//! described up to homeomorphism by their dual trees, so friendliness of dual
//! trees decides whether two circle systems can be realized together as the
//! intersection of two spheres in 3-space.
//!
//! The crate provides:
//!
//! * [`tree`]: the tree type, path/parity queries and canonical codes,
//! * [`linking`]: the "same side" and "unlinked" predicates on edge sets,
//! * [`realizability`]: realizability checks, the pruned bijection search and
//!   re-checkable certificates,
//! * [`enumeration`]: catalogs of free trees with a Prüfer-based oracle,
//! * [`circles`]: nesting forests of circles and their dual trees,
//! * [`survey`]: the fixture trees `G` and `H`, exhaustive pair surveys and
//!   the drivers that verify the 7-edge counterexample and the small-size
//!   conjecture.

pub mod circles;
pub mod enumeration;
mod error;
pub mod linking;
pub mod realizability;
pub mod survey;
pub mod tree;

pub use circles::{circle_count_of_tree, dual_tree, NestingForest};
pub use enumeration::{enumerate_trees, prufer_oracle_count, TreeCatalog};
pub use error::{Error, Result};
pub use linking::{same_side, unlinked};
pub use realizability::{
    find_realizable_bijection, is_realizable, recheck_certificate, Certificate, EdgeBijection,
    SearchStats, Verdict,
};
pub use survey::{survey_pairs, verify_conjecture, verify_theorem1, SurveyOptions, SurveyReport};
pub use tree::{
    canonical_code, is_isomorphic, CanonicalCode, EdgeId, EdgeSet, Parity, Tree, VertexId,
};
