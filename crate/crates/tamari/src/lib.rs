//! Generalized Tamari orders on monotone lattice paths.
//!
//! A monotone path is a word over north (`N`) and east (`E`) unit steps.
//! Fixing a base path `v`, the paths that use the same step multiset and stay
//! weakly above `v` form a poset: the covering relation picks a valley of a
//! path and pushes the east step before it past the following subpath, with
//! the landing site determined by horizontal distances to `v`. These posets
//! are lattices; for `v = (NE)^n` they are the classical Tamari lattices and
//! for `v = (NE^m)^n` the `m`-Tamari lattices.
//!
//! The crate provides:
//!
//! - [`path`]: paths, the dominance order, covering moves, element
//!   enumeration, and a counting recurrence independent of the cover machine.
//! - [`tree`]: binary trees, their completions, canopies, and right
//!   rotations, including extremal trees per canopy.
//! - [`bijection`]: the correspondence between trees and non-crossing path
//!   pairs, the ballot-path encoding, and the duality map.
//! - [`poset`]: an explicit finite-poset engine (closure matrix, meet/join,
//!   interval counting, isomorphism checks, DOT and JSON export).
//! - [`harness`]: closed counting formulas with exact big-integer
//!   arithmetic, and exhaustive verification sweeps for the structural
//!   results (lattice property, duality, canopy partition, lemma suite,
//!   slope-cover equivalence).
//!
//! All arithmetic is exact; counts are [`num_bigint::BigUint`] throughout.

mod arith;

pub mod bijection;
pub mod harness;
pub mod path;
pub mod poset;
pub mod tree;

pub use bijection::{
    ballot_from_tree, dualize, tam_class_of_ballot, tree_from_ballot, tree_from_pair,
    BijectionError, NonCrossingPair,
};
pub use harness::{
    catalan, east_labelled_intervals_brute, fuss_catalan, labelled_intervals_brute,
    labelled_intervals_formula, lattice_counterexample, m_tamari_intervals_brute,
    m_tamari_intervals_formula, tamari_intervals_brute, tamari_intervals_formula,
    total_intervals_brute, total_intervals_formula, verify_ballot_cover_correspondence,
    verify_counting, verify_duality, verify_duality_at, verify_lattice, verify_lattice_at,
    verify_lemmas_at, verify_m_equivalence, verify_partition,
    verify_rotation_order_matches_alternating, VerificationOutcome,
};
pub use path::{
    all_paths, count_paths_above, gap_sequence, horiz_profile, label_count, rational_base_path,
    slope_cover, tam_covers, tam_elements, GridPoint, LatticePath, PathError, Step,
};
pub use poset::{
    build_tam_poset, build_tree_tamari, order_anti_iso, order_iso, CountReport, FinitePoset,
    PosetError, MAX_TREE_TAMARI,
};
pub use tree::{
    all_trees, canopy, canopy_leq, left_edge_right_depths, left_rotation_sites, pair_paths,
    postorder_right_depths, right_rotation_preserves_canopy, right_rotation_sites, rotate_left,
    rotate_right, symmetric_order, t_max, t_min, tree_with_canopy, BinaryTree, Branch,
    CanopySequence, CompleteBinaryTree, TreeError, VertexPath,
};
