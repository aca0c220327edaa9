//! Correspondences between trees, path pairs, and ballot paths, plus the
//! duality they induce.
//!
//! The central object is the bijection between binary trees with `n`
//! vertices and non-crossing pairs of monotone paths of length `n - 1`
//! (an upper path weakly above a lower one, same endpoint). Composing it
//! with tree reflection gives [`dualize`], an order-reversing involution
//! between the poset over a base path and the poset over its reversed
//! complement. The classical ballot-path encoding of trees then transports
//! the canopy partition to ballot paths: [`tam_class_of_ballot`] says which
//! block a ballot path belongs to and where inside the block it sits.

use thiserror::Error;

use crate::path::{LatticePath, Step};
use crate::tree::{pair_paths, BinaryTree};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum BijectionError {
    #[error("paths {upper} and {lower} do not form a non-crossing pair")]
    NotNonCrossing { upper: String, lower: String },
    #[error("word {0} is not a ballot path")]
    NotBallot(String),
}

/// Validated pair of monotone paths with equal step multisets where the
/// upper path stays weakly above the lower one. These are exactly the
/// images of [`pair_paths`], one per nonempty binary tree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NonCrossingPair {
    upper: LatticePath,
    lower: LatticePath,
}

impl NonCrossingPair {
    pub fn new(upper: LatticePath, lower: LatticePath) -> Result<Self, BijectionError> {
        if upper.weakly_above(&lower) {
            Ok(NonCrossingPair { upper, lower })
        } else {
            Err(BijectionError::NotNonCrossing {
                upper: upper.to_string(),
                lower: lower.to_string(),
            })
        }
    }

    pub fn from_tree(t: &BinaryTree) -> Self {
        let (upper, lower) = pair_paths(t);
        NonCrossingPair { upper, lower }
    }

    pub fn upper(&self) -> &LatticePath {
        &self.upper
    }

    pub fn lower(&self) -> &LatticePath {
        &self.lower
    }
}

/// Position (0-based) of the `i`-th (1-based) north step.
fn nth_north(w: &[Step], i: usize) -> usize {
    let mut seen = 0;
    for (pos, s) in w.iter().enumerate() {
        if *s == Step::North {
            seen += 1;
            if seen == i {
                return pos;
            }
        }
    }
    unreachable!("caller asked for a north step the word does not have")
}

/// Largest 1-based `i` such that both words have equally many easts before
/// their `i`-th norths.
fn last_zero_gap(u: &[Step], v: &[Step]) -> Option<usize> {
    let mut best = None;
    let (mut eu, mut ev) = (0usize, 0usize);
    let mut iu = u.iter();
    let mut i = 0;
    for s in v {
        match s {
            Step::East => ev += 1,
            Step::North => {
                i += 1;
                for t in iu.by_ref() {
                    match t {
                        Step::East => eu += 1,
                        Step::North => break,
                    }
                }
                if eu == ev {
                    best = Some(i);
                }
            }
        }
    }
    best
}

/// The tree whose path pair is the given one: inverse of [`pair_paths`] on
/// nonempty trees, so the result has `upper.len() + 1` vertices.
///
/// The recursion undoes the pair construction case by case. An upper word
/// ending in `N` strips the final `N` of both words and grows a left child.
/// Otherwise the upper word ends in `E`; if some north step has a zero gap
/// (equally many easts before it in both words), the last such north is the
/// root's, the words split around it, and both children are rebuilt. With
/// no zero gap the lower word starts with `E`, and dropping the upper's
/// last letter and the lower's first grows a right child.
pub fn tree_from_pair(pair: &NonCrossingPair) -> BinaryTree {
    fn build(u: &[Step], v: &[Step]) -> BinaryTree {
        match u {
            [] => BinaryTree::node(BinaryTree::Leaf, BinaryTree::Leaf),
            [ru @ .., Step::North] => {
                // equal east totals force the lower word to end in N too
                debug_assert_eq!(v.last(), Some(&Step::North));
                BinaryTree::node(build(ru, &v[..v.len() - 1]), BinaryTree::Leaf)
            }
            _ => match last_zero_gap(u, v) {
                Some(i) => {
                    let pu = nth_north(u, i);
                    let pv = nth_north(v, i);
                    debug_assert_eq!(u.last(), Some(&Step::East));
                    debug_assert_eq!(v.get(pv + 1), Some(&Step::East));
                    BinaryTree::node(
                        build(&u[..pu], &v[..pv]),
                        build(&u[pu + 1..u.len() - 1], &v[pv + 2..]),
                    )
                }
                None => {
                    // a lower word starting with N would put a zero gap at
                    // its first north
                    debug_assert_eq!(v.first(), Some(&Step::East));
                    BinaryTree::node(BinaryTree::Leaf, build(&u[..u.len() - 1], &v[1..]))
                }
            },
        }
    }
    build(pair.upper.steps(), pair.lower.steps())
}

/// Ballot-path encoding of a tree: the empty tree reads as the empty word
/// and a vertex reads as `left N right E`, so an `n`-vertex tree becomes a
/// word of `n` norths and `n` easts with every prefix containing at least
/// as many norths as easts.
pub fn ballot_from_tree(t: &BinaryTree) -> LatticePath {
    fn rec(t: &BinaryTree, out: &mut Vec<Step>) {
        if let BinaryTree::Node(l, r) = t {
            rec(l, out);
            out.push(Step::North);
            rec(r, out);
            out.push(Step::East);
        }
    }
    let mut out = Vec::new();
    rec(t, &mut out);
    LatticePath::new(out)
}

fn is_ballot(w: &[Step]) -> bool {
    let mut bal = 0i64;
    for s in w {
        match s {
            Step::North => bal += 1,
            Step::East => bal -= 1,
        }
        if bal < 0 {
            return false;
        }
    }
    bal == 0
}

/// Inverse of [`ballot_from_tree`]. The final east step of a nonempty
/// ballot word closes the last north step whose prefix is balanced; the two
/// segments that split out are the child words.
pub fn tree_from_ballot(word: &LatticePath) -> Result<BinaryTree, BijectionError> {
    if !is_ballot(word.steps()) {
        return Err(BijectionError::NotBallot(word.to_string()));
    }
    fn build(w: &[Step]) -> BinaryTree {
        if w.is_empty() {
            return BinaryTree::Leaf;
        }
        let mut depth = 0i64;
        let mut root = 0;
        for (i, s) in w.iter().enumerate() {
            match s {
                Step::North => {
                    if depth == 0 {
                        root = i;
                    }
                    depth += 1;
                }
                Step::East => depth -= 1,
            }
        }
        BinaryTree::node(build(&w[..root]), build(&w[root + 1..w.len() - 1]))
    }
    Ok(build(word.steps()))
}

/// Dual of `element` across the poset over `base`: an order-reversing
/// bijection onto the poset over `base.reverse_complement()`, obtained by
/// rebuilding the tree of the pair `(element, base)`, reflecting it, and
/// reading the upper path of the reflected pair. Applying it again from
/// the reflected base returns `element`.
pub fn dualize(base: &LatticePath, element: &LatticePath) -> Result<LatticePath, BijectionError> {
    let pair = NonCrossingPair::new(element.clone(), base.clone())?;
    let mirrored = tree_from_pair(&pair).reflect();
    let (upper, lower) = pair_paths(&mirrored);
    debug_assert_eq!(lower, base.reverse_complement());
    Ok(upper)
}

/// Block and position of a ballot path under the canopy partition: returns
/// `(base, element)` where `base` is the canopy of the ballot path's tree
/// and `element` is the upper path of its pair. Ballot paths sharing a base
/// are exactly the elements weakly above it, so the blocks partition the
/// ballot paths of each length into `2^(n-1)` smaller posets.
pub fn tam_class_of_ballot(
    word: &LatticePath,
) -> Result<(LatticePath, LatticePath), BijectionError> {
    let tree = tree_from_ballot(word)?;
    let (upper, lower) = pair_paths(&tree);
    Ok((lower, upper))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::{all_paths, tam_covers, tam_elements};
    use crate::tree::all_trees;
    use std::collections::BTreeMap;

    fn p(s: &str) -> LatticePath {
        s.parse().unwrap()
    }

    #[test]
    fn pair_validation() {
        assert!(NonCrossingPair::new(p("NE"), p("EN")).is_ok());
        assert!(NonCrossingPair::new(p(""), p("")).is_ok());
        assert!(matches!(
            NonCrossingPair::new(p("EN"), p("NE")),
            Err(BijectionError::NotNonCrossing { .. })
        ));
        assert!(matches!(
            NonCrossingPair::new(p("N"), p("E")),
            Err(BijectionError::NotNonCrossing { .. })
        ));
    }

    #[test]
    fn tree_pair_round_trip_from_trees() {
        for n in 1..=8 {
            for tree in all_trees(n) {
                let pair = NonCrossingPair::from_tree(&tree);
                assert_eq!(tree_from_pair(&pair), tree, "tree {tree}");
            }
        }
    }

    #[test]
    fn tree_pair_round_trip_from_pairs() {
        for len in 0..=7 {
            for lower in all_paths(len) {
                for upper in tam_elements(&lower) {
                    let pair = NonCrossingPair::new(upper.clone(), lower.clone()).unwrap();
                    let tree = tree_from_pair(&pair);
                    assert_eq!(tree.size(), len + 1);
                    let back = NonCrossingPair::from_tree(&tree);
                    assert_eq!(back.upper(), &upper, "pair ({upper},{lower})");
                    assert_eq!(back.lower(), &lower, "pair ({upper},{lower})");
                }
            }
        }
    }

    #[test]
    fn ballot_fixtures() {
        assert_eq!(ballot_from_tree(&BinaryTree::Leaf), p(""));
        assert_eq!(ballot_from_tree(&"()".parse().unwrap()), p("NE"));
        assert_eq!(ballot_from_tree(&"(())".parse().unwrap()), p("NENE"));
        assert_eq!(ballot_from_tree(&"()(())".parse().unwrap()), p("NNEE"));
    }

    #[test]
    fn ballot_round_trip() {
        for n in 0..=8 {
            for tree in all_trees(n) {
                let w = ballot_from_tree(&tree);
                assert!(is_ballot(w.steps()), "tree {tree}");
                assert_eq!(w.len(), 2 * n);
                assert_eq!(tree_from_ballot(&w).unwrap(), tree, "tree {tree}");
            }
        }
    }

    #[test]
    fn ballot_rejects_non_ballot_words() {
        for s in ["E", "EN", "NEN", "NEEN", "NNE"] {
            assert!(matches!(
                tree_from_ballot(&p(s)),
                Err(BijectionError::NotBallot(_))
            ));
        }
    }

    #[test]
    fn dualize_fixture_and_involution() {
        assert_eq!(dualize(&p("EN"), &p("NE")).unwrap(), p("EN"));
        assert_eq!(dualize(&p("EN"), &p("EN")).unwrap(), p("NE"));
        for len in 0..=6 {
            for base in all_paths(len) {
                let mirror = base.reverse_complement();
                for u in tam_elements(&base) {
                    let d = dualize(&base, &u).unwrap();
                    assert!(d.weakly_above(&mirror), "base {base} u {u}");
                    assert_eq!(dualize(&mirror, &d).unwrap(), u, "base {base} u {u}");
                }
            }
        }
    }

    #[test]
    fn dualize_reverses_covers() {
        // covers generate the order, so sending covers to reversed covers
        // makes the map an order anti-isomorphism
        for len in 0..=5 {
            for base in all_paths(len) {
                let mirror = base.reverse_complement();
                for x in tam_elements(&base) {
                    let dx = dualize(&base, &x).unwrap();
                    for y in tam_covers(&x, &base).unwrap() {
                        let dy = dualize(&base, &y).unwrap();
                        let back = tam_covers(&dy, &mirror).unwrap();
                        assert!(back.contains(&dx), "base {base}: {x} -> {y}");
                    }
                }
            }
        }
    }

    #[test]
    fn dualize_rejects_foreign_elements() {
        assert!(matches!(
            dualize(&p("NE"), &p("EN")),
            Err(BijectionError::NotNonCrossing { .. })
        ));
    }

    #[test]
    fn ballot_classes_partition_into_element_sets() {
        for n in 1..=6usize {
            let mut classes: BTreeMap<LatticePath, Vec<LatticePath>> = BTreeMap::new();
            let mut total = 0usize;
            for tree in all_trees(n) {
                let w = ballot_from_tree(&tree);
                let (base, element) = tam_class_of_ballot(&w).unwrap();
                classes.entry(base).or_default().push(element);
                total += 1;
            }
            assert_eq!(classes.len(), 1 << (n - 1));
            let mut sum = 0usize;
            for (base, mut elements) in classes {
                elements.sort();
                assert_eq!(elements, tam_elements(&base), "base {base}");
                sum += elements.len();
            }
            assert_eq!(sum, total);
        }
    }

    #[test]
    fn ballot_class_sizes_at_four() {
        let mut sizes: BTreeMap<LatticePath, usize> = BTreeMap::new();
        for tree in all_trees(4) {
            let (base, _) = tam_class_of_ballot(&ballot_from_tree(&tree)).unwrap();
            *sizes.entry(base).or_default() += 1;
        }
        let mut got: Vec<usize> = sizes.into_values().collect();
        got.sort();
        assert_eq!(got, vec![1, 1, 1, 1, 2, 2, 3, 3]);
    }
}
