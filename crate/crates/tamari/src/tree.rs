//! Binary trees, completions, canopies, and right rotations.
//!
//! Trees here are the usual rooted planar binary trees where every vertex
//! has an optional left and an optional right child. The *completion* pads
//! every missing child with an external leaf, so a tree with `n` vertices
//! becomes a complete tree with `n + 1` leaves. Reading off which side each
//! vertex is missing a child on gives the *canopy*; trees sharing a canopy
//! form the blocks of a partition that interacts with rotations: a rotation
//! whose pivot edge sits deep enough preserves the canopy, while the
//! remaining rotations flip exactly one canopy letter.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::path::{LatticePath, Step};

/// Side taken at one vertex on a root-to-vertex walk.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Branch {
    Left,
    Right,
}

/// Walk from the root: empty means the root itself.
pub type VertexPath = Vec<Branch>;

/// Canopy word over the step alphabet, matching the path crate's text form.
pub type CanopySequence = Vec<Step>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("unexpected character {0:?} in tree literal")]
    BadLiteral(char),
    #[error("unbalanced parentheses in tree literal")]
    Unbalanced,
    #[error("no vertex at the given position")]
    NoSuchVertex,
    #[error("rotation pivot must have an internal {0:?} child")]
    MissingChild(Branch),
}

/// Planar binary tree. `Leaf` is the empty tree, so every vertex is a
/// `Node` with two (possibly empty) subtrees.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum BinaryTree {
    Leaf,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

use BinaryTree::{Leaf, Node};

impl BinaryTree {
    pub fn node(left: BinaryTree, right: BinaryTree) -> BinaryTree {
        Node(Box::new(left), Box::new(right))
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Leaf)
    }

    /// Number of internal vertices.
    pub fn size(&self) -> usize {
        match self {
            Leaf => 0,
            Node(l, r) => 1 + l.size() + r.size(),
        }
    }

    pub fn left(&self) -> Option<&BinaryTree> {
        match self {
            Leaf => None,
            Node(l, _) => Some(l),
        }
    }

    pub fn right(&self) -> Option<&BinaryTree> {
        match self {
            Leaf => None,
            Node(_, r) => Some(r),
        }
    }

    /// Subtree rooted at the end of the walk, if the walk stays on vertices.
    pub fn at(&self, path: &[Branch]) -> Result<&BinaryTree, TreeError> {
        let mut cur = self;
        for b in path {
            cur = match (cur, b) {
                (Node(l, _), Branch::Left) => l,
                (Node(_, r), Branch::Right) => r,
                (Leaf, _) => return Err(TreeError::NoSuchVertex),
            };
        }
        Ok(cur)
    }

    /// Mirror image: swap left and right below every vertex.
    pub fn reflect(&self) -> BinaryTree {
        match self {
            Leaf => Leaf,
            Node(l, r) => BinaryTree::node(r.reflect(), l.reflect()),
        }
    }

    /// Completion: the same tree with every missing child made explicit.
    pub fn complete(&self) -> CompleteBinaryTree {
        match self {
            Leaf => CompleteBinaryTree::External,
            Node(l, r) => {
                CompleteBinaryTree::Internal(Box::new(l.complete()), Box::new(r.complete()))
            }
        }
    }

    /// Compact JSON value: a leaf is `null`, a vertex is `[left, right]`.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Leaf => serde_json::Value::Null,
            Node(l, r) => serde_json::Value::Array(vec![l.to_json(), r.to_json()]),
        }
    }
}

impl fmt::Display for BinaryTree {
    /// A leaf prints as `·`; a vertex prints `(L)` followed by `(R)` when
    /// the right subtree is nonempty, with empty subtree words elided, so
    /// the size-one tree is `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Leaf => write!(f, "\u{b7}"),
            Node(l, r) => {
                write!(f, "(")?;
                if !l.is_leaf() {
                    write!(f, "{l}")?;
                }
                write!(f, ")")?;
                if !r.is_leaf() {
                    write!(f, "({r})")?;
                }
                Ok(())
            }
        }
    }
}

/// Splits a leading balanced parenthesized group from the rest.
fn split_group(chars: &[char]) -> Result<(&[char], &[char]), TreeError> {
    if chars.first() != Some(&'(') {
        return Err(TreeError::BadLiteral(*chars.first().unwrap_or(&')')));
    }
    let mut depth = 0usize;
    for (i, &c) in chars.iter().enumerate() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Ok((&chars[1..i], &chars[i + 1..]));
                }
            }
            other => return Err(TreeError::BadLiteral(other)),
        }
    }
    Err(TreeError::Unbalanced)
}

impl FromStr for BinaryTree {
    type Err = TreeError;

    /// Parses the [`fmt::Display`] form: `·` or the empty word is the leaf,
    /// and otherwise the word is `(L)` optionally followed by `(R)` with `L`
    /// and `R` again tree words.
    fn from_str(s: &str) -> Result<Self, TreeError> {
        fn parse_word(chars: &[char]) -> Result<BinaryTree, TreeError> {
            if chars.is_empty() || chars == ['\u{b7}'] {
                return Ok(Leaf);
            }
            let (left_word, rest) = split_group(chars)?;
            let left = parse_word(left_word)?;
            let right = if rest.is_empty() {
                Leaf
            } else {
                let (right_word, tail) = split_group(rest)?;
                if let Some(&c) = tail.first() {
                    return Err(TreeError::BadLiteral(c));
                }
                parse_word(right_word)?
            };
            Ok(BinaryTree::node(left, right))
        }
        parse_word(&s.chars().collect::<Vec<_>>())
    }
}

/// Completion of a binary tree: every vertex has exactly two children and
/// the frontier consists of external leaves.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum CompleteBinaryTree {
    External,
    Internal(Box<CompleteBinaryTree>, Box<CompleteBinaryTree>),
}

impl CompleteBinaryTree {
    /// Inverse of [`BinaryTree::complete`].
    pub fn decomplete(&self) -> BinaryTree {
        match self {
            CompleteBinaryTree::External => Leaf,
            CompleteBinaryTree::Internal(l, r) => BinaryTree::node(l.decomplete(), r.decomplete()),
        }
    }

    pub fn external_count(&self) -> usize {
        match self {
            CompleteBinaryTree::External => 1,
            CompleteBinaryTree::Internal(l, r) => l.external_count() + r.external_count(),
        }
    }

    /// For each external vertex in left-to-right order, whether it is a
    /// right child (`true`) or a left child (`false`). A bare external
    /// root counts as a left child.
    #[cfg(test)]
    fn external_sides(&self) -> Vec<bool> {
        fn walk(t: &CompleteBinaryTree, is_right: bool, out: &mut Vec<bool>) {
            match t {
                CompleteBinaryTree::External => out.push(is_right),
                CompleteBinaryTree::Internal(l, r) => {
                    walk(l, false, out);
                    walk(r, true, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, false, &mut out);
        out
    }
}

/// All binary trees with `n` vertices.
pub fn all_trees(n: usize) -> Vec<BinaryTree> {
    if n == 0 {
        return vec![Leaf];
    }
    let mut out = Vec::new();
    for k in 0..n {
        for l in all_trees(k) {
            for r in all_trees(n - 1 - k) {
                out.push(BinaryTree::node(l.clone(), r.clone()));
            }
        }
    }
    out
}

/// Vertices in symmetric (in-order) order, each as its root walk.
pub fn symmetric_order(t: &BinaryTree) -> Vec<VertexPath> {
    fn walk(t: &BinaryTree, prefix: &mut VertexPath, out: &mut Vec<VertexPath>) {
        if let Node(l, r) = t {
            prefix.push(Branch::Left);
            walk(l, prefix, out);
            prefix.pop();
            out.push(prefix.clone());
            prefix.push(Branch::Right);
            walk(r, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    walk(t, &mut Vec::new(), &mut out);
    out
}

/// Number of right edges on the root walk to each vertex, listed in
/// postorder. Equals the horizontal profile of the tree's path pair: entry
/// `k` is the distance of the `(k+1)`-th point of `u` above `v` (see
/// [`pair_paths`] and [`crate::path::horiz_profile`]).
pub fn postorder_right_depths(t: &BinaryTree) -> Vec<usize> {
    fn walk(t: &BinaryTree, depth: usize, out: &mut Vec<usize>) {
        if let Node(l, r) = t {
            walk(l, depth, out);
            walk(r, depth + 1, out);
            out.push(depth);
        }
    }
    let mut out = Vec::new();
    walk(t, 0, &mut out);
    out
}

/// For each vertex with an internal left child, in symmetric order, the
/// number of right edges on the root walk to that vertex. Equals the gap
/// sequence of the tree's path pair; ordering by the child vertex instead
/// would break that equality (see the ordering guard test).
pub fn left_edge_right_depths(t: &BinaryTree) -> Vec<usize> {
    fn walk(t: &BinaryTree, depth: usize, out: &mut Vec<usize>) {
        if let Node(l, r) = t {
            walk(l, depth, out);
            if !l.is_leaf() {
                out.push(depth);
            }
            walk(r, depth + 1, out);
        }
    }
    let mut out = Vec::new();
    walk(t, 0, &mut out);
    out
}

/// Non-crossing path pair of a tree, built by the recursion on subtrees:
///
/// - the leaf and the single vertex map to two empty paths;
/// - two internal children: `(u_L N u_R E, v_L N E v_R)`;
/// - internal left child only: `(u_L N, v_L N)`;
/// - internal right child only: `(u_R E, E v_R)`.
///
/// The first component stays weakly above the second, both end at the same
/// point, and among trees with a fixed vertex count the pair determines the
/// tree. A tree with `n` vertices yields words of length `n - 1`; the
/// inverse, [`crate::bijection::tree_from_pair`], returns the nonempty tree.
pub fn pair_paths(t: &BinaryTree) -> (LatticePath, LatticePath) {
    fn rec(t: &BinaryTree, u: &mut Vec<Step>, v: &mut Vec<Step>) {
        match t {
            Leaf => {}
            Node(l, r) => match (l.is_leaf(), r.is_leaf()) {
                (true, true) => {}
                (false, true) => {
                    rec(l, u, v);
                    u.push(Step::North);
                    v.push(Step::North);
                }
                (true, false) => {
                    v.push(Step::East);
                    rec(r, u, v);
                    u.push(Step::East);
                }
                (false, false) => {
                    rec(l, u, v);
                    u.push(Step::North);
                    v.push(Step::North);
                    v.push(Step::East);
                    rec(r, u, v);
                    u.push(Step::East);
                }
            },
        }
    }
    let mut u = Vec::new();
    let mut v = Vec::new();
    rec(t, &mut u, &mut v);
    (LatticePath::new(u), LatticePath::new(v))
}

/// Canopy of a tree: for each vertex in symmetric order except the last,
/// an `E` when the vertex has an internal right child and an `N` when it
/// does not. (The last vertex never has one, so nothing is lost.) A tree
/// with `n` vertices has a canopy of length `n - 1`.
pub fn canopy(t: &BinaryTree) -> CanopySequence {
    fn walk(t: &BinaryTree, out: &mut Vec<Step>) {
        if let Node(l, r) = t {
            walk(l, out);
            out.push(if r.is_leaf() { Step::North } else { Step::East });
            walk(r, out);
        }
    }
    let mut out = Vec::new();
    walk(t, &mut out);
    out.pop();
    out
}

/// Canopy read from the completion: external vertices in left-to-right
/// order, first and last dropped, right children contributing `N` and left
/// children `E`. Agrees with [`canopy`]; kept as an independent route for
/// tests.
#[cfg(test)]
pub(crate) fn canopy_from_completion(t: &BinaryTree) -> CanopySequence {
    if t.is_leaf() {
        return Vec::new();
    }
    let sides = t.complete().external_sides();
    sides[1..sides.len() - 1]
        .iter()
        .map(|is_right| if *is_right { Step::North } else { Step::East })
        .collect()
}

/// Canopy read from the path pair: the second component of [`pair_paths`]
/// is the canopy word itself. Kept as an independent route for tests.
#[cfg(test)]
pub(crate) fn canopy_from_pair(t: &BinaryTree) -> CanopySequence {
    pair_paths(t).1.steps().to_vec()
}

/// Componentwise comparison on equal-length canopies, reading `E` as the
/// larger letter at each position.
pub fn canopy_leq(a: &[Step], b: &[Step]) -> bool {
    a.len() == b.len()
        && a.iter()
            .zip(b)
            .all(|(x, y)| !(x == &Step::East && y == &Step::North))
}

/// Right rotation at the vertex reached by `pivot`: rewrites the subtree
/// `((A)B)C` rooted there into `(A)(B C)`. The pivot's left child must be
/// internal (its subtrees are `A` and `B`).
pub fn rotate_right(t: &BinaryTree, pivot: &[Branch]) -> Result<BinaryTree, TreeError> {
    fn apply(t: &BinaryTree) -> Result<BinaryTree, TreeError> {
        match t {
            Node(l, c) => match l.as_ref() {
                Node(a, b) => Ok(BinaryTree::node(
                    a.as_ref().clone(),
                    BinaryTree::node(b.as_ref().clone(), c.as_ref().clone()),
                )),
                Leaf => Err(TreeError::MissingChild(Branch::Left)),
            },
            Leaf => Err(TreeError::NoSuchVertex),
        }
    }
    rewrite_at(t, pivot, &apply)
}

/// Left rotation at the vertex reached by `pivot`: inverse of
/// [`rotate_right`], rewriting `(A)(B C)` into `((A)B)C`; the pivot's right
/// child must be internal.
pub fn rotate_left(t: &BinaryTree, pivot: &[Branch]) -> Result<BinaryTree, TreeError> {
    fn apply(t: &BinaryTree) -> Result<BinaryTree, TreeError> {
        match t {
            Node(a, rest) => match rest.as_ref() {
                Node(b, c) => Ok(BinaryTree::node(
                    BinaryTree::node(a.as_ref().clone(), b.as_ref().clone()),
                    c.as_ref().clone(),
                )),
                Leaf => Err(TreeError::MissingChild(Branch::Right)),
            },
            Leaf => Err(TreeError::NoSuchVertex),
        }
    }
    rewrite_at(t, pivot, &apply)
}

fn rewrite_at(
    t: &BinaryTree,
    pivot: &[Branch],
    apply: &dyn Fn(&BinaryTree) -> Result<BinaryTree, TreeError>,
) -> Result<BinaryTree, TreeError> {
    match pivot.split_first() {
        None => apply(t),
        Some((b, rest)) => match t {
            Leaf => Err(TreeError::NoSuchVertex),
            Node(l, r) => Ok(match b {
                Branch::Left => BinaryTree::node(rewrite_at(l, rest, apply)?, r.as_ref().clone()),
                Branch::Right => BinaryTree::node(l.as_ref().clone(), rewrite_at(r, rest, apply)?),
            }),
        },
    }
}

/// A right rotation preserves the canopy exactly when the pivot's left
/// child has an internal right subtree (the `B` of `((A)B)C`); otherwise
/// it turns exactly one canopy `N` into an `E`.
pub fn right_rotation_preserves_canopy(
    t: &BinaryTree,
    pivot: &[Branch],
) -> Result<bool, TreeError> {
    match t.at(pivot)? {
        Node(l, _) => match l.as_ref() {
            Node(_, b) => Ok(!b.is_leaf()),
            Leaf => Err(TreeError::MissingChild(Branch::Left)),
        },
        Leaf => Err(TreeError::NoSuchVertex),
    }
}

/// All pivots at which a right rotation applies, in symmetric order.
pub fn right_rotation_sites(t: &BinaryTree) -> Vec<VertexPath> {
    symmetric_order(t)
        .into_iter()
        .filter(|p| matches!(t.at(p), Ok(Node(l, _)) if !l.is_leaf()))
        .collect()
}

/// All pivots at which a left rotation applies, in symmetric order.
pub fn left_rotation_sites(t: &BinaryTree) -> Vec<VertexPath> {
    symmetric_order(t)
        .into_iter()
        .filter(|p| matches!(t.at(p), Ok(Node(_, r)) if !r.is_leaf()))
        .collect()
}

/// The tree with the given canopy whose canopy-preserving right rotations
/// are exhausted: starts from [`tree_with_canopy`] and applies them until
/// none applies. Unique; see the confluence test.
pub fn t_max(canopy_word: &[Step]) -> BinaryTree {
    saturate(tree_with_canopy(canopy_word), Direction::Up)
}

/// The tree with the given canopy whose canopy-preserving left rotations
/// are exhausted. [`t_min`] and [`t_max`] bound the canopy class.
pub fn t_min(canopy_word: &[Step]) -> BinaryTree {
    saturate(tree_with_canopy(canopy_word), Direction::Down)
}

enum Direction {
    Up,
    Down,
}

fn saturate(mut t: BinaryTree, dir: Direction) -> BinaryTree {
    'outer: loop {
        let sites = match dir {
            Direction::Up => right_rotation_sites(&t),
            Direction::Down => left_rotation_sites(&t),
        };
        for p in sites {
            let keeps = match dir {
                Direction::Up => right_rotation_preserves_canopy(&t, &p) == Ok(true),
                // the inverse right rotation preserves the canopy exactly
                // when B of (A)(B C) is internal
                Direction::Down => matches!(
                    t.at(&p),
                    Ok(Node(_, r)) if matches!(r.as_ref(), Node(b, _) if !b.is_leaf())
                ),
            };
            if keeps {
                t = match dir {
                    Direction::Up => rotate_right(&t, &p),
                    Direction::Down => rotate_left(&t, &p),
                }
                .expect("site listing guarantees the rotation applies");
                continue 'outer;
            }
        }
        return t;
    }
}

/// Some tree whose canopy is the given word, by recursion: the empty word
/// gives the size-one tree; a word ending in `N` hangs the rest as a left
/// child; a word starting with `E` hangs the rest as a right child; the
/// remaining words split as `a N E d` around the last `N`, giving a vertex
/// with the tree of `a` on the left and the tree of `d` on the right.
pub fn tree_with_canopy(word: &[Step]) -> BinaryTree {
    match word {
        [] => BinaryTree::node(Leaf, Leaf),
        [rest @ .., Step::North] => BinaryTree::node(tree_with_canopy(rest), Leaf),
        [Step::East, rest @ ..] => BinaryTree::node(Leaf, tree_with_canopy(rest)),
        _ => {
            let split = word
                .iter()
                .rposition(|s| *s == Step::North)
                .expect("word neither ends in N nor starts with E, so it contains an N");
            debug_assert_eq!(word[split + 1], Step::East);
            BinaryTree::node(
                tree_with_canopy(&word[..split]),
                tree_with_canopy(&word[split + 2..]),
            )
        }
    }
}
