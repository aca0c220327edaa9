//! Explicit finite posets: closure matrices, meets and joins, interval
//! counting, duals, restrictions, and isomorphism checks.
//!
//! A poset is built from its covering relation. Construction reorders the
//! elements into a linear extension (smallest input index first among the
//! available ones), which later pays off twice: the unique maximal element
//! of any row intersection is simply its highest set bit, making meets and
//! joins a few word operations, and listings come out bottom-first.
//!
//! Reachability is kept as two dense bit matrices, one row per element for
//! the upset and one for the downset, so a poset with `n` elements costs
//! about `n^2 / 4` bytes.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};
use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use crate::bijection::ballot_from_tree;
use crate::path::{tam_covers, tam_elements, LatticePath};
use crate::tree::{all_trees, right_rotation_sites, rotate_right};

/// Largest `n` accepted by [`build_tree_tamari`]; the next size needs
/// matrices beyond 400 MB.
pub const MAX_TREE_TAMARI: usize = 10;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("cover edge references an element outside the poset")]
    UnknownElement,
    #[error("cover relation contains a cycle")]
    CyclicCovers,
    #[error("size {0} exceeds the supported maximum of {MAX_TREE_TAMARI}")]
    TooLarge(usize),
}

/// Dense square bit matrix, row-major over `u64` words.
struct BitMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        BitMatrix {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1u64 << (j % 64);
    }

    fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    fn or_row_into(&mut self, src: usize, dst: usize) {
        let w = self.words;
        let (s, d) = (src * w, dst * w);
        if s > d {
            let (head, tail) = self.bits.split_at_mut(s);
            for k in 0..w {
                head[d + k] |= tail[k];
            }
        } else {
            let (head, tail) = self.bits.split_at_mut(d);
            for k in 0..w {
                tail[k] |= head[s + k];
            }
        }
    }

    fn row_popcount(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    fn set_bits_of_row(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(i).iter().enumerate().flat_map(|(k, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * 64 + b)
                }
            })
        })
    }

    fn transpose(&self) -> BitMatrix {
        let mut out = BitMatrix::new(self.n);
        for i in 0..self.n {
            for j in self.set_bits_of_row(i) {
                out.set(j, i);
            }
        }
        out
    }

    /// Matrix with both indices reversed: entry `(i, j)` reads
    /// `(n-1-i, n-1-j)` of the original.
    fn reverse_both(&self) -> BitMatrix {
        let mut out = BitMatrix::new(self.n);
        for i in 0..self.n {
            for j in self.set_bits_of_row(i) {
                out.set(self.n - 1 - i, self.n - 1 - j);
            }
        }
        out
    }
}

/// Finite poset over elements of type `T`, stored with full reachability.
/// Element indices form a linear extension: `a <= b` implies
/// `index(a) <= index(b)`.
pub struct FinitePoset<T> {
    elements: Vec<T>,
    /// row `i` = indices `j` with `element(i) <= element(j)`
    up: BitMatrix,
    /// row `i` = indices `j` with `element(j) <= element(i)`
    down: BitMatrix,
    /// covering relation, `covers[i]` = indices covering element `i`, sorted
    covers: Vec<Vec<usize>>,
}

impl<T: Eq> FinitePoset<T> {
    /// Builds the poset whose order is generated by the given cover edges,
    /// `(a, b)` meaning element `b` covers element `a`. Elements may arrive
    /// in any order; they are reindexed into a linear extension that keeps
    /// smaller input indices first where the order allows.
    pub fn from_cover_edges(
        elements: Vec<T>,
        edges: &[(usize, usize)],
    ) -> Result<Self, PosetError> {
        let n = elements.len();
        let mut out_adj = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(PosetError::UnknownElement);
            }
            out_adj[a].push(b);
            indeg[b] += 1;
        }

        let mut heap: BinaryHeap<Reverse<usize>> =
            (0..n).filter(|&i| indeg[i] == 0).map(Reverse).collect();
        let mut rank = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        while let Some(Reverse(i)) = heap.pop() {
            rank[i] = order.len();
            order.push(i);
            for &j in &out_adj[i] {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    heap.push(Reverse(j));
                }
            }
        }
        if order.len() != n {
            return Err(PosetError::CyclicCovers);
        }

        let mut keyed: Vec<(usize, T)> = elements.into_iter().enumerate().collect();
        keyed.sort_by_key(|(old, _)| rank[*old]);
        let elements: Vec<T> = keyed.into_iter().map(|(_, t)| t).collect();

        let mut covers = vec![Vec::new(); n];
        for &(a, b) in edges {
            covers[rank[a]].push(rank[b]);
        }
        for c in &mut covers {
            c.sort_unstable();
            c.dedup();
        }

        let mut up = BitMatrix::new(n);
        for i in (0..n).rev() {
            up.set(i, i);
            for &k in &covers[i] {
                up.or_row_into(k, i);
            }
        }
        let down = up.transpose();

        Ok(FinitePoset {
            elements,
            up,
            down,
            covers,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements in index order, a linear extension from bottom to top.
    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &T {
        &self.elements[i]
    }

    pub fn index_of(&self, x: &T) -> Option<usize> {
        self.elements.iter().position(|e| e == x)
    }

    pub fn leq_idx(&self, a: usize, b: usize) -> bool {
        self.up.get(a, b)
    }

    pub fn leq(&self, a: &T, b: &T) -> Result<bool, PosetError> {
        let (i, j) = self.pair_indices(a, b)?;
        Ok(self.leq_idx(i, j))
    }

    pub fn covers_idx(&self, i: usize) -> &[usize] {
        &self.covers[i]
    }

    fn pair_indices(&self, a: &T, b: &T) -> Result<(usize, usize), PosetError> {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => Ok((i, j)),
            _ => Err(PosetError::UnknownElement),
        }
    }

    /// Greatest lower bound, if the pair has one. The common lower bounds
    /// form a row intersection whose highest set bit is a maximal common
    /// lower bound; it is the meet exactly when it dominates the rest.
    pub fn meet_idx(&self, a: usize, b: usize) -> Option<usize> {
        let (ra, rb) = (self.down.row(a), self.down.row(b));
        let top = (0..self.down.words).rev().find_map(|k| {
            let x = ra[k] & rb[k];
            (x != 0).then(|| k * 64 + 63 - x.leading_zeros() as usize)
        })?;
        let rm = self.down.row(top);
        (0..self.down.words)
            .all(|k| ra[k] & rb[k] & !rm[k] == 0)
            .then_some(top)
    }

    /// Least upper bound, if the pair has one: dual of [`Self::meet_idx`].
    pub fn join_idx(&self, a: usize, b: usize) -> Option<usize> {
        let (ra, rb) = (self.up.row(a), self.up.row(b));
        let bottom = (0..self.up.words).find_map(|k| {
            let x = ra[k] & rb[k];
            (x != 0).then(|| k * 64 + x.trailing_zeros() as usize)
        })?;
        let rm = self.up.row(bottom);
        (0..self.up.words)
            .all(|k| ra[k] & rb[k] & !rm[k] == 0)
            .then_some(bottom)
    }

    pub fn meet(&self, a: &T, b: &T) -> Result<Option<&T>, PosetError> {
        let (i, j) = self.pair_indices(a, b)?;
        Ok(self.meet_idx(i, j).map(|m| &self.elements[m]))
    }

    pub fn join(&self, a: &T, b: &T) -> Result<Option<&T>, PosetError> {
        let (i, j) = self.pair_indices(a, b)?;
        Ok(self.join_idx(i, j).map(|m| &self.elements[m]))
    }

    /// First pair (by index) missing a meet or a join, if any.
    pub fn lattice_counterexample(&self) -> Option<(&T, &T)> {
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.meet_idx(i, j).is_none() || self.join_idx(i, j).is_none() {
                    return Some((&self.elements[i], &self.elements[j]));
                }
            }
        }
        None
    }

    pub fn is_lattice(&self) -> bool {
        self.lattice_counterexample().is_none()
    }

    pub fn minimum(&self) -> Option<&T> {
        (!self.is_empty() && self.up.row_popcount(0) == self.len()).then(|| &self.elements[0])
    }

    pub fn maximum(&self) -> Option<&T> {
        let n = self.len();
        (n > 0 && self.down.row_popcount(n - 1) == n).then(|| &self.elements[n - 1])
    }

    /// Number of ordered pairs `a <= b`.
    pub fn intervals_count(&self) -> BigUint {
        (0..self.len())
            .map(|i| BigUint::from(self.up.row_popcount(i)))
            .sum()
    }

    /// Sum over elements `b` of `weight(b)` times the number of `a <= b`.
    pub fn weighted_intervals<F: Fn(&T) -> BigUint>(&self, weight: F) -> BigUint {
        (0..self.len())
            .map(|i| weight(&self.elements[i]) * BigUint::from(self.down.row_popcount(i)))
            .sum()
    }

    pub fn counts(&self) -> CountReport {
        CountReport {
            elements: self.len(),
            cover_edges: self.covers.iter().map(Vec::len).sum(),
            intervals: self.intervals_count(),
        }
    }

    /// Elements of the closed interval from `lo` to `hi`, in index order;
    /// empty when the two are incomparable or reversed.
    pub fn interval(&self, lo: &T, hi: &T) -> Result<Vec<&T>, PosetError> {
        let (i, j) = self.pair_indices(lo, hi)?;
        let (ri, rj) = (self.up.row(i), self.down.row(j));
        let mut out = Vec::new();
        for k in 0..self.up.words {
            let mut w = ri[k] & rj[k];
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                out.push(&self.elements[k * 64 + b]);
            }
        }
        Ok(out)
    }

    /// Cover edges recomputed from reachability alone: `(a, b)` is kept
    /// when nothing sits strictly between. Construction already stores the
    /// given covers, so this doubles as a consistency probe for them.
    pub fn reduction_edges(&self) -> Vec<(usize, usize)> {
        let w = self.up.words;
        let mut out = Vec::new();
        for a in 0..self.len() {
            let ra = self.up.row(a);
            for b in self.up.set_bits_of_row(a) {
                if b == a {
                    continue;
                }
                let rb = self.down.row(b);
                // strict up of a meets strict down of b only off a and b
                let clean = (0..w).all(|k| {
                    let mut x = ra[k] & rb[k];
                    if k == a / 64 {
                        x &= !(1u64 << (a % 64));
                    }
                    if k == b / 64 {
                        x &= !(1u64 << (b % 64));
                    }
                    x == 0
                });
                if clean {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

impl<T: Eq + Clone> FinitePoset<T> {
    /// Same elements, reversed order.
    pub fn dual(&self) -> FinitePoset<T> {
        let n = self.len();
        let elements: Vec<T> = self.elements.iter().rev().cloned().collect();
        let up = self.down.reverse_both();
        let down = self.up.reverse_both();
        let mut covers = vec![Vec::new(); n];
        for (a, cs) in self.covers.iter().enumerate() {
            for &b in cs {
                covers[n - 1 - b].push(n - 1 - a);
            }
        }
        for c in &mut covers {
            c.sort_unstable();
        }
        FinitePoset {
            elements,
            up,
            down,
            covers,
        }
    }

    /// Induced subposet on the elements the predicate keeps, with covers
    /// recomputed by transitive reduction of the induced order.
    pub fn restrict<F: Fn(&T) -> bool>(&self, keep: F) -> FinitePoset<T> {
        let kept: Vec<usize> = (0..self.len())
            .filter(|&i| keep(&self.elements[i]))
            .collect();
        let n = kept.len();
        let mut up = BitMatrix::new(n);
        for (i2, &i) in kept.iter().enumerate() {
            for (j2, &j) in kept.iter().enumerate() {
                if self.up.get(i, j) {
                    up.set(i2, j2);
                }
            }
        }
        let down = up.transpose();

        let mut covers = vec![Vec::new(); n];
        for (a, row) in covers.iter_mut().enumerate() {
            for b in up.set_bits_of_row(a) {
                if b == a {
                    continue;
                }
                let (ra, rb) = (up.row(a), down.row(b));
                let clean = (0..up.words).all(|k| {
                    let mut x = ra[k] & rb[k];
                    if k == a / 64 {
                        x &= !(1u64 << (a % 64));
                    }
                    if k == b / 64 {
                        x &= !(1u64 << (b % 64));
                    }
                    x == 0
                });
                if clean {
                    row.push(b);
                }
            }
        }

        FinitePoset {
            elements: kept.iter().map(|&i| self.elements[i].clone()).collect(),
            up,
            down,
            covers,
        }
    }
}

impl<T: Eq + Ord + Clone> FinitePoset<T> {
    /// Builds a poset from a cover-producing function. Every produced cover
    /// must be one of the listed elements.
    pub fn from_covers<F: Fn(&T) -> Vec<T>>(
        elements: Vec<T>,
        covers_of: F,
    ) -> Result<Self, PosetError> {
        let index: BTreeMap<&T, usize> = elements.iter().zip(0..).collect();
        let mut edges = Vec::new();
        for (i, e) in elements.iter().enumerate() {
            for c in covers_of(e) {
                match index.get(&c) {
                    Some(&j) => edges.push((i, j)),
                    None => return Err(PosetError::UnknownElement),
                }
            }
        }
        Self::from_cover_edges(elements, &edges)
    }
}

impl<T: Eq + fmt::Display> FinitePoset<T> {
    /// DOT digraph of the covering relation, bottom-up.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph {\n  rankdir=BT;\n");
        for (i, e) in self.elements.iter().enumerate() {
            let label = e.to_string().replace('"', "\\\"");
            out.push_str(&format!("  {i} [label=\"{label}\"];\n"));
        }
        for (a, cs) in self.covers.iter().enumerate() {
            for &b in cs {
                out.push_str(&format!("  {a} -> {b};\n"));
            }
        }
        out.push_str("}\n");
        out
    }

    /// JSON object with the element listing and the cover edges
    /// (`[a, b]` meaning element `b` covers element `a`).
    pub fn to_json(&self) -> serde_json::Value {
        let elements: Vec<serde_json::Value> = self
            .elements
            .iter()
            .map(|e| serde_json::Value::String(e.to_string()))
            .collect();
        let covers: Vec<serde_json::Value> = self
            .covers
            .iter()
            .enumerate()
            .flat_map(|(a, cs)| cs.iter().map(move |&b| serde_json::json!([a, b])))
            .collect();
        serde_json::json!({ "elements": elements, "covers": covers })
    }
}

/// Element, cover-edge, and interval counts of one poset.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CountReport {
    pub elements: usize,
    pub cover_edges: usize,
    pub intervals: BigUint,
}

/// The poset of paths weakly above `v`, ordered by the covering moves.
pub fn build_tam_poset(v: &LatticePath) -> FinitePoset<LatticePath> {
    let elements = tam_elements(v);
    FinitePoset::from_covers(elements, |u| {
        tam_covers(u, v).expect("enumerated elements stay weakly above the base")
    })
    .expect("covering moves form an acyclic relation over the enumeration")
}

/// The rotation order on binary trees with `n` vertices, encoded as ballot
/// paths: each right rotation is a cover. Sizes above [`MAX_TREE_TAMARI`]
/// are rejected.
pub fn build_tree_tamari(n: usize) -> Result<FinitePoset<LatticePath>, PosetError> {
    if n > MAX_TREE_TAMARI {
        return Err(PosetError::TooLarge(n));
    }
    let trees = all_trees(n);
    let words: Vec<LatticePath> = trees.iter().map(ballot_from_tree).collect();
    let index: BTreeMap<&LatticePath, usize> = words.iter().zip(0..).collect();
    let mut edges = Vec::new();
    for (i, t) in trees.iter().enumerate() {
        for site in right_rotation_sites(t) {
            let rotated =
                ballot_from_tree(&rotate_right(t, &site).expect("listed sites admit the rotation"));
            let j = index[&rotated];
            edges.push((i, j));
        }
    }
    FinitePoset::from_cover_edges(words, &edges)
}

/// Whether two posets are order-isomorphic, by signature-pruned
/// backtracking. Meant for small posets.
pub fn order_iso<T: Eq, U: Eq>(p: &FinitePoset<T>, q: &FinitePoset<U>) -> bool {
    if p.len() != q.len() {
        return false;
    }
    let n = p.len();
    let sig_p = signatures(p);
    let sig_q = signatures(q);
    {
        let mut a = sig_p.clone();
        let mut b = sig_q.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return false;
        }
    }

    fn extend<T: Eq, U: Eq>(
        p: &FinitePoset<T>,
        q: &FinitePoset<U>,
        sig_p: &[(usize, usize, usize, usize)],
        sig_q: &[(usize, usize, usize, usize)],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let i = map.len();
        if i == p.len() {
            return true;
        }
        for j in 0..q.len() {
            if used[j] || sig_p[i] != sig_q[j] {
                continue;
            }
            let consistent = (0..i).all(|k| {
                p.leq_idx(k, i) == q.leq_idx(map[k], j) && p.leq_idx(i, k) == q.leq_idx(j, map[k])
            });
            if consistent {
                map.push(j);
                used[j] = true;
                if extend(p, q, sig_p, sig_q, map, used) {
                    return true;
                }
                used[j] = false;
                map.pop();
            }
        }
        false
    }

    extend(
        p,
        q,
        &sig_p,
        &sig_q,
        &mut Vec::with_capacity(n),
        &mut vec![false; n],
    )
}

/// Whether two posets are anti-isomorphic (one is isomorphic to the other
/// upside down).
pub fn order_anti_iso<T: Eq, U: Eq + Clone>(p: &FinitePoset<T>, q: &FinitePoset<U>) -> bool {
    order_iso(p, &q.dual())
}

fn signatures<T: Eq>(p: &FinitePoset<T>) -> Vec<(usize, usize, usize, usize)> {
    let mut in_deg = vec![0usize; p.len()];
    for cs in &p.covers {
        for &b in cs {
            in_deg[b] += 1;
        }
    }
    (0..p.len())
        .map(|i| {
            (
                p.down.row_popcount(i),
                p.up.row_popcount(i),
                p.covers[i].len(),
                in_deg[i],
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::all_paths;

    fn p(s: &str) -> LatticePath {
        s.parse().unwrap()
    }

    fn diamond() -> FinitePoset<&'static str> {
        FinitePoset::from_cover_edges(
            vec!["bot", "left", "right", "top"],
            &[(0, 1), (0, 2), (1, 3), (2, 3)],
        )
        .unwrap()
    }

    #[test]
    fn diamond_is_a_lattice() {
        let d = diamond();
        assert_eq!(d.len(), 4);
        assert!(d.is_lattice());
        assert_eq!(d.meet(&"left", &"right").unwrap(), Some(&"bot"));
        assert_eq!(d.join(&"left", &"right").unwrap(), Some(&"top"));
        assert_eq!(d.meet(&"left", &"top").unwrap(), Some(&"left"));
        assert_eq!(d.minimum(), Some(&"bot"));
        assert_eq!(d.maximum(), Some(&"top"));
        assert!(d.leq(&"bot", &"top").unwrap());
        assert!(!d.leq(&"left", &"right").unwrap());
        // 4 reflexive + 4 cover + 1 bottom-top
        assert_eq!(d.intervals_count(), BigUint::from(9u32));
        assert!(matches!(
            d.leq(&"bot", &"missing"),
            Err(PosetError::UnknownElement)
        ));
    }

    #[test]
    fn antichain_and_bowtie_fail_the_lattice_check() {
        let anti = FinitePoset::from_cover_edges(vec!["a", "b"], &[]).unwrap();
        assert!(!anti.is_lattice());
        assert_eq!(anti.lattice_counterexample(), Some((&"a", &"b")));
        assert_eq!(anti.minimum(), None);
        assert_eq!(anti.maximum(), None);

        // two bottoms under two tops: joins exist pointwise but not uniquely
        let bowtie = FinitePoset::from_cover_edges(
            vec!["a", "b", "x", "y"],
            &[(0, 2), (0, 3), (1, 2), (1, 3)],
        )
        .unwrap();
        assert_eq!(bowtie.join_idx(0, 1), None);
        assert_eq!(bowtie.meet_idx(2, 3), None);
        assert!(!bowtie.is_lattice());
    }

    #[test]
    fn construction_reorders_into_a_linear_extension() {
        let q = FinitePoset::from_cover_edges(vec!["top", "bot"], &[(1, 0)]).unwrap();
        assert_eq!(q.elements(), &["bot", "top"]);
        assert!(q.leq(&"bot", &"top").unwrap());
    }

    #[test]
    fn construction_rejects_cycles_and_bad_edges() {
        assert!(matches!(
            FinitePoset::from_cover_edges(vec!["a", "b"], &[(0, 1), (1, 0)]),
            Err(PosetError::CyclicCovers)
        ));
        assert!(matches!(
            FinitePoset::from_cover_edges(vec!["a"], &[(0, 3)]),
            Err(PosetError::UnknownElement)
        ));
        assert!(matches!(
            FinitePoset::from_covers(vec![p("EN")], |_| vec![p("NE")]),
            Err(PosetError::UnknownElement)
        ));
    }

    #[test]
    fn pentagon_structure() {
        let t3 = build_tam_poset(&p("NENENE"));
        assert_eq!(
            t3.elements(),
            &[
                p("NENENE"),
                p("NENNEE"),
                p("NNEENE"),
                p("NNENEE"),
                p("NNNEEE"),
            ]
        );
        assert!(t3.is_lattice());
        assert_eq!(t3.minimum(), Some(&p("NENENE")));
        assert_eq!(t3.maximum(), Some(&p("NNNEEE")));
        assert_eq!(t3.intervals_count(), BigUint::from(13u32));
        assert_eq!(
            t3.meet(&p("NNEENE"), &p("NENNEE")).unwrap(),
            Some(&p("NENENE"))
        );
        assert_eq!(
            t3.join(&p("NNEENE"), &p("NENNEE")).unwrap(),
            Some(&p("NNNEEE"))
        );
        let report = t3.counts();
        assert_eq!(report.elements, 5);
        assert_eq!(report.cover_edges, 5);
    }

    #[test]
    fn stored_covers_equal_transitive_reduction() {
        for len in 0..=5 {
            for v in all_paths(len) {
                let poset = build_tam_poset(&v);
                let mut from_covers: Vec<(usize, usize)> = poset
                    .covers
                    .iter()
                    .enumerate()
                    .flat_map(|(a, cs)| cs.iter().map(move |&b| (a, b)))
                    .collect();
                from_covers.sort_unstable();
                let mut reduced = poset.reduction_edges();
                reduced.sort_unstable();
                assert_eq!(from_covers, reduced, "base {v}");
            }
        }
    }

    #[test]
    fn interval_listing() {
        let t3 = build_tam_poset(&p("NENENE"));
        let ivl = t3.interval(&p("NENENE"), &p("NNENEE")).unwrap();
        assert_eq!(ivl, vec![&p("NENENE"), &p("NNEENE"), &p("NNENEE")]);
        assert!(t3.interval(&p("NNENEE"), &p("NENNEE")).unwrap().is_empty());
    }

    #[test]
    fn weighted_intervals_weight_the_tops() {
        let t2 = build_tam_poset(&p("NENE"));
        // downset sizes: NENE -> 1, NNEE -> 2
        let total =
            t2.weighted_intervals(|u| BigUint::from(if u == &p("NENE") { 10u32 } else { 1 }));
        assert_eq!(total, BigUint::from(12u32));
    }

    #[test]
    fn dual_reverses_the_order() {
        let t3 = build_tam_poset(&p("NENENE"));
        let d = t3.dual();
        assert_eq!(d.minimum(), Some(&p("NNNEEE")));
        assert_eq!(d.maximum(), Some(&p("NENENE")));
        assert_eq!(d.intervals_count(), t3.intervals_count());
        for i in 0..t3.len() {
            for j in 0..t3.len() {
                let (a, b) = (t3.element(i), t3.element(j));
                assert_eq!(t3.leq(a, b).unwrap(), d.leq(b, a).unwrap());
            }
        }
        assert!(order_anti_iso(&t3, &t3));
        assert!(order_iso(&t3, &d.dual()));
    }

    #[test]
    fn restriction_recomputes_covers() {
        let t3 = build_tam_poset(&p("NENENE"));
        let chain = t3.restrict(|u| [p("NENENE"), p("NNENEE"), p("NNNEEE")].contains(u));
        assert_eq!(chain.len(), 3);
        // the kept elements form a chain; the skipped middle element makes
        // the first edge a freshly reduced one
        assert_eq!(chain.covers_idx(0), &[1]);
        assert_eq!(chain.covers_idx(1), &[2]);
        assert!(chain.is_lattice());
    }

    #[test]
    fn iso_and_anti_iso_basics() {
        let pent1 = build_tam_poset(&p("NENENE"));
        let pent2 = build_tam_poset(&p("NENENE"));
        assert!(order_iso(&pent1, &pent2));

        let chain5 =
            FinitePoset::from_cover_edges(vec![0, 1, 2, 3, 4], &[(0, 1), (1, 2), (2, 3), (3, 4)])
                .unwrap();
        assert!(!order_iso(&pent1, &chain5));
        assert!(order_anti_iso(&chain5, &chain5));

        let anti3 = FinitePoset::from_cover_edges(vec![0, 1, 2], &[]).unwrap();
        let chain3 = FinitePoset::from_cover_edges(vec![0, 1, 2], &[(0, 1), (1, 2)]).unwrap();
        assert!(!order_iso(&anti3, &chain3));
    }

    #[test]
    fn tree_tamari_small_sizes() {
        let t3 = build_tree_tamari(3).unwrap();
        assert_eq!(t3.len(), 5);
        assert!(t3.is_lattice());
        assert_eq!(t3.minimum(), Some(&p("NENENE")));
        assert_eq!(t3.maximum(), Some(&p("NNNEEE")));
        // same rotation lattice as the order over the alternating base
        assert!(order_iso(&t3, &build_tam_poset(&p("NENENE"))));

        let t4 = build_tree_tamari(4).unwrap();
        assert_eq!(t4.len(), 14);
        assert!(t4.is_lattice());
        assert!(matches!(
            build_tree_tamari(MAX_TREE_TAMARI + 1),
            Err(PosetError::TooLarge(_))
        ));
    }

    #[test]
    fn dot_and_json_fixtures() {
        let q = build_tam_poset(&p("EN"));
        assert_eq!(
            q.to_dot(),
            "digraph {\n  rankdir=BT;\n  0 [label=\"EN\"];\n  1 [label=\"NE\"];\n  0 -> 1;\n}\n"
        );
        assert_eq!(
            q.to_json(),
            serde_json::json!({
                "elements": ["EN", "NE"],
                "covers": [[0, 1]],
            })
        );
    }

    #[test]
    fn singleton_and_empty_posets() {
        let single = build_tam_poset(&p("NE"));
        assert_eq!(single.len(), 1);
        assert!(single.is_lattice());
        assert_eq!(single.minimum(), single.maximum());
        let empty = FinitePoset::<u32>::from_cover_edges(Vec::new(), &[]).unwrap();
        assert!(empty.is_empty());
        assert!(empty.is_lattice());
        assert_eq!(empty.minimum(), None);
        assert_eq!(empty.intervals_count(), BigUint::ZERO);
    }
}
