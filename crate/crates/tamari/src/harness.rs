//! Closed counting formulas and exhaustive verification sweeps.
//!
//! Every closed formula here has a brute-force counterpart that recounts
//! the same quantity from an explicitly built poset, so the two can be
//! compared on every size the tests reach. Division never truncates: each
//! quotient is checked to come out exact, which is itself a nontrivial
//! property of these expressions.
//!
//! The `verify_*` functions sweep a structural claim over every instance up
//! to a bound and report how many cases ran and which failed. They are the
//! workhorses behind the command line `check` subcommand and the
//! acceptance suite.

use std::fmt;

use num_bigint::BigUint;

use crate::arith::{binomial, exact_div, factorial};
use crate::bijection::{
    ballot_from_tree, dualize, tam_class_of_ballot, tree_from_ballot, tree_from_pair,
    NonCrossingPair,
};
use crate::path::{
    all_paths, count_paths_above, gap_sequence, horiz_profile, label_count, slope_cover,
    tam_covers, tam_elements, LatticePath, Step,
};
use crate::poset::{build_tam_poset, build_tree_tamari, PosetError};
use crate::tree::{
    all_trees, canopy, canopy_leq, left_edge_right_depths, pair_paths, postorder_right_depths,
    right_rotation_preserves_canopy, right_rotation_sites, rotate_right, t_max, t_min,
};

/// How many failure details a sweep keeps; failures beyond this still
/// count but are not described.
const FAILURE_DETAIL_CAP: usize = 16;

/// Tally of an exhaustive sweep: how many cases ran, how many failed, and
/// details for the first few failures.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VerificationOutcome {
    pub cases: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

impl VerificationOutcome {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < FAILURE_DETAIL_CAP {
                self.failures.push(detail());
            }
        }
    }

    /// Folds another sweep's tally into this one.
    pub fn merge(&mut self, other: VerificationOutcome) {
        self.cases += other.cases;
        self.failed += other.failed;
        for f in other.failures {
            if self.failures.len() < FAILURE_DETAIL_CAP {
                self.failures.push(f);
            }
        }
    }
}

impl fmt::Display for VerificationOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "ok ({} cases)", self.cases)
        } else {
            write!(f, "FAILED {} of {} cases", self.failed, self.cases)?;
            for d in &self.failures {
                write!(f, "\n  {d}")?;
            }
            Ok(())
        }
    }
}

/// `binom(2n+1, n) / (2n+1)`: elements over the alternating base with `n`
/// norths, and binary trees with `n` vertices.
pub fn catalan(n: u64) -> BigUint {
    exact_div(binomial(2 * n + 1, n), &BigUint::from(2 * n + 1))
}

/// `binom((m+1)n, n) / (mn+1)`: elements over the base `(N E^m)^n`.
/// Reduces to [`catalan`] at `m = 1`.
pub fn fuss_catalan(m: u64, n: u64) -> BigUint {
    exact_div(binomial((m + 1) * n, n), &BigUint::from(m * n + 1))
}

/// `2 binom(4n+1, n-1) / (n(n+1))`: intervals over the alternating base
/// with `n` norths.
pub fn tamari_intervals_formula(n: u64) -> BigUint {
    if n == 0 {
        return BigUint::from(1u32);
    }
    exact_div(
        BigUint::from(2u32) * binomial(4 * n + 1, n - 1),
        &BigUint::from(n * (n + 1)),
    )
}

/// `(m+1) binom((m+1)^2 n + m, n-1) / (n(mn+1))`: intervals over the base
/// `(N E^m)^n`. Reduces to [`tamari_intervals_formula`] at `m = 1`.
pub fn m_tamari_intervals_formula(m: u64, n: u64) -> BigUint {
    if n == 0 {
        return BigUint::from(1u32);
    }
    exact_div(
        BigUint::from(m + 1) * binomial((m + 1) * (m + 1) * n + m, n - 1),
        &BigUint::from(n * (m * n + 1)),
    )
}

/// `(m+1)^n (mn+1)^(n-2)`: intervals over `(N E^m)^n` where each interval
/// is weighted by the increasing north labellings of its top. The negative
/// exponent at `n = 1` is a genuine exact division.
pub fn labelled_intervals_formula(m: u64, n: u64) -> BigUint {
    let base = BigUint::from(m + 1).pow(n as u32);
    match n {
        0 => BigUint::from(1u32),
        1 => exact_div(base, &BigUint::from(m * n + 1)),
        _ => base * BigUint::from(m * n + 1).pow(n as u32 - 2),
    }
}

/// `2 (3n+3)! / ((n+2)! (2n+3)!)`: intervals summed over every base of
/// length `n`.
pub fn total_intervals_formula(n: u64) -> BigUint {
    exact_div(
        BigUint::from(2u32) * factorial(3 * n + 3),
        &(factorial(n + 2) * factorial(2 * n + 3)),
    )
}

/// Interval count of the poset over the alternating base, recounted from
/// the built poset.
pub fn tamari_intervals_brute(n: usize) -> BigUint {
    m_tamari_intervals_brute(1, n)
}

/// Interval count of the poset over `(N E^m)^n`, recounted from the built
/// poset.
pub fn m_tamari_intervals_brute(m: usize, n: usize) -> BigUint {
    build_tam_poset(&LatticePath::staircase(m, n)).intervals_count()
}

/// North-labelled interval count over `(N E^m)^n`, recounted from the
/// built poset: each interval contributes the increasing north labellings
/// of its top element.
pub fn labelled_intervals_brute(m: usize, n: usize) -> BigUint {
    build_tam_poset(&LatticePath::staircase(m, n))
        .weighted_intervals(|u| label_count(u, Step::North))
}

/// East-labelled interval count over the mirrored staircase `(N^m E)^n`.
/// Experimentally equal to [`labelled_intervals_brute`] at the same
/// parameters; no closed-form claim is made here.
pub fn east_labelled_intervals_brute(m: usize, n: usize) -> BigUint {
    build_tam_poset(&LatticePath::staircase(m, n).reverse_complement())
        .weighted_intervals(|u| label_count(u, Step::East))
}

/// Interval counts summed over every base of the given length, recounted
/// from built posets.
pub fn total_intervals_brute(len: usize) -> BigUint {
    all_paths(len)
        .iter()
        .map(|v| build_tam_poset(v).intervals_count())
        .sum()
}

/// First pair of elements over `v` missing a meet or a join, if any.
pub fn lattice_counterexample(v: &LatticePath) -> Option<(LatticePath, LatticePath)> {
    let poset = build_tam_poset(v);
    poset
        .lattice_counterexample()
        .map(|(a, b)| (a.clone(), b.clone()))
}

/// Checks that the poset over `v` is a lattice with `v` at the bottom and
/// the sorted-last word at the top, and that its element count matches the
/// counting recurrence.
pub fn verify_lattice_at(v: &LatticePath) -> VerificationOutcome {
    let mut out = VerificationOutcome::default();
    let poset = build_tam_poset(v);
    out.check(poset.minimum() == Some(v), || {
        format!("base {v}: the base is not the minimum")
    });
    out.check(poset.maximum().is_some(), || {
        format!("base {v}: no maximum")
    });
    out.check(BigUint::from(poset.len()) == count_paths_above(v), || {
        format!("base {v}: element count disagrees with the recurrence")
    });
    match poset.lattice_counterexample() {
        None => out.check(true, String::new),
        Some((a, b)) => out.check(false, || format!("base {v}: no meet or join for {a}, {b}")),
    }
    out
}

/// [`verify_lattice_at`] over every base of length at most `max_len`.
pub fn verify_lattice(max_len: usize) -> VerificationOutcome {
    let mut out = VerificationOutcome::default();
    for len in 0..=max_len {
        for v in all_paths(len) {
            out.merge(verify_lattice_at(&v));
        }
    }
    out
}

/// Checks that dualizing over `v` is an involutive order anti-isomorphism
/// onto the poset over the reversed complement of `v`.
pub fn verify_duality_at(v: &LatticePath) -> VerificationOutcome {
    let mut out = VerificationOutcome::default();
    let mirror = v.reverse_complement();
    let poset = build_tam_poset(v);
    let mirrored = build_tam_poset(&mirror);

    let mut image = Vec::with_capacity(poset.len());
    for u in poset.elements() {
        let d = dualize(v, u).expect("poset elements form non-crossing pairs with the base");
        let idx = mirrored.index_of(&d);
        out.check(idx.is_some(), || {
            format!("base {v}: dual of {u} is not an element over {mirror}")
        });
        out.check(dualize(&mirror, &d).ok().as_ref() == Some(u), || {
            format!("base {v}: dualizing {u} twice does not return it")
        });
        image.push(idx);
    }
    let mut seen = vec![false; mirrored.len()];
    let mut injective = true;
    for idx in image.iter().flatten() {
        if seen[*idx] {
            injective = false;
        }
        seen[*idx] = true;
    }
    out.check(injective && poset.len() == mirrored.len(), || {
        format!("base {v}: duals do not exhaust the elements over {mirror}")
    });

    for i in 0..poset.len() {
        for j in 0..poset.len() {
            let (Some(di), Some(dj)) = (image[i], image[j]) else {
                continue;
            };
            out.check(poset.leq_idx(i, j) == mirrored.leq_idx(dj, di), || {
                let (a, b) = (poset.element(i), poset.element(j));
                format!("base {v}: order of {a}, {b} is not reversed")
            });
        }
    }
    out
}

/// [`verify_duality_at`] over every base of length at most `max_len`.
pub fn verify_duality(max_len: usize) -> VerificationOutcome {
    let mut out = VerificationOutcome::default();
    for len in 0..=max_len {
        for v in all_paths(len) {
            out.merge(verify_duality_at(&v));
        }
    }
    out
}

/// Checks the counting recurrence against breadth-first enumeration for
/// every base of length at most `max_len`.
pub fn verify_counting(max_len: usize) -> VerificationOutcome {
    let mut out = VerificationOutcome::default();
    for len in 0..=max_len {
        for v in all_paths(len) {
            out.check(
                BigUint::from(tam_elements(&v).len()) == count_paths_above(&v),
                || format!("base {v}: recurrence disagrees with enumeration"),
            );
        }
    }
    out
}

/// Checks the canopy partition of the rotation order on trees with `n`
/// vertices: `2^(n-1)` blocks, each the interval between the extremal
/// trees of its canopy, each isomorphic to the poset over the canopy via
/// the pair bijection.
pub fn verify_partition(n: usize) -> Result<VerificationOutcome, PosetError> {
    let mut out = VerificationOutcome::default();
    let rotation = build_tree_tamari(n)?;

    let mut blocks: std::collections::BTreeMap<LatticePath, Vec<(usize, LatticePath)>> =
        std::collections::BTreeMap::new();
    for (i, w) in rotation.elements().iter().enumerate() {
        let (base, element) = tam_class_of_ballot(w).expect("rotation elements are ballot words");
        blocks.entry(base).or_default().push((i, element));
    }
    if n > 0 {
        out.check(blocks.len() == 1 << (n - 1), || {
            format!(
                "size {n}: expected {} blocks, found {}",
                1 << (n - 1),
                blocks.len()
            )
        });
    }

    for (base, members) in &blocks {
        let over_base = build_tam_poset(base);

        let mut elements: Vec<&LatticePath> = members.iter().map(|(_, e)| e).collect();
        elements.sort();
        out.check(
            elements.iter().map(|e| (*e).clone()).collect::<Vec<_>>() == tam_elements(base),
            || format!("size {n}, canopy {base}: block elements differ from the poset over it"),
        );

        let lo = ballot_from_tree(&t_min(base.steps()));
        let hi = ballot_from_tree(&t_max(base.steps()));
        let interval: Vec<&LatticePath> = rotation
            .interval(&lo, &hi)
            .expect("extremal trees occur in the rotation order");
        let mut block_words: Vec<&LatticePath> =
            members.iter().map(|(i, _)| rotation.element(*i)).collect();
        block_words.sort();
        let mut interval_sorted = interval;
        interval_sorted.sort();
        out.check(block_words == interval_sorted, || {
            format!("size {n}, canopy {base}: block is not the interval [{lo}, {hi}]")
        });

        for (i, x) in members {
            let xi = over_base
                .index_of(x)
                .expect("block elements lie over their canopy");
            for (j, y) in members {
                let yi = over_base
                    .index_of(y)
                    .expect("block elements lie over their canopy");
                out.check(
                    rotation.leq_idx(*i, *j) == over_base.leq_idx(xi, yi),
                    || format!("size {n}, canopy {base}: rotation order and base order disagree at {x}, {y}"),
                );
            }
        }
    }
    Ok(out)
}

/// Cross-checks the structural identities on every tree with `size`
/// vertices: domination of the pair, gap sequence against left-edge
/// depths, the postorder depth profile, the canopy read off the pair, both
/// bijection round trips, and the canopy dichotomy of right rotations.
pub fn verify_lemmas_at(size: usize) -> VerificationOutcome {
    let mut out = VerificationOutcome::default();
    for tree in all_trees(size) {
        let (u, v) = pair_paths(&tree);
        out.check(u.weakly_above(&v), || {
            format!("tree {tree}: upper path not weakly above the lower")
        });
        out.check(
            gap_sequence(&u, &v).as_deref() == Ok(left_edge_right_depths(&tree).as_slice()),
            || format!("tree {tree}: gap sequence differs from left-edge depths"),
        );
        out.check(
            horiz_profile(&u, &v).as_deref() == Ok(postorder_right_depths(&tree).as_slice()),
            || format!("tree {tree}: distance profile differs from postorder depths"),
        );
        out.check(canopy(&tree).as_slice() == v.steps(), || {
            format!("tree {tree}: canopy differs from the lower path")
        });
        out.check(
            tree_from_pair(&NonCrossingPair::from_tree(&tree)) == tree,
            || format!("tree {tree}: pair round trip failed"),
        );
        out.check(
            tree_from_ballot(&ballot_from_tree(&tree)).as_ref() == Ok(&tree),
            || format!("tree {tree}: ballot round trip failed"),
        );
        let before = canopy(&tree);
        for site in right_rotation_sites(&tree) {
            let after = canopy(&rotate_right(&tree, &site).expect("listed site"));
            let keeps = right_rotation_preserves_canopy(&tree, &site).expect("listed site");
            let flips: Vec<usize> = (0..before.len())
                .filter(|&k| before[k] != after[k])
                .collect();
            out.check(
                if keeps {
                    flips.is_empty()
                } else {
                    flips.len() == 1
                        && before[flips[0]] == Step::North
                        && after[flips[0]] == Step::East
                },
                || format!("tree {tree}: rotation does not respect the canopy dichotomy"),
            );
            out.check(canopy_leq(&before, &after), || {
                format!("tree {tree}: rotation decreased the canopy")
            });
        }
    }
    out
}

/// Checks that the ballot encoding maps right rotations to exactly the
/// covering moves over the alternating base, for every tree with `n`
/// vertices. This makes the encoding an order isomorphism onto the poset
/// over `(NE)^n`, covers to covers both ways.
pub fn verify_ballot_cover_correspondence(n: usize) -> VerificationOutcome {
    let mut out = VerificationOutcome::default();
    let base = LatticePath::staircase(1, n);
    for tree in all_trees(n) {
        let word = ballot_from_tree(&tree);
        let mut rotated: Vec<LatticePath> = right_rotation_sites(&tree)
            .iter()
            .map(|site| ballot_from_tree(&rotate_right(&tree, site).expect("listed site")))
            .collect();
        rotated.sort();
        let mut covers = tam_covers(&word, &base).expect("ballot words lie over the base");
        covers.sort();
        out.check(rotated == covers, || {
            format!("tree {tree}: rotations map to {rotated:?}, covers are {covers:?}")
        });
    }
    out
}

/// Checks that the slope description of the covering moves agrees with the
/// distance description over the staircase `(N E^m)^n`, element by
/// element.
pub fn verify_m_equivalence(m: usize, n: usize) -> VerificationOutcome {
    let mut out = VerificationOutcome::default();
    let v = LatticePath::staircase(m, n);
    for u in tam_elements(&v) {
        let mut by_slope = slope_cover(&u, m).expect("elements are ballot paths of this slope");
        let mut by_distance = tam_covers(&u, &v).expect("elements stay weakly above the base");
        by_slope.sort();
        by_distance.sort();
        out.check(by_slope == by_distance, || {
            format!("m={m} n={n} element {u}: slope and distance covers differ")
        });
    }
    out
}

/// Builds the rotation order for trees with `n` vertices and compares its
/// element, cover, and interval counts plus lattice property against the
/// poset over the alternating base with `n` norths.
pub fn verify_rotation_order_matches_alternating(
    n: usize,
) -> Result<VerificationOutcome, PosetError> {
    let mut out = VerificationOutcome::default();
    let rotation = build_tree_tamari(n)?;
    let alternating = build_tam_poset(&LatticePath::staircase(1, n));
    out.check(rotation.len() == alternating.len(), || {
        format!("size {n}: element counts differ")
    });
    out.check(
        rotation.intervals_count() == alternating.intervals_count(),
        || format!("size {n}: interval counts differ"),
    );
    out.check(
        rotation.counts().cover_edges == alternating.counts().cover_edges,
        || format!("size {n}: cover edge counts differ"),
    );
    out.check(rotation.is_lattice(), || {
        format!("size {n}: rotation order is not a lattice")
    });
    Ok(out)
}
