//! Monotone lattice paths and the generalized Tamari covering relation.
//!
//! A path starts at the origin and takes north and east unit steps. Its
//! text form is the step word, e.g. `"NENE"`. For two paths with the same
//! number of norths `p` and easts `q`, `u` lies *weakly above* `v` when
//! every east step of `u` happens at a height at least that of the
//! corresponding east step of `v`. The paths weakly above a fixed base `v`
//! form a poset ordered by that dominance; [`tam_covers`] produces the
//! covering moves, [`tam_elements`] enumerates the whole poset, and
//! [`count_paths_above`] counts it by a recurrence that never touches the
//! cover machinery, so the two can check each other.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use thiserror::Error;

use crate::arith::binomial;

/// Unit step of a monotone path.
///
/// `East` is declared first so the derived order on paths is plain string
/// order on their text; listings then start at the base path (the unique
/// minimum) and end at the top path (all norths first).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Step {
    East,
    North,
}

impl Step {
    pub fn letter(self) -> char {
        match self {
            Step::North => 'N',
            Step::East => 'E',
        }
    }

    pub fn from_letter(c: char) -> Result<Step, PathError> {
        match c {
            'N' => Ok(Step::North),
            'E' => Ok(Step::East),
            other => Err(PathError::InvalidStep(other)),
        }
    }
}

/// Lattice point with non-negative coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GridPoint {
    pub x: usize,
    pub y: usize,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("invalid step character {0:?}, expected 'N' or 'E'")]
    InvalidStep(char),
    #[error("point ({x},{y}) lies strictly below the base path")]
    NegativeDistance { x: usize, y: usize },
    #[error("point ({x},{y}) lies above the final height of the base path")]
    OutOfRange { x: usize, y: usize },
    #[error("path {path} is not weakly above {base}")]
    NotAbove { path: String, base: String },
    #[error("slope parameters must be positive coprime integers, got {a} and {b}")]
    NotCoprime { a: u64, b: u64 },
    #[error("path {path} is not a ballot path of slope 1/{m}")]
    NotBallot { path: String, m: usize },
}

/// Monotone path: a finite word of north and east steps. The empty path is
/// allowed and is the unique path with zero steps.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        LatticePath { steps }
    }

    /// The staircase `(N E^m)^n`: one north step followed by `m` east steps,
    /// repeated `n` times.
    pub fn staircase(m: usize, n: usize) -> Self {
        let mut steps = Vec::with_capacity((m + 1) * n);
        for _ in 0..n {
            steps.push(Step::North);
            steps.extend(std::iter::repeat_n(Step::East, m));
        }
        LatticePath { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn north_count(&self) -> usize {
        self.steps.iter().filter(|s| **s == Step::North).count()
    }

    pub fn east_count(&self) -> usize {
        self.steps.len() - self.north_count()
    }

    pub fn endpoint(&self) -> GridPoint {
        GridPoint {
            x: self.east_count(),
            y: self.north_count(),
        }
    }

    /// The `len() + 1` lattice points the path passes through, in order.
    pub fn points(&self) -> Vec<GridPoint> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let (mut x, mut y) = (0, 0);
        out.push(GridPoint { x, y });
        for s in &self.steps {
            match s {
                Step::North => y += 1,
                Step::East => x += 1,
            }
            out.push(GridPoint { x, y });
        }
        out
    }

    /// Height of each east step: entry `x` is the number of norths before
    /// the `(x+1)`-th east step. Length equals the east count.
    pub fn east_heights(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.east_count());
        let mut n = 0;
        for s in &self.steps {
            match s {
                Step::North => n += 1,
                Step::East => out.push(n),
            }
        }
        out
    }

    /// Easts before each north step: entry `y` is the number of easts before
    /// the `(y+1)`-th north step, and the final entry (index `north_count()`)
    /// is the total east count.
    pub fn easts_before_norths(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.north_count() + 1);
        let mut e = 0;
        for s in &self.steps {
            match s {
                Step::East => e += 1,
                Step::North => out.push(e),
            }
        }
        out.push(self.east_count());
        out
    }

    /// Dominance order: same step multiset, and every east step of `self` at
    /// a height at least that of the corresponding east step of `v`.
    pub fn weakly_above(&self, v: &LatticePath) -> bool {
        self.north_count() == v.north_count()
            && self.east_count() == v.east_count()
            && self
                .east_heights()
                .iter()
                .zip(v.east_heights())
                .all(|(a, b)| *a >= b)
    }

    /// Horizontal distance from `point` leftwards... more precisely: the
    /// number of easts this path takes before its `(y+1)`-th north, minus
    /// `x`. Zero exactly when the point sits on the path's east run at that
    /// height; errors when the point is strictly below the path or higher
    /// than its endpoint.
    pub fn horiz(&self, point: GridPoint) -> Result<usize, PathError> {
        let table = self.easts_before_norths();
        let GridPoint { x, y } = point;
        match table.get(y) {
            None => Err(PathError::OutOfRange { x, y }),
            Some(&e) if e < x => Err(PathError::NegativeDistance { x, y }),
            Some(&e) => Ok(e - x),
        }
    }

    /// Reverse the word and swap the two letters. An involution; it turns
    /// the staircase `(N E^m)^n` into `(N^m E)^n`.
    pub fn reverse_complement(&self) -> LatticePath {
        LatticePath {
            steps: self
                .steps
                .iter()
                .rev()
                .map(|s| match s {
                    Step::North => Step::East,
                    Step::East => Step::North,
                })
                .collect(),
        }
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

impl FromStr for LatticePath {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, PathError> {
        let steps = s.chars().map(Step::from_letter).collect::<Result<_, _>>()?;
        Ok(LatticePath { steps })
    }
}

/// Horizontal distances from every point of `u` to the base `v`, from the
/// origin to the endpoint. Requires `u` weakly above `v`; the profile then
/// drops by exactly one on each east step, never drops on a north step, and
/// ends at zero.
pub fn horiz_profile(u: &LatticePath, v: &LatticePath) -> Result<Vec<usize>, PathError> {
    if !u.weakly_above(v) {
        return Err(PathError::NotAbove {
            path: u.to_string(),
            base: v.to_string(),
        });
    }
    u.points().into_iter().map(|p| v.horiz(p)).collect()
}

/// Covering moves of `u` in the poset over base `v`: for each valley of `u`
/// (an east step immediately followed by a north step), the east step jumps
/// past the shortest following subpath that returns to the same horizontal
/// distance from `v`. One output per valley, in left-to-right valley order.
pub fn tam_covers(u: &LatticePath, v: &LatticePath) -> Result<Vec<LatticePath>, PathError> {
    let dist = horiz_profile(u, v)?;
    let steps = u.steps();
    let mut out = Vec::new();
    for i in 1..steps.len() {
        if steps[i - 1] == Step::East && steps[i] == Step::North {
            let j = (i + 1..dist.len())
                .find(|&k| dist[k] == dist[i])
                .expect("distance profile ends at zero and drops by single units");
            let mut moved = Vec::with_capacity(steps.len());
            moved.extend_from_slice(&steps[..i - 1]);
            moved.extend_from_slice(&steps[i..j]);
            moved.push(Step::East);
            moved.extend_from_slice(&steps[j..]);
            out.push(LatticePath::new(moved));
        }
    }
    Ok(out)
}

/// Every path weakly above `v` with the same step multiset, in text order.
/// Saturates the covering moves upward from `v`, so it doubles as a check
/// that the moves reach the whole dominance order (compare against
/// [`count_paths_above`]).
pub fn tam_elements(v: &LatticePath) -> Vec<LatticePath> {
    let mut seen = BTreeSet::new();
    seen.insert(v.clone());
    let mut frontier = vec![v.clone()];
    while let Some(u) = frontier.pop() {
        let covers = tam_covers(&u, v).expect("saturation stays weakly above the base");
        for c in covers {
            if seen.insert(c.clone()) {
                frontier.push(c);
            }
        }
    }
    seen.into_iter().collect()
}

/// Number of paths weakly above `v` with `v`'s step multiset, by a
/// column-by-column recurrence: an east step into column `x+1` at height `y`
/// is allowed only when `y` reaches the height of `v`'s `(x+1)`-th east step.
pub fn count_paths_above(v: &LatticePath) -> BigUint {
    let p = v.north_count();
    let q = v.east_count();
    let floor = v.east_heights();
    let mut col = vec![BigUint::from(1u32); p + 1];
    for x in 1..=q {
        let mut next = vec![BigUint::ZERO; p + 1];
        for y in 0..=p {
            let mut acc = if y > 0 {
                next[y - 1].clone()
            } else {
                BigUint::ZERO
            };
            if y >= floor[x - 1] {
                acc += &col[y];
            }
            next[y] = acc;
        }
        col = next;
    }
    col[p].clone()
}

/// All paths of the given length, in text order.
pub fn all_paths(len: usize) -> Vec<LatticePath> {
    let mut out = Vec::with_capacity(1usize << len);
    let mut word = Vec::with_capacity(len);
    fn rec(word: &mut Vec<Step>, len: usize, out: &mut Vec<LatticePath>) {
        if word.len() == len {
            out.push(LatticePath::new(word.clone()));
            return;
        }
        for s in [Step::East, Step::North] {
            word.push(s);
            rec(word, len, out);
            word.pop();
        }
    }
    rec(&mut word, len, &mut out);
    out
}

/// Lowest monotone path from the origin to `(b, a)` that stays weakly above
/// the segment `y = a*x/b`. Requires `a` and `b` positive and coprime.
pub fn rational_base_path(a: u64, b: u64) -> Result<LatticePath, PathError> {
    if a == 0 || b == 0 || num_integer::gcd(a, b) != 1 {
        return Err(PathError::NotCoprime { a, b });
    }
    let mut steps = Vec::with_capacity((a + b) as usize);
    let (mut x, mut y) = (0u64, 0u64);
    while (x, y) != (b, a) {
        if x < b && b * y >= a * (x + 1) {
            steps.push(Step::East);
            x += 1;
        } else {
            steps.push(Step::North);
            y += 1;
        }
    }
    Ok(LatticePath::new(steps))
}

/// Number of ways to label the steps of the chosen direction with
/// `1..=k` so that labels increase along each maximal run: the multinomial
/// `k!` over the product of run-length factorials.
pub fn label_count(path: &LatticePath, direction: Step) -> BigUint {
    let mut out = BigUint::from(1u32);
    let mut placed = 0u64;
    let mut run = 0u64;
    for &s in path.steps() {
        if s == direction {
            run += 1;
        } else if run > 0 {
            placed += run;
            out *= binomial(placed, run);
            run = 0;
        }
    }
    if run > 0 {
        placed += run;
        out *= binomial(placed, run);
    }
    out
}

/// Covering moves described by diagonals instead of distances: for each
/// valley, shoot a line of slope `1/m` from the valley point and swap the
/// east step with the subpath up to the first return to that line. Defined
/// for ballot paths of slope `1/m` (weakly above the staircase `(N E^m)^n`);
/// must agree with [`tam_covers`] over that staircase.
pub fn slope_cover(u: &LatticePath, m: usize) -> Result<Vec<LatticePath>, PathError> {
    let n = u.north_count();
    if u.east_count() != m * n || !u.weakly_above(&LatticePath::staircase(m, n)) {
        return Err(PathError::NotBallot {
            path: u.to_string(),
            m,
        });
    }
    let pts = u.points();
    let steps = u.steps();
    let mut out = Vec::new();
    for i in 1..steps.len() {
        if steps[i - 1] == Step::East && steps[i] == Step::North {
            let GridPoint { x: x0, y: y0 } = pts[i];
            let j = (i + 1..pts.len())
                .find(|&k| pts[k].x - x0 == m * (pts[k].y - y0))
                .expect("the path ends on or right of every slope-1/m diagonal");
            let mut moved = Vec::with_capacity(steps.len());
            moved.extend_from_slice(&steps[..i - 1]);
            moved.extend_from_slice(&steps[i..j]);
            moved.push(Step::East);
            moved.extend_from_slice(&steps[j..]);
            out.push(LatticePath::new(moved));
        }
    }
    Ok(out)
}

/// Gap sequence of a dominating pair: entry `i` is how many more easts `v`
/// has than `u` before the `(i+1)`-th north step. Non-negative exactly
/// because `u` is weakly above `v`.
pub fn gap_sequence(u: &LatticePath, v: &LatticePath) -> Result<Vec<usize>, PathError> {
    if !u.weakly_above(v) {
        return Err(PathError::NotAbove {
            path: u.to_string(),
            base: v.to_string(),
        });
    }
    let eu = u.easts_before_norths();
    let ev = v.easts_before_norths();
    Ok((0..u.north_count()).map(|i| ev[i] - eu[i]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LatticePath {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["", "N", "E", "NENE", "NNEEENEN"] {
            assert_eq!(p(s).to_string(), s);
        }
        assert_eq!(
            "NEX".parse::<LatticePath>(),
            Err(PathError::InvalidStep('X'))
        );
    }

    #[test]
    fn counts_and_endpoint() {
        let w = p("NEENE");
        assert_eq!(w.north_count(), 2);
        assert_eq!(w.east_count(), 3);
        assert_eq!(w.endpoint(), GridPoint { x: 3, y: 2 });
        assert_eq!(p("").endpoint(), GridPoint { x: 0, y: 0 });
    }

    #[test]
    fn points_walk_the_word() {
        let pts = p("NE").points();
        assert_eq!(
            pts,
            vec![
                GridPoint { x: 0, y: 0 },
                GridPoint { x: 0, y: 1 },
                GridPoint { x: 1, y: 1 },
            ]
        );
    }

    #[test]
    fn dominance_examples() {
        assert!(p("NNEE").weakly_above(&p("NENE")));
        assert!(p("NENEEE").weakly_above(&p("NEENEE")));
        assert!(!p("NENE").weakly_above(&p("NNEE")));
        assert!(p("NE").weakly_above(&p("EN")));
        assert!(!p("EN").weakly_above(&p("NE")));
        assert!(p("").weakly_above(&p("")));
        // different multisets never compare
        assert!(!p("NN").weakly_above(&p("NE")));
    }

    #[test]
    fn dominance_is_reflexive_on_samples() {
        for s in ["", "N", "ENEN", "NNEEE"] {
            assert!(p(s).weakly_above(&p(s)));
        }
    }

    #[test]
    fn horiz_examples_and_errors() {
        assert_eq!(p("NEENEE").horiz(GridPoint { x: 1, y: 1 }), Ok(1));
        assert_eq!(p("").horiz(GridPoint { x: 0, y: 0 }), Ok(0));
        assert_eq!(
            p("NE").horiz(GridPoint { x: 1, y: 0 }),
            Err(PathError::NegativeDistance { x: 1, y: 0 })
        );
        assert_eq!(
            p("NE").horiz(GridPoint { x: 0, y: 2 }),
            Err(PathError::OutOfRange { x: 0, y: 2 })
        );
    }

    #[test]
    fn horiz_on_staircases_is_linear() {
        for m in 1..=3usize {
            for n in 1..=3usize {
                let v = LatticePath::staircase(m, n);
                for x in 0..=(m * n) {
                    for y in 0..=n {
                        let want = (m * y).checked_sub(x);
                        let got = v.horiz(GridPoint { x, y }).ok();
                        assert_eq!(got, want, "m={m} n={n} x={x} y={y}");
                    }
                }
            }
        }
    }

    #[test]
    fn covers_move_one_east_past_a_subpath() {
        let v = p("EN");
        assert_eq!(tam_covers(&p("EN"), &v).unwrap(), vec![p("NE")]);
        let v = p("NENE");
        assert_eq!(tam_covers(&p("NENE"), &v).unwrap(), vec![p("NNEE")]);
        let v = p("NENENE");
        assert_eq!(
            tam_covers(&p("NENENE"), &v).unwrap(),
            vec![p("NNEENE"), p("NENNEE")]
        );
        assert_eq!(tam_covers(&p("NENNEE"), &v).unwrap(), vec![p("NNNEEE")]);
        let v = p("ENEN");
        assert_eq!(
            tam_covers(&p("ENEN"), &v).unwrap(),
            vec![p("NEEN"), p("ENNE")]
        );
    }

    #[test]
    fn covers_of_the_top_are_empty() {
        // the top path has no valley
        assert!(tam_covers(&p("NNNEE"), &p("NENNE")).unwrap().is_empty());
    }

    #[test]
    fn covers_reject_paths_not_above_the_base() {
        assert!(matches!(
            tam_covers(&p("EN"), &p("NE")),
            Err(PathError::NotAbove { .. })
        ));
    }

    #[test]
    fn elements_listing_is_bottom_first() {
        let els = tam_elements(&p("EN"));
        assert_eq!(els, vec![p("EN"), p("NE")]);
        let els = tam_elements(&p("NENENE"));
        assert_eq!(
            els,
            vec![
                p("NENENE"),
                p("NENNEE"),
                p("NNEENE"),
                p("NNENEE"),
                p("NNNEEE"),
            ]
        );
        assert_eq!(tam_elements(&p("")), vec![p("")]);
    }

    #[test]
    fn elements_agree_with_the_counting_recurrence() {
        for len in 0..=6 {
            for v in all_paths(len) {
                let n = tam_elements(&v).len();
                assert_eq!(BigUint::from(n), count_paths_above(&v), "base {v}");
            }
        }
    }

    #[test]
    fn counting_rows_are_ballot_numbers() {
        let catalan: Vec<u64> = vec![1, 2, 5, 14, 42, 132, 429, 1430];
        for (i, want) in catalan.iter().enumerate() {
            let v = LatticePath::staircase(1, i + 1);
            assert_eq!(count_paths_above(&v), BigUint::from(*want));
        }
        let fuss: Vec<u64> = vec![1, 3, 12, 55, 273];
        for (i, want) in fuss.iter().enumerate() {
            let v = LatticePath::staircase(2, i + 1);
            assert_eq!(count_paths_above(&v), BigUint::from(*want));
        }
    }

    #[test]
    fn degenerate_bases_have_one_element() {
        for s in ["", "EEE", "NNNN"] {
            assert_eq!(count_paths_above(&p(s)), BigUint::from(1u32));
            assert_eq!(tam_elements(&p(s)), vec![p(s)]);
        }
    }

    #[test]
    fn reverse_complement_examples() {
        assert_eq!(p("EEN").reverse_complement(), p("ENN"));
        assert_eq!(
            LatticePath::staircase(2, 2).reverse_complement(),
            p("NNENNE")
        );
        for s in ["", "N", "ENNE", "NEEEN"] {
            assert_eq!(p(s).reverse_complement().reverse_complement(), p(s));
        }
    }

    #[test]
    fn rational_base_examples() {
        assert_eq!(rational_base_path(1, 1).unwrap(), p("NE"));
        assert_eq!(rational_base_path(3, 5).unwrap(), p("NENEENEE"));
        assert!(matches!(
            rational_base_path(2, 4),
            Err(PathError::NotCoprime { .. })
        ));
        assert!(matches!(
            rational_base_path(0, 1),
            Err(PathError::NotCoprime { .. })
        ));
    }

    #[test]
    fn rational_bases_count_catalan() {
        for n in 1..=5u64 {
            let v = rational_base_path(n, n + 1).unwrap();
            let catalan = [1u64, 2, 5, 14, 42][(n - 1) as usize];
            assert_eq!(count_paths_above(&v), BigUint::from(catalan));
        }
    }

    #[test]
    fn label_counts_are_run_multinomials() {
        assert_eq!(label_count(&p("NENE"), Step::North), BigUint::from(2u32));
        assert_eq!(label_count(&p("NNEE"), Step::North), BigUint::from(1u32));
        assert_eq!(label_count(&p("NNEE"), Step::East), BigUint::from(1u32));
        assert_eq!(label_count(&p(""), Step::North), BigUint::from(1u32));
        // three runs of sizes 1,2,1: 4!/(1!2!1!) = 12
        assert_eq!(label_count(&p("NENNEN"), Step::North), BigUint::from(12u32));
    }

    #[test]
    fn slope_covers_match_distance_covers() {
        for m in 1..=3usize {
            for n in 1..=3usize {
                let v = LatticePath::staircase(m, n);
                for u in tam_elements(&v) {
                    let mut a = slope_cover(&u, m).unwrap();
                    let mut b = tam_covers(&u, &v).unwrap();
                    a.sort();
                    b.sort();
                    assert_eq!(a, b, "m={m} n={n} u={u}");
                }
            }
        }
    }

    #[test]
    fn slope_cover_example_and_error() {
        assert_eq!(slope_cover(&p("NEENEE"), 2).unwrap(), vec![p("NENEEE")]);
        assert!(matches!(
            slope_cover(&p("ENNE"), 1),
            Err(PathError::NotBallot { .. })
        ));
        assert!(matches!(
            slope_cover(&p("NE"), 2),
            Err(PathError::NotBallot { .. })
        ));
    }

    #[test]
    fn gap_sequence_examples() {
        assert_eq!(gap_sequence(&p("NNEE"), &p("NENE")).unwrap(), vec![0, 1]);
        assert_eq!(gap_sequence(&p("NE"), &p("EN")).unwrap(), vec![1]);
        assert_eq!(gap_sequence(&p(""), &p("")).unwrap(), Vec::<usize>::new());
        assert!(matches!(
            gap_sequence(&p("EN"), &p("NE")),
            Err(PathError::NotAbove { .. })
        ));
    }

    #[test]
    fn all_paths_enumerates_in_text_order() {
        let words: Vec<String> = all_paths(2).iter().map(|w| w.to_string()).collect();
        assert_eq!(words, vec!["EE", "EN", "NE", "NN"]);
        assert_eq!(all_paths(0), vec![p("")]);
    }

    #[test]
    fn horiz_profile_drops_by_one_per_east() {
        let v = p("NEENEE");
        for u in tam_elements(&v) {
            let prof = horiz_profile(&u, &v).unwrap();
            assert_eq!(*prof.last().unwrap(), 0, "u={u}");
            for (i, s) in u.steps().iter().enumerate() {
                match s {
                    Step::East => assert_eq!(prof[i + 1] + 1, prof[i], "u={u} i={i}"),
                    Step::North => assert!(prof[i + 1] >= prof[i], "u={u} i={i}"),
                }
            }
        }
    }
}
