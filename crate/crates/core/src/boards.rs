//! Rook arrangements on square boards, right-aligned skew boards, right
//! hulls, and the hull-membership criterion for comparison against `tau(n)`
//! in Bruhat order.

use crate::error::Error;
use crate::perm::{tau, Permutation};

/// A placement of `m` non-attacking rooks on an `m × m` board: row `i`
/// carries exactly one mark, in column `marks()[i − 1]`, and every column is
/// used exactly once. Rows are numbered from the top, columns from the left,
/// both 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RookArrangement {
    marks: Vec<usize>,
}

impl RookArrangement {
    /// Builds an arrangement from the per-row column indices, checking the
    /// one-mark-per-column condition.
    pub fn new(marks: Vec<usize>) -> Result<Self, Error> {
        let size = marks.len();
        let mut seen = vec![false; size + 1];
        for &c in &marks {
            if c == 0 || c > size || seen[c] {
                return Err(Error::NotAPermutation { size });
            }
            seen[c] = true;
        }
        Ok(RookArrangement { marks })
    }

    pub fn size(&self) -> usize {
        self.marks.len()
    }

    /// Column of the mark in each row, top to bottom.
    pub fn marks(&self) -> &[usize] {
        &self.marks
    }

    /// Column of the mark in 1-based `row`.
    pub fn mark_in_row(&self, row: usize) -> usize {
        self.marks[row - 1]
    }
}

/// The permutation `σ` with `σ(i) = j` exactly when the arrangement marks
/// cell `(i, j)`.
pub fn perm_of_rook(r: &RookArrangement) -> Permutation {
    Permutation::from_image_unchecked(r.marks.clone())
}

/// The rook arrangement marking cell `(i, σ(i))` in every row `i`.
pub fn rook_of_perm(p: &Permutation) -> RookArrangement {
    RookArrangement {
        marks: p.one_line().to_vec(),
    }
}

/// A right-aligned skew Ferrers board: per-row column intervals
/// `[a_i, b_i]` with both endpoints weakly increasing from top to bottom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewBoard {
    intervals: Vec<(usize, usize)>,
}

impl SkewBoard {
    /// Builds a board from per-row `(a_i, b_i)` intervals, checking bounds
    /// and the weak monotonicity of both endpoint sequences.
    pub fn new(intervals: Vec<(usize, usize)>) -> Result<Self, Error> {
        let m = intervals.len();
        for (i, &(a, b)) in intervals.iter().enumerate() {
            if a == 0 || a > b || b > m {
                return Err(Error::InvalidBoard {
                    reason: format!("row {} interval [{a}, {b}] out of bounds", i + 1),
                });
            }
            if i > 0 {
                let (pa, pb) = intervals[i - 1];
                if a < pa || b < pb {
                    return Err(Error::InvalidBoard {
                        reason: format!("row {} interval moves left", i + 1),
                    });
                }
            }
        }
        Ok(SkewBoard { intervals })
    }

    pub fn size(&self) -> usize {
        self.intervals.len()
    }

    pub fn intervals(&self) -> &[(usize, usize)] {
        &self.intervals
    }

    /// Whether cell `(row, col)` lies on the board, 1-based.
    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        let (a, b) = self.intervals[row - 1];
        a <= col && col <= b
    }

    /// Whether every mark of `r` lies on the board.
    pub fn contains(&self, r: &RookArrangement) -> Result<bool, Error> {
        if self.size() != r.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: r.size(),
            });
        }
        Ok(self
            .intervals
            .iter()
            .zip(r.marks())
            .all(|(&(a, b), &c)| a <= c && c <= b))
    }

    /// All rook arrangements whose marks lie on the board, streamed lazily
    /// in lexicographic order of the marks sequence.
    pub fn rook_arrangements(&self) -> RookStream {
        RookStream::new(self, false)
    }
}

/// The smallest right-aligned skew board containing every mark of `w`'s rook
/// arrangement: row `i` gets the interval from the minimum of
/// `w(i), w(i+1), …` to the maximum of `w(1), …, w(i)`.
pub fn right_hull(w: &Permutation) -> SkewBoard {
    let marks = w.one_line();
    let m = marks.len();
    let mut intervals = vec![(0, 0); m];
    let mut hi = 0;
    for i in 0..m {
        hi = hi.max(marks[i]);
        intervals[i].1 = hi;
    }
    let mut lo = usize::MAX;
    for i in (0..m).rev() {
        lo = lo.min(marks[i]);
        intervals[i].0 = lo;
    }
    SkewBoard { intervals }
}

/// Whether `u ≤ tau(n)` in Bruhat order, decided by hull membership: the
/// marks of `u`'s rook arrangement must all lie in the right hull of
/// `tau(n)`'s. For `tau(n)` this criterion agrees with [`Permutation::bruhat_leq`].
pub fn leq_tau_via_hull(u: &Permutation, n: usize) -> Result<bool, Error> {
    if u.size() != 2 * n {
        return Err(Error::SizeMismatch {
            left: u.size(),
            right: 2 * n,
        });
    }
    right_hull(&tau(n)).contains(&rook_of_perm(u))
}

/// Streams the minimal coset representatives below `tau(n)`: permutations of
/// `{1..=2n}` whose marks lie in the right hull of `tau(n)` and which ascend
/// at every odd position. Lexicographic order, lazily produced.
pub fn restricted_coset_reps(n: usize) -> impl Iterator<Item = Permutation> {
    RookStream::new(&right_hull(&tau(n)), true).map(|r| perm_of_rook(&r))
}

/// The number of minimal coset representatives below `tau(n)`.
pub fn count_wj_leq_tau(n: usize) -> u64 {
    restricted_coset_reps(n).count() as u64
}

/// Lazy depth-first enumeration of rook arrangements on a skew board,
/// yielding marks vectors in strictly increasing lexicographic order.
///
/// With `pair_ascents` set, only arrangements whose even rows carry a larger
/// column than the odd row directly above are produced.
#[derive(Debug, Clone)]
pub struct RookStream {
    intervals: Vec<(usize, usize)>,
    pair_ascents: bool,
    used: Vec<bool>,
    stack: Vec<usize>,
    started: bool,
    done: bool,
}

impl RookStream {
    fn new(board: &SkewBoard, pair_ascents: bool) -> Self {
        RookStream {
            intervals: board.intervals().to_vec(),
            pair_ascents,
            used: vec![false; board.size() + 1],
            stack: Vec::with_capacity(board.size()),
            started: false,
            done: false,
        }
    }

    fn lower_bound(&self, depth: usize) -> usize {
        let a = self.intervals[depth].0;
        if self.pair_ascents && depth % 2 == 1 {
            a.max(self.stack[depth - 1] + 1)
        } else {
            a
        }
    }

    /// Advances to the next complete arrangement, returning false when the
    /// search tree is exhausted.
    fn advance(&mut self) -> bool {
        let m = self.intervals.len();
        let mut from = if self.started {
            match self.stack.pop() {
                Some(c) => {
                    self.used[c] = false;
                    c + 1
                }
                None => return false,
            }
        } else {
            self.started = true;
            if m == 0 {
                return true;
            }
            self.lower_bound(0)
        };
        loop {
            let depth = self.stack.len();
            let b = self.intervals[depth].1;
            match (from..=b).find(|&c| !self.used[c]) {
                Some(c) => {
                    self.used[c] = true;
                    self.stack.push(c);
                    if self.stack.len() == m {
                        return true;
                    }
                    from = self.lower_bound(self.stack.len());
                }
                None => match self.stack.pop() {
                    Some(c) => {
                        self.used[c] = false;
                        from = c + 1;
                    }
                    None => return false,
                },
            }
        }
    }
}

impl Iterator for RookStream {
    type Item = RookArrangement;

    fn next(&mut self) -> Option<RookArrangement> {
        if self.done {
            return None;
        }
        if self.advance() {
            Some(RookArrangement {
                marks: self.stack.clone(),
            })
        } else {
            self.done = true;
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    fn p(digits: &str) -> Permutation {
        Permutation::from_digits(digits).unwrap()
    }

    #[test]
    fn rook_and_perm_are_mutually_inverse() {
        assert_eq!(rook_of_perm(&p("1234")).marks(), &[1, 2, 3, 4]);
        assert_eq!(rook_of_perm(&p("124536")).marks(), &[1, 2, 4, 5, 3, 6]);
        let sigma = p("142536");
        assert_eq!(perm_of_rook(&rook_of_perm(&sigma)), sigma);
        let r = RookArrangement::new(vec![2, 1, 3]).unwrap();
        assert_eq!(rook_of_perm(&perm_of_rook(&r)), r);
    }

    #[test]
    fn rook_arrangement_rejects_repeated_columns() {
        assert!(RookArrangement::new(vec![1, 1, 3]).is_err());
        assert!(RookArrangement::new(vec![0, 1]).is_err());
        assert!(RookArrangement::new(vec![3, 1]).is_err());
    }

    #[test]
    fn right_hull_examples() {
        assert_eq!(
            right_hull(&p("142536")).intervals(),
            &[(1, 1), (2, 4), (2, 4), (3, 5), (3, 5), (6, 6)]
        );
        assert_eq!(
            right_hull(&Permutation::identity(4)).intervals(),
            &[(1, 1), (2, 2), (3, 3), (4, 4)]
        );
        assert_eq!(
            right_hull(&p("1324")).intervals(),
            &[(1, 1), (2, 3), (2, 3), (4, 4)]
        );
    }

    #[test]
    fn skew_board_validates_shape() {
        assert!(SkewBoard::new(vec![(1, 2), (2, 3), (3, 3)]).is_ok());
        assert!(SkewBoard::new(vec![(2, 1)]).is_err());
        assert!(SkewBoard::new(vec![(0, 1)]).is_err());
        assert!(SkewBoard::new(vec![(1, 3)]).is_err());
        assert!(SkewBoard::new(vec![(2, 2), (1, 2)]).is_err());
        assert!(SkewBoard::new(vec![(1, 2), (1, 1)]).is_err());
    }

    #[test]
    fn hull_contains_examples() {
        let hull = right_hull(&p("142536"));
        assert!(hull.contains(&rook_of_perm(&p("124536"))).unwrap());
        assert!(hull.contains(&rook_of_perm(&p("123456"))).unwrap());
        assert!(!hull.contains(&rook_of_perm(&p("214365"))).unwrap());
        assert!(hull.contains(&rook_of_perm(&p("1234"))).is_err());
    }

    #[test]
    fn hull_of_a_permutation_contains_its_own_marks() {
        for w in Permutation::all(5) {
            assert!(right_hull(&w).contains(&rook_of_perm(&w)).unwrap());
        }
    }

    #[test]
    fn rook_stream_counts_on_small_hulls() {
        assert_eq!(right_hull(&tau(1)).rook_arrangements().count(), 1);
        assert_eq!(right_hull(&tau(2)).rook_arrangements().count(), 2);
    }

    #[test]
    fn rook_stream_matches_bruhat_interval_below_tau_3() {
        let t = tau(3);
        let by_bruhat = Permutation::all(6)
            .filter(|u| u.bruhat_leq(&t).unwrap())
            .count();
        let by_stream = right_hull(&t).rook_arrangements().count();
        assert_eq!(by_stream, by_bruhat);
    }

    #[test]
    fn rook_stream_is_strictly_increasing_and_complete() {
        let hull = right_hull(&tau(3));
        let all: Vec<_> = hull.rook_arrangements().collect();
        assert!(all.windows(2).all(|w| w[0].marks() < w[1].marks()));
        assert!(all.contains(&rook_of_perm(&tau(3))));
        for r in &all {
            assert!(hull.contains(r).unwrap());
        }
    }

    #[test]
    fn leq_tau_via_hull_examples() {
        assert!(leq_tau_via_hull(&p("123456"), 3).unwrap());
        assert!(leq_tau_via_hull(&p("124536"), 3).unwrap());
        assert!(!leq_tau_via_hull(&p("214365"), 3).unwrap());
        assert!(leq_tau_via_hull(&p("1234"), 3).is_err());
    }

    #[test]
    fn hull_criterion_agrees_with_bruhat_up_to_size_6() {
        for n in 1..=3 {
            let t = tau(n);
            for u in Permutation::all(2 * n) {
                assert_eq!(
                    leq_tau_via_hull(&u, n).unwrap(),
                    u.bruhat_leq(&t).unwrap(),
                    "n = {n}, u = {u}"
                );
            }
        }
    }

    #[test]
    fn coset_rep_stream_agrees_with_brute_force() {
        for n in 1..=3 {
            let t = tau(n);
            let brute: Vec<_> = Permutation::all(2 * n)
                .filter(|u| u.is_min_coset_rep().unwrap() && u.bruhat_leq(&t).unwrap())
                .collect();
            let streamed: Vec<_> = restricted_coset_reps(n).collect();
            assert_eq!(streamed, brute, "n = {n}");
        }
    }

    #[test]
    fn count_wj_leq_tau_small_values() {
        assert_eq!(count_wj_leq_tau(1), 1);
        assert_eq!(count_wj_leq_tau(2), 2);
        assert_eq!(count_wj_leq_tau(3), 7);
        assert_eq!(count_wj_leq_tau(4), 38);
    }

    fn perm_strategy(m: usize) -> impl Strategy<Value = Permutation> {
        Just((1..=m).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(|image| Permutation::from_one_line(image).unwrap())
    }

    proptest! {
        #[test]
        fn right_hull_is_a_valid_board_containing_its_marks(w in perm_strategy(8)) {
            let hull = right_hull(&w);
            prop_assert!(SkewBoard::new(hull.intervals().to_vec()).is_ok());
            prop_assert!(hull.contains(&rook_of_perm(&w)).unwrap());
        }

        #[test]
        fn rook_stream_yields_the_defining_arrangement(w in perm_strategy(5)) {
            let hull = right_hull(&w);
            let target = rook_of_perm(&w);
            prop_assert!(hull.rook_arrangements().any(|r| r == target));
        }
    }
}
