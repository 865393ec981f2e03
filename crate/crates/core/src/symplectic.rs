//! The Weyl group of the rank-`2n` symplectic group, handled entirely
//! through its embedding into the symmetric group on `4n` symbols: words in
//! the generators `r_1..r_{2n}`, the distinguished word for the top coset
//! element, and counting mirror-fixed minimal coset representatives below
//! `tau(2n)`.

use crate::boards::{right_hull, SkewBoard};
use crate::error::Error;
use crate::perm::{tau, CoxeterWord, Permutation};

/// A word in the generators `r_1..r_{2n}` of the symplectic Weyl group of
/// half-rank `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeCWord {
    n: usize,
    letters: Vec<usize>,
}

impl TypeCWord {
    pub fn new(n: usize, letters: Vec<usize>) -> Result<Self, Error> {
        for &letter in &letters {
            if letter == 0 || letter > 2 * n {
                return Err(Error::LetterOutOfRange {
                    letter,
                    rank: 2 * n,
                });
            }
        }
        Ok(TypeCWord { n, letters })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// The word for the top minimal coset representative of the symplectic Weyl
/// group of half-rank `n`: the descending blocks `(r_{2n}, …, r_{n+j})` for
/// `j = 1..n` followed by the ascending blocks `(r_k, …, r_{2k−2})` for
/// `k = n` down to `2`, empty blocks omitted. Its image under
/// [`kappa_expand`] is `tau(2n)`, which pins this block reading.
pub fn tau_bar_word(n: usize) -> TypeCWord {
    let mut letters = Vec::with_capacity(n * n);
    for j in 1..=n {
        letters.extend((n + j..=2 * n).rev());
    }
    for k in (2..=n).rev() {
        letters.extend(k..=2 * k - 2);
    }
    TypeCWord { n, letters }
}

/// Expands a symplectic word into the symmetric group on `4n` symbols:
/// each letter `r_i` with `i ≤ 2n − 1` becomes the pair `s_i s_{4n−i}`,
/// and `r_{2n}` becomes the single letter `s_{2n}`. Every image permutation
/// is fixed by [`Permutation::iota`].
pub fn kappa_expand(w: &TypeCWord) -> Permutation {
    let m = 4 * w.n;
    let mut letters = Vec::with_capacity(2 * w.letters.len());
    for &r in &w.letters {
        letters.push(r);
        if r != 2 * w.n {
            letters.push(m - r);
        }
    }
    let word = CoxeterWord::new(m.max(2) - 1, letters).expect("expanded letters fit the rank");
    word.evaluate(m)
        .expect("expanded letters fit the group size")
}

/// Streams the mirror-fixed minimal coset representatives below `tau(2n)`
/// in the symmetric group on `4n` symbols, lazily and in lexicographic
/// order. These are exactly the images under the embedding of the
/// symplectic minimal coset representatives below the top word.
pub fn symmetric_coset_reps(n: usize) -> SymmetricRepStream {
    SymmetricRepStream::new(n, true)
}

/// The number of mirror-fixed minimal coset representatives below
/// `tau(2n)`.
pub fn count_wj_leq_taubar(n: usize) -> u64 {
    symmetric_coset_reps(n).count() as u64
}

/// The number of mirror-fixed permutations below `tau(2n)` with no coset
/// condition, counted by the same hull backtracking. Used to cross-check
/// the hull criterion against brute-force filtering on the mirror-fixed
/// locus.
pub fn count_symmetric_leq_tau(n: usize) -> u64 {
    SymmetricRepStream::new(n, false).count() as u64
}

/// Lazy backtracking over the top half of a mirror-fixed rook arrangement
/// inside the right hull of `tau(2n)`: choosing column `c` for row `i`
/// forces column `4n + 1 − c` for row `4n + 1 − i`, so only rows
/// `1..=2n` are searched and both the column and its mirror are reserved at
/// once. The hull membership of every forced mark is checked, and with
/// `ascents` set, even rows must exceed the odd row above them.
#[derive(Debug, Clone)]
pub struct SymmetricRepStream {
    n: usize,
    hull: SkewBoard,
    ascents: bool,
    used: Vec<bool>,
    stack: Vec<usize>,
    started: bool,
    done: bool,
}

impl SymmetricRepStream {
    fn new(n: usize, ascents: bool) -> Self {
        SymmetricRepStream {
            n,
            hull: right_hull(&tau(2 * n)),
            ascents,
            used: vec![false; 4 * n + 1],
            stack: Vec::with_capacity(2 * n),
            started: false,
            done: false,
        }
    }

    fn lower_bound(&self, depth: usize) -> usize {
        let a = self.hull.intervals()[depth].0;
        if self.ascents && depth % 2 == 1 {
            a.max(self.stack[depth - 1] + 1)
        } else {
            a
        }
    }

    /// Whether column `c` is admissible for the 1-based row `depth + 1`:
    /// `c` free, its mirror free, and the forced mirror mark on the board.
    fn admissible(&self, depth: usize, c: usize) -> bool {
        let m = 4 * self.n;
        let mirror_col = m + 1 - c;
        !self.used[c] && !self.used[mirror_col] && self.hull.contains_cell(m - depth, mirror_col)
    }

    fn mark(&mut self, c: usize, value: bool) {
        self.used[c] = value;
        self.used[4 * self.n + 1 - c] = value;
    }

    fn advance(&mut self) -> bool {
        let rows = 2 * self.n;
        let mut from = if self.started {
            match self.stack.pop() {
                Some(c) => {
                    self.mark(c, false);
                    c + 1
                }
                None => return false,
            }
        } else {
            self.started = true;
            if rows == 0 {
                return true;
            }
            self.lower_bound(0)
        };
        loop {
            let depth = self.stack.len();
            let b = self.hull.intervals()[depth].1;
            match (from..=b).find(|&c| self.admissible(depth, c)) {
                Some(c) => {
                    self.mark(c, true);
                    self.stack.push(c);
                    if self.stack.len() == rows {
                        return true;
                    }
                    from = self.lower_bound(self.stack.len());
                }
                None => match self.stack.pop() {
                    Some(c) => {
                        self.mark(c, false);
                        from = c + 1;
                    }
                    None => return false,
                },
            }
        }
    }

    fn materialize(&self) -> Permutation {
        let m = 4 * self.n;
        let mut image = vec![0; m];
        for (idx, &c) in self.stack.iter().enumerate() {
            image[idx] = c;
            image[m - 1 - idx] = m + 1 - c;
        }
        Permutation::from_one_line(image).expect("mirrored completion is a permutation")
    }
}

impl Iterator for SymmetricRepStream {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        if self.advance() {
            Some(self.materialize())
        } else {
            self.done = true;
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use crate::dellac::count_spdc;

    use super::*;

    fn p(digits: &str) -> Permutation {
        Permutation::from_digits(digits).unwrap()
    }

    #[test]
    fn type_c_word_validates_letters() {
        assert!(TypeCWord::new(2, vec![1, 4]).is_ok());
        assert!(matches!(
            TypeCWord::new(2, vec![5]),
            Err(Error::LetterOutOfRange { letter: 5, rank: 4 })
        ));
        assert!(matches!(
            TypeCWord::new(1, vec![0]),
            Err(Error::LetterOutOfRange { letter: 0, rank: 2 })
        ));
    }

    #[test]
    fn tau_bar_word_small_cases() {
        assert_eq!(tau_bar_word(1).letters(), &[2]);
        assert_eq!(tau_bar_word(2).letters(), &[4, 3, 4, 2]);
        assert_eq!(tau_bar_word(3).len(), 9);
    }

    #[test]
    fn kappa_expand_examples() {
        let empty = TypeCWord::new(1, vec![]).unwrap();
        assert_eq!(kappa_expand(&empty), Permutation::identity(4));
        let r2 = TypeCWord::new(1, vec![2]).unwrap();
        assert_eq!(kappa_expand(&r2), p("1324"));
        assert_eq!(kappa_expand(&tau_bar_word(2)), p("15263748"));
    }

    #[test]
    fn kappa_sends_the_top_word_to_tau() {
        for n in 1..=6 {
            assert_eq!(kappa_expand(&tau_bar_word(n)), tau(2 * n), "n = {n}");
        }
    }

    #[test]
    fn smallest_count_by_hand() {
        assert_eq!(count_wj_leq_taubar(1), 2);
        let reps: Vec<_> = symmetric_coset_reps(1).collect();
        assert_eq!(reps, vec![p("1234"), p("1324")]);
    }

    #[test]
    fn counts_agree_with_brute_force() {
        for n in 1..=2 {
            let top = tau(2 * n);
            let brute = Permutation::all(4 * n)
                .filter(|s| {
                    s.iota().unwrap() == *s
                        && s.is_min_coset_rep().unwrap()
                        && s.bruhat_leq(&top).unwrap()
                })
                .count() as u64;
            assert_eq!(count_wj_leq_taubar(n), brute, "n = {n}");
        }
    }

    #[test]
    fn mirror_fixed_interval_counts_agree_with_brute_force() {
        for n in 1..=2 {
            let top = tau(2 * n);
            let brute = Permutation::all(4 * n)
                .filter(|s| s.iota().unwrap() == *s && s.bruhat_leq(&top).unwrap())
                .count() as u64;
            assert_eq!(count_symmetric_leq_tau(n), brute, "n = {n}");
        }
    }

    #[test]
    fn counts_match_symplectic_configurations() {
        for n in 1..=3 {
            assert_eq!(count_wj_leq_taubar(n), count_spdc(n), "n = {n}");
        }
    }

    #[test]
    fn rep_stream_is_canonical_and_mirror_fixed() {
        let reps: Vec<_> = symmetric_coset_reps(2).collect();
        assert!(reps.windows(2).all(|w| w[0] < w[1]));
        for s in &reps {
            assert_eq!(s.iota().unwrap(), *s);
            assert!(s.is_min_coset_rep().unwrap());
            assert!(s.bruhat_leq(&tau(4)).unwrap());
        }
    }

    fn word_strategy() -> impl Strategy<Value = TypeCWord> {
        (1usize..=3).prop_flat_map(|n| {
            prop::collection::vec(1..=2 * n, 0..12)
                .prop_map(move |letters| TypeCWord::new(n, letters).unwrap())
        })
    }

    proptest! {
        #[test]
        fn kappa_image_is_mirror_fixed(w in word_strategy()) {
            let sigma = kappa_expand(&w);
            prop_assert_eq!(sigma.iota().unwrap(), sigma);
        }
    }
}
