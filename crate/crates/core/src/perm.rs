//! Permutations in one-line notation, Coxeter words, Bruhat order, pattern
//! containment, the mirror involution on groups of size divisible by four,
//! and the distinguished elements `tau(n)`.

use std::fmt;

use itertools::Itertools;

use crate::error::Error;

/// A permutation of `{1..=m}` in one-line notation.
///
/// `image[k]` holds the value at position `k + 1`; positions and values are
/// 1-based everywhere in the public API. The derived ordering is
/// lexicographic on the one-line notation, which is the canonical order used
/// by every enumeration stream in this crate.
///
/// ```
/// use dellac_core::perm::Permutation;
///
/// let p = Permutation::from_digits("142536").unwrap();
/// assert_eq!(p.apply(2), 4);
/// assert_eq!(p.to_string(), "142536");
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    /// The identity permutation of `{1..=m}`.
    pub fn identity(m: usize) -> Self {
        Permutation {
            image: (1..=m).collect(),
        }
    }

    /// Builds a permutation from one-line notation, checking that the entries
    /// are exactly `1..=m` in some order.
    pub fn from_one_line(image: Vec<usize>) -> Result<Self, Error> {
        let m = image.len();
        let mut seen = vec![false; m + 1];
        for &v in &image {
            if v == 0 || v > m || seen[v] {
                return Err(Error::NotAPermutation { size: m });
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    /// Builds a permutation from a digit string such as `"142536"`.
    /// Only sizes up to 9 can be written this way.
    pub fn from_digits(digits: &str) -> Result<Self, Error> {
        let image = digits
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as usize))
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::NotAPermutation { size: digits.len() })?;
        Self::from_one_line(image)
    }

    pub fn size(&self) -> usize {
        self.image.len()
    }

    /// The value at 1-based position `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1]
    }

    /// The one-line notation as a slice, `one_line()[i] = apply(i + 1)`.
    pub fn one_line(&self) -> &[usize] {
        &self.image
    }

    /// Functional composition: `(self.compose(other))(k) = self(other(k))`.
    pub fn compose(&self, other: &Self) -> Result<Self, Error> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        Ok(Permutation {
            image: other.image.iter().map(|&v| self.image[v - 1]).collect(),
        })
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Self {
        let mut image = vec![0; self.size()];
        for (k, &v) in self.image.iter().enumerate() {
            image[v - 1] = k + 1;
        }
        Permutation { image }
    }

    /// Coxeter length: the number of inversions, pairs `i < j` with
    /// `apply(i) > apply(j)`.
    pub fn length(&self) -> usize {
        let m = self.size();
        (0..m)
            .map(|i| {
                (i + 1..m)
                    .filter(|&j| self.image[i] > self.image[j])
                    .count()
            })
            .sum()
    }

    /// Bruhat order by the sorted-prefix criterion: `self <= other` iff for
    /// every `k` the ascending sort of the first `k` values of `self` is
    /// entrywise at most the ascending sort of the first `k` values of
    /// `other`.
    pub fn bruhat_leq(&self, other: &Self) -> Result<bool, Error> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        let m = self.size();
        let mut mine: Vec<usize> = Vec::with_capacity(m);
        let mut theirs: Vec<usize> = Vec::with_capacity(m);
        for k in 0..m {
            insert_sorted(&mut mine, self.image[k]);
            insert_sorted(&mut theirs, other.image[k]);
            if mine.iter().zip(&theirs).any(|(a, b)| a > b) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The involution `k ↦ m + 1 − apply(m + 1 − k)` on groups whose size
    /// `m` is a multiple of four. Conjugation by it sends the generator
    /// `s_i` to `s_{m−i}`, and its fixed points realize the Weyl group of
    /// the symplectic group of rank `m / 2`.
    pub fn iota(&self) -> Result<Self, Error> {
        let m = self.size();
        if m % 4 != 0 {
            return Err(Error::SizeNotMultipleOfFour { size: m });
        }
        Ok(Permutation {
            image: (1..=m).map(|k| m + 1 - self.image[m - k]).collect(),
        })
    }

    /// Whether every odd position ascends: `apply(2k − 1) < apply(2k)` for
    /// all `k`. These are the minimal-length representatives of the cosets
    /// modulo the subgroup generated by the odd-indexed adjacent swaps.
    pub fn is_min_coset_rep(&self) -> Result<bool, Error> {
        let m = self.size();
        if m % 2 != 0 {
            return Err(Error::OddSize { size: m });
        }
        Ok((0..m / 2).all(|k| self.image[2 * k] < self.image[2 * k + 1]))
    }

    /// Whether some subsequence of `self`'s one-line notation is
    /// order-isomorphic to `pattern`. Matches by backtracking over position
    /// subsequences, pruning any partial match that already breaks the
    /// order-isomorphism.
    pub fn contains_pattern(&self, pattern: &Self) -> bool {
        let q = &pattern.image;
        if q.len() > self.image.len() {
            return false;
        }
        let mut chosen = Vec::with_capacity(q.len());
        self.pattern_search(q, &mut chosen)
    }

    fn pattern_search(&self, q: &[usize], chosen: &mut Vec<usize>) -> bool {
        let p = &self.image;
        let t = chosen.len();
        if t == q.len() {
            return true;
        }
        let start = chosen.last().map_or(0, |&i| i + 1);
        for i in start..=(p.len() - (q.len() - t)) {
            let consistent = chosen
                .iter()
                .enumerate()
                .all(|(s, &j)| (q[s] < q[t]) == (p[j] < p[i]));
            if consistent {
                chosen.push(i);
                if self.pattern_search(q, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    /// Drops the fixed endpoints: for a permutation of `{1..=m}` with
    /// `apply(1) = 1` and `apply(m) = m`, returns the permutation of
    /// `{1..=m−2}` given by `i ↦ apply(i + 1) − 1`.
    pub fn restrict(&self) -> Result<Self, Error> {
        let m = self.size();
        if m < 2 || self.image[0] != 1 || self.image[m - 1] != m {
            return Err(Error::RestrictionUndefined);
        }
        Ok(Permutation {
            image: self.image[1..m - 1].iter().map(|&v| v - 1).collect(),
        })
    }

    /// Inverse of [`restrict`](Self::restrict): prepends a fixed point at 1,
    /// shifts all values up by one, and appends a fixed point at the end.
    pub fn extend(&self) -> Self {
        let m = self.size();
        let mut image = Vec::with_capacity(m + 2);
        image.push(1);
        image.extend(self.image.iter().map(|&v| v + 1));
        image.push(m + 2);
        Permutation { image }
    }

    /// All permutations of `{1..=m}` in lexicographic order.
    pub fn all(m: usize) -> impl Iterator<Item = Permutation> {
        (1..=m).permutations(m).map(|image| Permutation { image })
    }

    pub(crate) fn from_image_unchecked(image: Vec<usize>) -> Self {
        Permutation { image }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.image.len() <= 9 {
            for &v in &self.image {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let words: Vec<String> = self.image.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", words.join(" "))
        }
    }
}

fn insert_sorted(sorted: &mut Vec<usize>, value: usize) {
    let at = sorted.partition_point(|&x| x < value);
    sorted.insert(at, value);
}

/// A word in the adjacent-transposition generators `s_1..s_rank` of a
/// symmetric group, stored as the sequence of generator indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterWord {
    rank: usize,
    letters: Vec<usize>,
}

impl CoxeterWord {
    pub fn new(rank: usize, letters: Vec<usize>) -> Result<Self, Error> {
        for &letter in &letters {
            if letter == 0 || letter > rank {
                return Err(Error::LetterOutOfRange { letter, rank });
            }
        }
        Ok(CoxeterWord { rank, letters })
    }

    pub fn rank(&self) -> usize {
        self.rank
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

    /// Evaluates the word in the symmetric group on `m` symbols: starting
    /// from the identity one-line sequence, each letter `i` swaps the entries
    /// at positions `i` and `i + 1`, processed left to right.
    ///
    /// ```
    /// use dellac_core::perm::CoxeterWord;
    ///
    /// let w = CoxeterWord::new(5, vec![3, 4, 2]).unwrap();
    /// assert_eq!(w.evaluate(6).unwrap().to_string(), "142536");
    /// ```
    pub fn evaluate(&self, m: usize) -> Result<Permutation, Error> {
        if let Some(&letter) = self.letters.iter().find(|&&l| l + 1 > m) {
            return Err(Error::LetterOutOfRange {
                letter,
                rank: m.saturating_sub(1),
            });
        }
        let mut image: Vec<usize> = (1..=m).collect();
        for &letter in &self.letters {
            image.swap(letter - 1, letter);
        }
        Ok(Permutation { image })
    }
}

/// The element of the symmetric group on `2n` symbols defined by
/// `tau(n)(2k − 1) = k` and `tau(n)(2k) = n + k`.
///
/// ```
/// use dellac_core::perm::tau;
///
/// assert_eq!(tau(3).to_string(), "142536");
/// ```
pub fn tau(n: usize) -> Permutation {
    let mut image = Vec::with_capacity(2 * n);
    for k in 1..=n {
        image.push(k);
        image.push(n + k);
    }
    Permutation { image }
}

/// The defining word for [`tau`]: the concatenation of the blocks
/// `(s_k, s_{k+1}, …, s_{2k−2})` for `k = n` down to `2`. Evaluating it must
/// reproduce `tau(n)`, which pins the word-evaluation convention.
pub fn tau_word(n: usize) -> CoxeterWord {
    let mut letters = Vec::new();
    for k in (2..=n).rev() {
        letters.extend(k..=2 * k - 2);
    }
    CoxeterWord {
        rank: 2 * n - 1,
        letters,
    }
}
