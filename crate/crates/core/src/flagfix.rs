//! Torus fixed points of the degenerate flag variety as chains of index
//! subsets, their coordinate-support chains, the maps between supports and
//! minimal coset representatives, and the composite bijection onto Dellac
//! configurations together with its row-by-row case verification.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::boards::rook_of_perm;
use crate::dellac::{melt, DellacConfig};
use crate::error::Error;
use crate::perm::{tau, Permutation};

/// A torus fixed point of the degenerate flag variety for rank `n`: subsets
/// `I_1, …, I_n` of `{1..=n+1}` with `|I_k| = k` and
/// `I_k \ {k+1} ⊆ I_{k+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FixedPointChain {
    n: usize,
    subsets: Vec<BTreeSet<usize>>,
}

impl FixedPointChain {
    pub fn new(n: usize, subsets: Vec<BTreeSet<usize>>) -> Result<Self, Error> {
        if subsets.len() != n {
            return Err(Error::InvalidChain {
                reason: format!("expected {n} subsets, got {}", subsets.len()),
            });
        }
        for (idx, subset) in subsets.iter().enumerate() {
            let k = idx + 1;
            if subset.len() != k {
                return Err(Error::InvalidChain {
                    reason: format!("subset {k} has {} elements, expected {k}", subset.len()),
                });
            }
            if subset.iter().any(|&s| s == 0 || s > n + 1) {
                return Err(Error::InvalidChain {
                    reason: format!("subset {k} leaves the ground set"),
                });
            }
            if idx > 0 {
                let prev = &subsets[idx - 1];
                if !prev.iter().all(|&s| s == k || subset.contains(&s)) {
                    return Err(Error::InvalidChain {
                        reason: format!("subset {} minus {{{k}}} not inside subset {k}", k - 1),
                    });
                }
            }
        }
        Ok(FixedPointChain { n, subsets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn subsets(&self) -> &[BTreeSet<usize>] {
        &self.subsets
    }

    /// `I_k` with the boundary conventions `I_0 = ∅` and
    /// `I_{n+1} = {1..=n+1}`.
    fn subset_completed(&self, k: usize) -> BTreeSet<usize> {
        if k == 0 {
            BTreeSet::new()
        } else if k == self.n + 1 {
            (1..=self.n + 1).collect()
        } else {
            self.subsets[k - 1].clone()
        }
    }
}

/// The support chain of a fixed point under the isomorphism with a Schubert
/// variety: nested subsets `J_1 ⊂ … ⊂ J_n` of `{1..=2n}` with
/// `|J_l| = 2l − 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlagSupportChain {
    n: usize,
    supports: Vec<BTreeSet<usize>>,
}

impl FlagSupportChain {
    pub fn new(n: usize, supports: Vec<BTreeSet<usize>>) -> Result<Self, Error> {
        if supports.len() != n {
            return Err(Error::InvalidSupportChain {
                reason: format!("expected {n} supports, got {}", supports.len()),
            });
        }
        for (idx, support) in supports.iter().enumerate() {
            let l = idx + 1;
            if support.len() != 2 * l - 1 {
                return Err(Error::InvalidSupportChain {
                    reason: format!(
                        "support {l} has {} elements, expected {}",
                        support.len(),
                        2 * l - 1
                    ),
                });
            }
            if support.iter().any(|&s| s == 0 || s > 2 * n) {
                return Err(Error::InvalidSupportChain {
                    reason: format!("support {l} leaves the ground set"),
                });
            }
            if idx > 0 && !supports[idx - 1].is_subset(support) {
                return Err(Error::InvalidSupportChain {
                    reason: format!("support {} not inside support {l}", l - 1),
                });
            }
        }
        Ok(FlagSupportChain { n, supports })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn supports(&self) -> &[BTreeSet<usize>] {
        &self.supports
    }
}

/// All fixed-point chains for rank `n`, streamed lazily in lexicographic
/// order of the subset sequence.
pub fn enumerate_fixed_chains(n: usize) -> ChainStream {
    ChainStream {
        n,
        levels: Vec::with_capacity(n),
        started: false,
        done: false,
    }
}

/// The number of fixed-point chains for rank `n`.
pub fn count_fixed_chains(n: usize) -> u64 {
    enumerate_fixed_chains(n).count() as u64
}

/// Lazy depth-first enumeration of fixed-point chains, one subset per
/// level, with the candidate subsets of each level materialized in
/// lexicographic order.
#[derive(Debug, Clone)]
pub struct ChainStream {
    n: usize,
    levels: Vec<(Vec<BTreeSet<usize>>, usize)>,
    started: bool,
    done: bool,
}

impl ChainStream {
    /// Candidate subsets for level `levels.len() + 1`: supersets of the
    /// previous subset minus the new index, in lexicographic order.
    fn next_level_candidates(&self) -> Vec<BTreeSet<usize>> {
        let k = self.levels.len() + 1;
        let required: BTreeSet<usize> = match self.levels.last() {
            None => BTreeSet::new(),
            Some((cands, idx)) => cands[*idx].iter().cloned().filter(|&s| s != k).collect(),
        };
        let free: Vec<usize> = (1..=self.n + 1).filter(|s| !required.contains(s)).collect();
        free.into_iter()
            .combinations(k - required.len())
            .map(|extra| required.iter().cloned().chain(extra).collect())
            .collect()
    }

    /// Steps the deepest level to its next candidate, popping exhausted
    /// levels; false when the whole tree is exhausted.
    fn step(&mut self) -> bool {
        loop {
            match self.levels.last_mut() {
                None => return false,
                Some((cands, idx)) => {
                    *idx += 1;
                    if *idx < cands.len() {
                        return true;
                    }
                    self.levels.pop();
                }
            }
        }
    }

    fn advance(&mut self) -> bool {
        if self.started {
            if !self.step() {
                return false;
            }
        } else {
            self.started = true;
        }
        while self.levels.len() < self.n {
            let cands = self.next_level_candidates();
            if cands.is_empty() {
                if !self.step() {
                    return false;
                }
            } else {
                self.levels.push((cands, 0));
            }
        }
        true
    }
}

impl Iterator for ChainStream {
    type Item = FixedPointChain;

    fn next(&mut self) -> Option<FixedPointChain> {
        if self.done {
            return None;
        }
        if self.advance() {
            Some(FixedPointChain {
                n: self.n,
                subsets: self
                    .levels
                    .iter()
                    .map(|(cands, idx)| cands[*idx].clone())
                    .collect(),
            })
        } else {
            self.done = true;
            None
        }
    }
}

/// Sends a fixed-point chain to its support chain. With `κ` the cycle
/// mapping `1 ↦ n+1` and `i ↦ i−1` otherwise, and `p_l` the projection
/// sending `s ↦ 0` for `s ≤ l−1`, `s ↦ s` for `l ≤ s ≤ n+1`, and
/// `s ↦ s−n−1` for `n+2 ≤ s ≤ n+l`, the `l`-th support is
/// `{1..l−1}` together with the `p_l`-preimage of the `κ`-image of `I_l`.
/// The kernel indices `{1..l−1}` are always included, which makes every
/// support have exactly `2l − 1` elements and the chain nested.
pub fn beta(chain: &FixedPointChain) -> FlagSupportChain {
    let n = chain.n();
    let kappa = |s: usize| if s == 1 { n + 1 } else { s - 1 };
    let mut supports = Vec::with_capacity(n);
    for l in 1..=n {
        let image: BTreeSet<usize> = chain.subsets()[l - 1].iter().map(|&s| kappa(s)).collect();
        let mut support: BTreeSet<usize> = (1..l).collect();
        support.extend((l..=n + 1).filter(|s| image.contains(s)));
        support.extend((n + 2..=n + l).filter(|s| image.contains(&(s - n - 1))));
        supports.push(support);
    }
    FlagSupportChain::new(n, supports).expect("supports have size 2l − 1 and nest")
}

/// Reads the support chain off a minimal coset representative below
/// `tau(n + 1)`: with `σ̄` the restriction of `σ` dropping the fixed
/// endpoints, the `l`-th support is `{σ̄(1), …, σ̄(2l − 1)}`.
pub fn alpha(sigma: &Permutation) -> Result<FlagSupportChain, Error> {
    let m = sigma.size();
    if m % 2 != 0 || m < 2 {
        return Err(Error::Precondition {
            reason: format!("size {m} is not an even size of at least 2"),
        });
    }
    let n = m / 2 - 1;
    if !sigma.is_min_coset_rep()? {
        return Err(Error::Precondition {
            reason: format!("{sigma} is not a minimal coset representative"),
        });
    }
    if !sigma.bruhat_leq(&tau(n + 1))? {
        return Err(Error::Precondition {
            reason: format!("{sigma} is not below the top element"),
        });
    }
    let restricted = sigma.restrict()?;
    let supports = (1..=n)
        .map(|l| (1..=2 * l - 1).map(|i| restricted.apply(i)).collect())
        .collect();
    FlagSupportChain::new(n, supports)
}

/// Rebuilds the minimal coset representative from its support chain: the
/// first support gives `σ̄(1)`, each difference `J_l \ J_{l−1}` fills the
/// positions `2l − 2, 2l − 1` in ascending order, the missing index fills
/// the last position, and the endpoints are re-attached. Fails with a
/// not-realizable error when the resulting permutation is not below the top
/// element, i.e. when the chain comes from no fixed point of the Schubert
/// variety.
pub fn alpha_inverse(supports: &FlagSupportChain) -> Result<Permutation, Error> {
    let n = supports.n();
    let mut image = vec![0; 2 * n];
    if n > 0 {
        image[0] = *supports.supports()[0]
            .iter()
            .next()
            .expect("first support is a singleton");
        for l in 2..=n {
            let mut difference = supports.supports()[l - 1].difference(&supports.supports()[l - 2]);
            image[2 * l - 3] = *difference.next().expect("differences have two elements");
            image[2 * l - 2] = *difference.next().expect("differences have two elements");
        }
        let last = &supports.supports()[n - 1];
        image[2 * n - 1] = (1..=2 * n)
            .find(|s| !last.contains(s))
            .expect("one index is missing from the last support");
    }
    let restricted = Permutation::from_one_line(image).map_err(|_| Error::NotRealizable {
        reason: "supports do not assemble into a permutation".into(),
    })?;
    let sigma = restricted.extend();
    if !sigma.is_min_coset_rep()? {
        return Err(Error::NotRealizable {
            reason: format!("{sigma} is not a minimal coset representative"),
        });
    }
    if !sigma.bruhat_leq(&tau(n + 1))? {
        return Err(Error::NotRealizable {
            reason: format!("{sigma} is not below the top element"),
        });
    }
    Ok(sigma)
}

/// The bijection from fixed-point chains for rank `n` onto Dellac
/// configurations of order `n + 1`, computed by composing the support map,
/// the support-to-permutation reconstruction, and the melt map. A
/// not-realizable error from the middle step is a genuine verification
/// failure, not a malformed input.
pub fn feigin_map(chain: &FixedPointChain) -> Result<DellacConfig, Error> {
    let sigma = alpha_inverse(&beta(chain))?;
    melt(&rook_of_perm(&sigma))
}

/// How row `l` of the image configuration relates to the step
/// `I_{l−1} → I_l` of the chain, following the three explicitly described
/// transition shapes; everything else is left unchecked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowCase {
    /// `l` absent before its own step, a single larger index `j` enters:
    /// the row must mark columns `l` and `j`.
    GainsLarger { j: usize },
    /// `l` present before and after its step, a single smaller index `j`
    /// enters: the row must mark columns `j + n + 1` and `l + n + 1`.
    KeepsGainingSmaller { j: usize },
    /// `l` drops out at its own step while `j1 < l < j2` enter: the row
    /// must mark columns `j2` and `j1 + n + 1`.
    DropsForStraddle { j1: usize, j2: usize },
    /// A transition shape with no explicitly described row; no assertion
    /// is made.
    Unchecked,
}

/// The verdict for one row of [`check_feigin_cases`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowCheck {
    pub row: usize,
    pub case: RowCase,
    /// The columns the description forces, ascending; `None` when the row
    /// is unchecked.
    pub expected: Option<(usize, usize)>,
    /// The columns actually marked in the image configuration.
    pub actual: (usize, usize),
}

impl RowCheck {
    /// `Some(true)` when checked and matching, `Some(false)` when checked
    /// and contradicted, `None` when unchecked.
    pub fn holds(&self) -> Option<bool> {
        self.expected.map(|e| e == self.actual)
    }
}

/// Row-by-row verification of [`feigin_map`] against the three described
/// transition shapes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeiginCaseReport {
    pub rows: Vec<RowCheck>,
}

impl FeiginCaseReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &RowCheck> {
        self.rows.iter().filter(|r| r.holds() == Some(false))
    }

    pub fn checked_count(&self) -> usize {
        self.rows.iter().filter(|r| r.expected.is_some()).count()
    }

    pub fn unchecked_count(&self) -> usize {
        self.rows.len() - self.checked_count()
    }

    pub fn all_checked_rows_hold(&self) -> bool {
        self.mismatches().next().is_none()
    }
}

/// Classifies the step `I_{l−1} → I_l` (with the boundary completions
/// `I_0 = ∅` and `I_{n+1}` the full ground set) into one of the described
/// transition shapes, or [`RowCase::Unchecked`].
fn classify_row(chain: &FixedPointChain, l: usize) -> RowCase {
    let prev = chain.subset_completed(l - 1);
    let cur = chain.subset_completed(l);
    let gained: Vec<usize> = cur.difference(&prev).cloned().collect();
    match (prev.contains(&l), cur.contains(&l), gained.as_slice()) {
        (false, _, &[j]) if j > l => RowCase::GainsLarger { j },
        (true, true, &[j]) if j < l => RowCase::KeepsGainingSmaller { j },
        (true, false, &[j1, j2]) if j1 < l && l < j2 => RowCase::DropsForStraddle { j1, j2 },
        _ => RowCase::Unchecked,
    }
}

/// Computes [`feigin_map`] and checks each row of the image against the
/// transition shape of the corresponding chain step. Rows whose step
/// matches a described shape must carry exactly the described columns;
/// rows under any other shape are reported unchecked.
pub fn check_feigin_cases(chain: &FixedPointChain) -> Result<FeiginCaseReport, Error> {
    let n = chain.n();
    let config = feigin_map(chain)?;
    let rows = (1..=n + 1)
        .map(|l| {
            let case = classify_row(chain, l);
            let expected = match case {
                RowCase::GainsLarger { j } => Some((l, j)),
                RowCase::KeepsGainingSmaller { j } => Some((j + n + 1, l + n + 1)),
                RowCase::DropsForStraddle { j1, j2 } => Some((j2, j1 + n + 1)),
                RowCase::Unchecked => None,
            };
            RowCheck {
                row: l,
                case,
                expected,
                actual: config.rows()[l - 1],
            }
        })
        .collect();
    Ok(FeiginCaseReport { rows })
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use crate::boards::restricted_coset_reps;
    use crate::dellac::{count_dc, enumerate_dc};
    use crate::genocchi::h_value;

    use super::*;

    fn set(elements: &[usize]) -> BTreeSet<usize> {
        elements.iter().cloned().collect()
    }

    fn chain(n: usize, subsets: &[&[usize]]) -> FixedPointChain {
        FixedPointChain::new(n, subsets.iter().map(|s| set(s)).collect()).unwrap()
    }

    fn support_chain(n: usize, supports: &[&[usize]]) -> FlagSupportChain {
        FlagSupportChain::new(n, supports.iter().map(|s| set(s)).collect()).unwrap()
    }

    fn p(digits: &str) -> Permutation {
        Permutation::from_digits(digits).unwrap()
    }

    #[test]
    fn chain_validation() {
        assert!(FixedPointChain::new(2, vec![set(&[1]), set(&[1, 3])]).is_ok());
        assert!(FixedPointChain::new(2, vec![set(&[1])]).is_err());
        assert!(FixedPointChain::new(2, vec![set(&[1, 2]), set(&[1, 2])]).is_err());
        assert!(FixedPointChain::new(2, vec![set(&[4]), set(&[1, 4])]).is_err());
        assert!(FixedPointChain::new(2, vec![set(&[1]), set(&[2, 3])]).is_err());
        assert!(FixedPointChain::new(2, vec![set(&[2]), set(&[1, 3])]).is_ok());
    }

    #[test]
    fn support_chain_validation() {
        assert!(FlagSupportChain::new(2, vec![set(&[3]), set(&[1, 2, 3])]).is_ok());
        assert!(FlagSupportChain::new(2, vec![set(&[3, 4]), set(&[1, 2, 3])]).is_err());
        assert!(FlagSupportChain::new(2, vec![set(&[3]), set(&[1, 2, 4])]).is_err());
        assert!(FlagSupportChain::new(1, vec![set(&[5])]).is_err());
    }

    #[test]
    fn smallest_chain_families() {
        let rank_1: Vec<_> = enumerate_fixed_chains(1).collect();
        assert_eq!(rank_1, vec![chain(1, &[&[1]]), chain(1, &[&[2]])]);
        let rank_2: Vec<_> = enumerate_fixed_chains(2).collect();
        let expected: Vec<FixedPointChain> = vec![
            chain(2, &[&[1], &[1, 2]]),
            chain(2, &[&[1], &[1, 3]]),
            chain(2, &[&[2], &[1, 2]]),
            chain(2, &[&[2], &[1, 3]]),
            chain(2, &[&[2], &[2, 3]]),
            chain(2, &[&[3], &[1, 3]]),
            chain(2, &[&[3], &[2, 3]]),
        ];
        assert_eq!(rank_2, expected);
    }

    #[test]
    fn chain_counts_follow_the_configuration_counts() {
        for n in 1..=4 {
            assert_eq!(count_fixed_chains(n), count_dc(n + 1), "n = {n}");
            assert_eq!(
                num_bigint::BigInt::from(count_fixed_chains(n)),
                h_value(n + 1)
            );
        }
    }

    #[test]
    fn beta_worked_examples() {
        assert_eq!(
            beta(&chain(2, &[&[1], &[1, 3]])),
            support_chain(2, &[&[3], &[1, 2, 3]])
        );
        assert_eq!(
            beta(&chain(2, &[&[1], &[1, 2]])),
            support_chain(2, &[&[3], &[1, 3, 4]])
        );
    }

    #[test]
    fn beta_supports_grow_by_two_and_nest() {
        for n in 1..=4 {
            for c in enumerate_fixed_chains(n) {
                let supports = beta(&c);
                for (idx, support) in supports.supports().iter().enumerate() {
                    assert_eq!(support.len(), 2 * (idx + 1) - 1);
                    if idx > 0 {
                        assert!(supports.supports()[idx - 1].is_subset(support));
                    }
                }
            }
        }
    }

    #[test]
    fn alpha_worked_examples() {
        assert_eq!(
            alpha(&p("142536")).unwrap(),
            support_chain(2, &[&[3], &[1, 3, 4]])
        );
        assert_eq!(
            alpha(&Permutation::identity(6)).unwrap(),
            support_chain(2, &[&[1], &[1, 2, 3]])
        );
        assert_eq!(
            alpha(&p("124536")).unwrap(),
            support_chain(2, &[&[1], &[1, 3, 4]])
        );
    }

    #[test]
    fn alpha_rejects_bad_inputs() {
        assert!(matches!(
            alpha(&p("214356")),
            Err(Error::Precondition { .. })
        ));
        assert!(matches!(
            alpha(&p("564132")),
            Err(Error::Precondition { .. })
        ));
    }

    #[test]
    fn alpha_inverse_worked_examples() {
        assert_eq!(
            alpha_inverse(&support_chain(2, &[&[3], &[1, 3, 4]])).unwrap(),
            p("142536")
        );
        assert_eq!(
            alpha_inverse(&support_chain(2, &[&[1], &[1, 2, 3]])).unwrap(),
            Permutation::identity(6)
        );
        assert_eq!(
            alpha_inverse(&support_chain(2, &[&[1], &[1, 3, 4]])).unwrap(),
            p("124536")
        );
    }

    #[test]
    fn alpha_inverse_flags_unrealizable_supports() {
        assert!(matches!(
            alpha_inverse(&support_chain(2, &[&[4], &[2, 3, 4]])),
            Err(Error::NotRealizable { .. })
        ));
    }

    #[test]
    fn alpha_round_trips_on_its_domain() {
        for n in 1..=4 {
            for sigma in restricted_coset_reps(n + 1) {
                let supports = alpha(&sigma).unwrap();
                assert_eq!(alpha_inverse(&supports).unwrap(), sigma, "n = {n}");
            }
        }
    }

    #[test]
    fn beta_always_lands_on_realizable_supports() {
        for n in 1..=4 {
            for c in enumerate_fixed_chains(n) {
                let sigma = alpha_inverse(&beta(&c)).unwrap();
                assert_eq!(alpha(&sigma).unwrap(), beta(&c), "chain {c:?}");
            }
        }
    }

    #[test]
    fn feigin_worked_examples() {
        assert_eq!(
            feigin_map(&chain(2, &[&[1], &[1, 3]])).unwrap(),
            DellacConfig::new(3, vec![(1, 4), (2, 3), (5, 6)]).unwrap()
        );
        assert_eq!(
            feigin_map(&chain(2, &[&[1], &[1, 2]])).unwrap(),
            DellacConfig::new(3, vec![(1, 4), (2, 5), (3, 6)]).unwrap()
        );
    }

    #[test]
    fn feigin_map_is_a_bijection_onto_configurations() {
        for n in 1..=4 {
            let images: BTreeSet<DellacConfig> = enumerate_fixed_chains(n)
                .map(|c| feigin_map(&c).unwrap())
                .collect();
            assert_eq!(images.len() as u64, count_fixed_chains(n), "n = {n}");
            let all: BTreeSet<DellacConfig> = enumerate_dc(n + 1).collect();
            assert_eq!(images, all, "n = {n}");
        }
    }

    #[test]
    fn case_check_on_the_worked_example() {
        let report = check_feigin_cases(&chain(2, &[&[1], &[1, 3]])).unwrap();
        assert_eq!(report.rows[0].case, RowCase::Unchecked);
        assert_eq!(report.rows[1].case, RowCase::GainsLarger { j: 3 });
        assert_eq!(report.rows[1].expected, Some((2, 3)));
        assert_eq!(report.rows[1].actual, (2, 3));
        assert_eq!(report.rows[2].case, RowCase::KeepsGainingSmaller { j: 2 });
        assert_eq!(report.rows[2].expected, Some((5, 6)));
        assert!(report.all_checked_rows_hold());
        assert_eq!(report.checked_count(), 2);
    }

    #[test]
    fn boundary_step_with_no_described_shape_stays_unchecked() {
        let report = check_feigin_cases(&chain(2, &[&[1], &[1, 2]])).unwrap();
        assert!(report.rows.iter().all(|r| r.case == RowCase::Unchecked));
        assert!(report.all_checked_rows_hold());
    }

    #[test]
    fn case_checks_never_fail_exhaustively() {
        let mut tally: BTreeMap<&'static str, usize> = BTreeMap::new();
        for n in 1..=4 {
            for c in enumerate_fixed_chains(n) {
                let report = check_feigin_cases(&c).unwrap();
                assert!(report.all_checked_rows_hold(), "chain {c:?}");
                for row in &report.rows {
                    let key = match row.case {
                        RowCase::GainsLarger { .. } => "gains larger",
                        RowCase::KeepsGainingSmaller { .. } => "keeps, gains smaller",
                        RowCase::DropsForStraddle { .. } => "drops for straddle",
                        RowCase::Unchecked => "unchecked",
                    };
                    *tally.entry(key).or_default() += 1;
                }
            }
        }
        assert!(tally["gains larger"] > 0);
        assert!(tally["keeps, gains smaller"] > 0);
        assert!(tally["drops for straddle"] > 0);
    }

    #[test]
    fn unchecked_rows_fall_only_under_mirror_or_degenerate_shapes() {
        for n in 1..=4 {
            for c in enumerate_fixed_chains(n) {
                for l in 1..=n + 1 {
                    if classify_row(&c, l) != RowCase::Unchecked {
                        continue;
                    }
                    let prev = c.subset_completed(l - 1);
                    let cur = c.subset_completed(l);
                    let gained: Vec<usize> = cur.difference(&prev).cloned().collect();
                    let shape_is_known = match (prev.contains(&l), cur.contains(&l)) {
                        (false, _) => gained.len() == 1 && gained[0] <= l,
                        (true, true) => gained.len() == 1 && gained[0] > l,
                        (true, false) => gained.len() == 2 && !(gained[0] < l && l < gained[1]),
                    };
                    assert!(shape_is_known, "chain {c:?}, row {l}");
                }
            }
        }
    }
}
