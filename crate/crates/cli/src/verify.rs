//! The suites behind `verify` and `conjecture`: each runs a family of
//! named checks for every size up to the requested bound, recording the
//! counts it computed along the way. Checks that the time budget rules
//! out are reported unchecked, never silently dropped.

use std::collections::{BTreeMap, BTreeSet};

use dellac_core::boards::{leq_tau_via_hull, perm_of_rook, restricted_coset_reps};
use dellac_core::dellac::{blow, enumerate_dc, enumerate_spdc, melt, DellacConfig};
use dellac_core::flagfix::{check_feigin_cases, enumerate_fixed_chains, feigin_map};
use dellac_core::genocchi::{e_target, h_value};
use dellac_core::perm::{tau, Permutation};
use dellac_core::symplectic::{kappa_expand, symmetric_coset_reps, tau_bar_word};

use crate::budget::{count_within, Deadline};
use crate::report::{Check, VerificationReport};

const NOT_ATTEMPTED: &str = "not attempted within the time budget";
const INTERRUPTED: &str = "interrupted by the time budget";

fn base(command: &str, key: &str, value: usize) -> VerificationReport {
    let mut parameters = BTreeMap::new();
    parameters.insert(key.to_string(), value as u64);
    VerificationReport::new(command, parameters)
}

/// For each size `k ≤ n`, compares the hull criterion against the sorted
/// prefix Bruhat test over the whole symmetric group of degree `2k`.
pub fn sjostrand(n: usize, deadline: &Deadline) -> VerificationReport {
    let mut report = base("verify sjostrand", "n", n);
    for k in 1..=n {
        let name = format!("hull-vs-oracle-n-{k}");
        if deadline.expired() {
            report.checks.push(Check::unchecked(name, NOT_ATTEMPTED));
            continue;
        }
        let top = tau(k);
        let mut scanned = 0u64;
        let mut verdict = None;
        for u in Permutation::all(2 * k) {
            scanned += 1;
            if scanned % 4096 == 0 && deadline.expired() {
                verdict = Some(Check::unchecked(name.clone(), INTERRUPTED));
                break;
            }
            let by_hull = leq_tau_via_hull(&u, k).expect("sizes match");
            let by_prefixes = u.bruhat_leq(&top).expect("sizes match");
            if by_hull != by_prefixes {
                verdict = Some(Check::fail(
                    name.clone(),
                    format!("criteria disagree at {u}"),
                ));
                break;
            }
        }
        report.checks.push(verdict.unwrap_or_else(|| {
            Check::pass(
                name,
                format!(
                    "exhaustive agreement on {scanned} permutations of degree {}",
                    2 * k
                ),
            )
        }));
        report.record_count(format!("degree-{}-permutations", 2 * k), scanned);
    }
    report
}

/// For each size `k ≤ n`, round-trips every configuration through blow
/// and melt, and compares the blow image with the restricted
/// representatives.
pub fn melt_blow(n: usize, deadline: &Deadline) -> VerificationReport {
    let mut report = base("verify melt-blow", "n", n);
    for k in 1..=n {
        let trip_name = format!("round-trip-n-{k}");
        let image_name = format!("image-n-{k}");
        if deadline.expired() {
            report
                .checks
                .push(Check::unchecked(trip_name, NOT_ATTEMPTED));
            report
                .checks
                .push(Check::unchecked(image_name, NOT_ATTEMPTED));
            continue;
        }
        let mut configurations = 0u64;
        let mut images = BTreeSet::new();
        let mut interrupted = false;
        let mut broken = None;
        for c in enumerate_dc(k) {
            configurations += 1;
            if configurations % 1024 == 0 && deadline.expired() {
                interrupted = true;
                break;
            }
            let arrangement = blow(&c);
            match melt(&arrangement) {
                Ok(back) if back == c => {
                    images.insert(perm_of_rook(&arrangement));
                }
                _ => {
                    broken = Some(format!("round trip broke at rows {:?}", c.rows()));
                    break;
                }
            }
        }
        if interrupted {
            report.checks.push(Check::unchecked(trip_name, INTERRUPTED));
            report
                .checks
                .push(Check::unchecked(image_name, INTERRUPTED));
            continue;
        }
        report.record_count(format!("dc-{k}"), configurations);
        if let Some(detail) = broken {
            report.checks.push(Check::fail(trip_name, detail));
            report.checks.push(Check::unchecked(
                image_name,
                "not evaluated past a round-trip failure",
            ));
            continue;
        }
        report.checks.push(Check::pass(
            trip_name,
            format!("melt after blow fixes all {configurations} configurations"),
        ));
        let mut reps = 0u64;
        let mut missing = None;
        let mut interrupted_reps = false;
        for rep in restricted_coset_reps(k) {
            reps += 1;
            if reps % 1024 == 0 && deadline.expired() {
                interrupted_reps = true;
                break;
            }
            if missing.is_none() && !images.contains(&rep) {
                missing = Some(rep);
            }
        }
        if interrupted_reps {
            report
                .checks
                .push(Check::unchecked(image_name, INTERRUPTED));
        } else if missing.is_none() && reps == images.len() as u64 {
            report.checks.push(Check::pass(
                image_name,
                format!("blow image equals the {reps} restricted representatives"),
            ));
        } else if let Some(rep) = missing {
            report.checks.push(Check::fail(
                image_name,
                format!("representative {rep} is outside the blow image"),
            ));
        } else {
            report.checks.push(Check::fail(
                image_name,
                format!(
                    "blow image has {} elements, restricted representatives {reps}",
                    images.len()
                ),
            ));
        }
    }
    report
}

/// For each size `k ≤ n`, expands the folded top word through the letter
/// embedding and compares it with the unfolded top element.
pub fn kappa(n: usize, deadline: &Deadline) -> VerificationReport {
    let mut report = base("verify kappa", "n", n);
    for k in 1..=n {
        let name = format!("lock-in-n-{k}");
        if deadline.expired() {
            report.checks.push(Check::unchecked(name, NOT_ATTEMPTED));
            continue;
        }
        let expanded = kappa_expand(&tau_bar_word(k));
        if expanded == tau(2 * k) {
            report.checks.push(Check::pass(
                name,
                format!(
                    "expanded word evaluates to the top element in degree {}",
                    4 * k
                ),
            ));
        } else {
            report.checks.push(Check::fail(
                name,
                format!("expanded word evaluates to {expanded} instead"),
            ));
        }
    }
    report
}

/// For each size `k ≤ n`, checks that configurations, hull-restricted
/// representatives, and the polynomial value at 1 agree.
pub fn genocchi_theorem(n: usize, deadline: &Deadline) -> VerificationReport {
    let mut report = base("verify genocchi-theorem", "n", n);
    for k in 1..=n {
        let name = format!("count-match-n-{k}");
        if deadline.expired() {
            report.checks.push(Check::unchecked(name, NOT_ATTEMPTED));
            continue;
        }
        let dc = count_within(enumerate_dc(k), deadline);
        let reps = count_within(restricted_coset_reps(k), deadline);
        let (Some(dc), Some(reps)) = (dc, reps) else {
            report.checks.push(Check::unchecked(name, INTERRUPTED));
            continue;
        };
        let polynomial = h_value(k).to_string();
        report.record_count(format!("dc-{k}"), dc);
        report.record_count(format!("wj-tau-{k}"), reps);
        report.record_count(format!("h-at-1-{k}"), &polynomial);
        if dc.to_string() == polynomial && reps.to_string() == polynomial {
            report.checks.push(Check::pass(
                name,
                format!(
                    "{dc} configurations, {reps} representatives, polynomial value {polynomial}"
                ),
            ));
        } else {
            report.checks.push(Check::fail(
                name,
                format!(
                    "counts disagree: {dc} configurations, {reps} representatives, polynomial value {polynomial}"
                ),
            ));
        }
    }
    report
}

/// For each half-rank `k ≤ n`, checks that mirror-fixed configurations
/// and mirror-fixed representatives below the folded top element agree.
pub fn symplectic_theorem(n: usize, deadline: &Deadline) -> VerificationReport {
    let mut report = base("verify symplectic-theorem", "n", n);
    for k in 1..=n {
        let name = format!("count-match-n-{k}");
        if deadline.expired() {
            report.checks.push(Check::unchecked(name, NOT_ATTEMPTED));
            continue;
        }
        let spdc = count_within(enumerate_spdc(k), deadline);
        let reps = count_within(symmetric_coset_reps(k), deadline);
        let (Some(spdc), Some(reps)) = (spdc, reps) else {
            report.checks.push(Check::unchecked(name, INTERRUPTED));
            continue;
        };
        report.record_count(format!("spdc-{k}"), spdc);
        report.record_count(format!("wj-taubar-{k}"), reps);
        if spdc == reps {
            report.checks.push(Check::pass(
                name,
                format!("{spdc} mirror-fixed configurations, {reps} representatives"),
            ));
        } else {
            report.checks.push(Check::fail(
                name,
                format!("counts disagree: {spdc} configurations, {reps} representatives"),
            ));
        }
    }
    report
}

/// For each rank `k ≤ n`, runs the whole fixed-point pipeline: chain
/// count, reconstructibility of every support image, bijectivity onto
/// configurations of order `k + 1`, and the row-by-row case check.
pub fn diagram(n: usize, deadline: &Deadline) -> VerificationReport {
    let mut report = base("verify diagram", "n", n);
    for k in 1..=n {
        let names = [
            format!("chain-count-n-{k}"),
            format!("realizable-n-{k}"),
            format!("bijection-n-{k}"),
            format!("cases-n-{k}"),
        ];
        if deadline.expired() {
            for name in names {
                report.checks.push(Check::unchecked(name, NOT_ATTEMPTED));
            }
            continue;
        }
        let mut targets: BTreeSet<DellacConfig> = BTreeSet::new();
        let mut scanned = 0u64;
        let mut interrupted = false;
        for c in enumerate_dc(k + 1) {
            targets.insert(c);
            scanned += 1;
            if scanned % 1024 == 0 && deadline.expired() {
                interrupted = true;
                break;
            }
        }
        let mut chains = 0u64;
        let mut images: BTreeSet<DellacConfig> = BTreeSet::new();
        let mut checked_rows = 0u64;
        let mut unchecked_rows = 0u64;
        let mut broken: Option<String> = None;
        let mut contradiction: Option<String> = None;
        if !interrupted {
            for chain in enumerate_fixed_chains(k) {
                chains += 1;
                if chains % 256 == 0 && deadline.expired() {
                    interrupted = true;
                    break;
                }
                match feigin_map(&chain) {
                    Err(error) => {
                        broken = Some(format!("chain {:?}: {error}", chain.subsets()));
                        break;
                    }
                    Ok(image) => {
                        images.insert(image);
                    }
                }
                let cases = check_feigin_cases(&chain).expect("map succeeded");
                for row in &cases.rows {
                    match row.holds() {
                        Some(true) => checked_rows += 1,
                        None => unchecked_rows += 1,
                        Some(false) => {
                            contradiction =
                                Some(format!("chain {:?}, row {}", chain.subsets(), row.row));
                        }
                    }
                }
                if contradiction.is_some() {
                    break;
                }
            }
        }
        if interrupted {
            for name in names {
                report.checks.push(Check::unchecked(name, INTERRUPTED));
            }
            continue;
        }
        let [chain_name, realizable_name, bijection_name, cases_name] = names;
        report.record_count(format!("fixed-chains-{k}"), chains);
        report.record_count(format!("dc-{}", k + 1), targets.len() as u64);
        if chains == targets.len() as u64 {
            report.checks.push(Check::pass(
                chain_name,
                format!("{chains} chains against {} configurations", targets.len()),
            ));
        } else {
            report.checks.push(Check::fail(
                chain_name,
                format!("{chains} chains but {} configurations", targets.len()),
            ));
        }
        match &broken {
            None => report.checks.push(Check::pass(
                realizable_name,
                format!("all {chains} support images reconstruct to representatives"),
            )),
            Some(detail) => report
                .checks
                .push(Check::fail(realizable_name, detail.clone())),
        }
        if broken.is_some() {
            report.checks.push(Check::unchecked(
                bijection_name,
                "not evaluated past a reconstruction failure",
            ));
            report.checks.push(Check::unchecked(
                cases_name,
                "not evaluated past a reconstruction failure",
            ));
            continue;
        }
        if images == targets && images.len() as u64 == chains {
            report.checks.push(Check::pass(
                bijection_name,
                format!(
                    "{} distinct images covering every configuration",
                    images.len()
                ),
            ));
        } else {
            report.checks.push(Check::fail(
                bijection_name,
                format!(
                    "{} distinct images from {chains} chains against {} configurations",
                    images.len(),
                    targets.len()
                ),
            ));
        }
        match contradiction {
            None => report.checks.push(Check::pass(
                cases_name,
                format!(
                    "{checked_rows} rows match their described shape, {unchecked_rows} rows have none"
                ),
            )),
            Some(detail) => report.checks.push(Check::fail(cases_name, detail)),
        }
    }
    report
}

/// For each half-rank `k ≤ max`, compares the mirror-fixed configuration
/// count against the target series at index `k` and at index `k − 1`, and
/// closes with a verdict on which alignment the data supports.
pub fn conjecture_sp(max: usize, deadline: &Deadline) -> VerificationReport {
    let mut report = base("conjecture sp", "max", max);
    let mut completed = 0u64;
    let mut same_index = 0u64;
    let mut previous_index = 0u64;
    let mut neither = false;
    for k in 1..=max {
        let name = format!("alignment-n-{k}");
        if deadline.expired() {
            report.checks.push(Check::unchecked(name, NOT_ATTEMPTED));
            continue;
        }
        let Some(count) = count_within(enumerate_spdc(k), deadline) else {
            report.checks.push(Check::unchecked(name, INTERRUPTED));
            continue;
        };
        completed += 1;
        let at_k = e_target(k).to_string();
        let at_prev = e_target(k - 1).to_string();
        report.record_count(format!("spdc-{k}"), count);
        report.record_count(format!("e-target-{k}"), &at_k);
        report.record_count(format!("e-target-{}", k - 1), &at_prev);
        let count_text = count.to_string();
        if count_text == at_k {
            same_index += 1;
            report.checks.push(Check::pass(
                name,
                format!("count {count} equals the series value at index {k}"),
            ));
        } else if count_text == at_prev {
            previous_index += 1;
            report.checks.push(Check::pass(
                name,
                format!("count {count} equals the series value at index {}", k - 1),
            ));
        } else {
            neither = true;
            report.checks.push(Check::fail(
                name,
                format!(
                    "count {count} equals neither the series value at index {k} ({at_k}) nor at index {} ({at_prev})",
                    k - 1
                ),
            ));
        }
    }
    let verdict_name = "alignment-consistent".to_string();
    let verdict = if completed == 0 {
        Check::unchecked(verdict_name, "no count completed within the time budget")
    } else if neither {
        Check::fail(
            verdict_name,
            "some completed count matches neither alignment",
        )
    } else if same_index > 0 && previous_index > 0 {
        Check::fail(
            verdict_name,
            "completed counts disagree on which index they match",
        )
    } else if same_index == completed {
        Check::pass(
            verdict_name,
            format!("all {completed} completed counts equal the series value at their own index"),
        )
    } else {
        Check::pass(
            verdict_name,
            format!(
                "all {completed} completed counts equal the series value at the previous index"
            ),
        )
    };
    report.checks.push(verdict);
    report
}
