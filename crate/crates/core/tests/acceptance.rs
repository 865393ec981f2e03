//! The acceptance gate: ten criteria, each printing one PASS or FAIL
//! line. Every criterion is an exact equality between independently
//! computed quantities, with a soft wall-clock ceiling.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;

use dellac_core::boards::{leq_tau_via_hull, perm_of_rook, restricted_coset_reps};
use dellac_core::dellac::{blow, count_dc, count_spdc, enumerate_dc, melt};
use dellac_core::flagfix::{
    alpha_inverse, beta, check_feigin_cases, count_fixed_chains, enumerate_fixed_chains, feigin_map,
};
use dellac_core::genocchi::{e_polynomial, e_target, h_polynomial, h_value};
use dellac_core::perm::{tau, Permutation};
use dellac_core::symplectic::{count_wj_leq_taubar, kappa_expand, tau_bar_word};

fn criterion(id: u32, name: &str, limit: Duration, body: impl FnOnce() -> Result<String, String>) {
    let started = Instant::now();
    let verdict = body();
    let elapsed = started.elapsed();
    let verdict = match verdict {
        Ok(_) if elapsed > limit => Err(format!(
            "finished correct but over the {:?} ceiling in {elapsed:?}",
            limit
        )),
        other => other,
    };
    match verdict {
        Ok(summary) => println!("ACCEPTANCE {id} {name}: PASS ({summary})"),
        Err(reason) => {
            println!("ACCEPTANCE {id} {name}: FAIL ({reason})");
            panic!("acceptance criterion {id} {name} failed: {reason}");
        }
    }
}

#[test]
fn acceptance_01_configuration_counts() {
    criterion(1, "configuration-counts", Duration::from_secs(60), || {
        let expected: [u64; 6] = [1, 2, 7, 38, 295, 3098];
        for n in 1..=6 {
            let configurations = count_dc(n);
            let representatives = restricted_coset_reps(n).count() as u64;
            let polynomial = h_value(n);
            let target = expected[n - 1];
            if configurations != target
                || representatives != target
                || polynomial != BigInt::from(target)
            {
                return Err(format!(
                    "n = {n}: configurations {configurations}, representatives {representatives}, polynomial {polynomial}, expected {target}"
                ));
            }
        }
        Ok("three independent counts agree at 1, 2, 7, 38, 295, 3098".to_string())
    });
}

#[test]
fn acceptance_02_published_target_values() {
    criterion(2, "published-target-values", Duration::from_secs(1), || {
        let expected: [u64; 5] = [1, 2, 10, 98, 1594];
        for (n, target) in expected.iter().enumerate() {
            let value = e_target(n);
            if value != BigInt::from(*target) {
                return Err(format!("index {n}: computed {value}, expected {target}"));
            }
        }
        Ok("target series opens 1, 2, 10, 98, 1594".to_string())
    });
}

#[test]
fn acceptance_03_mirror_fixed_counts() {
    criterion(3, "mirror-fixed-counts", Duration::from_secs(300), || {
        let mut summary = Vec::new();
        for n in 1..=3 {
            let configurations = count_spdc(n);
            let representatives = count_wj_leq_taubar(n);
            if configurations != representatives {
                return Err(format!(
                    "n = {n}: {configurations} configurations, {representatives} representatives"
                ));
            }
            summary.push(configurations.to_string());
        }
        let stretch_started = Instant::now();
        let configurations = count_spdc(4);
        let representatives = count_wj_leq_taubar(4);
        if configurations != representatives {
            return Err(format!(
                "n = 4: {configurations} configurations, {representatives} representatives"
            ));
        }
        summary.push(format!(
            "{configurations} (n = 4 completed in {:?})",
            stretch_started.elapsed()
        ));
        Ok(format!("counts agree at {}", summary.join(", ")))
    });
}

#[test]
fn acceptance_04_conjecture_alignment() {
    criterion(4, "conjecture-alignment", Duration::from_secs(300), || {
        if count_spdc(1) != 2 {
            return Err("anchor count at half-rank 1 is not 2".to_string());
        }
        let mut alignment: Option<&'static str> = None;
        for n in 1..=4 {
            let count = BigInt::from(count_spdc(n));
            let at_n = e_target(n);
            let at_prev = e_target(n - 1);
            let here = match (count == at_n, count == at_prev) {
                (true, false) => "own index",
                (false, true) => "previous index",
                (true, true) => return Err(format!("n = {n}: series values coincide")),
                (false, false) => {
                    return Err(format!(
                        "n = {n}: count {count} matches neither {at_n} nor {at_prev}"
                    ))
                }
            };
            match alignment {
                None => alignment = Some(here),
                Some(seen) if seen != here => {
                    return Err(format!("alignment flips at n = {n}"));
                }
                Some(_) => {}
            }
        }
        Ok(format!(
            "every count matches the series value at its {} for half-ranks 1..4",
            alignment.expect("at least one half-rank completed")
        ))
    });
}

#[test]
fn acceptance_05_hull_criterion_exhaustive() {
    criterion(
        5,
        "hull-criterion-exhaustive",
        Duration::from_secs(120),
        || {
            let mut scanned = 0u64;
            for n in 1..=4 {
                let top = tau(n);
                for u in Permutation::all(2 * n) {
                    scanned += 1;
                    let by_hull = leq_tau_via_hull(&u, n).expect("matching sizes");
                    let by_prefixes = u.bruhat_leq(&top).expect("matching sizes");
                    if by_hull != by_prefixes {
                        return Err(format!("criteria disagree at {u} for n = {n}"));
                    }
                }
            }
            Ok(format!(
            "hull and sorted-prefix criteria agree on all {scanned} permutations through degree 8"
        ))
        },
    );
}

#[test]
fn acceptance_06_melt_blow_bijection() {
    criterion(6, "melt-blow-bijection", Duration::from_secs(120), || {
        let mut total = 0u64;
        for n in 1..=5 {
            let mut images = BTreeSet::new();
            for c in enumerate_dc(n) {
                total += 1;
                let arrangement = blow(&c);
                match melt(&arrangement) {
                    Ok(back) if back == c => {
                        images.insert(perm_of_rook(&arrangement));
                    }
                    _ => return Err(format!("round trip broke at rows {:?}", c.rows())),
                }
            }
            let representatives: BTreeSet<Permutation> = restricted_coset_reps(n).collect();
            if images != representatives {
                return Err(format!(
                    "n = {n}: blow image and restricted representatives differ"
                ));
            }
        }
        Ok(format!(
            "round trip fixes all {total} configurations and the images match through order 5"
        ))
    });
}

#[test]
fn acceptance_07_embedding_lock_in() {
    criterion(7, "embedding-lock-in", Duration::from_secs(1), || {
        for n in 1..=6 {
            if kappa_expand(&tau_bar_word(n)) != tau(2 * n) {
                return Err(format!("expanded word misses the top element at n = {n}"));
            }
        }
        Ok("the expanded folded word hits the top element for half-ranks 1..6".to_string())
    });
}

#[test]
fn acceptance_08_pattern_avoidance() {
    criterion(8, "pattern-avoidance", Duration::from_secs(5), || {
        let patterns = ["4231", "35142", "42513", "351624"]
            .map(|digits| Permutation::from_digits(digits).expect("valid pattern"));
        for n in 1..=8 {
            let top = tau(n);
            for pattern in &patterns {
                if top.contains_pattern(pattern) {
                    return Err(format!("top element at n = {n} contains {pattern}"));
                }
            }
        }
        Ok("all four patterns absent from the top element through n = 8".to_string())
    });
}

#[test]
fn acceptance_09_fixed_point_diagram() {
    criterion(9, "fixed-point-diagram", Duration::from_secs(120), || {
        let mut checked_rows = 0u64;
        let mut unchecked_rows = 0u64;
        for n in 1..=5 {
            let chains = count_fixed_chains(n);
            let configurations = count_dc(n + 1);
            if chains != configurations {
                return Err(format!(
                    "n = {n}: {chains} chains but {configurations} configurations"
                ));
            }
            let mut images = BTreeSet::new();
            for chain in enumerate_fixed_chains(n) {
                if alpha_inverse(&beta(&chain)).is_err() {
                    return Err(format!(
                        "support image fails to reconstruct for {:?}",
                        chain.subsets()
                    ));
                }
                let image = feigin_map(&chain)
                    .map_err(|error| format!("map failed on {:?}: {error}", chain.subsets()))?;
                if !images.insert(image) {
                    return Err(format!("duplicate image at {:?}", chain.subsets()));
                }
                let report = check_feigin_cases(&chain).expect("map succeeded");
                if !report.all_checked_rows_hold() {
                    return Err(format!("row case contradiction at {:?}", chain.subsets()));
                }
                checked_rows += report.checked_count() as u64;
                unchecked_rows += report.unchecked_count() as u64;
            }
            let all: BTreeSet<_> = enumerate_dc(n + 1).collect();
            if images != all {
                return Err(format!("n = {n}: images do not cover the configurations"));
            }
        }
        Ok(format!(
            "bijective through rank 5; {checked_rows} rows matched their described shape, {unchecked_rows} rows had none"
        ))
    });
}

#[test]
fn acceptance_10_exactness_guard() {
    criterion(10, "exactness-guard", Duration::from_secs(1), || {
        let one = BigRational::from_integer(BigInt::from(1));
        for n in 0..=20 {
            for (label, polynomial) in [("h", h_polynomial(n)), ("e", e_polynomial(n))] {
                let value = polynomial.eval(&one);
                if !value.is_integer() {
                    return Err(format!(
                        "{label} value at 1 has denominator {} for n = {n}",
                        value.denom()
                    ));
                }
            }
            h_value(n);
            e_target(n);
        }
        Ok("both series are integral at 1 through index 20".to_string())
    });
}
