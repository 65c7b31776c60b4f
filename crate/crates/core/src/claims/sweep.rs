//! Range sweeps: every selected claim at every applicable point of a prime
//! range (and index range for the integer-indexed claim), with per-prime
//! tables built once and shared, optional fan-out across worker threads,
//! and output order independent of the execution schedule.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;
use std::thread;

use crate::comb::{SequenceTables, TableRequest};
use crate::primes::primes_in;

use super::{check_applicable, eval, find_claim, verify, Claim, ClaimError, Params, VerifyOptions, VerifyResult};

/// What to sweep.
#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub prime_lo: u64,
    pub prime_hi: u64,
    /// `m` values for the double-sum claim.
    pub m_values: Vec<i64>,
    /// Largest index for the integer-indexed claim.
    pub sun_n_max: u64,
    /// `(b, c)` grid for the integer-indexed claim.
    pub bc_grid: Vec<(i64, i64)>,
    pub threads: usize,
    pub options: VerifyOptions,
}

/// `-10..=10` without the excluded weights 0 and 1.
pub fn default_m_values() -> Vec<i64> {
    (-10..=10).filter(|&m| m != 0 && m != 1).collect()
}

/// The full `(b, c)` square `[-2, 2]^2`.
pub fn default_bc_grid() -> Vec<(i64, i64)> {
    let mut grid = Vec::new();
    for b in -2..=2 {
        for c in -2..=2 {
            grid.push((b, c));
        }
    }
    grid
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            prime_lo: 5,
            prime_hi: 3000,
            m_values: default_m_values(),
            sun_n_max: 40,
            bc_grid: default_bc_grid(),
            threads: 1,
            options: VerifyOptions::default(),
        }
    }
}

/// Results plus the number of `(claim, p, params)` combinations skipped as
/// inapplicable.
#[derive(Debug)]
pub struct SweepOutcome {
    pub results: Vec<VerifyResult>,
    pub inapplicable: u64,
}

enum Task {
    Prime(u64),
    SunIndex(u64),
}

/// Run the selected claims over the configured ranges.
///
/// Results are sorted by `(claim_id, p, params)` whatever the thread count,
/// so identical configurations produce identical output.
pub fn verify_range(ids: &[&str], cfg: &SweepConfig) -> Result<SweepOutcome, ClaimError> {
    let mut claims: Vec<&'static Claim> = Vec::new();
    for id in ids {
        claims.push(find_claim(id).ok_or_else(|| ClaimError::Unknown(id.to_string()))?);
    }
    let prime_claims: Vec<&'static Claim> =
        claims.iter().copied().filter(|c| !c.integer_indexed).collect();
    let sun_selected = claims.iter().any(|c| c.integer_indexed);

    let mut tasks: Vec<Task> = Vec::new();
    if !prime_claims.is_empty() {
        for p in primes_in(cfg.prime_lo.max(2), cfg.prime_hi) {
            tasks.push(Task::Prime(p));
        }
    }
    if sun_selected {
        for n in 1..=cfg.sun_n_max {
            tasks.push(Task::SunIndex(n));
        }
    }

    let worker = |task: &Task| -> (Vec<VerifyResult>, u64) {
        match task {
            Task::Prime(p) => run_prime(*p, &prime_claims, cfg),
            Task::SunIndex(n) => run_sun_index(*n, cfg),
        }
    };

    let outputs = run_tasks(&tasks, cfg.threads, worker);

    let mut results = Vec::new();
    let mut inapplicable = 0u64;
    for (batch, skipped) in outputs {
        results.extend(batch);
        inapplicable += skipped;
    }
    results.sort_by(|a, b| {
        (a.claim_id, a.p, &a.params).cmp(&(b.claim_id, b.p, &b.params))
    });
    Ok(SweepOutcome {
        results,
        inapplicable,
    })
}

/// All selected claims at one prime, sharing one set of tables.
fn run_prime(p: u64, claims: &[&'static Claim], cfg: &SweepConfig) -> (Vec<VerifyResult>, u64) {
    let mut runnable: Vec<(&'static Claim, Params)> = Vec::new();
    let mut inapplicable = 0u64;
    for &claim in claims {
        if claim.takes_m {
            for &m in &cfg.m_values {
                match check_applicable(claim, Some(p), &Params::M(m), &cfg.options) {
                    Ok(()) => runnable.push((claim, Params::M(m))),
                    Err(_) => inapplicable += 1,
                }
            }
        } else {
            match check_applicable(claim, Some(p), &Params::None, &cfg.options) {
                Ok(()) => runnable.push((claim, Params::None)),
                Err(_) => inapplicable += 1,
            }
        }
    }
    if runnable.is_empty() {
        return (Vec::new(), inapplicable);
    }
    let request = runnable
        .iter()
        .map(|(c, _)| eval::table_request(c))
        .fold(TableRequest::default(), |acc, r| acc.union(&r));
    let tables = SequenceTables::build(p, &request);
    let results = runnable
        .into_iter()
        .map(|(claim, params)| super::verify_with_tables(claim, p, &params, &tables, &cfg.options))
        .collect();
    (results, inapplicable)
}

fn run_sun_index(n: u64, cfg: &SweepConfig) -> (Vec<VerifyResult>, u64) {
    let mut results = Vec::new();
    for &(b, c) in &cfg.bc_grid {
        let params = Params::Index { n, b, c };
        match verify("sunN2", None, &params, &cfg.options) {
            Ok(r) => results.push(r),
            Err(_) => unreachable!("n >= 1 is always applicable"),
        }
    }
    (results, 0)
}

/// Map tasks to outputs, optionally across threads. Output order follows
/// task order regardless of scheduling.
fn run_tasks<T, O, F>(tasks: &[T], threads: usize, worker: F) -> Vec<O>
where
    T: Sync,
    O: Send,
    F: Fn(&T) -> O + Sync,
{
    let threads = threads.max(1).min(tasks.len().max(1));
    if threads <= 1 {
        return tasks.iter().map(&worker).collect();
    }
    let cursor = AtomicUsize::new(0);
    let (tx, rx) = mpsc::channel::<(usize, O)>();
    let mut slots: Vec<Option<O>> = (0..tasks.len()).map(|_| None).collect();
    thread::scope(|scope| {
        for _ in 0..threads {
            let tx = tx.clone();
            let cursor = &cursor;
            let worker = &worker;
            scope.spawn(move || loop {
                let i = cursor.fetch_add(1, Ordering::Relaxed);
                if i >= tasks.len() {
                    break;
                }
                let out = worker(&tasks[i]);
                if tx.send((i, out)).is_err() {
                    break;
                }
            });
        }
        drop(tx);
        for (i, out) in rx {
            slots[i] = Some(out);
        }
    });
    slots.into_iter().map(|s| s.expect("all tasks ran")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thm1_sweep_over_small_range() {
        let cfg = SweepConfig {
            prime_lo: 5,
            prime_hi: 97,
            ..SweepConfig::default()
        };
        let out = verify_range(&["thm1"], &cfg).unwrap();
        // 23 primes in [5, 97]
        assert_eq!(out.results.len(), 23);
        assert!(out.results.iter().all(|r| r.pass));
        assert_eq!(out.inapplicable, 0);
    }

    #[test]
    fn thm3_m_exclusions_at_5() {
        let cfg = SweepConfig {
            prime_lo: 5,
            prime_hi: 5,
            ..SweepConfig::default()
        };
        let out = verify_range(&["thm3"], &cfg).unwrap();
        let ms: Vec<i64> = out
            .results
            .iter()
            .map(|r| match r.params {
                Params::M(m) => m,
                _ => unreachable!(),
            })
            .collect();
        for excluded in [-10i64, -5, 0, 1, 5, 10] {
            assert!(!ms.contains(&excluded), "m = {excluded} should be excluded");
        }
        assert!(ms.contains(&6));
        let m6 = out
            .results
            .iter()
            .find(|r| r.params == Params::M(6))
            .unwrap();
        // (6|5) = 1, so the right side degenerates to p
        assert_eq!(m6.rhs, Some(5));
        assert!(m6.pass);
        // 19 candidate m values, 4 divisible by 5, 15 runnable
        assert_eq!(out.results.len(), 15);
        assert_eq!(out.inapplicable, 4);
    }

    #[test]
    fn results_are_schedule_independent() {
        let mut cfg = SweepConfig {
            prime_lo: 5,
            prime_hi: 120,
            sun_n_max: 8,
            ..SweepConfig::default()
        };
        let ids = ["thm1", "thm3", "halfH", "sunN2"];
        let serial = verify_range(&ids, &cfg).unwrap();
        cfg.threads = 8;
        let parallel = verify_range(&ids, &cfg).unwrap();
        type Row = (String, Option<u64>, Params, Option<u128>, bool);
        let strip = |rs: &[VerifyResult]| -> Vec<Row> {
            rs.iter()
                .map(|r| {
                    (
                        r.claim_id.to_string(),
                        r.p,
                        r.params.clone(),
                        r.lhs,
                        r.pass,
                    )
                })
                .collect()
        };
        assert_eq!(strip(&serial.results), strip(&parallel.results));
        assert_eq!(serial.inapplicable, parallel.inapplicable);
    }
}
