//! The four commands behind the CLI: congruence sweeps, identity grids,
//! oracle cross-checks, and the combination of all three.

use std::collections::BTreeMap;
use std::time::Instant;

use anyhow::{bail, Result};

use tricon::claims::{
    self, check_applicable, list_claims, Params, SweepConfig, VerifyOptions,
};
use tricon::exact;
use tricon::primes::primes_in;

use crate::report::{congruence_record, identity_record, oracle_record, ParamValue, Record};

/// Tally of outcomes for one record block, reported on stderr.
#[derive(Clone, Copy, Debug, Default)]
pub struct Summary {
    pub pass: u64,
    pub fail: u64,
    pub inapplicable: u64,
}

impl Summary {
    fn absorb(&mut self, records: &[Record]) {
        for r in records {
            if r.pass {
                self.pass += 1;
            } else {
                self.fail += 1;
            }
        }
    }
}

/// Grid bounds for the identity checks. The defaults keep the full run in
/// the seconds range; they can be raised freely, correctness does not
/// depend on them.
#[derive(Clone, Debug)]
pub struct IdentityBounds {
    pub lemmas: u64,
    pub integral: u64,
    pub certificate: u64,
    pub forms: u64,
    pub bc_grid: Vec<(i64, i64)>,
}

impl Default for IdentityBounds {
    fn default() -> Self {
        Self {
            lemmas: 60,
            integral: 40,
            certificate: 30,
            forms: 120,
            bc_grid: claims::default_bc_grid(),
        }
    }
}

/// `t` values for the integrated-binomial identity grid.
pub fn integral_t_values() -> Vec<exact::BigRational> {
    vec![
        exact::rat(1, 1),
        exact::rat(-1, 1),
        exact::rat(1, 2),
        exact::rat(-1, 2),
        exact::rat(2, 3),
        exact::rat(-4, 3),
        exact::rat(5, 1),
        exact::rat(0, 1),
    ]
}

/// Default `m` values for the oracle cross-check of the double-sum claim.
pub const ORACLE_M_VALUES: &[i64] = &[-3, 2, 5, 6, 7];

pub fn cmd_verify(
    ids: &[&str],
    cfg: &SweepConfig,
    timings: bool,
) -> Result<(Vec<Record>, Summary)> {
    let outcome = claims::verify_range(ids, cfg)?;
    let records: Vec<Record> = outcome
        .results
        .iter()
        .map(|r| congruence_record(r, timings))
        .collect();
    let mut summary = Summary {
        inapplicable: outcome.inapplicable,
        ..Summary::default()
    };
    summary.absorb(&records);
    Ok((records, summary))
}

fn int_params(pairs: &[(&str, i64)]) -> BTreeMap<String, ParamValue> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), ParamValue::Int(*v)))
        .collect()
}

pub fn cmd_identities(bounds: &IdentityBounds, timings: bool) -> (Vec<Record>, Summary) {
    let mut records = Vec::new();
    let mut push = |id: &str, params: BTreeMap<String, ParamValue>, run: &dyn Fn() -> bool| {
        let start = Instant::now();
        let pass = run();
        let micros = if timings {
            start.elapsed().as_micros() as u64
        } else {
            0
        };
        records.push(identity_record(id, params, pass, micros));
    };

    for n in 0..=bounds.lemmas {
        for j in 0..=n {
            push(
                "central_partial_sum",
                int_params(&[("j", j as i64), ("n", n as i64)]),
                &|| exact::check_central_partial_sum(n, j),
            );
        }
    }
    for n in 0..=bounds.lemmas {
        for j in 0..=n {
            push(
                "harmonic_binomial_sum",
                int_params(&[("j", j as i64), ("n", n as i64)]),
                &|| exact::check_harmonic_binomial_sum(n, j),
            );
        }
    }
    for n in 0..=bounds.lemmas {
        push(
            "binomial_transform_pair",
            int_params(&[("n", n as i64)]),
            &|| exact::check_binomial_transform_pair(n),
        );
    }
    for m_upper in 1..=bounds.lemmas {
        for j in 1..=m_upper {
            push(
                "weighted_hockey_stick",
                int_params(&[("j", j as i64), ("m_upper", m_upper as i64)]),
                &|| exact::check_weighted_hockey_stick(m_upper, j),
            );
        }
    }
    for n in 0..=bounds.integral {
        for t in integral_t_values() {
            let mut params = int_params(&[("n", n as i64)]);
            params.insert("t".into(), ParamValue::Ratio(t.to_string()));
            push("binomial_integral", params, &|| {
                exact::check_binomial_integral(n, &t)
            });
        }
    }
    let sample = exact::certificate_sample_points();
    for n in 0..=bounds.certificate {
        for k in 0..=n + 1 {
            for m in &sample {
                let mut params = int_params(&[("k", k as i64), ("n", n as i64)]);
                params.insert("m".into(), ParamValue::Ratio(m.to_string()));
                push("telescoping_certificate", params, &|| {
                    exact::check_telescoping_certificate(n, k, m)
                });
            }
        }
    }
    for n in 0..=bounds.forms {
        for &(b, c) in &bounds.bc_grid {
            push(
                "trinomial_forms",
                int_params(&[("b", b), ("c", c), ("n", n as i64)]),
                &|| exact::check_trinomial_forms(n, b, c),
            );
        }
    }

    let mut summary = Summary::default();
    summary.absorb(&records);
    (records, summary)
}

/// Cross-check: pipeline left side against the exact-rational oracle for
/// every supported claim at every applicable prime up to `max_p`.
pub fn cmd_oracle(
    ids: &[&str],
    max_p: u64,
    m_values: &[i64],
    timings: bool,
) -> Result<(Vec<Record>, Summary)> {
    let opts = VerifyOptions::default();
    let mut records = Vec::new();
    let mut inapplicable = 0u64;
    for id in ids {
        let claim = match claims::find_claim(id) {
            Some(c) => c,
            None => bail!("unknown claim id `{id}`"),
        };
        if !exact::oracle_supported(id) || claim.integer_indexed {
            continue;
        }
        let param_sets: Vec<Params> = if claim.takes_m {
            m_values.iter().map(|&m| Params::M(m)).collect()
        } else {
            vec![Params::None]
        };
        for p in primes_in(2, max_p) {
            for params in &param_sets {
                if check_applicable(claim, Some(p), params, &opts).is_err() {
                    inapplicable += 1;
                    continue;
                }
                let result = claims::verify(id, Some(p), params, &opts)?;
                let m = match params {
                    Params::M(m) => Some(*m),
                    _ => None,
                };
                let oracle_value = exact::oracle_claim(id, p, m)?.value();
                records.push(oracle_record(&result, Some(oracle_value), timings));
            }
        }
    }
    records.sort_by(|a, b| (&a.id, a.p, &a.params.iter().collect::<Vec<_>>())
        .cmp(&(&b.id, b.p, &b.params.iter().collect::<Vec<_>>())));
    let mut summary = Summary {
        inapplicable,
        ..Summary::default()
    };
    summary.absorb(&records);
    Ok((records, summary))
}

/// All claim ids, in catalog order.
pub fn all_claim_ids() -> Vec<&'static str> {
    list_claims().iter().map(|c| c.id).collect()
}
