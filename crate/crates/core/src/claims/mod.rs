//! The claim catalog: one registry entry per congruence, plus the `verify`
//! entry points that evaluate a claim at a prime (or, for the one
//! integer-indexed claim, at an index `n`) through the modular pipeline.

mod eval;
mod sweep;

pub use sweep::{default_bc_grid, default_m_values, verify_range, SweepConfig, SweepOutcome};

use std::fmt;
use std::time::Instant;

use thiserror::Error;

use crate::comb::SequenceTables;
use crate::modring::is_prime;

/// Parameters a claim is evaluated at, beyond the prime itself.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Params {
    None,
    /// The integer weight `m` of the double-sum claim.
    M(i64),
    /// Index and trinomial parameters of the integer-indexed claim.
    Index { n: u64, b: i64, c: i64 },
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Params::None => write!(f, "-"),
            Params::M(m) => write!(f, "m={m}"),
            Params::Index { n, b, c } => write!(f, "n={n},b={b},c={c}"),
        }
    }
}

/// A registry entry binding a congruence to its evaluator.
#[derive(Clone, Copy, Debug)]
pub struct Claim {
    pub id: &'static str,
    /// The congruence, in ASCII math. `C(n,k)` is the binomial coefficient,
    /// `T_k` the central trinomial coefficient, `H_k` the harmonic number,
    /// `q_p(2)` the Fermat quotient and `(a|p)` the Legendre symbol.
    pub statement: &'static str,
    /// Short label for where the congruence comes from.
    pub tag: &'static str,
    /// Exponent of the ring the recorded left/right sides live in.
    pub modulus_exponent: u32,
    /// Extra precision consumed internally by exact divisions by `p`.
    pub division_budget: u32,
    /// Smallest prime the claim applies to by default.
    pub min_p: u64,
    pub takes_m: bool,
    /// Indexed by an integer `n >= 1` instead of a prime.
    pub integer_indexed: bool,
}

impl Claim {
    /// Ring exponent used internally while evaluating.
    pub fn internal_exponent(&self) -> u32 {
        self.modulus_exponent + self.division_budget
    }
}

/// The catalog, ordered lexicographically by id.
pub const CATALOG: &[Claim] = &[
    Claim {
        id: "binom2p2",
        statement: "C(2p-2,p-1) == -p - 2p^2 (mod p^3)",
        tag: "central binomial at 2p-2",
        modulus_exponent: 3,
        division_budget: 0,
        min_p: 5,
        takes_m: false,
        integer_indexed: false,
    },
    Claim {
        id: "binomp1j",
        statement: "C(p-1,j) == (-1)^j (1 - p H_j) (mod p^2) for 0 <= j <= p-1",
        tag: "top Pascal row vs harmonic numbers",
        modulus_exponent: 2,
        division_budget: 0,
        min_p: 3,
        takes_m: false,
        integer_indexed: false,
    },
    Claim {
        id: "eq13a",
        statement: "sum_{k<p} C(2k,k) T_k/12^k == (6|p) sum_{k<p} C(4k,2k) C(2k,k)/64^k (mod p)",
        tag: "mod-p sum comparison",
        modulus_exponent: 1,
        division_budget: 0,
        min_p: 5,
        takes_m: false,
        integer_indexed: false,
    },
    Claim {
        id: "eq13b",
        statement: "sum_{k<p} C(4k,2k) C(2k,k)/64^k == (6|p)(p|3) (mod p)",
        tag: "mod-p sum evaluation",
        modulus_exponent: 1,
        division_budget: 0,
        min_p: 5,
        takes_m: false,
        integer_indexed: false,
    },
    Claim {
        id: "euler",
        statement: "a^{(p-1)/2} == (a|p) (mod p) over a fixed sample of a",
        tag: "Euler criterion",
        modulus_exponent: 1,
        division_budget: 0,
        min_p: 3,
        takes_m: false,
        integer_indexed: false,
    },
    Claim {
        id: "halfH",
        statement: "H_{(p-1)/2} == -2 q_p(2) (mod p)",
        tag: "half-index harmonic number",
        modulus_exponent: 1,
        division_budget: 1,
        min_p: 5,
        takes_m: false,
        integer_indexed: false,
    },
    Claim {
        id: "lem2.2",
        statement: "p sum_{k<=(p-3)/2} C(2k,k)/((2k+1) 3^k) == B_p (mod p^2), B_p == 0 (mod p); B_p = (-1)^{(p-1)/2} (1/(4 3^{(p-1)/2}) + 3^{(p+1)/2}/4 - 4^{p-1}/3^{(p-1)/2})",
        tag: "odd-denominator central-binomial sum",
        modulus_exponent: 2,
        division_budget: 1,
        min_p: 5,
        takes_m: false,
        integer_indexed: false,
    },
    Claim {
        id: "lem3.2",
        statement: "sum_{1<=k<=p-1} C(2k,k)/(3^k (k+1)) == 3^{p-1} - 1 + ((p|3)-1)/2 (mod p^2)",
        tag: "Catalan-weighted sum",
        modulus_exponent: 2,
        division_budget: 0,
        min_p: 5,
        takes_m: false,
        integer_indexed: false,
    },
    Claim {
        id: "lem3.4",
        statement: "sum_{1<=k<=(p-1)/2} (-3)^k/k == -2 q_p(2) (mod p)",
        tag: "geometric-over-index sum",
        modulus_exponent: 1,
        division_budget: 1,
        min_p: 5,
        takes_m: false,
        integer_indexed: false,
    },
    Claim {
        id: "morley",
        statement: "C(p-1,(p-1)/2) == (-1)^{(p-1)/2} 4^{p-1} (mod p^3)",
        tag: "Morley congruence",
        modulus_exponent: 3,
        division_budget: 0,
        min_p: 5,
        takes_m: false,
        integer_indexed: false,
    },
    Claim {
        id: "pansun",
        statement: "sum_{1<=k<=p-1} C(2k,k)/k == sum_{1<=k<=(p-1)/2} C(2k,k)/k == 0 (mod p)",
        tag: "central binomial over index",
        modulus_exponent: 1,
        division_budget: 0,
        min_p: 5,
        takes_m: false,
        integer_indexed: false,
    },
    Claim {
        id: "sigma1",
        statement: "sum_{j<=p-2} C(2j,j)/(3^j (j+1)) == 3^{p-1} + ((p|3)-1)/2 + (2p+1)/3^{p-1} (mod p^2)",
        tag: "full-range Catalan-weighted sum",
        modulus_exponent: 2,
        division_budget: 0,
        min_p: 5,
        takes_m: false,
        integer_indexed: false,
    },
    Claim {
        id: "sigma2",
        statement: "sum_{k<=(p-1)/2} C(2k,k) H_k/((k+1) 3^k) == -(-3 + (-1/3)^{(p-1)/2}) q_p(2) + q_p(2) (-1/3)^{(p-1)/2} + (3/2) sum_{1<=k<=(p-1)/2} 1/(k (-3)^k) (mod p)",
        tag: "harmonic-weighted half sum",
        modulus_exponent: 1,
        division_budget: 1,
        min_p: 5,
        takes_m: false,
        integer_indexed: false,
    },
    Claim {
        id: "sigma3",
        statement: "sum_{k<=(p-1)/2} C(2k,k)/((k+1)^2 3^k) == 3 - 3 q_p(2) - (3/2) sum_{1<=k<=(p-1)/2} 1/(k (-3)^k) + (-1/3)^{(p-1)/2} (mod p)",
        tag: "squared-denominator half sum",
        modulus_exponent: 1,
        division_budget: 1,
        min_p: 5,
        takes_m: false,
        integer_indexed: false,
    },
    Claim {
        id: "sunN2",
        statement: "sum_{k<n} (2k+1) T_k(b,c)^2 (b^2-4c)^{n-1-k} == 0 (mod n^2) for all n >= 1",
        tag: "trinomial square divisibility",
        modulus_exponent: 2,
        division_budget: 0,
        min_p: 2,
        takes_m: false,
        integer_indexed: true,
    },
    Claim {
        id: "sunTsq",
        statement: "sum_{k<p} T_k^2 == (-1|p) (mod p)",
        tag: "trinomial square sum",
        modulus_exponent: 1,
        division_budget: 0,
        min_p: 3,
        takes_m: false,
        integer_indexed: false,
    },
    Claim {
        id: "thm1",
        statement: "sum_{k<p} C(2k,k) T_k/12^k == (p|3) (3^{p-1}+3)/4 (mod p^2)",
        tag: "trinomial sum with binomial weight",
        modulus_exponent: 2,
        division_budget: 0,
        min_p: 5,
        takes_m: false,
        integer_indexed: false,
    },
    Claim {
        id: "thm2",
        statement: "sum_{k<p} T_k H_k/3^k == (3+(p|3))/2 - p (1+(p|3)) (mod p^2)",
        tag: "trinomial-harmonic sum",
        modulus_exponent: 2,
        division_budget: 0,
        min_p: 5,
        takes_m: false,
        integer_indexed: false,
    },
    Claim {
        id: "thm3",
        statement: "sum_{n<p} m^{-n} sum_{k<=n} C(n,k) C(2k,k) ((m-1)/4)^k == p + 2p (1-(m|p))/(m-1) (mod p^2)",
        tag: "telescoped double sum",
        modulus_exponent: 2,
        division_budget: 0,
        min_p: 5,
        takes_m: true,
        integer_indexed: false,
    },
    Claim {
        id: "wolst",
        statement: "C(2p-1,p-1) == 1 (mod p^3)",
        tag: "Wolstenholme congruence",
        modulus_exponent: 3,
        division_budget: 0,
        min_p: 5,
        takes_m: false,
        integer_indexed: false,
    },
    Claim {
        id: "wolstH",
        statement: "H_{p-1} == 0 (mod p^2)",
        tag: "Wolstenholme harmonic congruence",
        modulus_exponent: 2,
        division_budget: 0,
        min_p: 5,
        takes_m: false,
        integer_indexed: false,
    },
];

/// The catalog in deterministic (lexicographic-by-id) order.
pub fn list_claims() -> &'static [Claim] {
    CATALOG
}

pub fn find_claim(id: &str) -> Option<&'static Claim> {
    CATALOG.iter().find(|c| c.id == id)
}

#[derive(Debug, Error)]
pub enum ClaimError {
    #[error("unknown claim id `{0}`")]
    Unknown(String),
    #[error("claim `{id}` is not applicable: {reason}")]
    Inapplicable { id: &'static str, reason: String },
}

/// Knobs for a verification run.
#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Evaluate claims below their default prime bound (recording mode).
    pub allow_small_primes: bool,
    /// Use the direct O(p^2) double-sum evaluation for the `thm3` left side
    /// instead of the O(p) swapped-order route.
    pub thm3_direct: bool,
    /// Added to every right-hand side before comparison. Zero in normal
    /// operation; the mutation tests set it to 1 to prove the harness can
    /// fail.
    pub rhs_offset: u64,
}

/// The verdict for one `(claim, p, params)` evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyResult {
    pub claim_id: &'static str,
    pub p: Option<u64>,
    pub params: Params,
    /// Base and exponent of the comparison modulus (`p^E`, or `n^2` for the
    /// integer-indexed claim).
    pub modulus_base: u64,
    pub modulus_exponent: u32,
    /// Left/right sides as canonical residues; absent when evaluation
    /// aborted (see `note`).
    pub lhs: Option<u128>,
    pub rhs: Option<u128>,
    pub pass: bool,
    pub elapsed_micros: u64,
    /// Diagnostic for evaluations that could not produce both sides, e.g.
    /// an exact-division failure on a small-prime recording run.
    pub note: Option<String>,
}

/// Check that `(p, params)` is in the claim's domain. `opts` may extend the
/// domain down to `p = 2` for recording purposes.
pub fn check_applicable(
    claim: &Claim,
    p: Option<u64>,
    params: &Params,
    opts: &VerifyOptions,
) -> Result<(), ClaimError> {
    let fail = |reason: String| {
        Err(ClaimError::Inapplicable {
            id: claim.id,
            reason,
        })
    };
    if claim.integer_indexed {
        match (p, params) {
            (None, Params::Index { n, .. }) => {
                if *n == 0 {
                    return fail("index n must be at least 1".into());
                }
                if *n > u32::MAX as u64 {
                    return fail(format!("index n = {n} too large for n^2 arithmetic"));
                }
                Ok(())
            }
            _ => fail("expects no prime and parameters n, b, c".into()),
        }
    } else {
        let p = match p {
            Some(p) => p,
            None => return fail("expects a prime".into()),
        };
        if !is_prime(p) {
            return fail(format!("p = {p} is not prime"));
        }
        let min_p = if opts.allow_small_primes { 2 } else { claim.min_p };
        if p < min_p {
            return fail(format!("p = {p} is below the claim's bound p >= {}", claim.min_p));
        }
        match (claim.takes_m, params) {
            (false, Params::None) => Ok(()),
            (true, Params::M(m)) => {
                if *m == 1 {
                    return fail("m = 1 is excluded".into());
                }
                if (*m as i128).rem_euclid(p as i128) == 0 {
                    return fail(format!("p = {p} divides m = {m}"));
                }
                Ok(())
            }
            (true, _) => fail("expects the parameter m".into()),
            (false, _) => fail("expects no parameters".into()),
        }
    }
}

/// Verify one claim at `(p, params)`, building the tables it needs.
///
/// Inapplicable input is an error; an applicable evaluation that cannot
/// complete (for example an exact division failing on a recording run at a
/// small prime) is reported as a failing [`VerifyResult`] with a `note`,
/// never a panic.
pub fn verify(
    id: &str,
    p: Option<u64>,
    params: &Params,
    opts: &VerifyOptions,
) -> Result<VerifyResult, ClaimError> {
    let claim = find_claim(id).ok_or_else(|| ClaimError::Unknown(id.to_string()))?;
    check_applicable(claim, p, params, opts)?;
    if claim.integer_indexed {
        let start = Instant::now();
        let outcome = eval::evaluate_integer_indexed(claim, params, opts);
        Ok(finish_result(claim, p, params, outcome, start))
    } else {
        let tables = SequenceTables::build(p.unwrap(), &eval::table_request(claim));
        Ok(verify_with_tables(claim, p.unwrap(), params, &tables, opts))
    }
}

/// Verify against tables already built for this prime (the sweep path).
/// Applicability must have been checked by the caller.
pub(crate) fn verify_with_tables(
    claim: &'static Claim,
    p: u64,
    params: &Params,
    tables: &SequenceTables,
    opts: &VerifyOptions,
) -> VerifyResult {
    let start = Instant::now();
    let outcome = eval::evaluate(claim, p, params, tables, opts);
    finish_result(claim, Some(p), params, outcome, start)
}

fn finish_result(
    claim: &'static Claim,
    p: Option<u64>,
    params: &Params,
    outcome: Result<eval::Outcome, eval::EvalError>,
    start: Instant,
) -> VerifyResult {
    let elapsed_micros = start.elapsed().as_micros() as u64;
    match outcome {
        Ok(o) => VerifyResult {
            claim_id: claim.id,
            p,
            params: params.clone(),
            modulus_base: o.base,
            modulus_exponent: o.exponent,
            lhs: Some(o.lhs),
            rhs: Some(o.rhs),
            pass: o.pass,
            elapsed_micros,
            note: None,
        },
        Err(e) => VerifyResult {
            claim_id: claim.id,
            p,
            params: params.clone(),
            modulus_base: p.unwrap_or(0),
            modulus_exponent: claim.modulus_exponent,
            lhs: None,
            rhs: None,
            pass: false,
            elapsed_micros,
            note: Some(e.to_string()),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_sorted_and_complete() {
        assert_eq!(CATALOG.len(), 21);
        for w in CATALOG.windows(2) {
            assert!(w[0].id < w[1].id, "{} !< {}", w[0].id, w[1].id);
        }
        for id in ["thm1", "thm2", "thm3"] {
            assert!(find_claim(id).is_some());
        }
        assert_eq!(find_claim("thm1").unwrap().modulus_exponent, 2);
    }

    #[test]
    fn verify_thm1_at_5() {
        let r = verify("thm1", Some(5), &Params::None, &VerifyOptions::default()).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs, Some(4));
        assert_eq!(r.rhs, Some(4));
        assert_eq!((r.modulus_base, r.modulus_exponent), (5, 2));
    }

    #[test]
    fn verify_thm3_at_5_m2() {
        let r = verify("thm3", Some(5), &Params::M(2), &VerifyOptions::default()).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs, Some(0));
        assert_eq!(r.rhs, Some(0));
    }

    #[test]
    fn verify_halfh_at_7() {
        let r = verify("halfH", Some(7), &Params::None, &VerifyOptions::default()).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs, Some(3));
        assert_eq!(r.rhs, Some(3));
        assert_eq!((r.modulus_base, r.modulus_exponent), (7, 1));
    }

    #[test]
    fn wolst_at_3_needs_override_and_fails() {
        let err = verify("wolst", Some(3), &Params::None, &VerifyOptions::default());
        assert!(matches!(err, Err(ClaimError::Inapplicable { .. })));

        let opts = VerifyOptions {
            allow_small_primes: true,
            ..VerifyOptions::default()
        };
        let r = verify("wolst", Some(3), &Params::None, &opts).unwrap();
        assert!(!r.pass);
        assert_eq!(r.lhs, Some(10));
        assert_eq!(r.rhs, Some(1));
        assert_eq!((r.modulus_base, r.modulus_exponent), (3, 3));
    }

    #[test]
    fn applicability_errors_name_the_condition() {
        let opts = VerifyOptions::default();
        let e = verify("thm3", Some(5), &Params::M(10), &opts).unwrap_err();
        assert!(e.to_string().contains("divides"));
        let e = verify("thm3", Some(5), &Params::M(1), &opts).unwrap_err();
        assert!(e.to_string().contains("m = 1"));
        let e = verify("thm1", Some(6), &Params::None, &opts).unwrap_err();
        assert!(e.to_string().contains("not prime"));
        let e = verify("missing", Some(5), &Params::None, &opts).unwrap_err();
        assert!(matches!(e, ClaimError::Unknown(_)));
    }

    #[test]
    fn sun_claim_verifies_small_cases() {
        let opts = VerifyOptions::default();
        for n in 1..=12u64 {
            let r = verify(
                "sunN2",
                None,
                &Params::Index { n, b: 1, c: 1 },
                &opts,
            )
            .unwrap();
            assert!(r.pass, "n = {n}");
            assert_eq!(r.modulus_base, n);
        }
    }

    #[test]
    fn mutation_offset_breaks_claims() {
        let opts = VerifyOptions {
            rhs_offset: 1,
            ..VerifyOptions::default()
        };
        for (id, p, params) in [
            ("thm1", 7, Params::None),
            ("wolst", 11, Params::None),
            ("euler", 13, Params::None),
            ("thm3", 7, Params::M(2)),
        ] {
            let r = verify(id, Some(p), &params, &opts).unwrap();
            assert!(!r.pass, "{id} should fail under rhs offset");
        }
        let r = verify("sunN2", None, &Params::Index { n: 5, b: 1, c: 1 }, &opts).unwrap();
        assert!(!r.pass);
    }

    #[test]
    fn thm2_small_prime_recording() {
        let opts = VerifyOptions {
            allow_small_primes: true,
            ..VerifyOptions::default()
        };
        let r = verify("thm2", Some(2), &Params::None, &opts).unwrap();
        assert_eq!(r.lhs, Some(3));
        assert_eq!(r.rhs, Some(1));
        assert!(!r.pass);
        assert_eq!((r.modulus_base, r.modulus_exponent), (2, 2));

        // At p = 3 the 3^{-k} weight does not exist; recorded, not crashed.
        let r = verify("thm2", Some(3), &Params::None, &opts).unwrap();
        assert!(!r.pass);
        assert!(r.note.is_some());
        assert_eq!(r.lhs, None);
    }
}
