//! The sequences behind the congruence catalog: central trinomial
//! coefficients (plain and generalized), central binomial coefficients with
//! their p-adic valuations, harmonic numbers and Fermat quotients.
//!
//! Every sequence has two independent routes. The exact route works in
//! `BigInt` straight from the defining sums; the modular route builds
//! O(p)-sized tables per prime with recurrences. Tests cross-check the two,
//! and prime sweeps run on the tables alone.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::modring::{PrimePowerRing, Residue, RingError, ValuatedResidue};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("table of length {n} needs n <= p-1 = {max}")]
    LengthBeyondPrime { n: u64, max: u64 },
    #[error("factorial table holds indices up to {max}, requested {n}")]
    TableTooSmall { n: u64, max: u64 },
    #[error("fermat quotient needs a ring with exponent >= 2")]
    NeedsHigherPrecision,
    #[error("table `{0}` was not requested when the tables were built")]
    NotRequested(&'static str),
}

/// Exact binomial coefficient, with `binom(n, k) = 0` for `k > n`.
///
/// The `k > n` convention is load-bearing: the telescoping certificate is
/// evaluated at `k = n + 1` and must vanish there, not branch.
pub fn binomial_exact(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// The central trinomial coefficient `T_n`, the coefficient of `x^n` in
/// `(1 + x + x^2)^n`, computed as `sum_k binom(n, 2k) binom(2k, k)`.
pub fn trinomial_exact(n: u64) -> BigInt {
    let mut acc = BigInt::zero();
    for k in 0..=n / 2 {
        acc += binomial_exact(n, 2 * k) * binomial_exact(2 * k, k);
    }
    acc
}

/// Generalized central trinomial coefficient `T_n(b, c)`, the coefficient of
/// `x^n` in `(x^2 + bx + c)^n`; `T_n(1, 1) = T_n`.
pub fn trinomial_general_exact(n: u64, b: i64, c: i64) -> BigInt {
    let b = BigInt::from(b);
    let c = BigInt::from(c);
    let mut acc = BigInt::zero();
    for k in 0..=n / 2 {
        acc += binomial_exact(n, 2 * k)
            * binomial_exact(2 * k, k)
            * b.pow((n - 2 * k) as u32)
            * c.pow(k as u32);
    }
    acc
}

/// Inverses of `1..=n_max` modulo `p^E` by one batched inversion.
/// Entry 0 is a zero placeholder.
pub fn unit_inverse_table(
    ring: &PrimePowerRing,
    n_max: u64,
) -> Result<Vec<Residue>, CombError> {
    if n_max > ring.p() - 1 {
        return Err(CombError::LengthBeyondPrime {
            n: n_max,
            max: ring.p() - 1,
        });
    }
    let n = n_max as usize;
    let mut prefix = Vec::with_capacity(n + 1);
    prefix.push(ring.one());
    for i in 1..=n {
        let last = prefix[i - 1];
        prefix.push(last * ring.residue(i as i128));
    }
    let mut invs = vec![ring.zero(); n + 1];
    let mut running = prefix[n].inv()?;
    for i in (1..=n).rev() {
        invs[i] = running * prefix[i - 1];
        running = running * ring.residue(i as i128);
    }
    Ok(invs)
}

/// Table of `T_0 .. T_{n_max}` modulo `p^E` via the three-term recurrence
/// `n T_n = (2n-1) T_{n-1} + 3(n-1) T_{n-2}`, valid while `n < p`.
pub fn trinomial_mod_table(
    ring: &PrimePowerRing,
    n_max: u64,
) -> Result<Vec<Residue>, CombError> {
    if n_max > ring.p() - 1 {
        return Err(CombError::LengthBeyondPrime {
            n: n_max,
            max: ring.p() - 1,
        });
    }
    let invs = unit_inverse_table(ring, n_max)?;
    let mut t = Vec::with_capacity(n_max as usize + 1);
    t.push(ring.one());
    if n_max >= 1 {
        t.push(ring.one());
    }
    for n in 2..=n_max as usize {
        let a = ring.residue(2 * n as i128 - 1) * t[n - 1];
        let b = ring.residue(3 * (n as i128 - 1)) * t[n - 2];
        t.push(invs[n] * (a + b));
    }
    Ok(t)
}

/// Prefix products of the integers coprime to `p`, supporting factorial and
/// binomial decompositions up to a fixed bound.
pub struct FactorialTable {
    ring: PrimePowerRing,
    unit_prefix: Vec<Residue>,
}

impl FactorialTable {
    pub fn new(ring: PrimePowerRing, max_n: u64) -> Self {
        let p = ring.p();
        let mut unit_prefix = Vec::with_capacity(max_n as usize + 1);
        unit_prefix.push(ring.one());
        for i in 1..=max_n {
            let last = *unit_prefix.last().unwrap();
            if i % p == 0 {
                unit_prefix.push(last);
            } else {
                unit_prefix.push(last * ring.residue(i as i128));
            }
        }
        Self { ring, unit_prefix }
    }

    pub fn ring(&self) -> PrimePowerRing {
        self.ring
    }

    pub fn max_n(&self) -> u64 {
        self.unit_prefix.len() as u64 - 1
    }

    /// `n! = p^v * u` with the valuation from Legendre's formula
    /// `v = sum_i floor(n / p^i)` and the unit from the identity
    /// `u(n!) = W(n) * u(floor(n/p)!)`, `W(n)` the coprime prefix product.
    pub fn factorial(&self, n: u64) -> Result<ValuatedResidue, CombError> {
        if n > self.max_n() {
            return Err(CombError::TableTooSmall {
                n,
                max: self.max_n(),
            });
        }
        let p = self.ring.p();
        let mut v = 0u64;
        let mut m = n;
        while m > 0 {
            m /= p;
            v += m;
        }
        let mut unit = self.ring.one();
        let mut m = n;
        while m > 0 {
            unit = unit * self.unit_prefix[m as usize];
            m /= p;
        }
        Ok(ValuatedResidue::from_unit(unit, v as u32))
    }

    /// `binom(n, k)` from three factorial decompositions; exact zero for
    /// `k > n`.
    pub fn binomial(&self, n: u64, k: u64) -> Result<ValuatedResidue, CombError> {
        if k > n {
            return Ok(ValuatedResidue::zero(&self.ring));
        }
        let fn_ = self.factorial(n)?;
        let fk = self.factorial(k)?;
        let fnk = self.factorial(n - k)?;
        let v = fn_.valuation() - fk.valuation() - fnk.valuation();
        let unit = fn_.unit() * (fk.unit() * fnk.unit()).inv()?;
        Ok(ValuatedResidue::from_unit(unit, v))
    }
}

/// Standalone decomposition `n! = p^v * u (mod p^E)`.
pub fn factorial_decompose(n: u64, ring: &PrimePowerRing) -> ValuatedResidue {
    FactorialTable::new(*ring, n)
        .factorial(n)
        .expect("table covers n")
}

/// Standalone `binom(n, k)` as a valuated residue.
pub fn binomial_valuated(n: u64, k: u64, ring: &PrimePowerRing) -> ValuatedResidue {
    if k > n {
        return ValuatedResidue::zero(ring);
    }
    FactorialTable::new(*ring, n)
        .binomial(n, k)
        .expect("table covers n")
}

/// Number of carries when adding `k` and `n - k` in base `p`. By Kummer's
/// theorem this equals the p-adic valuation of `binom(n, k)`; kept as an
/// independent cross-check of [`binomial_valuated`].
pub fn base_p_carries(n: u64, k: u64, p: u64) -> u32 {
    assert!(k <= n);
    let mut a = k;
    let mut b = n - k;
    let mut carry = 0u64;
    let mut carries = 0u32;
    while a > 0 || b > 0 || carry > 0 {
        let s = a % p + b % p + carry;
        carry = s / p;
        if carry > 0 {
            carries += 1;
        }
        a /= p;
        b /= p;
    }
    carries
}

/// Table of central binomial coefficients `binom(2k, k)` for `k <= n_max`
/// via `C_{k+1} = C_k * 2(2k+1) / (k+1)`.
///
/// For `k < p` the valuation is 1 exactly on `k in [(p+1)/2, p-1]`, which is
/// what makes the catalog's sums collapse modulo `p^2`.
pub fn central_binomial_table(
    ring: &PrimePowerRing,
    n_max: u64,
) -> Result<Vec<ValuatedResidue>, CombError> {
    if n_max > ring.p() - 1 {
        return Err(CombError::LengthBeyondPrime {
            n: n_max,
            max: ring.p() - 1,
        });
    }
    let mut c = Vec::with_capacity(n_max as usize + 1);
    c.push(ValuatedResidue::one(ring));
    for k in 0..n_max {
        let next = c[k as usize].scale(2 * (2 * k as i128 + 1), k as i128 + 1)?;
        c.push(next);
    }
    Ok(c)
}

/// Harmonic numbers `H_0 .. H_{n_max}` modulo `p^E`, `n_max <= p - 1`.
pub fn harmonic_table(ring: &PrimePowerRing, n_max: u64) -> Result<Vec<Residue>, CombError> {
    let invs = unit_inverse_table(ring, n_max)?;
    let mut h = Vec::with_capacity(n_max as usize + 1);
    h.push(ring.zero());
    for k in 1..=n_max as usize {
        let last = h[k - 1];
        h.push(last + invs[k]);
    }
    Ok(h)
}

/// Fermat quotient `q_p(2) = (2^(p-1) - 1) / p` as a residue modulo
/// `p^(E-1)`, where `E >= 2` is the exponent of `ring`. The division is
/// exact for odd primes by Fermat's little theorem.
pub fn fermat_quotient(ring: &PrimePowerRing) -> Result<Residue, CombError> {
    if ring.exponent() < 2 {
        return Err(CombError::NeedsHigherPrecision);
    }
    let t = ring.residue(2).pow(ring.p() - 1) - ring.one();
    Ok(t.exact_div_p()?)
}

/// Which tables a computation needs, and at which precision exponents.
/// Requests are unioned across the claims sharing a prime.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TableRequest {
    pub trinomial: Option<u32>,
    pub central: Option<u32>,
    pub harmonic: Option<u32>,
    /// `(multiplier, exponent)`: factorial units up to `multiplier * p`.
    pub factorial: Option<(u64, u32)>,
    pub inv_pow3: Option<u32>,
    pub inv_pow12: Option<u32>,
    pub inv_pow64: Option<u32>,
}

fn merge(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.max(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl TableRequest {
    pub fn union(mut self, other: &TableRequest) -> TableRequest {
        self.trinomial = merge(self.trinomial, other.trinomial);
        self.central = merge(self.central, other.central);
        self.harmonic = merge(self.harmonic, other.harmonic);
        self.factorial = match (self.factorial, other.factorial) {
            (Some((m1, e1)), Some((m2, e2))) => Some((m1.max(m2), e1.max(e2))),
            (x, None) => x,
            (None, y) => y,
        };
        self.inv_pow3 = merge(self.inv_pow3, other.inv_pow3);
        self.inv_pow12 = merge(self.inv_pow12, other.inv_pow12);
        self.inv_pow64 = merge(self.inv_pow64, other.inv_pow64);
        self
    }
}

/// A residue table together with the ring it was built in.
pub struct ResidueTable {
    pub ring: PrimePowerRing,
    pub entries: Vec<Residue>,
}

/// A valuated-residue table together with its ring.
pub struct ValuatedTable {
    pub ring: PrimePowerRing,
    pub entries: Vec<ValuatedResidue>,
}

/// The per-prime tables shared by every claim evaluated at that prime.
/// Indices run `0..=p-1`. Components that fail to build (possible only on
/// the small-prime recording paths, e.g. `12^{-k}` at `p = 3`) record their
/// error instead of failing the whole set.
pub struct SequenceTables {
    p: u64,
    trinomial: Option<ResidueTable>,
    central: Option<ValuatedTable>,
    harmonic: Option<ResidueTable>,
    factorial: Option<FactorialTable>,
    inv_pow3: Option<ResidueTable>,
    inv_pow12: Option<ResidueTable>,
    inv_pow64: Option<ResidueTable>,
    errors: Vec<(&'static str, CombError)>,
}

fn make_ring(p: u64, exponent: u32) -> Result<PrimePowerRing, RingError> {
    if p == 2 {
        PrimePowerRing::new_any_prime(p, exponent)
    } else {
        PrimePowerRing::new(p, exponent)
    }
}

fn inverse_power_table(
    ring: &PrimePowerRing,
    base: i128,
    n_max: u64,
) -> Result<Vec<Residue>, CombError> {
    let w = ring.from_ratio(1, base)?;
    let mut t = Vec::with_capacity(n_max as usize + 1);
    t.push(ring.one());
    for k in 1..=n_max as usize {
        let last = t[k - 1];
        t.push(last * w);
    }
    Ok(t)
}

impl SequenceTables {
    pub fn build(p: u64, req: &TableRequest) -> SequenceTables {
        let n = p - 1;
        let mut tables = SequenceTables {
            p,
            trinomial: None,
            central: None,
            harmonic: None,
            factorial: None,
            inv_pow3: None,
            inv_pow12: None,
            inv_pow64: None,
            errors: Vec::new(),
        };

        let residue_component =
            |name: &'static str,
             exponent: u32,
             f: &dyn Fn(&PrimePowerRing) -> Result<Vec<Residue>, CombError>,
             errors: &mut Vec<(&'static str, CombError)>|
             -> Option<ResidueTable> {
                match make_ring(p, exponent)
                    .map_err(CombError::from)
                    .and_then(|ring| Ok((ring, f(&ring)?)))
                {
                    Ok((ring, entries)) => Some(ResidueTable { ring, entries }),
                    Err(e) => {
                        errors.push((name, e));
                        None
                    }
                }
            };

        if let Some(e) = req.trinomial {
            tables.trinomial = residue_component(
                "trinomial",
                e,
                &|ring| trinomial_mod_table(ring, n),
                &mut tables.errors,
            );
        }
        if let Some(e) = req.harmonic {
            tables.harmonic = residue_component(
                "harmonic",
                e,
                &|ring| harmonic_table(ring, n),
                &mut tables.errors,
            );
        }
        if let Some(e) = req.inv_pow3 {
            tables.inv_pow3 = residue_component(
                "inv_pow3",
                e,
                &|ring| inverse_power_table(ring, 3, n),
                &mut tables.errors,
            );
        }
        if let Some(e) = req.inv_pow12 {
            tables.inv_pow12 = residue_component(
                "inv_pow12",
                e,
                &|ring| inverse_power_table(ring, 12, n),
                &mut tables.errors,
            );
        }
        if let Some(e) = req.inv_pow64 {
            tables.inv_pow64 = residue_component(
                "inv_pow64",
                e,
                &|ring| inverse_power_table(ring, 64, n),
                &mut tables.errors,
            );
        }
        if let Some(e) = req.central {
            match make_ring(p, e)
                .map_err(CombError::from)
                .and_then(|ring| Ok((ring, central_binomial_table(&ring, n)?)))
            {
                Ok((ring, entries)) => tables.central = Some(ValuatedTable { ring, entries }),
                Err(err) => tables.errors.push(("central", err)),
            }
        }
        if let Some((mult, e)) = req.factorial {
            match make_ring(p, e) {
                Ok(ring) => tables.factorial = Some(FactorialTable::new(ring, mult * p)),
                Err(err) => tables.errors.push(("factorial", err.into())),
            }
        }
        tables
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    fn component<'a, T>(
        &'a self,
        name: &'static str,
        slot: &'a Option<T>,
    ) -> Result<&'a T, CombError> {
        slot.as_ref().ok_or_else(|| {
            self.errors
                .iter()
                .find(|(n, _)| *n == name)
                .map(|(_, e)| e.clone())
                .unwrap_or(CombError::NotRequested(name))
        })
    }

    pub fn trinomial(&self) -> Result<&ResidueTable, CombError> {
        self.component("trinomial", &self.trinomial)
    }

    pub fn central(&self) -> Result<&ValuatedTable, CombError> {
        self.component("central", &self.central)
    }

    pub fn harmonic(&self) -> Result<&ResidueTable, CombError> {
        self.component("harmonic", &self.harmonic)
    }

    pub fn factorial(&self) -> Result<&FactorialTable, CombError> {
        self.component("factorial", &self.factorial)
    }

    pub fn inv_pow3(&self) -> Result<&ResidueTable, CombError> {
        self.component("inv_pow3", &self.inv_pow3)
    }

    pub fn inv_pow12(&self) -> Result<&ResidueTable, CombError> {
        self.component("inv_pow12", &self.inv_pow12)
    }

    pub fn inv_pow64(&self) -> Result<&ResidueTable, CombError> {
        self.component("inv_pow64", &self.inv_pow64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modring::legendre;

    fn ring(p: u64, e: u32) -> PrimePowerRing {
        PrimePowerRing::new(p, e).unwrap()
    }

    #[test]
    fn trinomial_exact_small_values() {
        let expect: [i64; 10] = [1, 1, 3, 7, 19, 51, 141, 393, 1107, 3139];
        for (n, &t) in expect.iter().enumerate() {
            assert_eq!(trinomial_exact(n as u64), BigInt::from(t));
        }
    }

    #[test]
    fn trinomial_general_examples() {
        for n in 0..=40u64 {
            assert_eq!(trinomial_general_exact(n, 1, 1), trinomial_exact(n));
        }
        assert_eq!(trinomial_general_exact(2, 2, 3), BigInt::from(10));
        assert_eq!(trinomial_general_exact(3, 0, 1), BigInt::zero());
    }

    #[test]
    fn trinomial_mod_table_examples() {
        let t = trinomial_mod_table(&ring(7, 2), 6).unwrap();
        assert_eq!(t[6].value(), 43);
        assert_eq!(t[0].value(), 1);
        let t = trinomial_mod_table(&ring(5, 2), 4).unwrap();
        assert_eq!(t[4].value(), 19);
        assert!(matches!(
            trinomial_mod_table(&ring(5, 2), 5),
            Err(CombError::LengthBeyondPrime { .. })
        ));
    }

    #[test]
    fn trinomial_mod_table_matches_exact() {
        for &p in &[307u64, 311, 1009] {
            let r = ring(p, 2);
            let table = trinomial_mod_table(&r, 300).unwrap();
            for k in 0..=300u64 {
                let exact = trinomial_exact(k);
                let m = BigInt::from(r.modulus());
                let red = ((exact % &m) + &m) % &m;
                assert_eq!(
                    BigInt::from(table[k as usize].value()),
                    red,
                    "p = {p}, k = {k}"
                );
            }
        }
    }

    #[test]
    fn factorial_decompose_examples() {
        let x = factorial_decompose(10, &ring(5, 2));
        assert_eq!((x.valuation(), x.unit().value()), (2, 2));
        let y = factorial_decompose(0, &ring(7, 2));
        assert_eq!((y.valuation(), y.unit().value()), (0, 1));
        let z = factorial_decompose(4, &ring(5, 2));
        assert_eq!((z.valuation(), z.unit().value()), (0, 24));
    }

    #[test]
    fn binomial_valuated_examples() {
        let two_cubed = PrimePowerRing::new_any_prime(2, 3).unwrap();
        let x = binomial_valuated(6, 3, &two_cubed);
        assert_eq!((x.valuation(), x.unit().value()), (2, 5));
        let y = binomial_valuated(7, 2, &ring(7, 2));
        assert_eq!((y.valuation(), y.unit().value()), (1, 3));
        assert!(binomial_valuated(3, 5, &ring(5, 2)).is_zero());
    }

    #[test]
    fn binomial_valuated_matches_kummer() {
        for &p in &[2u64, 3, 5, 13] {
            let r = PrimePowerRing::new_any_prime(p, 2).unwrap();
            let table = FactorialTable::new(r, 60);
            for n in 0..=60u64 {
                for k in 0..=n {
                    let b = table.binomial(n, k).unwrap();
                    assert_eq!(b.valuation(), base_p_carries(n, k, p), "p={p} n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn central_binomial_examples() {
        let c = central_binomial_table(&ring(7, 2), 6).unwrap();
        assert_eq!((c[4].valuation(), c[4].unit().value()), (1, 10));
        assert_eq!((c[0].valuation(), c[0].unit().value()), (0, 1));
        let c = central_binomial_table(&ring(11, 2), 10).unwrap();
        assert_eq!((c[3].valuation(), c[3].unit().value()), (0, 20));
    }

    #[test]
    fn central_binomial_agrees_with_factorials_and_jump() {
        for &p in &[7u64, 13, 31] {
            let r = ring(p, 2);
            let c = central_binomial_table(&r, p - 1).unwrap();
            let f = FactorialTable::new(r, 2 * p);
            for k in 0..p {
                let b = f.binomial(2 * k, k).unwrap();
                assert_eq!(c[k as usize], b, "p={p} k={k}");
                let expect_unit = k <= (p - 1) / 2;
                assert_eq!(c[k as usize].valuation() == 0, expect_unit, "p={p} k={k}");
            }
        }
    }

    #[test]
    fn harmonic_examples() {
        let h = harmonic_table(&ring(5, 2), 4).unwrap();
        assert_eq!(h[0].value(), 0);
        assert_eq!(h[4].value(), 0); // Wolstenholme at p = 5
        let h = harmonic_table(&ring(5, 1), 2).unwrap();
        assert_eq!(h[2].value(), 4);
    }

    #[test]
    fn fermat_quotient_examples() {
        assert_eq!(fermat_quotient(&ring(5, 2)).unwrap().value(), 3);
        assert_eq!(fermat_quotient(&ring(7, 2)).unwrap().value(), 2);
        assert_eq!(fermat_quotient(&ring(3, 2)).unwrap().value(), 1);
        assert!(matches!(
            fermat_quotient(&ring(5, 1)),
            Err(CombError::NeedsHigherPrecision)
        ));
    }

    #[test]
    fn fermat_quotient_satisfies_defining_congruence() {
        for &p in &[5u64, 7, 11, 101, 9973] {
            for e in 2..=3u32 {
                let r = ring(p, e);
                let q = fermat_quotient(&r).unwrap();
                let lhs = r.residue(p as i128) * r.residue(q.value() as i128);
                let rhs = r.residue(2).pow(p - 1) - r.one();
                assert_eq!(lhs, rhs, "p={p} E={e}");
            }
        }
    }

    #[test]
    fn three_forms_and_integral_form() {
        // sum n!/(k! k! (n-2k)!) = sum binom(n,2k) binom(2k,k)
        //                        = sum binom(n,k) binom(n-k,k)
        // and T_n = sum binom(n,k) binom(2k,k) (-1)^k 3^(n-k).
        for n in 0..=200u64 {
            let t = trinomial_exact(n);
            let mut form1 = BigInt::zero();
            for k in 0..=n / 2 {
                let mut fact = BigInt::one();
                for i in 1..=n {
                    fact *= BigInt::from(i);
                }
                let mut kf = BigInt::one();
                for i in 1..=k {
                    kf *= BigInt::from(i);
                }
                let mut nk2f = BigInt::one();
                for i in 1..=(n - 2 * k) {
                    nk2f *= BigInt::from(i);
                }
                form1 += fact / (&kf * &kf * nk2f);
            }
            let mut form3 = BigInt::zero();
            for k in 0..=n {
                form3 += binomial_exact(n, k) * binomial_exact(n - k, k);
            }
            let mut integral = BigInt::zero();
            for k in 0..=n {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                integral += binomial_exact(n, k)
                    * binomial_exact(2 * k, k)
                    * BigInt::from(sign)
                    * BigInt::from(3).pow((n - k) as u32);
            }
            assert_eq!(form1, t, "n = {n}");
            assert_eq!(form3, t, "n = {n}");
            assert_eq!(integral, t, "n = {n}");
        }
    }

    #[test]
    fn sequence_tables_tolerate_component_failures() {
        // At p = 3 the 12^{-k} table cannot exist but the trinomial table can.
        let req = TableRequest {
            trinomial: Some(1),
            inv_pow12: Some(1),
            ..TableRequest::default()
        };
        let tables = SequenceTables::build(3, &req);
        assert!(tables.trinomial().is_ok());
        assert!(tables.inv_pow12().is_err());
        assert!(matches!(
            tables.central(),
            Err(CombError::NotRequested("central"))
        ));
    }

    #[test]
    fn legendre_six_consistency() {
        // spot check used by the 64^{-k} claim: (6/p) = (2/p)(3/p)
        for &p in &[5u64, 7, 11, 13, 97] {
            assert_eq!(legendre(6, p), legendre(2, p) * legendre(3, p));
        }
    }
}
