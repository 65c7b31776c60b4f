//! Exact arithmetic modulo prime powers.
//!
//! The congruences verified by this crate live in rings `Z/p^E` for odd
//! primes `p` and small exponents `E`. Three value types cover everything:
//!
//! * [`Residue`], a canonical value in `[0, p^E)`;
//! * [`ValuatedResidue`], a pair `(v, u)` standing for `p^v * u` with `u`
//!   a unit, so that p-divisible binomial coefficients can be multiplied
//!   and divided by `p` without losing precision;
//! * [`PrimePowerRing`], the ring descriptor both of them carry.
//!
//! Arithmetic is done in `u128`. While the modulus fits in 64 bits every
//! product fits a `u128` directly; larger moduli (up to `2^127`) fall back
//! to a shift-and-add product, so no silent overflow is possible.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

/// Largest supported modulus. Keeps `a + a` free of `u128` overflow in the
/// wide multiplication path.
const MAX_MODULUS: u128 = (1 << 127) - 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("p = {0} is even; the congruence catalog needs odd primes")]
    EvenPrime(u64),
    #[error("precision exponent must be at least 1")]
    ZeroExponent,
    #[error("modulus {p}^{exponent} exceeds the supported integer width")]
    ModulusOverflow { p: u64, exponent: u32 },
    #[error("cannot lower precision below exponent 1")]
    ExponentUnderflow,
    #[error("{value} is not invertible modulo {modulus}")]
    NonInvertible { value: u128, modulus: u128 },
    #[error("{value} is not divisible by {p}, exact division impossible")]
    NotDivisible { value: u128, p: u64 },
    #[error("scaling by {num}/{den} would produce a negative valuation")]
    NegativeValuation { num: i128, den: i128 },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("the symbol (p/3) is undefined at p = {0}")]
    SymbolUndefined(u64),
}

/// Trial-division primality test, sufficient for desk-scale sweeps.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut i = 5u64;
    while i <= n / i {
        if n % i == 0 || n % (i + 2) == 0 {
            return false;
        }
        i += 6;
    }
    true
}

fn mul_mod_wide(mut a: u128, mut b: u128, m: u128) -> u128 {
    let mut acc = 0u128;
    a %= m;
    while b > 0 {
        if b & 1 == 1 {
            acc = add_mod(acc, a, m);
        }
        a = add_mod(a, a, m);
        b >>= 1;
    }
    acc
}

#[inline]
fn add_mod(a: u128, b: u128, m: u128) -> u128 {
    let s = a + b;
    if s >= m {
        s - m
    } else {
        s
    }
}

/// Descriptor of the ring `Z/p^E`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimePowerRing {
    p: u64,
    exponent: u32,
    modulus: u128,
}

impl PrimePowerRing {
    /// Ring modulo `p^exponent` for an odd prime `p`.
    pub fn new(p: u64, exponent: u32) -> Result<Self, RingError> {
        if p % 2 == 0 {
            return Err(RingError::EvenPrime(p));
        }
        Self::new_any_prime(p, exponent)
    }

    /// Like [`PrimePowerRing::new`] but also accepts `p = 2`. The catalog's
    /// congruences are stated for odd primes; this constructor exists so the
    /// behaviour of a claim at `p = 2` can still be computed and recorded.
    pub fn new_any_prime(p: u64, exponent: u32) -> Result<Self, RingError> {
        if exponent == 0 {
            return Err(RingError::ZeroExponent);
        }
        if !is_prime(p) {
            return Err(RingError::NotPrime(p));
        }
        let modulus = (p as u128)
            .checked_pow(exponent)
            .filter(|&m| m <= MAX_MODULUS)
            .ok_or(RingError::ModulusOverflow { p, exponent })?;
        Ok(Self { p, exponent, modulus })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn modulus(&self) -> u128 {
        self.modulus
    }

    /// The ring `Z/p^(E-1)`, target of exact division by `p`.
    pub fn lower(&self) -> Result<Self, RingError> {
        if self.exponent < 2 {
            return Err(RingError::ExponentUnderflow);
        }
        Ok(Self {
            p: self.p,
            exponent: self.exponent - 1,
            modulus: self.modulus / self.p as u128,
        })
    }

    /// Same prime at a smaller exponent.
    pub fn at_exponent(&self, exponent: u32) -> Self {
        assert!(exponent >= 1 && exponent <= self.exponent);
        Self {
            p: self.p,
            exponent,
            modulus: (self.p as u128).pow(exponent),
        }
    }

    /// Canonical residue of a (possibly negative) integer.
    pub fn residue(&self, n: i128) -> Residue {
        let value = n.rem_euclid(self.modulus as i128) as u128;
        Residue { ring: *self, value }
    }

    pub fn residue_unsigned(&self, n: u128) -> Residue {
        Residue {
            ring: *self,
            value: n % self.modulus,
        }
    }

    pub fn zero(&self) -> Residue {
        Residue {
            ring: *self,
            value: 0,
        }
    }

    pub fn one(&self) -> Residue {
        self.residue_unsigned(1)
    }

    /// `num * den^{-1}`, defined whenever `p` does not divide `den`. The
    /// zero fraction reduces to zero whatever the denominator.
    pub fn from_ratio(&self, num: i128, den: i128) -> Result<Residue, RingError> {
        if den == 0 {
            return Err(RingError::ZeroDenominator);
        }
        if num == 0 {
            return Ok(self.zero());
        }
        let d = self.residue(den).inv()?;
        Ok(self.residue(num) * d)
    }

    #[inline]
    fn mul_raw(&self, a: u128, b: u128) -> u128 {
        if self.modulus <= u64::MAX as u128 {
            (a * b) % self.modulus
        } else {
            mul_mod_wide(a, b, self.modulus)
        }
    }
}

impl fmt::Debug for PrimePowerRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z/{}^{}", self.p, self.exponent)
    }
}

impl fmt::Display for PrimePowerRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.p, self.exponent)
    }
}

/// A canonical value in `[0, p^E)`.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct Residue {
    ring: PrimePowerRing,
    value: u128,
}

impl Residue {
    pub fn ring(&self) -> PrimePowerRing {
        self.ring
    }

    pub fn value(&self) -> u128 {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    /// Multiplicative inverse of a unit. Uses Euler's theorem with the group
    /// order `phi(p^E) = p^(E-1)(p-1)`; valid for `p = 2` as well.
    pub fn inv(&self) -> Result<Residue, RingError> {
        if self.value % self.ring.p as u128 == 0 {
            return Err(RingError::NonInvertible {
                value: self.value,
                modulus: self.ring.modulus,
            });
        }
        let phi = self.ring.modulus / self.ring.p as u128 * (self.ring.p as u128 - 1);
        Ok(self.pow_u128(phi - 1))
    }

    /// Binary exponentiation; `pow(0)` is 1 for every residue.
    pub fn pow(&self, e: u64) -> Residue {
        self.pow_u128(e as u128)
    }

    pub fn pow_u128(&self, mut e: u128) -> Residue {
        let mut base = *self;
        let mut acc = self.ring.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Exact division by `p`, landing in `Z/p^(E-1)`.
    ///
    /// Failure signals that a claimed congruence premise (divisibility
    /// by `p`) does not hold for this value.
    pub fn exact_div_p(&self) -> Result<Residue, RingError> {
        let lower = self.ring.lower()?;
        let p = self.ring.p as u128;
        if self.value % p != 0 {
            return Err(RingError::NotDivisible {
                value: self.value,
                p: self.ring.p,
            });
        }
        Ok(Residue {
            ring: lower,
            value: self.value / p,
        })
    }

    /// Reduce to a ring with the same prime and a smaller (or equal) exponent.
    pub fn reduce_to(&self, target: &PrimePowerRing) -> Residue {
        assert_eq!(self.ring.p, target.p, "reduce_to across different primes");
        assert!(target.exponent <= self.ring.exponent);
        Residue {
            ring: *target,
            value: self.value % target.modulus,
        }
    }

    pub fn reduce_exponent(&self, exponent: u32) -> Residue {
        self.reduce_to(&self.ring.at_exponent(exponent))
    }
}

impl Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Residue) -> Residue {
        assert!(self.ring == rhs.ring, "mixed rings in addition");
        Residue {
            ring: self.ring,
            value: add_mod(self.value, rhs.value, self.ring.modulus),
        }
    }
}

impl Sub for Residue {
    type Output = Residue;
    fn sub(self, rhs: Residue) -> Residue {
        assert!(self.ring == rhs.ring, "mixed rings in subtraction");
        Residue {
            ring: self.ring,
            value: add_mod(self.value, self.ring.modulus - rhs.value, self.ring.modulus),
        }
    }
}

impl Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Residue) -> Residue {
        assert!(self.ring == rhs.ring, "mixed rings in multiplication");
        Residue {
            ring: self.ring,
            value: self.ring.mul_raw(self.value, rhs.value),
        }
    }
}

impl Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        self.ring.zero() - self
    }
}

impl fmt::Debug for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.ring)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// `p^v * u` with `u` a unit known modulo `p^E`, plus an exact-zero flag.
///
/// Multiplication and rational scaling keep the unit part exact, so a chain
/// of updates through p-divisible values (central binomial coefficients past
/// `(p-1)/2`, `binom(p, k)` rows and so on) never loses precision. Addition
/// is deliberately not provided; sums are formed after [`Self::collapse`].
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct ValuatedResidue {
    unit: Residue,
    v: u32,
    zero: bool,
}

impl ValuatedResidue {
    pub fn zero(ring: &PrimePowerRing) -> Self {
        Self {
            unit: ring.one(),
            v: 0,
            zero: true,
        }
    }

    pub fn one(ring: &PrimePowerRing) -> Self {
        Self {
            unit: ring.one(),
            v: 0,
            zero: false,
        }
    }

    /// Wrap an already-decomposed value. `unit` must be coprime to `p`.
    pub fn from_unit(unit: Residue, v: u32) -> Self {
        debug_assert!(unit.value % unit.ring.p as u128 != 0);
        Self { unit, v, zero: false }
    }

    /// Decompose `n = p^v * u` with `p` not dividing `u`.
    pub fn from_integer(n: i128, ring: &PrimePowerRing) -> Self {
        if n == 0 {
            return Self::zero(ring);
        }
        let p = ring.p as u128;
        let negative = n < 0;
        let mut a = n.unsigned_abs();
        let mut v = 0u32;
        while a % p == 0 {
            a /= p;
            v += 1;
        }
        let mut unit = ring.residue_unsigned(a);
        if negative {
            unit = -unit;
        }
        Self { unit, v, zero: false }
    }

    pub fn is_zero(&self) -> bool {
        self.zero
    }

    /// The valuation `v`. Zero (by convention) for the exact zero.
    pub fn valuation(&self) -> u32 {
        if self.zero {
            0
        } else {
            self.v
        }
    }

    pub fn unit(&self) -> Residue {
        self.unit
    }

    pub fn ring(&self) -> PrimePowerRing {
        self.unit.ring
    }

    /// Multiply by the exact rational `num/den`. The p-parts of `num` and
    /// `den` move the valuation; the unit parts multiply into `u`. Errors if
    /// the result would have negative valuation (not a p-adic integer).
    pub fn scale(&self, num: i128, den: i128) -> Result<Self, RingError> {
        if den == 0 {
            return Err(RingError::ZeroDenominator);
        }
        if self.zero || num == 0 {
            return Ok(Self::zero(&self.unit.ring));
        }
        let ring = self.unit.ring;
        let p = ring.p as u128;

        let strip = |x: i128| -> (u32, i128) {
            let mut a = x.unsigned_abs();
            let mut v = 0u32;
            while a % p == 0 {
                a /= p;
                v += 1;
            }
            (v, if x < 0 { -(a as i128) } else { a as i128 })
        };

        let (vn, un) = strip(num);
        let (vd, ud) = strip(den);
        let new_v = self.v as i64 + vn as i64 - vd as i64;
        if new_v < 0 {
            return Err(RingError::NegativeValuation { num, den });
        }
        let unit = self.unit * ring.residue(un) * ring.residue(ud).inv()?;
        Ok(Self {
            unit,
            v: new_v as u32,
            zero: false,
        })
    }

    /// The plain residue `p^min(v, E) * u mod p^E`; zero once `v >= E`.
    pub fn collapse(&self) -> Residue {
        let ring = self.unit.ring;
        if self.zero || self.v >= ring.exponent {
            return ring.zero();
        }
        let pv = (ring.p as u128).pow(self.v);
        self.unit * ring.residue_unsigned(pv)
    }

    pub fn reduce_to(&self, target: &PrimePowerRing) -> Self {
        Self {
            unit: self.unit.reduce_to(target),
            v: self.v,
            zero: self.zero,
        }
    }
}

impl Mul for ValuatedResidue {
    type Output = ValuatedResidue;
    fn mul(self, rhs: ValuatedResidue) -> ValuatedResidue {
        if self.zero || rhs.zero {
            return ValuatedResidue::zero(&self.unit.ring);
        }
        ValuatedResidue {
            unit: self.unit * rhs.unit,
            v: self.v + rhs.v,
            zero: false,
        }
    }
}

impl fmt::Debug for ValuatedResidue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.zero {
            write!(f, "0 (exact, mod {})", self.unit.ring)
        } else {
            write!(
                f,
                "{}^{} * {} (mod {})",
                self.unit.ring.p, self.v, self.unit.value, self.unit.ring
            )
        }
    }
}

fn pow_mod_u64(a: u64, mut e: u64, m: u64) -> u64 {
    let mut base = a as u128 % m as u128;
    let mut acc = 1u128;
    let m = m as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc as u64
}

/// Legendre symbol `(a/p)` by Euler's criterion: `a^((p-1)/2) mod p` mapped
/// from `{1, p-1}` to `{1, -1}`, and `0` when `p` divides `a`.
///
/// `p` must be an odd prime; the Euler-criterion route is the primary
/// implementation, with quadratic reciprocity kept as a test-side check.
pub fn legendre(a: i128, p: u64) -> i32 {
    let ap = a.rem_euclid(p as i128) as u64;
    if ap == 0 {
        return 0;
    }
    let r = pow_mod_u64(ap, (p - 1) / 2, p);
    if r == 1 {
        1
    } else if r == p - 1 {
        -1
    } else {
        panic!("legendre: {p} is not an odd prime");
    }
}

/// The symbol `(p/3)` for primes `p != 3`: `+1` when `p = 1 (mod 3)`,
/// `-1` when `p = 2 (mod 3)`.
pub fn legendre_p_mod_3(p: u64) -> Result<i32, RingError> {
    match p % 3 {
        0 => Err(RingError::SymbolUndefined(p)),
        1 => Ok(1),
        _ => Ok(-1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const TEST_PRIMES: &[u64] = &[3, 5, 7, 11, 13, 17, 31, 97, 101, 9973];

    fn ring(p: u64, e: u32) -> PrimePowerRing {
        PrimePowerRing::new(p, e).unwrap()
    }

    #[test]
    fn ring_construction() {
        assert_eq!(ring(5, 2).modulus(), 25);
        assert_eq!(ring(3, 3).modulus(), 27);
        assert!(matches!(
            PrimePowerRing::new(4, 2),
            Err(RingError::EvenPrime(4))
        ));
        assert!(matches!(
            PrimePowerRing::new(9, 1),
            Err(RingError::NotPrime(9))
        ));
        assert!(matches!(
            PrimePowerRing::new(5, 0),
            Err(RingError::ZeroExponent)
        ));
        assert!(PrimePowerRing::new(u64::MAX - 58, 4).is_err());
        // p = 2 only through the explicit constructor
        assert!(PrimePowerRing::new(2, 3).is_err());
        assert_eq!(PrimePowerRing::new_any_prime(2, 3).unwrap().modulus(), 8);
    }

    #[test]
    fn from_ratio_examples() {
        assert_eq!(ring(5, 2).from_ratio(1, 3).unwrap().value(), 17);
        assert_eq!(ring(7, 2).from_ratio(0, 7).unwrap().value(), 0);
        assert_eq!(ring(7, 2).from_ratio(-1, 4).unwrap().value(), 12);
        assert!(matches!(
            ring(5, 2).from_ratio(1, 10),
            Err(RingError::NonInvertible { .. })
        ));
        assert!(matches!(
            ring(5, 2).from_ratio(1, 0),
            Err(RingError::ZeroDenominator)
        ));
    }

    #[test]
    fn inverse_and_pow_examples() {
        let r = ring(5, 2);
        assert_eq!(r.residue(13).inv().unwrap().value(), 2);
        assert_eq!(r.residue(3).pow(4).value(), 6);
        assert_eq!(r.residue(11).pow(0).value(), 1);
        assert!(r.residue(10).inv().is_err());
    }

    #[test]
    fn exact_division() {
        let r3 = ring(5, 3);
        let q = r3.residue(50).exact_div_p().unwrap();
        assert_eq!(q.value(), 10);
        assert_eq!(q.ring().modulus(), 25);
        assert_eq!(r3.residue(0).exact_div_p().unwrap().value(), 0);
        assert!(matches!(
            r3.residue(51).exact_div_p(),
            Err(RingError::NotDivisible { .. })
        ));
        assert!(matches!(
            ring(5, 1).residue(5).exact_div_p(),
            Err(RingError::ExponentUnderflow)
        ));
    }

    #[test]
    fn valuated_decompose_examples() {
        let r = ring(5, 2);
        let x = ValuatedResidue::from_integer(50, &r);
        assert_eq!((x.valuation(), x.unit().value()), (2, 2));
        let y = ValuatedResidue::from_integer(7, &r);
        assert_eq!((y.valuation(), y.unit().value()), (0, 7));
        assert!(ValuatedResidue::from_integer(0, &r).is_zero());
    }

    #[test]
    fn valuated_scale_examples() {
        let r = ring(5, 2);
        let one = ValuatedResidue::one(&r);
        let x = one.scale(10, 3).unwrap();
        assert_eq!((x.valuation(), x.unit().value()), (1, 9));
        let y = one.scale(1, 1).unwrap();
        assert_eq!(y, one);
        let z = ValuatedResidue::from_integer(2, &r);
        assert!(matches!(
            z.scale(1, 5),
            Err(RingError::NegativeValuation { .. })
        ));
    }

    #[test]
    fn valuated_collapse_examples() {
        let r = ring(5, 2);
        let x = ValuatedResidue::from_unit(r.residue(3), 1);
        assert_eq!(x.collapse().value(), 15);
        let y = ValuatedResidue::from_unit(r.residue(4), 3);
        assert_eq!(y.collapse().value(), 0);
        assert_eq!(ValuatedResidue::zero(&r).collapse().value(), 0);
    }

    #[test]
    fn legendre_examples() {
        for &p in TEST_PRIMES {
            assert_eq!(legendre(1, p), 1);
        }
        assert_eq!(legendre(2, 7), 1);
        assert_eq!(legendre(3, 7), -1);
        assert_eq!(legendre(14, 7), 0);
        assert_eq!(legendre(-1, 5), 1);
        assert_eq!(legendre(-1, 7), -1);
    }

    #[test]
    fn legendre_p_mod_3_examples() {
        assert_eq!(legendre_p_mod_3(7).unwrap(), 1);
        assert_eq!(legendre_p_mod_3(5).unwrap(), -1);
        assert_eq!(legendre_p_mod_3(13).unwrap(), 1);
        assert!(matches!(
            legendre_p_mod_3(3),
            Err(RingError::SymbolUndefined(3))
        ));
    }

    #[test]
    fn wide_modulus_arithmetic() {
        // 999983^4 > 2^64 exercises the shift-and-add product.
        let r = PrimePowerRing::new(999_983, 4).unwrap();
        assert!(r.modulus() > u64::MAX as u128);
        let a = r.residue(123_456_789_123_456_789);
        assert_eq!((a * a.inv().unwrap()).value(), 1);
        assert_eq!(a.pow(3), a * a * a);
        let b = ValuatedResidue::from_integer(999_983i128 * 999_983 * 17, &r);
        assert_eq!((b.valuation(), b.unit().value()), (2, 17));
    }

    proptest! {
        #[test]
        fn canonical_and_inverse(pi in 0..TEST_PRIMES.len(), e in 1u32..=3, a in any::<i64>()) {
            let r = ring(TEST_PRIMES[pi], e);
            let x = r.residue(a as i128);
            prop_assert!(x.value() < r.modulus());
            if x.value() % r.p() as u128 != 0 {
                prop_assert_eq!((x * x.inv().unwrap()).value(), 1);
            }
        }

        #[test]
        fn collapse_decompose_round_trip(pi in 0..TEST_PRIMES.len(), e in 1u32..=3, n in any::<i64>()) {
            let r = ring(TEST_PRIMES[pi], e);
            let x = ValuatedResidue::from_integer(n as i128, &r);
            prop_assert_eq!(x.collapse(), r.residue(n as i128));
        }

        #[test]
        fn exact_division_inverts_multiplication(pi in 0..TEST_PRIMES.len(), e in 2u32..=3, n in any::<i64>()) {
            let r = ring(TEST_PRIMES[pi], e);
            let x = r.residue(n as i128);
            let px = x * r.residue(r.p() as i128);
            prop_assert_eq!(px.exact_div_p().unwrap(), x.reduce_exponent(e - 1));
        }

        #[test]
        fn legendre_multiplicative(pi in 0..TEST_PRIMES.len(), a in any::<i32>(), b in any::<i32>()) {
            let p = TEST_PRIMES[pi];
            let (a, b) = (a as i128, b as i128);
            prop_assert_eq!(legendre(a * b, p), legendre(a, p) * legendre(b, p));
        }

        #[test]
        fn euler_agreement(pi in 0..TEST_PRIMES.len(), a in any::<i32>()) {
            let p = TEST_PRIMES[pi];
            let a = a as i128;
            if a.rem_euclid(p as i128) != 0 {
                let r = ring(p, 1);
                let lhs = r.residue(a).pow((p - 1) / 2);
                prop_assert_eq!(lhs, r.residue(legendre(a, p) as i128));
            }
        }

        #[test]
        fn reciprocity_consequence(pi in 0..TEST_PRIMES.len()) {
            // (3/p) * (p/3) = (-1/p) for p > 3
            let p = TEST_PRIMES[pi];
            if p > 3 {
                let lhs = legendre(3, p) * legendre_p_mod_3(p).unwrap();
                prop_assert_eq!(lhs, legendre(-1, p));
            }
        }

        #[test]
        fn fermat_little_theorem(pi in 0..TEST_PRIMES.len(), a in any::<i32>()) {
            let p = TEST_PRIMES[pi];
            let a = a as i128;
            if a.rem_euclid(p as i128) != 0 {
                let r = ring(p, 1);
                prop_assert_eq!(r.residue(a).pow(p - 1).value(), 1);
            }
        }
    }
}
