//! Coefficient rings for exact series arithmetic.
//!
//! Three rings are supported: arbitrary-precision integers, arbitrary-precision
//! rationals, and Z/mZ for a modulus m < 2^63. Modular elements are always the
//! canonical representative in [0, m-1]; rationals are kept in lowest terms with
//! positive denominator (num-rational enforces this on construction).

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A commutative ring with exact arithmetic.
///
/// The ring value itself carries any parameters (the modulus for Z/mZ), so two
/// ring values compare equal exactly when their elements are interoperable.
pub trait CoefficientRing: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Exact division: `Some(q)` with `a = q * b`, or `None` when no such
    /// element exists (or is not findable, e.g. non-invertible divisor mod m).
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;

    /// Render an element for display and for the line-oriented cache format.
    fn format(&self, a: &Self::Elem) -> String;

    /// Short tag naming the ring in reports and cache headers.
    fn label(&self) -> String;

    /// Convolution of two coefficient slices, optionally capped so that only
    /// output indices `< cap` are produced. Schoolbook by default; rings may
    /// override with a faster kernel.
    fn convolve(&self, a: &[Self::Elem], b: &[Self::Elem], cap: Option<usize>) -> Vec<Self::Elem> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let full = a.len() + b.len() - 1;
        let out_len = cap.map_or(full, |c| full.min(c));
        let mut out = vec![self.zero(); out_len];
        for (i, ai) in a.iter().enumerate() {
            if i >= out_len {
                break;
            }
            if self.is_zero(ai) {
                continue;
            }
            let jmax = (out_len - i).min(b.len());
            for (j, bj) in b.iter().take(jmax).enumerate() {
                let prod = self.mul(ai, bj);
                out[i + j] = self.add(&out[i + j], &prod);
            }
        }
        out
    }
}

/// The ring of arbitrary-precision integers Z.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct IntegerRing;

impl CoefficientRing for IntegerRing {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn from_i64(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }
    fn from_bigint(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn exact_div(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        if b.is_zero() {
            return None;
        }
        let (q, r) = num_integer::Integer::div_rem(a, b);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }
    fn format(&self, a: &BigInt) -> String {
        a.to_string()
    }
    fn label(&self) -> String {
        "Z".to_string()
    }
}

/// The field of arbitrary-precision rationals Q.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct RationalRing;

impl CoefficientRing for RationalRing {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn exact_div(&self, a: &BigRational, b: &BigRational) -> Option<BigRational> {
        if b.is_zero() {
            None
        } else {
            Some(a / b)
        }
    }
    fn format(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn label(&self) -> String {
        "Q".to_string()
    }
}

/// Z/mZ with 2 <= m < 2^63; elements are canonical representatives in [0, m-1].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ModularRing {
    modulus: u64,
}

impl ModularRing {
    /// Panics if the modulus is outside [2, 2^63).
    pub fn new(modulus: u64) -> Self {
        assert!(
            (2..(1u64 << 63)).contains(&modulus),
            "modulus must be in [2, 2^63), got {modulus}"
        );
        ModularRing { modulus }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn reduce_i64(&self, n: i64) -> u64 {
        let m = self.modulus as i128;
        (((n as i128) % m + m) % m) as u64
    }

    fn mul_raw(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.modulus as u128) as u64
    }

    /// Multiplicative inverse when gcd(a, m) = 1.
    pub fn inverse(&self, a: u64) -> Option<u64> {
        // extended Euclid on (a, m)
        let m = self.modulus as i128;
        let (mut r0, mut r1) = (a as i128, m);
        let (mut s0, mut s1) = (1i128, 0i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        if r0 != 1 {
            return None;
        }
        Some(((s0 % m + m) % m) as u64)
    }
}

impl CoefficientRing for ModularRing {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.modulus
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = (*a as u128) + (*b as u128);
        (s % self.modulus as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.modulus - (b - a)
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.modulus - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.mul_raw(*a, *b)
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i64(n)
    }
    fn from_bigint(&self, n: &BigInt) -> u64 {
        let m = BigInt::from(self.modulus);
        let mut r = n % &m;
        if r.is_negative() {
            r += &m;
        }
        r.to_u64().expect("reduced residue fits in u64")
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn exact_div(&self, a: &u64, b: &u64) -> Option<u64> {
        let inv = self.inverse(*b)?;
        Some(self.mul_raw(*a, inv))
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
    fn label(&self) -> String {
        format!("Z/{}", self.modulus)
    }

    fn convolve(&self, a: &[u64], b: &[u64], cap: Option<usize>) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let full = a.len() + b.len() - 1;
        let out_len = cap.map_or(full, |c| full.min(c));
        let m = self.modulus;
        if m <= (1 << 21) {
            // Products fit in 42 bits; sums of < 2^22 of them stay below 2^64,
            // so reduction can wait until the very end of each output cell.
            // Guard the length bound explicitly.
            if a.len().max(b.len()) < (1 << 22) {
                let mut out = vec![0u64; out_len];
                for (i, &ai) in a.iter().enumerate() {
                    if i >= out_len || ai == 0 {
                        continue;
                    }
                    let jmax = (out_len - i).min(b.len());
                    let dst = &mut out[i..i + jmax];
                    for (slot, &bj) in dst.iter_mut().zip(&b[..jmax]) {
                        *slot += ai * bj;
                    }
                }
                for x in &mut out {
                    *x %= m;
                }
                return out;
            }
        }
        let mut out = vec![0u64; out_len];
        for (i, &ai) in a.iter().enumerate() {
            if i >= out_len || ai == 0 {
                continue;
            }
            let jmax = (out_len - i).min(b.len());
            for (j, &bj) in b[..jmax].iter().enumerate() {
                out[i + j] = self.add(&out[i + j], &self.mul_raw(ai, bj));
            }
        }
        out
    }
}
