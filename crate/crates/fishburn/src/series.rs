//! Dense polynomial and truncated power-series arithmetic over a coefficient ring.
//!
//! A `Series` is either an exact polynomial (trailing zeros trimmed, the zero
//! polynomial stored as an empty vector) or truncated to a fixed order N
//! (exactly N+1 stored coefficients; arithmetic discards exponents > N).
//! Values are immutable after construction; every operation returns a new series.

use crate::ring::CoefficientRing;
use num_bigint::BigInt;
use num_traits::One;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("coefficient ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("operation requires exact-polynomial mode")]
    TruncatedInput,
    #[error("truncation order required for the inverse-one-minus-q Pochhammer kind")]
    TruncationRequired,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("dissection modulus must be at least 2, got {0}")]
    InvalidDissectionModulus(u64),
}

pub type SeriesResult<T> = Result<T, SeriesError>;

/// Exact polynomial, or truncated with all exponents > order discarded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Truncated(usize),
}

impl Mode {
    /// Mode of the result of a binary operation: exact only when both inputs
    /// are exact, otherwise truncated at the smaller order present.
    fn combine(self, other: Mode) -> Mode {
        match (self, other) {
            (Mode::Exact, Mode::Exact) => Mode::Exact,
            (Mode::Truncated(a), Mode::Truncated(b)) => Mode::Truncated(a.min(b)),
            (Mode::Truncated(a), Mode::Exact) | (Mode::Exact, Mode::Truncated(a)) => {
                Mode::Truncated(a)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Series<R: CoefficientRing> {
    ring: R,
    coeffs: Vec<R::Elem>,
    mode: Mode,
}

impl<R: CoefficientRing> Series<R> {
    pub fn zero(ring: R, mode: Mode) -> Self {
        Series::from_coeffs(ring, Vec::new(), mode)
    }

    pub fn one(ring: R, mode: Mode) -> Self {
        let c = vec![ring.one()];
        Series::from_coeffs(ring, c, mode)
    }

    /// q^k
    pub fn monomial(ring: R, k: usize, mode: Mode) -> Self {
        let mut c = vec![ring.zero(); k + 1];
        c[k] = ring.one();
        Series::from_coeffs(ring, c, mode)
    }

    pub fn from_coeffs(ring: R, coeffs: Vec<R::Elem>, mode: Mode) -> Self {
        let mut s = Series { ring, coeffs, mode };
        s.normalize();
        s
    }

    pub fn from_i64_coeffs(ring: R, coeffs: &[i64], mode: Mode) -> Self {
        let c = coeffs.iter().map(|&n| ring.from_i64(n)).collect();
        Series::from_coeffs(ring, c, mode)
    }

    fn normalize(&mut self) {
        match self.mode {
            Mode::Exact => {
                while let Some(last) = self.coeffs.last() {
                    if self.ring.is_zero(last) {
                        self.coeffs.pop();
                    } else {
                        break;
                    }
                }
            }
            Mode::Truncated(order) => {
                self.coeffs.resize(order + 1, self.ring.zero());
            }
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    /// Coefficient of q^k (zero when outside the stored range).
    pub fn coeff(&self, k: usize) -> R::Elem {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.ring.is_zero(c))
    }

    /// Degree of an exact polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        match self.mode {
            Mode::Exact => {
                if self.coeffs.is_empty() {
                    None
                } else {
                    Some(self.coeffs.len() - 1)
                }
            }
            Mode::Truncated(_) => self
                .coeffs
                .iter()
                .rposition(|c| !self.ring.is_zero(c)),
        }
    }

    fn check_ring(&self, other: &Self) -> SeriesResult<()> {
        if self.ring != other.ring {
            return Err(SeriesError::RingMismatch(
                self.ring.label(),
                other.ring.label(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> SeriesResult<Self> {
        self.check_ring(other)?;
        let mode = self.mode.combine(other.mode);
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            out.push(self.ring.add(&self.coeff(k), &other.coeff(k)));
        }
        Ok(Series::from_coeffs(self.ring.clone(), out, mode))
    }

    pub fn sub(&self, other: &Self) -> SeriesResult<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let out = self.coeffs.iter().map(|c| self.ring.neg(c)).collect();
        Series::from_coeffs(self.ring.clone(), out, self.mode)
    }

    pub fn mul(&self, other: &Self) -> SeriesResult<Self> {
        self.check_ring(other)?;
        let mode = self.mode.combine(other.mode);
        let cap = match mode {
            Mode::Exact => None,
            Mode::Truncated(order) => Some(order + 1),
        };
        let out = self.ring.convolve(&self.coeffs, &other.coeffs, cap);
        Ok(Series::from_coeffs(self.ring.clone(), out, mode))
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let out = self.coeffs.iter().map(|a| self.ring.mul(a, c)).collect();
        Series::from_coeffs(self.ring.clone(), out, self.mode)
    }

    /// Multiply by q^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut out = vec![self.ring.zero(); k];
        out.extend(self.coeffs.iter().cloned());
        Series::from_coeffs(self.ring.clone(), out, self.mode)
    }

    /// Re-truncate (or truncate an exact polynomial) at the given order.
    pub fn truncate(&self, order: usize) -> Self {
        let take = self.coeffs.len().min(order + 1);
        Series::from_coeffs(
            self.ring.clone(),
            self.coeffs[..take].to_vec(),
            Mode::Truncated(order),
        )
    }

    /// Reinterpret a truncated series as the exact polynomial of its stored
    /// coefficients. Used where a valuation argument shows no tail exists.
    pub fn into_exact(&self) -> Self {
        Series::from_coeffs(self.ring.clone(), self.coeffs.clone(), Mode::Exact)
    }

    pub fn pow(&self, n: usize) -> SeriesResult<Self> {
        let mut acc = Series::one(self.ring.clone(), self.mode);
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// order-th formal derivative d^order/dq^order.
    pub fn derivative(&self, order: usize) -> Self {
        let mut cur = self.clone();
        for _ in 0..order {
            let mut out = Vec::with_capacity(cur.coeffs.len().saturating_sub(1));
            for k in 1..cur.coeffs.len() {
                out.push(cur.ring.mul(&cur.coeff(k), &cur.ring.from_i64(k as i64)));
            }
            let mode = match cur.mode {
                Mode::Exact => Mode::Exact,
                Mode::Truncated(n) => Mode::Truncated(n.saturating_sub(1)),
            };
            cur = Series::from_coeffs(cur.ring.clone(), out, mode);
        }
        cur
    }

    /// (q d/dq)^order: coefficient of q^k is scaled by k^order.
    pub fn theta_operator(&self, order: usize) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (k, c) in self.coeffs.iter().enumerate() {
            let mut factor = self.ring.one();
            let kk = self.ring.from_i64(k as i64);
            for _ in 0..order {
                factor = self.ring.mul(&factor, &kk);
            }
            out.push(self.ring.mul(c, &factor));
        }
        Series::from_coeffs(self.ring.clone(), out, self.mode)
    }

    /// f(q) -> f(1-q), exact binomial expansion. Exact-polynomial input only.
    pub fn substitute_one_minus_q(&self) -> SeriesResult<Self> {
        if !matches!(self.mode, Mode::Exact) {
            return Err(SeriesError::TruncatedInput);
        }
        // Horner in (1-q), highest coefficient first.
        let one_minus_q =
            Series::from_i64_coeffs(self.ring.clone(), &[1, -1], Mode::Exact);
        let mut acc = Series::zero(self.ring.clone(), Mode::Exact);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&one_minus_q)?;
            let cs = Series::from_coeffs(self.ring.clone(), vec![c.clone()], Mode::Exact);
            acc = acc.add(&cs)?;
        }
        Ok(acc)
    }

    /// q -> q^stride.
    pub fn inflate(&self, stride: usize) -> SeriesResult<Self> {
        if !matches!(self.mode, Mode::Exact) {
            return Err(SeriesError::TruncatedInput);
        }
        assert!(stride >= 1);
        if self.coeffs.is_empty() {
            return Ok(self.clone());
        }
        let mut out = vec![self.ring.zero(); (self.coeffs.len() - 1) * stride + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k * stride] = c.clone();
        }
        Ok(Series::from_coeffs(self.ring.clone(), out, Mode::Exact))
    }

    /// Sum of all stored coefficients, i.e. f(1) for an exact polynomial.
    pub fn eval_at_one(&self) -> R::Elem {
        let mut acc = self.ring.zero();
        for c in &self.coeffs {
            acc = self.ring.add(&acc, c);
        }
        acc
    }

    /// Exact polynomial division: `(f/g, true)` when g divides f with zero
    /// remainder, `(zero, false)` otherwise.
    pub fn divide_exact(&self, g: &Self) -> SeriesResult<(Self, bool)> {
        self.check_ring(g)?;
        if !matches!(self.mode, Mode::Exact) || !matches!(g.mode, Mode::Exact) {
            return Err(SeriesError::TruncatedInput);
        }
        if g.is_zero() {
            return Err(SeriesError::DivisionByZero);
        }
        let fail = (Series::zero(self.ring.clone(), Mode::Exact), false);
        if self.is_zero() {
            return Ok((Series::zero(self.ring.clone(), Mode::Exact), true));
        }
        let dg = g.degree().expect("nonzero");
        let df = self.degree().expect("nonzero");
        if df < dg {
            return Ok(fail);
        }
        let lead_g = g.coeff(dg);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.ring.zero(); df - dg + 1];
        for k in (0..=df - dg).rev() {
            let top = rem[k + dg].clone();
            if self.ring.is_zero(&top) {
                continue;
            }
            let q = match self.ring.exact_div(&top, &lead_g) {
                Some(q) => q,
                None => return Ok(fail),
            };
            for (j, gj) in g.coeffs.iter().enumerate() {
                let t = self.ring.mul(&q, gj);
                rem[k + j] = self.ring.sub(&rem[k + j], &t);
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !self.ring.is_zero(c)) {
            return Ok(fail);
        }
        Ok((Series::from_coeffs(self.ring.clone(), quot, Mode::Exact), true))
    }

    /// Split by exponent residue class mod p: component i holds
    /// A_p(N, i, Q) with [Q^k] A = [q^{i+kp}] f.
    pub fn dissect(&self, p: u64) -> SeriesResult<DissectionTable<R>> {
        if p < 2 {
            return Err(SeriesError::InvalidDissectionModulus(p));
        }
        if !matches!(self.mode, Mode::Exact) {
            return Err(SeriesError::TruncatedInput);
        }
        let p_us = p as usize;
        let mut parts: Vec<Vec<R::Elem>> = vec![Vec::new(); p_us];
        for (k, c) in self.coeffs.iter().enumerate() {
            parts[k % p_us].push(c.clone());
        }
        let components = parts
            .into_iter()
            .map(|v| Series::from_coeffs(self.ring.clone(), v, Mode::Exact))
            .collect();
        Ok(DissectionTable {
            p,
            components,
            source_degree: self.degree().unwrap_or(0),
        })
    }

    pub fn format_with(&self, var: &str) -> String {
        let mut terms: Vec<(bool, String)> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if self.ring.is_zero(c) {
                continue;
            }
            let s = self.ring.format(c);
            let (neg, mag) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            let body = if k == 0 {
                mag
            } else {
                let pow = if k == 1 {
                    var.to_string()
                } else {
                    format!("{var}^{k}")
                };
                if mag == "1" {
                    pow
                } else {
                    format!("{mag}*{pow}")
                }
            };
            terms.push((neg, body));
        }
        if terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (neg, body)) in terms.iter().enumerate() {
            if i == 0 {
                if *neg {
                    out.push('-');
                }
            } else {
                out.push_str(if *neg { " - " } else { " + " });
            }
            out.push_str(body);
        }
        out
    }
}

impl<R: CoefficientRing> std::fmt::Display for Series<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.format_with("q"))
    }
}

/// The p residue-class components of a polynomial, each a polynomial in Q = q^p.
#[derive(Clone, Debug, PartialEq)]
pub struct DissectionTable<R: CoefficientRing> {
    p: u64,
    components: Vec<Series<R>>,
    source_degree: usize,
}

impl<R: CoefficientRing> DissectionTable<R> {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn source_degree(&self) -> usize {
        self.source_degree
    }

    pub fn component(&self, i: usize) -> &Series<R> {
        &self.components[i]
    }

    pub fn components(&self) -> &[Series<R>] {
        &self.components
    }

    /// Sum q^i * components[i](q^p); equals the dissected polynomial exactly.
    pub fn reassemble(&self) -> SeriesResult<Series<R>> {
        let ring = self.components[0].ring().clone();
        let mut acc = Series::zero(ring, Mode::Exact);
        for (i, comp) in self.components.iter().enumerate() {
            let inflated = comp.inflate(self.p as usize)?.shift(i);
            acc = acc.add(&inflated)?;
        }
        Ok(acc)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PochhammerKind {
    /// (q;q)_n
    QAscending,
    /// (1-q; 1-q)_n
    OneMinusQ,
    /// (1/(1-q); 1/(1-q))_n -- infinite series factors, truncation required
    InverseOneMinusQ,
}

/// The Pochhammer products (A;q)_n = (1-A)(1-Aq)...(1-Aq^{n-1}) for the three
/// substitutions used here. n = 0 gives the empty product 1.
pub fn pochhammer<R: CoefficientRing>(
    ring: &R,
    kind: PochhammerKind,
    n: usize,
    trunc: Option<usize>,
) -> SeriesResult<Series<R>> {
    let mode = match (kind, trunc) {
        (PochhammerKind::InverseOneMinusQ, None) => return Err(SeriesError::TruncationRequired),
        (_, Some(order)) => Mode::Truncated(order),
        (_, None) => Mode::Exact,
    };
    let mut acc = Series::one(ring.clone(), mode);
    for j in 1..=n {
        let factor = pochhammer_factor(ring, kind, j, trunc)?;
        acc = acc.mul(&factor)?;
    }
    Ok(acc)
}

/// The j-th factor of the product (j >= 1): 1 - q^j, 1 - (1-q)^j, or
/// 1 - (1-q)^{-j} respectively.
pub fn pochhammer_factor<R: CoefficientRing>(
    ring: &R,
    kind: PochhammerKind,
    j: usize,
    trunc: Option<usize>,
) -> SeriesResult<Series<R>> {
    let mode = match (kind, trunc) {
        (PochhammerKind::InverseOneMinusQ, None) => return Err(SeriesError::TruncationRequired),
        (_, Some(order)) => Mode::Truncated(order),
        (_, None) => Mode::Exact,
    };
    match kind {
        PochhammerKind::QAscending => {
            let mut c = vec![ring.zero(); j + 1];
            c[0] = ring.one();
            c[j] = ring.neg(&ring.one());
            let s = Series::from_coeffs(ring.clone(), c, Mode::Exact);
            Ok(match trunc {
                Some(order) => s.truncate(order),
                None => s,
            })
        }
        PochhammerKind::OneMinusQ => {
            // 1 - (1-q)^j = sum_{h=1}^{j} (-1)^{h-1} C(j,h) q^h
            let mut c = vec![ring.zero(); j + 1];
            let mut binom = BigInt::one(); // C(j,0)
            for h in 1..=j {
                binom = binom * BigInt::from((j - h + 1) as u64) / BigInt::from(h as u64);
                let val = ring.from_bigint(&binom);
                c[h] = if h % 2 == 1 { val } else { ring.neg(&val) };
            }
            let s = Series::from_coeffs(ring.clone(), c, Mode::Exact);
            Ok(match trunc {
                Some(order) => s.truncate(order),
                None => s,
            })
        }
        PochhammerKind::InverseOneMinusQ => {
            // 1 - (1-q)^{-j} = -sum_{k>=1} C(j+k-1, k) q^k, truncated
            let order = trunc.expect("checked above");
            let mut c = vec![ring.zero(); order + 1];
            let mut binom = BigInt::one(); // C(j-1, 0)
            for (k, slot) in c.iter_mut().enumerate().skip(1).take(order) {
                binom = binom * BigInt::from((j + k - 1) as u64) / BigInt::from(k as u64);
                *slot = ring.neg(&ring.from_bigint(&binom));
            }
            let _ = mode;
            Ok(Series::from_coeffs(
                ring.clone(),
                c,
                Mode::Truncated(order),
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{IntegerRing, ModularRing};

    fn zpoly(c: &[i64]) -> Series<IntegerRing> {
        Series::from_i64_coeffs(IntegerRing, c, Mode::Exact)
    }

    #[test]
    fn add_cancellation() {
        let a = zpoly(&[1, -1]);
        let b = zpoly(&[0, 1]);
        assert_eq!(a.add(&b).unwrap(), zpoly(&[1]));
    }

    #[test]
    fn add_identity() {
        let a = zpoly(&[1, -1, -1, 1]);
        let z = Series::zero(IntegerRing, Mode::Exact);
        assert_eq!(a.add(&z).unwrap(), a);
    }

    #[test]
    fn add_modular_wraparound() {
        let r = ModularRing::new(5);
        let a = Series::from_i64_coeffs(r, &[3, 4], Mode::Exact);
        let b = Series::from_i64_coeffs(r, &[2, 4], Mode::Exact);
        let sum = a.add(&b).unwrap();
        assert_eq!(sum, Series::from_i64_coeffs(r, &[0, 3], Mode::Exact));
    }

    #[test]
    fn mul_hand_expansions() {
        let a = zpoly(&[1, -1]);
        let b = zpoly(&[1, 0, -1]);
        assert_eq!(a.mul(&b).unwrap(), zpoly(&[1, -1, -1, 1]));

        // (q;q)_3 = (q;q)_2 * (1-q^3)
        let qq2 = zpoly(&[1, -1, -1, 1]);
        let f3 = zpoly(&[1, 0, 0, -1]);
        assert_eq!(
            qq2.mul(&f3).unwrap(),
            zpoly(&[1, -1, -1, 0, 1, 1, -1])
        );
    }

    #[test]
    fn mul_truncated() {
        let a = Series::from_i64_coeffs(IntegerRing, &[1, -1], Mode::Truncated(2));
        let b = Series::from_i64_coeffs(IntegerRing, &[1, 0, -1], Mode::Truncated(2));
        let prod = a.mul(&b).unwrap();
        assert_eq!(
            prod,
            Series::from_i64_coeffs(IntegerRing, &[1, -1, -1], Mode::Truncated(2))
        );
    }

    #[test]
    fn ring_mismatch_rejected() {
        let a = Series::from_i64_coeffs(ModularRing::new(5), &[1], Mode::Exact);
        let b = Series::from_i64_coeffs(ModularRing::new(7), &[1], Mode::Exact);
        assert!(matches!(a.add(&b), Err(SeriesError::RingMismatch(_, _))));
    }

    #[test]
    fn pochhammer_q_ascending() {
        let p0 = pochhammer(&IntegerRing, PochhammerKind::QAscending, 0, None).unwrap();
        assert_eq!(p0, zpoly(&[1]));
        let p2 = pochhammer(&IntegerRing, PochhammerKind::QAscending, 2, None).unwrap();
        assert_eq!(p2, zpoly(&[1, -1, -1, 1]));
        let p4 = pochhammer(&IntegerRing, PochhammerKind::QAscending, 4, None).unwrap();
        assert_eq!(p4, zpoly(&[1, -1, -1, 0, 0, 2, 0, 0, -1, -1, 1]));
    }

    #[test]
    fn pochhammer_one_minus_q() {
        // (1-q; 1-q)_1 = 1 - (1-q) = q
        let p1 = pochhammer(&IntegerRing, PochhammerKind::OneMinusQ, 1, None).unwrap();
        assert_eq!(p1, zpoly(&[0, 1]));
        // lowest term of the n-th product is q^n
        for n in 1..7 {
            let pn = pochhammer(&IntegerRing, PochhammerKind::OneMinusQ, n, None).unwrap();
            for k in 0..n {
                assert!(pn.ring().is_zero(&pn.coeff(k)), "n={n} k={k}");
            }
            assert!(!pn.ring().is_zero(&pn.coeff(n)));
        }
    }

    #[test]
    fn pochhammer_inverse_requires_truncation() {
        assert_eq!(
            pochhammer(&IntegerRing, PochhammerKind::InverseOneMinusQ, 2, None).unwrap_err(),
            SeriesError::TruncationRequired
        );
        // (1/(1-q); 1/(1-q))_1 = 1 - 1/(1-q) = -q - q^2 - ...
        let p1 =
            pochhammer(&IntegerRing, PochhammerKind::InverseOneMinusQ, 1, Some(3)).unwrap();
        assert_eq!(
            p1,
            Series::from_i64_coeffs(IntegerRing, &[0, -1, -1, -1], Mode::Truncated(3))
        );
    }

    #[test]
    fn substitute_one_minus_q_basics() {
        assert_eq!(zpoly(&[0, 1]).substitute_one_minus_q().unwrap(), zpoly(&[1, -1]));
        assert_eq!(zpoly(&[1, -1]).substitute_one_minus_q().unwrap(), zpoly(&[0, 1]));
        assert_eq!(
            zpoly(&[0, 0, 1]).substitute_one_minus_q().unwrap(),
            zpoly(&[1, -2, 1])
        );
        let trunc = Series::from_i64_coeffs(IntegerRing, &[1, 2], Mode::Truncated(1));
        assert_eq!(
            trunc.substitute_one_minus_q().unwrap_err(),
            SeriesError::TruncatedInput
        );
    }

    #[test]
    fn dissect_f_q_2() {
        // F(q,2) = 3 - 2q - q^2 + q^3 at p = 3
        let f = zpoly(&[3, -2, -1, 1]);
        let table = f.dissect(3).unwrap();
        assert_eq!(table.component(0), &zpoly(&[3, 1]));
        assert_eq!(table.component(1), &zpoly(&[-2]));
        assert_eq!(table.component(2), &zpoly(&[-1]));
        assert_eq!(table.reassemble().unwrap(), f);
    }

    #[test]
    fn dissect_constant_and_errors() {
        let one = zpoly(&[1]);
        let t = one.dissect(7).unwrap();
        assert_eq!(t.component(0), &zpoly(&[1]));
        for i in 1..7 {
            assert!(t.component(i).is_zero());
        }
        assert_eq!(
            one.dissect(1).unwrap_err(),
            SeriesError::InvalidDissectionModulus(1)
        );
    }

    #[test]
    fn dissect_f_q_4_at_5_residue_sums() {
        let f = zpoly(&[5, -4, -3, 1, 1, 3, -1, 0, -1, -1, 1]); // F(q,4)
        let t = f.dissect(5).unwrap();
        let sums: Vec<i64> = (0..5)
            .map(|i| {
                let v = t.component(i).eval_at_one();
                let s = IntegerRing.format(&v);
                s.parse().unwrap()
            })
            .collect();
        assert_eq!(sums, vec![9, -5, -3, 0, 0]);
    }

    #[test]
    fn derivative_basics() {
        assert_eq!(zpoly(&[0, 0, 0, 1]).derivative(1), zpoly(&[0, 0, 3]));
        assert_eq!(zpoly(&[1, -1, -1, 1]).derivative(2), zpoly(&[-2, 6]));
        assert_eq!(zpoly(&[7]).derivative(1), zpoly(&[]));
    }

    #[test]
    fn theta_operator_basics() {
        assert_eq!(zpoly(&[0, 0, 0, 1]).theta_operator(1), zpoly(&[0, 0, 0, 3]));
        assert_eq!(zpoly(&[0, 1, 1]).theta_operator(2), zpoly(&[0, 1, 4]));
        assert_eq!(zpoly(&[5]).theta_operator(1), zpoly(&[]));
        // theta = q * d/dq applied repeatedly
        let f = zpoly(&[2, 0, -3, 1, 4]);
        let via_deriv = f.derivative(1).shift(1);
        assert_eq!(f.theta_operator(1), via_deriv);
    }

    #[test]
    fn divide_exact_basics() {
        let one_minus = zpoly(&[1, -1]);
        let (q, ok) = one_minus.divide_exact(&one_minus).unwrap();
        assert!(ok);
        assert_eq!(q, zpoly(&[1]));

        let f = zpoly(&[1, 0, -1]);
        let (q, ok) = f.divide_exact(&one_minus).unwrap();
        assert!(ok);
        assert_eq!(q, zpoly(&[1, 1]));

        let g = zpoly(&[1, 1]);
        let (_, ok) = g.divide_exact(&one_minus).unwrap();
        assert!(!ok);

        let z = Series::zero(IntegerRing, Mode::Exact);
        assert_eq!(
            g.divide_exact(&z).unwrap_err(),
            SeriesError::DivisionByZero
        );
    }

    #[test]
    fn display_formatting() {
        assert_eq!(zpoly(&[1, -1, -1, 1]).to_string(), "1 - q - q^2 + q^3");
        assert_eq!(zpoly(&[0, 3]).to_string(), "3*q");
        assert_eq!(Series::zero(IntegerRing, Mode::Exact).to_string(), "0");
    }
}
