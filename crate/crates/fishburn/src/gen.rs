//! Generating functions: the partial sums F(q,N), the Fishburn coefficients
//! xi(n), and the alternating a(n) series.
//!
//! Two computation routes exist on purpose. The exact route goes through the
//! generic `Series` machinery over Z; the modular route is a dedicated dense
//! kernel over Z/mZ used by the congruence scans. The ring-homomorphism tests
//! equate them.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::ring::{CoefficientRing, IntegerRing, ModularRing};
use crate::series::{pochhammer_factor, Mode, PochhammerKind, Series, SeriesResult};

/// F(q, N) = sum_{n=0}^{N} (q;q)_n, an exact polynomial of degree N(N+1)/2.
pub fn partial_sum_f<R: CoefficientRing>(n_max: usize, ring: &R) -> Series<R> {
    let mut acc = Series::one(ring.clone(), Mode::Exact);
    let mut prod = Series::one(ring.clone(), Mode::Exact);
    for n in 1..=n_max {
        let factor = pochhammer_factor(ring, PochhammerKind::QAscending, n, None)
            .expect("exact kind never fails");
        prod = prod.mul(&factor).expect("same ring");
        acc = acc.add(&prod).expect("same ring");
    }
    acc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableName {
    Xi,
    A,
}

impl TableName {
    pub fn as_str(&self) -> &'static str {
        match self {
            TableName::Xi => "xi",
            TableName::A => "a",
        }
    }
}

/// A computed coefficient table, exact or modular.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientTable {
    pub name: TableName,
    /// None for exact integers, Some(m) when computed in Z/mZ.
    pub modulus: Option<u64>,
    pub values: Vec<BigInt>,
}

impl CoefficientTable {
    pub fn computed_to(&self) -> usize {
        self.values.len().saturating_sub(1)
    }

    /// Empirical sanity flags: xi values are expected positive, a values are
    /// expected to alternate in sign on indices 0..9. Violations are reported,
    /// never assumed away.
    pub fn anomalies(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.modulus.is_some() {
            return out; // sign structure is invisible mod m
        }
        match self.name {
            TableName::Xi => {
                for (i, v) in self.values.iter().enumerate() {
                    if !v.is_positive() {
                        out.push(format!("xi({i}) = {v} is not positive"));
                    }
                }
            }
            TableName::A => {
                for (i, v) in self.values.iter().enumerate().take(10) {
                    let ok = if i % 2 == 0 {
                        v.is_positive()
                    } else {
                        v.is_negative()
                    };
                    if !ok {
                        out.push(format!("a({i}) = {v} breaks sign alternation"));
                    }
                }
            }
        }
        out
    }
}

/// xi(0..limit) over exact integers via the truncated series route:
/// accumulate (1-q;1-q)_n incrementally; the n-th summand starts at q^n.
pub fn xi_series_exact(limit: usize) -> SeriesResult<Series<IntegerRing>> {
    let ring = IntegerRing;
    let mode = Mode::Truncated(limit);
    let mut acc = Series::one(ring, mode);
    let mut prod = Series::one(ring, mode);
    for n in 1..=limit {
        let factor = pochhammer_factor(&ring, PochhammerKind::OneMinusQ, n, Some(limit))?;
        prod = prod.mul(&factor)?;
        acc = acc.add(&prod)?;
    }
    Ok(acc)
}

pub fn xi_table(limit: usize) -> CoefficientTable {
    let s = xi_series_exact(limit).expect("exact xi route is total");
    CoefficientTable {
        name: TableName::Xi,
        modulus: None,
        values: (0..=limit).map(|k| s.coeff(k)).collect(),
    }
}

/// a(0..limit) over exact integers: coefficients of sum_n (1/(1-q); 1/(1-q))_n.
/// Each factor 1 - (1-q)^{-j} has valuation 1, so the n-th summand starts at
/// q^n and truncation at `limit` needs only n <= limit summands.
pub fn a_series_exact(limit: usize) -> SeriesResult<Series<IntegerRing>> {
    let ring = IntegerRing;
    let mode = Mode::Truncated(limit);
    let mut acc = Series::one(ring, mode);
    let mut prod = Series::one(ring, mode);
    for n in 1..=limit {
        let factor =
            pochhammer_factor(&ring, PochhammerKind::InverseOneMinusQ, n, Some(limit))?;
        prod = prod.mul(&factor)?;
        acc = acc.add(&prod)?;
    }
    Ok(acc)
}

pub fn a_table(limit: usize) -> CoefficientTable {
    let s = a_series_exact(limit).expect("exact a route is total");
    CoefficientTable {
        name: TableName::A,
        modulus: None,
        values: (0..=limit).map(|k| s.coeff(k)).collect(),
    }
}

/// xi(0..limit) mod m. Dense kernel: maintains the running product
/// P_n = (1-q;1-q)_n and the binomial row of (1-q)^n, all as flat vectors,
/// trimming by the valuation-n support of P_n.
pub fn xi_mod(limit: usize, modulus: u64) -> Vec<u64> {
    let r = ModularRing::new(modulus);
    let len = limit + 1;
    let one = 1 % modulus;
    let mut acc = vec![0u64; len];
    acc[0] = one;
    let mut prod = vec![0u64; len];
    prod[0] = one;
    // pow = (1-q)^{n} coefficients, grown one factor per step
    let mut pow: Vec<u64> = vec![one];
    for n in 1..=limit {
        if pow.len() < len {
            pow.push(0);
        }
        for k in (1..pow.len()).rev() {
            pow[k] = r.sub(&pow[k], &pow[k - 1]);
        }
        let v = n - 1; // valuation of P_{n-1}
        let h = r.convolve(&prod[v..len], &pow, Some(len - v));
        for (k, hk) in h.iter().enumerate() {
            prod[v + k] = r.sub(&prod[v + k], hk);
        }
        for k in n..len {
            acc[k] = r.add(&acc[k], &prod[k]);
        }
    }
    acc
}

/// a(0..limit) mod m, same valuation-trimmed structure. The binomial row
/// b[k] = C(n+k-1, k) mod m advances by the Pascal diagonal recurrence
/// b[k] += b[k-1], avoiding division mod a composite m.
pub fn a_mod(limit: usize, modulus: u64) -> Vec<u64> {
    let r = ModularRing::new(modulus);
    let len = limit + 1;
    let one = 1 % modulus;
    let mut acc = vec![0u64; len];
    acc[0] = one;
    let mut prod = vec![0u64; len];
    prod[0] = one;
    let mut binrow = vec![one; len]; // n = 1: C(k, k) = 1
    let mut factor = vec![0u64; len];
    for n in 1..=limit {
        if n > 1 {
            for k in 1..len {
                binrow[k] = r.add(&binrow[k], &binrow[k - 1]);
            }
        }
        factor[0] = 0;
        for k in 1..len {
            factor[k] = r.neg(&binrow[k]);
        }
        let v = n - 1;
        let h = r.convolve(&prod[v..len], &factor, Some(len - v));
        let mut next = vec![0u64; len];
        for (k, hk) in h.iter().enumerate() {
            next[v + k] = *hk;
        }
        prod = next;
        for k in n..len {
            acc[k] = r.add(&acc[k], &prod[k]);
        }
    }
    acc
}

pub fn xi_table_mod(limit: usize, modulus: u64) -> CoefficientTable {
    CoefficientTable {
        name: TableName::Xi,
        modulus: Some(modulus),
        values: xi_mod(limit, modulus).into_iter().map(BigInt::from).collect(),
    }
}

pub fn a_table_mod(limit: usize, modulus: u64) -> CoefficientTable {
    CoefficientTable {
        name: TableName::A,
        modulus: Some(modulus),
        values: a_mod(limit, modulus).into_iter().map(BigInt::from).collect(),
    }
}
