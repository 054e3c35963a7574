//! Identity checks behind the dissection lemmas: the theta-operator Stirling
//! expansion, the C-array identity, the vanishing of non-pentagonal dissection
//! values at 1, and the two-route Bernoulli computation of b_M(zeta).
//!
//! All computation here is exact (big integers, big rationals, Q(zeta_p));
//! floating point never appears.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cyclotomic::{eval_at_zeta, CyclotomicRational};
use crate::gen::partial_sum_f;
use crate::report::VerificationReport;
use crate::residues::{chi_12, is_prime, residue_sets, ResidueError};
use crate::ring::{IntegerRing, RationalRing};
use crate::series::{Mode, Series};
use crate::stirling::{CArray, StirlingTable};

/// Bernoulli numbers B_0..B_k (B_1 = -1/2 convention).
pub fn bernoulli_numbers(k: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(k + 1);
    for n in 0..=k {
        if n == 0 {
            b.push(BigRational::one());
            continue;
        }
        // sum_{i=0}^{n} C(n+1, i) B_i = 0
        let mut acc = BigRational::zero();
        for (i, bi) in b.iter().enumerate() {
            let c = num_integer::binomial(BigInt::from(n as u64 + 1), BigInt::from(i as u64));
            acc += BigRational::from_integer(c) * bi;
        }
        let denom = BigRational::from_integer(BigInt::from(n as u64 + 1));
        b.push(-acc / denom);
    }
    b
}

/// The Bernoulli polynomial B_k(x) = sum_i C(k,i) B_i x^{k-i}, coefficients
/// indexed by the exponent of x.
pub fn bernoulli_polynomial(k: usize) -> Series<RationalRing> {
    let nums = bernoulli_numbers(k);
    let mut coeffs = vec![BigRational::zero(); k + 1];
    for (i, bi) in nums.iter().enumerate() {
        let c = num_integer::binomial(BigInt::from(k as u64), BigInt::from(i as u64));
        coeffs[k - i] = BigRational::from_integer(c) * bi;
    }
    Series::from_coeffs(RationalRing, coeffs, Mode::Exact)
}

fn eval_rational_poly(f: &Series<RationalRing>, x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in f.coeffs().iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// (q d/dq)^n (AB) = sum_{j=1}^{n} q^j c_{n,j} (d/dq)^j (AB) on seeded random
/// integer polynomials.
pub fn verify_lemma2(trials: u64, max_n: usize) -> VerificationReport {
    let mut report = VerificationReport::new("lemma2")
        .with_param("trials", trials as i64)
        .with_param("max_n", max_n as i64);
    let stirling = StirlingTable::new(max_n.max(1));
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f15b);
    for _ in 0..trials {
        let deg_a = rng.gen_range(0..=15);
        let deg_b = rng.gen_range(0..=15);
        let a: Vec<i64> = (0..=deg_a).map(|_| rng.gen_range(-10..=10)).collect();
        let b: Vec<i64> = (0..=deg_b).map(|_| rng.gen_range(-10..=10)).collect();
        let n = rng.gen_range(1..=max_n);
        let product = Series::from_i64_coeffs(IntegerRing, &a, Mode::Exact)
            .mul(&Series::from_i64_coeffs(IntegerRing, &b, Mode::Exact))
            .expect("same ring");
        let lhs = product.theta_operator(n);
        let mut rhs = Series::zero(IntegerRing, Mode::Exact);
        for j in 1..=n {
            let c = stirling.get(n, j);
            let term = product.derivative(j).shift(j).scale(&c);
            rhs = rhs.add(&term).expect("same ring");
        }
        report.checked_count += 1;
        if lhs != rhs {
            report.push_counterexample(
                &[("n", n as i64), ("deg_a", deg_a as i64), ("deg_b", deg_b as i64)],
                format!("lhs = {lhs}, rhs = {rhs}"),
            );
        }
    }
    report.finalize()
}

/// (q d/dq)^N F(q,n) = sum_{j,i} C_{N,i,j}(p) q^{i+jp} A_p^{(j)}(n,i,q^p),
/// checked as exact polynomial equality for each N <= max_N.
pub fn verify_lemma4(p: u64, n: usize, max_n_order: usize) -> Result<VerificationReport, ResidueError> {
    if !is_prime(p) {
        return Err(ResidueError::NotPrime(p));
    }
    let mut report = VerificationReport::new("lemma4")
        .with_param("p", p as i64)
        .with_param("n", n as i64)
        .with_param("max_N", max_n_order as i64);
    let f = partial_sum_f(n, &IntegerRing);
    let table = f.dissect(p).expect("p >= 2");
    let c_array = CArray::new(p, max_n_order);
    for order in 0..=max_n_order {
        let lhs = f.theta_operator(order);
        let mut rhs = Series::zero(IntegerRing, Mode::Exact);
        for j in 0..=order {
            for i in 0..p as usize {
                let coeff = c_array.get(order, i, j);
                if coeff.is_zero() {
                    continue;
                }
                let deriv = table.component(i).derivative(j);
                let term = deriv
                    .inflate(p as usize)
                    .expect("exact")
                    .shift(i + j * p as usize)
                    .scale(&coeff);
                rhs = rhs.add(&term).expect("same ring");
            }
        }
        report.checked_count += 1;
        if lhs != rhs {
            report.push_counterexample(
                &[("N", order as i64)],
                "polynomial identity fails".to_string(),
            );
        }
    }
    Ok(report.finalize())
}

/// A_p^{(j)}((j+1)p - 1, i, 1) = 0 for every i outside S(p) and 0 <= j <= max_j,
/// over exact integers. The computational content of the basis lemma.
pub fn verify_eq_2_14(p: u64, max_j: usize) -> Result<VerificationReport, ResidueError> {
    let sets = residue_sets(p)?;
    let mut report = VerificationReport::new("eq214")
        .with_param("p", p as i64)
        .with_param("max_j", max_j as i64);
    for j in 0..=max_j {
        let n = (j + 1) * p as usize - 1;
        let f = partial_sum_f(n, &IntegerRing);
        let table = f.dissect(p).expect("p >= 2");
        for i in 0..p {
            if sets.s.contains(&i) {
                continue;
            }
            let value = table.component(i as usize).derivative(j).eval_at_one();
            report.checked_count += 1;
            if !value.is_zero() {
                report.push_counterexample(
                    &[("j", j as i64), ("i", i as i64)],
                    format!("A_{p}^({j})({n},{i},1) = {value}"),
                );
            }
        }
    }
    Ok(report.finalize())
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CycloError {
    #[error(transparent)]
    Residue(#[from] ResidueError),
    #[error("p must be a prime >= 5 for the Bernoulli formula, got {0}")]
    SmallPrime(u64),
}

/// Closed form for the Taylor coefficients of F at a p-th root of
/// unity, taken with the character sum over its full conductor 12p:
///
///   c_n(zeta) = (-1)^n (12p)^{2n+1} / (2n+2)
///               * sum_{m=1}^{6p} chi(m) zeta^{(m^2-1)/24} B_{2n+2}(m/(12p))
///
/// chi(m) = (12/m) kills every m with gcd(m,12) > 1; the surviving exponents
/// (m^2-1)/24 are integers and pentagonal, and are reduced mod p before basis
/// reduction.
pub fn c_n_zeta(n: usize, p: u64) -> Result<CyclotomicRational, CycloError> {
    if !is_prime(p) {
        return Err(ResidueError::NotPrime(p).into());
    }
    if p < 5 {
        return Err(CycloError::SmallPrime(p));
    }
    let conductor = 12 * p;
    let bpoly = bernoulli_polynomial(2 * n + 2);
    let mut acc = CyclotomicRational::zero(p);
    for m in 1..=6 * p {
        let chi = chi_12(m as i64);
        if chi == 0 {
            continue;
        }
        let exponent = ((m * m - 1) / 24) % p;
        let x = BigRational::new(BigInt::from(m), BigInt::from(conductor));
        let mut weight = eval_rational_poly(&bpoly, &x);
        if chi < 0 {
            weight = -weight;
        }
        acc = acc.add(&CyclotomicRational::zeta_power(p, exponent).scale(&weight));
    }
    let mut prefactor = BigRational::new(
        BigInt::from(conductor).pow((2 * n + 1) as u32),
        BigInt::from(2 * n as u64 + 2),
    );
    if n % 2 == 1 {
        prefactor = -prefactor;
    }
    Ok(acc.scale(&prefactor))
}

/// b_M(zeta) through the theta-operator route: (q d/dq)^M F(q, (M+1)p - 1)
/// evaluated at zeta, which suffices by the stabilization of Eq-type partial
/// sums at roots of unity.
pub fn b_m_theta_route(m_order: usize, p: u64) -> CyclotomicRational {
    let f = partial_sum_f((m_order + 1) * p as usize - 1, &IntegerRing);
    eval_at_zeta(&f.theta_operator(m_order), p)
}

/// b_M(zeta) through the Bernoulli route:
/// b_M = (-24)^{-M} sum_{n=0}^{M} C(M,n) c_n(zeta).
pub fn b_m_bernoulli_route(m_order: usize, p: u64) -> Result<CyclotomicRational, CycloError> {
    let mut acc = CyclotomicRational::zero(p);
    for n in 0..=m_order {
        let c = num_integer::binomial(BigInt::from(m_order as u64), BigInt::from(n as u64));
        acc = acc.add(&c_n_zeta(n, p)?.scale(&BigRational::from_integer(c)));
    }
    let scale = BigRational::new(BigInt::one(), BigInt::from(-24i64).pow(m_order as u32));
    Ok(acc.scale(&scale))
}

/// The two b_M routes agree exactly in Q(zeta_p) for all M <= max_order.
pub fn verify_bernoulli_crosscheck(
    p: u64,
    max_order: usize,
) -> Result<VerificationReport, CycloError> {
    let mut report = VerificationReport::new("bernoulli")
        .with_param("p", p as i64)
        .with_param("max_order", max_order as i64);
    for m_order in 0..=max_order {
        let theta_route = b_m_theta_route(m_order, p);
        let bernoulli_route = b_m_bernoulli_route(m_order, p)?;
        report.checked_count += 1;
        if theta_route != bernoulli_route {
            report.push_counterexample(
                &[("M", m_order as i64)],
                format!(
                    "theta route {} != Bernoulli route {}",
                    theta_route.format(),
                    bernoulli_route.format()
                ),
            );
        }
    }
    Ok(report.finalize())
}
