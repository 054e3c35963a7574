//! Exact arithmetic in Q(zeta_p) for prime p, in the power basis
//! 1, zeta, ..., zeta^{p-2}, with zeta^{p-1} eliminated through the vanishing
//! sum of all p-th roots of unity.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::ring::{CoefficientRing, IntegerRing, RationalRing};
use crate::series::Series;

/// Element of Q(zeta_p): coords[k] is the coefficient of zeta^k, 0 <= k <= p-2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicRational {
    p: u64,
    coords: Vec<BigRational>,
}

impl CyclotomicRational {
    pub fn zero(p: u64) -> Self {
        assert!(p >= 2);
        CyclotomicRational {
            p,
            coords: vec![BigRational::zero(); (p - 1) as usize],
        }
    }

    pub fn one(p: u64) -> Self {
        let mut z = Self::zero(p);
        z.coords[0] = BigRational::one();
        z
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Build from a length-p exponent vector (coefficients of 1, zeta, ...,
    /// zeta^{p-1}), eliminating the top power.
    pub fn from_exponent_vector(p: u64, folded: &[BigRational]) -> Self {
        assert_eq!(folded.len(), p as usize);
        let top = folded[(p - 1) as usize].clone();
        let coords = folded[..(p - 1) as usize]
            .iter()
            .map(|c| c - &top)
            .collect();
        CyclotomicRational { p, coords }
    }

    /// zeta^e (exponent reduced mod p).
    pub fn zeta_power(p: u64, e: u64) -> Self {
        let mut folded = vec![BigRational::zero(); p as usize];
        folded[(e % p) as usize] = BigRational::one();
        Self::from_exponent_vector(p, &folded)
    }

    pub fn from_rational(p: u64, c: BigRational) -> Self {
        let mut z = Self::zero(p);
        z.coords[0] = c;
        z
    }

    fn assert_same_field(&self, other: &Self) {
        assert_eq!(self.p, other.p, "elements of different cyclotomic fields");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        CyclotomicRational { p: self.p, coords }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        CyclotomicRational { p: self.p, coords }
    }

    pub fn neg(&self) -> Self {
        CyclotomicRational {
            p: self.p,
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        CyclotomicRational {
            p: self.p,
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let p = self.p as usize;
        // schoolbook product with exponents folded mod p on the fly
        let mut folded = vec![BigRational::zero(); p];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                folded[(i + j) % p] += a * b;
            }
        }
        Self::from_exponent_vector(self.p, &folded)
    }

    pub fn format(&self) -> String {
        let as_series = Series::from_coeffs(
            RationalRing,
            self.coords.clone(),
            crate::series::Mode::Exact,
        );
        as_series.format_with("zeta")
    }
}

/// Evaluate an exact integer polynomial at zeta_p: fold exponents mod p, then
/// reduce to the power basis.
pub fn eval_at_zeta(f: &Series<IntegerRing>, p: u64) -> CyclotomicRational {
    let folded = fold_exponents(f, p);
    let rat: Vec<BigRational> = folded
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    CyclotomicRational::from_exponent_vector(p, &rat)
}

/// Evaluate an exact rational polynomial at zeta_p.
pub fn eval_at_zeta_rational(f: &Series<RationalRing>, p: u64) -> CyclotomicRational {
    let mut folded = vec![BigRational::zero(); p as usize];
    for (k, c) in f.coeffs().iter().enumerate() {
        folded[k % p as usize] += c;
    }
    CyclotomicRational::from_exponent_vector(p, &folded)
}

/// The length-p residue-class sums of an integer polynomial: entry i is the
/// sum of coefficients of exponents congruent to i mod p (i.e. the dissection
/// component evaluated at 1).
pub fn fold_exponents(f: &Series<IntegerRing>, p: u64) -> Vec<BigInt> {
    let ring = IntegerRing;
    let mut folded = vec![BigInt::zero(); p as usize];
    for (k, c) in f.coeffs().iter().enumerate() {
        let slot = k % p as usize;
        folded[slot] = ring.add(&folded[slot], c);
    }
    folded
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::partial_sum_f;
    use crate::series::Mode;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn vanishing_sum_of_roots() {
        for p in [3u64, 5, 7, 11] {
            let all_ones =
                Series::from_i64_coeffs(IntegerRing, &vec![1; p as usize], Mode::Exact);
            assert!(eval_at_zeta(&all_ones, p).is_zero());
        }
    }

    #[test]
    fn zeta_to_the_p_is_one() {
        let mut c = vec![0i64; 6];
        c[5] = 1; // q^5 at p = 5
        let f = Series::from_i64_coeffs(IntegerRing, &c, Mode::Exact);
        assert_eq!(eval_at_zeta(&f, 5), CyclotomicRational::one(5));
    }

    #[test]
    fn f_q_4_at_zeta_5() {
        let f = partial_sum_f(4, &IntegerRing);
        let v = eval_at_zeta(&f, 5);
        let mut expect = CyclotomicRational::zero(5);
        expect.coords[0] = rat(9);
        expect.coords[1] = rat(-5);
        expect.coords[2] = rat(-3);
        assert_eq!(v, expect);
    }

    #[test]
    fn power_basis_reduction() {
        // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
        let p = 7;
        let z6 = CyclotomicRational::zeta_power(p, 6);
        let expect = CyclotomicRational {
            p,
            coords: vec![rat(-1); 6],
        };
        assert_eq!(z6, expect);
        // and zeta^3 * zeta^4 = zeta^7 = 1
        let z3 = CyclotomicRational::zeta_power(p, 3);
        let z4 = CyclotomicRational::zeta_power(p, 4);
        assert_eq!(z3.mul(&z4), CyclotomicRational::one(p));
    }

    #[test]
    fn eval_is_ring_homomorphism() {
        let p = 7;
        let f = Series::from_i64_coeffs(IntegerRing, &[2, -1, 0, 3, 5, -4, 1, 2], Mode::Exact);
        let g = Series::from_i64_coeffs(IntegerRing, &[1, 1, -2, 0, 0, 7, -3], Mode::Exact);
        let lhs = eval_at_zeta(&f.mul(&g).unwrap(), p);
        let rhs = eval_at_zeta(&f, p).mul(&eval_at_zeta(&g, p));
        assert_eq!(lhs, rhs);
        let lhs_add = eval_at_zeta(&f.add(&g).unwrap(), p);
        let rhs_add = eval_at_zeta(&f, p).add(&eval_at_zeta(&g, p));
        assert_eq!(lhs_add, rhs_add);
    }
}
