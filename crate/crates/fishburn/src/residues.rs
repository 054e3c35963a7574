//! Pentagonal residue sets S(p) and T(p), the Kronecker symbol, the mod-23
//! classification set R, and Lucas-theorem binomials.

use num_bigint::BigInt;
use num_traits::One;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ResidueError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("p must be at least 5, got {0}")]
    TooSmall(u64),
}

/// Deterministic Miller-Rabin, valid for all n < 2^64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut base: u64, mut e: u64| {
        let mut acc = 1u64;
        base %= n;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// S(p): residues mod p attained by pentagonal numbers k(3k-1)/2; T(p): the
/// residues strictly larger than every element of S(p).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueSets {
    pub p: u64,
    pub s: Vec<u64>,
    pub t: Vec<u64>,
}

impl ResidueSets {
    pub fn t_is_empty(&self) -> bool {
        self.t.is_empty()
    }
}

/// Computes S(p) and T(p). A single sweep of k over [0, p-1] covers both
/// generalized pentagonal branches, since k -> p - k realizes negative k mod p.
pub fn residue_sets(p: u64) -> Result<ResidueSets, ResidueError> {
    if !is_prime(p) {
        return Err(ResidueError::NotPrime(p));
    }
    let mut hit = vec![false; p as usize];
    for k in 0..p as u128 {
        let pent = if k == 0 { 0 } else { k * (3 * k - 1) / 2 % p as u128 };
        hit[pent as usize] = true;
    }
    let s: Vec<u64> = (0..p).filter(|&j| hit[j as usize]).collect();
    let max_s = *s.last().expect("0 is always pentagonal");
    let t: Vec<u64> = (max_s + 1..p).collect();
    Ok(ResidueSets { p, s, t })
}

/// Full Kronecker symbol (a/n), extending the Jacobi and Legendre symbols to
/// all integers n.
pub fn kronecker_symbol(a: i64, n: i64) -> i32 {
    if n == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    let mut a = a as i128;
    let mut n = n as i128;
    let mut result = 1i32;
    if n < 0 {
        n = -n;
        if a < 0 {
            result = -result;
        }
    }
    // factor out 2s from n; (a/2) = 0 for even a, else chi_8(a)
    let mut twos = 0;
    while n % 2 == 0 {
        n /= 2;
        twos += 1;
    }
    if twos > 0 {
        if a % 2 == 0 {
            return 0;
        }
        if twos % 2 == 1 {
            let r = ((a % 8) + 8) % 8;
            if r == 3 || r == 5 {
                result = -result;
            }
        }
    }
    a = ((a % n) + n) % n;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            let r = n % 8;
            if r == 3 || r == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// chi(m) = (12/m) via its closed form: 1 for m = +-1 (mod 12), -1 for
/// m = +-5 (mod 12), 0 otherwise. Cross-tested against `kronecker_symbol`.
pub fn chi_12(m: i64) -> i32 {
    match ((m % 12) + 12) % 12 {
        1 | 11 => 1,
        5 | 7 => -1,
        _ => 0,
    }
}

/// The section-4 classification set: nonresidues mod 23.
pub const R_SET: [u64; 11] = [5, 7, 10, 11, 14, 15, 17, 19, 20, 21, 22];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RMembership {
    /// p mod 23 lies in R, so T(p) is nonempty.
    Member,
    NonMember,
    /// p = 23 divides the discriminant and is excluded from the classification.
    DiscriminantPrime,
}

pub fn member_of_r(p: u64) -> Result<RMembership, ResidueError> {
    if !is_prime(p) {
        return Err(ResidueError::NotPrime(p));
    }
    if p == 23 {
        return Ok(RMembership::DiscriminantPrime);
    }
    if R_SET.contains(&(p % 23)) {
        Ok(RMembership::Member)
    } else {
        Ok(RMembership::NonMember)
    }
}

/// C(n, k) mod p by Lucas's theorem: the product of base-p digit binomials,
/// zero as soon as a digit of k exceeds the matching digit of n.
pub fn binomial_mod_p(n: u64, k: u64, p: u64) -> Result<u64, ResidueError> {
    if !is_prime(p) {
        return Err(ResidueError::NotPrime(p));
    }
    // factorials mod p up to p-1
    let mut fact = vec![1u64; p as usize];
    for i in 1..p as usize {
        fact[i] = (fact[i - 1] as u128 * i as u128 % p as u128) as u64;
    }
    let inv = |a: u64| -> u64 {
        // Fermat inverse, p prime
        let mut acc = 1u64;
        let mut base = a % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = (acc as u128 * base as u128 % p as u128) as u64;
            }
            base = (base as u128 * base as u128 % p as u128) as u64;
            e >>= 1;
        }
        acc
    };
    let (mut n, mut k) = (n, k);
    let mut result = 1u64;
    while n > 0 || k > 0 {
        let (nd, kd) = (n % p, k % p);
        if kd > nd {
            return Ok(0);
        }
        let digit = fact[nd as usize] as u128 * inv(fact[kd as usize]) as u128 % p as u128;
        let digit = digit * inv(fact[(nd - kd) as usize]) as u128 % p as u128;
        result = (result as u128 * digit) as u64 % p;
        n /= p;
        k /= p;
    }
    Ok(result)
}

/// Exact big-integer binomial, the independent route for the Lucas tests.
pub fn binomial_exact(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
