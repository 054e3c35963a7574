//! Brute-force enumeration of ascent sequences: the independent counting
//! oracle for xi(n). Shares no code with the series modules on purpose.

use num_bigint::BigInt;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("ascent-sequence enumeration is capped at n = {max}, got {got}")]
pub struct EnumerationGuard {
    pub max: usize,
    pub got: usize,
}

const GUARD: usize = 14;

/// Number of ascent sequences of length n: x_1 = 0 and each later entry
/// satisfies 0 <= x_k <= 1 + asc(x_1..x_{k-1}). Plain depth-first search.
pub fn count_ascent_sequences(n: usize) -> Result<BigInt, EnumerationGuard> {
    if n > GUARD {
        return Err(EnumerationGuard { max: GUARD, got: n });
    }
    if n == 0 {
        return Ok(BigInt::from(1));
    }
    let mut count: u64 = 0;
    // state: remaining length, number of ascents so far, last value
    fn dfs(remaining: usize, ascents: usize, last: usize, count: &mut u64) {
        if remaining == 0 {
            *count += 1;
            return;
        }
        for next in 0..=(1 + ascents) {
            let new_ascents = if next > last { ascents + 1 } else { ascents };
            dfs(remaining - 1, new_ascents, next, count);
        }
    }
    dfs(n - 1, 0, 0, &mut count);
    Ok(BigInt::from(count))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(count_ascent_sequences(0).unwrap(), BigInt::from(1));
        assert_eq!(count_ascent_sequences(1).unwrap(), BigInt::from(1));
        assert_eq!(count_ascent_sequences(2).unwrap(), BigInt::from(2)); // 00, 01
        assert_eq!(count_ascent_sequences(3).unwrap(), BigInt::from(5));
        assert_eq!(count_ascent_sequences(5).unwrap(), BigInt::from(53));
    }

    #[test]
    fn guard_rejects_large_n() {
        assert!(count_ascent_sequences(15).is_err());
    }
}
