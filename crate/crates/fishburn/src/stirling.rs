//! Stirling numbers of the second kind c_{n,j} and the Stirling-like array
//! C_{N,i,j}(p), both filled by their defining recurrences.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// c_{n,j} for 1 <= j <= n <= max_n, with c_{1,1} = 1 and
/// c_{n+1,j} = j c_{n,j} + c_{n,j-1}.
#[derive(Clone, Debug)]
pub struct StirlingTable {
    max_n: usize,
    rows: Vec<Vec<BigInt>>, // rows[n][j], j = 0..=n, row 0 unused
}

impl StirlingTable {
    pub fn new(max_n: usize) -> Self {
        assert!(max_n >= 1);
        let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::zero()]];
        rows.push(vec![BigInt::zero(), BigInt::one()]);
        for n in 1..max_n {
            let prev = &rows[n];
            let mut row = vec![BigInt::zero(); n + 2];
            for (j, slot) in row.iter_mut().enumerate().skip(1) {
                let from_same = if j <= n {
                    BigInt::from(j as u64) * &prev[j]
                } else {
                    BigInt::zero()
                };
                let from_below = if j >= 1 && j - 1 <= n {
                    prev[j - 1].clone()
                } else {
                    BigInt::zero()
                };
                *slot = from_same + from_below;
            }
            rows.push(row);
        }
        StirlingTable { max_n, rows }
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    /// c_{n,j}; zero outside 1 <= j <= n.
    pub fn get(&self, n: usize, j: usize) -> BigInt {
        if n == 0 || n > self.max_n || j == 0 || j > n {
            return BigInt::zero();
        }
        self.rows[n][j].clone()
    }
}

/// C_{N,i,j}(p) for 0 <= N <= max_n, 0 <= i <= p-1, 0 <= j <= N, with
/// C_{N,i,0} = i^N (C_{0,0,0} = 1), C_{N,i,N+1} = 0, and
/// C_{N+1,i,j} = (i + jp) C_{N,i,j} + p C_{N,i,j-1}.
#[derive(Clone, Debug)]
pub struct CArray {
    p: u64,
    max_n: usize,
    // entries[N][i][j]
    entries: Vec<Vec<Vec<BigInt>>>,
}

impl CArray {
    pub fn new(p: u64, max_n: usize) -> Self {
        let pi = p as usize;
        let mut entries: Vec<Vec<Vec<BigInt>>> = Vec::with_capacity(max_n + 1);
        let level0: Vec<Vec<BigInt>> = (0..pi).map(|_| vec![BigInt::one()]).collect();
        entries.push(level0);
        for n in 0..max_n {
            let prev = &entries[n];
            let mut level: Vec<Vec<BigInt>> = Vec::with_capacity(pi);
            for (i, prev_i) in prev.iter().enumerate() {
                let mut row = vec![BigInt::zero(); n + 2];
                row[0] = BigInt::from(i as u64).pow((n + 1) as u32);
                for (j, slot) in row.iter_mut().enumerate().skip(1) {
                    let coeff = BigInt::from(i as u64) + BigInt::from(j as u64) * p;
                    let same = if j <= n {
                        coeff * &prev_i[j]
                    } else {
                        BigInt::zero()
                    };
                    let below = BigInt::from(p) * &prev_i[j - 1];
                    *slot = same + below;
                }
                level.push(row);
            }
            entries.push(level);
        }
        CArray { p, max_n, entries }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    /// C_{n,i,j}(p); zero outside 0 <= j <= n.
    pub fn get(&self, n: usize, i: usize, j: usize) -> BigInt {
        if n > self.max_n || j > n {
            return BigInt::zero();
        }
        self.entries[n][i][j].clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stirling_small_values() {
        let t = StirlingTable::new(6);
        assert_eq!(t.get(1, 1), BigInt::one());
        assert_eq!(t.get(2, 1), BigInt::one());
        assert_eq!(t.get(2, 2), BigInt::one());
        assert_eq!(t.get(3, 2), BigInt::from(3));
        for n in 1..=6 {
            assert_eq!(t.get(n, n), BigInt::one(), "c[n][n], n={n}");
            assert_eq!(t.get(n, 0), BigInt::zero());
            assert_eq!(t.get(n, n + 1), BigInt::zero());
        }
        // classical values: S(4,2) = 7, S(5,3) = 25
        assert_eq!(t.get(4, 2), BigInt::from(7));
        assert_eq!(t.get(5, 3), BigInt::from(25));
    }

    #[test]
    fn c_array_boundaries_and_recurrence() {
        let p = 5u64;
        let c = CArray::new(p, 6);
        for i in 0..p as usize {
            // C[1][i][1] = (i+p)*0 + p*1 = p
            assert_eq!(c.get(1, i, 1), BigInt::from(p));
            // C[2][i][0] = i^2
            assert_eq!(c.get(2, i, 0), BigInt::from((i * i) as u64));
            // diagonal C[N][i][N] = p^N
            for n in 0..=6usize {
                assert_eq!(c.get(n, i, n), BigInt::from(p).pow(n as u32), "n={n} i={i}");
            }
        }
    }
}
