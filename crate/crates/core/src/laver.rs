//! Laver tables `A_n` and the general `N`-element tables they belong to.
//!
//! For every `N >= 1` there is exactly one operation on `{1..N}` with
//! `p*1 = p+1 mod N` and `p*(q*1) = (p*q)*(p*1)`. It is left-selfdistributive
//! exactly when `N` is a power of two; those are the Laver tables.

use crate::error::{domain, Error, Result};
use crate::magma::FiniteMagma;

/// Largest `n` accepted by [`LaverTable::new`].
pub const DEFAULT_MAX_N: u32 = 13;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralTable {
    size: usize,
    op: Vec<u32>,
}

impl GeneralTable {
    /// Builds the table row by row from `p = N` down to `1`.
    pub fn new(size: usize) -> Result<Self> {
        if size == 0 {
            return domain("table size must be at least 1");
        }
        let n = size;
        let mut op = vec![0u32; n * n];
        for p in 1..=n {
            op[(p - 1) * n] = (p % n + 1) as u32;
        }
        // Row N is the identity row: N*q = (N*(q-1))*1 only reads column 1.
        for q in 2..=n {
            let prev = op[(n - 1) * n + q - 2] as usize;
            op[(n - 1) * n + q - 1] = op[(prev - 1) * n];
        }
        for p in (1..n).rev() {
            let next = p + 1;
            for q in 2..=n {
                let r = op[(p - 1) * n + q - 2] as usize;
                debug_assert!(r > p);
                op[(p - 1) * n + q - 1] = op[(r - 1) * n + next - 1];
            }
        }
        Ok(Self { size, op })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn op(&self, p: usize, q: usize) -> usize {
        self.op[(p - 1) * self.size + q - 1] as usize
    }

    pub fn row(&self, p: usize) -> Vec<usize> {
        (1..=self.size).map(|q| self.op(p, q)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (1..=self.size).map(|p| self.row(p)).collect()
    }

    pub fn to_magma(&self) -> FiniteMagma {
        FiniteMagma::from_raw(self.size, self.op.clone())
    }

    /// First triple breaking left-selfdistributivity.
    pub fn ld_witness(&self) -> Option<[usize; 3]> {
        let n = self.size;
        for x in 1..=n {
            for y in 1..=n {
                let xy = self.op(x, y);
                for z in 1..=n {
                    if self.op(x, self.op(y, z)) != self.op(xy, self.op(x, z)) {
                        return Some([x, y, z]);
                    }
                }
            }
        }
        None
    }

    pub fn is_ld(&self) -> bool {
        self.ld_witness().is_none()
    }
}

/// Whether the unique table on `{1..N}` is left-selfdistributive.
pub fn is_ld_for_size(size: usize) -> Result<bool> {
    Ok(GeneralTable::new(size)?.is_ld())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaverTable {
    n: u32,
    table: GeneralTable,
}

impl LaverTable {
    pub fn new(n: u32) -> Result<Self> {
        Self::with_bound(n, DEFAULT_MAX_N)
    }

    pub fn with_bound(n: u32, max_n: u32) -> Result<Self> {
        if n > max_n {
            return Err(Error::Resource(format!(
                "A_{n} has 4^{n} entries; the bound is n <= {max_n}"
            )));
        }
        Ok(Self { n, table: GeneralTable::new(1usize << n)? })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn size(&self) -> usize {
        self.table.size
    }

    #[inline]
    pub fn op(&self, p: usize, q: usize) -> usize {
        self.table.op(p, q)
    }

    pub fn row(&self, p: usize) -> Vec<usize> {
        self.table.row(p)
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.rows()
    }

    pub fn general(&self) -> &GeneralTable {
        &self.table
    }

    pub fn to_magma(&self) -> FiniteMagma {
        self.table.to_magma().with_label(format!("laver:{}", self.n))
    }

    /// Least `q` with `p*q = 2^n`.
    pub fn period(&self, p: usize) -> Result<usize> {
        let size = self.size();
        if p == 0 || p > size {
            return domain(format!("p={p} outside 1..={size}"));
        }
        Ok((1..=size).find(|&q| self.op(p, q) == size).expect("every row reaches 2^n"))
    }

    /// `x_[1], ..., x_[k]` with `x_[j+1] = x_[j] * x`.
    pub fn left_powers(&self, x: usize, k: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(k);
        let mut cur = x;
        for _ in 0..k {
            out.push(cur);
            cur = self.op(cur, x);
        }
        out
    }

    /// Row `p` climbs strictly to `2^n` at its period, which is a power of two,
    /// and then repeats.
    pub fn row_is_periodic(&self, p: usize) -> bool {
        let size = self.size();
        let Ok(per) = self.period(p) else { return false };
        if !per.is_power_of_two() {
            return false;
        }
        let row = self.row(p);
        row[..per].windows(2).all(|w| w[0] < w[1]) && (per..size).all(|i| row[i] == row[i - per])
    }
}

/// `x mod 2^(n-1)` in `1..=2^(n-1)`.
pub fn project(n: u32, x: usize) -> Result<usize> {
    if n == 0 {
        return domain("projection needs n >= 1");
    }
    if x == 0 || x > 1usize << n {
        return domain(format!("x={x} outside 1..={}", 1usize << n));
    }
    let half = 1usize << (n - 1);
    Ok((x - 1) % half + 1)
}

/// Every period of `A_n` equals or doubles the period of its projection.
pub fn period_doubling_check(n: u32) -> Result<bool> {
    if n == 0 {
        return domain("period doubling needs n >= 1");
    }
    let big = LaverTable::new(n)?;
    let small = LaverTable::new(n - 1)?;
    for p in 1..=big.size() {
        let a = big.period(p)?;
        let b = small.period(project(n, p)?)?;
        if a != b && a != 2 * b {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_tables() {
        assert_eq!(GeneralTable::new(1).unwrap().rows(), vec![vec![1]]);
        assert_eq!(LaverTable::new(2).unwrap().row(1), vec![2, 4, 2, 4]);
        let a3 = LaverTable::new(3).unwrap();
        assert_eq!(a3.op(3, 2), 8);
        assert_eq!(a3.op(5, 3), 6);
        assert!(GeneralTable::new(0).is_err());
    }

    #[test]
    fn periods() {
        let a3 = LaverTable::new(3).unwrap();
        assert_eq!(a3.period(1).unwrap(), 4);
        assert_eq!(a3.period(7).unwrap(), 1);
        assert_eq!(a3.period(8).unwrap(), 8);
        assert!(a3.period(9).is_err());
    }

    #[test]
    fn projection_values() {
        let v: Vec<usize> = [2, 12, 14, 16].iter().map(|&x| project(4, x).unwrap()).collect();
        assert_eq!(v, vec![2, 4, 6, 8]);
        assert_eq!(project(1, 2).unwrap(), 1);
    }

    #[test]
    fn left_power_sequences() {
        assert_eq!(LaverTable::new(1).unwrap().left_powers(1, 3), vec![1, 2, 1]);
        assert_eq!(LaverTable::new(2).unwrap().left_powers(1, 5), vec![1, 2, 3, 4, 1]);
        assert_eq!(LaverTable::new(3).unwrap().left_powers(5, 1), vec![5]);
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(LaverTable::with_bound(5, 4), Err(Error::Resource(_))));
    }
}
