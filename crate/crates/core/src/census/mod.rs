//! Counting and enumerating the `n^2` bicomplex roots of a minimal polynomial.

mod numeric;
mod roots;

pub use numeric::{numeric_roots, real_count};
pub use roots::{Locus, LocusFactors, LocusSizes, RootSet};

use crate::arith::{cyclotomic, sturm_real_root_count, IntPoly};
use crate::error::{Error, Result};

/// Root counts by locus for a squarefree polynomial of degree `n` with `r`
/// real roots and `s` conjugate pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Census {
    pub n: u64,
    pub r: u64,
    pub s: u64,
    pub two_s_i: u64,
    pub two_s_j: u64,
    pub two_s_k: u64,
    pub four_d: u64,
}

impl Census {
    /// Fills in the derived counts from `n` and `r`.
    pub fn from_counts(n: u64, r: u64) -> Result<Census> {
        if r > n || !(n - r).is_multiple_of(2) {
            return Err(Error::InvalidArgument(format!("no polynomial of degree {n} has {r} real roots")));
        }
        let s = (n - r) / 2;
        Ok(Census {
            n,
            r,
            s,
            two_s_i: 2 * s,
            two_s_j: r * r.saturating_sub(1),
            two_s_k: 2 * s,
            four_d: 4 * s * (s + r).saturating_sub(1),
        })
    }

    /// Sum over the five loci; equals `n^2`.
    pub fn total(&self) -> u64 {
        self.r + self.two_s_i + self.two_s_j + self.two_s_k + self.four_d
    }

    pub fn holds(&self) -> bool {
        self.n == self.r + 2 * self.s
            && self.two_s_j == self.r * self.r.saturating_sub(1)
            && self.two_s_i == 2 * self.s
            && self.two_s_k == 2 * self.s
            && self.four_d == 4 * self.s * (self.s + self.r).saturating_sub(1)
            && self.total() == self.n * self.n
    }
}

/// Census of a squarefree polynomial; `r` comes from a Sturm count.
pub fn census(p: &IntPoly) -> Result<Census> {
    let r = sturm_real_root_count(p)? as u64;
    Census::from_counts(p.degree() as u64, r)
}

/// Census of `Phi_n`, `n >= 2`.
pub fn census_cyclotomic(n: u64) -> Result<Census> {
    if n < 2 {
        return Err(Error::InvalidArgument("cyclotomic census needs n >= 2".into()));
    }
    census(&cyclotomic(n)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(coeffs: &[i64]) -> Census {
        census(&IntPoly::from_i64(coeffs).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        let k = c(&[-8, 4, -2, 1]);
        assert_eq!((k.n, k.r, k.s), (3, 1, 1));
        assert_eq!((k.two_s_i, k.two_s_j, k.two_s_k, k.four_d), (2, 0, 2, 4));
        assert_eq!(k.total(), 9);
        let k = c(&[1, 0, 1]);
        assert_eq!((k.r, k.two_s_i, k.two_s_j, k.two_s_k, k.four_d), (0, 2, 0, 2, 0));
        let k = c(&[-2, 0, 1]);
        assert_eq!((k.r, k.two_s_i, k.two_s_j, k.two_s_k, k.four_d), (2, 0, 2, 0, 0));
        assert!(census(&IntPoly::from_i64(&[1, -2, 1]).unwrap()).is_err());
    }

    #[test]
    fn cyclotomic_census() {
        assert_eq!(census_cyclotomic(4).unwrap().total(), 4);
        let k = census_cyclotomic(2).unwrap();
        assert_eq!((k.n, k.r, k.total()), (1, 1, 1));
        let k = census_cyclotomic(5).unwrap();
        assert_eq!((k.total(), k.r, k.s, k.four_d), (16, 0, 2, 8));
        assert!(census_cyclotomic(1).is_err());
    }

    #[test]
    fn formulas_hold_for_all_small_shapes() {
        for n in 1..=12 {
            for r in (n % 2..=n).step_by(2) {
                let k = Census::from_counts(n, r).unwrap();
                assert!(k.holds(), "n={n} r={r}");
            }
        }
        assert!(Census::from_counts(3, 2).is_err());
    }
}
