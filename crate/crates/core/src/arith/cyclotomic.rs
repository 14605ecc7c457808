use num_traits::One;

use super::{divisors, IntPoly, RatPoly, Rational};
use crate::error::{Error, Result};

/// `Phi_n`, by dividing `X^n - 1` by `Phi_d` for every proper divisor `d`.
pub fn cyclotomic(n: u64) -> Result<IntPoly> {
    if n < 1 {
        return Err(Error::InvalidArgument("cyclotomic index must be at least 1".into()));
    }
    usize::try_from(n).map_err(|_| Error::InvalidArgument("index too large".into()))?;
    // divisors come sorted, so every Phi_d needed is already in the table
    let divs = divisors(n);
    let mut table: Vec<RatPoly> = Vec::with_capacity(divs.len());
    for (idx, &m) in divs.iter().enumerate() {
        let mut num = &RatPoly::monomial(Rational::one(), m as usize) - &RatPoly::one();
        for (jdx, &d) in divs[..idx].iter().enumerate() {
            if m % d == 0 {
                num = num.exact_div(&table[jdx])?.expect("Phi_d divides X^m - 1 for d | m");
            }
        }
        table.push(num);
    }
    Ok(table.pop().expect("n has at least one divisor").content_primitive()?.1)
}
