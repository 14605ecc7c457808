//! Exact scalars and dense univariate polynomials.

mod cyclotomic;
mod factor;
mod poly;
mod sturm;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use cyclotomic::cyclotomic;
pub use factor::{factor_integer, is_prime, sqrt_minus_one_mod};
pub use poly::{IntPoly, RatPoly};
pub use sturm::{sturm_chain, sturm_real_root_count};

/// Arbitrary-precision integer.
pub type Integer = BigInt;
/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Integer {
    BigInt::from(n)
}

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_from_int(n: Integer) -> Rational {
    BigRational::from_integer(n)
}

/// `Some(n)` when `r` is an integer.
pub fn as_integer(r: &Rational) -> Option<Integer> {
    r.is_integer().then(|| r.to_integer())
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Floor of the square root of a non-negative integer.
pub fn isqrt(n: &Integer) -> Integer {
    assert!(!n.is_negative(), "isqrt of a negative number");
    n.sqrt()
}

/// Exact square root when `n` is a perfect square.
pub fn exact_sqrt(n: &Integer) -> Option<Integer> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

pub fn is_squarefree_integer(n: i64) -> bool {
    if n == 0 {
        return false;
    }
    let mut m = n.unsigned_abs();
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// Positive divisors of `n`, in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Euler's totient, from the prime factorization of `n`.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1);
    factor_integer(&BigInt::from(n))
        .into_iter()
        .map(|(p, e)| {
            let p = p.to_u64().expect("prime factor of a u64 fits in u64");
            (p - 1) * p.pow(e - 1)
        })
        .product()
}

/// Non-negative residue of `a` modulo `m` (`m` nonzero).
pub fn modulo(a: &Integer, m: &Integer) -> Integer {
    a.mod_floor(&m.abs())
}

/// `(g, s, t)` with `g = gcd(a, b) = s a + t b`.
pub fn ext_gcd(a: &Integer, b: &Integer) -> (Integer, Integer, Integer) {
    let e = a.extended_gcd(b);
    (e.gcd, e.x, e.y)
}

pub(crate) fn lcm_of_denominators<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Integer {
    values.into_iter().fold(Integer::one(), |acc, r| acc.lcm(r.denom()))
}

pub(crate) fn gcd_of<'a>(values: impl IntoIterator<Item = &'a Integer>) -> Integer {
    values.into_iter().fold(Integer::zero(), |acc, v| acc.gcd(v))
}

/// Prints a rational as `n` or `n/d`.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisors_are_sorted_and_complete() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }

    #[test]
    fn totient_matches_gcd_count() {
        for n in 1..=100u64 {
            let brute = (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64;
            assert_eq!(euler_phi(n), brute, "phi({n})");
        }
    }

    #[test]
    fn squarefree_integers() {
        assert!(is_squarefree_integer(-1));
        assert!(is_squarefree_integer(30));
        assert!(!is_squarefree_integer(12));
        assert!(!is_squarefree_integer(0));
    }

    #[test]
    fn rationals_are_reduced() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &int(-3));
        assert_eq!(r.denom(), &int(2));
        assert_eq!(format_rational(&r), "-3/2");
        assert_eq!(exact_sqrt(&int(49)), Some(int(7)));
        assert_eq!(exact_sqrt(&int(50)), None);
    }
}
