use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{factor_integer, rat_from_int, sqrt_minus_one_mod, Integer};
use crate::error::{Error, Result};
use crate::scalar::{GaussRat, Scalar};

/// A Gaussian integer `re + im*i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GaussInt {
    pub re: Integer,
    pub im: Integer,
}

impl GaussInt {
    pub fn new(re: Integer, im: Integer) -> Self {
        GaussInt { re, im }
    }

    pub fn from_i64(re: i64, im: i64) -> Self {
        GaussInt::new(re.into(), im.into())
    }

    pub fn one() -> Self {
        GaussInt::from_i64(1, 0)
    }

    pub fn i() -> Self {
        GaussInt::from_i64(0, 1)
    }

    /// `1, i, -1, -i`.
    pub fn units() -> [GaussInt; 4] {
        [(1, 0), (0, 1), (-1, 0), (0, -1)].map(|(a, b)| GaussInt::from_i64(a, b))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    pub fn norm(&self) -> Integer {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> Self {
        GaussInt::new(self.re.clone(), -&self.im)
    }

    pub fn add(&self, o: &GaussInt) -> GaussInt {
        GaussInt::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub fn sub(&self, o: &GaussInt) -> GaussInt {
        GaussInt::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub fn mul(&self, o: &GaussInt) -> GaussInt {
        GaussInt::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }

    pub fn neg(&self) -> GaussInt {
        GaussInt::new(-&self.re, -&self.im)
    }

    pub fn scale(&self, k: &Integer) -> GaussInt {
        GaussInt::new(&self.re * k, &self.im * k)
    }

    pub fn pow(&self, mut k: u32) -> GaussInt {
        let mut base = self.clone();
        let mut acc = GaussInt::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// `self / o` when the division is exact.
    pub fn exact_div(&self, o: &GaussInt) -> Option<GaussInt> {
        let n = o.norm();
        if n.is_zero() {
            return None;
        }
        let num = self.mul(&o.conj());
        if (&num.re % &n).is_zero() && (&num.im % &n).is_zero() {
            Some(GaussInt::new(num.re / &n, num.im / &n))
        } else {
            None
        }
    }

    pub fn divides(&self, o: &GaussInt) -> bool {
        o.exact_div(self).is_some()
    }

    /// Quotient rounded to the nearest lattice point.
    pub fn div_round(&self, o: &GaussInt) -> Result<GaussInt> {
        let n = o.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = self.mul(&o.conj());
        let two_n: Integer = 2 * &n;
        let round = |x: &Integer| -> Integer {
            let t: Integer = x * 2u32 + &n;
            t.div_floor(&two_n)
        };
        Ok(GaussInt::new(round(&num.re), round(&num.im)))
    }

    pub fn gcd(&self, o: &GaussInt) -> GaussInt {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let q = a.div_round(&b).expect("b nonzero");
            let r = a.sub(&q.mul(&b));
            a = b;
            b = r;
        }
        a.canonical().1
    }

    /// `(u, g)` with `self = u * g`, `g` in the first quadrant (`re > 0`, `im >= 0`).
    pub fn canonical(&self) -> (GaussInt, GaussInt) {
        if self.is_zero() {
            return (GaussInt::one(), self.clone());
        }
        for u in GaussInt::units() {
            // g = self * u^-1 = self * conj(u)
            let g = self.mul(&u.conj());
            if g.re.is_positive() && !g.im.is_negative() {
                return (u, g);
            }
        }
        unreachable!("every nonzero Gaussian integer has a first-quadrant associate")
    }

    pub fn to_scalar(&self) -> Scalar {
        Scalar::Gauss(GaussRat::new(rat_from_int(self.re.clone()), rat_from_int(self.im.clone())))
    }

    /// The Gaussian integer behind a scalar of `Q` or `Q(i)`.
    pub fn from_scalar(s: &Scalar) -> Option<GaussInt> {
        let g = s.as_gauss()?;
        (g.re.is_integer() && g.im.is_integer()).then(|| GaussInt::new(g.re.to_integer(), g.im.to_integer()))
    }

    /// Is this a Gaussian prime? Norm `p`, or an associate of an inert `p = 3 mod 4`.
    pub fn is_prime(&self) -> bool {
        let n = self.norm();
        if crate::arith::is_prime(&n) {
            return true;
        }
        let p = if self.re.is_zero() {
            self.im.abs()
        } else if self.im.is_zero() {
            self.re.abs()
        } else {
            return false;
        };
        crate::arith::is_prime(&p) && (&p % 4u32).to_u32() == Some(3)
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_scalar().fmt(f)
    }
}

/// `unit * prod factor^exp` with first-quadrant factors sorted by norm, then value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussFactorization {
    pub unit: GaussInt,
    pub factors: Vec<(GaussInt, u32)>,
}

impl GaussFactorization {
    pub fn recompose(&self) -> GaussInt {
        self.factors.iter().fold(self.unit.clone(), |acc, (p, e)| acc.mul(&p.pow(*e)))
    }
}

/// Strips every power of `p` from `g`, returning the exponent.
fn strip(g: &mut GaussInt, p: &GaussInt) -> u32 {
    let mut e = 0;
    while let Some(q) = g.exact_div(p) {
        *g = q;
        e += 1;
    }
    e
}

/// Splits a rational prime `p = 1 mod 4` as `pi * conj(pi)` via `gcd(p, r + i)`
/// with `r^2 = -1 mod p`.
pub fn split_prime(p: &Integer) -> Option<GaussInt> {
    let r = sqrt_minus_one_mod(p)?;
    let g = GaussInt::new(p.clone(), BigInt::zero()).gcd(&GaussInt::new(r, BigInt::one()));
    (g.norm() == *p).then_some(g)
}

/// Factorization in `Z[i]` driven by the factorization of the norm.
pub fn factor_gaussian(g: &GaussInt) -> Result<GaussFactorization> {
    if g.is_zero() {
        return Err(Error::InvalidArgument("cannot factor zero".into()));
    }
    let mut rest = g.clone();
    let mut factors = Vec::new();
    for (p, _) in factor_integer(&g.norm()) {
        let primes: Vec<GaussInt> = match (&p % 4u32).to_u32() {
            Some(2) => vec![GaussInt::from_i64(1, 1)],
            Some(3) => vec![GaussInt::new(p.clone(), BigInt::zero())],
            _ => {
                let pi = split_prime(&p).expect("p = 1 mod 4 splits");
                let other = pi.conj().canonical().1;
                vec![pi, other]
            }
        };
        for q in primes {
            let e = strip(&mut rest, &q);
            if e > 0 {
                factors.push((q, e));
            }
        }
    }
    debug_assert!(rest.is_unit());
    factors.sort_by(|(a, _), (b, _)| a.norm().cmp(&b.norm()).then_with(|| a.cmp(b)));
    Ok(GaussFactorization { unit: rest, factors })
}
