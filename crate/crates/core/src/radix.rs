//! Positional expansions `x = sum r_k q^k` of hyperbolic and Gaussian integers.
//!
//! Three base families:
//!
//! * `HypSplit(a)`: `q = a e1 + (1 - a) e2`, digits `0..a^2 - a`.
//! * `HypGauss(a)`: `q = a + j`, digits `0..a^2 - 1`. For odd `a` only
//!   elements of `Z[j]` (components of equal parity) have expansions.
//! * `Gauss(a, +/-)`: `q = a +/- i`, digits `0..a^2 + 1`.
//!
//! Encoding repeatedly takes the unique digit `d` with `q | x - d` and divides.
//! Nothing guarantees that this stops for every base and input, so a repeated
//! state or a run of 10^4 digits is reported as `NonTermination`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer as _;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::arith::{ext_gcd, int, rat_from_int, Integer};
use crate::element::BicomplexElement;
use crate::error::{Error, Result};
use crate::integers::GaussInt;
use crate::scalar::Scalar;

pub const MAX_DIGITS: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RadixBase {
    HypSplit(i64),
    HypGauss(i64),
    /// `a + i` when the flag is true, `a - i` otherwise.
    Gauss(i64, bool),
}

impl RadixBase {
    pub fn hyp_split(a: i64) -> Result<Self> {
        check_range(a, -2, "hsplit")?;
        Ok(RadixBase::HypSplit(a))
    }

    pub fn hyp_gauss(a: i64) -> Result<Self> {
        check_range(a, -2, "hgauss")?;
        Ok(RadixBase::HypGauss(a))
    }

    pub fn gauss(a: i64, plus: bool) -> Result<Self> {
        check_range(a, -1, "gauss")?;
        Ok(RadixBase::Gauss(a, plus))
    }

    /// Size of the digit set, equal to `|N(q)|`.
    pub fn digit_count(&self) -> u64 {
        match *self {
            RadixBase::HypSplit(a) => (a * a - a) as u64,
            RadixBase::HypGauss(a) => (a * a - 1) as u64,
            RadixBase::Gauss(a, _) => (a * a + 1) as u64,
        }
    }

    pub fn is_hyperbolic(&self) -> bool {
        !matches!(self, RadixBase::Gauss(..))
    }

    /// `q` itself.
    pub fn radix(&self) -> RadixValue {
        match *self {
            RadixBase::HypSplit(a) => RadixValue::Hyperbolic(int(a), int(1 - a)),
            RadixBase::HypGauss(a) => RadixValue::Hyperbolic(int(a + 1), int(a - 1)),
            RadixBase::Gauss(a, plus) => RadixValue::Gaussian(GaussInt::from_i64(a, if plus { 1 } else { -1 })),
        }
    }
}

fn check_range(a: i64, max: i64, name: &str) -> Result<()> {
    // keeps a^2 well inside i64
    if a > max || a < -1_000_000 {
        return Err(Error::InvalidArgument(format!("{name} base needs -10^6 <= a <= {max}, got {a}")));
    }
    Ok(())
}

impl fmt::Display for RadixBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RadixBase::HypSplit(a) => write!(f, "hsplit:{a}"),
            RadixBase::HypGauss(a) => write!(f, "hgauss:{a}"),
            RadixBase::Gauss(a, plus) => write!(f, "gauss:{a}{}", if *plus { '+' } else { '-' }),
        }
    }
}

impl FromStr for RadixBase {
    type Err = Error;

    /// `hsplit:A`, `hgauss:A`, `gauss:A+` or `gauss:A-`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("unknown base '{s}', expected hsplit:A, hgauss:A or gauss:A+/-"));
        let (family, rest) = s.trim().split_once(':').ok_or_else(bad)?;
        match family {
            "hsplit" => RadixBase::hyp_split(rest.parse().map_err(|_| bad())?),
            "hgauss" => RadixBase::hyp_gauss(rest.parse().map_err(|_| bad())?),
            "gauss" => {
                let plus = match rest.chars().last() {
                    Some('+') => true,
                    Some('-') => false,
                    _ => return Err(bad()),
                };
                RadixBase::gauss(rest[..rest.len() - 1].parse().map_err(|_| bad())?, plus)
            }
            _ => Err(bad()),
        }
    }
}

/// `{0, 1, ..., |N(q)| - 1}`.
pub fn digit_set(base: RadixBase) -> Vec<u64> {
    (0..base.digit_count()).collect()
}

/// An integer of the ring a base acts on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RadixValue {
    /// `x1 e1 + x2 e2`.
    Hyperbolic(Integer, Integer),
    Gaussian(GaussInt),
}

impl RadixValue {
    pub fn hyperbolic(x1: i64, x2: i64) -> Self {
        RadixValue::Hyperbolic(int(x1), int(x2))
    }

    /// `u + v j`.
    pub fn hyperbolic_cartesian(u: i64, v: i64) -> Self {
        RadixValue::Hyperbolic(int(u) + int(v), int(u) - int(v))
    }

    pub fn gaussian(re: i64, im: i64) -> Self {
        RadixValue::Gaussian(GaussInt::from_i64(re, im))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RadixValue::Hyperbolic(a, b) => a.is_zero() && b.is_zero(),
            RadixValue::Gaussian(g) => g.is_zero(),
        }
    }

    pub fn to_element(&self) -> BicomplexElement {
        match self {
            RadixValue::Hyperbolic(a, b) => {
                BicomplexElement::new(Scalar::Rat(rat_from_int(a.clone())), Scalar::Rat(rat_from_int(b.clone())))
            }
            RadixValue::Gaussian(g) => BicomplexElement::new(g.to_scalar(), g.to_scalar()),
        }
    }

    /// Reads an element as a hyperbolic integer (`hyperbolic`) or as a Gaussian integer.
    pub fn from_element(w: &BicomplexElement, hyperbolic: bool) -> Result<Self> {
        let not_integral = || Error::NotIntegral(w.to_string());
        if hyperbolic {
            let part = |c: &Scalar| match GaussInt::from_scalar(c) {
                Some(g) if g.im.is_zero() => Ok(g.re),
                _ => Err(not_integral()),
            };
            let (c1, c2) = w.components();
            return Ok(RadixValue::Hyperbolic(part(c1)?, part(c2)?));
        }
        let (c1, c2) = w.components();
        let g = GaussInt::from_scalar(c1).ok_or_else(not_integral)?;
        if GaussInt::from_scalar(c2).as_ref() != Some(&g) {
            return Err(Error::InvalidArgument(format!("{w} is not a Gaussian integer (it involves j)")));
        }
        Ok(RadixValue::Gaussian(g))
    }
}

impl fmt::Display for RadixValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_element().fmt(f)
    }
}

/// Digits, least significant first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigitString {
    pub digits: Vec<u64>,
    pub base: RadixBase,
}

impl DigitString {
    pub fn new(digits: Vec<u64>, base: RadixBase) -> Result<Self> {
        let size = base.digit_count();
        if let Some(&digit) = digits.iter().find(|&&d| d >= size) {
            return Err(Error::DigitOutOfRange { digit, size });
        }
        Ok(DigitString { digits, base })
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Most significant digit first, separated by commas when a digit exceeds 9.
    pub fn msb_string(&self) -> String {
        let sep = if self.base.digit_count() > 10 { "," } else { "" };
        self.digits.iter().rev().map(u64::to_string).collect::<Vec<_>>().join(sep)
    }
}

impl fmt::Display for DigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.msb_string(), self.base)
    }
}

/// Digit and quotient for `q = m1 e1 + m2 e2` with coprime `m1`, `m2`:
/// `d = x1 mod m1`, `d = x2 mod m2` by the Chinese remainder theorem.
fn split_step(x1: &Integer, x2: &Integer, m1: Integer, m2: Integer) -> (u64, RadixValue) {
    let (_, s, _) = ext_gcd(&m2, &m1);
    // d = x2 + m2 t with m2 t = x1 - x2 mod m1
    let t = ((x1 - x2) * s).mod_floor(&m1.abs());
    let d = (x2 + &m2 * t).mod_floor(&(&m1 * &m2).abs());
    let next = RadixValue::Hyperbolic((x1 - &d) / m1, (x2 - &d) / m2);
    (d.to_u64().expect("digit fits"), next)
}

/// The digit `d` of `x` and the quotient `(x - d) / q`.
fn step(x: &RadixValue, base: RadixBase) -> Result<(u64, RadixValue)> {
    let mismatch = || Error::InvalidArgument(format!("{x} does not match base {base}"));
    match (base, x) {
        (RadixBase::HypSplit(a), RadixValue::Hyperbolic(x1, x2)) => Ok(split_step(x1, x2, int(a), int(1 - a))),
        // a + 1 and a - 1 are coprime: Z_h / (q) is Z/(a+1) x Z/(a-1)
        (RadixBase::HypGauss(a), RadixValue::Hyperbolic(x1, x2)) if a % 2 == 0 => {
            Ok(split_step(x1, x2, int(a + 1), int(a - 1)))
        }
        (RadixBase::HypGauss(a), RadixValue::Hyperbolic(x1, x2)) => {
            // both component radices are even; only Z[j] has a residue system {0..a^2-2}
            if !(x1 - x2).is_even() {
                return Err(Error::NotRepresentable(format!("{x} (not in Z[j])")));
            }
            let (u, v): (Integer, Integer) = ((x1 + x2) / 2, (x1 - x2) / 2);
            let n = int(a * a - 1);
            let d = (&u - &v * a).mod_floor(&n);
            // (u - d + v j)(a - j) / (a^2 - 1)
            let w = &u - &d;
            let nu = (&w * a - &v) / &n;
            let nv = (&v * a - &w) / &n;
            Ok((d.to_u64().unwrap(), RadixValue::Hyperbolic(&nu + &nv, nu - nv)))
        }
        (RadixBase::Gauss(a, plus), RadixValue::Gaussian(g)) => {
            let s = if plus { 1 } else { -1 };
            let n = int(a * a + 1);
            // i = -s a mod q
            let d = (&g.re - &g.im * (s * a)).mod_floor(&n);
            let q = GaussInt::from_i64(a, s);
            let next = GaussInt::new(&g.re - &d, g.im.clone()).exact_div(&q).expect("q divides x - d");
            Ok((d.to_u64().unwrap(), RadixValue::Gaussian(next)))
        }
        _ => Err(mismatch()),
    }
}

/// The expansion of `x`; `0` encodes as the single digit `0`.
pub fn encode(x: &RadixValue, base: RadixBase) -> Result<DigitString> {
    if x.is_zero() {
        step(x, base)?;
        return Ok(DigitString { digits: vec![0], base });
    }
    let mut seen = HashSet::new();
    let mut digits = Vec::new();
    let mut cur = x.clone();
    while !cur.is_zero() {
        if digits.len() >= MAX_DIGITS {
            return Err(Error::NonTermination(format!("{x} in base {base}: no end after {MAX_DIGITS} digits")));
        }
        if !seen.insert(cur.clone()) {
            return Err(Error::NonTermination(format!(
                "{x} in base {base}: remainder {cur} repeats after {} digits",
                digits.len()
            )));
        }
        let (d, next) = step(&cur, base)?;
        digits.push(d);
        cur = next;
    }
    Ok(DigitString { digits, base })
}

/// `sum r_k q^k` by Horner's rule.
pub fn decode(s: &DigitString) -> Result<RadixValue> {
    let size = s.base.digit_count();
    if let Some(&digit) = s.digits.iter().find(|&&d| d >= size) {
        return Err(Error::DigitOutOfRange { digit, size });
    }
    let mut acc = match s.base.radix() {
        RadixValue::Hyperbolic(..) => RadixValue::hyperbolic(0, 0),
        RadixValue::Gaussian(_) => RadixValue::gaussian(0, 0),
    };
    for &d in s.digits.iter().rev() {
        let d = Integer::from(d);
        acc = match (acc, s.base.radix()) {
            (RadixValue::Hyperbolic(a1, a2), RadixValue::Hyperbolic(q1, q2)) => {
                RadixValue::Hyperbolic(a1 * q1 + &d, a2 * q2 + &d)
            }
            (RadixValue::Gaussian(g), RadixValue::Gaussian(q)) => {
                let m = g.mul(&q);
                RadixValue::Gaussian(GaussInt::new(m.re + d, m.im))
            }
            _ => unreachable!("accumulator matches the base"),
        };
    }
    Ok(acc)
}
