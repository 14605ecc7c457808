use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::{format_rational, gcd_of, lcm_of_denominators, rat_from_int, Integer, Rational};
use crate::error::{Error, Result};

/// Dense polynomial over `Q`, coefficients lowest degree first.
///
/// The zero polynomial has no coefficients; otherwise the last coefficient
/// is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn from_integers(coeffs: &[Integer]) -> Self {
        Self::new(coeffs.iter().cloned().map(rat_from_int).collect())
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `X - root`.
    pub fn linear(root: &Rational) -> Self {
        Self::new(vec![-root.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &RatPoly) -> Result<(RatPoly, RatPoly)> {
        let dlead = divisor.leading().ok_or(Error::DivisionByZero)?;
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return Ok((RatPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - ddeg];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + ddeg] / dlead;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(ddeg);
        Ok((RatPoly::new(quot), RatPoly::new(rem)))
    }

    /// `Some(q)` when `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &RatPoly) -> Result<Option<RatPoly>> {
        let (q, r) = self.div_rem(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    pub fn divides(&self, other: &RatPoly) -> bool {
        matches!(other.exact_div(self), Ok(Some(_)))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * Rational::from_integer(BigInt::from(k))).collect(),
        )
    }

    pub fn monic(&self) -> Result<Self> {
        let lead = self.leading().ok_or(Error::ZeroPolynomial)?;
        Ok(self.scale(&lead.recip()))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &RatPoly) -> Result<RatPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = if r.is_zero() { r } else { r.monic()? };
        }
        a.monic()
    }

    /// Monic least common multiple of two nonzero polynomials.
    pub fn lcm(&self, other: &RatPoly) -> Result<RatPoly> {
        if self.is_zero() || other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(other)?;
        let (q, _) = (self * other).div_rem(&g)?;
        q.monic()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Splits `self` into `scale * prim` with `prim` primitive in `Z[X]` and
    /// positive leading coefficient; `scale` carries the sign of the lead.
    pub fn content_primitive(&self) -> Result<(Rational, IntPoly)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let den = lcm_of_denominators(&self.coeffs);
        let ints: Vec<Integer> = self.coeffs.iter().map(|c| (c * rat_from_int(den.clone())).to_integer()).collect();
        let mut content = gcd_of(&ints);
        if ints.last().is_some_and(Signed::is_negative) {
            content = -content;
        }
        let prim = ints.iter().map(|c| c / &content).collect();
        Ok((Rational::new(content, den), IntPoly { coeffs: prim }))
    }

    pub(crate) fn scale_positive(&self) -> Self {
        // Primitive part up to a *positive* factor, so signs are preserved.
        match self.content_primitive() {
            Ok((scale, prim)) if scale.is_negative() => -prim.to_rat(),
            Ok((_, prim)) => prim.to_rat(),
            Err(_) => RatPoly::zero(),
        }
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }
}

impl Neg for RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatPoly {
            type Output = RatPoly;
            fn $m(self, rhs: RatPoly) -> RatPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = match (first, c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let mag = c.abs();
            let var = match k {
                0 => String::new(),
                1 => "X".to_string(),
                _ => format!("X^{k}"),
            };
            let term = if k == 0 {
                format_rational(&mag)
            } else if mag.is_one() {
                var
            } else {
                format!("{}*{}", format_rational(&mag), var)
            };
            write!(f, "{sign}{term}")?;
            first = false;
        }
        Ok(())
    }
}

/// Nonzero primitive integer polynomial with positive leading coefficient.
///
/// This is the normal form of minimal polynomials throughout the crate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<Integer>,
}

impl IntPoly {
    /// Validates the normal form; use [`IntPoly::primitive_part`] to normalize.
    pub fn new(coeffs: Vec<Integer>) -> Result<Self> {
        let p = RatPoly::from_integers(&coeffs);
        let Some(lead) = p.leading() else {
            return Err(Error::ZeroPolynomial);
        };
        if coeffs.last().is_some_and(Zero::is_zero) {
            return Err(Error::InvalidArgument("trailing zero coefficient".into()));
        }
        if !lead.is_positive() {
            return Err(Error::InvalidArgument("leading coefficient must be positive".into()));
        }
        if !gcd_of(&coeffs).is_one() {
            return Err(Error::InvalidArgument("coefficients are not coprime".into()));
        }
        Ok(IntPoly { coeffs })
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Primitive part with positive leading coefficient of any nonzero integer polynomial.
    pub fn primitive_part(coeffs: &[Integer]) -> Result<Self> {
        RatPoly::from_integers(coeffs).content_primitive().map(|(_, p)| p)
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &Integer {
        self.coeffs.last().expect("IntPoly is never zero")
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::from_integers(&self.coeffs)
    }

    /// True iff `gcd(p, p')` is constant.
    pub fn is_squarefree(&self) -> Result<bool> {
        if self.degree() == 0 {
            return Err(Error::ConstantPolynomial);
        }
        let p = self.to_rat();
        Ok(p.gcd(&p.derivative())?.degree() == Some(0))
    }

    pub fn eval(&self, x: &Integer) -> Integer {
        self.coeffs.iter().rev().fold(Integer::zero(), |acc, c| acc * x + c)
    }

    /// Product of two normal-form polynomials, again in normal form (Gauss's lemma).
    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        let prod = &self.to_rat() * &other.to_rat();
        prod.content_primitive().expect("nonzero product").1
    }

    pub fn pow(&self, k: u32) -> IntPoly {
        self.to_rat().pow(k).content_primitive().expect("nonzero power").1
    }

    /// Polynomial whose coefficients are all multiplied through by the lcm of the content.
    pub fn content_of(coeffs: &[Integer]) -> Integer {
        coeffs.iter().fold(Integer::zero(), |acc, c| acc.gcd(c))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_rat().fmt(f)
    }
}
