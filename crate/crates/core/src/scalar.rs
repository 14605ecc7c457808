//! Component scalars: rationals, Gaussian rationals and quadratic rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::arith::{format_rational, is_squarefree_integer, Rational};
use crate::error::{Error, Result};

/// `re + im*i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussRat {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRat {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRat { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussRat::new(Rational::from_integer(re.into()), Rational::from_integer(im.into()))
    }

    pub fn real(re: Rational) -> Self {
        GaussRat::new(re, Rational::zero())
    }

    pub fn i() -> Self {
        GaussRat::new(Rational::zero(), Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -self.im.clone())
    }

    /// `|z|^2`.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(GaussRat::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        GaussRat::new(&self.re * c, &self.im * c)
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = GaussRat::real(Rational::one());
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }
}

impl Add for &GaussRat {
    type Output = GaussRat;
    fn add(self, o: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Sub for &GaussRat {
    type Output = GaussRat;
    fn sub(self, o: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Mul for &GaussRat {
    type Output = GaussRat;
    fn mul(self, o: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re.clone(), -self.im.clone())
    }
}

/// Writes `a + b*u` compactly: zero parts dropped, unit coefficients elided.
fn write_binomial(f: &mut fmt::Formatter<'_>, a: &Rational, b: &Rational, unit: &str) -> fmt::Result {
    if b.is_zero() {
        return f.write_str(&format_rational(a));
    }
    let mag = b.abs();
    let coef = if mag.is_one() { unit.to_string() } else { format!("{}*{}", format_rational(&mag), unit) };
    match (a.is_zero(), b.is_negative()) {
        (true, false) => write!(f, "{coef}"),
        (true, true) => write!(f, "-{coef}"),
        (false, false) => write!(f, "{}+{coef}", format_rational(a)),
        (false, true) => write!(f, "{}-{coef}", format_rational(a)),
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_binomial(f, &self.re, &self.im, "i")
    }
}

/// `a + b*sqrt(D)` for a squarefree `D` other than 0 and 1.
///
/// Negative `D` encodes the imaginary field `Q(i sqrt|D|)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadRat {
    d: i64,
    pub a: Rational,
    pub b: Rational,
}

impl QuadRat {
    pub fn new(d: i64, a: Rational, b: Rational) -> Result<Self> {
        check_radicand(d)?;
        Ok(QuadRat { d, a, b })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    fn same_field(&self, o: &QuadRat) -> Result<()> {
        if self.d == o.d {
            Ok(())
        } else {
            Err(Error::KindMismatch(ScalarKind::Quadratic(self.d), ScalarKind::Quadratic(o.d)))
        }
    }

    fn with(&self, a: Rational, b: Rational) -> QuadRat {
        QuadRat { d: self.d, a, b }
    }

    pub fn checked_add(&self, o: &QuadRat) -> Result<QuadRat> {
        self.same_field(o)?;
        Ok(self.with(&self.a + &o.a, &self.b + &o.b))
    }

    pub fn checked_sub(&self, o: &QuadRat) -> Result<QuadRat> {
        self.same_field(o)?;
        Ok(self.with(&self.a - &o.a, &self.b - &o.b))
    }

    pub fn checked_mul(&self, o: &QuadRat) -> Result<QuadRat> {
        self.same_field(o)?;
        let d = Rational::from_integer(self.d.into());
        Ok(self.with(&self.a * &o.a + d * &self.b * &o.b, &self.a * &o.b + &self.b * &o.a))
    }

    /// Galois conjugate `a - b*sqrt(D)`.
    pub fn galois(&self) -> QuadRat {
        self.with(self.a.clone(), -self.b.clone())
    }

    /// `N(a + b sqrt D) = a^2 - D b^2`.
    pub fn field_norm(&self) -> Rational {
        &self.a * &self.a - Rational::from_integer(self.d.into()) * &self.b * &self.b
    }

    pub fn inv(&self) -> Result<QuadRat> {
        let n = self.field_norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.with(&self.a / &n, -(&self.b / &n)))
    }
}

impl fmt::Display for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_binomial(f, &self.a, &self.b, &format!("sqrt({})", self.d))
    }
}

fn check_radicand(d: i64) -> Result<()> {
    if d == 0 || d == 1 || !is_squarefree_integer(d) {
        return Err(Error::InvalidArgument(format!("radicand {d} must be squarefree and not 0 or 1")));
    }
    Ok(())
}

/// The field a component scalar lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScalarKind {
    Rational,
    Gaussian,
    Quadratic(i64),
}

impl ScalarKind {
    /// `u^2` for the generator `u` (`i` or `sqrt D`); `None` over `Q`.
    pub fn radicand(self) -> Option<i64> {
        match self {
            ScalarKind::Rational => None,
            ScalarKind::Gaussian => Some(-1),
            ScalarKind::Quadratic(d) => Some(d),
        }
    }

    /// Whether complex conjugation is the identity on this field.
    pub fn is_real(self) -> bool {
        self.radicand().is_none_or(|d| d > 0)
    }
}

impl fmt::Display for ScalarKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarKind::Rational => f.write_str("Q"),
            ScalarKind::Gaussian => f.write_str("Q(i)"),
            ScalarKind::Quadratic(d) => write!(f, "Q(sqrt({d}))"),
        }
    }
}

/// An element of `Q`, `Q(i)` or `Q(sqrt D)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(Rational),
    Gauss(GaussRat),
    Quad(QuadRat),
}

impl Scalar {
    pub fn kind(&self) -> ScalarKind {
        match self {
            Scalar::Rat(_) => ScalarKind::Rational,
            Scalar::Gauss(_) => ScalarKind::Gaussian,
            Scalar::Quad(q) => ScalarKind::Quadratic(q.d),
        }
    }

    pub fn int(n: i64) -> Self {
        Scalar::Rat(Rational::from_integer(n.into()))
    }

    pub fn gauss(re: i64, im: i64) -> Self {
        Scalar::Gauss(GaussRat::from_ints(re, im))
    }

    /// `a + b sqrt(D)` with integer parts.
    pub fn quad(d: i64, a: i64, b: i64) -> Result<Self> {
        QuadRat::new(d, Rational::from_integer(a.into()), Rational::from_integer(b.into())).map(Scalar::Quad)
    }

    /// Embeds a rational into the field of the given kind.
    pub fn from_rational(kind: ScalarKind, r: Rational) -> Self {
        match kind {
            ScalarKind::Rational => Scalar::Rat(r),
            ScalarKind::Gaussian => Scalar::Gauss(GaussRat::real(r)),
            ScalarKind::Quadratic(d) => Scalar::Quad(QuadRat { d, a: r, b: Rational::zero() }),
        }
    }

    pub fn zero(kind: ScalarKind) -> Self {
        Self::from_rational(kind, Rational::zero())
    }

    pub fn one(kind: ScalarKind) -> Self {
        Self::from_rational(kind, Rational::one())
    }

    /// `(a, b)` with the value `a + b*u`; `b = 0` over `Q`.
    pub fn coords(&self) -> (Rational, Rational) {
        match self {
            Scalar::Rat(r) => (r.clone(), Rational::zero()),
            Scalar::Gauss(g) => (g.re.clone(), g.im.clone()),
            Scalar::Quad(q) => (q.a.clone(), q.b.clone()),
        }
    }

    /// Rebuilds a scalar of `kind` from its coordinates.
    pub(crate) fn from_coords(kind: ScalarKind, a: Rational, b: Rational) -> Self {
        match kind {
            ScalarKind::Rational => Scalar::Rat(a),
            ScalarKind::Gaussian => Scalar::Gauss(GaussRat::new(a, b)),
            ScalarKind::Quadratic(d) => Scalar::Quad(QuadRat { d, a, b }),
        }
    }

    pub fn is_zero(&self) -> bool {
        let (a, b) = self.coords();
        a.is_zero() && b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.coords().1.is_zero()
    }

    fn same_kind(&self, o: &Scalar) -> Result<ScalarKind> {
        let (k1, k2) = (self.kind(), o.kind());
        if k1 == k2 {
            Ok(k1)
        } else {
            Err(Error::KindMismatch(k1, k2))
        }
    }

    pub fn checked_add(&self, o: &Scalar) -> Result<Scalar> {
        let kind = self.same_kind(o)?;
        let ((a1, b1), (a2, b2)) = (self.coords(), o.coords());
        Ok(Scalar::from_coords(kind, a1 + a2, b1 + b2))
    }

    pub fn checked_sub(&self, o: &Scalar) -> Result<Scalar> {
        let kind = self.same_kind(o)?;
        let ((a1, b1), (a2, b2)) = (self.coords(), o.coords());
        Ok(Scalar::from_coords(kind, a1 - a2, b1 - b2))
    }

    pub fn checked_mul(&self, o: &Scalar) -> Result<Scalar> {
        let kind = self.same_kind(o)?;
        let ((a1, b1), (a2, b2)) = (self.coords(), o.coords());
        let u2 = Rational::from_integer(kind.radicand().unwrap_or(0).into());
        Ok(Scalar::from_coords(kind, &a1 * &a2 + u2 * &b1 * &b2, a1 * b2 + b1 * a2))
    }

    pub fn neg(&self) -> Scalar {
        let (a, b) = self.coords();
        Scalar::from_coords(self.kind(), -a, -b)
    }

    pub fn scale(&self, c: &Rational) -> Scalar {
        let (a, b) = self.coords();
        Scalar::from_coords(self.kind(), a * c, b * c)
    }

    /// Galois conjugate `a - b*u` (complex conjugate over `Q(i)`).
    pub fn galois(&self) -> Scalar {
        let (a, b) = self.coords();
        Scalar::from_coords(self.kind(), a, -b)
    }

    /// Complex conjugation: negates `b` over imaginary fields, identity over real ones.
    pub fn conj(&self) -> Scalar {
        if self.kind().is_real() {
            self.clone()
        } else {
            self.galois()
        }
    }

    /// Norm down to `Q`: `a^2 - u^2 b^2`, or the value itself over `Q`.
    pub fn field_norm(&self) -> Rational {
        match self {
            Scalar::Rat(r) => r.clone(),
            _ => {
                let (a, b) = self.coords();
                let u2 = Rational::from_integer(self.kind().radicand().unwrap_or(0).into());
                &a * &a - u2 * &b * &b
            }
        }
    }

    /// Trace down to `Q`: `2a`, or the value itself over `Q`.
    pub fn trace(&self) -> Rational {
        match self {
            Scalar::Rat(r) => r.clone(),
            _ => self.coords().0 * Rational::from_integer(2.into()),
        }
    }

    /// `z * conj(z)`; rational except over real quadratic fields.
    pub fn abs_sq(&self) -> Scalar {
        self.checked_mul(&self.conj()).expect("same kind")
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            Scalar::Rat(r) => Ok(Scalar::Rat(r.recip())),
            _ => {
                let n = self.field_norm();
                Ok(self.galois().scale(&n.recip()))
            }
        }
    }

    pub fn pow(&self, mut k: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one(self.kind());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.checked_mul(&base).expect("same kind");
            }
            base = base.checked_mul(&base).expect("same kind");
            k >>= 1;
        }
        acc
    }

    /// Value-preserving change of field; fails when the value does not lie in `kind`.
    pub fn to_kind(&self, kind: ScalarKind) -> Result<Scalar> {
        if self.kind() == kind {
            return Ok(self.clone());
        }
        let (a, b) = self.coords();
        let same_generator = self.kind().radicand() == kind.radicand();
        if b.is_zero() || same_generator {
            return Ok(Scalar::from_coords(kind, a, b));
        }
        Err(Error::FieldMismatch { value: self.to_string(), field: kind.to_string() })
    }

    /// The Gaussian view of a rational or `Q(i)` value.
    pub fn as_gauss(&self) -> Option<GaussRat> {
        self.to_kind(ScalarKind::Gaussian).ok().map(|s| {
            let (a, b) = s.coords();
            GaussRat::new(a, b)
        })
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => f.write_str(&format_rational(r)),
            Scalar::Gauss(g) => g.fmt(f),
            Scalar::Quad(q) => q.fmt(f),
        }
    }
}
