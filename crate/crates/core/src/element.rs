//! Bicomplex elements in idempotent form.

use std::fmt;

use num_traits::{One, Zero};

use crate::arith::{rat, Rational};
use crate::error::{Error, Result};
use crate::scalar::{GaussRat, QuadRat, Scalar, ScalarKind};

/// Which of the three conjugations to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    I,
    J,
    K,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::I, Axis::J, Axis::K];
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::I => "i",
            Axis::J => "j",
            Axis::K => "k",
        })
    }
}

/// Norm of an element: rational unless a component is real quadratic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormValue {
    Rational(Rational),
    Quadratic(QuadRat),
}

impl NormValue {
    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            NormValue::Rational(r) => Some(r),
            NormValue::Quadratic(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            NormValue::Rational(r) => r.is_zero(),
            NormValue::Quadratic(q) => q.a.is_zero() && q.b.is_zero(),
        }
    }
}

impl fmt::Display for NormValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormValue::Rational(r) => Scalar::Rat(r.clone()).fmt(f),
            NormValue::Quadratic(q) => q.fmt(f),
        }
    }
}

/// `c1 e1 + c2 e2` with `e1 = (1+j)/2`, `e2 = (1-j)/2`.
///
/// The two slots may live in different fields; arithmetic requires the
/// kinds to agree slot by slot.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BicomplexElement {
    c1: Scalar,
    c2: Scalar,
}

impl BicomplexElement {
    pub fn new(c1: Scalar, c2: Scalar) -> Self {
        BicomplexElement { c1, c2 }
    }

    pub fn from_gauss(c1: GaussRat, c2: GaussRat) -> Self {
        Self::new(Scalar::Gauss(c1), Scalar::Gauss(c2))
    }

    /// Integer-valued Gaussian components `(a1 + b1 i, a2 + b2 i)`.
    pub fn gauss_ints(a1: i64, b1: i64, a2: i64, b2: i64) -> Self {
        Self::new(Scalar::gauss(a1, b1), Scalar::gauss(a2, b2))
    }

    /// `x + y i + z j + t k`, with `c1 = (x+z) + (y+t) i` and `c2 = (x-z) + (y-t) i`.
    pub fn from_cartesian(x: Rational, y: Rational, z: Rational, t: Rational) -> Self {
        Self::from_gauss(GaussRat::new(&x + &z, &y + &t), GaussRat::new(x - z, y - t))
    }

    pub fn from_cartesian_ints(x: i64, y: i64, z: i64, t: i64) -> Self {
        let r = |v: i64| rat(v, 1);
        Self::from_cartesian(r(x), r(y), r(z), r(t))
    }

    pub fn c1(&self) -> &Scalar {
        &self.c1
    }

    pub fn c2(&self) -> &Scalar {
        &self.c2
    }

    pub fn components(&self) -> (&Scalar, &Scalar) {
        (&self.c1, &self.c2)
    }

    pub fn kinds(&self) -> (ScalarKind, ScalarKind) {
        (self.c1.kind(), self.c2.kind())
    }

    pub fn one() -> Self {
        Self::gauss_ints(1, 0, 1, 0)
    }

    pub fn zero() -> Self {
        Self::gauss_ints(0, 0, 0, 0)
    }

    pub fn i() -> Self {
        Self::gauss_ints(0, 1, 0, 1)
    }

    pub fn j() -> Self {
        Self::gauss_ints(1, 0, -1, 0)
    }

    pub fn k() -> Self {
        Self::gauss_ints(0, 1, 0, -1)
    }

    pub fn e1() -> Self {
        Self::gauss_ints(1, 0, 0, 0)
    }

    pub fn e2() -> Self {
        Self::gauss_ints(0, 0, 1, 0)
    }

    /// `(x, y, z, t)`; needs both components in `Q` or `Q(i)`.
    pub fn to_cartesian(&self) -> Result<[Rational; 4]> {
        let g1 = self.c1.as_gauss().ok_or(Error::NoCartesianView(self.c1.kind()))?;
        let g2 = self.c2.as_gauss().ok_or(Error::NoCartesianView(self.c2.kind()))?;
        let half = rat(1, 2);
        Ok([(&g1.re + &g2.re) * &half, (&g1.im + &g2.im) * &half, (&g1.re - &g2.re) * &half, (&g1.im - &g2.im) * &half])
    }

    pub fn has_cartesian_view(&self) -> bool {
        self.c1.as_gauss().is_some() && self.c2.as_gauss().is_some()
    }

    /// Both components moved to `Q(i)`, when they allow it.
    pub fn to_gaussian(&self) -> Result<BicomplexElement> {
        Ok(Self::new(self.c1.to_kind(ScalarKind::Gaussian)?, self.c2.to_kind(ScalarKind::Gaussian)?))
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        Ok(Self::new(self.c1.checked_add(&o.c1)?, self.c2.checked_add(&o.c2)?))
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        Ok(Self::new(self.c1.checked_sub(&o.c1)?, self.c2.checked_sub(&o.c2)?))
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        Ok(Self::new(self.c1.checked_mul(&o.c1)?, self.c2.checked_mul(&o.c2)?))
    }

    pub fn neg(&self) -> Self {
        Self::new(self.c1.neg(), self.c2.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.c1.scale(c), self.c2.scale(c))
    }

    pub fn pow(&self, k: u32) -> Self {
        Self::new(self.c1.pow(k), self.c2.pow(k))
    }

    pub fn is_zero(&self) -> bool {
        self.c1.is_zero() && self.c2.is_zero()
    }

    /// Zero divisors: a component vanishes.
    pub fn in_null_cone(&self) -> bool {
        self.c1.is_zero() || self.c2.is_zero()
    }

    pub fn invert(&self) -> Result<Self> {
        if self.in_null_cone() {
            return Err(Error::NullCone);
        }
        Ok(Self::new(self.c1.inv()?, self.c2.inv()?))
    }

    pub fn conjugate(&self, axis: Axis) -> Self {
        match axis {
            Axis::I => Self::new(self.c2.clone(), self.c1.clone()),
            Axis::J => Self::new(self.c1.conj(), self.c2.conj()),
            Axis::K => Self::new(self.c2.conj(), self.c1.conj()),
        }
    }

    /// `|c1 c2|^2`, the product of the element with its three conjugates.
    pub fn norm(&self) -> Result<NormValue> {
        let (s1, s2) = (self.c1.abs_sq(), self.c2.abs_sq());
        let prod = if s1.kind() == s2.kind() {
            s1.checked_mul(&s2)?
        } else if s1.is_rational() {
            s1.to_kind(s2.kind())?.checked_mul(&s2)?
        } else if s2.is_rational() {
            s1.checked_mul(&s2.to_kind(s1.kind())?)?
        } else {
            return Err(Error::Unsupported(format!("norm with components over {} and {}", s1.kind(), s2.kind())));
        };
        let (a, b) = prod.coords();
        match prod {
            Scalar::Quad(q) if !b.is_zero() => Ok(NormValue::Quadratic(q)),
            _ => Ok(NormValue::Rational(a)),
        }
    }

    /// Checks the four recovery identities, e.g. `(w + w^i + w^j + w^k)/4 = x`.
    pub fn coordinate_recovery_check(&self) -> bool {
        let Ok([x, y, z, t]) = self.to_cartesian() else {
            return false;
        };
        let Ok(w) = self.to_gaussian() else {
            return false;
        };
        let [ci, cj, ck] = Axis::ALL.map(|a| w.conjugate(a));
        let combo = |si: i64, sj: i64, sk: i64| -> BicomplexElement {
            let mut acc = w.clone();
            for (c, s) in [(&ci, si), (&cj, sj), (&ck, sk)] {
                acc = acc.try_add(&c.scale(&rat(s, 1))).expect("gaussian");
            }
            acc.scale(&rat(1, 4))
        };
        // dividing by i, j, k is multiplying by -i, j, -k
        let checks = [
            (combo(1, 1, 1), Self::one(), x),
            (combo(1, -1, -1), Self::i().neg(), y),
            (combo(-1, 1, -1), Self::j(), z),
            (combo(-1, -1, 1), Self::k().neg(), t),
        ];
        checks.into_iter().all(|(sum, unit_inv, coord)| {
            let got = sum.try_mul(&unit_inv).expect("gaussian");
            got == Self::from_cartesian(coord, Rational::zero(), Rational::zero(), Rational::zero())
        })
    }

    /// `x+y*i+z*j+t*k`, zero terms dropped.
    pub fn cartesian_string(&self) -> Result<String> {
        let coords = self.to_cartesian()?;
        let mut out = String::new();
        for (c, unit) in coords.iter().zip(["", "i", "j", "k"]) {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            let body = match (unit, mag.is_one()) {
                ("", _) => Scalar::Rat(mag).to_string(),
                (u, true) => u.to_string(),
                (u, false) => format!("{}*{u}", Scalar::Rat(mag)),
            };
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        Ok(out)
    }

    /// `[c1, c2]`.
    pub fn idempotent_string(&self) -> String {
        format!("[{}, {}]", self.c1, self.c2)
    }
}

impl fmt::Display for BicomplexElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.cartesian_string() {
            Ok(s) => f.write_str(&s),
            Err(_) => f.write_str(&self.idempotent_string()),
        }
    }
}
