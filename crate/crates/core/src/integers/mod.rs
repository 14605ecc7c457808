//! Rings of integers of `L = K1 e1 + K2 e2` with `K` equal to `Q` or a quadratic field.

mod factor;
mod gauss;

pub use factor::{
    canonical_associate, factor, is_prime_element, rational_prime_profile, BicomplexFactorization, PrimeForm,
    PrimeProfile,
};
pub(crate) use factor::{canonical_component, generates_prime_ideal};
pub use gauss::{factor_gaussian, split_prime, GaussFactorization, GaussInt};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{exact_sqrt, is_squarefree_integer, rat, Integer, Rational};
use crate::element::BicomplexElement;
use crate::error::{Error, Result};
use crate::scalar::{Scalar, ScalarKind};

/// A component field: `Q` or `Q(sqrt D)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    Rational,
    Quadratic(i64),
}

impl FieldDescriptor {
    pub fn quadratic(d: i64) -> Result<Self> {
        if d == 0 || d == 1 || !is_squarefree_integer(d) {
            return Err(Error::InvalidArgument(format!("Q(sqrt({d})) is not a quadratic field")));
        }
        Ok(FieldDescriptor::Quadratic(d))
    }

    pub fn gaussian() -> Self {
        FieldDescriptor::Quadratic(-1)
    }

    pub fn degree(self) -> usize {
        match self {
            FieldDescriptor::Rational => 1,
            FieldDescriptor::Quadratic(_) => 2,
        }
    }

    /// Scalar kind used for elements of this field; `Q(sqrt -1)` uses `Q(i)`.
    pub fn kind(self) -> ScalarKind {
        match self {
            FieldDescriptor::Rational => ScalarKind::Rational,
            FieldDescriptor::Quadratic(-1) => ScalarKind::Gaussian,
            FieldDescriptor::Quadratic(d) => ScalarKind::Quadratic(d),
        }
    }

    pub fn is_imaginary(self) -> bool {
        matches!(self, FieldDescriptor::Quadratic(d) if d < 0)
    }

    /// Discriminant of the ring of integers: 1, `D` or `4D`.
    pub fn discriminant(self) -> Integer {
        match self {
            FieldDescriptor::Rational => Integer::one(),
            FieldDescriptor::Quadratic(d) if d.rem_euclid(4) == 1 => d.into(),
            FieldDescriptor::Quadratic(d) => (4 * d).into(),
        }
    }

    /// `{1}`, `{1, sqrt D}` or `{1, (1 + sqrt D)/2}`.
    pub fn integral_basis(self) -> Vec<Scalar> {
        let kind = self.kind();
        match self {
            FieldDescriptor::Rational => vec![Scalar::one(kind)],
            FieldDescriptor::Quadratic(d) => {
                let omega = if d.rem_euclid(4) == 1 {
                    Scalar::from_coords(kind, rat(1, 2), rat(1, 2))
                } else {
                    Scalar::from_coords(kind, Rational::zero(), Rational::one())
                };
                vec![Scalar::one(kind), omega]
            }
        }
    }

    /// Whether `s` (already in this field) is an algebraic integer:
    /// `2a` and `a^2 - D b^2` integral.
    pub fn is_integral(self, s: &Scalar) -> bool {
        match self {
            FieldDescriptor::Rational => s.coords().0.is_integer(),
            FieldDescriptor::Quadratic(_) => s.trace().is_integer() && s.field_norm().is_integer(),
        }
    }

    /// Moves a scalar into this field, or reports that it does not belong.
    pub fn coerce(self, s: &Scalar) -> Result<Scalar> {
        s.to_kind(self.kind())
    }

    /// Order of the unit group, `None` when infinite.
    pub fn unit_count(self) -> Option<u64> {
        match self {
            FieldDescriptor::Rational => Some(2),
            FieldDescriptor::Quadratic(-1) => Some(4),
            FieldDescriptor::Quadratic(-3) => Some(6),
            FieldDescriptor::Quadratic(d) if d < 0 => Some(2),
            FieldDescriptor::Quadratic(_) => None,
        }
    }

    /// All units when there are finitely many.
    pub fn units(self) -> Option<Vec<Scalar>> {
        let kind = self.kind();
        let pm = |a: Rational, b: Rational| {
            vec![Scalar::from_coords(kind, a.clone(), b.clone()), Scalar::from_coords(kind, -a, -b)]
        };
        match self {
            FieldDescriptor::Quadratic(d) if d > 0 => None,
            FieldDescriptor::Quadratic(-1) => Some([pm(rat(1, 1), rat(0, 1)), pm(rat(0, 1), rat(1, 1))].concat()),
            FieldDescriptor::Quadratic(-3) => {
                Some([pm(rat(1, 1), rat(0, 1)), pm(rat(1, 2), rat(1, 2)), pm(rat(1, 2), rat(-1, 2))].concat())
            }
            _ => Some(pm(rat(1, 1), rat(0, 1))),
        }
    }

    /// Smallest unit greater than 1 of a real quadratic ring.
    pub fn fundamental_unit(self) -> Option<Scalar> {
        let FieldDescriptor::Quadratic(d) = self else {
            return None;
        };
        if d < 0 {
            return None;
        }
        // units are (x + y sqrt D)/2 with x^2 - D y^2 = +-4 (y, x same parity when D = 1 mod 4)
        let half = d.rem_euclid(4) == 1;
        let dd = BigInt::from(d);
        for y in 1u64.. {
            let y = BigInt::from(y);
            for t in [-4, 4] {
                let x2: Integer = &dd * &y * &y + t;
                if let Some(x) = (!x2.is_negative()).then(|| exact_sqrt(&x2)).flatten() {
                    let (a, b) = (Rational::new(x.clone(), 2.into()), Rational::new(y.clone(), 2.into()));
                    if half || (a.is_integer() && b.is_integer()) {
                        return Some(Scalar::from_coords(self.kind(), a, b));
                    }
                }
            }
        }
        unreachable!("Pell equations always have solutions")
    }

    /// Structure of the unit group, e.g. `Z/4`.
    pub fn unit_structure(self) -> String {
        match self.unit_count() {
            Some(n) => format!("Z/{n}"),
            None => "Z/2 x Z".into(),
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rational => f.write_str("Q"),
            FieldDescriptor::Quadratic(d) => write!(f, "Q(sqrt:{d})"),
        }
    }
}

impl FromStr for FieldDescriptor {
    type Err = Error;

    /// `Q`, `Q(i)` or `Q(sqrt:D)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "Q" => return Ok(FieldDescriptor::Rational),
            "Q(i)" => return Ok(FieldDescriptor::gaussian()),
            _ => {}
        }
        let d = s
            .strip_prefix("Q(sqrt:")
            .and_then(|r| r.strip_suffix(')'))
            .and_then(|r| r.trim().parse::<i64>().ok())
            .ok_or_else(|| Error::InvalidArgument(format!("unknown field '{s}', expected Q or Q(sqrt:D)")))?;
        FieldDescriptor::quadratic(d)
    }
}

/// `L = K1 e1 + K2 e2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExtensionDescriptor {
    pub k1: FieldDescriptor,
    pub k2: FieldDescriptor,
}

/// Unit group classes with finite unit group; everything else is `Infinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnitClass {
    /// `Q e1 + Q e2`.
    C1,
    /// `Q(i sqrt d) e1 + Q e2` or the mirror image.
    C2,
    /// `Q(i sqrt d) e1 + Q(i sqrt d') e2`.
    C3,
    Infinite,
}

impl fmt::Display for UnitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UnitClass::C1 => "C1",
            UnitClass::C2 => "C2",
            UnitClass::C3 => "C3",
            UnitClass::Infinite => "infinite",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitGroup {
    pub finite: bool,
    /// `None` when infinite.
    pub order: Option<u64>,
    pub class: UnitClass,
    pub structure: String,
    /// A unit of infinite order, when one exists.
    pub witness: Option<BicomplexElement>,
}

impl ExtensionDescriptor {
    pub fn new(k1: FieldDescriptor, k2: FieldDescriptor) -> Self {
        ExtensionDescriptor { k1, k2 }
    }

    /// `Q e1 + Q e2`, the hyperbolic numbers over `Q`.
    pub fn hyperbolic() -> Self {
        Self::new(FieldDescriptor::Rational, FieldDescriptor::Rational)
    }

    /// `Q(i) e1 + Q(i) e2`.
    pub fn quartic() -> Self {
        Self::new(FieldDescriptor::gaussian(), FieldDescriptor::gaussian())
    }

    pub fn degree(&self) -> usize {
        self.k1.degree() + self.k2.degree()
    }

    pub fn fields(&self) -> [FieldDescriptor; 2] {
        [self.k1, self.k2]
    }

    /// Moves both components into their fields.
    pub fn coerce(&self, w: &BicomplexElement) -> Result<BicomplexElement> {
        Ok(BicomplexElement::new(self.k1.coerce(w.c1())?, self.k2.coerce(w.c2())?))
    }

    pub fn element(&self, c1: Scalar, c2: Scalar) -> Result<BicomplexElement> {
        self.coerce(&BicomplexElement::new(c1, c2))
    }

    /// Componentwise integrality; fails when a component lies outside its field.
    pub fn is_integral(&self, w: &BicomplexElement) -> Result<bool> {
        let w = self.coerce(w)?;
        Ok(self.k1.is_integral(w.c1()) && self.k2.is_integral(w.c2()))
    }

    /// `e1 * (basis of O_K1)` followed by `e2 * (basis of O_K2)`.
    pub fn integral_basis(&self) -> Vec<BicomplexElement> {
        let z1 = Scalar::zero(self.k1.kind());
        let z2 = Scalar::zero(self.k2.kind());
        let mut out: Vec<BicomplexElement> =
            self.k1.integral_basis().into_iter().map(|b| BicomplexElement::new(b, z2.clone())).collect();
        out.extend(self.k2.integral_basis().into_iter().map(|b| BicomplexElement::new(z1.clone(), b)));
        out
    }

    /// Product of the component discriminants.
    pub fn discriminant(&self) -> Integer {
        self.k1.discriminant() * self.k2.discriminant()
    }

    /// Trace down to `Q`: sum of the component traces.
    pub fn trace(&self, w: &BicomplexElement) -> Result<Rational> {
        let w = self.coerce(w)?;
        Ok(w.c1().trace() + w.c2().trace())
    }

    /// `det(Tr(b_i b_j))` over the integral basis.
    pub fn trace_form_discriminant(&self) -> Result<Integer> {
        let basis = self.integral_basis();
        let mut m = Vec::with_capacity(basis.len());
        for a in &basis {
            let mut row = Vec::with_capacity(basis.len());
            for b in &basis {
                row.push(self.trace(&a.try_mul(b)?)?);
            }
            m.push(row);
        }
        let det = determinant(m);
        if !det.is_integer() {
            return Err(Error::NotIntegral(det.to_string()));
        }
        Ok(det.to_integer())
    }

    pub fn unit_group(&self) -> UnitGroup {
        let orders = self.fields().map(FieldDescriptor::unit_count);
        let [s1, s2] = self.fields().map(FieldDescriptor::unit_structure);
        let structure = format!("{s1} x {s2}");
        match orders {
            [Some(a), Some(b)] => {
                let class = match (self.k1, self.k2) {
                    (FieldDescriptor::Rational, FieldDescriptor::Rational) => UnitClass::C1,
                    (FieldDescriptor::Rational, _) | (_, FieldDescriptor::Rational) => UnitClass::C2,
                    _ => UnitClass::C3,
                };
                UnitGroup { finite: true, order: Some(a * b), class, structure, witness: None }
            }
            _ => {
                let witness = if orders[0].is_none() {
                    BicomplexElement::new(
                        self.k1.fundamental_unit().expect("real quadratic"),
                        Scalar::one(self.k2.kind()),
                    )
                } else {
                    BicomplexElement::new(
                        Scalar::one(self.k1.kind()),
                        self.k2.fundamental_unit().expect("real quadratic"),
                    )
                };
                UnitGroup { finite: false, order: None, class: UnitClass::Infinite, structure, witness: Some(witness) }
            }
        }
    }

    /// Every unit, when the group is finite.
    pub fn units(&self) -> Option<Vec<BicomplexElement>> {
        let u1 = self.k1.units()?;
        let u2 = self.k2.units()?;
        Some(u1.iter().flat_map(|a| u2.iter().map(move |b| BicomplexElement::new(a.clone(), b.clone()))).collect())
    }

    /// Integral with both component norms equal to `+-1`.
    pub fn is_unit(&self, w: &BicomplexElement) -> Result<bool> {
        let w = self.coerce(w)?;
        if !self.is_integral(&w)? {
            return Ok(false);
        }
        Ok([w.c1(), w.c2()].iter().all(|c| c.field_norm().abs().is_one()))
    }
}

impl fmt::Display for ExtensionDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Self::hyperbolic() {
            f.write_str("Qh")
        } else if *self == Self::quartic() {
            f.write_str("QB")
        } else {
            write!(f, "custom:{},{}", self.k1, self.k2)
        }
    }
}

impl FromStr for ExtensionDescriptor {
    type Err = Error;

    /// `Qh`, `QB` or `custom:K1,K2`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "Qh" => Ok(Self::hyperbolic()),
            "QB" => Ok(Self::quartic()),
            other => {
                let body = other.strip_prefix("custom:").ok_or_else(|| {
                    Error::InvalidArgument(format!("unknown extension '{other}', expected Qh, QB or custom:K1,K2"))
                })?;
                let (a, b) = body
                    .split_once(',')
                    .ok_or_else(|| Error::InvalidArgument("custom extension needs two fields".into()))?;
                Ok(Self::new(a.parse()?, b.parse()?))
            }
        }
    }
}

/// An element of `O_L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicomplexInteger {
    element: BicomplexElement,
    ext: ExtensionDescriptor,
}

impl BicomplexInteger {
    pub fn new(w: &BicomplexElement, ext: ExtensionDescriptor) -> Result<Self> {
        let element = ext.coerce(w)?;
        if !ext.is_integral(&element)? {
            return Err(Error::NotIntegral(w.to_string()));
        }
        Ok(BicomplexInteger { element, ext })
    }

    pub fn element(&self) -> &BicomplexElement {
        &self.element
    }

    pub fn extension(&self) -> ExtensionDescriptor {
        self.ext
    }
}

/// Fraction-free elimination over `Q`.
fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            let f = &m[r][col] / &p;
            if f.is_zero() {
                continue;
            }
            let pivot = m[col][col..n].to_vec();
            for (dst, v) in m[r][col..n].iter_mut().zip(&pivot) {
                *dst -= &f * v;
            }
        }
    }
    det
}
