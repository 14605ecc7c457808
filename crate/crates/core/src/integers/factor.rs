use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::gauss::{factor_gaussian, GaussInt};
use super::{ExtensionDescriptor, FieldDescriptor};
use crate::arith::{factor_integer, is_prime, rat_from_int, Integer, Rational};
use crate::element::BicomplexElement;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// The four shapes of a prime element, up to units.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PrimeForm {
    /// `e1`: generates a prime ideal but is idempotent, so not irreducible.
    DegenerateE1,
    DegenerateE2,
    /// `pi e1 + e2` with `pi` prime in `O_K1`.
    First,
    /// `e1 + pi e2` with `pi` prime in `O_K2`.
    Second,
}

impl fmt::Display for PrimeForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PrimeForm::DegenerateE1 => "e1",
            PrimeForm::DegenerateE2 => "e2",
            PrimeForm::First => "pi*e1+e2",
            PrimeForm::Second => "e1+pi*e2",
        })
    }
}

/// Does `c / u` fall in the fundamental domain of the unit group?
fn in_domain(field: FieldDescriptor, c: &Scalar) -> bool {
    let (a, b) = c.coords();
    match field {
        FieldDescriptor::Rational => a.is_positive(),
        FieldDescriptor::Quadratic(-1) => a.is_positive() && !b.is_negative(),
        // sector 0 <= arg < pi/3
        FieldDescriptor::Quadratic(-3) => a.is_positive() && !b.is_negative() && b < a,
        FieldDescriptor::Quadratic(_) => a.is_positive() || (a.is_zero() && b.is_positive()),
    }
}

/// `(u, g)` with `c = u g` and `g` the canonical associate.
pub(crate) fn canonical_component(field: FieldDescriptor, c: &Scalar) -> Result<(Scalar, Scalar)> {
    let units = field
        .units()
        .ok_or_else(|| Error::Unsupported(format!("canonical associates in {field} (infinite unit group)")))?;
    for u in units {
        let g = c.checked_mul(&u.inv()?)?;
        if in_domain(field, &g) {
            return Ok((u, g));
        }
    }
    unreachable!("some associate lies in the fundamental domain")
}

/// `(unit, normalized)` with `w = unit * normalized`: rational components
/// positive, Gaussian ones in the first quadrant.
pub fn canonical_associate(
    w: &BicomplexElement,
    ext: &ExtensionDescriptor,
) -> Result<(BicomplexElement, BicomplexElement)> {
    let w = ext.coerce(w)?;
    if w.in_null_cone() {
        return Err(Error::NullCone);
    }
    let (u1, g1) = canonical_component(ext.k1, w.c1())?;
    let (u2, g2) = canonical_component(ext.k2, w.c2())?;
    Ok((BicomplexElement::new(u1, u2), BicomplexElement::new(g1, g2)))
}

fn check_principal(ext: &ExtensionDescriptor) -> Result<()> {
    for k in ext.fields() {
        if !matches!(k, FieldDescriptor::Rational | FieldDescriptor::Quadratic(-1)) {
            return Err(Error::Unsupported(format!("prime elements over {k}; components must be Z or Z[i]")));
        }
    }
    Ok(())
}

fn component_is_prime(field: FieldDescriptor, c: &Scalar) -> bool {
    match field {
        FieldDescriptor::Rational => {
            let a = c.coords().0;
            a.is_integer() && is_prime(&a.to_integer().abs())
        }
        _ => GaussInt::from_scalar(c).is_some_and(|g| g.is_prime()),
    }
}

fn component_is_unit(c: &Scalar) -> bool {
    c.field_norm().abs().is_one()
}

/// Which prime shape `w` has, if any; components must be `Z` or `Z[i]`.
pub fn is_prime_element(w: &BicomplexElement, ext: &ExtensionDescriptor) -> Result<Option<PrimeForm>> {
    check_principal(ext)?;
    let w = ext.coerce(w)?;
    if !ext.is_integral(&w)? {
        return Err(Error::NotIntegral(w.to_string()));
    }
    let (c1, c2) = w.components();
    let form = if c2.is_zero() && component_is_unit(c1) {
        Some(PrimeForm::DegenerateE1)
    } else if c1.is_zero() && component_is_unit(c2) {
        Some(PrimeForm::DegenerateE2)
    } else if component_is_prime(ext.k1, c1) && component_is_unit(c2) {
        Some(PrimeForm::First)
    } else if component_is_unit(c1) && component_is_prime(ext.k2, c2) {
        Some(PrimeForm::Second)
    } else {
        None
    };
    Ok(form)
}

/// `unit * prod prime^exp` in `O_L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicomplexFactorization {
    pub unit: BicomplexElement,
    pub factors: Vec<(BicomplexElement, u32)>,
}

impl BicomplexFactorization {
    pub fn recompose(&self) -> BicomplexElement {
        self.factors
            .iter()
            .fold(self.unit.clone(), |acc, (p, e)| acc.try_mul(&p.pow(*e)).expect("factors share the unit's kinds"))
    }

    /// Number of prime factors counted with multiplicity.
    pub fn factor_count(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }
}

impl fmt::Display for BicomplexFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.unit.idempotent_string())?;
        for (p, e) in &self.factors {
            write!(f, " * {}", p.idempotent_string())?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// `(unit, [(prime, exp)])` of one component in `Z` or `Z[i]`.
fn factor_component(field: FieldDescriptor, c: &Scalar) -> Result<(Scalar, Vec<(Scalar, u32)>)> {
    match field {
        FieldDescriptor::Rational => {
            let n = c.coords().0.to_integer();
            let unit =
                Scalar::Rat(Rational::from_integer(if n.is_negative() { -BigInt::one() } else { BigInt::one() }));
            let parts = factor_integer(&n).into_iter().map(|(p, e)| (Scalar::Rat(rat_from_int(p)), e)).collect();
            Ok((unit, parts))
        }
        _ => {
            let g = GaussInt::from_scalar(c).ok_or_else(|| Error::NotIntegral(c.to_string()))?;
            let f = factor_gaussian(&g)?;
            Ok((f.unit.to_scalar(), f.factors.into_iter().map(|(p, e)| (p.to_scalar(), e)).collect()))
        }
    }
}

fn sort_key(field: FieldDescriptor, slot: u8, p: &Scalar) -> (Integer, u8, Rational, Rational) {
    let n = match field {
        FieldDescriptor::Rational => p.coords().0.abs(),
        _ => p.field_norm().abs(),
    };
    let (a, b) = p.coords();
    (n.to_integer(), slot, a, b)
}

/// Unique factorization into primes `pi e1 + e2` and `e1 + pi e2`.
pub fn factor(w: &BicomplexElement, ext: &ExtensionDescriptor) -> Result<BicomplexFactorization> {
    check_principal(ext)?;
    let w = ext.coerce(w)?;
    if !ext.is_integral(&w)? {
        return Err(Error::NotIntegral(w.to_string()));
    }
    if w.in_null_cone() {
        return Err(Error::NullCone);
    }
    if ext.is_unit(&w)? {
        return Err(Error::UnitInput);
    }
    let (u1, f1) = factor_component(ext.k1, w.c1())?;
    let (u2, f2) = factor_component(ext.k2, w.c2())?;
    let one1 = Scalar::one(ext.k1.kind());
    let one2 = Scalar::one(ext.k2.kind());
    let mut keyed: Vec<_> = f1
        .into_iter()
        .map(|(p, e)| (sort_key(ext.k1, 1, &p), (BicomplexElement::new(p, one2.clone()), e)))
        .chain(f2.into_iter().map(|(p, e)| (sort_key(ext.k2, 2, &p), (BicomplexElement::new(one1.clone(), p), e))))
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(BicomplexFactorization {
        unit: BicomplexElement::new(u1, u2),
        factors: keyed.into_iter().map(|(_, f)| f).collect(),
    })
}

/// How a rational prime splits in `O_L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeProfile {
    pub factor_count: u32,
    pub semiprime: bool,
    pub factorization: BicomplexFactorization,
}

pub fn rational_prime_profile(p: &Integer, ext: &ExtensionDescriptor) -> Result<PrimeProfile> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p.clone()));
    }
    let s = Scalar::Rat(rat_from_int(p.clone()));
    let f = factor(&BicomplexElement::new(s.clone(), s), ext)?;
    let count = f.factor_count();
    Ok(PrimeProfile { factor_count: count, semiprime: count == 2, factorization: f })
}

/// Residue symbol deciding whether `p` stays prime in `Q(sqrt D)`.
pub(crate) fn is_inert(d: i64, p: &Integer) -> bool {
    let Some(p) = p.to_i64() else {
        // large p: Euler's criterion on D mod p
        let dm = ((BigInt::from(d) % p) + p) % p;
        return !dm.is_zero() && dm.modpow(&((p - 1u32) / 2u32), p) == p - 1u32;
    };
    if p == 2 {
        return d.rem_euclid(8) == 5;
    }
    let dm = d.rem_euclid(p);
    dm != 0 && BigInt::from(dm).modpow(&BigInt::from((p - 1) / 2), &BigInt::from(p)) == BigInt::from(p - 1)
}

/// Whether the principal ideal `(g)` of `O_K` is a nonzero prime ideal.
pub(crate) fn generates_prime_ideal(field: FieldDescriptor, g: &Scalar) -> bool {
    if g.is_zero() {
        return false;
    }
    match field {
        FieldDescriptor::Rational => component_is_prime(field, g),
        FieldDescriptor::Quadratic(d) => {
            let n = g.field_norm().abs();
            if !n.is_integer() {
                return false;
            }
            let n = n.to_integer();
            if is_prime(&n) {
                return true;
            }
            // norm p^2: prime only when g is an associate of an inert p
            match crate::arith::exact_sqrt(&n) {
                Some(p) if is_prime(&p) && is_inert(d, &p) => {
                    let ratio = g.scale(&rat_from_int(p).recip());
                    ratio.field_norm().abs().is_one() && field.is_integral(&ratio)
                }
                _ => false,
            }
        }
    }
}
