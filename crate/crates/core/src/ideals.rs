//! Ideals of `O_L = O_K1 e1 + O_K2 e2`, stored componentwise by principal generators.

use std::fmt;

use num_traits::{One, Signed};

use crate::arith::{Integer, Rational};
use crate::element::BicomplexElement;
use crate::error::{Error, Result};
use crate::integers::{canonical_component, generates_prime_ideal, ExtensionDescriptor, FieldDescriptor};
use crate::scalar::Scalar;

/// An ideal of a component ring `O_K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComponentIdeal {
    Zero,
    Full,
    /// Nonzero non-unit generator, normalized to its canonical associate
    /// when the unit group is finite.
    Principal(Scalar),
}

impl ComponentIdeal {
    /// The ideal `(g)` of `O_K`.
    pub fn principal(field: FieldDescriptor, g: &Scalar) -> Result<ComponentIdeal> {
        let g = field.coerce(g)?;
        if !field.is_integral(&g) {
            return Err(Error::NotIntegral(g.to_string()));
        }
        if g.is_zero() {
            return Ok(ComponentIdeal::Zero);
        }
        if g.field_norm().abs() == Rational::one() {
            return Ok(ComponentIdeal::Full);
        }
        let g = match field.units() {
            Some(_) => canonical_component(field, &g)?.1,
            None => g,
        };
        Ok(ComponentIdeal::Principal(g))
    }

    /// `|O_K / a|`, or `None` for the zero ideal.
    pub fn norm(&self) -> Option<Integer> {
        match self {
            ComponentIdeal::Zero => None,
            ComponentIdeal::Full => Some(Integer::from(1)),
            ComponentIdeal::Principal(g) => Some(g.field_norm().abs().to_integer()),
        }
    }

    pub fn is_prime(&self, field: FieldDescriptor) -> bool {
        match self {
            ComponentIdeal::Zero => true,
            ComponentIdeal::Full => false,
            ComponentIdeal::Principal(g) => generates_prime_ideal(field, g),
        }
    }

    pub fn generator(&self, field: FieldDescriptor) -> Scalar {
        match self {
            ComponentIdeal::Zero => Scalar::zero(field.kind()),
            ComponentIdeal::Full => Scalar::one(field.kind()),
            ComponentIdeal::Principal(g) => g.clone(),
        }
    }
}

impl fmt::Display for ComponentIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentIdeal::Zero => f.write_str("(0)"),
            ComponentIdeal::Full => f.write_str("(1)"),
            ComponentIdeal::Principal(g) => write!(f, "({g})"),
        }
    }
}

/// `a1 e1 + a2 e2` inside `O_L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicomplexIdeal {
    pub a1: ComponentIdeal,
    pub a2: ComponentIdeal,
    pub ext: ExtensionDescriptor,
}

impl BicomplexIdeal {
    pub fn new(a1: ComponentIdeal, a2: ComponentIdeal, ext: ExtensionDescriptor) -> Self {
        BicomplexIdeal { a1, a2, ext }
    }

    /// The principal ideal `(w)`.
    pub fn principal(w: &BicomplexElement, ext: &ExtensionDescriptor) -> Result<BicomplexIdeal> {
        let w = ext.coerce(w)?;
        Ok(BicomplexIdeal {
            a1: ComponentIdeal::principal(ext.k1, w.c1())?,
            a2: ComponentIdeal::principal(ext.k2, w.c2())?,
            ext: *ext,
        })
    }

    /// `(e1)`: the ideal `O_K1 e1`.
    pub fn degenerate_e1(ext: &ExtensionDescriptor) -> BicomplexIdeal {
        BicomplexIdeal::new(ComponentIdeal::Full, ComponentIdeal::Zero, *ext)
    }

    pub fn degenerate_e2(ext: &ExtensionDescriptor) -> BicomplexIdeal {
        BicomplexIdeal::new(ComponentIdeal::Zero, ComponentIdeal::Full, *ext)
    }

    /// `Some(k)` for the degenerate ideal `(e_k)`.
    pub fn degenerate_index(&self) -> Option<u8> {
        match (&self.a1, &self.a2) {
            (ComponentIdeal::Full, ComponentIdeal::Zero) => Some(1),
            (ComponentIdeal::Zero, ComponentIdeal::Full) => Some(2),
            _ => None,
        }
    }

    /// A single generator `g1 e1 + g2 e2`.
    pub fn generator(&self) -> BicomplexElement {
        BicomplexElement::new(self.a1.generator(self.ext.k1), self.a2.generator(self.ext.k2))
    }
}

impl fmt::Display for BicomplexIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*e1 + {}*e2", self.a1, self.a2)
    }
}

/// `N(a1) N(a2)`; undefined on the degenerate ideals and on ideals with a zero component.
pub fn ideal_norm(a: &BicomplexIdeal) -> Result<Integer> {
    if let Some(k) = a.degenerate_index() {
        return Err(Error::DegenerateIdeal(k));
    }
    match (a.a1.norm(), a.a2.norm()) {
        (Some(n1), Some(n2)) => Ok(n1 * n2),
        _ => Err(Error::InfiniteIndex),
    }
}

/// Prime iff one component is the whole ring and the other is prime (the zero ideal included).
pub fn is_prime_ideal(a: &BicomplexIdeal) -> bool {
    match (&a.a1, &a.a2) {
        (ComponentIdeal::Full, other) => other.is_prime(a.ext.k2),
        (other, ComponentIdeal::Full) => other.is_prime(a.ext.k1),
        _ => false,
    }
}
