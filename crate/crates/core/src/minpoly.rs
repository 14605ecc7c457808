//! Minimal polynomials of bicomplex numbers with components of degree at most 2.

use num_traits::{One, Zero};

use crate::arith::{IntPoly, RatPoly, Rational};
use crate::element::{Axis, BicomplexElement};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Whether both components share one minimal polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinPolyKind {
    Common,
    Product,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinPolyResult {
    pub poly: IntPoly,
    pub kind: MinPolyKind,
    pub components: (IntPoly, IntPoly),
}

/// `X - a` for rationals, otherwise the primitive form of
/// `X^2 - 2aX + (a^2 - u^2 b^2)` for `a + b u`.
pub fn minpoly_component(g: &Scalar) -> IntPoly {
    let (a, b) = g.coords();
    let p = if b.is_zero() {
        RatPoly::linear(&a)
    } else {
        let u2 = Rational::from_integer(g.kind().radicand().expect("b != 0 only off Q").into());
        let two = Rational::from_integer(2.into());
        RatPoly::new(vec![&a * &a - u2 * &b * &b, -(two * &a), Rational::one()])
    };
    p.content_primitive().expect("nonzero").1
}

/// Least common multiple of the component minimal polynomials.
pub fn minpoly_bicomplex(w: &BicomplexElement) -> MinPolyResult {
    let p1 = minpoly_component(w.c1());
    let p2 = minpoly_component(w.c2());
    let lcm = p1.to_rat().lcm(&p2.to_rat()).expect("nonzero");
    let poly = lcm.content_primitive().expect("nonzero").1;
    let kind = if p1 == p2 { MinPolyKind::Common } else { MinPolyKind::Product };
    MinPolyResult { poly, kind, components: (p1, p2) }
}

fn eval_scalar(p: &RatPoly, x: &Scalar) -> Scalar {
    let kind = x.kind();
    p.coeffs().iter().rev().fold(Scalar::zero(kind), |acc, c| {
        acc.checked_mul(x)
            .and_then(|v| v.checked_add(&Scalar::from_rational(kind, c.clone())))
            .expect("one kind throughout")
    })
}

/// `P(c1 e1 + c2 e2) = P(c1) e1 + P(c2) e2`.
pub fn eval_at_bicomplex(p: &RatPoly, w: &BicomplexElement) -> BicomplexElement {
    BicomplexElement::new(eval_scalar(p, w.c1()), eval_scalar(p, w.c2()))
}

/// Coefficients of `X^4 - trace X^3 + pair_sum X^2 - triple_sum X + norm`,
/// the elementary symmetric functions of `w` and its three conjugates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticCharPoly {
    pub poly: RatPoly,
    /// `4 Re(w)`.
    pub trace: Rational,
    pub pair_sum: Rational,
    pub triple_sum: Rational,
    pub norm: Rational,
}

fn real_part(w: &BicomplexElement) -> Result<Rational> {
    let [x, y, z, t] = w.to_cartesian()?;
    if y.is_zero() && z.is_zero() && t.is_zero() {
        Ok(x)
    } else {
        Err(Error::InvalidArgument(format!("{w} is not real")))
    }
}

/// Characteristic polynomial of `w` over the four conjugations; needs a Cartesian view.
pub fn quartic_charpoly(w: &BicomplexElement) -> Result<QuarticCharPoly> {
    let w = w.to_gaussian()?;
    let conj: Vec<BicomplexElement> =
        std::iter::once(w.clone()).chain(Axis::ALL.iter().map(|&a| w.conjugate(a))).collect();
    // e_k of the four conjugates, built up one factor at a time
    let mut e = [
        BicomplexElement::one(),
        BicomplexElement::zero(),
        BicomplexElement::zero(),
        BicomplexElement::zero(),
        BicomplexElement::zero(),
    ];
    for c in &conj {
        for k in (1..=4).rev() {
            e[k] = e[k].try_add(&e[k - 1].try_mul(c)?)?;
        }
    }
    let [trace, pair_sum, triple_sum, norm] =
        [real_part(&e[1])?, real_part(&e[2])?, real_part(&e[3])?, real_part(&e[4])?];
    let poly = RatPoly::new(vec![norm.clone(), -triple_sum.clone(), pair_sum.clone(), -trace.clone(), Rational::one()]);
    Ok(QuarticCharPoly { poly, trace, pair_sum, triple_sum, norm })
}
