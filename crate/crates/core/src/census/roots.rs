use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::numeric_roots;
use crate::arith::{rat_from_int, IntPoly, Integer, RatPoly, Rational};
use crate::element::{Axis, BicomplexElement};
use crate::error::{Error, Result};
use crate::scalar::GaussRat;

/// The five disjoint pieces of the bicomplex root set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Locus {
    /// Fixed by all three conjugations: real roots `a e1 + a e2`.
    Real,
    /// Only fixed by bar-i: `b e1 + b e2`, `b` non-real.
    Si,
    /// Only fixed by bar-j: two distinct real components.
    Sj,
    /// Only fixed by bar-k: `b e1 + conj(b) e2`, `b` non-real.
    Sk,
    /// Fixed by none.
    D,
}

impl Locus {
    /// Reads the locus off the conjugation fixed points.
    pub fn classify(w: &BicomplexElement) -> Locus {
        let fixed = Axis::ALL.map(|a| w.conjugate(a) == *w);
        match fixed {
            [true, true, true] => Locus::Real,
            [true, false, false] => Locus::Si,
            [false, true, false] => Locus::Sj,
            [false, false, true] => Locus::Sk,
            [false, false, false] => Locus::D,
            _ => unreachable!("two fixed conjugations force the third"),
        }
    }
}

impl fmt::Display for Locus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Locus::Real => "R",
            Locus::Si => "S_i",
            Locus::Sj => "S_j",
            Locus::Sk => "S_k",
            Locus::D => "D",
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LocusSizes {
    pub real: usize,
    pub si: usize,
    pub sj: usize,
    pub sk: usize,
    pub d: usize,
}

impl LocusSizes {
    pub fn as_array(&self) -> [usize; 5] {
        [self.real, self.si, self.sj, self.sk, self.d]
    }
}

/// One polynomial per locus, the product of `X - w` over its members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocusFactors {
    pub p_r: RatPoly,
    pub p_si: RatPoly,
    pub p_sj: RatPoly,
    pub p_sk: RatPoly,
    pub p_d: RatPoly,
}

impl LocusFactors {
    pub fn product(&self) -> RatPoly {
        [&self.p_si, &self.p_sj, &self.p_sk, &self.p_d].into_iter().fold(self.p_r.clone(), |acc, p| &acc * p)
    }

    pub fn degrees(&self) -> [usize; 5] {
        [&self.p_r, &self.p_si, &self.p_sj, &self.p_sk, &self.p_d].map(|p| p.degree().unwrap_or(0))
    }
}

/// Distinct Gaussian-rational roots, closed under complex conjugation,
/// together with the leading coefficient of their polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSet {
    roots: Vec<GaussRat>,
    lead: Integer,
}

impl RootSet {
    pub fn new(roots: Vec<GaussRat>, lead: Integer) -> Result<RootSet> {
        if lead.is_zero() {
            return Err(Error::InvalidArgument("leading coefficient is zero".into()));
        }
        if roots.is_empty() {
            return Err(Error::InvalidArgument("empty root set".into()));
        }
        for (k, a) in roots.iter().enumerate() {
            if roots[..k].contains(a) {
                return Err(Error::DuplicateRoot(a.to_string()));
            }
        }
        if roots.iter().any(|a| !roots.contains(&a.conj())) {
            return Err(Error::NotConjugateClosed);
        }
        Ok(RootSet { roots, lead })
    }

    /// Exact roots of `p` when all of them are Gaussian rationals, else `None`.
    ///
    /// Candidates come from the numeric roots: `a_n * root` is a Gaussian
    /// integer, so rounding it gives the only possible exact value, which is
    /// then checked by exact evaluation.
    pub fn from_poly(p: &IntPoly) -> Result<Option<RootSet>> {
        if !p.is_squarefree()? {
            return Err(Error::NotSquarefree);
        }
        let approx = numeric_roots(p, 1e-12)?;
        let lead = p.leading().clone();
        let lead_f = rat_from_int(lead.clone());
        let poly = p.to_rat();
        let mut roots = Vec::new();
        for z in approx {
            let scaled = [z.re, z.im].map(|v| v * lead.to_f64().unwrap_or(f64::NAN));
            if scaled.iter().any(|v| !v.is_finite() || v.abs() > 1e15) {
                return Ok(None);
            }
            let [re, im] = scaled.map(|v| rat_from_int(BigInt::from(v.round() as i64)) / &lead_f);
            let cand = GaussRat::new(re, im);
            if !eval_gauss(&poly, &cand).is_zero() || roots.contains(&cand) {
                return Ok(None);
            }
            roots.push(cand);
        }
        RootSet::new(roots, lead).map(Some)
    }

    pub fn roots(&self) -> &[GaussRat] {
        &self.roots
    }

    pub fn lead(&self) -> &Integer {
        &self.lead
    }

    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    pub fn real_roots(&self) -> impl Iterator<Item = &GaussRat> {
        self.roots.iter().filter(|a| a.is_real())
    }

    /// One representative per conjugate pair (positive imaginary part).
    pub fn pair_roots(&self) -> impl Iterator<Item = &GaussRat> {
        self.roots.iter().filter(|a| a.im.is_positive())
    }

    /// `prod (X - a)` over the real roots.
    fn real_part_poly(&self) -> RatPoly {
        self.real_roots().fold(RatPoly::one(), |acc, a| &acc * &RatPoly::linear(&a.re))
    }

    /// `prod (X - b)(X - conj b)` over the conjugate pairs.
    fn pair_poly(&self) -> RatPoly {
        self.pair_roots().fold(RatPoly::one(), |acc, b| {
            let q = RatPoly::new(vec![b.norm(), -(&b.re + &b.re), Rational::one()]);
            &acc * &q
        })
    }

    /// `a_n prod (X - a)`.
    pub fn polynomial(&self) -> RatPoly {
        (&self.real_part_poly() * &self.pair_poly()).scale(&rat_from_int(self.lead.clone()))
    }

    /// All `n^2` elements `a e1 + b e2`, each tagged with its locus.
    pub fn enumerate(&self) -> Vec<(BicomplexElement, Locus)> {
        let mut out = Vec::with_capacity(self.roots.len() * self.roots.len());
        for a in &self.roots {
            for b in &self.roots {
                let w = BicomplexElement::from_gauss(a.clone(), b.clone());
                let locus = Locus::classify(&w);
                out.push((w, locus));
            }
        }
        out
    }

    pub fn locus_sizes(&self) -> LocusSizes {
        let mut s = LocusSizes::default();
        for (_, l) in self.enumerate() {
            *match l {
                Locus::Real => &mut s.real,
                Locus::Si => &mut s.si,
                Locus::Sj => &mut s.sj,
                Locus::Sk => &mut s.sk,
                Locus::D => &mut s.d,
            } += 1;
        }
        s
    }

    /// Closed forms for the five locus polynomials; an empty locus gives 1.
    pub fn locus_factors(&self) -> LocusFactors {
        let r = self.real_roots().count() as u32;
        let s = self.pair_roots().count() as u32;
        let p_r = self.real_part_poly();
        let pairs = self.pair_poly();
        let p_sj = p_r.pow(r.saturating_sub(1));
        let p_d = if s == 0 { RatPoly::one() } else { &p_r.pow(2 * s) * &pairs.pow(r + 2 * s - 2) };
        LocusFactors { p_si: pairs.clone(), p_sk: pairs, p_r, p_sj, p_d }
    }
}

/// Exact `p(z)` for a Gaussian rational `z`.
pub(crate) fn eval_gauss(p: &RatPoly, z: &GaussRat) -> GaussRat {
    p.coeffs().iter().rev().fold(GaussRat::default(), |acc, c| &(&acc * z) + &GaussRat::real(c.clone()))
}
