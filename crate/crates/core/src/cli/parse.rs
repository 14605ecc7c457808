//! Text forms of elements and polynomials.
//!
//! Elements come in two views that may not be mixed:
//!
//! * Cartesian: `x+y*i+z*j+t*k` with rational coefficients, e.g. `1+i+j-k`
//!   or `3/2 - 5/7*j`.
//! * Idempotent: `[c1, c2]` where each component is `a+b*i` or
//!   `a+b*sqrt(D)`, e.g. `[2, 2*i]` or `[1/2+1/2*sqrt(-3), 1]`.
//!
//! Polynomials are written in `X` (or `x`) with rational coefficients, e.g.
//! `X^3 - 2*X^2 + 4*X - 8`.

use num_traits::{One, Zero};

use crate::arith::{rat_from_int, Integer, RatPoly, Rational};
use crate::element::BicomplexElement;
use crate::error::{Error, Result};
use crate::scalar::{GaussRat, QuadRat, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(Integer),
    Ident(String),
    Sym(char),
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut k = 0;
    while k < chars.len() {
        let (pos, c) = chars[k];
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].1.is_ascii_digit() {
                k += 1;
            }
            let end = chars.get(k).map_or(src.len(), |&(p, _)| p);
            let n: Integer = src[pos..end].parse().map_err(|_| err(chars[start].0, "bad number"))?;
            out.push((pos, Tok::Num(n)));
        } else if c.is_ascii_alphabetic() {
            while k < chars.len() && chars[k].1.is_ascii_alphanumeric() {
                k += 1;
            }
            let end = chars.get(k).map_or(src.len(), |&(p, _)| p);
            out.push((pos, Tok::Ident(src[pos..end].to_string())));
        } else if "+-*/^()[],".contains(c) {
            out.push((pos, Tok::Sym(c)));
            k += 1;
        } else {
            return Err(err(pos, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Result<Self> {
        Ok(Parser { toks: lex(src)?, at: 0, src })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.src.len(), |(p, _)| *p)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(err(self.pos(), format!("expected '{c}'")))
        }
    }

    fn at_end(&self) -> bool {
        self.at >= self.toks.len()
    }

    /// `n` or `n/m`.
    fn rational(&mut self) -> Result<Option<Rational>> {
        let Some(Tok::Num(n)) = self.peek().cloned() else {
            return Ok(None);
        };
        self.at += 1;
        if self.eat('/') {
            let pos = self.pos();
            match self.peek().cloned() {
                Some(Tok::Num(d)) if !d.is_zero() => {
                    self.at += 1;
                    Ok(Some(Rational::new(n, d)))
                }
                Some(Tok::Num(_)) => Err(err(pos, "zero denominator")),
                _ => Err(err(pos, "expected a denominator")),
            }
        } else {
            Ok(Some(rat_from_int(n)))
        }
    }

    /// A unit name such as `i`, `j`, `k`, `X` or `sqrt(D)`.
    fn unit(&mut self) -> Result<Option<(usize, String)>> {
        let pos = self.pos();
        let Some(Tok::Ident(name)) = self.peek().cloned() else {
            return Ok(None);
        };
        self.at += 1;
        if name == "sqrt" {
            self.expect('(')?;
            let neg = self.eat('-');
            let p = self.pos();
            let Some(Tok::Num(d)) = self.peek().cloned() else {
                return Err(err(p, "expected an integer radicand"));
            };
            self.at += 1;
            self.expect(')')?;
            let d = if neg { -d } else { d };
            return Ok(Some((pos, format!("sqrt({d})"))));
        }
        Ok(Some((pos, name)))
    }

    /// Signed terms `coef*unit`, `coef`, `unit` or `unit*coef`, summed by unit
    /// (the empty string is the constant term). Stops before `,`, `]` or the end.
    fn terms(&mut self) -> Result<Vec<(usize, String, Rational)>> {
        let mut out: Vec<(usize, String, Rational)> = Vec::new();
        let mut first = true;
        loop {
            let pos = self.pos();
            let neg = if self.eat('-') {
                true
            } else {
                if !self.eat('+') && !first {
                    break;
                }
                false
            };
            first = false;
            let coef = self.rational()?;
            let had_coef = coef.is_some();
            if had_coef {
                self.eat('*');
            }
            let unit = self.unit()?;
            let mut coef = coef.unwrap_or_else(Rational::one);
            if unit.is_some() && !had_coef && self.eat('*') {
                coef = self.rational()?.ok_or_else(|| err(self.pos(), "expected a coefficient"))?;
            }
            if !had_coef && unit.is_none() {
                return Err(err(self.pos(), "expected a number or a unit"));
            }
            let (upos, name) = unit.unwrap_or((pos, String::new()));
            let coef = if neg { -coef } else { coef };
            match out.iter_mut().find(|(_, n, _)| *n == name) {
                Some(slot) => slot.2 += coef,
                None => out.push((upos, name, coef)),
            }
            if self.at_end() || matches!(self.peek(), Some(Tok::Sym(',' | ']'))) {
                break;
            }
        }
        Ok(out)
    }
}

fn coef_of(terms: &[(usize, String, Rational)], unit: &str) -> Rational {
    terms.iter().find(|(_, n, _)| n == unit).map_or_else(Rational::zero, |t| t.2.clone())
}

/// One idempotent component; `None` for the radicand means Gaussian or rational.
fn component(terms: &[(usize, String, Rational)]) -> Result<(Option<i64>, Rational, Rational)> {
    let mut radicand: Option<(i64, usize)> = None;
    let mut has_i = false;
    for (pos, name, _) in terms {
        match name.as_str() {
            "" => {}
            "i" => has_i = true,
            s if s.starts_with("sqrt(") => {
                let d: i64 = s[5..s.len() - 1].parse().map_err(|_| err(*pos, "radicand out of range"))?;
                if d == -1 {
                    has_i = true;
                    continue;
                }
                if radicand.is_some_and(|(r, _)| r != d) {
                    return Err(err(*pos, "a component may involve only one square root"));
                }
                radicand = Some((d, *pos));
            }
            "j" | "k" => {
                return Err(err(*pos, format!("'{name}' mixes the Cartesian view into an idempotent component")))
            }
            other => return Err(err(*pos, format!("unknown unit '{other}'"))),
        }
    }
    let a = coef_of(terms, "");
    match radicand {
        Some((_, pos)) if has_i => Err(err(pos, "a component may not mix i with sqrt(D)")),
        Some((d, pos)) => {
            let b = coef_of(terms, &format!("sqrt({d})"));
            QuadRat::new(d, a.clone(), b.clone()).map_err(|e| err(pos, e.to_string()))?;
            Ok((Some(d), a, b))
        }
        None => {
            let b = coef_of(terms, "i") + coef_of(terms, "sqrt(-1)");
            Ok((None, a, b))
        }
    }
}

fn scalar_of(radicand: Option<i64>, a: Rational, b: Rational, rational_ok: bool) -> Scalar {
    match radicand {
        Some(d) => Scalar::Quad(QuadRat::new(d, a, b).expect("validated")),
        None if rational_ok && b.is_zero() => Scalar::Rat(a),
        None => Scalar::Gauss(GaussRat::new(a, b)),
    }
}

/// Reads an element in either view.
pub fn parse_element(src: &str) -> Result<BicomplexElement> {
    let mut p = Parser::new(src)?;
    if p.at_end() {
        return Err(err(0, "empty element"));
    }
    if p.eat('[') {
        let t1 = p.terms()?;
        p.expect(',')?;
        let t2 = p.terms()?;
        p.expect(']')?;
        if !p.at_end() {
            return Err(err(p.pos(), "trailing input after ']' (views cannot be mixed)"));
        }
        let (d1, a1, b1) = component(&t1)?;
        let (d2, a2, b2) = component(&t2)?;
        // rational components sit in Q only next to a quadratic one
        let quad = d1.is_some() || d2.is_some();
        return Ok(BicomplexElement::new(scalar_of(d1, a1, b1, quad), scalar_of(d2, a2, b2, quad)));
    }
    if let Some((pos, _)) = p.toks.iter().find(|(_, t)| matches!(t, Tok::Sym('[' | ']'))) {
        return Err(err(*pos, "idempotent brackets inside a Cartesian expression (views cannot be mixed)"));
    }
    let terms = p.terms()?;
    if !p.at_end() {
        return Err(err(p.pos(), "unexpected token"));
    }
    for (pos, name, _) in &terms {
        if !["", "i", "j", "k"].contains(&name.as_str()) {
            return Err(err(*pos, format!("unknown unit '{name}' in Cartesian view")));
        }
    }
    let [x, y, z, t] = ["", "i", "j", "k"].map(|u| coef_of(&terms, u));
    Ok(BicomplexElement::from_cartesian(x, y, z, t))
}

/// Reads a polynomial in `X`.
pub fn parse_poly(src: &str) -> Result<RatPoly> {
    let mut p = Parser::new(src)?;
    if p.at_end() {
        return Err(err(0, "empty polynomial"));
    }
    let mut acc = RatPoly::zero();
    let mut first = true;
    while !p.at_end() {
        let pos = p.pos();
        let neg = if p.eat('-') {
            true
        } else {
            if !p.eat('+') && !first {
                return Err(err(pos, "expected '+' or '-'"));
            }
            false
        };
        first = false;
        let coef = p.rational()?;
        if coef.is_some() {
            p.eat('*');
        }
        let mut exp = 0u32;
        let upos = p.pos();
        match p.peek().cloned() {
            Some(Tok::Ident(name)) if name == "X" || name == "x" => {
                p.at += 1;
                exp = 1;
                if p.eat('^') {
                    let epos = p.pos();
                    match p.peek().cloned() {
                        Some(Tok::Num(e)) => {
                            p.at += 1;
                            exp = u32::try_from(e).map_err(|_| err(epos, "exponent too large"))?;
                        }
                        _ => return Err(err(epos, "expected an exponent")),
                    }
                }
            }
            Some(Tok::Ident(name)) => return Err(err(upos, format!("unknown variable '{name}', use X"))),
            _ if coef.is_none() => return Err(err(upos, "expected a term")),
            _ => {}
        }
        let c = coef.unwrap_or_else(Rational::one);
        let c = if neg { -c } else { c };
        acc = &acc + &RatPoly::monomial(c, exp as usize);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn cartesian() {
        assert_eq!(parse_element("1+i+j-k").unwrap(), BicomplexElement::from_cartesian_ints(1, 1, 1, -1));
        let w = parse_element("3/2 - 5/7*j").unwrap();
        assert_eq!(w.to_cartesian().unwrap(), [rat(3, 2), rat(0, 1), rat(-5, 7), rat(0, 1)]);
        assert_eq!(parse_element("-k").unwrap(), BicomplexElement::k().neg());
        assert_eq!(parse_element("2*i + i*3 - 0").unwrap(), BicomplexElement::from_cartesian_ints(0, 5, 0, 0));
        assert_eq!(parse_element("0").unwrap(), BicomplexElement::zero());
    }

    #[test]
    fn idempotent() {
        let w = parse_element("[2, 2*i]").unwrap();
        assert_eq!(w, BicomplexElement::from_cartesian_ints(1, 1, 1, -1));
        let w = parse_element("[1/2+1/2*sqrt(-3), 1]").unwrap();
        assert_eq!(w.c1(), &Scalar::Quad(QuadRat::new(-3, rat(1, 2), rat(1, 2)).unwrap()));
        assert_eq!(w.c2(), &Scalar::int(1));
        assert_eq!(parse_element("[sqrt(-1), -i]").unwrap(), BicomplexElement::k());
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_element("1+[2,3]").unwrap_err(),
            err(2, "idempotent brackets inside a Cartesian expression (views cannot be mixed)")
        );
        assert!(matches!(parse_element("[1+j, 2]"), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(parse_element("1 + q"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_element("1/0"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_element("[1, 2] + j"), Err(Error::Parse { pos: 7, .. })));
        assert!(matches!(parse_element(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_element("[sqrt(4), 1]"), Err(Error::Parse { .. })));
        assert!(matches!(parse_element("[i+sqrt(2), 1]"), Err(Error::Parse { .. })));
    }

    #[test]
    fn printed_forms_reparse() {
        for w in [
            BicomplexElement::from_cartesian_ints(1, 1, 1, -1),
            BicomplexElement::from_cartesian(rat(3, 2), rat(0, 1), rat(-5, 7), rat(1, 3)),
            BicomplexElement::new(Scalar::quad(2, 1, -1).unwrap(), Scalar::int(3)),
            BicomplexElement::new(Scalar::quad(-3, 0, 1).unwrap(), Scalar::quad(5, 2, 1).unwrap()),
        ] {
            assert_eq!(parse_element(&w.to_string()).unwrap(), w);
            assert_eq!(parse_element(&w.idempotent_string()).unwrap().to_string(), w.to_string());
        }
    }

    #[test]
    fn polynomials() {
        assert_eq!(parse_poly("X^3 - 2*X^2 + 4*X - 8").unwrap(), RatPoly::from_ints(&[-8, 4, -2, 1]));
        assert_eq!(parse_poly("x^2+1").unwrap(), RatPoly::from_ints(&[1, 0, 1]));
        assert_eq!(parse_poly("-3/4*X + 1/2").unwrap().to_string(), "-3/4*X + 1/2");
        assert_eq!(parse_poly("X + X").unwrap(), RatPoly::from_ints(&[0, 2]));
        assert!(matches!(parse_poly("X^"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_poly("Y+1"), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_poly("2 3"), Err(Error::Parse { pos: 2, .. })));
    }
}
