use num_traits::Signed;

use super::{IntPoly, RatPoly};
use crate::error::{Error, Result};

/// Sturm chain `p, p', -rem(p, p'), ...`, each term reduced to its primitive
/// part by a positive factor so the sign pattern is unchanged.
pub fn sturm_chain(p: &IntPoly) -> Result<Vec<RatPoly>> {
    if p.degree() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let mut chain = vec![p.to_rat(), p.to_rat().derivative().scale_positive()];
    loop {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1])?;
        if r.is_zero() {
            break;
        }
        chain.push((-r).scale_positive());
    }
    if chain.last().and_then(RatPoly::degree) != Some(0) {
        return Err(Error::NotSquarefree);
    }
    Ok(chain)
}

fn variations(signs: impl Iterator<Item = bool>) -> usize {
    let mut count = 0;
    let mut prev = None;
    for s in signs {
        if prev.is_some_and(|q| q != s) {
            count += 1;
        }
        prev = Some(s);
    }
    count
}

/// Number of distinct real roots of a squarefree polynomial.
pub fn sturm_real_root_count(p: &IntPoly) -> Result<usize> {
    let chain = sturm_chain(p)?;
    // sign at +inf is the sign of the lead; at -inf it flips for odd degree
    let at_pos = chain.iter().map(|q| q.leading().expect("nonzero").is_positive());
    let at_neg = chain.iter().map(|q| {
        let pos = q.leading().expect("nonzero").is_positive();
        if q.degree().expect("nonzero") % 2 == 1 {
            !pos
        } else {
            pos
        }
    });
    Ok(variations(at_neg) - variations(at_pos))
}
