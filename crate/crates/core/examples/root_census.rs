//! Where the n^2 bicomplex roots of a polynomial live.

use bicomplex::arith::IntPoly;
use bicomplex::census::{census, census_cyclotomic, RootSet};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = IntPoly::from_i64(&[-8, 4, -2, 1])?;
    let c = census(&p)?;
    println!(
        "{p}: n={} r={} s={} 2s_i={} 2s_j={} 2s_k={} 4d={} total={}",
        c.n,
        c.r,
        c.s,
        c.two_s_i,
        c.two_s_j,
        c.two_s_k,
        c.four_d,
        c.total()
    );

    for n in [3, 5, 8, 12] {
        let c = census_cyclotomic(n)?;
        println!("Phi_{n}: degree {} with {} real roots, {} bicomplex roots", c.n, c.r, c.total());
    }

    // every root is a Gaussian rational here, so they can be listed
    if let Some(set) = RootSet::from_poly(&p)? {
        for (w, locus) in set.enumerate() {
            println!("  {:<14} {locus}", w.to_string());
        }
        let f = set.locus_factors();
        println!("locus factor degrees {:?}", f.degrees());
    }
    Ok(())
}
