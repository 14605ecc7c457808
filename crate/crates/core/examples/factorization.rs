//! Unique factorization in Z_h = Z e1 + Z e2 and Z_B = Z[i] e1 + Z[i] e2.

use bicomplex::arith::int;
use bicomplex::integers::{factor, rational_prime_profile, ExtensionDescriptor};
use bicomplex::BicomplexElement;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let zh = ExtensionDescriptor::hyperbolic();
    let zb = ExtensionDescriptor::quartic();

    let w = BicomplexElement::from_cartesian_ints(60, 0, 12, 0);
    println!("in {zh}: {w} = {}", factor(&w, &zh)?);

    let w = BicomplexElement::gauss_ints(12, 5, -7, 9);
    let f = factor(&w, &zb)?;
    println!("in {zb}: {w} = {f}");
    assert_eq!(f.recompose(), w);

    for p in [2, 3, 5, 7, 13] {
        let prof = rational_prime_profile(&int(p), &zb)?;
        println!("  {p:>2}: {} prime factors, semiprime {}", prof.factor_count, prof.semiprime);
    }
    Ok(())
}
