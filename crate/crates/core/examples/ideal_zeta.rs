//! Ideal norms, ideal-counting coefficients and truncated zeta sums.

use bicomplex::ideals::{ideal_norm, BicomplexIdeal};
use bicomplex::integers::ExtensionDescriptor;
use bicomplex::zeta::{coefficient_table, zeta_partial, CountingField};
use bicomplex::BicomplexElement;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let zb = ExtensionDescriptor::quartic();
    let a = BicomplexIdeal::principal(&BicomplexElement::gauss_ints(2, 1, 1, 1), &zb)?;
    println!("N({a}) = {}", ideal_norm(&a)?);

    for k in
        [CountingField::rational(), CountingField::gaussian(), CountingField::hyperbolic(), CountingField::quartic()]
    {
        let t = coefficient_table(k, 12)?;
        println!("{k:>3}: {:?}", t.values());
    }
    let z = zeta_partial(CountingField::hyperbolic(), 2.0, 10_000)?;
    let pi4 = std::f64::consts::PI.powi(4) / 36.0;
    println!("sum_(n<=10^4) d(n)/n^2 = {z:.6}, zeta(2)^2 = {pi4:.6}");
    Ok(())
}
