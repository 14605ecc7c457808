//! Minimal and quartic characteristic polynomials.

use bicomplex::minpoly::{minpoly_bicomplex, quartic_charpoly};
use bicomplex::BicomplexElement;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let samples = [
        BicomplexElement::from_cartesian_ints(1, 1, 1, -1),
        BicomplexElement::from_cartesian_ints(3, 0, 2, 0),
        BicomplexElement::from_cartesian_ints(1, 2, 0, 0),
        BicomplexElement::from_cartesian_ints(0, 1, 1, 0),
    ];
    for w in &samples {
        let m = minpoly_bicomplex(w);
        let p = quartic_charpoly(w)?;
        println!("{w}");
        println!("  components {}", w.idempotent_string());
        println!("  minimal    {}  ({} , {})", m.poly, m.components.0, m.components.1);
        println!("  quartic    {}", p.poly);
    }
    Ok(())
}
