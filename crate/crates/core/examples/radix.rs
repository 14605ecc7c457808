//! Digit expansions in Gaussian and hyperbolic bases.

use bicomplex::radix::{decode, digit_set, encode, DigitString, RadixBase, RadixValue};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = RadixValue::gaussian(3, 2);
    for base in ["gauss:-1+", "gauss:-1-", "gauss:-2+"] {
        let base: RadixBase = base.parse()?;
        let s = encode(&x, base)?;
        println!("{x} in {base} (radix {}): {}", base.radix(), s.msb_string());
        assert_eq!(decode(&s)?, x);
    }

    let base = RadixBase::hyp_gauss(-3)?;
    println!("{base} digits {:?}", digit_set(base).len());
    for (u, v) in [(7, 2), (-12, 5), (0, -1)] {
        let x = RadixValue::hyperbolic_cartesian(u, v);
        println!("  {x} -> {}", encode(&x, base)?.msb_string());
    }

    // the split base only reaches part of the lattice
    let base = RadixBase::hyp_split(-2)?;
    let reachable = decode(&DigitString::new(vec![3, 0, 5, 1], base)?)?;
    for x in [reachable, RadixValue::hyperbolic(3, 0)] {
        match encode(&x, base) {
            Ok(s) => println!("{x} in {base}: {}", s.msb_string()),
            Err(e) => println!("{x} in {base}: {e}"),
        }
    }
    Ok(())
}
