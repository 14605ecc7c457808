//! Idempotent components, conjugates and norm of a bicomplex number.
//!
//! cargo run --example decompose -- "1+i+j-k"

use bicomplex::cli::parse_element;
use bicomplex::Axis;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let src = std::env::args().nth(1).unwrap_or_else(|| "1+i+j-k".into());
    let w = parse_element(&src)?;
    println!("w        = {w}");
    println!("         = {}", w.idempotent_string());
    for a in Axis::ALL {
        println!("bar_{a}    = {}", w.conjugate(a));
    }
    println!("N(w)     = {}", w.norm()?);
    println!("null cone: {}", w.in_null_cone());
    if !w.in_null_cone() {
        println!("1/w      = {}", w.invert()?);
    }
    Ok(())
}
