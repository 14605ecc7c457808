//! Unit groups and discriminants of a few rings of integers.

use bicomplex::integers::ExtensionDescriptor;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for name in ["Qh", "QB", "custom:Q(sqrt:-3),Q(i)", "custom:Q,Q(sqrt:2)"] {
        let ext: ExtensionDescriptor = name.parse()?;
        let g = ext.unit_group();
        let order = g.order.map_or("infinite".to_string(), |n| n.to_string());
        println!("{ext}: disc {}, units of order {order} ({}, {})", ext.discriminant(), g.class, g.structure);
        if let Some(w) = &g.witness {
            println!("  unit of infinite order {w}");
        }
    }
    Ok(())
}
