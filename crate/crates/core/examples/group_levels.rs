//! Enumerate the signed-monomial groups, check their axioms and name the
//! special units of the order-16 and order-64 levels.
//!
//! cargo run --example group_levels

use zero_algebra::group::{self, Catalog, Role};

fn main() -> zero_algebra::Result<()> {
    let catalog = Catalog::new(5)?;
    for level in 0..=catalog.max_level() {
        let g = catalog.enumerate(level)?;
        let report = g.verify();
        let center: Vec<String> = g.center().iter().map(ToString::to_string).collect();
        println!(
            "level {level}: order {:>2}, axioms {}, center {{{}}}",
            g.order(),
            if report.passed() { "ok" } else { "FAIL" },
            center.join(", ")
        );
    }

    for level in [3, 5] {
        let roles = group::classify_units(level)?;
        println!("\nunits at order {}:", 1 << (level + 1));
        for r in roles.roles().into_iter().filter(|r| r.role != Role::Other) {
            println!("  {:<17} {}", format!("{:?}", r.role), r.monomial);
        }
    }

    let g = group::enumerate(1)?;
    println!("\nproduct table for order 4:\n{}", g.table_csv()?);
    Ok(())
}
