//! Build the nilpotent operator for a few (E, p, m) points, show the
//! exclusion and boson products and the plane-wave annihilation table.
//!
//! cargo run --example nilpotent_operator

use zero_algebra::algebra::rational;
use zero_algebra::monomial::Sign;
use zero_algebra::nilpotent::{
    boson_product, dirac_annihilation_table, exclusion_product, first_nilpotent_pentad,
    NilpotentOperator,
};

fn main() -> zero_algebra::Result<()> {
    let pentad = first_nilpotent_pentad(5)?;
    let plus = (Sign::Plus, Sign::Plus);
    for (e, p, m) in [(5, [0, 0, 4], 3), (13, [3, 4, 12], 0), (2, [0, 0, 1], 1)] {
        let op =
            NilpotentOperator::build(&pentad, rational(e), p.map(rational), rational(m), plus)?;
        println!("{}  squared = {}", op.element(), op.square());
    }

    let momentum = [0, 0, 4].map(rational);
    let fermion =
        NilpotentOperator::build(&pentad, rational(5), momentum.clone(), rational(3), plus)?;
    let anti = fermion.antifermion();
    println!(
        "\nfermion x fermion = {}",
        exclusion_product(&fermion, &fermion)?
    );
    println!(
        "fermion x antifermion = {}",
        boson_product(&fermion, &anti)?
    );

    let table = dirac_annihilation_table(&pentad, &rational(5), &momentum, &rational(3))?;
    println!("\nannihilation (rows: operator signs, columns: amplitude signs)");
    for (label, row) in ["++", "+-", "-+", "--"].iter().zip(table) {
        let cells: Vec<&str> = row.iter().map(|&z| if z { "0" } else { "." }).collect();
        println!("  {label}  {}", cells.join(" "));
    }
    Ok(())
}
