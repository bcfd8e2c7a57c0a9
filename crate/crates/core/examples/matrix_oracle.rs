//! Represent the groups by tensor products of Pauli matrices and check that
//! the representation is a faithful homomorphism.
//!
//! cargo run --release --example matrix_oracle

use zero_algebra::matrix::{represent, verify_homomorphism};

fn main() -> zero_algebra::Result<()> {
    for level in 0..=6 {
        let r = verify_homomorphism(level)?;
        println!(
            "level {level}: {}x{} matrices, {} distinct images, {}/{} products match",
            represent(level)?.dim(),
            represent(level)?.dim(),
            r.distinct_images,
            r.products_matched,
            r.products_checked
        );
    }
    let rep = represent(3)?;
    for (m, img) in rep.images()?.iter().step_by(2).take(4) {
        print!("\n{m} ->\n{img}");
    }
    Ok(())
}
