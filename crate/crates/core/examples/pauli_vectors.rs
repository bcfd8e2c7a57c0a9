//! Multiply vectors through the order-16 vector units and compare with the
//! dot plus pseudoscalar-times-cross decomposition.
//!
//! cargo run --example pauli_vectors

use zero_algebra::algebra::{ratio, AlgebraElement};
use zero_algebra::group;
use zero_algebra::verify::pauli_product_holds;

fn main() -> zero_algebra::Result<()> {
    let roles = group::classify_units(3)?;
    let iota = roles.pseudoscalar()?;
    let units = roles.vectors.expect("level 3 has vector units");
    println!(
        "pseudoscalar {iota}, vector units {} {} {}",
        units[0], units[1], units[2]
    );

    let a = [ratio(1, 2), ratio(-3, 1), ratio(2, 1)];
    let b = [ratio(4, 1), ratio(0, 1), ratio(-1, 3)];
    let vec = |v: &[_; 3]| AlgebraElement::from_terms(v.iter().cloned().zip(units));
    let product = vec(&a) * vec(&b);
    println!("a b = {product}");
    println!(
        "matches a.b + {iota} (a x b): {}",
        pauli_product_holds(&a, &b)?
    );
    println!(
        "i j = {}, j i = {}",
        units[0] * units[1],
        units[1] * units[0]
    );
    Ok(())
}
