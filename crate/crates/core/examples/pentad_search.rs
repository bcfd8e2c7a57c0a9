//! Search the order-64 group for maximal anticommuting sets and summarize
//! them by square signature and whether they generate the whole group.
//!
//! cargo run --release --example pentad_search

use std::collections::BTreeMap;

use zero_algebra::matrix::gamma_relations_check;
use zero_algebra::pentad::{self, format_signature, GAMMA_SIGNATURE};

fn main() -> zero_algebra::Result<()> {
    for level in 2..=6 {
        println!(
            "level {level}: largest anticommuting set {}",
            pentad::max_anticommuting_set_size(level)?
        );
    }

    let all = pentad::find_pentads(5, None)?;
    let mut census: BTreeMap<(String, bool), usize> = BTreeMap::new();
    for p in &all {
        let mut sig = p.signature();
        sig.sort();
        *census
            .entry((format_signature(&sig), p.generates_full_group()))
            .or_default() += 1;
    }
    println!("\n{} pentads at level 5", all.len());
    for ((sig, generates), n) in census {
        println!("  ({sig})  generates: {generates:<5}  {n}");
    }

    let gamma = &pentad::find_pentads(5, Some(&GAMMA_SIGNATURE))?[0];
    let members: Vec<String> = gamma.members().iter().map(ToString::to_string).collect();
    println!("\nfirst (+,-,-,-,+) pentad: {}", members.join(" "));
    let r = gamma_relations_check(gamma)?;
    println!(
        "anticommutators vanishing {}/10, squares {:?}, span dimension {}",
        r.vanishing_off_diagonal, r.diagonal, r.span_dimension
    );
    Ok(())
}
