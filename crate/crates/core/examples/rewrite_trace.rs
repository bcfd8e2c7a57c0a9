//! Alternate create and conserve from the single-symbol state and map each
//! step onto the group it produces.
//!
//! cargo run --example rewrite_trace -- 5

use zero_algebra::rewrite;

fn main() -> zero_algebra::Result<()> {
    let steps = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);
    let trace = rewrite::run(steps)?;
    for step in &trace.steps {
        let group = rewrite::map_to_group(step.step)?;
        println!(
            "step {} {:?}: alphabet {} -> {} cells, {} cancelling pairs, {} novel; group order {}",
            step.step,
            step.label,
            step.alphabet,
            step.table.cell_count(),
            step.table.cancelling_pairs(),
            step.table.novel_cells(),
            group.order(),
        );
    }
    println!("final alphabet {}", trace.final_alphabet());
    Ok(())
}
