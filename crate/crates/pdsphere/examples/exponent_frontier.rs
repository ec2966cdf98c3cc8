//! EXPLORATORY: where does positivity appear to begin as the exponent
//! drops below the proven threshold? No theorem covers this region; the
//! scan only records what it sees.

use pdsphere::verify::{conjecture_frontier, default_t_grid};

fn main() -> pdsphere::Result<()> {
    let t_grid = default_t_grid();

    // half-integer pair (1/2, 1/2): proven from delta = ceil(1/2) + 1 = 2
    let report = conjecture_frontier(0.5, 0.5, &[0.5, 0.75, 1.0, 1.25, 1.5, 2.0], 40, &t_grid)?;
    println!("EXPLORATORY frontier at (alpha, beta) = (1/2, 1/2), n <= 40:");
    println!("{:>6} {:>10} {:>6} {:>13} {:>11}",
        "delta", "negatives", "zero", "min value", "min margin");
    for row in &report.rows {
        println!("{:>6} {:>10} {:>6} {:>13.3e} {:>11.1}",
            row.delta, row.negatives, row.zero_consistent, row.min_value, row.min_margin);
    }
    match report.smallest_clean_delta {
        Some(d) => println!("no sign trouble from delta = {d} on this grid"),
        None => println!("every scanned exponent showed sign trouble"),
    }

    // far below the threshold negatives are expected and recorded
    let report = conjecture_frontier(1.0, 0.0, &[0.01], 10, &t_grid)?;
    let row = &report.rows[0];
    println!("\ncontrol at (1, 0), delta = 0.01: {} negatives, min value {:.3e}",
        row.negatives, row.min_value);
    Ok(())
}
