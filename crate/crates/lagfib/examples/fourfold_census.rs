//! The finite census of admissible four-fold invariants: every Betti pair
//! with b2 >= 4 contributes, for each divisor d of rw = 1152 sqrt-A-roof
//! with a perfect-square quotient, a row (b2, b3, d, deg Delta).
//!
//! Run with: cargo run -p lagfib --example fourfold_census

use lagfib::fourfold::{bounds_summary, census, census_to_csv};

fn main() {
    let rows = census(true);
    println!("integer-degree census: {} rows", rows.len());

    // the two rows realized by known geometry
    for row in &rows {
        let betti = (row.invariants.betti.b2, row.invariants.betti.b3);
        if (betti == (23, 0) && row.d == 1) || (betti == (7, 8) && row.d == 3) {
            println!(
                "  realized: b2={} b3={} d={} deg_delta={}",
                betti.0,
                betti.1,
                row.d,
                row.deg_delta.unwrap()
            );
        }
    }

    let bounds = bounds_summary(&rows).unwrap();
    println!(
        "bounds: max_rw={} max_d={} max_deg_delta={}",
        bounds.max_rw, bounds.max_d, bounds.max_deg
    );

    let loose = census(false);
    let loose_bounds = bounds_summary(&loose).unwrap();
    println!(
        "without integrality: {} rows, max admissible d = {}",
        loose.len(),
        loose_bounds.max_d
    );

    // first lines of the CSV export
    println!("\ncsv head:");
    for line in census_to_csv(&rows).lines().take(5) {
        println!("  {line}");
    }
}
