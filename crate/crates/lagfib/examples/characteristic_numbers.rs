//! Characteristic numbers from Chern-number records: load or build a
//! manifold record, evaluate the A-roof genus and its square root on it, and
//! derive the fibration invariants.
//!
//! Run with: cargo run -p lagfib --example characteristic_numbers

use lagfib::char_classes::{ahat_series, characteristic_number, sqrt_ahat_series, ChernNumbers};
use lagfib::fibration::b_theta_from_sqrt_ahat;

fn main() {
    let records = [
        ChernNumbers::new("K3", 2, &[("c2", 24)]).unwrap(),
        ChernNumbers::new("S[2]", 4, &[("c2.c2", 828), ("c4", 324)]).unwrap(),
        ChernNumbers::new("K2", 4, &[("c2.c2", 756), ("c4", 108)]).unwrap(),
    ];
    for record in &records {
        let dim = record.complex_dimension;
        let n = dim / 2;
        let ahat = characteristic_number(&ahat_series(dim), record).unwrap();
        let sqrt = characteristic_number(&sqrt_ahat_series(dim), record).unwrap();
        println!("{} (complex dimension {dim}):", record.name);
        println!("  record    = {}", record.to_json());
        println!("  ahat      = {ahat}");
        println!("  sqrt-ahat = {sqrt}");
        println!("  b_theta   = {}", b_theta_from_sqrt_ahat(n, &sqrt));
        println!();
    }
}
