//! Expand the A-roof genus and its formal square root in Chern classes.
//!
//! Run with: cargo run -p lagfib --example series_expansion

use lagfib::char_classes::{ahat_series, sqrt_ahat_series, zero_odd_chern};

fn main() {
    for weight in [4u32, 6, 8] {
        let ahat = ahat_series(weight);
        let sqrt = sqrt_ahat_series(weight);
        println!("== truncation weight {weight} ==");
        println!("ahat      = {}", zero_odd_chern(&ahat.element));
        println!("sqrt-ahat = {}", zero_odd_chern(&sqrt.element));

        // the defining property, exactly
        let square = sqrt.element.mul(&sqrt.element).unwrap();
        assert_eq!(square, ahat.element);
        println!("sqrt-ahat squared reproduces ahat exactly\n");
    }

    // with odd Chern classes kept, weight-3 terms of the genus survive
    let full = ahat_series(4);
    println!("full ahat through weight 4 (odd classes kept):");
    println!("{}", full.element);
}
