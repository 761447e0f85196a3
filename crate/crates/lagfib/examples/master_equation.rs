//! The coefficient-comparison pipeline behind the degree formulas: eliminate
//! the quadratic form from the two Fujiki relations, solve for the
//! intersection number c2 . Y^(n-1) . L^(n-1), and divide out to the degree.
//! The multiple m by which the divisor restricts to the fibre polarization
//! provably cancels; the sweep below shows it numerically.
//!
//! Run with: cargo run -p lagfib --example master_equation

use lagfib::fibration::{master_equation_solve, FujikiData};
use lagfib::rational::rat;

fn main() {
    let cases = [
        ("Hilbert scheme of 2 points", 1u64, rat(25, 32)),
        ("generalized Kummer four-fold", 3u64, rat(27, 32)),
    ];
    for (label, product, sqrt_ahat) in cases {
        println!("== {label}: product d1 d2 = {product}, sqrt_ahat = {sqrt_ahat} ==");
        println!("m   c2_yl   b_theta  deg_delta");
        for m in 1..=5u64 {
            let result = master_equation_solve(&FujikiData {
                n: 2,
                polarization_product: product,
                sqrt_ahat: sqrt_ahat.clone(),
                theta_multiple: m,
            })
            .unwrap();
            println!(
                "{m:<3} {:<7} {:<8} {}",
                result.c2_yl.to_string(),
                result.b_theta.to_string(),
                result.deg_delta
            );
        }
        println!();
    }
}
