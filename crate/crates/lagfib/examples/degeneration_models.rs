//! Degeneration models of a polarized abelian fibre: chains of k P1-bundles
//! over an (n-1)-dimensional abelian variety, constrained by k | d_n,
//! d_i | d'_i, and the product identity d_1...d_n = d'_1...d'_(n-1) k.
//!
//! Run with: cargo run -p lagfib --example degeneration_models

use lagfib::fibration::{degeneration_models, PolarizationType};

fn main() {
    for d in [
        vec![1u64],
        vec![1, 2],
        vec![1, 3],
        vec![2, 4],
        vec![1, 1, 4],
        vec![1, 2, 6],
    ] {
        let pol = PolarizationType::new(&d).unwrap();
        let models = degeneration_models(&pol);
        let entries = d
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",");
        println!("polarization ({entries}): {} models", models.len());
        for model in models {
            let d_prime = model
                .d_prime
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",");
            println!("  k={} d_prime=({d_prime})", model.k);
        }
    }
    println!("\nfor (1,p) with p prime there are exactly two models:");
    println!("one irreducible fibre and one with p components");
}
