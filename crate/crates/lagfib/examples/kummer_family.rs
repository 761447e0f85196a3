//! Discriminant degrees for fibrations on generalized Kummer varieties,
//! whose fibres carry a non-principal polarization of type (1, ..., 1, n+1),
//! again along two independent routes.
//!
//! Run with: cargo run -p lagfib --example kummer_family

use lagfib::fibration::{
    deg_delta_polarized, known_example_polarization, known_example_sqrt_ahat, Family,
};
use lagfib::pencil::{pencil_degree, SurfaceData};

fn main() {
    println!("n   polarization          formula  pencil");
    for n in 1..=10u32 {
        let pol = known_example_polarization(Family::GeneralizedKummer, n);
        let sqrt_ahat = known_example_sqrt_ahat(Family::GeneralizedKummer, n);
        let formula = deg_delta_polarized(n, &pol, &sqrt_ahat).unwrap();
        let counted = pencil_degree(&SurfaceData::abelian(n)).unwrap();
        assert_eq!(formula.to_string(), counted.to_string());
        let entries = format!(
            "({})",
            pol.entries()
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        println!("{n:<3} {entries:<22} {formula:<8} {counted}");
    }
    println!("\nboth routes give 6(n+1); n = 1 is the Kummer K3 with twelve I2 fibres");
}
