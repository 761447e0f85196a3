//! Discriminant degrees for fibrations on Hilbert schemes of points on a K3
//! surface, computed along two independent routes: the closed degree formula
//! fed with sqrt-A-roof, and the singular-member count of a pencil of
//! hyperplane sections on K3 x P1.
//!
//! Run with: cargo run -p lagfib --example hilbert_scheme_family

use lagfib::fibration::{
    b_theta_from_sqrt_ahat, deg_delta_principal, known_example_sqrt_ahat, Family,
};
use lagfib::pencil::{pencil_degree, SurfaceData};

fn main() {
    println!("n   sqrt_ahat           b_theta           formula  pencil");
    for n in 1..=10u32 {
        let sqrt_ahat = known_example_sqrt_ahat(Family::HilbertScheme, n);
        let b_theta = b_theta_from_sqrt_ahat(n, &sqrt_ahat);
        let formula = deg_delta_principal(n, &sqrt_ahat).unwrap();
        let counted = pencil_degree(&SurfaceData::k3(n)).unwrap();
        assert_eq!(formula.to_string(), counted.to_string());
        println!("{n:<3} {sqrt_ahat:<19} {b_theta:<17} {formula:<8} {counted}");
    }
    println!("\nboth routes give 6(n+3); n = 1 is the elliptic K3 with 24 singular fibres");
}
