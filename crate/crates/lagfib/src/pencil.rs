//! Independent verification route for the discriminant degree: count the
//! singular members of a pencil of hyperplane sections as the third Chern
//! class of the rank-3 bundle O(C,1) + T*S(C,1) on Surface x P1.
//!
//! The computation runs in the free graded ring on C, h (weight 1) and
//! g = c_2(S) (weight 2); the relations of Surface x P1 (h^2 = 0, classes of
//! degree 3 on the surface, pullback vanishing) are applied only in the final
//! evaluation functional, which keeps every vanishing monomial auditable.

use std::collections::BTreeMap;

use num_traits::One;

use crate::error::{Error, Result};
use crate::graded_ring::RingSpec;
use crate::rational::{rat_int, Rational};

/// Numerical data of a polarized surface with trivial canonical class:
/// the Euler characteristic c_2(S) and the self-intersection of the
/// polarizing curve. The construction assumes c_1(S) = 0 and a polarizing
/// curve with C^2 = 2g - 2; the computation itself is polynomial in the two
/// numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurfaceData {
    /// c_2(S), the Euler characteristic: 24 for a K3 surface, 0 for an
    /// abelian surface.
    pub c2_number: i64,
    /// C^2 = 2g - 2 for a genus-g polarizing curve.
    pub curve_self_intersection: i64,
}

impl SurfaceData {
    /// K3 surface polarized by a genus-n curve: c_2 = 24, C^2 = 2n - 2.
    pub fn k3(n: u32) -> Self {
        SurfaceData {
            c2_number: 24,
            curve_self_intersection: 2 * i64::from(n) - 2,
        }
    }

    /// Abelian surface with a polarization of type (1, n+1): c_2 = 0,
    /// C^2 = 2(n + 1).
    pub fn abelian(n: u32) -> Self {
        SurfaceData {
            c2_number: 0,
            curve_self_intersection: 2 * (i64::from(n) + 1),
        }
    }
}

/// Number of singular members of a generic pencil: c_3 of
/// O(D) + (T*S tensor O(D)) on Surface x P1 with D = C + h, evaluated
/// against the intersection relations of the product.
///
/// The Whitney product (1 + D)(1 + 2D + (g + D^2)) is expanded in the free
/// ring; its weight-3 part D g + D^3 is then evaluated with C^2 h mapped to
/// C^2, h g mapped to c_2(S), every other weight-3 monomial to zero.
pub fn pencil_degree(surface: &SurfaceData) -> Result<i64> {
    let ring = RingSpec::new(&[("C", 1), ("h", 1), ("g", 2)], 3)?;
    let c = ring.generator("C")?;
    let h = ring.generator("h")?;
    let g = ring.generator("g")?;
    let d = c.add(&h)?;

    // c(O(D)) = 1 + D
    let line_part = ring.one().add(&d)?;
    // c(T*S(D)) = 1 + 2D + (g + D^2), using c_1(T*S) = 0 and c_2(T*S) = c_2(S)
    let twisted_cotangent = ring
        .one()
        .add(&d.scalar_mul(&rat_int(2)))?
        .add(&g)?
        .add(&d.mul(&d)?)?;
    let total = line_part.mul(&twisted_cotangent)?;
    let c3 = total.weight_part(3);

    let mut values = BTreeMap::new();
    values.insert(
        ring.monomial(&[("C", 2), ("h", 1)])?,
        rat_int(surface.curve_self_intersection),
    );
    values.insert(
        ring.monomial(&[("h", 1), ("g", 1)])?,
        rat_int(surface.c2_number),
    );
    let degree = c3.evaluate(&values, 3)?;
    if !degree.denom().is_one() {
        return Err(Error::NonIntegerResult(degree));
    }
    rational_to_i64(&degree)
}

fn rational_to_i64(value: &Rational) -> Result<i64> {
    i64::try_from(value.numer().clone()).map_err(|_| Error::NonIntegerResult(value.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k3_family() {
        for n in 1..=10u32 {
            assert_eq!(
                pencil_degree(&SurfaceData::k3(n)).unwrap(),
                6 * (i64::from(n) + 3),
                "K3 pencil at n = {n}"
            );
        }
    }

    #[test]
    fn abelian_family() {
        for n in 1..=10u32 {
            assert_eq!(
                pencil_degree(&SurfaceData::abelian(n)).unwrap(),
                6 * (i64::from(n) + 1),
                "abelian pencil at n = {n}"
            );
        }
    }

    #[test]
    fn degenerate_surface() {
        let zero = SurfaceData {
            c2_number: 0,
            curve_self_intersection: 0,
        };
        assert_eq!(pencil_degree(&zero).unwrap(), 0);
    }

    #[test]
    fn affine_linearity() {
        // The evaluation collapses to c_2(S) + 3 C^2; check against the ring
        // route on random inputs.
        use rand::{rngs::StdRng, Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(23);
        for _ in 0..100 {
            let surface = SurfaceData {
                c2_number: rng.gen_range(-200..200),
                curve_self_intersection: 2 * rng.gen_range(-100..100),
            };
            assert_eq!(
                pencil_degree(&surface).unwrap(),
                surface.c2_number + 3 * surface.curve_self_intersection
            );
        }
    }
}
