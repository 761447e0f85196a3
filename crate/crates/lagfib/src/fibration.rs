//! Degree formulas for the discriminant locus of a Lagrangian fibration:
//! the closed forms for principal and non-principal polarizations, the
//! Fujiki-relation pipeline they come from, and the admissible degeneration
//! models of a polarized fibre.
//!
//! Everything is exact. A formula that calls for an n-th root fails with
//! `NotPerfectPower` when the root is irrational; that signals inconsistent
//! input data rather than a computation to approximate.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::rational::{factorial, rational_nth_root, Rational};

// ---- Polarization types ----

/// An abelian-variety polarization type (d_1, ..., d_n) with the divisibility
/// chain d_1 | d_2 | ... | d_n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarizationType {
    d: Vec<u64>,
}

impl PolarizationType {
    /// Validate and build a polarization type.
    pub fn new(d: &[u64]) -> Result<Self> {
        if d.is_empty() {
            return Err(Error::InvalidPolarization(
                "polarization type must be non-empty".into(),
            ));
        }
        if d[0] == 0 {
            return Err(Error::InvalidPolarization(
                "entries must be positive".into(),
            ));
        }
        for window in d.windows(2) {
            if window[0] == 0 || window[1] % window[0] != 0 {
                return Err(Error::InvalidPolarization(format!(
                    "divisibility chain broken: {} does not divide {}",
                    window[0], window[1]
                )));
            }
        }
        Ok(PolarizationType { d: d.to_vec() })
    }

    /// The principal type (1, ..., 1) of length `n`.
    pub fn principal(n: usize) -> Self {
        PolarizationType { d: vec![1; n] }
    }

    /// The entries (d_1, ..., d_n).
    pub fn entries(&self) -> &[u64] {
        &self.d
    }

    /// Number of entries n.
    pub fn len(&self) -> usize {
        self.d.len()
    }

    /// True when the type has no entries (never, for a validated value).
    pub fn is_empty(&self) -> bool {
        self.d.is_empty()
    }

    /// The product d_1 ... d_n.
    pub fn product(&self) -> BigInt {
        self.d.iter().fold(BigInt::one(), |acc, &d| acc * d)
    }
}

// ---- Degeneration models ----

/// A model for the generic singular fibre of a fibration with polarization
/// type (d_1, ..., d_n): `k` P1-bundle components over an abelian variety of
/// dimension n-1 on which the limit divisor induces polarization `d_prime`.
///
/// Constraints: k divides d_n, each d_i divides the matched d'_i, and
/// d_1 ... d_n = d'_1 ... d'_(n-1) k. The `d_prime` entries are reported in
/// ascending order (the canonical chain order whenever a chain exists).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DegenerationModel {
    pub k: u64,
    pub d_prime: Vec<u64>,
}

/// Enumerate all degeneration models of a polarization type, ordered by `k`
/// ascending then `d_prime` lexicographic, without duplicates.
///
/// For n = 1 no abelian part remains, so `d_prime` is empty and the product
/// constraint forces k = d_1; this boundary case is an extrapolation of the
/// n >= 2 description.
pub fn degeneration_models(pol: &PolarizationType) -> Vec<DegenerationModel> {
    let d = pol.entries();
    let n = d.len();
    let d_last = d[n - 1];
    let mut models = Vec::new();
    for k in divisors(d_last) {
        let residual = d_last / k;
        // d'_i = d_i * e_i with e_1 ... e_(n-1) = d_n / k.
        for exps in ordered_factorizations(residual, n - 1) {
            let mut d_prime: Vec<u64> = exps
                .iter()
                .zip(d[..n - 1].iter())
                .map(|(&e, &di)| di * e)
                .collect();
            d_prime.sort_unstable();
            let model = DegenerationModel { k, d_prime };
            if !models.contains(&model) {
                models.push(model);
            }
        }
    }
    models.sort();
    models
}

/// Positive divisors of `v` in ascending order.
pub(crate) fn divisors(v: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= v {
        if v.is_multiple_of(i) {
            small.push(i);
            if i != v / i {
                large.push(v / i);
            }
        }
        i += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// All ordered tuples of `parts` positive integers with the given product.
/// For zero parts: the empty tuple iff the product is 1.
fn ordered_factorizations(product: u64, parts: usize) -> Vec<Vec<u64>> {
    if parts == 0 {
        return if product == 1 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    for first in divisors(product) {
        for mut rest in ordered_factorizations(product / first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

// ---- The Fujiki-relation pipeline ----

/// Input data for the degree pipeline: half-dimension n, the polarization
/// product d_1 ... d_n, the characteristic number sqrt-A-roof of the total
/// space, and the multiple m by which the global divisor restricts to the
/// fibre polarization (m = 1 is the primitive normalization; the result is
/// independent of m).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FujikiData {
    pub n: u32,
    pub polarization_product: u64,
    pub sqrt_ahat: Rational,
    pub theta_multiple: u64,
}

/// Output of the degree pipeline.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeResult {
    /// Degree of the discriminant locus.
    pub deg_delta: Rational,
    /// The invariant 48^n n! sqrt-A-roof.
    pub b_theta: Rational,
    /// The intermediate intersection number c_2 . Y^(n-1) . L^(n-1).
    pub c2_yl: Rational,
}

/// The invariant b_Theta^n = 48^n n! sqrt-A-roof.
pub fn b_theta_from_sqrt_ahat(n: u32, sqrt_ahat: &Rational) -> Rational {
    let scale = BigInt::from(48).pow(n) * factorial(n);
    sqrt_ahat * Rational::from_integer(scale)
}

/// Inverse of `b_theta_from_sqrt_ahat`.
pub fn sqrt_ahat_from_b_theta(n: u32, b_theta: &Rational) -> Rational {
    let scale = BigInt::from(48).pow(n) * factorial(n);
    b_theta / Rational::from_integer(scale)
}

/// Degree of the discriminant locus for a fibration by principally polarized
/// abelian varieties: 24 (n! sqrt-A-roof)^(1/n).
pub fn deg_delta_principal(n: u32, sqrt_ahat: &Rational) -> Result<Rational> {
    deg_delta_polarized(n, &PolarizationType::principal(n as usize), sqrt_ahat)
}

/// Degree of the discriminant locus for polarization type (d_1, ..., d_n):
/// 24 (n! sqrt-A-roof / (d_1 ... d_n))^(1/n).
pub fn deg_delta_polarized(
    n: u32,
    pol: &PolarizationType,
    sqrt_ahat: &Rational,
) -> Result<Rational> {
    if pol.len() != n as usize {
        return Err(Error::InvalidPolarization(format!(
            "polarization has {} entries, expected n = {n}",
            pol.len()
        )));
    }
    if !sqrt_ahat.is_positive() {
        return Err(Error::NonPositiveInput(format!(
            "sqrt-A-roof must be positive, got {sqrt_ahat}"
        )));
    }
    let radicand = sqrt_ahat * Rational::new(factorial(n), pol.product());
    let root = rational_nth_root(&radicand, n)?;
    Ok(root * Rational::from_integer(24.into()))
}

/// Solve the coefficient-comparison equation obtained from the two Fujiki
/// relations for the pair (symplectic class, Y + t L):
///
/// with I_YL = n! m^n d_1...d_n and R = 24^n (n!)^2 / n^n * sqrt-A-roof,
/// the unknown A = c_2 . Y^(n-1) . L^(n-1) satisfies A^n = I_YL^(n-1) R,
/// and deg Delta = A / ((n-1)! m^(n-1) d_1...d_n). The theta multiple m
/// cancels from the final degree.
pub fn master_equation_solve(data: &FujikiData) -> Result<DegreeResult> {
    if data.n == 0 {
        return Err(Error::NonPositiveInput("n must be positive".into()));
    }
    if data.polarization_product == 0 {
        return Err(Error::NonPositiveInput(
            "polarization product must be positive".into(),
        ));
    }
    if data.theta_multiple == 0 {
        return Err(Error::NonPositiveInput(
            "theta multiple must be positive".into(),
        ));
    }
    if !data.sqrt_ahat.is_positive() {
        return Err(Error::NonPositiveInput(format!(
            "sqrt-A-roof must be positive, got {}",
            data.sqrt_ahat
        )));
    }
    let n = data.n;
    let product = BigInt::from(data.polarization_product);
    let m = BigInt::from(data.theta_multiple);

    // I_YL = n! m^n d_1...d_n
    let i_yl = Rational::from_integer(factorial(n) * m.pow(n) * &product);
    // R = 24^n (n!)^2 / n^n * sqrt-A-roof
    let ratio = Rational::new(
        BigInt::from(24).pow(n) * factorial(n) * factorial(n),
        BigInt::from(n).pow(n),
    ) * &data.sqrt_ahat;
    // A^n = I_YL^(n-1) R
    let mut radicand = ratio;
    for _ in 1..n {
        radicand *= &i_yl;
    }
    let c2_yl = rational_nth_root(&radicand, n)?;
    // deg Delta = A / ((n-1)! m^(n-1) d_1...d_n)
    let denominator = Rational::from_integer(factorial(n - 1) * m.pow(n - 1) * &product);
    let deg_delta = &c2_yl / denominator;
    Ok(DegreeResult {
        deg_delta,
        b_theta: b_theta_from_sqrt_ahat(n, &data.sqrt_ahat),
        c2_yl,
    })
}

// ---- Known families ----

/// The two families with established invariant values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Hilbert scheme of n points on a K3 surface (principally polarized
    /// fibres).
    HilbertScheme,
    /// Generalized Kummer variety of dimension 2n (fibres polarized of type
    /// (1, ..., 1, n+1)).
    GeneralizedKummer,
}

/// Closed-form b_Theta^n for the known families: 12^n (n+3)^n for the
/// Hilbert scheme, 12^n (n+1)^(n+1) for the generalized Kummer variety.
pub fn known_example_b_theta(family: Family, n: u32) -> Rational {
    assert!(n >= 1);
    let value = match family {
        Family::HilbertScheme => BigInt::from(12).pow(n) * BigInt::from(n + 3).pow(n),
        Family::GeneralizedKummer => BigInt::from(12).pow(n) * BigInt::from(n + 1).pow(n + 1),
    };
    Rational::from_integer(value)
}

/// sqrt-A-roof of the known families, derived from `known_example_b_theta`.
pub fn known_example_sqrt_ahat(family: Family, n: u32) -> Rational {
    sqrt_ahat_from_b_theta(n, &known_example_b_theta(family, n))
}

/// The fibre polarization type of a known family at half-dimension n.
pub fn known_example_polarization(family: Family, n: u32) -> PolarizationType {
    match family {
        Family::HilbertScheme => PolarizationType::principal(n as usize),
        Family::GeneralizedKummer => {
            let mut d = vec![1u64; n as usize];
            d[n as usize - 1] = u64::from(n) + 1;
            PolarizationType::new(&d).expect("chain (1,...,1,n+1) is valid")
        }
    }
}
