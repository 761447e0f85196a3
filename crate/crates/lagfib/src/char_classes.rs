//! Multiplicative-sequence machinery: the A-roof genus and its formal square
//! root as polynomial series in Chern classes, plus characteristic-number
//! evaluation against Chern-number records.
//!
//! The genus is computed from first principles: the one-variable expansion of
//! log((x/2)/sinh(x/2)) is obtained by exact series inversion and logarithm,
//! summed over power sums of the Chern roots (Newton's identities), then
//! exponentiated in the graded ring. Nothing is transcribed from tables.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graded_ring::{GradedElement, RingSpec};
use crate::rational::{rat_int, Rational};

// ---- One-variable truncated series ----

/// Dense truncated power series in one variable over `Rational`;
/// `coeffs[k]` is the coefficient of x^k. Internal helper for the log-Q
/// expansion.
struct OneVarSeries {
    coeffs: Vec<Rational>,
}

impl OneVarSeries {
    fn zero(order: usize) -> Self {
        OneVarSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    fn mul(&self, other: &OneVarSeries) -> OneVarSeries {
        let order = self.coeffs.len() - 1;
        let mut out = OneVarSeries::zero(order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > order {
                    break;
                }
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    /// Multiplicative inverse; requires a unit constant term.
    fn invert(&self) -> OneVarSeries {
        assert!(self.coeffs[0].is_one(), "inversion needs constant term 1");
        let order = self.coeffs.len() - 1;
        let mut inv = OneVarSeries::zero(order);
        inv.coeffs[0] = Rational::one();
        for k in 1..=order {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &inv.coeffs[k - j];
            }
            inv.coeffs[k] = -acc;
        }
        inv
    }

    /// log of a series with constant term 1, via log(1+u) = sum (-1)^(m+1) u^m / m.
    fn log(&self) -> OneVarSeries {
        assert!(self.coeffs[0].is_one(), "logarithm needs constant term 1");
        let order = self.coeffs.len() - 1;
        let mut u = OneVarSeries::zero(order);
        u.coeffs[1..].clone_from_slice(&self.coeffs[1..]);
        let mut out = OneVarSeries::zero(order);
        let mut power = OneVarSeries::one_at(order);
        for m in 1..=order {
            power = power.mul(&u); // u^m
            let sign = if m % 2 == 1 { 1 } else { -1 };
            let factor = Rational::new(sign.into(), (m as i64).into());
            for (k, c) in power.coeffs.iter().enumerate() {
                out.coeffs[k] += c * &factor;
            }
        }
        out
    }

    fn one_at(order: usize) -> OneVarSeries {
        let mut s = OneVarSeries::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }
}

/// Coefficients a_1..a_max of log((x/2)/sinh(x/2)) = sum a_m x^m, computed by
/// inverting sinh(x/2)/(x/2) and taking the exact series logarithm. Odd
/// coefficients vanish.
fn log_q_coefficients(max_weight: u32) -> Vec<Rational> {
    let order = max_weight as usize;
    // sinh(y)/y = sum y^(2j)/(2j+1)!, with y = x/2.
    let mut s = OneVarSeries::zero(order);
    let mut term = Rational::one();
    s.coeffs[0] = Rational::one();
    for j in 1.. {
        let k = 2 * j;
        if k > order {
            break;
        }
        // term = 1 / (4^j (2j+1)!)
        term /= rat_int(4) * rat_int((2 * j as i64) * (2 * j as i64 + 1));
        s.coeffs[k] = term.clone();
    }
    let log_q = s.invert().log();
    log_q.coeffs[1..].to_vec()
}

// ---- Chern rings and power sums ----

/// The graded ring with generators c1..c_max of weights 1..max, truncated at
/// `max_weight`.
pub fn chern_ring(max_weight: u32) -> RingSpec {
    let names: Vec<String> = (1..=max_weight).map(|k| format!("c{k}")).collect();
    let gens: Vec<(&str, u32)> = names
        .iter()
        .enumerate()
        .map(|(i, n)| (n.as_str(), i as u32 + 1))
        .collect();
    RingSpec::new(&gens, max_weight).expect("chern ring construction cannot fail")
}

/// Power sums p_1..p_max of the Chern roots as polynomials in c_1..c_max,
/// via Newton's identities:
/// p_k - c1 p_(k-1) + c2 p_(k-2) - ... + (-1)^k k c_k = 0.
pub fn power_sums_from_chern(max_weight: u32) -> Vec<GradedElement> {
    assert!(max_weight >= 1);
    let ring = chern_ring(max_weight);
    let mut sums: Vec<GradedElement> = Vec::with_capacity(max_weight as usize);
    for k in 1..=max_weight {
        let ck = ring
            .generator(&format!("c{k}"))
            .expect("generator exists by construction");
        let k_sign = if k % 2 == 1 { 1 } else { -1 };
        let mut pk = ck.scalar_mul(&rat_int(k_sign * k as i64));
        for i in 1..k {
            let ci = ring
                .generator(&format!("c{i}"))
                .expect("generator exists by construction");
            let sign = if i % 2 == 1 { 1 } else { -1 };
            let term = ci
                .mul(&sums[(k - i - 1) as usize])
                .expect("same ring")
                .scalar_mul(&rat_int(sign));
            pk = pk.add(&term).expect("same ring");
        }
        sums.push(pk);
    }
    sums
}

// ---- Characteristic series ----

/// Which multiplicative sequence a series carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Genus {
    AHat,
    SqrtAHat,
}

impl fmt::Display for Genus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Genus::AHat => write!(f, "ahat"),
            Genus::SqrtAHat => write!(f, "sqrt-ahat"),
        }
    }
}

/// A genus expanded as a polynomial series in Chern classes, with constant
/// term 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacteristicSeries {
    pub element: GradedElement,
    pub genus: Genus,
}

/// The A-roof genus through `max_weight`, as exp(sum a_m p_m) with a_m the
/// log-Q coefficients and p_m the Chern-root power sums.
pub fn ahat_series(max_weight: u32) -> CharacteristicSeries {
    assert!(max_weight >= 1);
    let ring = chern_ring(max_weight);
    let a = log_q_coefficients(max_weight);
    let sums = power_sums_from_chern(max_weight);
    let mut exponent = ring.zero();
    for (m, pm) in sums.iter().enumerate() {
        exponent = exponent.add(&pm.scalar_mul(&a[m])).expect("same ring");
    }
    // exp(B) with B of positive weight: terms B^j/j! vanish for j > max_weight.
    let mut acc = ring.one();
    let mut term = ring.one();
    for j in 1..=max_weight {
        // invariant: term = B^(j-1)/(j-1)! on entry
        term = term
            .mul(&exponent)
            .expect("same ring")
            .scalar_mul(&Rational::new(1.into(), i64::from(j).into()));
        acc = acc.add(&term).expect("same ring");
    }
    CharacteristicSeries {
        element: acc,
        genus: Genus::AHat,
    }
}

/// The formal square root of the A-roof genus through `max_weight`.
pub fn sqrt_ahat_series(max_weight: u32) -> CharacteristicSeries {
    let ahat = ahat_series(max_weight);
    CharacteristicSeries {
        element: ahat
            .element
            .sqrt_unit()
            .expect("A-roof genus has constant term 1"),
        genus: Genus::SqrtAHat,
    }
}

// ---- Chern numbers and characteristic numbers ----

/// Chern numbers of a compact complex manifold: integer values of the
/// top-weight Chern monomials. Monomial keys are dot-separated generator
/// factors with repetition, e.g. `c2.c2` or `c2.c2.c4`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChernNumbers {
    #[serde(default)]
    pub name: String,
    pub complex_dimension: u32,
    pub chern_numbers: BTreeMap<String, i64>,
}

impl ChernNumbers {
    /// Construct and validate.
    pub fn new(name: &str, complex_dimension: u32, chern_numbers: &[(&str, i64)]) -> Result<Self> {
        let record = ChernNumbers {
            name: name.to_string(),
            complex_dimension,
            chern_numbers: chern_numbers
                .iter()
                .map(|(k, v)| (k.to_string(), *v))
                .collect(),
        };
        record.validate()?;
        Ok(record)
    }

    /// Check that every monomial key parses and has weight equal to the
    /// complex dimension.
    pub fn validate(&self) -> Result<()> {
        if self.complex_dimension == 0 {
            return Err(Error::InvalidWeight(
                "complex dimension must be positive".into(),
            ));
        }
        let ring = chern_ring(self.complex_dimension);
        for key in self.chern_numbers.keys() {
            let m = ring.parse_monomial_key(key)?;
            let w = ring.monomial_weight(&m);
            if w != self.complex_dimension {
                return Err(Error::WeightMismatch(format!(
                    "chern number key `{key}` has weight {w}, expected {}",
                    self.complex_dimension
                )));
            }
        }
        Ok(())
    }

    /// Parse from the JSON record format.
    pub fn from_json(json: &str) -> Result<Self> {
        let record: ChernNumbers =
            serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
        record.validate()?;
        Ok(record)
    }

    /// Serialize to the JSON record format.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("chern number record serializes")
    }
}

/// Characteristic number: the genus series evaluated on the manifold's
/// top-weight Chern numbers.
pub fn characteristic_number(
    series: &CharacteristicSeries,
    chern: &ChernNumbers,
) -> Result<Rational> {
    chern.validate()?;
    let ring = series.element.ring();
    if chern.complex_dimension > ring.truncation_weight() {
        return Err(Error::WeightMismatch(format!(
            "complex dimension {} exceeds series truncation {}",
            chern.complex_dimension,
            ring.truncation_weight()
        )));
    }
    let mut values = BTreeMap::new();
    for (key, v) in &chern.chern_numbers {
        values.insert(ring.parse_monomial_key(key)?, rat_int(*v));
    }
    series.element.evaluate(&values, chern.complex_dimension)
}

/// Kill the odd Chern classes: drop every term involving a generator of odd
/// weight (the holomorphic-symplectic specialization).
pub fn zero_odd_chern(element: &GradedElement) -> GradedElement {
    let odd: Vec<String> = element
        .ring()
        .generators()
        .iter()
        .filter(|(_, w)| w % 2 == 1)
        .map(|(n, _)| n.clone())
        .collect();
    let refs: Vec<&str> = odd.iter().map(|s| s.as_str()).collect();
    element
        .without_generators(&refs)
        .expect("generators come from the element's own ring")
}
