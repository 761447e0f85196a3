//! Truncated graded commutative polynomial arithmetic over exact rationals.
//!
//! A `RingSpec` declares named generators with positive weights and a
//! truncation weight; a `GradedElement` is a sparse map from monomials to
//! `Rational` coefficients. Canonical form everywhere: no stored zero
//! coefficients, no monomial above the truncation weight, no zero exponents
//! inside a monomial. Equality of elements is equality of term maps.
//!
//! Relations such as h^2 = 0 are deliberately not imposed here; the ring is
//! free and relations live in the evaluation functional (monomials absent
//! from the value map contribute zero).

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

// ---- Ring specification ----

#[derive(Debug, PartialEq, Eq)]
struct RingInner {
    generators: Vec<(String, u32)>,
    truncation_weight: u32,
    index: HashMap<String, usize>,
}

/// A graded polynomial ring: ordered weighted generators plus a truncation
/// weight. Cheap to clone (shared behind an `Arc`); two rings are equal when
/// their generator lists and truncation weights are equal.
#[derive(Clone, Debug)]
pub struct RingSpec {
    inner: Arc<RingInner>,
}

impl PartialEq for RingSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl Eq for RingSpec {}

impl RingSpec {
    /// Build a validated ring. Generator names must be unique, weights
    /// positive, and the truncation weight at least the largest generator
    /// weight.
    pub fn new(generators: &[(&str, u32)], truncation_weight: u32) -> Result<Self> {
        if truncation_weight == 0 {
            return Err(Error::InvalidWeight(
                "truncation weight must be positive".into(),
            ));
        }
        let mut index = HashMap::new();
        let mut gens = Vec::with_capacity(generators.len());
        for (i, (name, weight)) in generators.iter().enumerate() {
            if *weight == 0 {
                return Err(Error::InvalidWeight(format!(
                    "generator `{name}` has weight 0"
                )));
            }
            if *weight > truncation_weight {
                return Err(Error::InvalidWeight(format!(
                    "generator `{name}` has weight {weight} above truncation {truncation_weight}"
                )));
            }
            if index.insert(name.to_string(), i).is_some() {
                return Err(Error::DuplicateGenerator(name.to_string()));
            }
            gens.push((name.to_string(), *weight));
        }
        Ok(RingSpec {
            inner: Arc::new(RingInner {
                generators: gens,
                truncation_weight,
                index,
            }),
        })
    }

    /// Declared generators in canonical (declaration) order.
    pub fn generators(&self) -> &[(String, u32)] {
        &self.inner.generators
    }

    /// Maximum weight kept by ring arithmetic.
    pub fn truncation_weight(&self) -> u32 {
        self.inner.truncation_weight
    }

    /// Index of a generator by name.
    pub fn generator_index(&self, name: &str) -> Result<usize> {
        self.inner
            .index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// The additive identity.
    pub fn zero(&self) -> GradedElement {
        GradedElement {
            ring: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// The multiplicative identity.
    pub fn one(&self) -> GradedElement {
        self.scalar(Rational::one())
    }

    /// The constant element `c`.
    pub fn scalar(&self, c: Rational) -> GradedElement {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        GradedElement {
            ring: self.clone(),
            terms,
        }
    }

    /// The generator `name` as an element.
    pub fn generator(&self, name: &str) -> Result<GradedElement> {
        let idx = self.generator_index(name)?;
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::generator(idx), Rational::one());
        Ok(GradedElement {
            ring: self.clone(),
            terms,
        })
    }

    /// Build a monomial from `(name, exponent)` factors. Zero exponents are
    /// dropped; the result must not exceed the truncation weight.
    pub fn monomial(&self, factors: &[(&str, u32)]) -> Result<Monomial> {
        let mut exps = vec![0u32; self.inner.generators.len()];
        for (name, e) in factors {
            exps[self.generator_index(name)?] += e;
        }
        let m = Monomial::from_exponents(&exps);
        let w = self.monomial_weight(&m);
        if w > self.truncation_weight() {
            return Err(Error::InvalidWeight(format!(
                "monomial `{}` has weight {w} above truncation {}",
                self.monomial_key(&m),
                self.truncation_weight()
            )));
        }
        Ok(m)
    }

    /// Total weight of a monomial in this ring.
    pub fn monomial_weight(&self, m: &Monomial) -> u32 {
        m.factors
            .iter()
            .map(|&(idx, e)| self.inner.generators[idx].1 * e)
            .sum()
    }

    /// Dot-separated key with factors repeated, e.g. `c2.c2.c4`; the empty
    /// monomial is written `1`.
    pub fn monomial_key(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for &(idx, e) in &m.factors {
            for _ in 0..e {
                parts.push(self.inner.generators[idx].0.as_str());
            }
        }
        parts.join(".")
    }

    /// Parse a dot-separated monomial key (`c2.c2.c4`, or `1` for the empty
    /// monomial) into a monomial of this ring.
    pub fn parse_monomial_key(&self, key: &str) -> Result<Monomial> {
        let key = key.trim();
        if key.is_empty() {
            return Err(Error::Parse("empty monomial key".into()));
        }
        if key == "1" {
            return Ok(Monomial::one());
        }
        let mut exps = vec![0u32; self.inner.generators.len()];
        for part in key.split('.') {
            exps[self.generator_index(part.trim())?] += 1;
        }
        let m = Monomial::from_exponents(&exps);
        let w = self.monomial_weight(&m);
        if w > self.truncation_weight() {
            return Err(Error::InvalidWeight(format!(
                "monomial `{key}` has weight {w} above truncation {}",
                self.truncation_weight()
            )));
        }
        Ok(m)
    }

    /// Human form of a monomial: `c2^2*c4`, `C^3`, or `1`.
    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        m.factors
            .iter()
            .map(|&(idx, e)| {
                let name = &self.inner.generators[idx].0;
                if e == 1 {
                    name.clone()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Expanded generator-index word of a monomial, used for the graded
    /// lexicographic term order in serialization.
    fn monomial_word(&self, m: &Monomial) -> Vec<usize> {
        let mut word = Vec::new();
        for &(idx, e) in &m.factors {
            for _ in 0..e {
                word.push(idx);
            }
        }
        word
    }
}

/// Build a validated ring from `(name, weight)` pairs and a truncation
/// weight.
pub fn make_ring(generators: &[(&str, u32)], truncation_weight: u32) -> Result<RingSpec> {
    RingSpec::new(generators, truncation_weight)
}

// ---- Monomials ----

/// A commutative monomial in the generators of some ring, stored as sparse
/// `(generator index, exponent)` pairs sorted by index with no zero
/// exponents.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    factors: Vec<(usize, u32)>,
}

impl Monomial {
    /// The empty monomial (the ring unit).
    pub fn one() -> Self {
        Monomial {
            factors: Vec::new(),
        }
    }

    /// The degree-one monomial in generator `idx`.
    pub fn generator(idx: usize) -> Self {
        Monomial {
            factors: vec![(idx, 1)],
        }
    }

    fn from_exponents(exps: &[u32]) -> Self {
        Monomial {
            factors: exps
                .iter()
                .enumerate()
                .filter(|&(_, &e)| e > 0)
                .map(|(i, &e)| (i, e))
                .collect(),
        }
    }

    /// True for the empty monomial.
    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Exponent of generator `idx`.
    pub fn exponent(&self, idx: usize) -> u32 {
        self.factors
            .iter()
            .find(|&&(i, _)| i == idx)
            .map_or(0, |&(_, e)| e)
    }

    /// Product of two monomials: exponent-wise sum (merge of sorted factor
    /// lists).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            let (ia, ea) = self.factors[i];
            let (ib, eb) = other.factors[j];
            match ia.cmp(&ib) {
                std::cmp::Ordering::Less => {
                    out.push((ia, ea));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((ib, eb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((ia, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.factors[i..]);
        out.extend_from_slice(&other.factors[j..]);
        Monomial { factors: out }
    }

    /// True if any of the listed generator indices occurs in this monomial.
    pub fn involves_any(&self, indices: &[usize]) -> bool {
        self.factors.iter().any(|&(i, _)| indices.contains(&i))
    }
}

// ---- Graded elements ----

/// A sparse truncated polynomial over `Rational` in the generators of a
/// fixed ring. Always in canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedElement {
    ring: RingSpec,
    terms: BTreeMap<Monomial, Rational>,
}

impl GradedElement {
    /// The ring this element lives in.
    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    /// Term map in canonical form.
    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    /// Coefficient of a monomial (zero if absent).
    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of the empty monomial.
    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one())
    }

    /// True for the zero element.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_same_ring(&self, other: &GradedElement) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn insert_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() || self.ring.monomial_weight(&m) > self.ring.truncation_weight() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Termwise sum. Errors with `RingMismatch` across different rings.
    pub fn add(&self, other: &GradedElement) -> Result<GradedElement> {
        self.check_same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    /// Termwise difference.
    pub fn sub(&self, other: &GradedElement) -> Result<GradedElement> {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> GradedElement {
        GradedElement {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    /// Multiply every coefficient by `c`.
    pub fn scalar_mul(&self, c: &Rational) -> GradedElement {
        if c.is_zero() {
            return self.ring.zero();
        }
        GradedElement {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Cup product: distributed term product with everything above the
    /// truncation weight discarded as it arises.
    pub fn mul(&self, other: &GradedElement) -> Result<GradedElement> {
        self.check_same_ring(other)?;
        Ok(self.mul_raw(other))
    }

    fn mul_raw(&self, other: &GradedElement) -> GradedElement {
        let trunc = self.ring.truncation_weight();
        let rhs: Vec<(u32, &Monomial, &Rational)> = other
            .terms
            .iter()
            .map(|(m, c)| (self.ring.monomial_weight(m), m, c))
            .collect();
        let mut out = self.ring.zero();
        for (ma, ca) in &self.terms {
            let wa = self.ring.monomial_weight(ma);
            for &(wb, mb, cb) in &rhs {
                if wa + wb > trunc {
                    continue;
                }
                out.insert_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// `self` to the `exp`-th power (exp >= 0), truncated.
    pub fn pow(&self, exp: u32) -> GradedElement {
        let mut acc = self.ring.one();
        for _ in 0..exp {
            acc = acc.mul_raw(self);
        }
        acc
    }

    /// The weight-`k` homogeneous part.
    pub fn weight_part(&self, k: u32) -> GradedElement {
        GradedElement {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| self.ring.monomial_weight(m) == k)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drop every term that involves any of the named generators
    /// (substitutes those generators by zero).
    pub fn without_generators(&self, names: &[&str]) -> Result<GradedElement> {
        let indices: Vec<usize> = names
            .iter()
            .map(|n| self.ring.generator_index(n))
            .collect::<Result<_>>()?;
        Ok(GradedElement {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !m.involves_any(&indices))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        })
    }

    /// Formal square root of a series with constant term 1, solved weight by
    /// weight: the weight-k part of the root is determined by the weight-k
    /// part of root^2 = self.
    pub fn sqrt_unit(&self) -> Result<GradedElement> {
        if !self.constant_term().is_one() {
            return Err(Error::NonUnitConstantTerm(self.constant_term()));
        }
        let trunc = self.ring.truncation_weight();
        let half = Rational::new(1.into(), 2.into());
        // parts[k] holds the weight-k part of the root computed so far.
        let mut parts: Vec<GradedElement> = Vec::with_capacity(trunc as usize + 1);
        parts.push(self.ring.one());
        for k in 1..=trunc {
            let mut cross = self.ring.zero();
            for i in 1..k {
                cross = cross.add(&parts[i as usize].mul_raw(&parts[(k - i) as usize]))?;
            }
            let sk = self.weight_part(k).sub(&cross)?.scalar_mul(&half);
            parts.push(sk);
        }
        let mut root = self.ring.zero();
        for p in &parts {
            root = root.add(p)?;
        }
        Ok(root)
    }

    /// Linear-functional evaluation on one weight: sum of coefficient times
    /// assigned value over the weight-`select_weight` terms. Monomials absent
    /// from `values` contribute zero. Every key of `values` must itself have
    /// weight `select_weight`.
    pub fn evaluate(
        &self,
        values: &BTreeMap<Monomial, Rational>,
        select_weight: u32,
    ) -> Result<Rational> {
        for m in values.keys() {
            let w = self.ring.monomial_weight(m);
            if w != select_weight {
                return Err(Error::WeightMismatch(format!(
                    "value key `{}` has weight {w}, expected {select_weight}",
                    self.ring.monomial_key(m)
                )));
            }
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            if self.ring.monomial_weight(m) != select_weight {
                continue;
            }
            if let Some(v) = values.get(m) {
                acc += c * v;
            }
        }
        Ok(acc)
    }

    /// Terms sorted by (weight, graded lexicographic word), the canonical
    /// serialization order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut terms: Vec<(&Monomial, &Rational)> = self.terms.iter().collect();
        terms.sort_by_key(|(m, _)| (self.ring.monomial_weight(m), self.ring.monomial_word(m)));
        terms
    }
}

impl fmt::Display for GradedElement {
    /// Canonical text form: `1 + 1/24*c2 + 7/5760*c2^2 - 1/1440*c4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", self.ring.format_monomial(m))?;
            } else {
                write!(f, "{abs}*{}", self.ring.format_monomial(m))?;
            }
        }
        Ok(())
    }
}
