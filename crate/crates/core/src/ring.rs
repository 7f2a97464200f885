//! Finite chain rings `Z_{p^d}` and `F_p[x]/(x^d)` and their finite direct
//! products.
//!
//! Elements are dense indices. A component value is encoded as an integer
//! code in `0..p^d`: the residue itself for `Z_{p^d}`, and the base-`p`
//! number `c_0 + c_1 p + … + c_{d-1} p^{d-1}` for the polynomial
//! `c_0 + c_1 x + …` in `F_p[x]/(x^d)`. The element index is the mixed-radix
//! number whose most significant digit is the first component's code, so
//! index 0 is the zero element and the radical generator of either kind
//! has code `p`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest ring the dense tables are built for.
pub const MAX_RING_SIZE: u64 = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChainKind {
    IntegerResidue,
    TruncatedPolynomial,
}

/// One chain-ring factor: `Z_{p^d}` or `F_p[x]/(x^d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ChainRingSpec {
    kind: ChainKind,
    p: u32,
    d: u32,
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

impl ChainRingSpec {
    pub fn new(kind: ChainKind, p: u32, d: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if d == 0 {
            return Err(Error::ZeroNilpotency);
        }
        let size = (p as u64).checked_pow(d).unwrap_or(u64::MAX);
        if size > MAX_RING_SIZE {
            return Err(Error::RingTooLarge {
                size,
                max: MAX_RING_SIZE,
            });
        }
        Ok(Self { kind, p, d })
    }

    /// `Z_{p^d}`.
    pub fn integer_residue(p: u32, d: u32) -> Result<Self> {
        Self::new(ChainKind::IntegerResidue, p, d)
    }

    /// `F_p[x]/(x^d)`.
    pub fn truncated_polynomial(p: u32, d: u32) -> Result<Self> {
        Self::new(ChainKind::TruncatedPolynomial, p, d)
    }

    pub fn kind(&self) -> ChainKind {
        self.kind
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Nilpotency index of the radical.
    pub fn d(&self) -> u32 {
        self.d
    }

    /// Residue field size.
    pub fn q(&self) -> u32 {
        self.p
    }

    pub fn size(&self) -> u32 {
        self.p.pow(self.d)
    }

    fn digits(&self, mut code: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.d as usize);
        for _ in 0..self.d {
            out.push(code % self.p);
            code /= self.p;
        }
        out
    }

    fn undigits(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub(crate) fn add(&self, a: u32, b: u32) -> u32 {
        match self.kind {
            ChainKind::IntegerResidue => (a + b) % self.size(),
            ChainKind::TruncatedPolynomial => {
                let (x, y) = (self.digits(a), self.digits(b));
                let s: Vec<u32> = x.iter().zip(&y).map(|(u, v)| (u + v) % self.p).collect();
                self.undigits(&s)
            }
        }
    }

    pub(crate) fn neg(&self, a: u32) -> u32 {
        match self.kind {
            ChainKind::IntegerResidue => (self.size() - a) % self.size(),
            ChainKind::TruncatedPolynomial => {
                let s: Vec<u32> = self
                    .digits(a)
                    .iter()
                    .map(|c| (self.p - c) % self.p)
                    .collect();
                self.undigits(&s)
            }
        }
    }

    pub(crate) fn mul(&self, a: u32, b: u32) -> u32 {
        match self.kind {
            ChainKind::IntegerResidue => ((a as u64 * b as u64) % self.size() as u64) as u32,
            ChainKind::TruncatedPolynomial => {
                let (x, y) = (self.digits(a), self.digits(b));
                let d = self.d as usize;
                let mut out = vec![0u32; d];
                for i in 0..d {
                    for j in 0..d - i {
                        out[i + j] = (out[i + j] + x[i] * y[j]) % self.p;
                    }
                }
                self.undigits(&out)
            }
        }
    }

    /// Largest `i` with `a ∈ rad^i`; `d` for zero.
    pub(crate) fn valuation(&self, a: u32) -> u32 {
        if a == 0 {
            return self.d;
        }
        match self.kind {
            ChainKind::IntegerResidue => {
                let mut v = 0;
                let mut a = a;
                while a.is_multiple_of(self.p) {
                    a /= self.p;
                    v += 1;
                }
                v
            }
            ChainKind::TruncatedPolynomial => {
                self.digits(a).iter().position(|&c| c != 0).unwrap() as u32
            }
        }
    }

    /// Code of `π^e` (which is `p^e` for both kinds, and 0 for `e ≥ d`).
    pub(crate) fn pi_power(&self, e: u32) -> u32 {
        if e >= self.d {
            0
        } else {
            self.p.pow(e)
        }
    }

    pub(crate) fn render(&self, a: u32) -> String {
        match self.kind {
            ChainKind::IntegerResidue => a.to_string(),
            ChainKind::TruncatedPolynomial => {
                let terms: Vec<String> = self
                    .digits(a)
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, &c)| {
                        let coeff = if c == 1 && i > 0 {
                            String::new()
                        } else {
                            c.to_string()
                        };
                        match i {
                            0 => coeff,
                            1 => format!("{coeff}x"),
                            _ => format!("{coeff}x^{i}"),
                        }
                    })
                    .collect();
                if terms.is_empty() {
                    "0".into()
                } else {
                    terms.join("+")
                }
            }
        }
    }
}

impl fmt::Display for ChainRingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ChainKind::IntegerResidue => write!(f, "Z{}", self.size()),
            ChainKind::TruncatedPolynomial => write!(f, "F{}x{}", self.p, self.d),
        }
    }
}

/// Exponent vector `(e_1, …, e_r)` naming the ideal representative
/// `π_1^{e_1} ⋯ π_r^{e_r}`. `(0,…,0)` is the unit ideal and `(d_1,…,d_r)`
/// the zero ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdealExponent(pub Vec<u32>);

impl IdealExponent {
    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl fmt::Display for IdealExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for IdealExponent {
    type Err = Error;

    /// Parses the comma-joined form used in weight files, e.g. `"1,0"`.
    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::WeightFile(format!("bad exponent vector `{s}`")))
            })
            .collect::<Result<Vec<_>>>()
            .map(IdealExponent)
    }
}

impl From<Vec<u32>> for IdealExponent {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}

/// An element of a [`ProductRing`], by dense index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Element(u32);

impl Element {
    pub const ZERO: Element = Element(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

struct Inner {
    components: Vec<ChainRingSpec>,
    size: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    units: Vec<Element>,
    ideal_reps: Vec<IdealExponent>,
    // position in `ideal_reps` of each element's valuation
    val_pos: Vec<usize>,
    orbits: Vec<Vec<Element>>,
}

/// A finite direct product `R_1 × ⋯ × R_r` of chain rings.
///
/// Cheap to clone; the arithmetic tables are shared.
#[derive(Clone)]
pub struct ProductRing(Arc<Inner>);

impl PartialEq for ProductRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.components == other.0.components
    }
}

impl Eq for ProductRing {}

impl fmt::Debug for ProductRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProductRing({self})")
    }
}

impl fmt::Display for ProductRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.components.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join("*"))
    }
}

impl FromStr for ProductRing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ProductRing::new(crate::notation::parse_ring_spec(s)?)
    }
}

impl ProductRing {
    /// Builds the product ring and precomputes its arithmetic tables, unit
    /// group, ideal representatives and unit orbits.
    pub fn new(components: Vec<ChainRingSpec>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptyRing);
        }
        let size = components
            .iter()
            .try_fold(1u64, |acc, c| acc.checked_mul(c.size() as u64))
            .unwrap_or(u64::MAX);
        if size > MAX_RING_SIZE {
            return Err(Error::RingTooLarge {
                size,
                max: MAX_RING_SIZE,
            });
        }
        let size = size as usize;

        let decode = |mut i: usize| -> Vec<u32> {
            let mut codes = vec![0u32; components.len()];
            for (k, c) in components.iter().enumerate().rev() {
                codes[k] = (i % c.size() as usize) as u32;
                i /= c.size() as usize;
            }
            codes
        };
        let encode = |codes: &[u32]| -> u32 {
            components
                .iter()
                .zip(codes)
                .fold(0u32, |acc, (c, &v)| acc * c.size() + v)
        };
        let decoded: Vec<Vec<u32>> = (0..size).map(decode).collect();

        let mut add = vec![0u32; size * size];
        let mut mul = vec![0u32; size * size];
        let mut scratch = vec![0u32; components.len()];
        for a in 0..size {
            for b in 0..size {
                for (k, c) in components.iter().enumerate() {
                    scratch[k] = c.add(decoded[a][k], decoded[b][k]);
                }
                add[a * size + b] = encode(&scratch);
                for (k, c) in components.iter().enumerate() {
                    scratch[k] = c.mul(decoded[a][k], decoded[b][k]);
                }
                mul[a * size + b] = encode(&scratch);
            }
        }
        let neg: Vec<u32> = decoded
            .iter()
            .map(|codes| {
                let n: Vec<u32> = components
                    .iter()
                    .zip(codes)
                    .map(|(c, &v)| c.neg(v))
                    .collect();
                encode(&n)
            })
            .collect();

        // E: all exponent vectors, by total exponent then lexicographically.
        let mut ideal_reps: Vec<IdealExponent> = components
            .iter()
            .map(|c| 0..=c.d())
            .fold(vec![Vec::new()], |acc, range| {
                acc.into_iter()
                    .flat_map(|prefix| {
                        range.clone().map(move |e| {
                            let mut v = prefix.clone();
                            v.push(e);
                            v
                        })
                    })
                    .collect()
            })
            .into_iter()
            .map(IdealExponent)
            .collect();
        ideal_reps.sort_by(|a, b| a.total().cmp(&b.total()).then_with(|| a.cmp(b)));

        let radices: Vec<usize> = components.iter().map(|c| c.d() as usize + 1).collect();
        let exp_key = |e: &[u32]| -> usize {
            e.iter()
                .zip(&radices)
                .fold(0usize, |acc, (&x, &r)| acc * r + x as usize)
        };
        let mut key_to_pos = vec![0usize; radices.iter().product()];
        for (pos, e) in ideal_reps.iter().enumerate() {
            key_to_pos[exp_key(&e.0)] = pos;
        }
        let val_pos: Vec<usize> = decoded
            .iter()
            .map(|codes| {
                let v: Vec<u32> = components
                    .iter()
                    .zip(codes)
                    .map(|(c, &x)| c.valuation(x))
                    .collect();
                key_to_pos[exp_key(&v)]
            })
            .collect();

        let units: Vec<Element> = (0..size)
            .filter(|&a| ideal_reps[val_pos[a]].total() == 0)
            .map(|a| Element(a as u32))
            .collect();

        let mut orbits = vec![Vec::new(); ideal_reps.len()];
        for a in 0..size {
            orbits[val_pos[a]].push(Element(a as u32));
        }

        Ok(ProductRing(Arc::new(Inner {
            components,
            size,
            add,
            mul,
            neg,
            units,
            ideal_reps,
            val_pos,
            orbits,
        })))
    }

    pub fn components(&self) -> &[ChainRingSpec] {
        &self.0.components
    }

    pub fn rank(&self) -> usize {
        self.0.components.len()
    }

    pub fn size(&self) -> usize {
        self.0.size
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + Clone + '_ {
        (0..self.0.size as u32).map(Element)
    }

    pub fn element(&self, index: usize) -> Result<Element> {
        if index < self.0.size {
            Ok(Element(index as u32))
        } else {
            Err(Error::ElementOutOfRange {
                index,
                size: self.0.size,
            })
        }
    }

    /// Builds an element from per-component codes.
    pub fn element_from_codes(&self, codes: &[u32]) -> Result<Element> {
        if codes.len() != self.rank() {
            return Err(Error::ComponentOutOfRange(format!(
                "expected {} components, got {}",
                self.rank(),
                codes.len()
            )));
        }
        let mut idx = 0u32;
        for (c, &v) in self.0.components.iter().zip(codes) {
            if v >= c.size() {
                return Err(Error::ComponentOutOfRange(format!("{v} in {c}")));
            }
            idx = idx * c.size() + v;
        }
        Ok(Element(idx))
    }

    /// Per-component codes of `a`.
    pub fn codes(&self, a: Element) -> Vec<u32> {
        let mut i = a.0;
        let mut codes = vec![0u32; self.rank()];
        for (k, c) in self.0.components.iter().enumerate().rev() {
            codes[k] = i % c.size();
            i /= c.size();
        }
        codes
    }

    /// Per-component coefficient tuples (a single residue for `Z_{p^d}`,
    /// `d` base-`p` coefficients for `F_p[x]/(x^d)`).
    pub fn component_values(&self, a: Element) -> Vec<Vec<u32>> {
        self.codes(a)
            .into_iter()
            .zip(&self.0.components)
            .map(|(code, c)| match c.kind() {
                ChainKind::IntegerResidue => vec![code],
                ChainKind::TruncatedPolynomial => c.digits(code),
            })
            .collect()
    }

    pub fn render(&self, a: Element) -> String {
        let parts: Vec<String> = self
            .codes(a)
            .into_iter()
            .zip(&self.0.components)
            .map(|(code, c)| c.render(code))
            .collect();
        if parts.len() == 1 {
            parts.into_iter().next().unwrap()
        } else {
            format!("({})", parts.join(","))
        }
    }

    #[inline]
    pub fn add(&self, a: Element, b: Element) -> Element {
        Element(self.0.add[a.index() * self.0.size + b.index()])
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        Element(self.0.mul[a.index() * self.0.size + b.index()])
    }

    #[inline]
    pub fn neg(&self, a: Element) -> Element {
        Element(self.0.neg[a.index()])
    }

    pub fn sub(&self, a: Element, b: Element) -> Element {
        self.add(a, self.neg(b))
    }

    pub fn one(&self) -> Element {
        let codes: Vec<u32> = vec![1; self.rank()];
        self.element_from_codes(&codes).expect("1 is in range")
    }

    pub fn is_unit(&self, a: Element) -> bool {
        self.0.ideal_reps[self.0.val_pos[a.index()]].total() == 0
    }

    /// The unit group, in index order.
    pub fn units(&self) -> &[Element] {
        &self.0.units
    }

    pub fn unit_count(&self) -> usize {
        self.0.units.len()
    }

    /// Multiplicative inverse of a unit.
    pub fn inverse(&self, u: Element) -> Option<Element> {
        let one = self.one();
        self.0
            .units
            .iter()
            .copied()
            .find(|&v| self.mul(u, v) == one)
    }

    /// Valuation of `a`: the exponent vector of the ideal representative
    /// generating `Ra`.
    pub fn valuation(&self, a: Element) -> &IdealExponent {
        &self.0.ideal_reps[self.0.val_pos[a.index()]]
    }

    /// Position of `valuation(a)` in [`ideal_reps`](Self::ideal_reps).
    pub fn valuation_pos(&self, a: Element) -> usize {
        self.0.val_pos[a.index()]
    }

    /// All ideal representatives, largest ideals first (total exponent
    /// ascending, ties lexicographic).
    pub fn ideal_reps(&self) -> &[IdealExponent] {
        &self.0.ideal_reps
    }

    pub fn ideal_pos(&self, e: &IdealExponent) -> Option<usize> {
        if !self.is_valid_exponent(e) {
            return None;
        }
        self.0.ideal_reps.iter().position(|x| x == e)
    }

    pub fn is_valid_exponent(&self, e: &IdealExponent) -> bool {
        e.0.len() == self.rank() && e.0.iter().zip(&self.0.components).all(|(&x, c)| x <= c.d())
    }

    pub fn check_exponent(&self, e: &IdealExponent) -> Result<()> {
        if self.is_valid_exponent(e) {
            Ok(())
        } else {
            Err(Error::BadExponent(e.0.clone()))
        }
    }

    pub fn zero_ideal(&self) -> IdealExponent {
        IdealExponent(self.0.components.iter().map(|c| c.d()).collect())
    }

    pub fn unit_ideal(&self) -> IdealExponent {
        IdealExponent(vec![0; self.rank()])
    }

    pub fn is_zero_ideal(&self, e: &IdealExponent) -> bool {
        *e == self.zero_ideal()
    }

    /// `Re ≤ Rf`, i.e. `e_i ≥ f_i` for every component.
    pub fn ideal_leq(&self, e: &IdealExponent, f: &IdealExponent) -> bool {
        e.0.iter().zip(&f.0).all(|(a, b)| a >= b)
    }

    /// Exponent of the product of two representatives: `min(e_i + f_i, d_i)`.
    pub fn ideal_product(&self, e: &IdealExponent, f: &IdealExponent) -> IdealExponent {
        IdealExponent(
            e.0.iter()
                .zip(&f.0)
                .zip(&self.0.components)
                .map(|((a, b), c)| (a + b).min(c.d()))
                .collect(),
        )
    }

    /// The literal product `π_1^{e_1} ⋯ π_r^{e_r}`.
    pub fn rep_element(&self, e: &IdealExponent) -> Element {
        let codes: Vec<u32> =
            e.0.iter()
                .zip(&self.0.components)
                .map(|(&x, c)| c.pi_power(x))
                .collect();
        self.element_from_codes(&codes).expect("valid exponent")
    }

    /// Exponent of the annihilator `(Re)^⊥`: `d_i − e_i`.
    pub fn orth(&self, e: &IdealExponent) -> IdealExponent {
        IdealExponent(
            e.0.iter()
                .zip(&self.0.components)
                .map(|(&x, c)| c.d() - x)
                .collect(),
        )
    }

    /// Representative of the socle, `(d_1 − 1, …, d_r − 1)`.
    pub fn socle_rep(&self) -> IdealExponent {
        IdealExponent(self.0.components.iter().map(|c| c.d() - 1).collect())
    }

    /// `Re ≤ Soc(R)`.
    pub fn in_socle(&self, e: &IdealExponent) -> bool {
        self.ideal_leq(e, &self.socle_rep())
    }

    /// The unit orbit `R^× · rep(e)`, which is also the set of generators of
    /// `R·rep(e)`.
    pub fn orbit(&self, e: &IdealExponent) -> &[Element] {
        match self.ideal_pos(e) {
            Some(pos) => &self.0.orbits[pos],
            None => &[],
        }
    }

    pub fn orbit_at(&self, pos: usize) -> &[Element] {
        &self.0.orbits[pos]
    }

    /// `Π (q^{d−e} − q^{d−e−1})` over components with `e_i < d_i`.
    pub fn orbit_size(&self, e: &IdealExponent) -> u64 {
        e.0.iter()
            .zip(&self.0.components)
            .map(|(&x, c)| {
                if x >= c.d() {
                    1
                } else {
                    let q = c.q() as u64;
                    q.pow(c.d() - x) - q.pow(c.d() - x - 1)
                }
            })
            .product()
    }

    /// `|R·rep(e)| = Π q^{d_i − e_i}`.
    pub fn ideal_size(&self, e: &IdealExponent) -> u64 {
        e.0.iter()
            .zip(&self.0.components)
            .map(|(&x, c)| (c.q() as u64).pow(c.d() - x.min(c.d())))
            .product()
    }

    /// Elements of the principal ideal `R·rep(e)`.
    pub fn ideal_elements(&self, e: &IdealExponent) -> Vec<Element> {
        self.elements()
            .filter(|&a| self.ideal_leq(self.valuation(a), e))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn ring(s: &str) -> ProductRing {
        s.parse().unwrap()
    }

    fn ex(v: &[u32]) -> IdealExponent {
        IdealExponent(v.to_vec())
    }

    const TEST_RINGS: &[&str] = &[
        "Z4", "Z8", "Z9", "Z16", "Z27", "Z81", "Z2*Z2", "Z2*Z4", "Z2*Z2*Z2", "F2x2", "F3x2",
        "F2x3", "Z2*F2x2", "Z3*Z3", "Z4*Z9", "F3x4",
    ];

    #[test]
    fn construction_examples() {
        let z4 = ring("Z4");
        assert_eq!(z4.size(), 4);
        let z2z4 = ring("Z2*Z4");
        assert_eq!(z2z4.size(), 8);
        let brute_units = z2z4
            .elements()
            .filter(|&a| z2z4.elements().any(|b| z2z4.mul(a, b) == z2z4.one()))
            .count();
        assert_eq!(brute_units, 2);
        assert_eq!(z2z4.unit_count(), 2);

        let f = ring("F2x2");
        assert_eq!(f.size(), 4);
        let pi = f.rep_element(&ex(&[1]));
        assert_eq!(f.render(pi), "x");
        assert_eq!(f.mul(pi, pi), Element::ZERO);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(ProductRing::new(vec![]).unwrap_err(), Error::EmptyRing);
        assert_eq!(
            ChainRingSpec::integer_residue(4, 1).unwrap_err(),
            Error::NotPrime(4)
        );
        assert_eq!(
            ChainRingSpec::truncated_polynomial(2, 0).unwrap_err(),
            Error::ZeroNilpotency
        );
        assert!(matches!(
            ProductRing::new(vec![ChainRingSpec::integer_residue(2, 6).unwrap(); 2]),
            Err(Error::RingTooLarge { .. })
        ));
    }

    #[test]
    fn arithmetic_examples() {
        let z4 = ring("Z4");
        let e = |i| z4.element(i).unwrap();
        assert_eq!(z4.add(e(2), e(3)), e(1));
        assert_eq!(z4.mul(e(2), e(3)), e(2));

        let f = ring("F2x2");
        let x = f.element_from_codes(&[2]).unwrap();
        let one_plus_x = f.element_from_codes(&[3]).unwrap();
        assert_eq!(f.render(one_plus_x), "1+x");
        assert_eq!(f.mul(x, x), Element::ZERO);
        assert_eq!(f.mul(one_plus_x, one_plus_x), f.one());

        let r = ring("Z2*Z4");
        let a = r.element_from_codes(&[1, 2]).unwrap();
        let b = r.element_from_codes(&[1, 3]).unwrap();
        assert_eq!(r.mul(a, b), a);
        assert_eq!(r.render(a), "(1,2)");
    }

    #[test]
    fn ring_laws_exhaustive() {
        for s in ["Z4", "Z9", "F2x3", "Z2*F2x2", "F3x2"] {
            let r = ring(s);
            for a in r.elements() {
                assert_eq!(r.add(a, r.neg(a)), Element::ZERO);
                assert_eq!(r.mul(a, r.one()), a);
                for b in r.elements() {
                    assert_eq!(r.add(a, b), r.add(b, a));
                    assert_eq!(r.mul(a, b), r.mul(b, a));
                    for c in r.elements() {
                        assert_eq!(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c)));
                        assert_eq!(r.add(r.add(a, b), c), r.add(a, r.add(b, c)));
                        assert_eq!(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn valuation_examples() {
        let z4 = ring("Z4");
        assert_eq!(z4.valuation(z4.element(2).unwrap()), &ex(&[1]));
        assert_eq!(z4.valuation(Element::ZERO), &ex(&[2]));
        assert_eq!(z4.valuation(z4.element(3).unwrap()), &ex(&[0]));

        // membership in rad powers, by enumeration
        let r = ring("Z2*Z4");
        let a = r.element_from_codes(&[0, 2]).unwrap();
        let rad_pow = |k: u32, comp: usize| -> BTreeSet<u32> {
            let c = r.components()[comp];
            let pi = c.pi_power(1);
            let mut pk = 1;
            for _ in 0..k {
                pk = c.mul(pk, pi);
            }
            (0..c.size()).map(|x| c.mul(x, pk)).collect()
        };
        let codes = r.codes(a);
        let brute: Vec<u32> = (0..2)
            .map(|comp| {
                let d = r.components()[comp].d();
                (0..=d)
                    .filter(|&k| rad_pow(k, comp).contains(&codes[comp]))
                    .max()
                    .unwrap()
            })
            .collect();
        assert_eq!(brute, vec![1, 1]);
        assert_eq!(r.valuation(a), &ex(&[1, 1]));
    }

    #[test]
    fn ideal_reps_examples() {
        assert_eq!(ring("Z4").ideal_reps(), &[ex(&[0]), ex(&[1]), ex(&[2])]);
        assert_eq!(
            ring("Z2*Z2").ideal_reps(),
            &[ex(&[0, 0]), ex(&[0, 1]), ex(&[1, 0]), ex(&[1, 1])]
        );
        // distinct principal ideals by enumeration
        let r = ring("Z2*Z4");
        let ideals: BTreeSet<BTreeSet<Element>> = r
            .elements()
            .map(|a| r.elements().map(|b| r.mul(b, a)).collect())
            .collect();
        assert_eq!(ideals.len(), 6);
        assert_eq!(r.ideal_reps().len(), 6);
    }

    #[test]
    fn orth_and_socle_examples() {
        let z4 = ring("Z4");
        assert_eq!(z4.orth(&ex(&[0])), ex(&[2]));
        assert_eq!(z4.orth(&ex(&[1])), ex(&[1]));
        assert_eq!(ring("Z2*Z4").orth(&ex(&[1, 0])), ex(&[0, 2]));
        assert_eq!(z4.socle_rep(), ex(&[1]));
        assert_eq!(ring("Z2*Z2").socle_rep(), ex(&[0, 0]));
        assert_eq!(ring("Z8*Z9").socle_rep(), ex(&[2, 1]));
    }

    #[test]
    fn orbit_examples() {
        let z4 = ring("Z4");
        let idx = |v: &[Element]| v.iter().map(|e| e.index()).collect::<Vec<_>>();
        assert_eq!(idx(z4.orbit(&ex(&[0]))), vec![1, 3]);
        assert_eq!(z4.orbit_size(&ex(&[0])), 2);
        assert_eq!(idx(z4.orbit(&ex(&[2]))), vec![0]);
        assert_eq!(z4.orbit_size(&ex(&[2])), 1);
        let z9 = ring("Z9");
        assert_eq!(idx(z9.orbit(&ex(&[1]))), vec![3, 6]);
        assert_eq!(z9.orbit_size(&ex(&[1])), 2);
    }

    #[test]
    fn structural_invariants_all_rings() {
        for s in TEST_RINGS {
            let r = ring(s);
            let one = r.one();
            let brute_units: Vec<Element> = r
                .elements()
                .filter(|&a| r.elements().any(|b| r.mul(a, b) == one))
                .collect();
            assert_eq!(r.units(), &brute_units[..], "{s}");
            for a in r.elements() {
                assert_eq!(r.is_unit(a), r.valuation(a).total() == 0);
                // Ra = R·rep(valuation(a))
                let ra: BTreeSet<Element> = r.elements().map(|b| r.mul(b, a)).collect();
                let rep = r.rep_element(r.valuation(a));
                let rrep: BTreeSet<Element> = r.elements().map(|b| r.mul(b, rep)).collect();
                assert_eq!(ra, rrep, "{s}");
            }
            let mut total = 0u64;
            let mut covered = BTreeSet::new();
            for e in r.ideal_reps() {
                let rep = r.rep_element(e);
                assert_eq!(r.valuation(rep), e);
                let brute: BTreeSet<Element> = r.units().iter().map(|&u| r.mul(u, rep)).collect();
                let stored: BTreeSet<Element> = r.orbit(e).iter().copied().collect();
                assert_eq!(brute, stored, "{s} {e}");
                assert_eq!(brute.len() as u64, r.orbit_size(e), "{s} {e}");
                total += r.orbit_size(e);
                covered.extend(brute);

                let ideal: BTreeSet<Element> = r.elements().map(|b| r.mul(b, rep)).collect();
                assert_eq!(ideal.len() as u64, r.ideal_size(e));
                assert_eq!(
                    ideal,
                    r.ideal_elements(e).into_iter().collect::<BTreeSet<_>>()
                );
                // annihilator law
                let ann: BTreeSet<Element> = r
                    .elements()
                    .filter(|&x| ideal.iter().all(|&y| r.mul(x, y) == Element::ZERO))
                    .collect();
                let orth_rep = r.rep_element(&r.orth(e));
                let orth_ideal: BTreeSet<Element> =
                    r.elements().map(|b| r.mul(b, orth_rep)).collect();
                assert_eq!(ann, orth_ideal, "{s} {e}");
                assert_eq!(r.orth(&r.orth(e)), *e);
                // containment order
                for f in r.ideal_reps() {
                    let frep = r.rep_element(f);
                    let rf: BTreeSet<Element> = r.elements().map(|b| r.mul(b, frep)).collect();
                    assert_eq!(r.ideal_leq(e, f), rf.contains(&rep), "{s} {e} {f}");
                }
            }
            assert_eq!(total as usize, r.size());
            assert_eq!(covered.len(), r.size());

            // socle = sum of minimal ideals
            let minimal: Vec<BTreeSet<Element>> = r
                .ideal_reps()
                .iter()
                .filter(|e| !r.is_zero_ideal(e))
                .map(|e| r.ideal_elements(e).into_iter().collect::<BTreeSet<_>>())
                .collect();
            let minimal: Vec<&BTreeSet<Element>> = minimal
                .iter()
                .filter(|i| {
                    !minimal
                        .iter()
                        .any(|j| j.len() > 1 && j.len() < i.len() && j.is_subset(i))
                })
                .collect();
            let mut soc: BTreeSet<Element> = [Element::ZERO].into();
            for m in &minimal {
                let cur: Vec<Element> = soc.iter().copied().collect();
                for a in cur {
                    for &b in m.iter() {
                        soc.insert(r.add(a, b));
                    }
                }
            }
            let soc_rep: BTreeSet<Element> = r.ideal_elements(&r.socle_rep()).into_iter().collect();
            assert_eq!(soc, soc_rep, "{s}");
        }
    }
}
