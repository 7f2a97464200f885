//! Brute-force search over small codes: enumerate submodules of `R^n`, the
//! linear isometries defined on them, and the monomial transformations that
//! might extend those isometries.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::conv::{corr_right, FnR};
use crate::error::{Error, Result};
use crate::ring::{Element, ProductRing};
use crate::scalar::Scalar;
use crate::weights::{sym_right, SymmetryGroup, Weight};

/// Search limits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budgets {
    /// Upper bound on `|R|^n`.
    pub max_ambient: usize,
    /// Codes beyond this many are not examined.
    pub max_codes: Option<usize>,
    /// Upper bound on generator-image assignments tried per code.
    pub max_maps: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Self {
            max_ambient: 4096,
            max_codes: None,
            max_maps: 1 << 20,
        }
    }
}

/// `R^n` with vectors encoded as dense ids (first coordinate most
/// significant).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ambient {
    ring: ProductRing,
    n: usize,
    size: usize,
}

impl Ambient {
    pub fn new(ring: &ProductRing, n: usize, budgets: &Budgets) -> Result<Self> {
        let size = (ring.size() as u64)
            .checked_pow(n as u32)
            .filter(|&s| s <= budgets.max_ambient as u64)
            .ok_or_else(|| {
                Error::BudgetExceeded(format!(
                    "|R|^n = {}^{} exceeds {}",
                    ring.size(),
                    n,
                    budgets.max_ambient
                ))
            })?;
        Ok(Self {
            ring: ring.clone(),
            n,
            size: size as usize,
        })
    }

    pub fn ring(&self) -> &ProductRing {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn encode(&self, v: &[Element]) -> u32 {
        debug_assert_eq!(v.len(), self.n);
        v.iter().fold(0u32, |acc, a| {
            acc * self.ring.size() as u32 + a.index() as u32
        })
    }

    pub fn decode(&self, mut id: u32) -> Vec<Element> {
        let q = self.ring.size() as u32;
        let mut v = vec![Element::ZERO; self.n];
        for slot in v.iter_mut().rev() {
            *slot = self.ring.element((id % q) as usize).expect("in range");
            id /= q;
        }
        v
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        let (x, y) = (self.decode(a), self.decode(b));
        let s: Vec<Element> = x
            .iter()
            .zip(&y)
            .map(|(&p, &q)| self.ring.add(p, q))
            .collect();
        self.encode(&s)
    }

    fn scale(&self, r: Element, a: u32) -> u32 {
        let s: Vec<Element> = self
            .decode(a)
            .iter()
            .map(|&p| self.ring.mul(r, p))
            .collect();
        self.encode(&s)
    }

    pub fn render(&self, id: u32) -> Vec<String> {
        self.decode(id)
            .iter()
            .map(|&a| self.ring.render(a))
            .collect()
    }
}

/// A submodule of `R^n` with a generating list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Code {
    ambient: Ambient,
    // sorted vector ids
    elements: Vec<u32>,
    generators: Vec<u32>,
}

impl Code {
    /// The span of `generators`.
    pub fn span(ambient: &Ambient, generators: &[Vec<Element>]) -> Result<Self> {
        if generators.iter().any(|g| g.len() != ambient.n) {
            return Err(Error::InvalidCode("generator of the wrong length".into()));
        }
        let gens: Vec<u32> = generators.iter().map(|g| ambient.encode(g)).collect();
        Ok(Self::span_ids(ambient, gens))
    }

    fn span_ids(ambient: &Ambient, generators: Vec<u32>) -> Self {
        let mut elements = vec![0u32];
        for &g in &generators {
            let cyclic: Vec<u32> = ambient
                .ring
                .elements()
                .map(|r| ambient.scale(r, g))
                .collect();
            elements = sum_sets(ambient, &elements, &cyclic);
        }
        Self {
            ambient: ambient.clone(),
            elements,
            generators,
        }
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element_ids(&self) -> &[u32] {
        &self.elements
    }

    pub fn elements(&self) -> Vec<Vec<Element>> {
        self.elements
            .iter()
            .map(|&id| self.ambient.decode(id))
            .collect()
    }

    pub fn generators(&self) -> Vec<Vec<Element>> {
        self.generators
            .iter()
            .map(|&id| self.ambient.decode(id))
            .collect()
    }

    pub fn contains(&self, v: &[Element]) -> bool {
        self.elements.binary_search(&self.ambient.encode(v)).is_ok()
    }

    /// Closure under addition and scalar multiplication, and `0 ∈ C`.
    pub fn is_closed(&self) -> bool {
        let has = |id: u32| self.elements.binary_search(&id).is_ok();
        has(0)
            && self.elements.iter().all(|&a| {
                self.elements.iter().all(|&b| has(self.ambient.add(a, b)))
                    && self
                        .ambient
                        .ring
                        .elements()
                        .all(|r| has(self.ambient.scale(r, a)))
            })
    }
}

fn sum_sets(ambient: &Ambient, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out: Vec<u32> = a
        .iter()
        .flat_map(|&x| b.iter().map(move |&y| (x, y)))
        .map(|(x, y)| ambient.add(x, y))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// All submodules of `R^n` generated by at most `max_gens` vectors,
/// deduplicated by element set, smallest generator lists first.
pub fn enumerate_codes(
    ring: &ProductRing,
    n: usize,
    max_gens: usize,
    budgets: &Budgets,
) -> Result<Vec<Code>> {
    if max_gens > n {
        return Err(Error::InvalidCode(format!(
            "max_gens = {max_gens} exceeds length {n}"
        )));
    }
    let ambient = Ambient::new(ring, n, budgets)?;
    let mut seen: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    let mut codes: Vec<Code> = Vec::new();
    let mut push = |code: Code, codes: &mut Vec<Code>| -> bool {
        if seen.contains_key(&code.elements) {
            return false;
        }
        seen.insert(code.elements.clone(), codes.len());
        codes.push(code);
        true
    };

    push(Code::span_ids(&ambient, vec![]), &mut codes);
    // distinct cyclic submodules, each with its first generator
    let mut cyclic: Vec<Code> = Vec::new();
    for g in 1..ambient.size as u32 {
        let c = Code::span_ids(&ambient, vec![g]);
        if push(c.clone(), &mut codes) {
            cyclic.push(c);
        }
    }
    if max_gens == 0 {
        codes.truncate(1);
        return Ok(codes);
    }
    let mut frontier: Vec<Code> = cyclic.clone();
    for _ in 2..=max_gens {
        let mut next = Vec::new();
        for a in &frontier {
            for c in &cyclic {
                let elements = sum_sets(&ambient, &a.elements, &c.elements);
                let mut generators = a.generators.clone();
                generators.extend(&c.generators);
                let code = Code {
                    ambient: ambient.clone(),
                    elements,
                    generators,
                };
                if push(code.clone(), &mut codes) {
                    next.push(code);
                }
            }
        }
        frontier = next;
    }
    Ok(codes)
}

/// A module homomorphism `C → R^n`, tabled on every element of `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    domain: Code,
    // images[i] is the image of domain.elements[i]
    images: Vec<u32>,
}

impl LinearMap {
    /// Validates additivity and `R`-linearity over the full table.
    pub fn new(domain: &Code, table: &[(Vec<Element>, Vec<Element>)]) -> Result<Self> {
        let amb = &domain.ambient;
        let mut images = vec![u32::MAX; domain.len()];
        for (x, y) in table {
            if y.len() != amb.n {
                return Err(Error::InvalidCode("image of the wrong length".into()));
            }
            let pos = domain
                .elements
                .binary_search(&amb.encode(x))
                .map_err(|_| Error::InvalidCode("table entry outside the code".into()))?;
            images[pos] = amb.encode(y);
        }
        if images.contains(&u32::MAX) {
            return Err(Error::InvalidCode("table does not cover the code".into()));
        }
        let map = Self {
            domain: domain.clone(),
            images,
        };
        if !map.is_linear() {
            return Err(Error::InvalidCode("map is not linear".into()));
        }
        Ok(map)
    }

    fn image_id(&self, x: u32) -> u32 {
        let pos = self.domain.elements.binary_search(&x).expect("x in domain");
        self.images[pos]
    }

    fn is_linear(&self) -> bool {
        let amb = &self.domain.ambient;
        self.domain.elements.iter().all(|&a| {
            self.domain.elements.iter().all(|&b| {
                self.image_id(amb.add(a, b)) == amb.add(self.image_id(a), self.image_id(b))
            }) && amb
                .ring
                .elements()
                .all(|r| self.image_id(amb.scale(r, a)) == amb.scale(r, self.image_id(a)))
        })
    }

    pub fn domain(&self) -> &Code {
        &self.domain
    }

    pub fn apply(&self, x: &[Element]) -> Option<Vec<Element>> {
        let amb = &self.domain.ambient;
        let pos = self.domain.elements.binary_search(&amb.encode(x)).ok()?;
        Some(amb.decode(self.images[pos]))
    }

    /// `(x, φ(x))` for every `x` in the domain.
    pub fn table(&self) -> Vec<(Vec<Element>, Vec<Element>)> {
        let amb = &self.domain.ambient;
        self.domain
            .elements
            .iter()
            .zip(&self.images)
            .map(|(&x, &y)| (amb.decode(x), amb.decode(y)))
            .collect()
    }

    pub fn is_injective(&self) -> bool {
        let mut imgs = self.images.clone();
        imgs.sort_unstable();
        imgs.windows(2).all(|w| w[0] != w[1])
    }

    /// `f(φ(x)) = f(x)` for every `x`, with `f` extended additively to tuples.
    pub fn preserves(&self, f: &FnR) -> bool {
        let amb = &self.domain.ambient;
        let tuple = |id: u32| -> Scalar { amb.decode(id).iter().map(|&a| f.at(a)).sum() };
        self.domain
            .elements
            .iter()
            .zip(&self.images)
            .all(|(&x, &y)| tuple(x) == tuple(y))
    }
}

/// `x ↦ (x_{π(1)} u_1, …, x_{π(n)} u_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Monomial {
    /// `perm[i]` is the source coordinate of output coordinate `i`.
    pub perm: Vec<usize>,
    pub units: Vec<Element>,
}

impl Monomial {
    pub fn identity(ring: &ProductRing, n: usize) -> Self {
        Self {
            perm: (0..n).collect(),
            units: vec![ring.one(); n],
        }
    }

    pub fn apply(&self, ring: &ProductRing, x: &[Element]) -> Vec<Element> {
        self.perm
            .iter()
            .zip(&self.units)
            .map(|(&src, &u)| ring.mul(x[src], u))
            .collect()
    }

    pub fn is_bijective(&self, ring: &ProductRing) -> bool {
        self.perm.iter().sorted().copied().eq(0..self.perm.len())
            && self.units.iter().all(|&u| ring.is_unit(u))
    }
}

/// Assigns a small integer to each distinct tuple weight so that the inner
/// search loops compare integers instead of rationals.
fn weight_classes(amb: &Ambient, f: &FnR) -> Vec<u32> {
    let mut ids: HashMap<Scalar, u32> = HashMap::new();
    (0..amb.size as u32)
        .map(|v| {
            let w: Scalar = amb.decode(v).iter().map(|&a| f.at(a)).sum();
            let next = ids.len() as u32;
            *ids.entry(w).or_insert(next)
        })
        .collect()
}

/// All linear `f`-isometries `C → R^n` for an arbitrary function `f`
/// (extended additively to tuples).
pub fn enumerate_isometries_fn(code: &Code, f: &FnR, budgets: &Budgets) -> Result<Vec<LinearMap>> {
    let amb = &code.ambient;
    if *f.ring() != amb.ring {
        return Err(Error::RingMismatch);
    }
    let class = weight_classes(amb, f);
    let gens = &code.generators;
    let candidates: Vec<Vec<u32>> = gens
        .iter()
        .map(|&g| {
            (0..amb.size as u32)
                .filter(|&v| class[v as usize] == class[g as usize])
                .collect()
        })
        .collect();
    let assignments = candidates
        .iter()
        .try_fold(1usize, |acc, c| acc.checked_mul(c.len()))
        .unwrap_or(usize::MAX);
    if assignments > budgets.max_maps {
        return Err(Error::BudgetExceeded(format!(
            "{assignments} generator assignments exceed {}",
            budgets.max_maps
        )));
    }

    // every coefficient tuple with the code element it produces
    let coeffs: Vec<(Vec<Element>, usize)> = (0..gens.len())
        .map(|_| amb.ring.elements())
        .multi_cartesian_product()
        .map(|c| {
            let x = c
                .iter()
                .zip(gens)
                .fold(0u32, |acc, (&r, &g)| amb.add(acc, amb.scale(r, g)));
            let pos = code.elements.binary_search(&x).expect("span member");
            (c, pos)
        })
        .collect();
    // zero generators: the single zero map
    let coeffs = if gens.is_empty() {
        vec![(Vec::new(), 0)]
    } else {
        coeffs
    };

    let mut maps = Vec::new();
    let images_iter: Box<dyn Iterator<Item = Vec<u32>>> = if gens.is_empty() {
        Box::new(std::iter::once(Vec::new()))
    } else {
        Box::new(candidates.into_iter().multi_cartesian_product())
    };
    'assign: for images in images_iter {
        let mut table = vec![u32::MAX; code.len()];
        for (c, pos) in &coeffs {
            let y = c
                .iter()
                .zip(&images)
                .fold(0u32, |acc, (&r, &v)| amb.add(acc, amb.scale(r, v)));
            match table[*pos] {
                u32::MAX => table[*pos] = y,
                prev if prev != y => continue 'assign,
                _ => {}
            }
        }
        let preserves = code
            .elements
            .iter()
            .zip(&table)
            .all(|(&x, &y)| class[x as usize] == class[y as usize]);
        if preserves {
            maps.push(LinearMap {
                domain: code.clone(),
                images: table,
            });
        }
    }
    Ok(maps)
}

/// All linear `w`-isometries defined on `code`.
pub fn enumerate_isometries(code: &Code, w: &Weight, budgets: &Budgets) -> Result<Vec<LinearMap>> {
    enumerate_isometries_fn(code, &w.to_fn(), budgets)
}

/// Searches the `G`-monomial transformations for one that restricts to `φ`.
pub fn extends_to_monomial(phi: &LinearMap, group: &SymmetryGroup) -> Option<Monomial> {
    let amb = &phi.domain.ambient;
    let ring = &amb.ring;
    if *group.ring() != *ring || !phi.is_injective() {
        return None;
    }
    let n = amb.n;
    let gens: Vec<(Vec<Element>, Vec<Element>)> = phi
        .domain
        .generators
        .iter()
        .map(|&g| (amb.decode(g), amb.decode(phi.image_id(g))))
        .collect();
    let table = phi.table();
    for perm in (0..n).permutations(n) {
        let unit_choices = (0..n).map(|_| group.units().iter().copied());
        let unit_tuples: Box<dyn Iterator<Item = Vec<Element>>> = if n == 0 {
            Box::new(std::iter::once(Vec::new()))
        } else {
            Box::new(unit_choices.multi_cartesian_product())
        };
        for units in unit_tuples {
            let m = Monomial {
                perm: perm.clone(),
                units,
            };
            if gens.iter().all(|(x, y)| m.apply(ring, x) == *y)
                && table.iter().all(|(x, y)| m.apply(ring, x) == *y)
            {
                return Some(m);
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapEntry {
    pub x: Vec<String>,
    pub image: Vec<String>,
}

/// A linear isometry with no monomial extension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub code_index: usize,
    pub generators: Vec<Vec<String>>,
    pub injective: bool,
    pub map: Vec<MapEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedCode {
    pub code_index: usize,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub ring: String,
    pub weight: String,
    pub n: usize,
    pub codes_examined: usize,
    pub codes_skipped: Vec<SkippedCode>,
    pub isometries_found: usize,
    pub extendable: usize,
    pub witnesses: Vec<Witness>,
}

fn witness(code_index: usize, phi: &LinearMap) -> Witness {
    let amb = &phi.domain.ambient;
    Witness {
        code_index,
        generators: phi
            .domain
            .generators
            .iter()
            .map(|&g| amb.render(g))
            .collect(),
        injective: phi.is_injective(),
        map: phi
            .domain
            .elements
            .iter()
            .zip(&phi.images)
            .map(|(&x, &y)| MapEntry {
                x: amb.render(x),
                image: amb.render(y),
            })
            .collect(),
    }
}

fn describe(w: &Weight) -> String {
    let parts: Vec<String> = w.table().iter().map(|(e, v)| format!("{e}:{v}")).collect();
    format!("{{{}}}", parts.join("; "))
}

/// Tests every linear `w`-isometry on every code in `R^n` for a
/// `Sym_r(w)`-monomial extension.
pub fn verify_extension_theorem(
    ring: &ProductRing,
    w: &Weight,
    n: usize,
    budgets: &Budgets,
) -> Result<OracleReport> {
    if w.ring() != ring {
        return Err(Error::RingMismatch);
    }
    let codes = enumerate_codes(ring, n, n, budgets)?;
    let group = sym_right(&w.to_fn());
    let limit = budgets.max_codes.unwrap_or(usize::MAX);
    let mut report = OracleReport {
        ring: ring.to_string(),
        weight: describe(w),
        n,
        codes_examined: 0,
        codes_skipped: Vec::new(),
        isometries_found: 0,
        extendable: 0,
        witnesses: Vec::new(),
    };
    for (idx, code) in codes.iter().enumerate() {
        if idx >= limit {
            report.codes_skipped.push(SkippedCode {
                code_index: idx,
                reason: "max_codes reached".into(),
            });
            continue;
        }
        let maps = match enumerate_isometries(code, w, budgets) {
            Ok(m) => m,
            Err(e @ Error::BudgetExceeded(_)) => {
                report.codes_skipped.push(SkippedCode {
                    code_index: idx,
                    reason: e.to_string(),
                });
                continue;
            }
            Err(e) => return Err(e),
        };
        report.codes_examined += 1;
        for phi in &maps {
            report.isometries_found += 1;
            if extends_to_monomial(phi, &group).is_some() {
                report.extendable += 1;
            } else {
                report.witnesses.push(witness(idx, phi));
            }
        }
    }
    Ok(report)
}

/// Checks that a `w`-isometry is also a `(w ⊛ s)`-isometry.
pub fn check_lemiso(phi: &LinearMap, w: &Weight, s: &FnR) -> Result<bool> {
    let wf = w.to_fn();
    if !phi.preserves(&wf) {
        return Err(Error::NotIsometry);
    }
    let ws = corr_right(&wf, s)?;
    Ok(phi.preserves(&ws))
}
