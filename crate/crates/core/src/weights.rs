//! Invariant weights, symmetry groups, homogeneity and the standard
//! Hamming and normalised homogeneous weights.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::conv::FnR;
use crate::error::{Error, Result};
use crate::mobius::mobius_zero_closed;
use crate::ring::{Element, IdealExponent, ProductRing};
use crate::scalar::Scalar;

/// An invariant weight, stored by ideal representative. The value on the
/// zero ideal is always 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight {
    ring: ProductRing,
    // indexed like ring.ideal_reps()
    values: Vec<Scalar>,
}

impl Weight {
    /// Builds a weight from values on every nonzero ideal. The zero-ideal
    /// entry may be omitted; if present it must be 0.
    pub fn from_table(ring: &ProductRing, table: &BTreeMap<IdealExponent, Scalar>) -> Result<Self> {
        for e in table.keys() {
            ring.check_exponent(e)?;
        }
        let values = ring
            .ideal_reps()
            .iter()
            .map(|e| match table.get(e) {
                Some(v) if ring.is_zero_ideal(e) && !v.is_zero() => Err(Error::NonzeroAtZero),
                Some(v) => Ok(v.clone()),
                None if ring.is_zero_ideal(e) => Ok(Scalar::zero()),
                None => Err(Error::MissingWeightKey(e.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            ring: ring.clone(),
            values,
        })
    }

    /// Builds a weight from a value per ideal, in ideal order.
    pub fn from_values(ring: &ProductRing, values: Vec<Scalar>) -> Result<Self> {
        if values.len() != ring.ideal_reps().len() {
            return Err(Error::MissingWeightKey(format!(
                "{} values for {} ideals",
                values.len(),
                ring.ideal_reps().len()
            )));
        }
        let zero = ring.ideal_pos(&ring.zero_ideal()).expect("zero ideal");
        if !values[zero].is_zero() {
            return Err(Error::NonzeroAtZero);
        }
        Ok(Self {
            ring: ring.clone(),
            values,
        })
    }

    /// Accepts a raw function if it vanishes at 0 and is invariant.
    pub fn from_fn(f: &FnR) -> Result<Self> {
        if !f.at(Element::ZERO).is_zero() {
            return Err(Error::NonzeroAtZero);
        }
        if !is_invariant(f) {
            return Err(Error::NotInvariant);
        }
        let ring = f.ring();
        let values = (0..ring.ideal_reps().len())
            .map(|pos| f.at(ring.orbit_at(pos)[0]).clone())
            .collect();
        Ok(Self {
            ring: ring.clone(),
            values,
        })
    }

    pub fn ring(&self) -> &ProductRing {
        &self.ring
    }

    /// Value on the orbit of `rep(e)`. Panics on an exponent foreign to the
    /// ring.
    pub fn value(&self, e: &IdealExponent) -> &Scalar {
        let pos = self.ring.ideal_pos(e).expect("exponent of this ring");
        &self.values[pos]
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn eval(&self, a: Element) -> &Scalar {
        &self.values[self.ring.valuation_pos(a)]
    }

    /// The weight as a dense function on `R`.
    pub fn to_fn(&self) -> FnR {
        FnR::from_fn(&self.ring, |a| self.eval(a).clone())
    }

    /// `(exponent, value)` pairs over the nonzero ideals.
    pub fn table(&self) -> BTreeMap<IdealExponent, Scalar> {
        self.ring
            .ideal_reps()
            .iter()
            .zip(&self.values)
            .filter(|(e, _)| !self.ring.is_zero_ideal(e))
            .map(|(e, v)| (e.clone(), v.clone()))
            .collect()
    }

    pub fn scale(&self, lambda: &Scalar) -> Weight {
        Self {
            ring: self.ring.clone(),
            values: self.values.iter().map(|v| v * lambda).collect(),
        }
    }

    /// `w(x_1) + ⋯ + w(x_n)`.
    pub fn on_tuple(&self, x: &[Element]) -> Scalar {
        x.iter().map(|&a| self.eval(a)).sum()
    }
}

pub fn weight_from_table(
    ring: &ProductRing,
    table: &BTreeMap<IdealExponent, Scalar>,
) -> Result<Weight> {
    Weight::from_table(ring, table)
}

pub fn weight_on_tuple(w: &Weight, x: &[Element]) -> Scalar {
    w.on_tuple(x)
}

/// 0 at 0, 1 elsewhere.
pub fn hamming(ring: &ProductRing) -> Weight {
    let values = ring
        .ideal_reps()
        .iter()
        .map(|e| {
            if ring.is_zero_ideal(e) {
                Scalar::zero()
            } else {
                Scalar::one()
            }
        })
        .collect();
    Weight {
        ring: ring.clone(),
        values,
    }
}

/// `w_hom(x) = 1 − μ(0, Rx) / |R^× x|`.
pub fn homogeneous(ring: &ProductRing) -> Weight {
    let values = ring
        .ideal_reps()
        .iter()
        .map(|e| {
            if ring.is_zero_ideal(e) {
                Scalar::zero()
            } else {
                let orbit = Scalar::int(ring.orbit_size(e) as i64);
                Scalar::one() - mobius_zero_closed(ring, e) / orbit
            }
        })
        .collect();
    Weight {
        ring: ring.clone(),
        values,
    }
}

/// A subgroup of the unit group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryGroup {
    ring: ProductRing,
    units: Vec<Element>,
}

impl SymmetryGroup {
    /// Checks closure under multiplication and inverses.
    pub fn new(ring: &ProductRing, mut units: Vec<Element>) -> Result<Self> {
        units.sort();
        units.dedup();
        let ok = units.contains(&ring.one())
            && units.iter().all(|&u| ring.is_unit(u))
            && units
                .iter()
                .all(|&u| units.iter().all(|&v| units.contains(&ring.mul(u, v))))
            && units
                .iter()
                .all(|&u| ring.inverse(u).is_some_and(|i| units.contains(&i)));
        if !ok {
            return Err(Error::InvalidCode(
                "not a subgroup of the unit group".into(),
            ));
        }
        Ok(Self {
            ring: ring.clone(),
            units,
        })
    }

    pub fn full(ring: &ProductRing) -> Self {
        Self {
            ring: ring.clone(),
            units: ring.units().to_vec(),
        }
    }

    pub fn ring(&self) -> &ProductRing {
        &self.ring
    }

    pub fn units(&self) -> &[Element] {
        &self.units
    }

    pub fn contains(&self, u: Element) -> bool {
        self.units.binary_search(&u).is_ok()
    }

    pub fn is_superset_of(&self, other: &SymmetryGroup) -> bool {
        other.units.iter().all(|&u| self.contains(u))
    }
}

/// `Sym_ℓ(f) = {u ∈ R^× | f(ux) = f(x) ∀x}`.
pub fn sym_left(f: &FnR) -> SymmetryGroup {
    let r = f.ring();
    let units = r
        .units()
        .iter()
        .copied()
        .filter(|&u| r.elements().all(|x| f.at(r.mul(u, x)) == f.at(x)))
        .collect();
    SymmetryGroup {
        ring: r.clone(),
        units,
    }
}

/// `Sym_r(f) = {u ∈ R^× | f(xu) = f(x) ∀x}`.
pub fn sym_right(f: &FnR) -> SymmetryGroup {
    let r = f.ring();
    let units = r
        .units()
        .iter()
        .copied()
        .filter(|&u| r.elements().all(|x| f.at(r.mul(x, u)) == f.at(x)))
        .collect();
    SymmetryGroup {
        ring: r.clone(),
        units,
    }
}

/// Both symmetry groups are the full unit group.
pub fn is_invariant(f: &FnR) -> bool {
    let n = f.ring().unit_count();
    sym_left(f).units.len() == n && sym_right(f).units.len() == n
}

/// The constant `c` with `Σ_{y∈Rx} w(y) = c·|Rx|` for every nonzero `x`,
/// if one exists.
pub fn homogeneity_constant(w: &Weight) -> Option<Scalar> {
    let ring = w.ring();
    let mut constant: Option<Scalar> = None;
    for e in ring.ideal_reps().iter().filter(|e| !ring.is_zero_ideal(e)) {
        let ideal = ring.ideal_elements(e);
        let total: Scalar = ideal.iter().map(|&y| w.eval(y)).sum();
        let avg = total / Scalar::int(ideal.len() as i64);
        match &constant {
            None => constant = Some(avg),
            Some(c) if *c != avg => return None,
            Some(_) => {}
        }
    }
    Some(constant.unwrap_or_else(Scalar::zero))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(s: &str) -> ProductRing {
        s.parse().unwrap()
    }

    fn ex(v: &[u32]) -> IdealExponent {
        IdealExponent(v.to_vec())
    }

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::int(x)).collect()
    }

    fn table(entries: &[(&[u32], i64)]) -> BTreeMap<IdealExponent, Scalar> {
        entries
            .iter()
            .map(|(e, v)| (ex(e), Scalar::int(*v)))
            .collect()
    }

    #[test]
    fn from_table_examples() {
        let r = ring("Z4");
        let w = Weight::from_table(&r, &table(&[(&[0], 1), (&[1], 2)])).unwrap();
        assert_eq!(w.to_fn().table(), &ints(&[0, 1, 2, 1])[..]);
        assert_eq!(
            Weight::from_table(&r, &table(&[(&[0], 1)])),
            Err(Error::MissingWeightKey("1".into()))
        );
        assert_eq!(
            Weight::from_table(&r, &table(&[(&[0], 1), (&[1], 2), (&[2], 5)])),
            Err(Error::NonzeroAtZero)
        );
        assert!(Weight::from_table(&r, &table(&[(&[0], 1), (&[1], 2), (&[2], 0)])).is_ok());
        assert_eq!(
            Weight::from_table(&r, &table(&[(&[0], 1), (&[1], 2), (&[3], 1)])),
            Err(Error::BadExponent(vec![3]))
        );

        let r2 = ring("Z2*Z2");
        let ones =
            Weight::from_table(&r2, &table(&[(&[0, 0], 1), (&[0, 1], 1), (&[1, 0], 1)])).unwrap();
        assert_eq!(ones, hamming(&r2));
    }

    #[test]
    fn hamming_examples() {
        let r = ring("Z4");
        assert_eq!(hamming(&r).to_fn().table(), &ints(&[0, 1, 1, 1])[..]);
        for s in ["Z4", "Z2*Z4", "F3x2"] {
            let r = ring(s);
            let total: Scalar = hamming(&r).to_fn().table().iter().sum();
            assert_eq!(total, Scalar::int(r.size() as i64 - 1));
        }
        let f = ring("F2x2");
        let x = f.element_from_codes(&[2]).unwrap();
        assert_eq!(hamming(&f).eval(x), &Scalar::one());
    }

    #[test]
    fn homogeneous_examples() {
        assert_eq!(
            homogeneous(&ring("Z4")).to_fn().table(),
            &ints(&[0, 1, 2, 1])[..]
        );
        let z8 = ring("Z8");
        let w = homogeneous(&z8);
        let at = |i| w.eval(z8.element(i).unwrap()).clone();
        assert_eq!(at(4), Scalar::int(2));
        assert_eq!(at(2), Scalar::int(1));
        assert_eq!(at(1), Scalar::int(1));

        let r = ring("Z2*Z2");
        let w = homogeneous(&r);
        let el = |a, b| r.element_from_codes(&[a, b]).unwrap();
        assert_eq!(w.eval(el(1, 1)), &Scalar::zero());
        assert_eq!(w.eval(el(1, 0)), &Scalar::int(2));
    }

    #[test]
    fn symmetry_groups() {
        let r = ring("Z4");
        let w = homogeneous(&r).to_fn();
        assert_eq!(sym_left(&w).units(), r.units());
        assert_eq!(sym_right(&w).units(), r.units());
        let d1 = crate::conv::delta(&r, r.one());
        assert_eq!(sym_left(&d1).units(), &[r.one()]);
        let c = FnR::from_fn(&r, |_| Scalar::int(3));
        assert_eq!(sym_left(&c).units(), r.units());
        for g in [sym_left(&d1), sym_right(&w)] {
            assert!(SymmetryGroup::new(&r, g.units().to_vec()).is_ok());
        }
        assert!(SymmetryGroup::new(&r, vec![r.element(3).unwrap()]).is_err());
    }

    #[test]
    fn invariance() {
        let r = ring("Z4");
        assert!(is_invariant(&homogeneous(&r).to_fn()));
        let f = FnR::new(&r, ints(&[0, 1, 0, 2])).unwrap();
        assert!(!is_invariant(&f));
        assert_eq!(Weight::from_fn(&f), Err(Error::NotInvariant));
        for s in ["Z9", "Z2*Z4", "F2x2"] {
            assert!(is_invariant(&hamming(&ring(s)).to_fn()));
        }
    }

    #[test]
    fn homogeneity() {
        for s in [
            "Z4", "Z8", "Z9", "Z2*Z2", "Z2*Z4", "F2x2", "F3x2", "Z2*Z2*Z2", "Z16", "Z2*F2x2",
        ] {
            assert_eq!(
                homogeneity_constant(&homogeneous(&ring(s))),
                Some(Scalar::one()),
                "{s}"
            );
        }
        let r = ring("Z4");
        assert_eq!(homogeneity_constant(&hamming(&r)), None);
        let zero = Weight::from_values(&r, ints(&[0, 0, 0])).unwrap();
        assert_eq!(homogeneity_constant(&zero), Some(Scalar::zero()));
    }

    #[test]
    fn tuples() {
        let r = ring("Z4");
        let w = homogeneous(&r);
        let e = |i| r.element(i).unwrap();
        assert_eq!(w.on_tuple(&[e(1), e(2)]), Scalar::int(3));
        assert_eq!(w.on_tuple(&[e(2), e(1)]), Scalar::int(3));
        assert_eq!(w.on_tuple(&[Element::ZERO; 3]), Scalar::zero());
        assert_eq!(w.on_tuple(&[]), Scalar::zero());
    }

    #[test]
    fn weights_are_orbit_functions() {
        for s in ["Z9", "Z2*Z4", "F3x2"] {
            let r = ring(s);
            let w = homogeneous(&r);
            let f = w.to_fn();
            let distinct: std::collections::BTreeSet<String> =
                f.table().iter().map(|v| v.to_string()).collect();
            assert!(distinct.len() <= r.ideal_reps().len());
            for a in r.elements() {
                for b in r.elements() {
                    if r.valuation(a) == r.valuation(b) {
                        assert_eq!(f.at(a), f.at(b));
                    }
                }
            }
            assert_eq!(Weight::from_fn(&f).unwrap(), w);
        }
    }
}
