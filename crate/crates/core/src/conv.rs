//! The function algebra `C[R, ∗]`: convolution, point masses, the left and
//! right correlations, the invariant subalgebra `S` and its `ε` and `η`
//! bases.
//!
//! Classes of the quotient by `C·δ_0` are represented by their member that
//! vanishes at 0. Correlating a weight (which vanishes at 0) with `δ_0`
//! gives zero, so the right action on weights does not depend on the choice
//! of representative.

use std::ops::Deref;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::mobius::mobius_zero_sign;
use crate::ring::{Element, IdealExponent, ProductRing};
use crate::scalar::Scalar;
use crate::weights::Weight;

/// A function `R → Q(i)` stored densely by element index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FnR {
    ring: ProductRing,
    table: Vec<Scalar>,
}

impl FnR {
    pub fn new(ring: &ProductRing, table: Vec<Scalar>) -> Result<Self> {
        if table.len() != ring.size() {
            return Err(Error::ElementOutOfRange {
                index: table.len(),
                size: ring.size(),
            });
        }
        Ok(Self {
            ring: ring.clone(),
            table,
        })
    }

    pub fn zero(ring: &ProductRing) -> Self {
        Self {
            ring: ring.clone(),
            table: vec![Scalar::zero(); ring.size()],
        }
    }

    pub fn from_fn(ring: &ProductRing, f: impl Fn(Element) -> Scalar) -> Self {
        Self {
            ring: ring.clone(),
            table: ring.elements().map(f).collect(),
        }
    }

    pub fn ring(&self) -> &ProductRing {
        &self.ring
    }

    pub fn table(&self) -> &[Scalar] {
        &self.table
    }

    pub fn at(&self, a: Element) -> &Scalar {
        &self.table[a.index()]
    }

    pub fn same_ring(&self, other: &FnR) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &FnR) -> Result<FnR> {
        self.same_ring(other)?;
        Ok(Self {
            ring: self.ring.clone(),
            table: self
                .table
                .iter()
                .zip(&other.table)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &FnR) -> Result<FnR> {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, lambda: &Scalar) -> FnR {
        Self {
            ring: self.ring.clone(),
            table: self.table.iter().map(|a| a * lambda).collect(),
        }
    }

    /// `f(xu) = f(x)` for every `x` and unit `u`.
    pub fn is_right_invariant(&self) -> bool {
        let r = &self.ring;
        r.units()
            .iter()
            .all(|&u| r.elements().all(|x| self.at(r.mul(x, u)) == self.at(x)))
    }

    /// `f(ux) = f(x)` for every `x` and unit `u`.
    pub fn is_left_invariant(&self) -> bool {
        let r = &self.ring;
        r.units()
            .iter()
            .all(|&u| r.elements().all(|x| self.at(r.mul(u, x)) == self.at(x)))
    }
}

/// The point mass `δ_r`.
pub fn delta(ring: &ProductRing, r: Element) -> FnR {
    FnR::from_fn(ring, |x| {
        if x == r {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    })
}

/// `δ_A = Σ_{a∈A} δ_a`.
pub fn delta_set(ring: &ProductRing, set: &[Element]) -> FnR {
    FnR::from_fn(ring, |x| {
        if set.contains(&x) {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    })
}

fn nonzero_entries(f: &FnR) -> impl Iterator<Item = (Element, &Scalar)> {
    f.ring
        .elements()
        .zip(&f.table)
        .filter(|(_, v)| !v.is_zero())
}

/// `(f ∗ g)(x) = Σ_{ab=x} f(a) g(b)`.
pub fn convolve(f: &FnR, g: &FnR) -> Result<FnR> {
    f.same_ring(g)?;
    let r = &f.ring;
    let mut out = FnR::zero(r);
    for (a, fa) in nonzero_entries(f) {
        for (b, gb) in nonzero_entries(g) {
            out.table[r.mul(a, b).index()] += fa * gb;
        }
    }
    Ok(out)
}

/// Left correlation `(f ⊛′ w)(x) = Σ_r f(r) w(xr)`.
pub fn corr_left(f: &FnR, w: &FnR) -> Result<FnR> {
    f.same_ring(w)?;
    let r = &f.ring;
    let terms: Vec<(Element, &Scalar)> = nonzero_entries(f).collect();
    Ok(FnR::from_fn(r, |x| {
        terms.iter().map(|&(s, fs)| fs * w.at(r.mul(x, s))).sum()
    }))
}

/// Right correlation `(w ⊛ g)(x) = Σ_r w(rx) g(r)`.
pub fn corr_right(w: &FnR, g: &FnR) -> Result<FnR> {
    w.same_ring(g)?;
    let r = &w.ring;
    let terms: Vec<(Element, &Scalar)> = nonzero_entries(g).collect();
    Ok(FnR::from_fn(r, |x| {
        terms.iter().map(|&(s, gs)| w.at(r.mul(s, x)) * gs).sum()
    }))
}

/// An element of `S`: a right-invariant function, as the representative of
/// its `C_0[R]` class that vanishes at 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SElement(FnR);

impl SElement {
    /// Accepts `f` if it is right-invariant and `f(0) = 0`.
    pub fn new(f: FnR) -> Result<Self> {
        if !f.at(Element::ZERO).is_zero() || !f.is_right_invariant() {
            return Err(Error::NotInvariant);
        }
        Ok(Self(f))
    }

    /// The canonical representative of the class of a right-invariant `f`.
    pub fn canonical(mut f: FnR) -> Result<Self> {
        f.table[0] = Scalar::zero();
        Self::new(f)
    }

    /// Builds `Σ_e c_e ε_e` from coordinates on the nonzero ideals, in the
    /// order of [`nonzero_ideals`].
    pub fn from_epsilon_coords(ring: &ProductRing, coords: &[Scalar]) -> Result<Self> {
        let ideals = nonzero_ideals(ring);
        if coords.len() != ideals.len() {
            return Err(Error::ElementOutOfRange {
                index: coords.len(),
                size: ideals.len(),
            });
        }
        let mut f = FnR::zero(ring);
        for (e, c) in ideals.iter().zip(coords) {
            let orbit = ring.orbit(e);
            let v = c / &Scalar::int(orbit.len() as i64);
            for a in orbit {
                f.table[a.index()] = v.clone();
            }
        }
        Ok(Self(f))
    }

    /// Coordinates in the `ε` basis (the orbit sums).
    pub fn epsilon_coords(&self) -> Vec<Scalar> {
        let ring = &self.0.ring;
        nonzero_ideals(ring)
            .iter()
            .map(|e| {
                let orbit = ring.orbit(e);
                self.0.at(orbit[0]) * &Scalar::int(orbit.len() as i64)
            })
            .collect()
    }

    pub fn into_fn(self) -> FnR {
        self.0
    }
}

impl Deref for SElement {
    type Target = FnR;
    fn deref(&self) -> &FnR {
        &self.0
    }
}

/// `E \ {0}` in the ring's ideal order.
pub fn nonzero_ideals(ring: &ProductRing) -> Vec<IdealExponent> {
    ring.ideal_reps()
        .iter()
        .filter(|e| !ring.is_zero_ideal(e))
        .cloned()
        .collect()
}

/// `ε_e = δ_{R^× e} / |R^× e|`. For the zero ideal this is `δ_0`.
pub fn epsilon(ring: &ProductRing, e: &IdealExponent) -> Result<FnR> {
    ring.check_exponent(e)?;
    let orbit = ring.orbit(e);
    let weight = Scalar::ratio(1, orbit.len() as i64);
    Ok(FnR::from_fn(ring, |x| {
        if orbit.contains(&x) {
            weight.clone()
        } else {
            Scalar::zero()
        }
    }))
}

/// The terms `(t, μ(0, Rxt))` of `η_x = Σ_{x⊥ ≤ t} μ(0,Rxt) ε_t`, where
/// `x⊥ ≤ t` means `t_i ≤ d_i − x_i`. Zero coefficients are dropped; the
/// zero-ideal term is kept.
pub fn eta_terms(ring: &ProductRing, x: &IdealExponent) -> Result<Vec<(IdealExponent, Scalar)>> {
    ring.check_exponent(x)?;
    if ring.is_zero_ideal(x) {
        return Err(Error::ZeroIdealEta);
    }
    let xo = ring.orth(x);
    Ok(ring
        .ideal_reps()
        .iter()
        .filter(|t| ring.ideal_leq(&xo, t))
        .filter_map(|t| {
            let mu = mobius_zero_sign(ring, &ring.ideal_product(x, t));
            (mu != 0).then(|| (t.clone(), Scalar::int(mu)))
        })
        .collect())
}

/// `η_x` as an element of `S` (the `ε_0 = δ_0` term vanishes in the quotient).
pub fn eta(ring: &ProductRing, x: &IdealExponent) -> Result<SElement> {
    let terms = eta_terms(ring, x)?;
    let ideals = nonzero_ideals(ring);
    let coords: Vec<Scalar> = ideals
        .iter()
        .map(|e| {
            terms
                .iter()
                .find(|(t, _)| t == e)
                .map_or_else(Scalar::zero, |(_, c)| c.clone())
        })
        .collect();
    SElement::from_epsilon_coords(ring, &coords)
}

/// Rows `η_x`, columns `ε_t`, both over `E \ {0}` in ideal order.
pub fn eta_change_of_basis(ring: &ProductRing) -> Matrix {
    let ideals = nonzero_ideals(ring);
    Matrix::from_rows(
        ideals
            .iter()
            .map(|x| eta(ring, x).expect("nonzero ideal").epsilon_coords())
            .collect(),
    )
}

/// `(w ⊛ η_x)(y)`: `Σ_{x⊥≤t} μ(0,Rxt) w(ty)` if `Rx ≤ Ry`, else 0.
pub fn corr_eta_closed(w: &Weight, x: &IdealExponent, y: &IdealExponent) -> Result<Scalar> {
    let ring = w.ring();
    ring.check_exponent(y)?;
    let terms = eta_terms(ring, x)?;
    if !ring.ideal_leq(x, y) {
        return Ok(Scalar::zero());
    }
    Ok(terms
        .iter()
        .map(|(t, mu)| mu * w.value(&ring.ideal_product(t, y)))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::{hamming, homogeneous};

    fn ring(s: &str) -> ProductRing {
        s.parse().unwrap()
    }

    fn ex(v: &[u32]) -> IdealExponent {
        IdealExponent(v.to_vec())
    }

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::int(x)).collect()
    }

    #[test]
    fn delta_examples() {
        let r = ring("Z4");
        let f = FnR::new(&r, ints(&[5, -1, 2, 7])).unwrap();
        assert_eq!(convolve(&delta(&r, r.one()), &f).unwrap(), f);
        assert_eq!(delta_set(&r, r.units()).table(), &ints(&[0, 1, 0, 1])[..]);
        let d0 = delta(&r, Element::ZERO);
        assert_eq!(convolve(&d0, &d0).unwrap(), d0);
        let two = r.element(2).unwrap();
        assert_eq!(convolve(&delta(&r, two), &delta(&r, two)).unwrap(), d0);
    }

    #[test]
    fn ring_mismatch() {
        let a = FnR::zero(&ring("Z4"));
        let b = FnR::zero(&ring("F2x2"));
        assert_eq!(convolve(&a, &b), Err(Error::RingMismatch));
        assert_eq!(corr_left(&a, &b), Err(Error::RingMismatch));
        assert_eq!(corr_right(&a, &b), Err(Error::RingMismatch));
        assert!(FnR::new(&ring("Z4"), ints(&[1])).is_err());
    }

    #[test]
    fn correlation_examples() {
        let r = ring("Z4");
        let w = homogeneous(&r).to_fn();
        assert_eq!(corr_left(&delta(&r, r.one()), &w).unwrap(), w);
        let two = r.element(2).unwrap();
        let c = corr_left(&delta(&r, two), &w).unwrap();
        assert_eq!(c.at(r.one()), &Scalar::int(2));
        let zero = corr_right(&w, &delta(&r, Element::ZERO)).unwrap();
        assert_eq!(zero, FnR::zero(&r));
    }

    #[test]
    fn epsilon_examples() {
        let r = ring("Z4");
        let half = Scalar::ratio(1, 2);
        let e0 = epsilon(&r, &ex(&[0])).unwrap();
        assert_eq!(
            e0.table(),
            &[Scalar::zero(), half.clone(), Scalar::zero(), half][..]
        );
        assert_eq!(
            epsilon(&r, &ex(&[1])).unwrap(),
            delta(&r, r.element(2).unwrap())
        );
        assert_eq!(epsilon(&r, &ex(&[2])).unwrap(), delta(&r, Element::ZERO));
        for e in r.ideal_reps() {
            let s: Scalar = epsilon(&r, e).unwrap().table().iter().sum();
            assert_eq!(s, Scalar::one());
        }
    }

    #[test]
    fn eta_examples() {
        let r = ring("Z4");
        assert_eq!(
            eta_terms(&r, &ex(&[0])).unwrap(),
            vec![(ex(&[1]), Scalar::int(-1)), (ex(&[2]), Scalar::int(1))]
        );
        assert_eq!(
            eta_terms(&r, &ex(&[1])).unwrap(),
            vec![(ex(&[0]), Scalar::int(-1)), (ex(&[1]), Scalar::int(1))]
        );
        let r2 = ring("Z2*Z2");
        assert_eq!(
            eta_terms(&r2, &ex(&[0, 0])).unwrap(),
            vec![
                (ex(&[0, 0]), Scalar::int(1)),
                (ex(&[0, 1]), Scalar::int(-1)),
                (ex(&[1, 0]), Scalar::int(-1)),
                (ex(&[1, 1]), Scalar::int(1)),
            ]
        );
        assert_eq!(eta(&r, &ex(&[2])), Err(Error::ZeroIdealEta));

        // canonical η_(0) = −ε_(1) once δ_0 is quotiented out
        let e = eta(&r, &ex(&[0])).unwrap();
        assert_eq!(e.table(), &ints(&[0, 0, -1, 0])[..]);
    }

    #[test]
    fn change_of_basis_examples() {
        let m = eta_change_of_basis(&ring("Z4"));
        assert_eq!(m, Matrix::from_rows(vec![ints(&[0, -1]), ints(&[-1, 1])]));
        assert_eq!(m.determinant(), Some(Scalar::int(-1)));

        // columns ε_(0,0), ε_(0,1), ε_(1,0)
        let m = eta_change_of_basis(&ring("Z2*Z2"));
        assert_eq!(
            m,
            Matrix::from_rows(vec![
                ints(&[1, -1, -1]),
                ints(&[-1, 0, 1]),
                ints(&[-1, 1, 0]),
            ])
        );
        assert_eq!(m.determinant(), Some(Scalar::int(1)));
    }

    #[test]
    fn corr_eta_closed_examples() {
        let r = ring("Z4");
        let (w, h) = (homogeneous(&r), hamming(&r));
        let direct = |w: &Weight, x: &[u32], y: &[u32]| {
            let c = corr_right(&w.to_fn(), &eta(&r, &ex(x)).unwrap()).unwrap();
            c.at(r.rep_element(&ex(y))).clone()
        };
        assert_eq!(
            corr_eta_closed(&w, &ex(&[1]), &ex(&[1])).unwrap(),
            Scalar::int(-2)
        );
        assert_eq!(direct(&w, &[1], &[1]), Scalar::int(-2));
        assert_eq!(
            corr_eta_closed(&h, &ex(&[0]), &ex(&[0])).unwrap(),
            Scalar::int(-1)
        );
        assert_eq!(direct(&h, &[0], &[0]), Scalar::int(-1));
        // R ≰ R2
        assert!(corr_eta_closed(&w, &ex(&[0]), &ex(&[1])).unwrap().is_zero());
        assert!(direct(&w, &[0], &[1]).is_zero());
    }

    #[test]
    fn s_element_validation() {
        let r = ring("Z4");
        assert_eq!(SElement::new(delta(&r, r.one())), Err(Error::NotInvariant));
        assert_eq!(
            SElement::new(delta(&r, Element::ZERO)),
            Err(Error::NotInvariant)
        );
        let s = SElement::canonical(delta(&r, Element::ZERO)).unwrap();
        assert_eq!(*s, FnR::zero(&r));
        let s = SElement::canonical(epsilon(&r, &ex(&[0])).unwrap()).unwrap();
        assert_eq!(s.epsilon_coords(), ints(&[1, 0]));
    }
}
