//! Möbius functions of finite posets, Möbius inversion, and the closed forms
//! on the principal-ideal lattice of a product of chain rings.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::{IdealExponent, ProductRing};
use crate::scalar::Scalar;

/// A finite poset on `0..len`, stored as a dense relation matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    len: usize,
    // leq[x * len + y] <=> x ≤ y
    leq: Vec<bool>,
    // a linear extension: x < y implies x appears before y
    linear: Vec<usize>,
}

impl FinitePoset {
    /// Validates reflexivity, antisymmetry and transitivity.
    pub fn new(len: usize, leq: Vec<bool>) -> Result<Self> {
        if leq.len() != len * len {
            return Err(Error::NotPartialOrder(format!(
                "relation has {} entries, expected {}",
                leq.len(),
                len * len
            )));
        }
        let at = |x: usize, y: usize| leq[x * len + y];
        for x in 0..len {
            if !at(x, x) {
                return Err(Error::NotPartialOrder(format!("{x} ≰ {x}")));
            }
            for y in 0..len {
                if x != y && at(x, y) && at(y, x) {
                    return Err(Error::NotPartialOrder(format!("{x} ≤ {y} ≤ {x}")));
                }
                if !at(x, y) {
                    continue;
                }
                for z in 0..len {
                    if at(y, z) && !at(x, z) {
                        return Err(Error::NotPartialOrder(format!(
                            "{x} ≤ {y} ≤ {z} but {x} ≰ {z}"
                        )));
                    }
                }
            }
        }
        // x < y implies strictly fewer elements below x than below y
        let down: Vec<usize> = (0..len)
            .map(|y| (0..len).filter(|&x| at(x, y)).count())
            .collect();
        let mut linear: Vec<usize> = (0..len).collect();
        linear.sort_by_key(|&x| (down[x], x));
        Ok(Self { len, leq, linear })
    }

    pub fn from_fn(len: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let rel = (0..len * len).map(|i| leq(i / len, i % len)).collect();
        Self::new(len, rel)
    }

    /// The lattice of principal ideals ordered by inclusion, indexed by
    /// position in [`ProductRing::ideal_reps`].
    pub fn ideal_lattice(ring: &ProductRing) -> Self {
        let reps = ring.ideal_reps();
        Self::from_fn(reps.len(), |a, b| ring.ideal_leq(&reps[a], &reps[b]))
            .expect("ideal containment is a partial order")
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.len + y]
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn least(&self) -> Option<usize> {
        (0..self.len).find(|&x| (0..self.len).all(|y| self.leq(x, y)))
    }

    pub fn greatest(&self) -> Option<usize> {
        (0..self.len).find(|&x| (0..self.len).all(|y| self.leq(y, x)))
    }

    pub fn linear_extension(&self) -> &[usize] {
        &self.linear
    }
}

/// `μ(x, y)` for every pair, zero where `x ≰ y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MobiusTable {
    len: usize,
    values: Vec<Scalar>,
}

/// Which defining recursion builds the table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Recursion {
    /// `μ(x,y) = −Σ_{x<z≤y} μ(z,y)`
    Upper,
    /// `μ(x,y) = −Σ_{x≤z<y} μ(x,z)`
    Lower,
}

impl MobiusTable {
    pub fn get(&self, x: usize, y: usize) -> &Scalar {
        &self.values[x * self.len + y]
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Checks both vanishing-sum characterisations: for every `x < y`,
    /// `Σ_{x≤z≤y} μ(z,y) = 0` and `Σ_{x≤z≤y} μ(x,z) = 0`, with `μ(x,x) = 1`
    /// and `μ(x,y) = 0` off the order.
    pub fn satisfies_sum_conditions(&self, poset: &FinitePoset) -> bool {
        let n = self.len;
        for x in 0..n {
            if !self.get(x, x).is_one() {
                return false;
            }
            for y in 0..n {
                if !poset.leq(x, y) {
                    if !self.get(x, y).is_zero() {
                        return false;
                    }
                    continue;
                }
                if x == y {
                    continue;
                }
                let interval = (0..n).filter(|&z| poset.leq(x, z) && poset.leq(z, y));
                let right: Scalar = interval.clone().map(|z| self.get(z, y)).sum();
                let left: Scalar = interval.map(|z| self.get(x, z)).sum();
                if !right.is_zero() || !left.is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

pub fn mobius_with(poset: &FinitePoset, recursion: Recursion) -> MobiusTable {
    let n = poset.len();
    let mut values = vec![Scalar::zero(); n * n];
    let order = poset.linear_extension();
    match recursion {
        Recursion::Lower => {
            for x in 0..n {
                for &y in order {
                    if !poset.leq(x, y) {
                        continue;
                    }
                    values[x * n + y] = if x == y {
                        Scalar::one()
                    } else {
                        -(0..n)
                            .filter(|&z| poset.leq(x, z) && poset.lt(z, y))
                            .map(|z| &values[x * n + z])
                            .sum::<Scalar>()
                    };
                }
            }
        }
        Recursion::Upper => {
            for y in 0..n {
                for &x in order.iter().rev() {
                    if !poset.leq(x, y) {
                        continue;
                    }
                    values[x * n + y] = if x == y {
                        Scalar::one()
                    } else {
                        -(0..n)
                            .filter(|&z| poset.lt(x, z) && poset.leq(z, y))
                            .map(|z| &values[z * n + y])
                            .sum::<Scalar>()
                    };
                }
            }
        }
    }
    MobiusTable { len: n, values }
}

/// The Möbius function of `poset`.
pub fn mobius_poset(poset: &FinitePoset) -> MobiusTable {
    mobius_with(poset, Recursion::Lower)
}

/// Given `g(x) = Σ_{y≤x} f(y)`, recovers `f(x) = Σ_{y≤x} g(y) μ(y,x)`.
pub fn mobius_invert(poset: &FinitePoset, g: &[Scalar]) -> Result<Vec<Scalar>> {
    poset.least().ok_or(Error::NoLeastElement)?;
    check_len(poset, g)?;
    let mu = mobius_poset(poset);
    let n = poset.len();
    Ok((0..n)
        .map(|x| {
            (0..n)
                .filter(|&y| poset.leq(y, x))
                .map(|y| &g[y] * mu.get(y, x))
                .sum()
        })
        .collect())
}

/// Dual form: given `g(x) = Σ_{x≤y} f(y)`, recovers
/// `f(x) = Σ_{x≤y} g(y) μ(x,y)`.
pub fn mobius_invert_upper(poset: &FinitePoset, g: &[Scalar]) -> Result<Vec<Scalar>> {
    poset.greatest().ok_or(Error::NoGreatestElement)?;
    check_len(poset, g)?;
    let mu = mobius_poset(poset);
    let n = poset.len();
    Ok((0..n)
        .map(|x| {
            (0..n)
                .filter(|&y| poset.leq(x, y))
                .map(|y| &g[y] * mu.get(x, y))
                .sum()
        })
        .collect())
}

/// `Σ_{y≤x} f(y)` for every `x`.
pub fn sum_below(poset: &FinitePoset, f: &[Scalar]) -> Vec<Scalar> {
    let n = poset.len();
    (0..n)
        .map(|x| (0..n).filter(|&y| poset.leq(y, x)).map(|y| &f[y]).sum())
        .collect()
}

fn check_len(poset: &FinitePoset, g: &[Scalar]) -> Result<()> {
    if g.len() == poset.len() {
        Ok(())
    } else {
        Err(Error::NotPartialOrder(format!(
            "function has {} values for a poset of {} elements",
            g.len(),
            poset.len()
        )))
    }
}

/// `μ(0, Re)` as a signed integer: `(−1)^{Σ(d_i − e_i)}` when `Re` lies in
/// the socle, 0 otherwise.
pub fn mobius_zero_sign(ring: &ProductRing, e: &IdealExponent) -> i64 {
    if !ring.in_socle(e) {
        return 0;
    }
    let depth: u32 = ring
        .components()
        .iter()
        .zip(e.exps())
        .map(|(c, &x)| c.d() - x)
        .sum();
    if depth.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `μ(0, Re)` from the closed form.
pub fn mobius_zero_closed(ring: &ProductRing, e: &IdealExponent) -> Scalar {
    Scalar::int(mobius_zero_sign(ring, e))
}

/// `μ(Re, Rf)` as the product of the per-chain values.
pub fn mobius_pair(ring: &ProductRing, e: &IdealExponent, f: &IdealExponent) -> Scalar {
    debug_assert!(ring.is_valid_exponent(e) && ring.is_valid_exponent(f));
    let v: i64 = e
        .exps()
        .iter()
        .zip(f.exps())
        .map(|(&x, &y)| match x.checked_sub(y) {
            Some(0) => 1,
            Some(1) => -1,
            _ => 0,
        })
        .product();
    Scalar::int(v)
}
