//! The sufficient condition for the extension property of an invariant
//! weight on a product of chain rings:
//!
//! ```text
//! Σ_{x⊥ ≤ t} μ(0, Rxt) · w(tx) ≠ 0   for every nonzero ideal x.
//! ```
//!
//! The value for `x` is also the diagonal entry of the triangular matrix
//! `(w ⊛ η_x)(y)`; when every diagonal entry is nonzero the correlations
//! `w ⊛ η_x` span all invariant weights and in particular reach the Hamming
//! weight.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::conv::{corr_eta_closed, eta_change_of_basis, nonzero_ideals, SElement};
use crate::linalg::Matrix;
use crate::mobius::mobius_zero_sign;
use crate::ring::IdealExponent;
use crate::scalar::Scalar;
use crate::weights::Weight;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionEntry {
    pub x: Vec<u32>,
    pub value: Scalar,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub ring: String,
    pub entries: Vec<CriterionEntry>,
    pub pass: bool,
}

/// The criterion sum for every nonzero ideal `x`, evaluated directly.
pub fn criterion_values(w: &Weight) -> Vec<(IdealExponent, Scalar)> {
    let ring = w.ring();
    nonzero_ideals(ring)
        .into_iter()
        .map(|x| {
            let value = ring
                .ideal_reps()
                .iter()
                // x⊥ ≤ t  <=>  t_i ≤ d_i − x_i
                .filter(|t| {
                    t.exps()
                        .iter()
                        .zip(x.exps())
                        .zip(ring.components())
                        .all(|((&ti, &xi), c)| ti + xi <= c.d())
                })
                .filter_map(|t| {
                    let xt = ring.ideal_product(&x, t);
                    match mobius_zero_sign(ring, &xt) {
                        0 => None,
                        mu => Some(Scalar::int(mu) * w.value(&ring.ideal_product(t, &x))),
                    }
                })
                .sum();
            (x, value)
        })
        .collect()
}

/// Evaluates the criterion and reports every entry, cross-checked against
/// the diagonal of the `η` action.
pub fn criterion_check(w: &Weight) -> CriterionReport {
    let entries: Vec<CriterionEntry> = criterion_values(w)
        .into_iter()
        .map(|(x, value)| {
            let diagonal = corr_eta_closed(w, &x, &x).expect("nonzero ideal");
            assert_eq!(
                value, diagonal,
                "criterion sum disagrees with η diagonal at {x}"
            );
            CriterionEntry {
                pass: !value.is_zero(),
                x: x.0,
                value,
            }
        })
        .collect();
    CriterionReport {
        ring: w.ring().to_string(),
        pass: entries.iter().all(|e| e.pass),
        entries,
    }
}

/// `M[x][y] = (w ⊛ η_x)(y)` over nonzero ideals; upper triangular with
/// respect to ideal containment.
pub fn eta_action_matrix(w: &Weight) -> Matrix {
    let ideals = nonzero_ideals(w.ring());
    Matrix::from_rows(
        ideals
            .iter()
            .map(|x| {
                ideals
                    .iter()
                    .map(|y| corr_eta_closed(w, x, y).expect("nonzero ideal"))
                    .collect()
            })
            .collect(),
    )
}

/// Finds `h ∈ S` with `w ⊛ h = w_H`, if one exists.
pub fn solve_to_hamming(w: &Weight) -> Option<SElement> {
    let ring = w.ring();
    let action = eta_action_matrix(w);
    let ones = vec![Scalar::one(); action.rows()];
    // h = Σ_x c_x η_x  =>  (w ⊛ h)(y) = Σ_x c_x M[x][y]
    let coeffs = action.transpose().solve(&ones)?;
    let eps = eta_change_of_basis(ring).transpose().mul_vec(&coeffs);
    Some(SElement::from_epsilon_coords(ring, &eps).expect("one coordinate per nonzero ideal"))
}
