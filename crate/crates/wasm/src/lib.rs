//! Browser bindings. Each exported function takes plain strings and returns
//! a JSON document; the `*_json` functions hold the logic and are usable
//! from native code as well.

use chainweights::conv::nonzero_ideals;
use chainweights::criterion::{criterion_check, solve_to_hamming, CriterionReport};
use chainweights::mobius::{mobius_poset, FinitePoset};
use chainweights::weightfile::parse_weight_file;
use chainweights::weights::{hamming, homogeneous, Weight};
use chainweights::{ProductRing, Scalar};
use serde::Serialize;
use wasm_bindgen::prelude::*;

#[derive(Serialize)]
struct IdealRow {
    exponent: String,
    ideal_size: u64,
    orbit_size: u64,
    in_socle: bool,
}

#[derive(Serialize)]
struct RingSummary {
    ring: String,
    size: usize,
    unit_count: usize,
    ideals: Vec<IdealRow>,
}

#[derive(Serialize)]
struct MobiusSummary {
    ring: String,
    ideals: Vec<String>,
    mu_zero: Vec<String>,
    pairs: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct WeightRow {
    exponent: String,
    value: String,
}

#[derive(Serialize)]
struct CriterionSummary {
    weight: Vec<WeightRow>,
    report: CriterionReport,
    /// `ε`-coordinates of some `h` with `w ⊛ h = w_H`, when it exists.
    hamming_preimage: Option<Vec<WeightRow>>,
}

fn parse_ring(spec: &str) -> Result<ProductRing, String> {
    spec.parse().map_err(|e: chainweights::Error| e.to_string())
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("summary serializes")
}

pub fn ring_summary_json(spec: &str) -> Result<String, String> {
    let r = parse_ring(spec)?;
    let ideals = r
        .ideal_reps()
        .iter()
        .map(|e| IdealRow {
            exponent: e.to_string(),
            ideal_size: r.ideal_size(e),
            orbit_size: r.orbit_size(e),
            in_socle: r.in_socle(e),
        })
        .collect();
    Ok(to_json(&RingSummary {
        ring: r.to_string(),
        size: r.size(),
        unit_count: r.unit_count(),
        ideals,
    }))
}

pub fn mobius_json(spec: &str) -> Result<String, String> {
    let r = parse_ring(spec)?;
    let mu = mobius_poset(&FinitePoset::ideal_lattice(&r));
    let n = r.ideal_reps().len();
    let zero = r.ideal_pos(&r.zero_ideal()).expect("zero ideal");
    Ok(to_json(&MobiusSummary {
        ring: r.to_string(),
        ideals: r.ideal_reps().iter().map(|e| e.to_string()).collect(),
        mu_zero: (0..n).map(|a| mu.get(zero, a).to_string()).collect(),
        pairs: (0..n)
            .map(|a| (0..n).map(|b| mu.get(a, b).to_string()).collect())
            .collect(),
    }))
}

/// `weight` is `hamming`, `homogeneous`, or the text of a JSON weight file
/// for the same ring.
pub fn criterion_json(spec: &str, weight: &str) -> Result<String, String> {
    let r = parse_ring(spec)?;
    let w: Weight = match weight.trim() {
        "hamming" => hamming(&r),
        "homogeneous" => homogeneous(&r),
        text => {
            let (file_ring, w) = parse_weight_file(text).map_err(|e| e.to_string())?;
            if file_ring != r {
                return Err(format!("weight is defined on {file_ring}, not {r}"));
            }
            w
        }
    };
    let rows = |pairs: Vec<(String, &Scalar)>| {
        pairs
            .into_iter()
            .map(|(exponent, v)| WeightRow {
                exponent,
                value: v.to_string(),
            })
            .collect::<Vec<_>>()
    };
    let weight_rows = rows(
        r.ideal_reps()
            .iter()
            .map(|e| (e.to_string(), w.value(e)))
            .collect(),
    );
    let preimage = solve_to_hamming(&w).map(|h| {
        let coords = h.epsilon_coords();
        rows(
            nonzero_ideals(&r)
                .iter()
                .map(|e| e.to_string())
                .zip(coords.iter())
                .collect(),
        )
    });
    Ok(to_json(&CriterionSummary {
        weight: weight_rows,
        report: criterion_check(&w),
        hamming_preimage: preimage,
    }))
}

#[wasm_bindgen]
pub fn ring_summary(spec: &str) -> Result<String, JsError> {
    ring_summary_json(spec).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn mobius(spec: &str) -> Result<String, JsError> {
    mobius_json(spec).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn criterion(spec: &str, weight: &str) -> Result<String, JsError> {
    criterion_json(spec, weight).map_err(|e| JsError::new(&e))
}
