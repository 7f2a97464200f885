//! JSON weight files:
//!
//! ```json
//! { "ring": "Z2*Z4", "values": { "0,0": "1", "1,0": "3/2", "0,1": {"re": "1", "im": "-1"} } }
//! ```
//!
//! Keys are comma-joined exponent vectors; values are rational strings or
//! `{re, im}` objects. The zero-ideal key may be omitted, and if present its
//! value must be zero.

use std::collections::BTreeMap;

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::ring::{IdealExponent, ProductRing};
use crate::scalar::{format_rational, parse_rational, Scalar};
use crate::weights::Weight;

fn parse_value(key: &str, v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => Ok(s.parse()?),
        Value::Number(n) if n.is_i64() => Ok(Scalar::int(n.as_i64().unwrap())),
        Value::Object(obj) => {
            let part = |name: &str| -> Result<Scalar> {
                match obj.get(name) {
                    None => Ok(Scalar::default()),
                    Some(Value::String(s)) => Ok(Scalar::from_real(parse_rational(s)?)),
                    Some(other) => Err(Error::WeightFile(format!(
                        "`{key}`: `{name}` must be a rational string, got {other}"
                    ))),
                }
            };
            if let Some(extra) = obj.keys().find(|k| *k != "re" && *k != "im") {
                return Err(Error::WeightFile(format!(
                    "`{key}`: unexpected field `{extra}`"
                )));
            }
            Ok(Scalar::complex(part("re")?, part("im")?))
        }
        other => Err(Error::WeightFile(format!(
            "`{key}`: expected a rational string or {{re, im}}, got {other}"
        ))),
    }
}

/// Parses a weight file, returning the ring it names and the weight.
pub fn parse_weight_file(text: &str) -> Result<(ProductRing, Weight)> {
    let doc: Value = serde_json::from_str(text).map_err(|e| Error::WeightFile(e.to_string()))?;
    let obj = doc
        .as_object()
        .ok_or_else(|| Error::WeightFile("top level must be an object".into()))?;
    let ring: ProductRing = obj
        .get("ring")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::WeightFile("missing string field `ring`".into()))?
        .parse()?;
    let values = obj
        .get("values")
        .and_then(Value::as_object)
        .ok_or_else(|| Error::WeightFile("missing object field `values`".into()))?;
    let mut table = BTreeMap::new();
    for (key, v) in values {
        let e: IdealExponent = key.parse()?;
        table.insert(e, parse_value(key, v)?);
    }
    let w = Weight::from_table(&ring, &table)?;
    Ok((ring, w))
}

/// Renders a weight in the file format (real values as strings).
pub fn weight_file_json(w: &Weight) -> String {
    let mut values = Map::new();
    for (e, v) in w.table() {
        let json = if v.is_real() {
            Value::String(format_rational(v.re()))
        } else {
            serde_json::to_value(&v).expect("scalar serializes")
        };
        values.insert(e.to_string(), json);
    }
    let mut doc = Map::new();
    doc.insert("ring".into(), Value::String(w.ring().to_string()));
    doc.insert("values".into(), Value::Object(values));
    serde_json::to_string_pretty(&Value::Object(doc)).expect("json")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::homogeneous;

    #[test]
    fn parses_mixed_values() {
        let (r, w) = parse_weight_file(
            r#"{"ring": "Z2*Z2", "values": {"0,0": "1/2", "0,1": {"re": "1", "im": "-2"}, "1,0": 3, "1,1": "0"}}"#,
        )
        .unwrap();
        assert_eq!(r.to_string(), "Z2*Z2");
        let e = |v: &[u32]| IdealExponent(v.to_vec());
        assert_eq!(w.value(&e(&[0, 0])), &Scalar::ratio(1, 2));
        assert_eq!(
            w.value(&e(&[0, 1])),
            &Scalar::complex(Scalar::int(1), Scalar::int(-2))
        );
        assert_eq!(w.value(&e(&[1, 0])), &Scalar::int(3));
    }

    #[test]
    fn rejects_bad_files() {
        let cases = [
            r#"[]"#,
            r#"{"values": {}}"#,
            r#"{"ring": "Z4"}"#,
            r#"{"ring": "Z6", "values": {}}"#,
            r#"{"ring": "Z4", "values": {"0": "1"}}"#,
            r#"{"ring": "Z4", "values": {"0": "1", "1": "1", "2": "1"}}"#,
            r#"{"ring": "Z4", "values": {"0": "1", "1": "x"}}"#,
            r#"{"ring": "Z4", "values": {"0": "1", "1": true}}"#,
            r#"{"ring": "Z4", "values": {"0": "1", "1": "1", "a": "0"}}"#,
            r#"{"ring": "Z4", "values": {"0": "1", "1": {"re": "1", "j": "1"}}}"#,
        ];
        for c in cases {
            assert!(parse_weight_file(c).is_err(), "{c}");
        }
    }

    #[test]
    fn round_trip() {
        let w = homogeneous(&"Z2*Z4".parse().unwrap());
        let (_, back) = parse_weight_file(&weight_file_json(&w)).unwrap();
        assert_eq!(back, w);
    }
}
