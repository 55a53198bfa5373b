//! Text and JSON forms of a [`Measurement`].
//!
//! Text form, one record per line:
//!
//! ```text
//! mu ①+2
//! piece 1 3 0
//! piece 4 ①+2 5
//! target [1..3] [9..①+7]
//! ```
//!
//! `piece` lines hold `domain-lo domain-hi offset` in index order. JSON form:
//!
//! ```json
//! {"mu": "①+2", "pieces": [["1","3","0"], ["4","①+2","5"]], "target": [["1","3"], ["9","①+7"]]}
//! ```
//!
//! Numerals use the numeral syntax (either ① or `G1`). Reading validates the
//! measurement and checks the stated target against the pieces.

use serde_json::{json, Value};

use super::{AffinePiece, MeasureError, Measurement};
use crate::gnum::{format_numeral, parse_numeral, Glyph, GrossNumber};
use crate::sets::GrossInterval;

fn invalid(why: impl Into<String>) -> MeasureError {
    MeasureError::InvalidMeasurement(why.into())
}

fn numeral(text: &str) -> Result<GrossNumber, MeasureError> {
    parse_numeral(text).map_err(|e| invalid(format!("bad numeral {text:?}: {e}")))
}

pub fn to_text(m: &Measurement, glyph: Glyph) -> String {
    let f = |x: &GrossNumber| format_numeral(x, glyph);
    let mut out = format!("mu {}\n", f(m.mu()));
    for p in m.pieces() {
        out.push_str(&format!(
            "piece {} {} {}\n",
            f(p.domain.lo()),
            f(p.domain.hi()),
            f(&p.offset)
        ));
    }
    out.push_str("target");
    for part in m.target().parts() {
        out.push_str(&format!(" [{}..{}]", f(part.lo()), f(part.hi())));
    }
    out.push('\n');
    out
}

pub fn from_text(text: &str) -> Result<Measurement, MeasureError> {
    let mut mu = None;
    let mut pieces = Vec::new();
    let mut target = None;
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
        let mut fields = line.split_whitespace();
        match fields.next() {
            Some("mu") => {
                let value = fields
                    .next()
                    .ok_or_else(|| invalid("mu line without value"))?;
                mu = Some(numeral(value)?);
            }
            Some("piece") => {
                let values: Vec<&str> = fields.by_ref().collect();
                let [lo, hi, offset] = values.as_slice() else {
                    return Err(invalid(format!("piece line needs 3 fields: {line:?}")));
                };
                let domain = GrossInterval::new(numeral(lo)?, numeral(hi)?)?;
                pieces.push(AffinePiece::new(domain, numeral(offset)?)?);
                continue;
            }
            Some("target") => {
                let parts = fields
                    .by_ref()
                    .map(|field| {
                        let inner = field
                            .strip_prefix('[')
                            .and_then(|f| f.strip_suffix(']'))
                            .ok_or_else(|| invalid(format!("bad target interval {field:?}")))?;
                        let (lo, hi) = inner
                            .split_once("..")
                            .ok_or_else(|| invalid(format!("bad target interval {field:?}")))?;
                        Ok(GrossInterval::new(numeral(lo)?, numeral(hi)?)?)
                    })
                    .collect::<Result<Vec<_>, MeasureError>>()?;
                target = Some(parts);
            }
            _ => return Err(invalid(format!("unrecognised line {line:?}"))),
        }
        if fields.next().is_some() {
            return Err(invalid(format!("trailing fields in {line:?}")));
        }
    }
    let mu = mu.ok_or_else(|| invalid("missing mu line"))?;
    finish(mu, pieces, target)
}

fn finish(
    mu: GrossNumber,
    pieces: Vec<AffinePiece>,
    target: Option<Vec<GrossInterval>>,
) -> Result<Measurement, MeasureError> {
    let m = Measurement::new(mu, pieces)?;
    if let Some(parts) = target {
        if m.target().parts() != parts.as_slice() {
            return Err(invalid(
                "stated target differs from the image of the pieces",
            ));
        }
    }
    Ok(m)
}

pub fn to_json(m: &Measurement, glyph: Glyph) -> Value {
    let f = |x: &GrossNumber| format_numeral(x, glyph);
    json!({
        "mu": f(m.mu()),
        "pieces": m
            .pieces()
            .iter()
            .map(|p| json!([f(p.domain.lo()), f(p.domain.hi()), f(&p.offset)]))
            .collect::<Vec<_>>(),
        "target": m
            .target()
            .parts()
            .iter()
            .map(|part| json!([f(part.lo()), f(part.hi())]))
            .collect::<Vec<_>>(),
    })
}

pub fn from_json(value: &Value) -> Result<Measurement, MeasureError> {
    let strings = |v: &Value, n: usize| -> Result<Vec<GrossNumber>, MeasureError> {
        let items = v
            .as_array()
            .filter(|a| a.len() == n)
            .ok_or_else(|| invalid(format!("expected an array of {n} numerals")))?;
        items
            .iter()
            .map(|item| {
                item.as_str()
                    .ok_or_else(|| invalid("numerals must be strings"))
                    .and_then(numeral)
            })
            .collect()
    };
    let mu = value
        .get("mu")
        .and_then(Value::as_str)
        .ok_or_else(|| invalid("missing \"mu\""))
        .and_then(numeral)?;
    let pieces = value
        .get("pieces")
        .and_then(Value::as_array)
        .ok_or_else(|| invalid("missing \"pieces\""))?
        .iter()
        .map(|p| {
            let mut v = strings(p, 3)?.into_iter();
            let (lo, hi, offset) = (v.next().unwrap(), v.next().unwrap(), v.next().unwrap());
            AffinePiece::new(GrossInterval::new(lo, hi)?, offset)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let target = match value.get("target") {
        None => None,
        Some(t) => Some(
            t.as_array()
                .ok_or_else(|| invalid("\"target\" must be an array"))?
                .iter()
                .map(|part| {
                    let mut v = strings(part, 2)?.into_iter();
                    Ok(GrossInterval::new(v.next().unwrap(), v.next().unwrap())?)
                })
                .collect::<Result<Vec<_>, MeasureError>>()?,
        ),
    };
    finish(mu, pieces, target)
}
