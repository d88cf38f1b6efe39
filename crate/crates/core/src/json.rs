//! JSON forms of rings, elements, matrices and results.
//!
//! ```text
//! ring     {"kind":"Z"} | {"kind":"Zmod","n":12} | {"kind":"Zloc","m":21} | {"kind":"Zquad","q":5}
//!          | {"kind":"Quot","base":<ring>,"modulus":<element of base>}
//! element  "15" (ℤ, ℤ/n, quotients of ℤ) | ["num","exp"] (ℤ[1/m]) | ["x","y"] (ℤ[θ] and its quotients)
//! matrix   {"ring":<ring>,"rows":[[e,e],[e,e]]}, and the 3×3 analogue
//! ```
//!
//! Integers are written as strings; on input plain JSON numbers are accepted too.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::classification::{Check, Counterexample, RingClassReport};
use crate::enumeration::{NuSample, ResidueClass};
use crate::error::{Error, Result};
use crate::extension::{Certificate, ExcludedSplit, ExtensionOutcome, FullProof, FullnessWitness, SplitFailure};
use crate::matrix::{Mat2, Mat3};
use crate::ring::{Elem, Family, Ring, RingDescriptor};

fn parse_err(what: impl Into<String>) -> Error {
    Error::Parse(what.into())
}

fn int_to_json(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

fn int_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::String(s) => s.trim().parse().map_err(|_| parse_err(format!("not an integer: {s:?}"))),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string().parse().expect("integer literal")),
        _ => Err(parse_err(format!("not an integer: {v}"))),
    }
}

fn field<'a>(obj: &'a Value, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| parse_err(format!("missing field {key:?} in {obj}")))
}

pub fn descriptor_to_json(d: &RingDescriptor) -> Value {
    match d {
        RingDescriptor::Integers => json!({"kind": "Z"}),
        RingDescriptor::IntegersModN { n } => json!({"kind": "Zmod", "n": int_to_json(n)}),
        RingDescriptor::LocalizedIntegers { m } => json!({"kind": "Zloc", "m": int_to_json(m)}),
        RingDescriptor::QuadraticOrder { q } => json!({"kind": "Zquad", "q": int_to_json(q)}),
        RingDescriptor::QuotientRing { base, modulus } => {
            let base_ring = Ring::new(base).expect("descriptor of a constructed ring");
            json!({"kind": "Quot", "base": descriptor_to_json(base), "modulus": elem_to_json(&base_ring, modulus)})
        }
    }
}

pub fn descriptor_from_json(v: &Value) -> Result<RingDescriptor> {
    let kind = field(v, "kind")?.as_str().ok_or_else(|| parse_err("ring kind must be a string"))?;
    Ok(match kind {
        "Z" => RingDescriptor::Integers,
        "Zmod" => RingDescriptor::IntegersModN { n: int_from_json(field(v, "n")?)? },
        "Zloc" => RingDescriptor::LocalizedIntegers { m: int_from_json(field(v, "m")?)? },
        "Zquad" => RingDescriptor::QuadraticOrder { q: int_from_json(field(v, "q")?)? },
        "Quot" => {
            let base = descriptor_from_json(field(v, "base")?)?;
            let base_ring = Ring::new(&base)?;
            let modulus = elem_from_json(&base_ring, field(v, "modulus")?)?;
            RingDescriptor::QuotientRing { base: Box::new(base), modulus }
        }
        other => return Err(parse_err(format!("unknown ring kind {other:?}"))),
    })
}

pub fn ring_from_json(v: &Value) -> Result<Ring> {
    Ring::new(&descriptor_from_json(v)?)
}

pub fn elem_to_json(ring: &Ring, e: &Elem) -> Value {
    match e {
        Elem::Int(x) if ring.family() == Family::Localized => json!([int_to_json(x), "0"]),
        Elem::Int(x) => int_to_json(x),
        Elem::Frac { num, exp } => json!([int_to_json(num), exp.to_string()]),
        Elem::Quad { x, y } => json!([int_to_json(x), int_to_json(y)]),
    }
}

/// Parses and canonicalises an element of `ring`.
pub fn elem_from_json(ring: &Ring, v: &Value) -> Result<Elem> {
    let raw = match v {
        Value::Array(pair) if pair.len() == 2 => {
            let (p, q) = (int_from_json(&pair[0])?, int_from_json(&pair[1])?);
            if ring.family() == Family::Localized {
                let exp = u32::try_from(q).map_err(|_| parse_err("exponent must be a small nonnegative integer"))?;
                Elem::Frac { num: p, exp }
            } else {
                Elem::Quad { x: p, y: q }
            }
        }
        _ => Elem::Int(int_from_json(v)?),
    };
    ring.coerce(&raw)
}

fn elems_to_json<'a>(ring: &Ring, xs: impl IntoIterator<Item = &'a Elem>) -> Value {
    Value::Array(xs.into_iter().map(|x| elem_to_json(ring, x)).collect())
}

pub fn mat2_to_json(m: &Mat2) -> Value {
    let r = m.ring();
    let rows: Vec<Value> = m.rows().iter().map(|row| elems_to_json(r, row)).collect();
    json!({"ring": descriptor_to_json(r.descriptor()), "rows": rows})
}

pub fn mat3_to_json(m: &Mat3) -> Value {
    let r = m.ring();
    let rows: Vec<Value> = m.rows().iter().map(|row| elems_to_json(r, row)).collect();
    json!({"ring": descriptor_to_json(r.descriptor()), "rows": rows})
}

fn rows_from_json<const N: usize>(ring: &Ring, v: &Value) -> Result<[[Elem; N]; N]> {
    let rows = field(v, "rows")?.as_array().ok_or_else(|| parse_err("rows must be an array"))?;
    if rows.len() != N {
        return Err(parse_err(format!("expected {N} rows, got {}", rows.len())));
    }
    let mut out: Vec<[Elem; N]> = Vec::with_capacity(N);
    for row in rows {
        let row =
            row.as_array().filter(|r| r.len() == N).ok_or_else(|| parse_err(format!("each row needs {N} entries")))?;
        let parsed: Vec<Elem> = row.iter().map(|x| elem_from_json(ring, x)).collect::<Result<_>>()?;
        out.push(parsed.try_into().expect("length checked"));
    }
    Ok(out.try_into().expect("length checked"))
}

/// `{"ring": ..., "rows": ...}`; `ring` may be omitted when `default_ring` is given.
pub fn mat2_from_json(v: &Value, default_ring: Option<&Ring>) -> Result<Mat2> {
    let ring = match (v.get("ring"), default_ring) {
        (Some(r), _) => ring_from_json(r)?,
        (None, Some(r)) => r.clone(),
        (None, None) => return Err(parse_err("matrix has no ring")),
    };
    let [[a, b], [c, d]] = rows_from_json::<2>(&ring, v)?;
    Mat2::new(&ring, a, b, c, d)
}

pub fn mat3_from_json(v: &Value, default_ring: Option<&Ring>) -> Result<Mat3> {
    let ring = match (v.get("ring"), default_ring) {
        (Some(r), _) => ring_from_json(r)?,
        (None, Some(r)) => r.clone(),
        (None, None) => return Err(parse_err("matrix has no ring")),
    };
    Mat3::new(&ring, rows_from_json::<3>(&ring, v)?)
}

pub fn certificate_to_json(ring: &Ring, c: &Certificate) -> Value {
    json!({
        "e": elem_to_json(ring, &c.e),
        "f": elem_to_json(ring, &c.f),
        "s": elem_to_json(ring, &c.s),
        "t": elem_to_json(ring, &c.t),
    })
}

pub fn certificate_from_json(ring: &Ring, v: &Value) -> Result<Certificate> {
    let get = |k| elem_from_json(ring, field(v, k)?);
    Ok(Certificate { e: get("e")?, f: get("f")?, s: get("s")?, t: get("t")? })
}

fn split_failure_to_json(ring: &Ring, f: &SplitFailure) -> Value {
    match f {
        SplitFailure::NotDivisible { dividend, divisor } => json!({
            "kind": "not_divisible",
            "dividend": elem_to_json(ring, dividend),
            "divisor": elem_to_json(ring, divisor),
        }),
        SplitFailure::Mismatch { position, expected, found } => json!({
            "kind": "mismatch",
            "position": [position.0, position.1],
            "expected": elem_to_json(ring, expected),
            "found": elem_to_json(ring, found),
        }),
    }
}

fn full_proof_to_json(ring: &Ring, p: &FullProof) -> Value {
    let excluded: Vec<Value> = p
        .excluded
        .iter()
        .map(|ExcludedSplit { divisor, failure }| {
            json!({"divisor": elem_to_json(ring, divisor), "failure": split_failure_to_json(ring, failure)})
        })
        .collect();
    json!({
        "kind": "full_proof",
        "pivot": [p.pivot.0, p.pivot.1],
        "pivot_value": elem_to_json(ring, &p.pivot_value),
        "divisors": elems_to_json(ring, &p.divisors),
        "excluded": excluded,
    })
}

pub fn witness_to_json(ring: &Ring, w: &FullnessWitness) -> Value {
    match w {
        FullnessWitness::Factorization { column, row } => json!({
            "kind": "factorization",
            "column": elems_to_json(ring, column),
            "row": elems_to_json(ring, row),
        }),
        FullnessWitness::FullProof(p) => full_proof_to_json(ring, p),
        FullnessWitness::Exhaustive { ring: over, pairs } => json!({
            "kind": "exhaustive",
            "ring": descriptor_to_json(over),
            "pairs": pairs,
        }),
    }
}

pub fn outcome_to_json(ring: &Ring, o: &ExtensionOutcome) -> Value {
    let mut obj = Map::new();
    obj.insert("status".into(), o.status().into());
    match o {
        ExtensionOutcome::Simple { extension, certificate } => {
            obj.insert("extension".into(), mat3_to_json(extension));
            obj.insert("certificate".into(), certificate_to_json(ring, certificate));
        }
        ExtensionOutcome::ExtendableOnly { extension } => {
            obj.insert("extension".into(), mat3_to_json(extension));
        }
        ExtensionOutcome::NotExtendable { witness } => {
            obj.insert("witness".into(), witness_to_json(ring, witness));
        }
        ExtensionOutcome::Undecided { bound } => {
            obj.insert("bound".into(), (*bound).into());
        }
    }
    Value::Object(obj)
}

pub fn nu_sample_to_json(s: &NuSample) -> Value {
    let r = s.matrix.ring();
    let gamma: Vec<Value> = s.gamma.iter().map(|c| elems_to_json(r, [&c.e, &c.f, &c.s, &c.t])).collect();
    json!({
        "matrix": mat2_to_json(&s.matrix),
        "bound": s.bound,
        "gamma": gamma,
        "values": elems_to_json(r, &s.values),
    })
}

pub fn residue_class_to_json(c: &ResidueClass) -> Value {
    json!({
        "base": elem_to_json(c.ring(), &c.base),
        "modulus": elem_to_json(c.ring(), &c.modulus),
        "display": c.show(),
    })
}

fn counterexample_to_json(ring: &Ring, c: &Counterexample) -> Value {
    json!({"predicate": c.predicate, "witness": elems_to_json(ring, &c.witness)})
}

pub fn check_to_json(ring: &Ring, c: &Check) -> Value {
    json!({
        "holds": c.holds,
        "counterexample": c.counterexample.as_ref().map(|x| counterexample_to_json(ring, x)),
    })
}

pub fn report_to_json(r: &RingClassReport) -> Value {
    let ring = Ring::new(&r.ring).expect("descriptor of a classified ring");
    json!({
        "ring": descriptor_to_json(&r.ring),
        "size": r.size,
        "sr1": r.sr1,
        "fsr15": r.fsr15,
        "asr1": r.asr1,
        "pi2": r.pi2,
        "e2": r.e2,
        "se2": r.se2,
        "counterexample": r.counterexample.as_ref().map(|c| counterexample_to_json(&ring, c)),
    })
}
