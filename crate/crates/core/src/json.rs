//! JSON encodings. Rationals are strings `"num/den"`; polynomials and field
//! elements are coefficient arrays, lowest degree first. See `docs/formats.md`.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exact::number_field::{NFElement, NumberField};
use crate::exact::poly::Poly;
use crate::exact::rational::{self, Rational};
use crate::field_tensor::{FieldTensorRing, RingElement};
use crate::ideal::{AdmissibilityVerdict, AdmissibleTag, Classification, ExtremalReport, ReductionCertificate, Step, Witness};
use crate::operator::{AlgElement, ElementaryOperator, FinOp, NearlySimpleDescriptor};
use crate::tensor::{FactorSpace, Tensor, TensorElement};

fn bad(what: &str) -> Error {
    Error::Parse(what.to_string())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| bad(&format!("missing field {key:?}")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(&format!("{what} must be an array")))
}

fn index(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| bad(&format!("{what} must be a nonnegative integer")))
}

pub fn rational_to_json(q: &Rational) -> Value {
    Value::String(rational::to_string(q))
}

/// Accepts `"num/den"`, `"n"` or a JSON integer.
pub fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => rational::parse(s),
        Value::Number(n) if n.is_i64() => Ok(rational::int(n.as_i64().unwrap())),
        _ => Err(bad("rational must be a \"num/den\" string or an integer")),
    }
}

fn rationals_from_json(v: &Value) -> Result<Vec<Rational>> {
    array(v, "coefficient list")?.iter().map(rational_from_json).collect()
}

pub fn poly_to_json(p: &Poly<Rational>) -> Value {
    Value::Array(p.coeffs().iter().map(rational_to_json).collect())
}

pub fn poly_from_json(v: &Value) -> Result<Poly<Rational>> {
    Ok(Poly::from_rationals(rationals_from_json(v)?))
}

pub fn field_to_json(k: &NumberField) -> Value {
    json!({ "minpoly": poly_to_json(k.minpoly()) })
}

/// Any degree-one minimal polynomial yields the canonical `Q`.
pub fn field_from_json(v: &Value) -> Result<NumberField> {
    let p = poly_from_json(field(v, "minpoly")?)?;
    if p.degree() == Some(1) {
        return Ok(NumberField::rationals());
    }
    NumberField::new(p)
}

pub fn nf_to_json(e: &NFElement) -> Value {
    Value::Array(e.coords().iter().map(rational_to_json).collect())
}

pub fn nf_from_json(k: &NumberField, v: &Value) -> Result<NFElement> {
    k.element(rationals_from_json(v)?)
}

pub fn descriptor_to_json(d: &NearlySimpleDescriptor) -> Value {
    json!({
        "scalar_field": field_to_json(d.scalar_field()),
        "entry_field": field_to_json(d.entry_field()),
    })
}

pub fn descriptor_from_json(v: &Value) -> Result<NearlySimpleDescriptor> {
    Ok(NearlySimpleDescriptor::new(
        field_from_json(field(v, "scalar_field")?)?,
        field_from_json(field(v, "entry_field")?)?,
    ))
}

pub fn alg_to_json(x: &AlgElement) -> Value {
    let fin: Vec<Value> = x
        .fin()
        .entries()
        .iter()
        .map(|(&(r, c), v)| json!([r, c, nf_to_json(v)]))
        .collect();
    json!({ "scalar": nf_to_json(x.scalar()), "fin": fin })
}

/// A missing `scalar` means zero and a missing `fin` means no entries.
pub fn alg_from_json(d: &NearlySimpleDescriptor, v: &Value) -> Result<AlgElement> {
    let scalar = match v.get("scalar") {
        Some(s) => nf_from_json(d.scalar_field(), s)?,
        None => d.scalar_field().from_int(0),
    };
    let mut entries = Vec::new();
    if let Some(fin) = v.get("fin") {
        for e in array(fin, "fin")? {
            let e = array(e, "fin entry")?;
            if e.len() != 3 {
                return Err(bad("fin entry must be [row, col, coords]"));
            }
            let (r, c) = (index(&e[0], "row")?, index(&e[1], "col")?);
            if r == 0 || c == 0 {
                return Err(bad("basis indices are 1-based"));
            }
            entries.push(((r, c), nf_from_json(d.entry_field(), &e[2])?));
        }
    }
    d.element(scalar, FinOp::from_entries(entries))
}

fn pairs_to_json<SA: FactorSpace, SB: FactorSpace>(
    t: &Tensor<SA, SB>,
    f: impl Fn(&SA::Elem) -> Value,
    g: impl Fn(&SB::Elem) -> Value,
) -> Value {
    let pairs: Vec<Value> = t.pairs().iter().map(|(a, b)| json!([f(a), g(b)])).collect();
    json!({ "pairs": pairs })
}

pub fn tensor_to_json(t: &TensorElement) -> Value {
    pairs_to_json(t, alg_to_json, alg_to_json)
}

/// The result is rank-normalized.
pub fn tensor_from_json(a: &NearlySimpleDescriptor, b: &NearlySimpleDescriptor, v: &Value) -> Result<TensorElement> {
    let mut pairs = Vec::new();
    for p in array(field(v, "pairs")?, "pairs")? {
        let p = array(p, "pair")?;
        if p.len() != 2 {
            return Err(bad("a pair has exactly two entries"));
        }
        pairs.push((alg_from_json(a, &p[0])?, alg_from_json(b, &p[1])?));
    }
    Ok(Tensor::new(a.clone(), b.clone(), pairs))
}

pub fn operator_to_json(phi: &ElementaryOperator) -> Value {
    let terms: Vec<Value> = phi.terms.iter().map(|(a, b)| json!([alg_to_json(a), alg_to_json(b)])).collect();
    json!({ "terms": terms })
}

pub fn operator_from_json(d: &NearlySimpleDescriptor, v: &Value) -> Result<ElementaryOperator> {
    let mut terms = Vec::new();
    for p in array(field(v, "terms")?, "terms")? {
        let p = array(p, "term")?;
        if p.len() != 2 {
            return Err(bad("a term has exactly two entries"));
        }
        terms.push((alg_from_json(d, &p[0])?, alg_from_json(d, &p[1])?));
    }
    Ok(ElementaryOperator { terms })
}

fn step_to_json(s: &Step) -> Value {
    match s {
        Step::ApplyElementary { src, phi, psi } => json!({
            "op": "apply_elementary", "src": src,
            "phi": operator_to_json(phi), "psi": operator_to_json(psi),
        }),
        Step::CommutateWith { src, x0 } => json!({ "op": "commutate_with", "src": src, "x0": alg_to_json(x0) }),
        Step::ApplySeparator { src, theta } => json!({
            "op": "apply_separator", "src": src, "theta": operator_to_json(theta),
        }),
        Step::LinearCombine { terms } => {
            let terms: Vec<Value> = terms.iter().map(|(i, c)| json!([i, rational_to_json(c)])).collect();
            json!({ "op": "linear_combine", "terms": terms })
        }
    }
}

fn step_from_json(a: &NearlySimpleDescriptor, b: &NearlySimpleDescriptor, v: &Value) -> Result<Step> {
    let op = field(v, "op")?.as_str().ok_or_else(|| bad("op must be a string"))?;
    let src = || index(field(v, "src")?, "src");
    Ok(match op {
        "apply_elementary" => Step::ApplyElementary {
            src: src()?,
            phi: operator_from_json(a, field(v, "phi")?)?,
            psi: operator_from_json(b, field(v, "psi")?)?,
        },
        "commutate_with" => Step::CommutateWith {
            src: src()?,
            x0: alg_from_json(a, field(v, "x0")?)?,
        },
        "apply_separator" => Step::ApplySeparator {
            src: src()?,
            theta: operator_from_json(a, field(v, "theta")?)?,
        },
        "linear_combine" => {
            let mut terms = Vec::new();
            for t in array(field(v, "terms")?, "terms")? {
                let t = array(t, "term")?;
                if t.len() != 2 {
                    return Err(bad("a combination term is [register, coefficient]"));
                }
                terms.push((index(&t[0], "register")?, rational_from_json(&t[1])?));
            }
            Step::LinearCombine { terms }
        }
        other => return Err(bad(&format!("unknown step {other:?}"))),
    })
}

pub fn certificate_to_json(c: &ReductionCertificate) -> Value {
    json!({
        "seed": c.seed,
        "steps": c.steps.iter().map(step_to_json).collect::<Vec<_>>(),
        "claim": tensor_to_json(&c.claim),
    })
}

pub fn certificate_from_json(
    a: &NearlySimpleDescriptor,
    b: &NearlySimpleDescriptor,
    v: &Value,
) -> Result<ReductionCertificate> {
    let seed = field(v, "seed")?.as_u64().ok_or_else(|| bad("seed must be an unsigned integer"))?;
    let steps = array(field(v, "steps")?, "steps")?
        .iter()
        .map(|s| step_from_json(a, b, s))
        .collect::<Result<_>>()?;
    Ok(ReductionCertificate {
        seed,
        steps,
        claim: tensor_from_json(a, b, field(v, "claim")?)?,
    })
}

/// An element of `L[x]/(m_K)`: coefficient list of the representative,
/// each coefficient in coordinates over `L`.
pub fn ring_element_to_json(e: &RingElement) -> Value {
    Value::Array(e.rep().coeffs().iter().map(nf_to_json).collect())
}

/// The report for `K ⊗ L`. `zero_divisors` is empty for a field.
pub fn field_report(ring: &FieldTensorRing) -> Value {
    let dec = ring.decompose();
    let zero_divisors = match ring.zero_divisor_pair() {
        Ok((c1, c2)) => vec![ring_element_to_json(&c1), ring_element_to_json(&c2)],
        Err(_) => Vec::new(),
    };
    json!({
        "left": field_to_json(ring.left()),
        "right": field_to_json(ring.right()),
        "is_field": ring.is_field(),
        "num_components": dec.components.len(),
        "component_degrees": dec.component_degrees(),
        "zero_divisors": zero_divisors,
    })
}

pub fn verdict_to_json(v: &AdmissibilityVerdict) -> Value {
    let products: Vec<Value> = v
        .products
        .iter()
        .map(|p| {
            json!({
                "slot": p.slot.code(),
                "product": p.slot.name(),
                "left_field": field_to_json(p.ring.left()),
                "right_field": field_to_json(p.ring.right()),
                "is_field": p.is_field,
                "component_degrees": p.component_degrees,
            })
        })
        .collect();
    json!({
        "all_admissible": v.all_admissible,
        "failing": v.failing().iter().map(|s| s.code()).collect::<Vec<_>>(),
        "products": products,
    })
}

pub fn extremal_to_json(e: &ExtremalReport) -> Value {
    json!({ "smallest_ok": e.smallest_ok, "sum_maximal_ok": e.sum_maximal_ok })
}

pub fn classification_to_json(c: &Classification) -> Value {
    json!({ "tag": c.tag.name(), "lower_bound_only": c.lower_bound_only })
}

pub fn tag_from_json(v: &Value) -> Result<AdmissibleTag> {
    v.as_str()
        .and_then(AdmissibleTag::from_name)
        .ok_or_else(|| bad("unknown ideal tag"))
}

pub fn witness_to_json(w: &Witness) -> Value {
    let (g1, g2) = match w {
        Witness::Full { g1, g2 } => (tensor_to_json(g1), tensor_to_json(g2)),
        Witness::LeftQuotient { g1, g2 } => (
            pairs_to_json(g1, nf_to_json, alg_to_json),
            pairs_to_json(g2, nf_to_json, alg_to_json),
        ),
        Witness::RightQuotient { g1, g2 } => (
            pairs_to_json(g1, alg_to_json, nf_to_json),
            pairs_to_json(g2, alg_to_json, nf_to_json),
        ),
        Witness::DoubleQuotient { g1, g2 } => (
            pairs_to_json(g1, nf_to_json, nf_to_json),
            pairs_to_json(g2, nf_to_json, nf_to_json),
        ),
    };
    let mut m = Map::new();
    m.insert("slot".into(), json!(w.slot().code()));
    m.insert("product".into(), json!(w.slot().name()));
    m.insert("space".into(), json!(w.space()));
    m.insert("g1".into(), g1);
    m.insert("g2".into(), g2);
    m.insert("product_is_zero".into(), json!(w.verify()));
    Value::Object(m)
}
