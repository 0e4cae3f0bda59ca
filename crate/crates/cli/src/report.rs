//! One function per command: parsed JSON inputs in, `(summary, result)` out.
//! `selftest` calls the same functions on corpus items.

use serde_json::{json, Map, Value};
use tensorideal_core::ideal::oracle::TruncatedModel;
use tensorideal_core::ideal::{
    check_admissibility, check_extremal_ideals, check_universal, classify_ideal_of, construct_witness,
    rank_reduction, replay_certificate,
};
use tensorideal_core::json::{
    certificate_from_json, certificate_to_json, classification_to_json, descriptor_from_json, extremal_to_json,
    field_from_json, field_report, tensor_from_json, tensor_to_json, verdict_to_json, witness_to_json,
};
use tensorideal_core::{EngineConfig, FieldTensorRing, NearlySimpleDescriptor, TensorElement};

use crate::error::CliError;

pub type Outcome = Result<(String, Value), CliError>;

#[derive(Debug, Clone)]
pub struct Params {
    pub seed: u64,
    pub config: EngineConfig,
}

fn pair(a: &Value, b: &Value) -> Result<(NearlySimpleDescriptor, NearlySimpleDescriptor), CliError> {
    Ok((descriptor_from_json(a)?, descriptor_from_json(b)?))
}

fn describe(d: &NearlySimpleDescriptor) -> String {
    let deg = |k: &tensorideal_core::NumberField| k.degree();
    format!("(K_s deg {}, K_e deg {})", deg(d.scalar_field()), deg(d.entry_field()))
}

pub fn fields(left: &Value, right: &Value, p: &Params) -> Outcome {
    let (k, l) = (field_from_json(left)?, field_from_json(right)?);
    let ring = FieldTensorRing::build(&k, &l, p.config.degree_bound)?;
    let report = field_report(&ring);
    let summary = format!(
        "K⊗L with [K:Q] = {}, [L:Q] = {}: {} component(s) of relative degrees {:?}; {}",
        k.degree(),
        l.degree(),
        report["num_components"],
        ring.decompose().component_degrees(),
        if ring.is_field() { "a field" } else { "not a field" },
    );
    Ok((summary, report))
}

pub fn check(desc_a: &Value, desc_b: &Value, p: &Params) -> Outcome {
    let (a, b) = pair(desc_a, desc_b)?;
    let verdict = check_admissibility(&a, &b, &p.config)?;
    let extremal = check_extremal_ideals(&a, &b, &p.config)?;
    let is_field: Map<String, Value> = verdict
        .products
        .iter()
        .map(|r| (r.slot.code().to_string(), json!(r.is_field)))
        .collect();
    let failing: Vec<&str> = verdict.failing().iter().map(|s| s.name()).collect();
    let summary = format!(
        "A = {}, B = {}: {}",
        describe(&a),
        describe(&b),
        if failing.is_empty() {
            "every ideal is admissible".to_string()
        } else {
            format!("not a field: {}", failing.join(", "))
        }
    );
    Ok((
        summary,
        json!({
            "verdict": verdict_to_json(&verdict),
            "is_field": is_field,
            "extremal": extremal_to_json(&extremal),
            "universal_a": check_universal(&a),
            "universal_b": check_universal(&b),
        }),
    ))
}

fn oracle_report(t: &TensorElement, p: &Params) -> (Option<&'static str>, Value) {
    let model = TruncatedModel::fitting(p.config.truncation, &[t]);
    let tag = model.tag_of(t).map(|t| t.name());
    (tag, json!({ "tag": tag, "model_sizes": [model.sizes().0, model.sizes().1] }))
}

pub fn classify(desc_a: &Value, desc_b: &Value, tensor: &Value, oracle: bool, p: &Params) -> Outcome {
    let (a, b) = pair(desc_a, desc_b)?;
    let t = tensor_from_json(&a, &b, tensor)?;
    let c = classify_ideal_of(&t, &p.config)?;
    let mut result = classification_to_json(&c);
    result["rank"] = json!(t.rank());
    let mut summary = format!("⟨t⟩ for a rank-{} tensor: {}", t.rank(), c.tag);
    if c.lower_bound_only {
        summary.push_str(" (pair not admissible; lower bound only)");
    }
    if oracle {
        let (tag, report) = oracle_report(&t, p);
        summary.push_str(&format!("; truncated model: {}", tag.unwrap_or("not admissible")));
        result["oracle"] = report;
    }
    Ok((summary, result))
}

pub fn witness(desc_a: &Value, desc_b: &Value, p: &Params) -> Outcome {
    let (a, b) = pair(desc_a, desc_b)?;
    let verdict = check_admissibility(&a, &b, &p.config)?;
    let ws = construct_witness(&a, &b, &verdict)?;
    let slots: Vec<&str> = ws.iter().map(|w| w.slot().code()).collect();
    let summary = format!(
        "{} witness(es), slots {}; every product g1·g2 is zero: {}",
        ws.len(),
        slots.join(", "),
        ws.iter().all(|w| w.verify())
    );
    Ok((
        summary,
        json!({
            "failing": slots,
            "all_products_zero": ws.iter().all(|w| w.verify()),
            "witnesses": ws.iter().map(witness_to_json).collect::<Vec<_>>(),
        }),
    ))
}

pub fn reduce(desc_a: &Value, desc_b: &Value, tensor: &Value, oracle: bool, p: &Params) -> Outcome {
    let (a, b) = pair(desc_a, desc_b)?;
    let t = tensor_from_json(&a, &b, tensor)?;
    let cert = rank_reduction(&t, p.seed, &p.config)?;
    let replayed = replay_certificate(&t, &cert)?.equals(&cert.claim);
    let mut result = json!({
        "input_rank": t.rank(),
        "claim_rank": cert.claim.rank(),
        "steps": cert.steps.len(),
        "replayed": replayed,
        "certificate": certificate_to_json(&cert),
    });
    let mut summary = format!(
        "certificate with {} step(s) for a rank-{} tensor; claim has rank {}; replay {}",
        cert.steps.len(),
        t.rank(),
        cert.claim.rank(),
        if replayed { "matches" } else { "DOES NOT match" }
    );
    if oracle {
        let model = TruncatedModel::fitting(p.config.truncation, &[&t, &cert.claim]);
        let ok = model.generates(&t, &cert.claim);
        summary.push_str(&format!("; truncated model confirms claim ∈ ⟨t⟩: {ok}"));
        result["oracle_generates"] = json!(ok);
    }
    Ok((summary, result))
}

/// Accepts a bare certificate or a `reduce` report. When the report records
/// a tensor hash, it must match `tensor_sha256`.
pub fn replay(desc_a: &Value, desc_b: &Value, tensor: &Value, tensor_sha256: &str, cert: &Value) -> Outcome {
    let (a, b) = pair(desc_a, desc_b)?;
    let t = tensor_from_json(&a, &b, tensor)?;
    let cert_json = cert.pointer("/result/certificate").unwrap_or(cert);
    if let Some(recorded) = cert
        .get("inputs")
        .and_then(Value::as_array)
        .and_then(|ins| ins.iter().find(|i| i["role"] == "tensor"))
        .and_then(|i| i["sha256"].as_str())
    {
        if recorded != tensor_sha256 {
            return Err(CliError::Domain(tensorideal_core::Error::CertificateMismatch(format!(
                "certificate was issued for tensor {recorded}, got {tensor_sha256}"
            ))));
        }
    }
    let cert = certificate_from_json(&a, &b, cert_json)?;
    let out = replay_certificate(&t, &cert)?;
    if !out.equals(&cert.claim) {
        return Err(CliError::Domain(tensorideal_core::Error::CertificateMismatch(
            "replayed register differs from the claim".into(),
        )));
    }
    Ok((
        format!("certificate verified: {} step(s), claim of rank {}", cert.steps.len(), cert.claim.rank()),
        json!({ "verified": true, "steps": cert.steps.len(), "claim": tensor_to_json(&cert.claim) }),
    ))
}

