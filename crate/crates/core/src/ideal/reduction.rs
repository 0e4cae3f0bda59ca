//! Constructive rank reduction: from `t` whose image in `(A/I_A) ⊗ B` is a
//! nonzero elementary tensor, derive `1 ⊗ b_1` inside `⟨t⟩` using only
//! ideal-stable operations, and record them as a replayable certificate.
//!
//! Steps act on registers. Register 0 holds the input; each step appends one
//! register; the certificate's claim is the last register.

use crate::config::EngineConfig;
use crate::error::{Error, Result};
use crate::exact::field::Rationals;
use crate::exact::linalg::independent_subset;
use crate::exact::rational::{int, Rational};
use crate::operator::{find_x0, synth_separating_operators, synth_unit_normalizer, AlgElement, ElementaryOperator};
use crate::tensor::{FactorSpace, QuotientKind, Side, Tensor, TensorElement};

#[derive(Debug, Clone, PartialEq)]
pub enum Step {
    /// `(φ ⊗ ψ)(r_src)`
    ApplyElementary {
        src: usize,
        phi: ElementaryOperator,
        psi: ElementaryOperator,
    },
    /// `[r_src, x_0 ⊗ 1]`
    CommutateWith { src: usize, x0: AlgElement },
    /// `(θ ⊗ id)(r_src)`
    ApplySeparator { src: usize, theta: ElementaryOperator },
    /// `Σ c_k r_k`
    LinearCombine { terms: Vec<(usize, Rational)> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReductionCertificate {
    /// Seed used for the `x_0` search; informational.
    pub seed: u64,
    pub steps: Vec<Step>,
    pub claim: TensorElement,
}

fn register<'a>(regs: &'a [TensorElement], i: usize) -> Result<&'a TensorElement> {
    regs.get(i)
        .ok_or_else(|| Error::CertificateMismatch(format!("step reads register {i}, only {} exist", regs.len())))
}

/// Every register value, starting with `t`.
pub fn run_steps(t: &TensorElement, steps: &[Step]) -> Result<Vec<TensorElement>> {
    let (da, db) = t.descriptors();
    let mut regs = vec![t.reduce_rank()];
    for step in steps {
        let next = match step {
            Step::ApplyElementary { src, phi, psi } => register(&regs, *src)?.apply_operator(phi, psi),
            Step::CommutateWith { src, x0 } => {
                if !x0.in_ideal() {
                    return Err(Error::CertificateMismatch("x0 must lie in the ideal".into()));
                }
                register(&regs, *src)?.commutator_left(x0)
            }
            Step::ApplySeparator { src, theta } => {
                register(&regs, *src)?.apply_operator(theta, &ElementaryOperator::identity(db))
            }
            Step::LinearCombine { terms } => {
                let mut acc = Tensor::zero(da.clone(), db.clone());
                for (i, c) in terms {
                    acc = acc.add(&register(&regs, *i)?.scale(c));
                }
                acc
            }
        };
        regs.push(next);
    }
    Ok(regs)
}

/// Replays `cert` from `t` and checks the result against the claim.
pub fn replay_certificate(t: &TensorElement, cert: &ReductionCertificate) -> Result<TensorElement> {
    let regs = run_steps(t, &cert.steps)?;
    let last = regs.into_iter().last().expect("register 0 always exists");
    if !last.equals(&cert.claim) {
        return Err(Error::CertificateMismatch("replayed value differs from the claim".into()));
    }
    Ok(last)
}

/// Produces a certificate that `1 ⊗ b_1 ∈ ⟨t⟩` with `b_1 ≠ 0`.
///
/// Requires `K_e^A = Q` and `(q_{I_A} ⊗ id)(t)` a nonzero elementary tensor.
pub fn rank_reduction(t: &TensorElement, seed: u64, config: &EngineConfig) -> Result<ReductionCertificate> {
    let (da, db) = t.descriptors();
    if !da.entry_field().is_rationals() {
        return Err(Error::HypothesisFailed(
            "rank reduction runs over C(A) = Q; the left entry field must be Q".into(),
        ));
    }
    if t.quotient_image(QuotientKind::QaId).rank() != 1 {
        return Err(Error::HypothesisFailed(
            "(q_A ⊗ id)(t) must be a nonzero elementary tensor".into(),
        ));
    }
    // b_1..b_n independent, a_1 ∉ I_A, a_2..a_n ∈ I_A
    let (k, dec) = t.decompose_mod_subspace(Side::Left)?;
    if k != 1 {
        return Err(Error::HypothesisFailed(format!("expected one factor outside the ideal, found {k}")));
    }
    let (a1, b1) = dec.pairs()[0].clone();
    let rest = &dec.pairs()[1..];
    let mut steps = Vec::new();
    let mut current = 0;
    let mut rest_a: Vec<AlgElement> = rest.iter().map(|(a, _)| a.clone()).collect();
    if a1 != da.one() {
        let phi = synth_unit_normalizer(&a1, da)?;
        rest_a = rest_a.iter().map(|a| phi.apply(a, da)).collect();
        steps.push(Step::ApplyElementary {
            src: 0,
            phi,
            psi: ElementaryOperator::identity(db),
        });
        current = 1;
    }
    // r_current = 1 ⊗ b_1 + Σ rest_a[j] ⊗ b_j
    let ind = independent_subset(&Rationals, &da.coordinates(&rest_a));
    if !ind.basis.is_empty() {
        let basis: Vec<AlgElement> = ind.basis.iter().map(|&i| rest_a[i].clone()).collect();
        let us: Vec<_> = basis.iter().map(|a| a.fin().clone()).collect();
        let x0 = find_x0(&us, da, seed, config)?;
        let comms: Vec<_> = us.iter().map(|u| u.commutator(&x0)).collect();
        let thetas = synth_separating_operators(&comms, &basis, da)?;
        steps.push(Step::CommutateWith {
            src: current,
            x0: da.finite(x0),
        });
        let comm_reg = steps.len();
        let mut terms = vec![(current, int(1))];
        for theta in thetas {
            steps.push(Step::ApplySeparator { src: comm_reg, theta });
            terms.push((steps.len(), int(-1)));
        }
        steps.push(Step::LinearCombine { terms });
    }
    let cert = ReductionCertificate {
        seed,
        steps,
        claim: Tensor::elementary(da.clone(), db.clone(), da.one(), b1),
    };
    replay_certificate(t, &cert)?;
    Ok(cert)
}
