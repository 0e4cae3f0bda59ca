//! Elementary operators built to order: normalizing an invertible-mod-ideal
//! element to `1`, finding `x_0` with independent commutators, and
//! separating independent finite-rank operators.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{alg_mul, AlgElement, ElementaryOperator, FinOp, NearlySimpleDescriptor};
use crate::config::EngineConfig;
use crate::error::{Error, Result};
use crate::exact::linalg::{dual_functionals, rank};
use crate::exact::number_field::NFElement;
use crate::exact::rational::int;

/// `φ` with `φ(a) = 1` for `a = k·1 + f`, `k ≠ 0`.
///
/// Picks an entry `(m, m')` of the block matrix of `k` that is nonzero and lies
/// in a block clear of `supp f`. Then `e_{p,m}·a·e_{m',q} = k_{m,m'}·e_{p,q}`,
/// which lets the operator cancel `f` entry by entry before scaling by `k⁻¹`.
pub fn synth_unit_normalizer(a: &AlgElement, desc: &NearlySimpleDescriptor) -> Result<ElementaryOperator> {
    let k = a.scalar();
    if k.is_zero() {
        return Err(Error::Precondition("element lies in the ideal; nothing maps it to 1".into()));
    }
    let d = desc.block_size();
    let m = k.multiplication_matrix();
    let (i, j) = (0..d)
        .flat_map(|i| (0..d).map(move |j| (i, j)))
        .find(|&(i, j)| !num_traits::Zero::is_zero(&m[i][j]))
        .expect("nonzero scalar has a nonzero block");
    let base = desc.blocks_covering(a.support_bound()) * d;
    let (row, col) = (base + i + 1, base + j + 1);
    let pivot = &m[i][j];
    let ke = desc.entry_field();
    let mut phi = ElementaryOperator::identity(desc);
    for (&(p, q), v) in a.fin().entries() {
        let coef = v.scale(&(-int(1) / pivot));
        phi.terms.push((
            desc.finite(FinOp::unit(ke, p, row).scale(&coef)),
            desc.finite(FinOp::unit(ke, col, q)),
        ));
    }
    let k_inv = desc.scalar(k.inverse()?);
    Ok(phi.premultiply(&k_inv, desc))
}

/// Coordinates over `K_e` of each operator on the union of their supports.
fn entry_rows(us: &[FinOp], desc: &NearlySimpleDescriptor) -> Vec<Vec<NFElement>> {
    let support: BTreeSet<(usize, usize)> = us.iter().flat_map(|u| u.entries().keys().copied()).collect();
    let zero = desc.entry_field().from_int(0);
    us.iter()
        .map(|u| support.iter().map(|p| u.get(p.0, p.1).cloned().unwrap_or_else(|| zero.clone())).collect())
        .collect()
}

pub fn is_independent(us: &[FinOp], desc: &NearlySimpleDescriptor) -> bool {
    rank(desc.entry_field(), &entry_rows(us, desc)) == us.len()
}

/// Random sparse `x_0 ∈ F(V)` such that the commutators `[u_i, x_0]` are
/// `K_e`-independent.
///
/// Samples inside a window two blocks wider than the joint support; after
/// `max_tries` failures the window grows by two blocks, up to
/// `x0_max_widenings` times.
pub fn find_x0(us: &[FinOp], desc: &NearlySimpleDescriptor, seed: u64, config: &EngineConfig) -> Result<FinOp> {
    if us.is_empty() {
        return Err(Error::Precondition("find_x0 needs at least one operator".into()));
    }
    if !is_independent(us, desc) {
        return Err(Error::DependentFamily);
    }
    let d = desc.block_size();
    let support = us.iter().map(FinOp::support_bound).max().unwrap_or(0);
    let mut window = (desc.blocks_covering(support) + 2) * d;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ke = desc.entry_field();
    let mut tries = 0;
    for widening in 0..=config.x0_max_widenings {
        if widening > 0 {
            window += 2 * d;
        }
        for _ in 0..config.x0_max_tries {
            tries += 1;
            let nnz = rng.gen_range(1..=window);
            let x0 = FinOp::from_entries((0..nnz).map(|_| {
                let r = rng.gen_range(1..=window);
                let c = rng.gen_range(1..=window);
                let v = loop {
                    let v: i64 = rng.gen_range(-3..=3);
                    if v != 0 {
                        break v;
                    }
                };
                ((r, c), ke.from_int(v))
            }));
            let comms: Vec<FinOp> = us.iter().map(|u| u.commutator(&x0)).collect();
            if is_independent(&comms, desc) {
                return Ok(x0);
            }
        }
    }
    Err(Error::SearchExhausted { seed, window, tries })
}

/// `θ_i` with `θ_i(u_j) = δ_ij·targets[i]`.
///
/// A `K_e`-functional `c` with `Σ c_rs (u_j)_rs = δ_ij` is realized by the
/// sandwiches `e_{p,r}·x·e_{s,q}`, which send `x` to `x_rs·e_{p,q}`; weighting
/// them by `c_rs` and the target's entries rebuilds the target.
pub fn synth_separating_operators(
    us: &[FinOp],
    targets: &[AlgElement],
    desc: &NearlySimpleDescriptor,
) -> Result<Vec<ElementaryOperator>> {
    if us.len() != targets.len() {
        return Err(Error::Precondition("one target per operator".into()));
    }
    if targets.iter().any(|t| !t.in_ideal()) {
        return Err(Error::Precondition("targets must lie in the ideal".into()));
    }
    let support: Vec<(usize, usize)> = us
        .iter()
        .flat_map(|u| u.entries().keys().copied())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let functionals = dual_functionals(desc.entry_field(), &entry_rows(us, desc))?;
    let ke = desc.entry_field();
    Ok(functionals
        .iter()
        .zip(targets)
        .map(|(c, target)| {
            let mut terms = Vec::new();
            for (&(p, q), g) in target.fin().entries() {
                for (&(r, s), crs) in support.iter().zip(c) {
                    if crs.is_zero() {
                        continue;
                    }
                    terms.push((
                        desc.finite(FinOp::unit(ke, p, r).scale(&g.mul(crs))),
                        desc.finite(FinOp::unit(ke, s, q)),
                    ));
                }
            }
            ElementaryOperator { terms }
        })
        .collect())
}

/// `a·x·b` for a sampled `x`, used to probe primality: returns the first `x`
/// (a matrix unit or the identity) with `a x b ≠ 0`.
pub fn primality_probe(
    a: &AlgElement,
    b: &AlgElement,
    desc: &NearlySimpleDescriptor,
    rng: &mut impl Rng,
    max_tries: usize,
) -> Option<AlgElement> {
    let window = a.support_bound().max(b.support_bound()) + desc.block_size();
    for _ in 0..max_tries {
        let x = if rng.gen_bool(0.1) {
            desc.one()
        } else {
            desc.unit(rng.gen_range(1..=window), rng.gen_range(1..=window))
        };
        if !alg_mul(&alg_mul(a, &x, desc), b, desc).is_zero() {
            return Some(x);
        }
    }
    None
}
