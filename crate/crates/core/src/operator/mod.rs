//! The algebras `A = K_s·1 + F(V)`.
//!
//! `V` has basis `e_1, e_2, ...` (1-based). Finite-rank operators are sparse
//! matrices with entries in the entry field `K_e`. A scalar `s ∈ K_s` acts as
//! the block-diagonal operator whose blocks (consecutive runs of `deg K_s`
//! indices) are the matrix of multiplication by `s` in the power basis. For
//! `K_s = Q(i)` this is the operator `T` with `T e_{2n-1} = e_{2n}`,
//! `T e_{2n} = -e_{2n-1}`.
//!
//! For such an algebra the ideal `F(V)` is the unique nontrivial ideal,
//! `A/F(V) ≅ K_s`, and since the multiplier algebra of `F(V)` is
//! `End_{K_e}(V)`, the extended centroid is `K_e`.

mod synth;

pub use synth::{find_x0, is_independent, primality_probe, synth_separating_operators, synth_unit_normalizer};

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::number_field::{NFElement, NumberField};
use crate::exact::rational::Rational;

#[derive(Clone, PartialEq)]
pub struct NearlySimpleDescriptor {
    scalar_field: NumberField,
    entry_field: NumberField,
}

impl NearlySimpleDescriptor {
    pub fn new(scalar_field: NumberField, entry_field: NumberField) -> Self {
        NearlySimpleDescriptor {
            scalar_field,
            entry_field,
        }
    }

    /// `Q·1 + F(V)` over `Q`.
    pub fn universal() -> Self {
        Self::new(NumberField::rationals(), NumberField::rationals())
    }

    /// `K_s`, which is `A/I_A` and its own center.
    pub fn scalar_field(&self) -> &NumberField {
        &self.scalar_field
    }

    /// `K_e`, the field of matrix entries.
    pub fn entry_field(&self) -> &NumberField {
        &self.entry_field
    }

    /// `Z(A/I_A)`.
    pub fn residue_field(&self) -> &NumberField {
        &self.scalar_field
    }

    /// `C(A)`.
    pub fn extended_centroid(&self) -> &NumberField {
        &self.entry_field
    }

    pub fn block_size(&self) -> usize {
        self.scalar_field.degree()
    }

    /// Number of whole blocks needed to cover indices `1..=n`.
    pub fn blocks_covering(&self, n: usize) -> usize {
        n.div_ceil(self.block_size())
    }

    pub fn is_universal(&self) -> bool {
        self.scalar_field.degree() == 1 && self.entry_field.degree() == 1
    }

    pub fn zero(&self) -> AlgElement {
        AlgElement {
            scalar: self.scalar_field.from_int(0),
            fin: FinOp::zero(),
        }
    }

    pub fn one(&self) -> AlgElement {
        AlgElement {
            scalar: self.scalar_field.from_int(1),
            fin: FinOp::zero(),
        }
    }

    pub fn scalar(&self, s: NFElement) -> AlgElement {
        AlgElement {
            scalar: s,
            fin: FinOp::zero(),
        }
    }

    pub fn finite(&self, fin: FinOp) -> AlgElement {
        AlgElement {
            scalar: self.scalar_field.from_int(0),
            fin,
        }
    }

    /// Matrix unit `e_{r,c}` as an element of the ideal.
    pub fn unit(&self, r: usize, c: usize) -> AlgElement {
        self.finite(FinOp::unit(&self.entry_field, r, c))
    }

    pub fn element(&self, scalar: NFElement, fin: FinOp) -> Result<AlgElement> {
        if scalar.field() != &self.scalar_field || fin.entries.values().any(|v| v.field() != &self.entry_field) {
            return Err(Error::FieldMismatch);
        }
        Ok(AlgElement { scalar, fin })
    }

    pub fn mul(&self, x: &AlgElement, y: &AlgElement) -> AlgElement {
        alg_mul(x, y, self)
    }
}

impl fmt::Debug for NearlySimpleDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}·1 + F(V) over {:?}", self.scalar_field, self.entry_field)
    }
}

/// Finite-rank operator: sparse matrix with nonzero entries in `K_e`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FinOp {
    entries: BTreeMap<(usize, usize), NFElement>,
}

impl FinOp {
    pub fn zero() -> Self {
        FinOp::default()
    }

    pub fn unit(field: &NumberField, r: usize, c: usize) -> Self {
        Self::from_entries([((r, c), field.from_int(1))])
    }

    /// Sums repeated positions and drops zeros. Indices are 1-based.
    pub fn from_entries(entries: impl IntoIterator<Item = ((usize, usize), NFElement)>) -> Self {
        let mut out = FinOp::zero();
        for (pos, v) in entries {
            assert!(pos.0 >= 1 && pos.1 >= 1, "basis indices are 1-based");
            out.add_at(pos, &v);
        }
        out
    }

    fn add_at(&mut self, pos: (usize, usize), v: &NFElement) {
        if v.is_zero() {
            return;
        }
        match self.entries.get_mut(&pos) {
            Some(old) => {
                *old = old.add(v);
                if old.is_zero() {
                    self.entries.remove(&pos);
                }
            }
            None => {
                self.entries.insert(pos, v.clone());
            }
        }
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), NFElement> {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&NFElement> {
        self.entries.get(&(r, c))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Largest row or column index in the support, 0 when empty.
    pub fn support_bound(&self) -> usize {
        self.entries.keys().map(|&(r, c)| r.max(c)).max().unwrap_or(0)
    }

    pub fn add(&self, other: &FinOp) -> FinOp {
        let mut out = self.clone();
        for (&pos, v) in &other.entries {
            out.add_at(pos, v);
        }
        out
    }

    pub fn neg(&self) -> FinOp {
        FinOp {
            entries: self.entries.iter().map(|(&p, v)| (p, v.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &FinOp) -> FinOp {
        self.add(&other.neg())
    }

    /// Multiplies every entry by `k ∈ K_e`.
    pub fn scale(&self, k: &NFElement) -> FinOp {
        if k.is_zero() {
            return FinOp::zero();
        }
        FinOp {
            entries: self.entries.iter().map(|(&p, v)| (p, v.mul(k))).collect(),
        }
    }

    pub fn scale_rational(&self, q: &Rational) -> FinOp {
        FinOp::from_entries(self.entries.iter().map(|(&p, v)| (p, v.scale(q))))
    }

    pub fn mul(&self, other: &FinOp) -> FinOp {
        let mut out = FinOp::zero();
        for (&(r, k), x) in &self.entries {
            for (&(_, c), y) in other.entries.range((k, 0)..=(k, usize::MAX)) {
                out.add_at((r, c), &x.mul(y));
            }
        }
        out
    }

    pub fn commutator(&self, other: &FinOp) -> FinOp {
        self.mul(other).sub(&other.mul(self))
    }
}

impl fmt::Debug for FinOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.entries.iter().map(|((r, c), v)| (format!("e{r},{c}"), v)))
            .finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActionSide {
    Left,
    Right,
}

/// `s·f` (left) or `f·s` (right) where `s ∈ K_s` acts through its
/// block-diagonal companion embedding.
pub fn structured_scalar_action(
    s: &NFElement,
    f: &FinOp,
    side: ActionSide,
    desc: &NearlySimpleDescriptor,
) -> FinOp {
    if s.is_one() {
        return f.clone();
    }
    if s.is_zero() {
        return FinOp::zero();
    }
    let d = desc.block_size();
    // m[i][j] = coordinate i of s·α^j, so s maps e_{block+j} to Σ_i m[i][j] e_{block+i}
    let m = s.multiplication_matrix();
    let local = |k: usize| (k - 1) % d;
    let base = |k: usize| (k - 1) / d * d;
    let mut out = FinOp::zero();
    for (&(r, c), v) in &f.entries {
        match side {
            ActionSide::Left => {
                for i in 0..d {
                    let coef = &m[i][local(r)];
                    if !num_traits::Zero::is_zero(coef) {
                        out.add_at((base(r) + i + 1, c), &v.scale(coef));
                    }
                }
            }
            ActionSide::Right => {
                for j in 0..d {
                    let coef = &m[local(c)][j];
                    if !num_traits::Zero::is_zero(coef) {
                        out.add_at((r, base(c) + j + 1), &v.scale(coef));
                    }
                }
            }
        }
    }
    out
}

/// `s·1 + f` with `s ∈ K_s` and `f ∈ F(V)`; the decomposition is direct.
#[derive(Clone, PartialEq)]
pub struct AlgElement {
    scalar: NFElement,
    fin: FinOp,
}

impl AlgElement {
    /// The image in `A/I_A = K_s`.
    pub fn scalar(&self) -> &NFElement {
        &self.scalar
    }

    pub fn fin(&self) -> &FinOp {
        &self.fin
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero() && self.fin.is_zero()
    }

    pub fn in_ideal(&self) -> bool {
        self.scalar.is_zero()
    }

    pub fn add(&self, other: &AlgElement) -> AlgElement {
        AlgElement {
            scalar: self.scalar.add(&other.scalar),
            fin: self.fin.add(&other.fin),
        }
    }

    pub fn neg(&self) -> AlgElement {
        AlgElement {
            scalar: self.scalar.neg(),
            fin: self.fin.neg(),
        }
    }

    pub fn sub(&self, other: &AlgElement) -> AlgElement {
        self.add(&other.neg())
    }

    pub fn scale_rational(&self, q: &Rational) -> AlgElement {
        AlgElement {
            scalar: self.scalar.scale(q),
            fin: self.fin.scale_rational(q),
        }
    }

    /// Multiplies the finite part's entries by `k ∈ K_e`. Only defined on the
    /// ideal, where `K_e` acts.
    pub fn scale_entries(&self, k: &NFElement) -> AlgElement {
        debug_assert!(self.in_ideal());
        AlgElement {
            scalar: self.scalar.clone(),
            fin: self.fin.scale(k),
        }
    }

    pub fn support_bound(&self) -> usize {
        self.fin.support_bound()
    }
}

impl fmt::Debug for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.scalar, self.fin)
    }
}

pub fn alg_mul(x: &AlgElement, y: &AlgElement, desc: &NearlySimpleDescriptor) -> AlgElement {
    let fin = structured_scalar_action(&x.scalar, &y.fin, ActionSide::Left, desc)
        .add(&structured_scalar_action(&y.scalar, &x.fin, ActionSide::Right, desc))
        .add(&x.fin.mul(&y.fin));
    AlgElement {
        scalar: x.scalar.mul(&y.scalar),
        fin,
    }
}

pub fn commutator(x: &AlgElement, y: &AlgElement, desc: &NearlySimpleDescriptor) -> AlgElement {
    alg_mul(x, y, desc).sub(&alg_mul(y, x, desc))
}

/// `x ↦ Σ a_i x b_i`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ElementaryOperator {
    pub terms: Vec<(AlgElement, AlgElement)>,
}

impl ElementaryOperator {
    pub fn zero() -> Self {
        ElementaryOperator::default()
    }

    pub fn identity(desc: &NearlySimpleDescriptor) -> Self {
        ElementaryOperator {
            terms: vec![(desc.one(), desc.one())],
        }
    }

    pub fn sandwich(a: AlgElement, b: AlgElement) -> Self {
        ElementaryOperator { terms: vec![(a, b)] }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn apply(&self, x: &AlgElement, desc: &NearlySimpleDescriptor) -> AlgElement {
        self.terms.iter().fold(desc.zero(), |acc, (a, b)| {
            acc.add(&alg_mul(&alg_mul(a, x, desc), b, desc))
        })
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &ElementaryOperator, desc: &NearlySimpleDescriptor) -> ElementaryOperator {
        let mut terms = Vec::with_capacity(self.len() * inner.len());
        for (a, b) in &self.terms {
            for (c, d) in &inner.terms {
                terms.push((alg_mul(a, c, desc), alg_mul(d, b, desc)));
            }
        }
        ElementaryOperator { terms }
    }

    /// Left-multiplies every left coefficient by `c`, giving `x ↦ c·φ(x)`.
    pub fn premultiply(&self, c: &AlgElement, desc: &NearlySimpleDescriptor) -> ElementaryOperator {
        ElementaryOperator {
            terms: self.terms.iter().map(|(a, b)| (alg_mul(c, a, desc), b.clone())).collect(),
        }
    }
}

pub fn apply_elementary(phi: &ElementaryOperator, x: &AlgElement, desc: &NearlySimpleDescriptor) -> AlgElement {
    phi.apply(x, desc)
}
