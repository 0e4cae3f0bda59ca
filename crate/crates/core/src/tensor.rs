//! Elements of `A ⊗_Q B` as finite lists of pairs, kept in minimal length.

use std::collections::BTreeSet;
use std::fmt::Debug;

use crate::error::{Error, Result};
use crate::exact::field::Rationals;
use crate::exact::linalg::independent_subset;
use crate::exact::number_field::{NFElement, NumberField};
use crate::exact::rational::{int, Rational};
use crate::operator::{alg_mul, commutator, AlgElement, ElementaryOperator, NearlySimpleDescriptor};

/// A `Q`-algebra whose elements can be coordinatized over `Q`, finitely per
/// element.
pub trait FactorSpace: Clone + Debug + PartialEq {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, q: &Rational) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// `Q`-coordinates of every element on one common coordinate set.
    fn coordinates(&self, elems: &[Self::Elem]) -> Vec<Vec<Rational>>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
}

impl FactorSpace for NumberField {
    type Elem = NFElement;

    fn zero(&self) -> NFElement {
        self.from_int(0)
    }
    fn one(&self) -> NFElement {
        self.from_int(1)
    }
    fn add(&self, a: &NFElement, b: &NFElement) -> NFElement {
        a.add(b)
    }
    fn neg(&self, a: &NFElement) -> NFElement {
        a.neg()
    }
    fn scale(&self, a: &NFElement, q: &Rational) -> NFElement {
        a.scale(q)
    }
    fn mul(&self, a: &NFElement, b: &NFElement) -> NFElement {
        a.mul(b)
    }
    fn is_zero(&self, a: &NFElement) -> bool {
        a.is_zero()
    }
    fn coordinates(&self, elems: &[NFElement]) -> Vec<Vec<Rational>> {
        elems.iter().map(|e| e.coords().to_vec()).collect()
    }
}

impl FactorSpace for NearlySimpleDescriptor {
    type Elem = AlgElement;

    fn zero(&self) -> AlgElement {
        NearlySimpleDescriptor::zero(self)
    }
    fn one(&self) -> AlgElement {
        NearlySimpleDescriptor::one(self)
    }
    fn add(&self, a: &AlgElement, b: &AlgElement) -> AlgElement {
        a.add(b)
    }
    fn neg(&self, a: &AlgElement) -> AlgElement {
        a.neg()
    }
    fn scale(&self, a: &AlgElement, q: &Rational) -> AlgElement {
        a.scale_rational(q)
    }
    fn mul(&self, a: &AlgElement, b: &AlgElement) -> AlgElement {
        alg_mul(a, b, self)
    }
    fn is_zero(&self, a: &AlgElement) -> bool {
        a.is_zero()
    }
    /// `K_s` coordinates, then the `K_e` coordinates of each entry on the
    /// joint support in row-major order.
    fn coordinates(&self, elems: &[AlgElement]) -> Vec<Vec<Rational>> {
        let support: BTreeSet<(usize, usize)> = elems.iter().flat_map(|e| e.fin().entries().keys().copied()).collect();
        let de = self.entry_field().degree();
        elems
            .iter()
            .map(|e| {
                let mut v = e.scalar().coords().to_vec();
                v.reserve(support.len() * de);
                for &(r, c) in &support {
                    match e.fin().get(r, c) {
                        Some(x) => v.extend_from_slice(x.coords()),
                        None => v.extend(std::iter::repeat_n(int(0), de)),
                    }
                }
                v
            })
            .collect()
    }
}

/// `Σ a_i ⊗ b_i`. Constructors and every operation return the rank-normalized
/// form, so the list length is the tensor rank.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor<SA: FactorSpace, SB: FactorSpace> {
    left: SA,
    right: SB,
    pairs: Vec<(SA::Elem, SB::Elem)>,
}

/// An element of `A ⊗ B` for two concrete algebras.
pub type TensorElement = Tensor<NearlySimpleDescriptor, NearlySimpleDescriptor>;

impl<SA: FactorSpace, SB: FactorSpace> Tensor<SA, SB> {
    pub fn new(left: SA, right: SB, pairs: Vec<(SA::Elem, SB::Elem)>) -> Self {
        Self::raw(left, right, pairs).reduce_rank()
    }

    /// Keeps the pairs exactly as given.
    pub fn raw(left: SA, right: SB, pairs: Vec<(SA::Elem, SB::Elem)>) -> Self {
        Tensor { left, right, pairs }
    }

    pub fn zero(left: SA, right: SB) -> Self {
        Self::raw(left, right, Vec::new())
    }

    pub fn elementary(left: SA, right: SB, a: SA::Elem, b: SB::Elem) -> Self {
        Self::new(left, right, vec![(a, b)])
    }

    pub fn left_space(&self) -> &SA {
        &self.left
    }

    pub fn right_space(&self) -> &SB {
        &self.right
    }

    pub fn pairs(&self) -> &[(SA::Elem, SB::Elem)] {
        &self.pairs
    }

    pub fn into_pairs(self) -> Vec<(SA::Elem, SB::Elem)> {
        self.pairs
    }

    /// Length of the stored list; the rank once normalized.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.reduce_rank().len()
    }

    pub fn is_zero(&self) -> bool {
        self.reduce_rank().is_empty()
    }

    /// Minimal-length representative: eliminate dependent left factors
    /// (first-seen pivoting), then dependent right factors.
    pub fn reduce_rank(&self) -> Self {
        let (l, r) = (&self.left, &self.right);
        let pairs: Vec<_> = self
            .pairs
            .iter()
            .filter(|(a, b)| !l.is_zero(a) && !r.is_zero(b))
            .cloned()
            .collect();

        // a_j = Σ e_jk a_{basis k}  ⇒  b_{basis k} += e_jk b_j
        let lefts: Vec<SA::Elem> = pairs.iter().map(|p| p.0.clone()).collect();
        let ind = independent_subset(&Rationals, &l.coordinates(&lefts));
        let mut merged: Vec<(SA::Elem, SB::Elem)> = ind.basis.iter().map(|&i| pairs[i].clone()).collect();
        for (j, exp) in ind.expansions.iter().enumerate() {
            let Some(exp) = exp else { continue };
            for (k, e) in exp.iter().enumerate() {
                if !num_traits::Zero::is_zero(e) {
                    merged[k].1 = r.add(&merged[k].1, &r.scale(&pairs[j].1, e));
                }
            }
        }
        merged.retain(|(_, b)| !r.is_zero(b));

        // b_j = Σ d_jk b_{basis k}  ⇒  a_{basis k} += d_jk a_j
        let rights: Vec<SB::Elem> = merged.iter().map(|p| p.1.clone()).collect();
        let ind = independent_subset(&Rationals, &r.coordinates(&rights));
        let mut out: Vec<(SA::Elem, SB::Elem)> = ind.basis.iter().map(|&i| merged[i].clone()).collect();
        for (j, exp) in ind.expansions.iter().enumerate() {
            let Some(exp) = exp else { continue };
            for (k, d) in exp.iter().enumerate() {
                if !num_traits::Zero::is_zero(d) {
                    out[k].0 = l.add(&out[k].0, &l.scale(&merged[j].0, d));
                }
            }
        }
        out.retain(|(a, _)| !l.is_zero(a));
        Self::raw(l.clone(), r.clone(), out)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut pairs = self.pairs.clone();
        pairs.extend(other.pairs.iter().cloned());
        Self::new(self.left.clone(), self.right.clone(), pairs)
    }

    pub fn neg(&self) -> Self {
        let pairs = self.pairs.iter().map(|(a, b)| (self.left.neg(a), b.clone())).collect();
        Self::raw(self.left.clone(), self.right.clone(), pairs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let pairs = self.pairs.iter().map(|(a, b)| (self.left.scale(a, q), b.clone())).collect();
        Self::new(self.left.clone(), self.right.clone(), pairs)
    }

    /// Product in the algebra `A ⊗ B`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut pairs = Vec::with_capacity(self.len() * other.len());
        for (a, b) in &self.pairs {
            for (c, d) in &other.pairs {
                pairs.push((self.left.mul(a, c), self.right.mul(b, d)));
            }
        }
        Self::new(self.left.clone(), self.right.clone(), pairs)
    }

    /// Equality of values, decided by `reduce_rank(self − other) = 0`.
    pub fn equals(&self, other: &Self) -> bool {
        self.sub(other).is_empty()
    }

    /// The flip `B ⊗ A`.
    pub fn swap(&self) -> Tensor<SB, SA> {
        Tensor::raw(
            self.right.clone(),
            self.left.clone(),
            self.pairs.iter().map(|(a, b)| (b.clone(), a.clone())).collect(),
        )
    }

    /// Pairwise images under `f ⊗ g`, normalized in the target spaces.
    pub fn map<TA: FactorSpace, TB: FactorSpace>(
        &self,
        left: TA,
        right: TB,
        f: impl Fn(&SA::Elem) -> TA::Elem,
        g: impl Fn(&SB::Elem) -> TB::Elem,
    ) -> Tensor<TA, TB> {
        let pairs = self.pairs.iter().map(|(a, b)| (f(a), g(b))).collect();
        Tensor::new(left, right, pairs)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuotientKind {
    /// `q_{I_A} ⊗ id`
    QaId,
    /// `id ⊗ q_{I_B}`
    IdQb,
    /// `q_{I_A} ⊗ q_{I_B}`
    QaQb,
}

/// Image of a tensor in `(A/I_A) ⊗ B`, `A ⊗ (B/I_B)` or
/// `(A/I_A) ⊗ (B/I_B)`, with each quotient realized as its scalar field.
#[derive(Debug, Clone, PartialEq)]
pub enum QuotientImage {
    QaId(Tensor<NumberField, NearlySimpleDescriptor>),
    IdQb(Tensor<NearlySimpleDescriptor, NumberField>),
    QaQb(Tensor<NumberField, NumberField>),
}

impl QuotientImage {
    pub fn kind(&self) -> QuotientKind {
        match self {
            QuotientImage::QaId(_) => QuotientKind::QaId,
            QuotientImage::IdQb(_) => QuotientKind::IdQb,
            QuotientImage::QaQb(_) => QuotientKind::QaQb,
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            QuotientImage::QaId(t) => t.len(),
            QuotientImage::IdQb(t) => t.len(),
            QuotientImage::QaQb(t) => t.len(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rank() == 0
    }
}

/// The ideals of `A ⊗ B` that have a membership test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdealKind {
    /// `I_A ⊗ I_B`
    IaIb,
    /// `I_A ⊗ B`
    IaB,
    /// `A ⊗ I_B`
    AIb,
    /// `I_A ⊗ B + A ⊗ I_B`
    Sum,
}

impl TensorElement {
    pub fn descriptors(&self) -> (&NearlySimpleDescriptor, &NearlySimpleDescriptor) {
        (&self.left, &self.right)
    }

    /// Rewrites `t` so that the first `k` factors on `side` are independent
    /// modulo the ideal and the rest lie in it.
    ///
    /// With scalar parts `s(a_j) = Σ λ_ij s(a_i)` over a maximal independent
    /// set `i ≤ k`, each `a_j` becomes `Σ λ_ij a_i + f_j` with `f_j` in the
    /// ideal, and the partners of the `a_i` absorb `λ_ij b_j`.
    pub fn decompose_mod_subspace(&self, side: Side) -> Result<(usize, TensorElement)> {
        if side == Side::Right {
            let (k, t) = self.swap().decompose_mod_subspace(Side::Left)?;
            return Ok((k, t.swap()));
        }
        let t = self.reduce_rank();
        let (l, r) = (&t.left, &t.right);
        let scalars: Vec<Vec<Rational>> = t.pairs.iter().map(|(a, _)| a.scalar().coords().to_vec()).collect();
        let ind = independent_subset(&Rationals, &scalars);
        let k = ind.basis.len();
        if k == 0 {
            return Err(Error::HypothesisFailed("every factor on the chosen side lies in the ideal".into()));
        }
        let mut head: Vec<(AlgElement, AlgElement)> = ind.basis.iter().map(|&i| t.pairs[i].clone()).collect();
        let mut tail = Vec::new();
        for (j, exp) in ind.expansions.iter().enumerate() {
            let Some(exp) = exp else { continue };
            let (aj, bj) = &t.pairs[j];
            let mut f = aj.clone();
            for (idx, lambda) in exp.iter().enumerate() {
                if num_traits::Zero::is_zero(lambda) {
                    continue;
                }
                let ai = &t.pairs[ind.basis[idx]].0;
                f = f.sub(&ai.scale_rational(lambda));
                head[idx].1 = r.add(&head[idx].1, &r.scale(bj, lambda));
            }
            debug_assert!(f.in_ideal());
            tail.push((f, bj.clone()));
        }
        head.extend(tail);
        Ok((k, Tensor::raw(l.clone(), r.clone(), head)))
    }

    pub fn quotient_image(&self, which: QuotientKind) -> QuotientImage {
        let (l, r) = (&self.left, &self.right);
        let ks_a = l.scalar_field().clone();
        let ks_b = r.scalar_field().clone();
        match which {
            QuotientKind::QaId => QuotientImage::QaId(self.map(ks_a, r.clone(), |a| a.scalar().clone(), Clone::clone)),
            QuotientKind::IdQb => QuotientImage::IdQb(self.map(l.clone(), ks_b, Clone::clone, |b| b.scalar().clone())),
            QuotientKind::QaQb => {
                QuotientImage::QaQb(self.map(ks_a, ks_b, |a| a.scalar().clone(), |b| b.scalar().clone()))
            }
        }
    }

    pub fn membership(&self, ideal: IdealKind) -> bool {
        let t = self.reduce_rank();
        let left_in = || t.pairs.iter().all(|(a, _)| a.in_ideal());
        let right_in = || t.pairs.iter().all(|(_, b)| b.in_ideal());
        match ideal {
            IdealKind::IaB => left_in(),
            IdealKind::AIb => right_in(),
            IdealKind::IaIb => left_in() && right_in(),
            IdealKind::Sum => self.quotient_image(QuotientKind::QaQb).is_zero(),
        }
    }

    /// An explicit representation in which every pair has its left factor in
    /// `I_A` or its right factor in `I_B`, or `None` if `t ∉ I_A⊗B + A⊗I_B`.
    ///
    /// After splitting off the left factors that lie in `I_A`, the remaining
    /// left factors are independent modulo `I_A`; their partners must then lie
    /// in `I_B`.
    pub fn kernel_rewrite(&self) -> Option<TensorElement> {
        let t = self.reduce_rank();
        if t.pairs.iter().all(|(a, _)| a.in_ideal()) {
            return Some(t);
        }
        let (k, d) = t.decompose_mod_subspace(Side::Left).ok()?;
        if d.pairs[..k].iter().all(|(_, b)| b.in_ideal()) {
            Some(d)
        } else {
            None
        }
    }

    /// `(φ ⊗ ψ)(t)`.
    pub fn apply_operator(&self, phi: &ElementaryOperator, psi: &ElementaryOperator) -> TensorElement {
        let (l, r) = (&self.left, &self.right);
        let pairs = self
            .pairs
            .iter()
            .map(|(a, b)| (phi.apply(a, l), psi.apply(b, r)))
            .collect();
        Tensor::new(l.clone(), r.clone(), pairs)
    }

    /// `[t, x ⊗ 1] = Σ [a_i, x] ⊗ b_i`.
    pub fn commutator_left(&self, x: &AlgElement) -> TensorElement {
        let l = &self.left;
        let pairs = self.pairs.iter().map(|(a, b)| (commutator(a, x, l), b.clone())).collect();
        Tensor::new(l.clone(), self.right.clone(), pairs)
    }

    /// Largest basis index used by any factor on either side.
    pub fn support_bound(&self) -> (usize, usize) {
        let a = self.pairs.iter().map(|(a, _)| a.support_bound()).max().unwrap_or(0);
        let b = self.pairs.iter().map(|(_, b)| b.support_bound()).max().unwrap_or(0);
        (a, b)
    }
}

pub fn apply_tensor_operator(
    phi: &ElementaryOperator,
    psi: &ElementaryOperator,
    t: &TensorElement,
) -> TensorElement {
    t.apply_operator(phi, psi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d() -> NearlySimpleDescriptor {
        NearlySimpleDescriptor::universal()
    }

    fn t(pairs: Vec<(AlgElement, AlgElement)>) -> TensorElement {
        Tensor::new(d(), d(), pairs)
    }

    #[test]
    fn bilinearity_merges() {
        let a = d().unit(1, 2).add(&d().one());
        let (b, b2) = (d().unit(1, 1), d().unit(2, 2));
        let s = t(vec![(a.clone(), b.clone()), (a.clone(), b2.clone())]);
        assert_eq!(s.pairs(), &[(a.clone(), b.add(&b2))]);
        let s = t(vec![(a.clone(), b.clone()), (a.scale_rational(&int(2)), b.scale_rational(&int(-2)))]);
        assert_eq!(s.pairs(), &[(a, b.scale_rational(&int(-3)))]);
    }

    #[test]
    fn cancellation_gives_zero() {
        let a = d().unit(1, 1);
        let s = t(vec![(a.clone(), d().one()), (a.neg(), d().one())]);
        assert!(s.is_empty());
    }

    #[test]
    fn quotient_examples() {
        let one_e11 = t(vec![(d().one(), d().unit(1, 1))]);
        assert!(one_e11.quotient_image(QuotientKind::QaQb).is_zero());
        let one_one = t(vec![(d().one(), d().one())]);
        assert!(!one_one.quotient_image(QuotientKind::QaQb).is_zero());
        let s = t(vec![(d().one(), d().unit(1, 1)), (d().unit(1, 1), d().one())]);
        assert!(s.quotient_image(QuotientKind::QaQb).is_zero());
        assert!(!s.quotient_image(QuotientKind::QaId).is_zero());
    }

    #[test]
    fn membership_examples() {
        assert!(t(vec![(d().unit(1, 1), d().unit(1, 1))]).membership(IdealKind::IaIb));
        let x = t(vec![(d().one(), d().unit(1, 1))]);
        assert!(!x.membership(IdealKind::IaB));
        assert!(x.membership(IdealKind::AIb));
        let s = t(vec![(d().one(), d().unit(1, 1)), (d().unit(1, 1), d().one())]);
        assert!(s.membership(IdealKind::Sum));
        assert!(!s.membership(IdealKind::IaB));
        assert!(!s.membership(IdealKind::AIb));
        assert!(s.kernel_rewrite().is_some());
        assert!(t(vec![(d().one(), d().one())]).kernel_rewrite().is_none());
    }

    #[test]
    fn lemma_decomposition_example() {
        let two = NumberField::rationals().from_int(2);
        let a1 = d().one().add(&d().unit(1, 1));
        let a2 = d().element(two, d().unit(2, 2).fin().clone()).unwrap();
        let s = t(vec![(a1, d().unit(1, 3)), (a2, d().unit(3, 3))]);
        let (k, dec) = s.decompose_mod_subspace(Side::Left).unwrap();
        assert_eq!(k, 1);
        assert!(!dec.pairs()[0].0.in_ideal());
        assert!(dec.pairs()[1].0.in_ideal());
        assert!(dec.equals(&s));

        let inside = t(vec![(d().unit(1, 1), d().one())]);
        assert!(inside.decompose_mod_subspace(Side::Left).is_err());
    }

    #[test]
    fn operator_application() {
        let s = t(vec![(d().one(), d().unit(1, 1)), (d().unit(2, 1), d().one())]);
        let id = ElementaryOperator::identity(&d());
        assert_eq!(s.apply_operator(&id, &id), s);
        assert!(s.apply_operator(&ElementaryOperator::zero(), &id).is_empty());
    }

    #[test]
    fn reduce_is_idempotent() {
        let s = t(vec![
            (d().one(), d().unit(1, 1)),
            (d().unit(1, 2), d().unit(1, 1).add(&d().one())),
            (d().one().add(&d().unit(1, 2)), d().one()),
        ]);
        assert_eq!(s.reduce_rank(), s);
    }
}
