//! Brute-force ideal closure in a finite-dimensional model.
//!
//! `A_n = K_s ⊕ M_n(K_e)` with the product of `K_s·1 + F(V)` restricted to
//! indices `≤ n` (`n` a whole number of blocks). When `n` exceeds the support
//! of every tensor involved by at least one block, the map
//! `(s, f) ↦ S + f` into `M_n` is injective and the ideal generated by `t` in
//! `A_n ⊗ B_n` sits in exactly the admissible position that `⟨t⟩` has in
//! `A ⊗ B`.
//!
//! The closure is the span of `t` closed under left and right multiplication
//! by algebra generators of each factor: `α·1`, `e_11`, `γ·e_11` and the
//! cyclic shift of `M_n`.

use std::collections::{BTreeMap, VecDeque};

use num_traits::{One, Zero};

use crate::exact::rational::Rational;
use crate::ideal::AdmissibleTag;
use crate::operator::{alg_mul, AlgElement, FinOp, NearlySimpleDescriptor};
use crate::tensor::TensorElement;

type SparseVec = BTreeMap<usize, Rational>;
/// Column `j` lists the nonzero coordinates of the image of basis vector `j`.
type SparseMap = Vec<Vec<(usize, Rational)>>;

/// Coordinates of one factor `K_s ⊕ M_n(K_e)` over `Q`.
#[derive(Debug, Clone)]
struct FactorModel {
    desc: NearlySimpleDescriptor,
    n: usize,
    ds: usize,
    de: usize,
    /// Left and right multiplication by each generator.
    maps: Vec<SparseMap>,
}

impl FactorModel {
    fn new(desc: &NearlySimpleDescriptor, n: usize) -> Self {
        let d = desc.block_size();
        let n = n.div_ceil(d) * d;
        let mut m = FactorModel {
            desc: desc.clone(),
            n,
            ds: desc.scalar_field().degree(),
            de: desc.entry_field().degree(),
            maps: Vec::new(),
        };
        let basis: Vec<AlgElement> = (0..m.dim()).map(|i| m.basis_element(i)).collect();
        for g in m.generators() {
            let left = basis.iter().map(|x| m.sparse_coords(&alg_mul(&g, x, desc))).collect();
            let right = basis.iter().map(|x| m.sparse_coords(&alg_mul(x, &g, desc))).collect();
            m.maps.push(left);
            m.maps.push(right);
        }
        m
    }

    fn dim(&self) -> usize {
        self.ds + self.n * self.n * self.de
    }

    fn generators(&self) -> Vec<AlgElement> {
        let d = &self.desc;
        let ke = d.entry_field();
        let mut gens = vec![d.unit(1, 1)];
        if self.n > 1 {
            let shift = (1..=self.n).map(|r| ((r % self.n + 1, r), ke.from_int(1)));
            gens.push(d.finite(FinOp::from_entries(shift)));
        }
        if self.ds > 1 {
            gens.push(d.scalar(d.scalar_field().generator()));
        }
        if self.de > 1 {
            gens.push(d.finite(FinOp::unit(ke, 1, 1).scale(&ke.generator())));
        }
        gens
    }

    fn basis_element(&self, i: usize) -> AlgElement {
        let d = &self.desc;
        if i < self.ds {
            return d.scalar(d.scalar_field().generator().pow(i));
        }
        let j = i - self.ds;
        let (pos, m) = (j / self.de, j % self.de);
        let (r, c) = (pos / self.n + 1, pos % self.n + 1);
        let ke = d.entry_field();
        d.finite(FinOp::unit(ke, r, c).scale(&ke.generator().pow(m)))
    }

    fn sparse_coords(&self, x: &AlgElement) -> Vec<(usize, Rational)> {
        let mut out: Vec<(usize, Rational)> = x
            .scalar()
            .coords()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect();
        for (&(r, c), v) in x.fin().entries() {
            assert!(r <= self.n && c <= self.n, "element does not fit the truncation");
            let base = self.ds + ((r - 1) * self.n + (c - 1)) * self.de;
            for (m, q) in v.coords().iter().enumerate() {
                if !q.is_zero() {
                    out.push((base + m, q.clone()));
                }
            }
        }
        out
    }

    fn in_ideal(&self, i: usize) -> bool {
        i >= self.ds
    }
}

/// `A_n ⊗ B_n` with coordinates `i·dim B + j`.
#[derive(Debug, Clone)]
pub struct TruncatedModel {
    a: FactorModel,
    b: FactorModel,
}

impl TruncatedModel {
    pub fn new(a: &NearlySimpleDescriptor, b: &NearlySimpleDescriptor, n_a: usize, n_b: usize) -> Self {
        TruncatedModel {
            a: FactorModel::new(a, n_a),
            b: FactorModel::new(b, n_b),
        }
    }

    /// Smallest model that is faithful for all `tensors`: at least
    /// `truncation`, and one whole block beyond their support.
    pub fn fitting(truncation: usize, tensors: &[&TensorElement]) -> Self {
        let (a, b) = tensors[0].descriptors();
        let (mut sa, mut sb) = (0, 0);
        for t in tensors {
            let (x, y) = t.support_bound();
            sa = sa.max(x);
            sb = sb.max(y);
        }
        let n_a = truncation.max((a.blocks_covering(sa) + 1) * a.block_size());
        let n_b = truncation.max((b.blocks_covering(sb) + 1) * b.block_size());
        Self::new(a, b, n_a, n_b)
    }

    pub fn sizes(&self) -> (usize, usize) {
        (self.a.n, self.b.n)
    }

    pub fn dim(&self) -> usize {
        self.a.dim() * self.b.dim()
    }

    fn coords(&self, t: &TensorElement) -> SparseVec {
        let db = self.b.dim();
        let mut out = SparseVec::new();
        for (x, y) in t.pairs() {
            let cx = self.a.sparse_coords(x);
            let cy = self.b.sparse_coords(y);
            for (i, p) in &cx {
                for (j, q) in &cy {
                    add_to(&mut out, i * db + j, &(p * q));
                }
            }
        }
        out
    }

    fn apply_a(&self, map: &SparseMap, v: &SparseVec) -> SparseVec {
        let db = self.b.dim();
        let mut out = SparseVec::new();
        for (&key, c) in v {
            let (i, j) = (key / db, key % db);
            for (k, m) in &map[i] {
                add_to(&mut out, k * db + j, &(c * m));
            }
        }
        out
    }

    fn apply_b(&self, map: &SparseMap, v: &SparseVec) -> SparseVec {
        let db = self.b.dim();
        let mut out = SparseVec::new();
        for (&key, c) in v {
            let (i, j) = (key / db, key % db);
            for (k, m) in &map[j] {
                add_to(&mut out, i * db + k, &(c * m));
            }
        }
        out
    }

    /// The ideal of `A_n ⊗ B_n` generated by `t`.
    pub fn closure(&self, t: &TensorElement) -> IdealClosure {
        self.close(self.coords(t), &[], None)
    }

    /// Whether `target ∈ ⟨t⟩`; stops as soon as the answer is known.
    pub fn generates(&self, t: &TensorElement, target: &TensorElement) -> bool {
        self.generates_all(t, &[self.coords(target)])
    }

    fn generates_all(&self, t: &TensorElement, targets: &[SparseVec]) -> bool {
        let cl = self.close(self.coords(t), targets, None);
        cl.full || targets.iter().all(|x| cl.ech.reduce(x.clone()).is_empty())
    }

    /// The six admissible ideals with their dimension and a predicate on the
    /// coordinate pair `(i, j)` of `A_n ⊗ B_n` that spans them.
    fn candidates(&self) -> Vec<(AdmissibleTag, usize, Box<dyn Fn(usize, usize) -> bool + '_>)> {
        let (a, b) = (&self.a, &self.b);
        let (ia, ib) = (a.dim() - a.ds, b.dim() - b.ds);
        vec![
            (AdmissibleTag::Zero, 0, Box::new(|_, _| false)),
            (AdmissibleTag::IaIb, ia * ib, Box::new(|i, j| a.in_ideal(i) && b.in_ideal(j))),
            (AdmissibleTag::IaB, ia * b.dim(), Box::new(|i, _| a.in_ideal(i))),
            (AdmissibleTag::AIb, a.dim() * ib, Box::new(|_, j| b.in_ideal(j))),
            (
                AdmissibleTag::Sum,
                a.dim() * b.dim() - a.ds * b.ds,
                Box::new(|i, j| a.in_ideal(i) || b.in_ideal(j)),
            ),
            (AdmissibleTag::Full, a.dim() * b.dim(), Box::new(|_, _| true)),
        ]
    }

    /// Same answer as `closure(t).tag()`, computed with less work.
    ///
    /// The candidates are ideals closed under intersection, so the smallest
    /// one containing `t` contains `⟨t⟩`; equality holds iff its ideal
    /// generators (`e11⊗e11`, `e11⊗1`, `1⊗e11`, `1⊗1`) lie in `⟨t⟩`, and the
    /// closure stops as soon as they do.
    pub fn tag_of(&self, t: &TensorElement) -> Option<AdmissibleTag> {
        let db = self.b.dim();
        let v = self.coords(t);
        let (tag, _, _) = self
            .candidates()
            .into_iter()
            .find(|(_, _, inside)| v.keys().all(|&k| inside(k / db, k % db)))
            .expect("the full space contains everything");
        // coordinates of 1 and e11 in each factor
        let (one_a, e_a, one_b, e_b) = (0, self.a.ds, 0, self.b.ds);
        let at = |i: usize, j: usize| -> SparseVec { [(i * db + j, Rational::one())].into() };
        let targets = match tag {
            AdmissibleTag::Zero => return Some(tag),
            AdmissibleTag::IaIb => vec![at(e_a, e_b)],
            AdmissibleTag::IaB => vec![at(e_a, one_b)],
            AdmissibleTag::AIb => vec![at(one_a, e_b)],
            AdmissibleTag::Sum => vec![at(e_a, one_b), at(one_a, e_b)],
            AdmissibleTag::Full => {
                // ⟨t⟩ is everything iff it contains the sum ideal and its
                // image generates the quotient by it, which is spanned by the
                // scalar-block coordinates
                let sum = [at(e_a, one_b), at(one_a, e_b)];
                if !self.generates_all(t, &sum) {
                    return None;
                }
                let (ds_a, ds_b) = (self.a.ds, self.b.ds);
                let in_sum = move |k: usize| k / db >= ds_a || k % db >= ds_b;
                let image: SparseVec = v.into_iter().filter(|(k, _)| !in_sum(*k)).collect();
                let cl = self.close(image, &[], Some(&in_sum));
                return (cl.full || cl.ech.rows.len() == ds_a * ds_b).then_some(tag);
            }
        };
        self.generates_all(t, &targets).then_some(tag)
    }

    /// BFS closure of `start` under the generator maps. With `modulo`, the
    /// keys it selects span an ideal and are dropped, so the closure is
    /// computed in the quotient by that ideal.
    fn close(
        &self,
        start: SparseVec,
        targets: &[SparseVec],
        modulo: Option<&dyn Fn(usize) -> bool>,
    ) -> IdealClosure {
        let one: SparseVec = [(0, Rational::one())].into();
        let mut ech = Echelon::default();
        let mut queue = VecDeque::new();
        if let Some(v) = ech.insert(start) {
            queue.push_back(v);
        }
        let mut full = false;
        while let Some(v) = queue.pop_front() {
            // an ideal containing 1 ⊗ 1 is everything
            if ech.rows.len() == self.dim() || ech.reduce(one.clone()).is_empty() {
                full = true;
                break;
            }
            if !targets.is_empty() && targets.iter().all(|x| ech.reduce(x.clone()).is_empty()) {
                break;
            }
            let images = self
                .a
                .maps
                .iter()
                .map(|m| self.apply_a(m, &v))
                .chain(self.b.maps.iter().map(|m| self.apply_b(m, &v)));
            for mut w in images {
                if let Some(drop) = modulo {
                    w.retain(|k, _| !drop(*k));
                }
                if let Some(w) = ech.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        IdealClosure {
            model: self.clone(),
            ech,
            full,
        }
    }
}

fn add_to(v: &mut SparseVec, key: usize, c: &Rational) {
    if c.is_zero() {
        return;
    }
    match v.get_mut(&key) {
        Some(x) => {
            *x += c;
            if x.is_zero() {
                v.remove(&key);
            }
        }
        None => {
            v.insert(key, c.clone());
        }
    }
}

/// Rows keyed by their leading (smallest) coordinate, leading coefficient 1.
#[derive(Debug, Clone, Default)]
struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut from = 0;
        loop {
            let Some(key) = v.range(from..).map(|(&k, _)| k).find(|k| self.rows.contains_key(k)) else {
                return v;
            };
            let c = v[&key].clone();
            for (&k, x) in &self.rows[&key] {
                add_to(&mut v, k, &-(&c * x));
            }
            from = key + 1;
        }
    }

    /// Adds `v` if it is new; returns the reduced vector that was added.
    fn insert(&mut self, v: SparseVec) -> Option<SparseVec> {
        let mut v = self.reduce(v);
        let (&lead, c) = v.iter().next()?;
        let inv = Rational::one() / c;
        for x in v.values_mut() {
            *x *= &inv;
        }
        self.rows.insert(lead, v.clone());
        Some(v)
    }
}

#[derive(Debug, Clone)]
pub struct IdealClosure {
    model: TruncatedModel,
    ech: Echelon,
    /// Closure stopped early because it reached the whole algebra.
    full: bool,
}

impl IdealClosure {
    pub fn dim(&self) -> usize {
        if self.full {
            self.model.dim()
        } else {
            self.ech.rows.len()
        }
    }

    pub fn contains(&self, t: &TensorElement) -> bool {
        self.full || self.ech.reduce(self.model.coords(t)).is_empty()
    }

    /// The admissible ideal equal to this closure, or `None` if it matches
    /// none of them.
    pub fn tag(&self) -> Option<AdmissibleTag> {
        if self.full {
            return Some(AdmissibleTag::Full);
        }
        let db = self.model.b.dim();
        self.model.candidates().into_iter().find_map(|(tag, dim, inside)| {
            let fits = self.dim() == dim
                && self.ech.rows.values().all(|row| row.keys().all(|&k| inside(k / db, k % db)));
            fits.then_some(tag)
        })
    }
}

/// Convenience: closure of `t` in the smallest faithful model.
pub fn oracle_tag(t: &TensorElement, truncation: usize) -> Option<AdmissibleTag> {
    TruncatedModel::fitting(truncation, &[t]).closure(t).tag()
}
