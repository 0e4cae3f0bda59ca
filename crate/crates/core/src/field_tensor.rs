//! `K ⊗_Q L` for number fields, presented as `L[x]/(m_K)` with `x̄ = α ⊗ 1`.
//!
//! In characteristic zero `m_K` is square-free over `L`, so the ring is a
//! product of fields, one per irreducible factor of `m_K` over `L`.

use crate::error::{Error, Result};
use crate::exact::factor::factor_over_nf;
use crate::exact::number_field::{NFElement, NumberField};
use crate::exact::poly::Poly;

/// An element of `L[x]/(m_K)`, stored as its reduced representative.
#[derive(Debug, Clone, PartialEq)]
pub struct RingElement {
    rep: Poly<NFElement>,
}

impl RingElement {
    pub fn rep(&self) -> &Poly<NFElement> {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    /// The pairs `(α^j, ℓ_j)` with `self = Σ α^j ⊗ ℓ_j`, skipping zero `ℓ_j`.
    pub fn elementary_terms(&self, ring: &FieldTensorRing) -> Vec<(NFElement, NFElement)> {
        let alpha = ring.left.generator();
        self.rep
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (alpha.pow(j), c.clone()))
            .collect()
    }
}

/// One field factor of `K ⊗ L`.
#[derive(Debug, Clone, PartialEq)]
pub struct Component {
    /// Monic irreducible factor of `m_K` over `L`; the component is
    /// `L[x]/(factor)`.
    pub factor: Poly<NFElement>,
    pub idempotent: RingElement,
}

impl Component {
    /// Degree of the component over `L`.
    pub fn relative_degree(&self) -> usize {
        self.factor.degree().unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    pub components: Vec<Component>,
}

impl Decomposition {
    pub fn component_degrees(&self) -> Vec<usize> {
        self.components.iter().map(Component::relative_degree).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FieldTensorRing {
    left: NumberField,
    right: NumberField,
    modulus: Poly<NFElement>,
    factors: Vec<Poly<NFElement>>,
}

impl FieldTensorRing {
    /// Builds `K ⊗ L` and factors `m_K` over `L`.
    pub fn build(left: &NumberField, right: &NumberField, degree_bound: usize) -> Result<Self> {
        let modulus = left.minpoly().map(right, |c| right.from_rational_elem(c));
        let fac = factor_over_nf(&modulus, right, degree_bound)?;
        debug_assert!(fac.factors.iter().all(|(_, m)| *m == 1));
        Ok(FieldTensorRing {
            left: left.clone(),
            right: right.clone(),
            modulus,
            factors: fac.factors.into_iter().map(|(g, _)| g).collect(),
        })
    }

    pub fn left(&self) -> &NumberField {
        &self.left
    }

    pub fn right(&self) -> &NumberField {
        &self.right
    }

    pub fn modulus(&self) -> &Poly<NFElement> {
        &self.modulus
    }

    pub fn factors(&self) -> &[Poly<NFElement>] {
        &self.factors
    }

    pub fn is_field(&self) -> bool {
        self.factors.len() == 1
    }

    /// Dimension over `Q`, counted from the monomial basis `x̄^i · β^j`.
    pub fn dimension(&self) -> usize {
        self.basis().len()
    }

    /// The `Q`-basis `x̄^i β^j`, `i < deg K`, `j < deg L`.
    pub fn basis(&self) -> Vec<RingElement> {
        let beta = self.right.generator();
        let mut out = Vec::new();
        for i in 0..self.left.degree() {
            for j in 0..self.right.degree() {
                out.push(self.reduce(Poly::monomial(&self.right, beta.pow(j), i)));
            }
        }
        out
    }

    pub fn reduce(&self, p: Poly<NFElement>) -> RingElement {
        RingElement {
            rep: p.rem(&self.modulus, &self.right).expect("modulus is nonzero"),
        }
    }

    pub fn one(&self) -> RingElement {
        self.reduce(Poly::one(&self.right))
    }

    /// `x̄`, the image of `α ⊗ 1`.
    pub fn x(&self) -> RingElement {
        self.reduce(Poly::x(&self.right))
    }

    /// The image of `1 ⊗ ℓ`.
    pub fn scalar(&self, l: NFElement) -> RingElement {
        self.reduce(Poly::constant(&self.right, l))
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        RingElement {
            rep: a.rep.add(&b.rep, &self.right),
        }
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        RingElement {
            rep: a.rep.sub(&b.rep, &self.right),
        }
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.reduce(a.rep.mul(&b.rep, &self.right))
    }

    /// Splits the ring into fields via CRT idempotents
    /// `e_i = (m/g_i)·((m/g_i)^{-1} mod g_i)`.
    pub fn decompose(&self) -> Decomposition {
        let field = &self.right;
        if self.is_field() {
            return Decomposition {
                components: vec![Component {
                    factor: self.factors[0].clone(),
                    idempotent: self.one(),
                }],
            };
        }
        let components: Vec<Component> = self
            .factors
            .iter()
            .map(|g| {
                let cofactor = self.modulus.div_exact(g, field).expect("factor divides modulus");
                let (one, s, _) = cofactor.ext_gcd(g, field);
                debug_assert_eq!(one, Poly::one(field));
                Component {
                    factor: g.clone(),
                    idempotent: self.reduce(cofactor.mul(&s, field)),
                }
            })
            .collect();
        let total = components
            .iter()
            .fold(self.reduce(Poly::zero()), |acc, c| self.add(&acc, &c.idempotent));
        assert_eq!(total, self.one(), "idempotents must sum to one");
        for (i, a) in components.iter().enumerate() {
            for (j, b) in components.iter().enumerate() {
                let prod = self.mul(&a.idempotent, &b.idempotent);
                let expected = if i == j { a.idempotent.clone() } else { self.reduce(Poly::zero()) };
                assert_eq!(prod, expected, "idempotents must be orthogonal");
            }
        }
        Decomposition { components }
    }

    /// `(g(x̄), (m/g)(x̄))` for the first irreducible factor `g`.
    pub fn zero_divisor_pair(&self) -> Result<(RingElement, RingElement)> {
        if self.is_field() {
            return Err(Error::RingIsField);
        }
        let g = &self.factors[0];
        let cofactor = self.modulus.div_exact(g, &self.right)?;
        Ok((self.reduce(g.clone()), self.reduce(cofactor)))
    }

    /// The multiplication map `K ⊗ K → K`, `x ⊗ y ↦ xy`, i.e. `x̄ ↦ α`.
    /// Requires `K = L`.
    pub fn multiply_out(&self, a: &RingElement) -> Result<NFElement> {
        if self.left != self.right {
            return Err(Error::FieldMismatch);
        }
        Ok(a.rep.eval(&self.right.generator(), &self.right))
    }
}

/// `α ⊗ 1 − 1 ⊗ α` in `K ⊗ K`, i.e. `x̄ − α`. Nonzero, but killed by the
/// multiplication map.
pub fn multiplication_kernel_witness(k: &NumberField, degree_bound: usize) -> Result<(FieldTensorRing, RingElement)> {
    if k.degree() < 2 {
        return Err(Error::Precondition(
            "the generator of Q lies in Q, so the kernel element vanishes".into(),
        ));
    }
    let ring = FieldTensorRing::build(k, k, degree_bound)?;
    let w = ring.sub(&ring.x(), &ring.scalar(k.generator()));
    Ok((ring, w))
}
