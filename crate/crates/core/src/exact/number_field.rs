use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use super::factor::factor_over_q;
use super::field::{Field, Rationals};
use super::linalg::determinant;
use super::poly::{display_rational, Poly};
use super::rational::{int, Rational};
use crate::error::{Error, Result};

/// A finite extension `Q(α) = Q[x]/(m)` with `m` monic irreducible.
///
/// Cheap to clone; elements hold a handle to their field.
#[derive(Clone)]
pub struct NumberField {
    inner: Arc<Inner>,
}

struct Inner {
    minpoly: Poly<Rational>,
    degree: usize,
    // coords of α^d, used to fold products back into the power basis
    alpha_d: Vec<Rational>,
}

impl NumberField {
    /// Validates irreducibility over `Q` and normalizes to monic.
    pub fn new(minpoly: Poly<Rational>) -> Result<Self> {
        let degree = minpoly
            .degree()
            .filter(|&d| d >= 1)
            .ok_or_else(|| Error::NotIrreducible(display_rational(&minpoly)))?;
        let minpoly = minpoly.monic(&Rationals);
        let fac = factor_over_q(&minpoly)?;
        if fac.factors.len() != 1 || fac.factors[0].1 != 1 {
            return Err(Error::NotIrreducible(display_rational(&minpoly)));
        }
        Ok(Self::new_unchecked(minpoly, degree))
    }

    fn new_unchecked(minpoly: Poly<Rational>, degree: usize) -> Self {
        // α^d = -(m_0 + m_1 α + ... + m_{d-1} α^{d-1})
        let alpha_d = (0..degree).map(|i| -minpoly.coeff(&Rationals, i)).collect();
        NumberField {
            inner: Arc::new(Inner {
                minpoly,
                degree,
                alpha_d,
            }),
        }
    }

    /// `Q` itself, presented as `Q[x]/(x)`.
    pub fn rationals() -> Self {
        Self::new_unchecked(Poly::from_ints(&[0, 1]), 1)
    }

    /// Parses integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Result<Self> {
        Self::new(Poly::from_ints(coeffs))
    }

    pub fn minpoly(&self) -> &Poly<Rational> {
        &self.inner.minpoly
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn is_rationals(&self) -> bool {
        self.inner.degree == 1
    }

    pub fn element(&self, coords: Vec<Rational>) -> Result<NFElement> {
        if coords.len() != self.degree() {
            return Err(Error::Parse(format!(
                "expected {} coordinates, got {}",
                self.degree(),
                coords.len()
            )));
        }
        Ok(NFElement {
            field: self.clone(),
            coords,
        })
    }

    pub fn from_rational_elem(&self, q: &Rational) -> NFElement {
        let mut coords = vec![Rational::zero(); self.degree()];
        coords[0] = q.clone();
        NFElement {
            field: self.clone(),
            coords,
        }
    }

    pub fn from_int(&self, n: i64) -> NFElement {
        self.from_rational_elem(&int(n))
    }

    /// The class of `x`; for `Q` this is `0`.
    pub fn generator(&self) -> NFElement {
        let d = self.degree();
        if d == 1 {
            let root = -self.minpoly().coeff(&Rationals, 0);
            return self.from_rational_elem(&root);
        }
        let mut coords = vec![Rational::zero(); d];
        coords[1] = int(1);
        NFElement {
            field: self.clone(),
            coords,
        }
    }

    /// Reduces a rational polynomial in the generator.
    pub fn from_poly(&self, p: &Poly<Rational>) -> NFElement {
        let r = p.rem(self.minpoly(), &Rationals).unwrap();
        let mut coords: Vec<Rational> = r.into_coeffs();
        coords.resize(self.degree(), Rational::zero());
        NFElement {
            field: self.clone(),
            coords,
        }
    }

    fn fold(&self, mut wide: Vec<Rational>) -> Vec<Rational> {
        let d = self.degree();
        if d == 1 {
            // Q[x]/(x - r): evaluate at r
            let r = -self.minpoly().coeff(&Rationals, 0);
            let mut acc = Rational::zero();
            for c in wide.iter().rev() {
                acc = acc * &r + c;
            }
            return vec![acc];
        }
        for k in (d..wide.len()).rev() {
            let c = std::mem::take(&mut wide[k]);
            if c.is_zero() {
                continue;
            }
            // α^k = α^(k-d) · α^d, folded one level at a time from the top
            for (i, a) in self.inner.alpha_d.iter().enumerate() {
                wide[k - d + i] += &c * a;
            }
        }
        wide.truncate(d);
        wide.resize(d, Rational::zero());
        wide
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.minpoly == other.inner.minpoly
    }
}

impl Eq for NumberField {}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[x]/({})", display_rational(self.minpoly()))
    }
}

/// Element of a [`NumberField`] in the power basis of its generator.
#[derive(Clone, PartialEq, Eq)]
pub struct NFElement {
    field: NumberField,
    coords: Vec<Rational>,
}

impl NFElement {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0] == int(1) && self.coords[1..].iter().all(Zero::is_zero)
    }

    /// `Some(q)` when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coords[1..].iter().all(Zero::is_zero).then(|| &self.coords[0])
    }

    pub fn as_poly(&self) -> Poly<Rational> {
        Poly::from_rationals(self.coords.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.field, other.field);
        NFElement {
            field: self.field.clone(),
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.field, other.field);
        NFElement {
            field: self.field.clone(),
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        NFElement {
            field: self.field.clone(),
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        NFElement {
            field: self.field.clone(),
            coords: self.coords.iter().map(|a| a * q).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.field, other.field);
        let d = self.coords.len();
        let mut wide = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if !b.is_zero() {
                    wide[i + j] += a * b;
                }
            }
        }
        NFElement {
            field: self.field.clone(),
            coords: self.field.fold(wide),
        }
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = self.field.from_int(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via the extended gcd with the minimal polynomial.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let (g, s, _) = self.as_poly().ext_gcd(self.field.minpoly(), &Rationals);
        debug_assert_eq!(g.degree(), Some(0));
        Ok(self.field.from_poly(&s))
    }

    /// Matrix of `y ↦ self·y` in the power basis; entry `[i][j]` is coordinate
    /// `i` of `self·α^j`.
    pub fn multiplication_matrix(&self) -> Vec<Vec<Rational>> {
        let d = self.field.degree();
        let mut cols = Vec::with_capacity(d);
        let mut basis = self.field.from_int(1);
        let alpha = self.field.generator();
        for _ in 0..d {
            cols.push(self.mul(&basis).coords);
            basis = basis.mul(&alpha);
        }
        (0..d).map(|i| (0..d).map(|j| cols[j][i].clone()).collect()).collect()
    }

    /// Field norm down to `Q`.
    pub fn norm(&self) -> Rational {
        determinant(&Rationals, &self.multiplication_matrix())
    }
}

impl PartialOrd for NFElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NFElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coords.cmp(&other.coords)
    }
}

impl fmt::Debug for NFElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl Field for NumberField {
    type Elem = NFElement;

    fn zero(&self) -> NFElement {
        self.from_int(0)
    }
    fn one(&self) -> NFElement {
        self.from_int(1)
    }
    fn is_zero(&self, a: &NFElement) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &NFElement) -> bool {
        a.is_one()
    }
    fn add(&self, a: &NFElement, b: &NFElement) -> NFElement {
        a.add(b)
    }
    fn sub(&self, a: &NFElement, b: &NFElement) -> NFElement {
        a.sub(b)
    }
    fn neg(&self, a: &NFElement) -> NFElement {
        a.neg()
    }
    fn mul(&self, a: &NFElement, b: &NFElement) -> NFElement {
        a.mul(b)
    }
    fn inv(&self, a: &NFElement) -> Option<NFElement> {
        a.inverse().ok()
    }
    fn from_rational(&self, q: &Rational) -> NFElement {
        self.from_rational_elem(q)
    }
}
