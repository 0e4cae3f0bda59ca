use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::Zero;

use super::field::{Field, Rationals};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Dense univariate polynomial, lowest degree first.
///
/// The coefficient field is passed to every operation; the only invariant kept
/// here is that the leading stored coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E: Clone + PartialEq + std::fmt::Debug> Poly<E> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn new<F: Field<Elem = E>>(field: &F, mut coeffs: Vec<E>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant<F: Field<Elem = E>>(field: &F, c: E) -> Self {
        Self::new(field, vec![c])
    }

    pub fn one<F: Field<Elem = E>>(field: &F) -> Self {
        Self::constant(field, field.one())
    }

    /// The polynomial `x`.
    pub fn x<F: Field<Elem = E>>(field: &F) -> Self {
        Poly {
            coeffs: vec![field.zero(), field.one()],
        }
    }

    pub fn monomial<F: Field<Elem = E>>(field: &F, c: E, degree: usize) -> Self {
        let mut coeffs = vec![field.zero(); degree];
        coeffs.push(c);
        Self::new(field, coeffs)
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    /// Coefficient of `x^i`, or zero past the degree.
    pub fn coeff<F: Field<Elem = E>>(&self, field: &F, i: usize) -> E {
        self.coeffs.get(i).cloned().unwrap_or_else(|| field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn is_monic<F: Field<Elem = E>>(&self, field: &F) -> bool {
        self.lead().is_some_and(|c| field.is_one(c))
    }

    pub fn map<F2: Field>(&self, target: &F2, f: impl Fn(&E) -> F2::Elem) -> Poly<F2::Elem> {
        Poly::new(target, self.coeffs.iter().map(f).collect())
    }

    pub fn add<F: Field<Elem = E>>(&self, other: &Self, field: &F) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => field.add(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::new(field, coeffs)
    }

    pub fn neg<F: Field<Elem = E>>(&self, field: &F) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| field.neg(c)).collect(),
        }
    }

    pub fn sub<F: Field<Elem = E>>(&self, other: &Self, field: &F) -> Self {
        self.add(&other.neg(field), field)
    }

    pub fn scale<F: Field<Elem = E>>(&self, c: &E, field: &F) -> Self {
        Self::new(field, self.coeffs.iter().map(|a| field.mul(a, c)).collect())
    }

    pub fn mul<F: Field<Elem = E>>(&self, other: &Self, field: &F) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if field.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = field.add(&out[i + j], &field.mul(a, b));
            }
        }
        Self::new(field, out)
    }

    pub fn pow<F: Field<Elem = E>>(&self, mut e: usize, field: &F) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, field);
            }
            base = base.mul(&base, field);
            e >>= 1;
        }
        acc
    }

    /// Euclidean division: `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn divmod<F: Field<Elem = E>>(&self, divisor: &Self, field: &F) -> Result<(Self, Self)> {
        let dl = divisor.lead().ok_or(Error::DivisionByZero)?;
        let inv_lead = field.inv(dl).expect("nonzero leading coefficient");
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![field.zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = field.mul(&rem[k + dd], &inv_lead);
            if field.is_zero(&c) {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = field.sub(&rem[k + j], &field.mul(&c, d));
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(field, quot), Self::new(field, rem)))
    }

    pub fn rem<F: Field<Elem = E>>(&self, divisor: &Self, field: &F) -> Result<Self> {
        Ok(self.divmod(divisor, field)?.1)
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn div_exact<F: Field<Elem = E>>(&self, divisor: &Self, field: &F) -> Result<Self> {
        let (q, r) = self.divmod(divisor, field)?;
        if !r.is_zero() {
            return Err(Error::Precondition("inexact polynomial division".into()));
        }
        Ok(q)
    }

    /// Scales to a monic polynomial; the zero polynomial stays zero.
    pub fn monic<F: Field<Elem = E>>(&self, field: &F) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some(l) => self.scale(&field.inv(l).unwrap(), field),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd<F: Field<Elem = E>>(&self, other: &Self, field: &F) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b, field).unwrap();
            a = b;
            b = r;
        }
        a.monic(field)
    }

    /// Returns `(g, s, t)` with `s·self + t·other = g`, `g` the monic gcd.
    pub fn ext_gcd<F: Field<Elem = E>>(&self, other: &Self, field: &F) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(field), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one(field));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1, field).unwrap();
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1, field), field);
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1, field), field);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.lead() {
            None => (r0, s0, t0),
            Some(l) => {
                let il = field.inv(l).unwrap();
                (r0.scale(&il, field), s0.scale(&il, field), t0.scale(&il, field))
            }
        }
    }

    pub fn derivative<F: Field<Elem = E>>(&self, field: &F) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| field.mul(c, &field.from_rational(&Rational::from_integer(i.into()))))
            .collect();
        Self::new(field, coeffs)
    }

    pub fn eval<F: Field<Elem = E>>(&self, x: &E, field: &F) -> E {
        self.coeffs
            .iter()
            .rev()
            .fold(field.zero(), |acc, c| field.add(&field.mul(&acc, x), c))
    }

    /// Substitutes another polynomial: `self(g(x))`.
    pub fn compose<F: Field<Elem = E>>(&self, g: &Self, field: &F) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            acc.mul(g, field).add(&Self::constant(field, c.clone()), field)
        })
    }

    /// `self(x + c)`.
    pub fn shift<F: Field<Elem = E>>(&self, c: &E, field: &F) -> Self {
        let lin = Self::new(field, vec![c.clone(), field.one()]);
        self.compose(&lin, field)
    }

    /// `self^e mod modulus` for a big exponent.
    pub fn pow_mod<F: Field<Elem = E>>(&self, e: &BigUint, modulus: &Self, field: &F) -> Self {
        let mut acc = Self::one(field).rem(modulus, field).unwrap();
        let base = self.rem(modulus, field).unwrap();
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc, field).rem(modulus, field).unwrap();
            if e.bit(i) {
                acc = acc.mul(&base, field).rem(modulus, field).unwrap();
            }
        }
        acc
    }

    /// Yun's square-free decomposition over a characteristic-zero field.
    ///
    /// Returns monic `(g_i, i)` with `self = lead · Π g_i^i`, each `g_i`
    /// square-free and pairwise coprime; trivial `g_i` are omitted.
    pub fn square_free_decomposition<F: Field<Elem = E>>(&self, field: &F) -> Vec<(Self, usize)> {
        let f = self.monic(field);
        if f.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let df = f.derivative(field);
        let mut a = f.gcd(&df, field);
        let mut b = f.div_exact(&a, field).unwrap();
        let mut c = df.div_exact(&a, field).unwrap();
        let mut d = c.sub(&b.derivative(field), field);
        let mut out = Vec::new();
        let mut i = 1;
        loop {
            a = b.gcd(&d, field);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_exact(&a, field).unwrap();
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.div_exact(&a, field).unwrap();
            d = c.sub(&b.derivative(field), field);
            i += 1;
        }
        out
    }

    pub fn is_square_free<F: Field<Elem = E>>(&self, field: &F) -> bool {
        self.gcd(&self.derivative(field), field).degree() == Some(0)
    }
}

impl Poly<Rational> {
    /// Convenience constructor from integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(&Rationals, coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn from_rationals(coeffs: Vec<Rational>) -> Self {
        Poly::new(&Rationals, coeffs)
    }
}

/// Total order by degree, then coefficients from the constant term upwards.
pub fn cmp_by<E>(a: &Poly<E>, b: &Poly<E>, cmp: impl Fn(&E, &E) -> Ordering) -> Ordering {
    a.coeffs.len().cmp(&b.coeffs.len()).then_with(|| {
        a.coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| cmp(x, y))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    })
}

/// Human-readable rendering of a rational polynomial, highest degree first.
pub fn display_rational(p: &Poly<Rational>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, c) in p.coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let sign = if c < &Rational::zero() { "-" } else { "+" };
        let mag = if c < &Rational::zero() { -c } else { c.clone() };
        if out.is_empty() {
            if sign == "-" {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        let one = Rational::from_integer(1.into());
        match i {
            0 => out.push_str(&mag.to_string()),
            _ => {
                if mag != one {
                    out.push_str(&format!("{mag}*"));
                }
                out.push('x');
                if i > 1 {
                    out.push_str(&format!("^{i}"));
                }
            }
        }
    }
    out
}
