//! Factorization over `Q` (square-free split, then Zassenhaus) and over
//! number fields (Trager's norm method).

mod hensel;
mod modular;

pub use modular::factor_squarefree_mod_p;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::field::{Field, Rationals};
use super::number_field::{NFElement, NumberField};
use super::poly::{cmp_by, Poly};
use super::rational::{int, Rational};
use crate::error::{Error, Result};

/// `p = unit · Π factor^multiplicity`, factors monic irreducible and sorted by
/// degree, then coefficients from the constant term up.
#[derive(Debug, Clone, PartialEq)]
pub struct Factorization<E> {
    pub unit: E,
    pub factors: Vec<(Poly<E>, usize)>,
}

impl<E: Clone + PartialEq + std::fmt::Debug> Factorization<E> {
    /// Multiplies everything back together.
    pub fn expand<F: Field<Elem = E>>(&self, field: &F) -> Poly<E> {
        self.factors
            .iter()
            .fold(Poly::constant(field, self.unit.clone()), |acc, (g, m)| {
                acc.mul(&g.pow(*m, field), field)
            })
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// Factors a nonzero rational polynomial into monic irreducibles over `Q`.
pub fn factor_over_q(p: &Poly<Rational>) -> Result<Factorization<Rational>> {
    let unit = p.lead().cloned().ok_or(Error::ZeroPolynomial)?;
    let mut factors = Vec::new();
    for (part, mult) in p.square_free_decomposition(&Rationals) {
        for g in factor_squarefree_q(&part) {
            factors.push((g, mult));
        }
    }
    factors.sort_by(|(a, _), (b, _)| cmp_by(a, b, |x, y| x.cmp(y)));
    Ok(Factorization { unit, factors })
}

/// Monic irreducible factors of a monic square-free rational polynomial.
fn factor_squarefree_q(g: &Poly<Rational>) -> Vec<Poly<Rational>> {
    let n = g.degree().unwrap();
    if n <= 1 {
        return vec![g.clone()];
    }
    // clear denominators: h = den·g, primitive with leading coefficient L
    let den = g
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let h: Vec<BigInt> = g.coeffs().iter().map(|c| (c * &den).to_integer()).collect();
    let content = h.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let h: Vec<BigInt> = h.iter().map(|c| c / &content).collect();
    let lead = h[n].clone();
    // monic integer H(y) = L^(n-1) h(y/L)
    let monic: Vec<BigInt> = h
        .iter()
        .enumerate()
        .map(|(j, c)| if j == n { BigInt::one() } else { c * lead.pow((n - 1 - j) as u32) })
        .collect();
    hensel::factor_monic_squarefree(&monic)
        .into_iter()
        .map(|f| {
            // undo the substitution: G(Lx) / L^deg G
            let d = f.len() - 1;
            let coeffs = f
                .iter()
                .enumerate()
                .map(|(j, c)| Rational::new(c.clone(), lead.pow((d - j) as u32)))
                .collect();
            Poly::from_rationals(coeffs)
        })
        .collect()
}

/// Factors a nonzero polynomial over `field` into monic irreducibles.
///
/// Degrees above `degree_bound` are rejected. Over `Q` this is
/// [`factor_over_q`]; otherwise each square-free part is handled by Trager's
/// algorithm.
pub fn factor_over_nf(
    p: &Poly<NFElement>,
    field: &NumberField,
    degree_bound: usize,
) -> Result<Factorization<NFElement>> {
    let unit = p.lead().cloned().ok_or(Error::ZeroPolynomial)?;
    let degree = p.degree().unwrap();
    if degree > degree_bound {
        return Err(Error::DegreeBoundExceeded {
            degree,
            bound: degree_bound,
        });
    }
    if p.coeffs().iter().any(|c| c.field() != field) {
        return Err(Error::FieldMismatch);
    }
    let mut factors = Vec::new();
    if field.is_rationals() {
        let q = p.map(&Rationals, |c| c.coords()[0].clone());
        for (g, m) in factor_over_q(&q)?.factors {
            factors.push((g.map(field, |c| field.from_rational_elem(c)), m));
        }
    } else {
        for (part, mult) in p.square_free_decomposition(field) {
            for g in trager(&part, field) {
                factors.push((g, mult));
            }
        }
    }
    factors.sort_by(|(a, _), (b, _)| cmp_by(a, b, |x, y| x.cmp(y)));
    Ok(Factorization { unit, factors })
}

fn trager(q: &Poly<NFElement>, field: &NumberField) -> Vec<Poly<NFElement>> {
    if q.degree() == Some(1) {
        return vec![q.clone()];
    }
    let alpha = field.generator();
    for s in shifts() {
        let sa = alpha.scale(&int(s));
        let shifted = q.shift(&sa.neg(), field);
        let norm = norm_poly(&shifted, field);
        if !norm.is_square_free(&Rationals) {
            continue;
        }
        let fac = factor_over_q(&norm).expect("norm is nonzero");
        if fac.factors.len() == 1 {
            return vec![q.clone()];
        }
        let mut out: Vec<Poly<NFElement>> = fac
            .factors
            .iter()
            .map(|(ni, _)| {
                let lifted = ni.map(field, |c| field.from_rational_elem(c)).shift(&sa, field);
                q.gcd(&lifted, field)
            })
            .filter(|g| g.degree().unwrap_or(0) > 0)
            .collect();
        debug_assert_eq!(out.iter().map(|g| g.degree().unwrap()).sum::<usize>(), q.degree().unwrap());
        out.sort_by(|a, b| cmp_by(a, b, |x, y| x.cmp(y)));
        return out;
    }
    unreachable!("only finitely many shifts give a non-square-free norm")
}

/// 0, 1, -1, 2, -2, ...
fn shifts() -> impl Iterator<Item = i64> {
    (0..).flat_map(|k: i64| if k == 0 { vec![0] } else { vec![k, -k] })
}

/// `Norm_{K/Q}` of a polynomial over `K`, by evaluating at `deg + 1` integer
/// points and interpolating.
pub fn norm_poly(q: &Poly<NFElement>, field: &NumberField) -> Poly<Rational> {
    let Some(n) = q.degree() else {
        return Poly::zero();
    };
    let total = n * field.degree();
    let xs: Vec<Rational> = (0..=total as i64).map(int).collect();
    let ys: Vec<Rational> = xs
        .iter()
        .map(|x| q.eval(&field.from_rational_elem(x), field).norm())
        .collect();
    interpolate(&xs, &ys)
}

/// Newton interpolation through distinct points.
pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> Poly<Rational> {
    let n = xs.len();
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut out = Poly::zero();
    for i in (0..n).rev() {
        let lin = Poly::from_rationals(vec![-xs[i].clone(), int(1)]);
        out = out
            .mul(&lin, &Rationals)
            .add(&Poly::constant(&Rationals, coef[i].clone()), &Rationals);
    }
    out
}
