//! Random inputs shared by the integration tests.
#![allow(dead_code)]

use rand::Rng;
use tensorideal_core::exact::rational::frac;
use tensorideal_core::{
    AlgElement, FinOp, NFElement, NearlySimpleDescriptor, NumberField, Poly, Rational, Tensor, TensorElement,
};

pub fn qi() -> NumberField {
    NumberField::from_ints(&[1, 0, 1]).unwrap()
}

/// `Q`, quadratic, cubic and quartic fields.
pub fn field_corpus() -> Vec<NumberField> {
    [
        &[0, 1][..],
        &[1, 0, 1],
        &[-2, 0, 1],
        &[-3, 0, 1],
        &[5, 0, 1],
        &[1, 1, 1],
        &[-2, 0, 0, 1],
        &[-3, 0, 0, 1],
        &[1, -1, 0, 1],
        &[1, 0, 0, 0, 1],
        &[-2, 0, 0, 0, 1],
        &[1, 1, 1, 1, 1],
        &[-5, 0, 0, 0, 0, 1],
    ]
    .iter()
    .map(|c| NumberField::from_ints(c).unwrap())
    .collect()
}

/// Every (K_s, K_e) pair over `Q`, `Q(i)` and `Q(√2)`.
pub fn descriptor_corpus() -> Vec<NearlySimpleDescriptor> {
    let fs = [NumberField::rationals(), qi(), NumberField::from_ints(&[-2, 0, 1]).unwrap()];
    let mut out = Vec::new();
    for s in &fs {
        for e in &fs {
            out.push(NearlySimpleDescriptor::new(s.clone(), e.clone()));
        }
    }
    out
}

pub fn rational<R: Rng>(rng: &mut R) -> Rational {
    frac(rng.gen_range(-5..=5), rng.gen_range(1..=3))
}

pub fn nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let q = rational(rng);
        if q != frac(0, 1) {
            return q;
        }
    }
}

pub fn nf<R: Rng>(rng: &mut R, k: &NumberField) -> NFElement {
    k.element((0..k.degree()).map(|_| rational(rng)).collect()).unwrap()
}

pub fn nonzero_nf<R: Rng>(rng: &mut R, k: &NumberField) -> NFElement {
    loop {
        let x = nf(rng, k);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn poly<R: Rng>(rng: &mut R, degree: usize) -> Poly<Rational> {
    let mut c: Vec<Rational> = (0..degree).map(|_| rational(rng)).collect();
    c.push(nonzero_rational(rng));
    Poly::from_rationals(c)
}

/// Up to `nnz` random entries with indices in `1..=n`.
pub fn finop<R: Rng>(rng: &mut R, k: &NumberField, n: usize, nnz: usize) -> FinOp {
    FinOp::from_entries((0..nnz).map(|_| ((rng.gen_range(1..=n), rng.gen_range(1..=n)), nf(rng, k))))
}

/// Scalar part zero with probability `1 - p_scalar`.
pub fn alg<R: Rng>(rng: &mut R, d: &NearlySimpleDescriptor, n: usize, p_scalar: f64) -> AlgElement {
    let scalar = if rng.gen_bool(p_scalar) { nf(rng, d.scalar_field()) } else { d.scalar_field().from_int(0) };
    let nnz = rng.gen_range(0..=3);
    d.element(scalar, finop(rng, d.entry_field(), n, nnz)).unwrap()
}

pub fn tensor<R: Rng>(
    rng: &mut R,
    a: &NearlySimpleDescriptor,
    b: &NearlySimpleDescriptor,
    max_rank: usize,
    n: usize,
) -> TensorElement {
    let len = rng.gen_range(0..=max_rank);
    let pairs = (0..len).map(|_| (alg(rng, a, n, 0.4), alg(rng, b, n, 0.4))).collect();
    Tensor::new(a.clone(), b.clone(), pairs)
}

/// Brute-force irreducibility over `Q` for degree at most 4.
pub mod brute {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Signed, Zero};
    use tensorideal_core::{Poly, Rational};

    /// Primitive integer multiple, positive leading coefficient.
    pub fn integer_coeffs(p: &Poly<Rational>) -> Vec<BigInt> {
        let l = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut v: Vec<BigInt> = p.coeffs().iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect();
        let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if v.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
        for c in v.iter_mut() {
            *c = &*c / &g * &sign;
        }
        v
    }

    fn divisors(n: &BigInt) -> Vec<BigInt> {
        let n = n.abs();
        let mut out = Vec::new();
        let mut d = BigInt::one();
        while &d * &d <= n {
            if (&n % &d).is_zero() {
                out.push(d.clone());
                out.push(&n / &d);
            }
            d += 1;
        }
        out
    }

    fn eval(c: &[BigInt], x: &Rational) -> Rational {
        c.iter().rev().fold(Rational::zero(), |acc, k| acc * x + Rational::from_integer(k.clone()))
    }

    pub fn has_rational_root(c: &[BigInt]) -> bool {
        if c[0].is_zero() {
            return true;
        }
        for p in divisors(&c[0]) {
            for q in divisors(c.last().unwrap()) {
                for s in [1, -1] {
                    let x = Rational::new(&p * s, q.clone());
                    if eval(c, &x).is_zero() {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Monic integer quartic `x^4 + a x^3 + b x^2 + c x + d` splits into two
    /// integer quadratics.
    fn quadratic_split(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> bool {
        if d.is_zero() {
            return true;
        }
        for q0 in divisors(d) {
            for q in [q0.clone(), -q0] {
                let s = d / &q;
                if q != s {
                    let num = c - &q * a;
                    let den = &s - &q;
                    if !(&num % &den).is_zero() {
                        continue;
                    }
                    let p = num / den;
                    let r = a - &p;
                    if &p * &r + &q + &s == *b && &p * &s + &q * &r == *c {
                        return true;
                    }
                } else if *c == &q * a {
                    // p + r = a, p r = b - 2q
                    let disc: BigInt = a * a - BigInt::from(4) * (b - BigInt::from(2) * &q);
                    if !disc.is_negative() {
                        let root = disc.sqrt();
                        if &root * &root == disc && ((a + &root) % BigInt::from(2)).is_zero() {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    pub fn is_irreducible(p: &Poly<Rational>) -> bool {
        let deg = p.degree().expect("nonzero");
        assert!((1..=4).contains(&deg));
        if deg == 1 {
            return true;
        }
        let c = integer_coeffs(p);
        if has_rational_root(&c) {
            return false;
        }
        if deg < 4 {
            return true;
        }
        // monic transform: L^3 p(y / L)
        let l = c[4].clone();
        let a = c[3].clone();
        let b = &c[2] * &l;
        let cc = &c[1] * &l * &l;
        let d = &c[0] * &l * &l * &l;
        !quadratic_split(&a, &b, &cc, &d)
    }
}

/// Determinant by Gaussian elimination.
pub fn det(mut m: Vec<Vec<Rational>>) -> Rational {
    use num_traits::{One, Zero};
    let n = m.len();
    let mut d = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d *= &m[c][c];
        for r in c + 1..n {
            let f = &m[r][c] / &m[c][c];
            for k in c..n {
                let sub = &f * &m[c][k];
                m[r][k] -= sub;
            }
        }
    }
    d
}

/// Sylvester resultant of two nonconstant polynomials.
pub fn resultant(p: &Poly<Rational>, q: &Poly<Rational>) -> Rational {
    use num_traits::Zero;
    let (m, n) = (p.degree().unwrap(), q.degree().unwrap());
    let size = m + n;
    let mut rows = Vec::new();
    for (poly, deg, copies) in [(p, m, n), (q, n, m)] {
        for s in 0..copies {
            let mut row = vec![Rational::zero(); size];
            for (i, c) in poly.coeffs().iter().enumerate() {
                row[s + deg - i] = c.clone();
            }
            rows.push(row);
        }
    }
    det(rows)
}
