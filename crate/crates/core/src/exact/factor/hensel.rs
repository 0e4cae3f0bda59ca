//! Zassenhaus factorization of monic square-free integer polynomials:
//! factor modulo a small prime, Hensel-lift to `p^k`, recombine.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modular::factor_squarefree_mod_p;
use crate::exact::field::PrimeField;
use crate::exact::poly::Poly;

/// Integer polynomial, lowest degree first, no trailing zeros.
pub type IntPoly = Vec<BigInt>;

const PRIMES: [u64; 30] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127,
];

/// How many admissible primes to compare before settling on the one with the
/// fewest modular factors.
const PRIME_CANDIDATES: usize = 6;

/// Irreducible monic factors over `Z` of a monic square-free `f` of degree ≥ 1.
pub fn factor_monic_squarefree(f: &IntPoly) -> Vec<IntPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.clone()];
    }
    let Some((field, modular)) = choose_prime(f) else {
        // every candidate prime divides the discriminant; cannot happen for
        // square-free input of the degrees handled here
        panic!("no admissible prime for {f:?}");
    };
    if modular.len() == 1 {
        return vec![f.clone()];
    }
    let p = BigInt::from(field.modulus());
    let bound = coefficient_bound(f);
    let mut modulus = p.clone();
    let mut k = 1u32;
    while modulus <= &bound * 2 {
        modulus *= &p;
        k += 1;
    }
    let lifted = multifactor_lift(f, &modular, &field, k);
    recombine(f, lifted, &modulus)
}

fn choose_prime(f: &IntPoly) -> Option<(PrimeField, Vec<Poly<u64>>)> {
    let mut best: Option<(PrimeField, Vec<Poly<u64>>)> = None;
    let mut seen = 0;
    for &p in PRIMES.iter() {
        let field = PrimeField::new(p);
        let fp = reduce(f, &field);
        if !fp.is_square_free(&field) {
            continue;
        }
        let facs = factor_squarefree_mod_p(&fp, &field);
        let better = best.as_ref().is_none_or(|(_, b)| facs.len() < b.len());
        if better {
            let done = facs.len() == 1;
            best = Some((field, facs));
            if done {
                break;
            }
        }
        seen += 1;
        if seen >= PRIME_CANDIDATES {
            break;
        }
    }
    best
}

fn reduce(f: &IntPoly, field: &PrimeField) -> Poly<u64> {
    Poly::new(field, f.iter().map(|c| field.reduce(c)).collect())
}

/// `2^n · ||f||_1`, which bounds every coefficient of every monic factor.
fn coefficient_bound(f: &IntPoly) -> BigInt {
    let norm: BigInt = f.iter().map(|c| c.abs()).sum();
    norm << (f.len() - 1)
}

fn to_int(g: &Poly<u64>) -> IntPoly {
    g.coeffs().iter().map(|&c| BigInt::from(c)).collect()
}

fn trim(mut v: IntPoly) -> IntPoly {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn mul_mod(a: &IntPoly, b: &IntPoly, m: &BigInt) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out.into_iter().map(|c| c.mod_floor(m)).collect())
}

fn sub_mod(a: &IntPoly, b: &IntPoly, m: &BigInt) -> IntPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim(
        (0..n)
            .map(|i| (a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).mod_floor(m))
            .collect(),
    )
}

/// Lifts monic `g·h ≡ target (mod p)` to a factorization modulo `p^k`.
fn lift_pair(
    target: &IntPoly,
    g: &Poly<u64>,
    h: &Poly<u64>,
    field: &PrimeField,
    k: u32,
) -> (IntPoly, IntPoly) {
    let p = BigInt::from(field.modulus());
    let pk = p.pow(k);
    let (one, s, t) = g.ext_gcd(h, field);
    debug_assert_eq!(one.degree(), Some(0));
    let mut gi = to_int(g);
    let mut hi = to_int(h);
    let mut pj = p.clone();
    for _ in 1..k {
        let diff = sub_mod(target, &mul_mod(&gi, &hi, &pk), &pk);
        if diff.is_empty() {
            break;
        }
        let e = Poly::new(field, diff.iter().map(|c| field.reduce(&(c / &pj))).collect());
        // g·σ + h·τ ≡ e with deg τ < deg g, deg σ < deg h
        let (q, tau) = t.mul(&e, field).divmod(g, field).unwrap();
        let sigma = s.mul(&e, field).add(&q.mul(h, field), field);
        let scale = |v: &Poly<u64>| -> IntPoly { v.coeffs().iter().map(|&c| BigInt::from(c) * &pj).collect() };
        gi = add_mod(&gi, &scale(&tau), &pk);
        hi = add_mod(&hi, &scale(&sigma), &pk);
        pj *= &p;
    }
    (gi, hi)
}

fn add_mod(a: &IntPoly, b: &IntPoly, m: &BigInt) -> IntPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim(
        (0..n)
            .map(|i| (a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z)).mod_floor(m))
            .collect(),
    )
}

fn multifactor_lift(f: &IntPoly, modular: &[Poly<u64>], field: &PrimeField, k: u32) -> Vec<IntPoly> {
    let mut out = Vec::with_capacity(modular.len());
    let pk = BigInt::from(field.modulus()).pow(k);
    let mut target: IntPoly = f.iter().map(|c| c.mod_floor(&pk)).collect();
    for i in 0..modular.len() - 1 {
        let rest = modular[i + 1..]
            .iter()
            .fold(Poly::one(field), |acc, g| acc.mul(g, field));
        let (g, h) = lift_pair(&target, &modular[i], &rest, field, k);
        out.push(g);
        target = h;
    }
    out.push(target);
    out
}

fn symmetric(v: &IntPoly, m: &BigInt) -> IntPoly {
    let half = m / 2;
    trim(
        v.iter()
            .map(|c| {
                let c = c.mod_floor(m);
                if c > half {
                    c - m
                } else {
                    c
                }
            })
            .collect(),
    )
}

/// Exact division of integer polynomials by a monic divisor.
fn divide_monic(f: &IntPoly, g: &IntPoly) -> Option<IntPoly> {
    let dg = g.len() - 1;
    if f.len() < g.len() {
        return None;
    }
    let mut rem = f.clone();
    let mut q = vec![BigInt::zero(); f.len() - dg];
    for k in (0..q.len()).rev() {
        let c = rem[k + dg].clone();
        if c.is_zero() {
            continue;
        }
        for (j, x) in g.iter().enumerate() {
            rem[k + j] -= &c * x;
        }
        q[k] = c;
    }
    rem[..dg].iter().all(Zero::is_zero).then(|| trim(q))
}

fn recombine(f: &IntPoly, mut lifted: Vec<IntPoly>, modulus: &BigInt) -> Vec<IntPoly> {
    let mut rest = f.clone();
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut hit = None;
        for subset in Subsets::new(lifted.len(), size) {
            let candidate = subset
                .iter()
                .fold(vec![BigInt::one()], |acc, &i| mul_mod(&acc, &lifted[i], modulus));
            let candidate = symmetric(&candidate, modulus);
            // constant-term divisibility is a cheap necessary condition
            if !candidate[0].is_zero() && !(&rest[0] % &candidate[0]).is_zero() {
                continue;
            }
            if let Some(q) = divide_monic(&rest, &candidate) {
                hit = Some((subset, candidate, q));
                break;
            }
        }
        match hit {
            Some((subset, candidate, q)) => {
                found.push(candidate);
                rest = q;
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => size += 1,
        }
    }
    found.push(rest);
    found
}

/// Lexicographic enumeration of `size`-subsets of `0..n`.
struct Subsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Subsets {
    fn new(n: usize, size: usize) -> Self {
        Subsets {
            n,
            current: (size <= n).then(|| (0..size).collect()),
        }
    }
}

impl Iterator for Subsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.current.take()?;
        let mut next = cur.clone();
        let k = next.len();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(cur)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn product(fs: &[IntPoly]) -> IntPoly {
        fs.iter().fold(ip(&[1]), |acc, g| {
            let mut out = vec![BigInt::zero(); acc.len() + g.len() - 1];
            for (i, a) in acc.iter().enumerate() {
                for (j, b) in g.iter().enumerate() {
                    out[i + j] += a * b;
                }
            }
            out
        })
    }

    #[test]
    fn subsets_enumerate() {
        let all: Vec<_> = Subsets::new(4, 2).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 1]);
        assert_eq!(all[5], vec![2, 3]);
    }

    #[test]
    fn swinnerton_dyer_like_quartic_is_irreducible() {
        // x^4 - 10x^2 + 1 splits modulo every prime, so recombination must
        // discover irreducibility
        let f = ip(&[1, 0, -10, 0, 1]);
        assert_eq!(factor_monic_squarefree(&f), vec![f]);
    }

    #[test]
    fn recovers_known_factors() {
        let f = product(&[ip(&[-1, 1]), ip(&[1, 1]), ip(&[1, 0, 1]), ip(&[-2, 0, 0, 1])]);
        let mut fs = factor_monic_squarefree(&f);
        fs.sort();
        assert_eq!(fs.len(), 4);
        assert_eq!(product(&fs), f);
    }
}
