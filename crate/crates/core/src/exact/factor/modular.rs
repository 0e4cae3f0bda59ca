//! Factorization of square-free polynomials over `Z/p`: distinct-degree
//! splitting followed by Cantor–Zassenhaus equal-degree splitting.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::field::PrimeField;
use crate::exact::poly::Poly;

type ModPoly = Poly<u64>;

/// Monic irreducible factors of a monic square-free `f` over `Z/p`.
pub fn factor_squarefree_mod_p(f: &ModPoly, field: &PrimeField) -> Vec<ModPoly> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ field.modulus());
    for (g, d) in distinct_degree(f, field) {
        equal_degree(&g, d, field, &mut rng, &mut out);
    }
    out.sort_by(|a, b| crate::exact::poly::cmp_by(a, b, |x, y| x.cmp(y)));
    out
}

fn distinct_degree(f: &ModPoly, field: &PrimeField) -> Vec<(ModPoly, usize)> {
    let p = BigUint::from(field.modulus());
    let x = Poly::x(field);
    let mut rest = f.clone();
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut i = 0;
    while let Some(deg) = rest.degree() {
        if deg < 2 * (i + 1) {
            break;
        }
        i += 1;
        h = h.pow_mod(&p, &rest, field);
        let g = h.sub(&x, field).gcd(&rest, field);
        if g.degree().unwrap_or(0) > 0 {
            rest = rest.div_exact(&g, field).unwrap();
            h = h.rem(&rest, field).unwrap();
            out.push((g, i));
        }
    }
    if let Some(d) = rest.degree() {
        if d > 0 {
            out.push((rest, d));
        }
    }
    out
}

fn equal_degree(g: &ModPoly, d: usize, field: &PrimeField, rng: &mut ChaCha8Rng, out: &mut Vec<ModPoly>) {
    let n = g.degree().unwrap();
    if n == d {
        out.push(g.clone());
        return;
    }
    let p = field.modulus();
    let exp = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a = Poly::new(field, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = a.pow_mod(&exp, g, field).sub(&Poly::one(field), field);
        let h = b.gcd(g, field);
        let hd = h.degree().unwrap_or(0);
        if hd > 0 && hd < n {
            let other = g.div_exact(&h, field).unwrap();
            equal_degree(&h, d, field, rng, out);
            equal_degree(&other, d, field, rng, out);
            return;
        }
    }
}
