//! Deterministic inputs for the benchmarks.

use tensorideal_core::{AlgElement, NearlySimpleDescriptor, NumberField, Poly, Rational, Tensor, TensorElement};

/// Polynomials over `Q` with the number of distinct irreducible factors.
pub fn polynomials() -> Vec<(&'static str, Poly<Rational>, usize)> {
    vec![
        ("x^8-1", Poly::from_ints(&[-1, 0, 0, 0, 0, 0, 0, 0, 1]), 4),
        // irreducible, but splits into linear or quadratic factors modulo every prime
        ("x^4-10x^2+1", Poly::from_ints(&[1, 0, -10, 0, 1]), 1),
        ("(x^6+x^3+1)(x^2-2)", Poly::from_ints(&[-2, 0, 1, -2, 0, 1, -2, 0, 1]), 2),
        ("x^5-x-1", Poly::from_ints(&[-1, -1, 0, 0, 0, 1]), 1),
    ]
}

pub fn field(coeffs: &[i64]) -> NumberField {
    NumberField::from_ints(coeffs).expect("fixture polynomials are irreducible")
}

/// Pairs `(K, L)` for `K ⊗ L`.
pub fn field_pairs() -> Vec<(&'static str, NumberField, NumberField)> {
    vec![
        ("Q(i)⊗Q(i)", field(&[1, 0, 1]), field(&[1, 0, 1])),
        ("Q(√2)⊗Q(√3)", field(&[-2, 0, 1]), field(&[-3, 0, 1])),
        ("Q(∛2)⊗Q(ζ3)", field(&[-2, 0, 0, 1]), field(&[1, 1, 1])),
        ("Q(∛2)⊗Q(∛2)", field(&[-2, 0, 0, 1]), field(&[-2, 0, 0, 1])),
        ("Q(ζ5)⊗Q(√5)", field(&[1, 1, 1, 1, 1]), field(&[-5, 0, 1])),
    ]
}

pub fn universal() -> NearlySimpleDescriptor {
    NearlySimpleDescriptor::universal()
}

fn unit(d: &NearlySimpleDescriptor, r: usize, c: usize) -> AlgElement {
    d.unit(r, c)
}

/// `1 ⊗ e_11 + Σ_{k=2}^{rank} (e_k1 + e_1k) ⊗ e_kk` over the universal
/// descriptor: its image modulo `I_A ⊗ B` is `1 ⊗ e_11`, so rank reduction
/// applies.
pub fn reducible_tensor(rank: usize) -> TensorElement {
    let d = universal();
    let mut pairs = vec![(d.one(), unit(&d, 1, 1))];
    for k in 2..=rank {
        pairs.push((unit(&d, k, 1).add(&unit(&d, 1, k)), unit(&d, k, k)));
    }
    Tensor::new(d.clone(), d, pairs)
}

/// A tensor generating `I_A ⊗ B + A ⊗ I_B` with `rank` terms.
pub fn sum_tensor(rank: usize) -> TensorElement {
    let d = universal();
    let mut pairs = vec![(d.one(), unit(&d, 1, 1)), (unit(&d, 1, 1), d.one())];
    for k in 3..=rank {
        pairs.push((unit(&d, k, k - 1), unit(&d, k - 1, k)));
    }
    Tensor::new(d.clone(), d, pairs)
}
