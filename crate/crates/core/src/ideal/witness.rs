//! Non-primality witnesses: two nonzero elements `g_1`, `g_2` with
//! `g_1 · y · g_2 = 0` for every `y`, built from a zero-divisor pair
//! `c_1 c_2 = 0` of a failing field product acting on `e_11 ⊗ e_11`.

use crate::error::{Error, Result};
use crate::exact::number_field::{NFElement, NumberField};
use crate::field_tensor::RingElement;
use crate::ideal::{AdmissibilityVerdict, ProductSlot};
use crate::operator::{FinOp, NearlySimpleDescriptor};
use crate::tensor::{FactorSpace, Tensor};

type Desc = NearlySimpleDescriptor;

/// The witness lives in the algebra where the failing product acts: `A ⊗ B`
/// for `C(A) ⊗ C(B)`, and a quotient by `I_A` and/or `I_B` when a residue
/// field is involved.
#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    /// `C(A) ⊗ C(B)`, in `A ⊗ B`.
    Full { g1: Tensor<Desc, Desc>, g2: Tensor<Desc, Desc> },
    /// `Z(A/I_A) ⊗ C(B)`, in `(A/I_A) ⊗ B`.
    LeftQuotient {
        g1: Tensor<NumberField, Desc>,
        g2: Tensor<NumberField, Desc>,
    },
    /// `C(A) ⊗ Z(B/I_B)`, in `A ⊗ (B/I_B)`.
    RightQuotient {
        g1: Tensor<Desc, NumberField>,
        g2: Tensor<Desc, NumberField>,
    },
    /// `Z(A/I_A) ⊗ Z(B/I_B)`, in `(A/I_A) ⊗ (B/I_B)`.
    DoubleQuotient {
        g1: Tensor<NumberField, NumberField>,
        g2: Tensor<NumberField, NumberField>,
    },
}

impl Witness {
    pub fn slot(&self) -> ProductSlot {
        match self {
            Witness::Full { .. } => ProductSlot::CC,
            Witness::LeftQuotient { .. } => ProductSlot::ZC,
            Witness::RightQuotient { .. } => ProductSlot::CZ,
            Witness::DoubleQuotient { .. } => ProductSlot::ZZ,
        }
    }

    pub fn space(&self) -> &'static str {
        match self {
            Witness::Full { .. } => "A⊗B",
            Witness::LeftQuotient { .. } => "(A/I_A)⊗B",
            Witness::RightQuotient { .. } => "A⊗(B/I_B)",
            Witness::DoubleQuotient { .. } => "(A/I_A)⊗(B/I_B)",
        }
    }

    /// `g_1 ≠ 0`, `g_2 ≠ 0` and `g_1 g_2 = 0`.
    pub fn verify(&self) -> bool {
        fn check<SA: FactorSpace, SB: FactorSpace>(g1: &Tensor<SA, SB>, g2: &Tensor<SA, SB>) -> bool {
            !g1.is_zero() && !g2.is_zero() && g1.mul(g2).is_zero()
        }
        match self {
            Witness::Full { g1, g2 } => check(g1, g2),
            Witness::LeftQuotient { g1, g2 } => check(g1, g2),
            Witness::RightQuotient { g1, g2 } => check(g1, g2),
            Witness::DoubleQuotient { g1, g2 } => check(g1, g2),
        }
    }

    /// Checks `g_1 · (x ⊗ y) · g_2 = 0` for `x`, `y` running over a spanning
    /// set of each factor restricted to indices `≤ window`.
    pub fn verify_sandwiches(&self, window: usize) -> bool {
        fn check<SA: FactorSpace, SB: FactorSpace>(
            g1: &Tensor<SA, SB>,
            g2: &Tensor<SA, SB>,
            xs: &[SA::Elem],
            ys: &[SB::Elem],
        ) -> bool {
            let (l, r) = (g1.left_space(), g1.right_space());
            xs.iter().all(|x| {
                ys.iter().all(|y| {
                    let mid = Tensor::elementary(l.clone(), r.clone(), x.clone(), y.clone());
                    g1.mul(&mid).mul(g2).is_zero()
                })
            })
        }
        match self {
            Witness::Full { g1, g2 } => check(
                g1,
                g2,
                &spanning_alg(g1.left_space(), window),
                &spanning_alg(g1.right_space(), window),
            ),
            Witness::LeftQuotient { g1, g2 } => check(
                g1,
                g2,
                &spanning_field(g1.left_space()),
                &spanning_alg(g1.right_space(), window),
            ),
            Witness::RightQuotient { g1, g2 } => check(
                g1,
                g2,
                &spanning_alg(g1.left_space(), window),
                &spanning_field(g1.right_space()),
            ),
            Witness::DoubleQuotient { g1, g2 } => {
                check(g1, g2, &spanning_field(g1.left_space()), &spanning_field(g1.right_space()))
            }
        }
    }
}

fn spanning_field(k: &NumberField) -> Vec<NFElement> {
    (0..k.degree()).map(|j| k.generator().pow(j)).collect()
}

/// Scalars `α^j·1` plus `γ^m e_{rc}` for `r, c ≤ window`.
fn spanning_alg(d: &Desc, window: usize) -> Vec<crate::operator::AlgElement> {
    let mut out: Vec<_> = spanning_field(d.scalar_field()).into_iter().map(|s| d.scalar(s)).collect();
    for gamma in spanning_field(d.entry_field()) {
        for r in 1..=window {
            for c in 1..=window {
                out.push(d.finite(FinOp::unit(d.entry_field(), r, c).scale(&gamma)));
            }
        }
    }
    out
}

fn e11(d: &Desc, k: &NFElement) -> crate::operator::AlgElement {
    d.finite(FinOp::unit(d.entry_field(), 1, 1).scale(k))
}

/// One witness per failing product, in slot order.
pub fn construct_witness(a: &Desc, b: &Desc, verdict: &AdmissibilityVerdict) -> Result<Vec<Witness>> {
    if verdict.all_admissible {
        return Err(Error::Precondition("every ideal is admissible; there is nothing to witness".into()));
    }
    verdict
        .products
        .iter()
        .filter(|p| !p.is_field)
        .map(|p| {
            let ring = &p.ring;
            let (c1, c2) = ring.zero_divisor_pair()?;
            let terms = |c: &RingElement| c.elementary_terms(ring);
            Ok(match p.slot {
                ProductSlot::CC => {
                    let build = |c: &RingElement| {
                        let pairs = terms(c).iter().map(|(k, l)| (e11(a, k), e11(b, l))).collect();
                        Tensor::new(a.clone(), b.clone(), pairs)
                    };
                    Witness::Full { g1: build(&c1), g2: build(&c2) }
                }
                ProductSlot::ZC => {
                    let build = |c: &RingElement| {
                        let pairs = terms(c).into_iter().map(|(k, l)| (k, e11(b, &l))).collect();
                        Tensor::new(a.scalar_field().clone(), b.clone(), pairs)
                    };
                    Witness::LeftQuotient { g1: build(&c1), g2: build(&c2) }
                }
                ProductSlot::CZ => {
                    let build = |c: &RingElement| {
                        let pairs = terms(c).into_iter().map(|(k, l)| (e11(a, &k), l)).collect();
                        Tensor::new(a.clone(), b.scalar_field().clone(), pairs)
                    };
                    Witness::RightQuotient { g1: build(&c1), g2: build(&c2) }
                }
                ProductSlot::ZZ => {
                    let build = |c: &RingElement| {
                        Tensor::new(a.scalar_field().clone(), b.scalar_field().clone(), terms(c))
                    };
                    Witness::DoubleQuotient { g1: build(&c1), g2: build(&c2) }
                }
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::EngineConfig;
    use crate::ideal::check_admissibility;

    fn qi() -> NumberField {
        NumberField::from_ints(&[1, 0, 1]).unwrap()
    }

    #[test]
    fn centroid_witness() {
        let b = Desc::new(NumberField::rationals(), qi());
        let v = check_admissibility(&b, &b, &EngineConfig::default()).unwrap();
        let ws = construct_witness(&b, &b, &v).unwrap();
        assert_eq!(ws.len(), 1);
        assert_eq!(ws[0].slot(), ProductSlot::CC);
        assert!(ws[0].verify());
        assert!(ws[0].verify_sandwiches(2));
    }

    #[test]
    fn mixed_pair_witness_in_quotient() {
        let a = Desc::new(qi(), NumberField::rationals());
        let b = Desc::new(NumberField::rationals(), qi());
        let v = check_admissibility(&a, &b, &EngineConfig::default()).unwrap();
        let ws = construct_witness(&a, &b, &v).unwrap();
        assert_eq!(ws.len(), 1);
        assert!(matches!(ws[0], Witness::LeftQuotient { .. }));
        assert!(ws[0].verify());
        assert!(ws[0].verify_sandwiches(2));
    }

    #[test]
    fn admissible_pair_rejected() {
        let u = Desc::universal();
        let v = check_admissibility(&u, &u, &EngineConfig::default()).unwrap();
        assert!(construct_witness(&u, &u, &v).is_err());
    }
}
