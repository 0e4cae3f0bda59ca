mod common;

use common::*;
use tensorideal_core::field_tensor::multiplication_kernel_witness;
use tensorideal_core::{Error, FieldTensorRing, NumberField};

fn ring(k: &NumberField, l: &NumberField) -> FieldTensorRing {
    FieldTensorRing::build(k, l, 8).unwrap()
}

fn sqrt(n: i64) -> NumberField {
    NumberField::from_ints(&[-n, 0, 1]).unwrap()
}

fn cbrt2() -> NumberField {
    NumberField::from_ints(&[-2, 0, 0, 1]).unwrap()
}

#[test]
fn build_examples() {
    let r = ring(&qi(), &qi());
    assert_eq!(r.factors().len(), 2);
    assert!(!r.is_field());
    let r = ring(&sqrt(2), &sqrt(3));
    assert_eq!(r.factors().len(), 1);
    assert!(r.is_field());
    let r = ring(&NumberField::rationals(), &qi());
    assert_eq!(r.factors().len(), 1);
    assert_eq!(r.modulus().degree(), Some(1));
    assert!(r.is_field());
    assert_eq!(r.dimension(), 2);
}

#[test]
fn decompose_examples() {
    let d = ring(&qi(), &qi()).decompose();
    assert_eq!(d.component_degrees(), vec![1, 1]);
    let mut degs = ring(&cbrt2(), &cbrt2()).decompose().component_degrees();
    degs.sort();
    assert_eq!(degs, vec![1, 2]);
    let r = ring(&sqrt(2), &sqrt(3));
    let d = r.decompose();
    assert_eq!(d.components.len(), 1);
    assert_eq!(d.components[0].idempotent, r.one());
}

#[test]
fn zero_divisor_examples() {
    let r = ring(&qi(), &qi());
    let (c1, c2) = r.zero_divisor_pair().unwrap();
    let i = qi().generator();
    let sorted = |mut v: Vec<_>| {
        v.sort_by_key(|e| format!("{e:?}"));
        v
    };
    assert_eq!(
        sorted(vec![c1.clone(), c2.clone()]),
        sorted(vec![r.sub(&r.x(), &r.scalar(i.clone())), r.sub(&r.x(), &r.scalar(i.neg()))])
    );
    assert!(r.mul(&c1, &c2).is_zero());

    let r = ring(&cbrt2(), &cbrt2());
    let (c1, c2) = r.zero_divisor_pair().unwrap();
    assert_eq!(c1, r.sub(&r.x(), &r.scalar(cbrt2().generator())));
    assert_eq!(c2.rep().degree(), Some(2));
    assert!(r.mul(&c1, &c2).is_zero());

    assert_eq!(ring(&sqrt(2), &sqrt(3)).zero_divisor_pair().unwrap_err(), Error::RingIsField);
}

#[test]
fn kernel_witness_examples() {
    for k in [qi(), sqrt(2)] {
        let (r, w) = multiplication_kernel_witness(&k, 8).unwrap();
        assert!(!w.is_zero());
        assert_eq!(w, r.sub(&r.x(), &r.scalar(k.generator())));
        assert!(r.multiply_out(&w).unwrap().is_zero());
    }
    assert!(multiplication_kernel_witness(&NumberField::rationals(), 8).is_err());
}

#[test]
fn corpus_properties() {
    let corpus = field_corpus();
    assert!(corpus.len() >= 10);
    for k in &corpus {
        for l in &corpus {
            let r = ring(k, l);
            assert_eq!(r.dimension(), k.degree() * l.degree(), "{k:?} ⊗ {l:?}");
            let d = r.decompose();
            assert_eq!(d.components.len(), r.factors().len());
            let mut sum = r.reduce(tensorideal_core::Poly::zero());
            for (i, ci) in d.components.iter().enumerate() {
                sum = r.add(&sum, &ci.idempotent);
                for (j, cj) in d.components.iter().enumerate() {
                    let prod = r.mul(&ci.idempotent, &cj.idempotent);
                    if i == j {
                        assert_eq!(prod, ci.idempotent);
                    } else {
                        assert!(prod.is_zero());
                    }
                }
            }
            assert_eq!(sum, r.one());
            assert_eq!(d.component_degrees().iter().sum::<usize>(), k.degree());
            if let Ok((c1, c2)) = r.zero_divisor_pair() {
                assert!(!c1.is_zero() && !c2.is_zero());
                assert!(r.mul(&c1, &c2).is_zero());
            } else {
                assert!(r.is_field());
            }
        }
        if k.degree() >= 2 {
            assert!(!ring(k, k).is_field(), "{k:?} ⊗ itself");
        }
    }
}
