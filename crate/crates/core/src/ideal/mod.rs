//! Ideals of `A ⊗ B`: classification of principal ideals, the four-field
//! admissibility test, non-primality witnesses and constructive rank
//! reduction.

pub mod oracle;
mod reduction;
mod witness;

pub use reduction::{rank_reduction, replay_certificate, ReductionCertificate, Step};
pub use witness::{construct_witness, Witness};

use std::cmp::Ordering;
use std::fmt;

use crate::config::EngineConfig;
use crate::error::Result;
use crate::exact::number_field::NumberField;
use crate::field_tensor::FieldTensorRing;
use crate::operator::NearlySimpleDescriptor;
use crate::tensor::{IdealKind, QuotientKind, TensorElement};

/// The admissible ideals, ordered by inclusion. `IaB` and `AIb` are
/// incomparable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AdmissibleTag {
    Zero,
    IaIb,
    IaB,
    AIb,
    Sum,
    Full,
}

impl AdmissibleTag {
    pub const ALL: [AdmissibleTag; 6] = [
        AdmissibleTag::Zero,
        AdmissibleTag::IaIb,
        AdmissibleTag::IaB,
        AdmissibleTag::AIb,
        AdmissibleTag::Sum,
        AdmissibleTag::Full,
    ];

    fn level(self) -> u8 {
        match self {
            AdmissibleTag::Zero => 0,
            AdmissibleTag::IaIb => 1,
            AdmissibleTag::IaB | AdmissibleTag::AIb => 2,
            AdmissibleTag::Sum => 3,
            AdmissibleTag::Full => 4,
        }
    }

    /// Inclusion of the corresponding ideals.
    pub fn is_contained_in(self, other: AdmissibleTag) -> bool {
        self.partial_cmp(&other).is_some_and(Ordering::is_le)
    }

    pub fn name(self) -> &'static str {
        match self {
            AdmissibleTag::Zero => "ZERO",
            AdmissibleTag::IaIb => "IA_IB",
            AdmissibleTag::IaB => "IA_B",
            AdmissibleTag::AIb => "A_IB",
            AdmissibleTag::Sum => "SUM",
            AdmissibleTag::Full => "FULL",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.name() == s)
    }
}

impl PartialOrd for AdmissibleTag {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self == other {
            return Some(Ordering::Equal);
        }
        let (a, b) = (self.level(), other.level());
        if a == b {
            None
        } else {
            Some(a.cmp(&b))
        }
    }
}

impl fmt::Display for AdmissibleTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The tag of `⟨t⟩`. When the pair is not admissible `⟨t⟩` need not be
/// admissible, and the tag is only the largest admissible ideal the
/// membership tests place it under.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub tag: AdmissibleTag,
    pub lower_bound_only: bool,
}

/// Tag from membership alone, without the admissibility check.
pub fn membership_tag(t: &TensorElement) -> AdmissibleTag {
    if t.is_zero() {
        return AdmissibleTag::Zero;
    }
    if !t.quotient_image(QuotientKind::QaQb).is_zero() {
        return AdmissibleTag::Full;
    }
    match (t.membership(IdealKind::IaB), t.membership(IdealKind::AIb)) {
        (true, true) => AdmissibleTag::IaIb,
        (true, false) => AdmissibleTag::IaB,
        (false, true) => AdmissibleTag::AIb,
        (false, false) => AdmissibleTag::Sum,
    }
}

pub fn classify_ideal_of(t: &TensorElement, config: &EngineConfig) -> Result<Classification> {
    let (a, b) = t.descriptors();
    let verdict = check_admissibility(a, b, config)?;
    Ok(Classification {
        tag: membership_tag(t),
        lower_bound_only: !verdict.all_admissible,
    })
}

/// The four tensor products whose field-ness decides admissibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductSlot {
    /// `Z(A/I_A) ⊗ Z(B/I_B)`
    ZZ,
    /// `C(A) ⊗ Z(B/I_B)`
    CZ,
    /// `Z(A/I_A) ⊗ C(B)`
    ZC,
    /// `C(A) ⊗ C(B)`
    CC,
}

impl ProductSlot {
    pub const ALL: [ProductSlot; 4] = [ProductSlot::ZZ, ProductSlot::CZ, ProductSlot::ZC, ProductSlot::CC];

    pub fn fields<'a>(
        self,
        a: &'a NearlySimpleDescriptor,
        b: &'a NearlySimpleDescriptor,
    ) -> (&'a NumberField, &'a NumberField) {
        match self {
            ProductSlot::ZZ => (a.residue_field(), b.residue_field()),
            ProductSlot::CZ => (a.extended_centroid(), b.residue_field()),
            ProductSlot::ZC => (a.residue_field(), b.extended_centroid()),
            ProductSlot::CC => (a.extended_centroid(), b.extended_centroid()),
        }
    }

    /// The slot that describes the same product after swapping `A` and `B`.
    pub fn mirror(self) -> ProductSlot {
        match self {
            ProductSlot::CZ => ProductSlot::ZC,
            ProductSlot::ZC => ProductSlot::CZ,
            s => s,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ProductSlot::ZZ => "Z(A/I_A)⊗Z(B/I_B)",
            ProductSlot::CZ => "C(A)⊗Z(B/I_B)",
            ProductSlot::ZC => "Z(A/I_A)⊗C(B)",
            ProductSlot::CC => "C(A)⊗C(B)",
        }
    }

    pub fn code(self) -> &'static str {
        match self {
            ProductSlot::ZZ => "ZZ",
            ProductSlot::CZ => "CZ",
            ProductSlot::ZC => "ZC",
            ProductSlot::CC => "CC",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProductReport {
    pub slot: ProductSlot,
    pub ring: FieldTensorRing,
    pub is_field: bool,
    pub component_degrees: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AdmissibilityVerdict {
    pub all_admissible: bool,
    pub products: Vec<ProductReport>,
}

impl AdmissibilityVerdict {
    pub fn failing(&self) -> Vec<ProductSlot> {
        self.products.iter().filter(|p| !p.is_field).map(|p| p.slot).collect()
    }

    pub fn report(&self, slot: ProductSlot) -> &ProductReport {
        self.products.iter().find(|p| p.slot == slot).expect("all four slots are present")
    }
}

/// Every ideal of `A ⊗ B` is admissible iff all four products are fields.
pub fn check_admissibility(
    a: &NearlySimpleDescriptor,
    b: &NearlySimpleDescriptor,
    config: &EngineConfig,
) -> Result<AdmissibilityVerdict> {
    let products = ProductSlot::ALL
        .iter()
        .map(|&slot| {
            let (k, l) = slot.fields(a, b);
            let ring = FieldTensorRing::build(k, l, config.degree_bound)?;
            let component_degrees = ring.decompose().component_degrees();
            Ok(ProductReport {
                slot,
                is_field: ring.is_field(),
                ring,
                component_degrees,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AdmissibilityVerdict {
        all_admissible: products.iter().all(|p| p.is_field),
        products,
    })
}

/// `A` is centrally closed with central `A/I_A`: `K_e = K_s = Q`.
pub fn check_universal(a: &NearlySimpleDescriptor) -> bool {
    a.is_universal()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtremalReport {
    /// `I_A ⊗ I_B` is the smallest nonzero ideal.
    pub smallest_ok: bool,
    /// `I_A ⊗ B + A ⊗ I_B` is maximal.
    pub sum_maximal_ok: bool,
}

pub fn check_extremal_ideals(
    a: &NearlySimpleDescriptor,
    b: &NearlySimpleDescriptor,
    config: &EngineConfig,
) -> Result<ExtremalReport> {
    let field = |slot: ProductSlot| -> Result<bool> {
        let (k, l) = slot.fields(a, b);
        Ok(FieldTensorRing::build(k, l, config.degree_bound)?.is_field())
    };
    Ok(ExtremalReport {
        smallest_ok: field(ProductSlot::CC)?,
        sum_maximal_ok: field(ProductSlot::ZZ)?,
    })
}
