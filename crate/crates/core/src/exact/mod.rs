//! Exact arithmetic substrate: rationals, dense polynomials, number fields,
//! and factorization over `Q` and over number fields.

pub mod factor;
pub mod field;
pub mod linalg;
pub mod number_field;
pub mod poly;
pub mod rational;
