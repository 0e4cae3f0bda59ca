//! Dense Gaussian elimination over any [`Field`].

use super::field::Field;
use crate::error::{Error, Result};

/// Outcome of scanning a list of vectors for a maximal independent subset.
#[derive(Debug, Clone, PartialEq)]
pub struct Independence<E> {
    /// Indices of the chosen vectors, in input order (first-seen pivoting).
    pub basis: Vec<usize>,
    /// For every input vector not in `basis`, its coefficients on `basis`
    /// (same order). `None` for vectors that are themselves in the basis.
    pub expansions: Vec<Option<Vec<E>>>,
}

struct EchelonRow<E> {
    pivot: usize,
    row: Vec<E>,
    // Expression of `row` as a combination of the chosen input vectors.
    combo: Vec<E>,
}

/// Greedy maximal independent subset with explicit dependency coefficients.
pub fn independent_subset<F: Field>(field: &F, vectors: &[Vec<F::Elem>]) -> Independence<F::Elem> {
    let mut echelon: Vec<EchelonRow<F::Elem>> = Vec::new();
    let mut basis = Vec::new();
    let mut expansions: Vec<Option<Vec<F::Elem>>> = Vec::with_capacity(vectors.len());
    for (idx, v) in vectors.iter().enumerate() {
        let mut row = v.clone();
        // combo over chosen vectors, plus implicit coefficient 1 on `v` itself
        let mut combo = vec![field.zero(); basis.len()];
        for e in &echelon {
            let c = &row[e.pivot];
            if field.is_zero(c) {
                continue;
            }
            let factor = field.div(c, &e.row[e.pivot]).unwrap();
            for (r, x) in row.iter_mut().zip(&e.row) {
                if !field.is_zero(x) {
                    *r = field.sub(r, &field.mul(&factor, x));
                }
            }
            for (k, x) in e.combo.iter().enumerate() {
                combo[k] = field.sub(&combo[k], &field.mul(&factor, x));
            }
        }
        match row.iter().position(|x| !field.is_zero(x)) {
            None => {
                // v + Σ combo_k chosen_k = 0
                expansions.push(Some(combo.iter().map(|c| field.neg(c)).collect()));
            }
            Some(pivot) => {
                combo.push(field.one());
                basis.push(idx);
                for e in echelon.iter_mut() {
                    e.combo.push(field.zero());
                }
                echelon.push(EchelonRow { pivot, row, combo });
                expansions.push(None);
            }
        }
    }
    let n = basis.len();
    for e in expansions.iter_mut().flatten() {
        e.resize(n, field.zero());
    }
    Independence { basis, expansions }
}

pub fn rank<F: Field>(field: &F, vectors: &[Vec<F::Elem>]) -> usize {
    independent_subset(field, vectors).basis.len()
}

/// Solves the square system `m · x = b` (rows of `m`), or `None` if singular.
pub fn solve_square<F: Field>(field: &F, m: &[Vec<F::Elem>], b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let n = m.len();
    let mut a: Vec<Vec<F::Elem>> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !field.is_zero(&a[r][col]))?;
        a.swap(col, piv);
        let inv = field.inv(&a[col][col]).unwrap();
        for x in a[col].iter_mut() {
            *x = field.mul(x, &inv);
        }
        let prow = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == col || field.is_zero(&row[col]) {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&prow) {
                *x = field.sub(x, &field.mul(&f, p));
            }
        }
    }
    Some(a.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// For `n` independent rows of length `m`, returns `n` vectors `c_i` of length
/// `m` with `row_j · c_i = δ_ij`. Only pivot coordinates of `c_i` are nonzero.
pub fn dual_functionals<F: Field>(field: &F, rows: &[Vec<F::Elem>]) -> Result<Vec<Vec<F::Elem>>> {
    let n = rows.len();
    let m = rows.first().map_or(0, Vec::len);
    // Columns of the row matrix; independent columns give the pivot set.
    let columns: Vec<Vec<F::Elem>> = (0..m).map(|c| rows.iter().map(|r| r[c].clone()).collect()).collect();
    let cols = independent_subset(field, &columns).basis;
    if cols.len() < n {
        return Err(Error::DependentFamily);
    }
    let square: Vec<Vec<F::Elem>> = rows.iter().map(|r| cols.iter().map(|&c| r[c].clone()).collect()).collect();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let e: Vec<F::Elem> = (0..n).map(|j| if i == j { field.one() } else { field.zero() }).collect();
        let x = solve_square(field, &square, &e).ok_or(Error::DependentFamily)?;
        let mut full = vec![field.zero(); m];
        for (k, &c) in cols.iter().enumerate() {
            full[c] = x[k].clone();
        }
        out.push(full);
    }
    Ok(out)
}

/// Determinant by Gaussian elimination.
pub fn determinant<F: Field>(field: &F, m: &[Vec<F::Elem>]) -> F::Elem {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = field.one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !field.is_zero(&a[r][col])) else {
            return field.zero();
        };
        if piv != col {
            a.swap(col, piv);
            det = field.neg(&det);
        }
        det = field.mul(&det, &a[col][col]);
        let inv = field.inv(&a[col][col]).unwrap();
        for r in col + 1..n {
            if field.is_zero(&a[r][col]) {
                continue;
            }
            let f = field.mul(&a[r][col], &inv);
            for c in col..n {
                let t = field.mul(&f, &a[col][c]);
                a[r][c] = field.sub(&a[r][c], &t);
            }
        }
    }
    det
}
