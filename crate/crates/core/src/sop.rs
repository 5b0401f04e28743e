//! Linear systems of parameters for face rings.
//!
//! A system `θ_i = Σ_j a_ij x_j` is stored as its coefficient matrix over
//! `F_p`, one column per vertex of `V(Δ)`. The column order is part of the
//! value: a matrix extended to a larger complex keeps the old columns first, so
//! killing the new variables recovers the old matrix as the top-left block.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{bits, is_full_subcomplex, FaceMask, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::{determinant, submatrix, subsets};
use crate::monomial::VarIndex;

pub const DEFAULT_ROW_CAP: usize = 12;
pub const DEFAULT_SAMPLE_BUDGET: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SopMatrix {
    pub modulus: u64,
    pub columns: Vec<VarIndex>,
    pub rows: Vec<Vec<u64>>,
}

impl SopMatrix {
    pub fn new(modulus: u64, columns: Vec<VarIndex>, rows: Vec<Vec<u64>>) -> Result<Self> {
        PrimeField::new(modulus)?;
        for (i, r) in rows.iter().enumerate() {
            if r.len() != columns.len() {
                return Err(Error::Shape(format!("row {i} has {} entries for {} columns", r.len(), columns.len())));
            }
            if let Some(v) = r.iter().find(|&&v| v >= modulus) {
                return Err(Error::Shape(format!("entry {v} is not reduced mod {modulus}")));
            }
        }
        Ok(SopMatrix { modulus, columns, rows })
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.modulus).expect("validated on construction")
    }

    /// The `d × n` top-left block.
    pub fn block(&self, d: usize, n: usize) -> Vec<Vec<u64>> {
        self.rows.iter().take(d).map(|r| r[..n.min(r.len())].to_vec()).collect()
    }
}

/// Column index of each ambient vertex of `complex` that is a matrix column.
fn column_map(complex: &SimplicialComplex, m: &SopMatrix) -> Result<HashMap<usize, usize>> {
    let mut want = complex.vertex_set();
    let mut have = m.columns.clone();
    want.sort();
    have.sort();
    have.dedup();
    if want != have || have.len() != m.columns.len() {
        return Err(Error::Shape("matrix columns must be exactly the vertices of the complex".into()));
    }
    let map = m
        .columns
        .iter()
        .enumerate()
        .map(|(c, v)| (complex.vertices().binary_search(v).expect("column is a vertex"), c))
        .collect();
    Ok(map)
}

fn face_columns(face: FaceMask, map: &HashMap<usize, usize>) -> Vec<usize> {
    let mut cols: Vec<usize> = bits(face).map(|v| map[&v]).collect();
    cols.sort_unstable();
    cols
}

/// Stanley's criterion: for a pure complex of dimension `d - 1`, the forms are
/// a system of parameters iff every facet's `d × d` minor is nonsingular.
pub fn stanley_check(complex: &SimplicialComplex, m: &SopMatrix) -> Result<bool> {
    if !complex.is_pure() {
        return Err(Error::NotPure);
    }
    let d = (complex.dimension() + 1) as usize;
    if m.nrows() != d {
        return Err(Error::Shape(format!("{} rows for a complex of dimension {}", m.nrows(), d as i64 - 1)));
    }
    let map = column_map(complex, m)?;
    let field = m.field();
    let all_rows: Vec<usize> = (0..d).collect();
    Ok(complex
        .facet_masks()
        .iter()
        .all(|&f| determinant(&field, submatrix(&m.rows, &all_rows, &face_columns(f, &map))) != 0))
}

/// Every minor with columns indexed by a face (and any equally sized set of
/// rows) is nonzero.
pub fn is_good(complex: &SimplicialComplex, m: &SopMatrix) -> Result<bool> {
    is_good_capped(complex, m, DEFAULT_ROW_CAP)
}

pub fn is_good_capped(complex: &SimplicialComplex, m: &SopMatrix, row_cap: usize) -> Result<bool> {
    if m.nrows() > row_cap {
        return Err(Error::RowCapExceeded(m.nrows(), row_cap));
    }
    let map = column_map(complex, m)?;
    let field = m.field();
    let d = m.nrows();
    let row_sets: Vec<Vec<Vec<usize>>> = (0..=d).map(|b| subsets(d, b)).collect();
    let faces = complex.faces()?;
    Ok(faces.par_iter().all(|&face| {
        let b = face.count_ones() as usize;
        if b > d {
            return false;
        }
        let cols = face_columns(face, &map);
        row_sets[b].iter().all(|rows| determinant(&field, submatrix(&m.rows, rows, &cols)) != 0)
    }))
}

fn sample(rng: &mut ChaCha8Rng, p: u64) -> u64 {
    rng.random_range(0..p)
}

/// Samples a good system for `complex` with `dim + 1` rows. Reproducible from
/// `(seed, field, complex)`.
pub fn find_good_sop(complex: &SimplicialComplex, field: &PrimeField, seed: u64, budget: usize) -> Result<SopMatrix> {
    let d = (complex.dimension() + 1) as usize;
    let columns = complex.vertex_set();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..budget.max(1) {
        let rows = (0..d).map(|_| (0..columns.len()).map(|_| sample(&mut rng, field.modulus())).collect()).collect();
        let m = SopMatrix::new(field.modulus(), columns.clone(), rows)?;
        if is_good(complex, &m)? {
            return Ok(m);
        }
    }
    Err(Error::BudgetExhausted(budget))
}

/// Extends a good system `m` of `delta` to a good system of `sigma` whose
/// top-left block is `m`. `delta` must be a full subcomplex of `sigma`.
pub fn extend_good_sop(
    delta: &SimplicialComplex,
    m: &SopMatrix,
    sigma: &SimplicialComplex,
    field: &PrimeField,
    seed: u64,
    budget: usize,
) -> Result<SopMatrix> {
    if m.modulus != field.modulus() {
        return Err(Error::Shape(format!("matrix is over F_{} but the field is F_{}", m.modulus, field.modulus())));
    }
    if !is_full_subcomplex(delta, sigma)? {
        return Err(Error::NotFull("the source complex".into()));
    }
    if !is_good(delta, m)? {
        return Err(Error::NotGood);
    }
    let (d, n) = (m.nrows(), m.ncols());
    let e = (sigma.dimension() + 1) as usize;
    let mut columns = m.columns.clone();
    columns.extend(sigma.vertex_set().into_iter().filter(|v| !m.columns.contains(v)));
    let total = columns.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..budget.max(1) {
        let rows: Vec<Vec<u64>> = (0..e)
            .map(|i| {
                (0..total)
                    .map(|j| if i < d && j < n { m.rows[i][j] } else { sample(&mut rng, field.modulus()) })
                    .collect()
            })
            .collect();
        let ext = SopMatrix::new(field.modulus(), columns.clone(), rows)?;
        if is_good(sigma, &ext)? {
            debug_assert_eq!(ext.block(d, n), m.rows);
            return Ok(ext);
        }
    }
    Err(Error::BudgetExhausted(budget))
}

/// Good systems `M_1, …, M_N` for a chain of pure complexes, each a full
/// subcomplex of the next, with `M_{i+1}`'s top-left block equal to `M_i`.
pub fn compatible_chain(
    complexes: &[SimplicialComplex],
    field: &PrimeField,
    seed: u64,
    budget: usize,
) -> Result<Vec<SopMatrix>> {
    let at = |level: usize| move |e: Error| Error::ChainLevel { level, source: Box::new(e) };
    let mut out: Vec<SopMatrix> = Vec::with_capacity(complexes.len());
    for (i, c) in complexes.iter().enumerate() {
        if !c.is_pure() {
            return Err(at(i)(Error::NotPure));
        }
        let level_seed = seed.wrapping_add(i as u64);
        let m = match out.last() {
            None => find_good_sop(c, field, level_seed, budget).map_err(at(i))?,
            Some(prev) => extend_good_sop(&complexes[i - 1], prev, c, field, level_seed, budget).map_err(at(i))?,
        };
        out.push(m);
    }
    Ok(out)
}
