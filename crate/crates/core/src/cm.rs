//! Cohen-Macaulay certificates for finite complexes.
//!
//! Two independent tests: Reisner's criterion on links (topological), and the
//! Hilbert function of `k[Δ]/(θ)` for a linear system of parameters `θ`, which
//! equals the h-vector exactly when `k[Δ]` is free over `k[θ]` (algebraic).

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{
    bits, full_subcomplex_by_faces, full_subcomplex_by_ideals, h_vector, link_mask, minimal_nonfaces,
    reduced_homology_ranks, SimplicialComplex,
};
use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};
use crate::linalg::row_reduce;
use crate::sop::{compatible_chain, find_good_sop, is_good, SopMatrix};

/// Reisner: `H̃_i(lk F) = 0` for all faces `F` (including `∅`) and all
/// `i < dim lk F`.
pub fn reisner_cm(complex: &SimplicialComplex, field: &PrimeField) -> Result<bool> {
    if complex.is_void() {
        return Err(Error::Shape("the void complex has no face ring".into()));
    }
    let faces = complex.faces()?;
    let verdicts = faces
        .par_iter()
        .map(|&f| {
            let lk = link_mask(complex, f)?;
            let dim = lk.dimension();
            // links of dimension <= 0 are nonempty, so H̃_{-1} vanishes
            if dim <= 0 {
                return Ok(true);
            }
            let ranks = reduced_homology_ranks(&lk, field)?;
            Ok(ranks[..dim as usize + 1].iter().all(|&r| r == 0))
        })
        .collect::<Result<Vec<bool>>>()?;
    Ok(verdicts.into_iter().all(|v| v))
}

/// Hilbert function of `k[Δ]/(θ)` in degrees `0, 1, …`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientDims {
    /// Dimensions of the nonzero graded pieces, or of every computed degree if
    /// the quotient did not vanish.
    pub dims: Vec<usize>,
    pub vanished: bool,
}

/// Exponent vectors of degree `t` in `f` variables, in a fixed order.
fn monomials(f: usize, t: usize) -> Vec<Vec<u32>> {
    fn go(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            go(i + 1, left - e, cur, out);
        }
    }
    if f == 0 {
        return if t == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    go(0, t as u32, &mut vec![0; f], &mut out);
    out
}

/// Computes the Hilbert function of `k[Δ]/(θ)` up to `max_degree`, stopping
/// at the first vanishing degree.
///
/// The linear forms are eliminated first: after row reduction each pivot
/// variable is a combination of the free ones `y`, so the quotient is
/// `k[y]/J` with `J` generated by the images of the minimal non-faces.
pub fn graded_quotient_dims(complex: &SimplicialComplex, m: &SopMatrix, max_degree: usize) -> Result<QuotientDims> {
    let field = m.field();
    let own = complex.with_ambient(complex.vertex_set())?;
    let mut cols = m.columns.clone();
    cols.sort();
    if cols != own.vertices() || m.columns.len() != cols.len() {
        return Err(Error::Shape("matrix columns must be exactly the vertices of the complex".into()));
    }
    let mut rref = m.rows.clone();
    let pivots = row_reduce(&field, &mut rref);
    let n = m.ncols();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let f = free.len();
    // each column as a linear form in the free variables
    let mut forms = vec![vec![0u64; f]; n];
    for (k, &c) in free.iter().enumerate() {
        forms[c][k] = 1;
    }
    for (r, &p) in pivots.iter().enumerate() {
        for (k, &c) in free.iter().enumerate() {
            forms[p][k] = field.neg(&rref[r][c]);
        }
    }
    let column_of: Vec<usize> =
        own.vertices().iter().map(|v| m.columns.iter().position(|w| w == v).expect("checked above")).collect();

    // images of the minimal non-faces, grouped by degree
    let mut generators: HashMap<usize, Vec<HashMap<Vec<u32>, u64>>> = HashMap::new();
    for nf in minimal_nonfaces(&own)? {
        let mut poly: HashMap<Vec<u32>, u64> = HashMap::from([(vec![0; f], 1)]);
        for v in bits(nf) {
            let form = &forms[column_of[v]];
            let mut next: HashMap<Vec<u32>, u64> = HashMap::new();
            for (e, c) in &poly {
                for (k, a) in form.iter().enumerate().filter(|(_, a)| **a != 0) {
                    let mut e2 = e.clone();
                    e2[k] += 1;
                    let slot = next.entry(e2).or_insert(0);
                    *slot = field.add(slot, &field.mul(c, a));
                }
            }
            next.retain(|_, c| *c != 0);
            poly = next;
        }
        generators.entry(nf.count_ones() as usize).or_default().push(poly);
    }

    let mut dims = Vec::new();
    // row-reduced basis of J in the previous degree
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut prev_monos: Vec<Vec<u32>> = Vec::new();
    for t in 0..=max_degree {
        let monos = monomials(f, t);
        let index: HashMap<&Vec<u32>, usize> = monos.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut rows: Vec<Vec<u64>> = Vec::new();
        for row in &basis {
            for k in 0..f {
                let mut out = vec![0u64; monos.len()];
                for (i, &c) in row.iter().enumerate().filter(|(_, c)| **c != 0) {
                    let mut e = prev_monos[i].clone();
                    e[k] += 1;
                    out[index[&e]] = c;
                }
                rows.push(out);
            }
        }
        for g in generators.get(&t).into_iter().flatten() {
            let mut out = vec![0u64; monos.len()];
            for (e, &c) in g {
                out[index[e]] = c;
            }
            rows.push(out);
        }
        let rank = row_reduce(&field, &mut rows).len();
        rows.truncate(rank);
        let dim = monos.len() - rank;
        if dim == 0 {
            return Ok(QuotientDims { dims, vanished: true });
        }
        dims.push(dim);
        basis = rows;
        prev_monos = monos;
    }
    Ok(QuotientDims { dims, vanished: false })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmReport {
    pub complex_id: String,
    pub pure: bool,
    pub reisner_pass: bool,
    pub sop_quotient_pass: bool,
    pub hvector: Vec<i64>,
    pub quotient_dims: Vec<usize>,
    pub modulus: u64,
    pub sop: SopMatrix,
}

impl CmReport {
    /// The two certificates agree.
    pub fn agree(&self) -> bool {
        self.reisner_pass == self.sop_quotient_pass
    }

    pub fn is_cm(&self) -> bool {
        self.reisner_pass && self.sop_quotient_pass
    }
}

/// Both certificates for `complex`, the algebraic one with the system `m`.
/// The quotient is computed up to degree `2·|V(Δ)|`.
pub fn sop_quotient_check(complex: &SimplicialComplex, m: &SopMatrix) -> Result<CmReport> {
    let field = m.field();
    let d = (complex.dimension() + 1).max(0) as usize;
    if m.nrows() != d {
        return Err(Error::Shape(format!("{} rows for a complex of dimension {}", m.nrows(), d as i64 - 1)));
    }
    let cap = 2 * m.ncols();
    let q = graded_quotient_dims(complex, m, cap)?;
    if !q.vanished {
        return Err(Error::QuotientDoesNotVanish(cap));
    }
    let h = h_vector(complex)?.0;
    let len = h.len().max(q.dims.len());
    let sop_quotient_pass = (0..len).all(|i| h.get(i).copied().unwrap_or(0) == q.dims.get(i).map_or(0, |&x| x as i64));
    let pure = complex.is_pure();
    let reisner_pass = reisner_cm(complex, &field)?;
    if reisner_pass && !pure {
        return Err(Error::Inconsistent("Reisner's criterion passed on a non-pure complex".into()));
    }
    Ok(CmReport {
        complex_id: String::new(),
        pure,
        reisner_pass,
        sop_quotient_pass,
        hvector: h,
        quotient_dims: q.dims,
        modulus: field.modulus(),
        sop: m.clone(),
    })
}

/// Samples a good system and runs both certificates.
pub fn certify_cm(complex: &SimplicialComplex, field: &PrimeField, seed: u64, budget: usize) -> Result<CmReport> {
    let m = find_good_sop(complex, field, seed, budget)?;
    sop_quotient_check(complex, &m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fullness {
    pub by_faces: bool,
    pub by_ideals: bool,
}

impl Fullness {
    pub fn holds(&self) -> bool {
        self.by_faces && self.by_ideals
    }
}

/// Both fullness tests; vertex sets that do not nest count as not full.
pub fn fullness(delta: &SimplicialComplex, sigma: &SimplicialComplex) -> Result<Fullness> {
    let by_faces = match full_subcomplex_by_faces(delta, sigma) {
        Err(Error::VerticesNotNested(_)) => return Ok(Fullness { by_faces: false, by_ideals: false }),
        r => r?,
    };
    Ok(Fullness { by_faces, by_ideals: full_subcomplex_by_ideals(delta, sigma)? })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelReport {
    pub level: usize,
    pub subcomplex_of_next: Option<bool>,
    pub full_in_next: Option<Fullness>,
    pub full_in_top: Fullness,
    pub cm: CmReport,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SopChainReport {
    pub pass: bool,
    pub error: Option<String>,
    pub good: Vec<bool>,
    pub blocks_equal: bool,
    pub matrices: Vec<SopMatrix>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainReport {
    pub modulus: u64,
    pub seed: u64,
    pub levels: Vec<LevelReport>,
    pub union_equals_top: bool,
    pub sop_chain: SopChainReport,
    pub pass: bool,
}

fn union_equals_top(chain: &[SimplicialComplex], top: &SimplicialComplex) -> Result<bool> {
    for c in chain {
        if !c.is_subcomplex_of(top)? {
            return Ok(false);
        }
    }
    Ok(top.facets().iter().all(|f| chain.iter().any(|c| c.contains_face(f))))
}

fn sop_chain_report(
    chain: &[SimplicialComplex],
    field: &PrimeField,
    seed: u64,
    budget: usize,
) -> Result<SopChainReport> {
    let matrices = match compatible_chain(chain, field, seed, budget) {
        Ok(ms) => ms,
        Err(e) => {
            return Ok(SopChainReport {
                pass: false,
                error: Some(e.to_string()),
                good: Vec::new(),
                blocks_equal: false,
                matrices: Vec::new(),
            })
        }
    };
    let good = chain.iter().zip(&matrices).map(|(c, m)| is_good(c, m)).collect::<Result<Vec<_>>>()?;
    let blocks_equal = matrices.windows(2).all(|w| w[1].block(w[0].nrows(), w[0].ncols()) == w[0].rows);
    let pass = blocks_equal && good.iter().all(|&g| g);
    Ok(SopChainReport { pass, error: None, good, blocks_equal, matrices })
}

/// Checks the hypotheses of the direct-limit theorem on a finite chain
/// `Δ_1 ⊆ … ⊆ Δ_N` with `top` standing in for the union.
///
/// The CM certificate at level `i` uses the chain's `i`-th system when the
/// compatible chain exists, and an independently sampled one otherwise.
pub fn verify_theorem_a_hypotheses(
    chain: &[SimplicialComplex],
    top: &SimplicialComplex,
    field: &PrimeField,
    seed: u64,
    budget: usize,
) -> Result<ChainReport> {
    let sop_chain = sop_chain_report(chain, field, seed, budget)?;
    let levels = (0..chain.len())
        .into_par_iter()
        .map(|i| {
            let c = &chain[i];
            let next = chain.get(i + 1);
            let subcomplex_of_next = next.map(|n| c.is_subcomplex_of(n)).transpose()?;
            let full_in_next = next.map(|n| fullness(c, n)).transpose()?;
            let full_in_top = fullness(c, top)?;
            let mut cm = match sop_chain.matrices.get(i) {
                Some(m) => sop_quotient_check(c, m)?,
                None => certify_cm(c, field, seed.wrapping_add(i as u64), budget)?,
            };
            cm.complex_id = format!("level {}", i + 1);
            let pass = subcomplex_of_next.unwrap_or(true)
                && full_in_next.is_none_or(|f| f.holds())
                && full_in_top.holds()
                && cm.pure
                && cm.is_cm();
            Ok(LevelReport { level: i + 1, subcomplex_of_next, full_in_next, full_in_top, cm, pass })
        })
        .collect::<Result<Vec<_>>>()?;
    let union_equals_top = union_equals_top(chain, top)?;
    let pass = levels.iter().all(|l| l.pass) && union_equals_top && sop_chain.pass;
    Ok(ChainReport { modulus: field.modulus(), seed, levels, union_equals_top, sop_chain, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::VarIndex;
    use crate::sop::DEFAULT_SAMPLE_BUDGET;

    fn cx(vs: &[u32], facets: &[&[u32]]) -> SimplicialComplex {
        let f: Vec<Vec<VarIndex>> = facets.iter().map(|f| f.iter().map(|&n| VarIndex::Line(n)).collect()).collect();
        SimplicialComplex::from_facets(vs.iter().map(|&n| VarIndex::Line(n)).collect(), &f).unwrap()
    }
    fn boundary() -> SimplicialComplex {
        cx(&[1, 2, 3], &[&[1, 2], &[1, 3], &[2, 3]])
    }
    fn two_edges() -> SimplicialComplex {
        cx(&[1, 2, 3, 4], &[&[1, 2], &[3, 4]])
    }
    fn p() -> PrimeField {
        PrimeField::default()
    }

    #[test]
    fn reisner_examples() {
        assert!(reisner_cm(&cx(&[1, 2, 3], &[&[1, 2, 3]]), &p()).unwrap());
        assert!(reisner_cm(&boundary(), &p()).unwrap());
        assert!(!reisner_cm(&two_edges(), &p()).unwrap());
        // two points: 0-dimensional complexes are always CM
        assert!(reisner_cm(&cx(&[1, 2], &[&[1], &[2]]), &p()).unwrap());
        // edge plus isolated point: not pure, not CM
        assert!(!reisner_cm(&cx(&[1, 2, 3], &[&[1, 2], &[3]]), &p()).unwrap());
    }

    #[test]
    fn quotient_examples() {
        let r = certify_cm(&boundary(), &p(), 1, DEFAULT_SAMPLE_BUDGET).unwrap();
        assert_eq!(r.quotient_dims, vec![1, 1, 1]);
        assert_eq!(r.hvector, vec![1, 1, 1]);
        assert!(r.sop_quotient_pass && r.reisner_pass);
        let r = certify_cm(&cx(&[1, 2], &[&[1, 2]]), &p(), 1, DEFAULT_SAMPLE_BUDGET).unwrap();
        assert_eq!(r.quotient_dims, vec![1]);
        assert!(r.sop_quotient_pass);
        let r = certify_cm(&two_edges(), &p(), 1, DEFAULT_SAMPLE_BUDGET).unwrap();
        // h = (1, 2, -1) is not a Hilbert function
        assert_eq!(r.hvector, vec![1, 2, -1]);
        // four quadric images fill the three degree-2 monomials in two free variables
        assert_eq!(r.quotient_dims, vec![1, 2]);
        assert!(!r.sop_quotient_pass && !r.reisner_pass && r.agree());
    }

    #[test]
    fn quotient_without_sop_does_not_vanish() {
        let b = boundary();
        let m = SopMatrix::new(32003, b.vertex_set(), vec![vec![1, 1, 1], vec![1, 1, 3]]).unwrap();
        assert!(!graded_quotient_dims(&b, &m, 6).unwrap().vanished);
        assert_eq!(sop_quotient_check(&b, &m), Err(Error::QuotientDoesNotVanish(6)));
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials(0, 0), vec![Vec::<u32>::new()]);
        assert!(monomials(0, 2).is_empty());
        assert_eq!(monomials(2, 2).len(), 3);
        assert_eq!(monomials(3, 4).len(), 15);
    }

    #[test]
    fn chain_of_simplices_passes() {
        let chain = [cx(&[1], &[&[1]]), cx(&[1, 2], &[&[1, 2]]), cx(&[1, 2, 3], &[&[1, 2, 3]])];
        let r = verify_theorem_a_hypotheses(&chain, &chain[2], &p(), 1, DEFAULT_SAMPLE_BUDGET).unwrap();
        assert!(r.pass, "{r:#?}");
        assert!(r.sop_chain.blocks_equal);
    }

    #[test]
    fn non_full_level_fails() {
        let top = cx(&[1, 2, 3], &[&[1, 2, 3]]);
        let chain = [cx(&[1, 2], &[&[1], &[2]]), top.clone()];
        let r = verify_theorem_a_hypotheses(&chain, &top, &p(), 1, DEFAULT_SAMPLE_BUDGET).unwrap();
        assert!(!r.pass);
        assert!(!r.levels[0].full_in_top.holds());
        assert!(!r.levels[0].pass);
        assert!(r.levels[1].pass);
    }
}
