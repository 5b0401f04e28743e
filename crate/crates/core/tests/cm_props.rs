mod common;

use std::collections::HashMap;

use common::*;
use proptest::prelude::*;

use infcm::cm::{certify_cm, graded_quotient_dims, reisner_cm};
use infcm::complex::SimplicialComplex;
use infcm::field::{Field, PrimeField};
use infcm::linalg::rank;
use infcm::sop::{extend_good_sop, find_good_sop, is_good, stanley_check, SopMatrix};

/// Direct computation of `dim (k[Δ]/(θ))_t`: the face-supported monomials of
/// degree `t` modulo the span of `θ_i · m` for face-supported `m` of degree
/// `t - 1`, with terms outside the faces dropped.
fn direct_quotient_dims(c: &SimplicialComplex, m: &SopMatrix, max_t: usize) -> Vec<usize> {
    let field = m.field();
    let n = m.ncols();
    let col_vertex: Vec<u32> = m.columns.iter().map(|v| c.encode(&[*v]).unwrap().trailing_zeros()).collect();
    let is_face = |e: &[u32]| {
        let mask = e.iter().enumerate().filter(|(_, &x)| x > 0).fold(0u128, |a, (i, _)| a | 1 << col_vertex[i]);
        c.contains_mask(mask)
    };
    let basis = |t: usize| {
        let mut out = Vec::new();
        let mut cur = vec![0u32; n];
        fn go(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if i + 1 >= cur.len() {
                if !cur.is_empty() {
                    cur[i] = left;
                    out.push(cur.clone());
                } else if left == 0 {
                    out.push(Vec::new());
                }
                return;
            }
            for e in 0..=left {
                cur[i] = e;
                go(i + 1, left - e, cur, out);
            }
        }
        go(0, t as u32, &mut cur, &mut out);
        out.retain(|e| is_face(e));
        out
    };
    let mut dims = Vec::new();
    for t in 0..=max_t {
        let b = basis(t);
        let index: HashMap<&Vec<u32>, usize> = b.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut rows = Vec::new();
        if t > 0 {
            for e in basis(t - 1) {
                for theta in &m.rows {
                    let mut row = vec![0u64; b.len()];
                    for (j, &a) in theta.iter().enumerate() {
                        let mut e2 = e.clone();
                        e2[j] += 1;
                        if let Some(&k) = index.get(&e2) {
                            row[k] = field.add(&row[k], &a);
                        }
                    }
                    rows.push(row);
                }
            }
        }
        dims.push(b.len() - if rows.is_empty() { 0 } else { rank(&field, rows) });
    }
    dims
}

fn matrix(c: &SimplicialComplex, p: u64, entries: &[u64]) -> SopMatrix {
    let d = (c.dimension() + 1) as usize;
    let cols = c.vertex_set();
    let rows =
        (0..d).map(|i| (0..cols.len()).map(|j| entries[(i * cols.len() + j) % entries.len()] % p).collect()).collect();
    SopMatrix::new(p, cols, rows).unwrap()
}

proptest! {
    #![proptest_config(config(200, 0x5eed_0003))]

    #[test]
    fn stanley_criterion_matches_finite_quotient(c in pure_complex(6), entries in prop::collection::vec(0u64..7, 36)) {
        prop_assume!(c.dimension() >= 0);
        let m = matrix(&c, 7, &entries);
        let d = m.nrows();
        // a quotient spanned by face monomials of degree <= d is finite iff it vanishes at degree d + 1
        let q = graded_quotient_dims(&c, &m, d + 1).unwrap();
        prop_assert_eq!(stanley_check(&c, &m).unwrap(), q.vanished);
    }

    #[test]
    fn quotient_matches_direct_computation(c in any_complex(5), entries in prop::collection::vec(0u64..7, 25)) {
        prop_assume!(c.dimension() >= 0);
        let m = matrix(&c, 7, &entries);
        let max_t = m.nrows() + 1;
        let direct = direct_quotient_dims(&c, &m, max_t);
        let q = graded_quotient_dims(&c, &m, max_t).unwrap();
        let mut fast = q.dims.clone();
        fast.resize(max_t + 1, 0);
        prop_assert_eq!(direct, fast);
    }

    #[test]
    fn reisner_agrees_with_sop_quotient(c in any_complex(7), seed in 0u64..1000) {
        prop_assume!(c.dimension() >= 0);
        let field = PrimeField::default();
        let r = certify_cm(&c, &field, seed, 64).unwrap();
        prop_assert!(r.agree(), "{:?}", r);
        if r.reisner_pass {
            prop_assert!(r.pure);
        }
        prop_assert_eq!(reisner_cm(&c, &field).unwrap(), r.reisner_pass);
    }

    #[test]
    fn good_implies_stanley(c in pure_complex(6), seed in 0u64..1000) {
        let field = PrimeField::default();
        let m = find_good_sop(&c, &field, seed, 64).unwrap();
        prop_assert!(is_good(&c, &m).unwrap());
        prop_assert!(stanley_check(&c, &m).unwrap());
        prop_assert_eq!(&m, &find_good_sop(&c, &field, seed, 64).unwrap());
    }

    #[test]
    fn extension_keeps_block(sigma in pure_complex(6), keep in 1u32..64, seed in 0u64..1000) {
        let field = PrimeField::default();
        let n = sigma.vertices().len();
        let keep = keep & ((1 << n) - 1);
        let faces: Vec<u32> = (0..(1u32 << n)).filter(|&f| f & !keep == 0 && sigma.contains_face(&decode(n, f))).collect();
        let delta = complex(n, &faces);
        prop_assume!(delta.dimension() >= 0 && delta.is_pure());
        let m = find_good_sop(&delta, &field, seed, 64).unwrap();
        let e = extend_good_sop(&delta, &m, &sigma, &field, seed + 1, 64).unwrap();
        prop_assert_eq!(e.block(m.nrows(), m.ncols()), m.rows.clone());
        prop_assert_eq!(&e.columns[..m.ncols()], &m.columns[..]);
        prop_assert!(is_good(&sigma, &e).unwrap());
    }
}
