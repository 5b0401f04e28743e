mod common;

use std::cmp::Ordering;
use std::collections::BTreeSet;

use common::config;
use proptest::prelude::*;

use infcm::field::PrimeField;
use infcm::groebner::{check_order_compatibility, divide, leading_monomial, leading_term};
use infcm::monomial::{divides, Monomial, VarIndex};
use infcm::order::TermOrder;
use infcm::poly::Polynomial;
use infcm::schubert::Minor;

const GRID: u32 = 3;

fn grid_vars() -> Vec<VarIndex> {
    (1..=GRID).flat_map(|i| (1..=GRID).map(move |j| VarIndex::Grid(i, j))).collect()
}

fn grid_monomial(exps: &[u32]) -> Monomial {
    Monomial::new(grid_vars().into_iter().zip(exps.iter().copied())).unwrap()
}

fn exps() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..3, (GRID * GRID) as usize)
}

/// Independent comparison: variables ranked by an explicit table built from
/// the diagonal sequence 0, 1, -1, 2, -2, … and the row inside a diagonal.
fn oracle(a: &Monomial, b: &Monomial) -> Ordering {
    let mut diags = vec![0i64];
    for d in 1..(GRID as i64) {
        diags.push(d);
        diags.push(-d);
    }
    let mut ranked = Vec::new();
    for d in diags {
        for i in 1..=GRID as i64 {
            let j = i + d;
            if (1..=GRID as i64).contains(&j) {
                ranked.push(VarIndex::Grid(i as u32, j as u32));
            }
        }
    }
    for v in ranked.iter().rev() {
        match a.exponent(*v).cmp(&b.exponent(*v)) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

fn poly(field: &PrimeField, terms: &[(u64, Vec<u32>)]) -> Polynomial<u64> {
    Polynomial::from_terms(field, terms.iter().map(|(c, e)| (*c % field.modulus(), grid_monomial(e)))).unwrap()
}

fn terms() -> impl Strategy<Value = Vec<(u64, Vec<u32>)>> {
    prop::collection::vec((1u64..100, exps()), 1..5)
}

proptest! {
    #![proptest_config(config(256, 0x5eed_0002))]

    #[test]
    fn antidiagonal_order_matches_oracle(a in exps(), b in exps()) {
        let (a, b) = (grid_monomial(&a), grid_monomial(&b));
        prop_assert_eq!(TermOrder::AntidiagonalOmega2.compare(&a, &b).unwrap(), oracle(&a, &b));
    }

    #[test]
    fn term_order_axioms(a in exps(), b in exps(), c in exps()) {
        let o = TermOrder::AntidiagonalOmega2;
        let (a, b, c) = (grid_monomial(&a), grid_monomial(&b), grid_monomial(&c));
        // 1 is the smallest monomial
        prop_assert_ne!(o.compare(&Monomial::one(), &a).unwrap(), Ordering::Greater);
        // multiplicative
        prop_assert_eq!(o.compare(&a, &b).unwrap(), o.compare(&a.mul(&c).unwrap(), &b.mul(&c).unwrap()).unwrap());
        // antisymmetric and total
        prop_assert_eq!(o.compare(&a, &b).unwrap(), o.compare(&b, &a).unwrap().reverse());
        prop_assert_eq!(o.compare(&a, &b).unwrap() == Ordering::Equal, a == b);
        // transitive
        if o.compare(&a, &b).unwrap() != Ordering::Greater && o.compare(&b, &c).unwrap() != Ordering::Greater {
            prop_assert_ne!(o.compare(&a, &c).unwrap(), Ordering::Greater);
        }
    }

    #[test]
    fn infinite_lex_axioms(a in prop::collection::vec(0u32..3, 5), b in prop::collection::vec(0u32..3, 5)) {
        let m = |e: &[u32]| Monomial::new(e.iter().enumerate().map(|(i, &x)| (VarIndex::Line(i as u32 + 1), x))).unwrap();
        let expected = a.iter().rev().cmp(b.iter().rev());
        prop_assert_eq!(TermOrder::InfiniteLex.compare(&m(&a), &m(&b)).unwrap(), expected);
    }

    #[test]
    fn division_postconditions(f in terms(), gs in prop::collection::vec(terms(), 1..4), lex in any::<bool>()) {
        let field = PrimeField::default();
        let order = if lex { TermOrder::AntidiagonalOmega2.restrict(grid_vars()) } else { TermOrder::AntidiagonalOmega2 };
        let f = poly(&field, &f);
        let gs: Vec<_> = gs.iter().map(|g| poly(&field, g)).filter(|g| !g.is_zero()).collect();
        prop_assume!(!gs.is_empty());
        let d = divide(&f, &gs, &order, &field).unwrap();
        let mut acc = d.remainder.clone();
        for (q, g) in d.quotients.iter().zip(&gs) {
            acc = acc.add(&q.mul(g, &field).unwrap(), &field);
        }
        prop_assert_eq!(acc, f.clone());
        let leads: Vec<Monomial> = gs.iter().map(|g| leading_monomial(g, &order).unwrap()).collect();
        for (m, _) in d.remainder.terms() {
            prop_assert!(leads.iter().all(|l| !divides(l, m).unwrap()));
        }
        // no quotient term pushes past the leading monomial of f
        if !f.is_zero() {
            let lf = leading_monomial(&f, &order).unwrap();
            for (q, g) in d.quotients.iter().zip(&gs) {
                if !q.is_zero() {
                    let lqg = leading_monomial(&q.mul(g, &field).unwrap(), &order).unwrap();
                    prop_assert_ne!(order.compare(&lqg, &lf).unwrap(), Ordering::Greater);
                }
            }
        }
    }

    #[test]
    fn antidiagonal_term_leads_random_minors(
        rows in prop::sample::subsequence((1u32..=8).collect::<Vec<_>>(), 1..=4),
        cols_seed in prop::sample::subsequence((1u32..=8).collect::<Vec<_>>(), 4),
    ) {
        let k = rows.len();
        let minor = Minor { rows, cols: cols_seed[..k].to_vec() };
        let field = PrimeField::default();
        let det = minor.polynomial(&field).unwrap();
        let (c, m) = leading_term(&det, &TermOrder::AntidiagonalOmega2).unwrap();
        prop_assert_eq!(m, minor.antidiagonal());
        prop_assert!(c == 1 || c == field.modulus() - 1);
    }

    #[test]
    fn restricted_orders_are_compatible(ps in prop::collection::vec(terms(), 1..6), keep in 1u32..512) {
        let field = PrimeField::default();
        let small_vars: BTreeSet<VarIndex> =
            grid_vars().into_iter().enumerate().filter(|(i, _)| keep >> i & 1 == 1).map(|(_, v)| v).collect();
        let big = TermOrder::AntidiagonalOmega2.restrict(grid_vars());
        let small = TermOrder::AntidiagonalOmega2.restrict(small_vars.iter().copied());
        let polys: Vec<_> = ps.iter().map(|p| poly(&field, p)).collect();
        let projected: Vec<_> = polys.iter().map(|p| p.project(|v| small_vars.contains(v))).collect();
        let all: Vec<_> = polys.into_iter().chain(projected).collect();
        let r = check_order_compatibility(&small, &big, &small_vars, &all, &field).unwrap();
        prop_assert!(r.passed(), "{:?}", r.counterexamples);
    }
}
