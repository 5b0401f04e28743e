//! Division algorithm, S-polynomials, Buchberger's criterion and the checks
//! relating term orders on nested variable sets.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{divides, minimal_generators, Monomial, MonomialIdeal, VarIndex};
use crate::order::{OrderKey, TermOrder};
use crate::poly::Polynomial;

pub const DEFAULT_PAIR_BUDGET: usize = 10_000;

/// Largest term of `f` under `order`, as `(coefficient, monomial)`.
pub fn leading_term<E: Clone + PartialEq>(f: &Polynomial<E>, order: &TermOrder) -> Result<(E, Monomial)> {
    let mut best: Option<(OrderKey, &Monomial, &E)> = None;
    for (m, c) in f.terms() {
        let k = order.key(m)?;
        if best.as_ref().is_none_or(|(bk, _, _)| k > *bk) {
            best = Some((k, m, c));
        }
    }
    best.map(|(_, m, c)| (c.clone(), m.clone())).ok_or(Error::ZeroPolynomial)
}

pub fn leading_monomial<E: Clone + PartialEq>(f: &Polynomial<E>, order: &TermOrder) -> Result<Monomial> {
    leading_term(f, order).map(|(_, m)| m)
}

/// `(L / lt f)·f − (L / lt g)·g` with `L = lcm(lm f, lm g)`.
pub fn s_polynomial<F: Field>(
    f: &Polynomial<F::Elem>,
    g: &Polynomial<F::Elem>,
    order: &TermOrder,
    field: &F,
) -> Result<Polynomial<F::Elem>> {
    let (cf, mf) = leading_term(f, order)?;
    let (cg, mg) = leading_term(g, order)?;
    let l = mf.lcm(&mg)?;
    let a = f.mul_term(&field.inv(&cf)?, &l.div(&mf).expect("lm f divides the lcm"), field)?;
    let b = g.mul_term(&field.inv(&cg)?, &l.div(&mg).expect("lm g divides the lcm"), field)?;
    Ok(a.sub(&b, field))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Division<E> {
    pub quotients: Vec<Polynomial<E>>,
    pub remainder: Polynomial<E>,
}

/// Multivariate division: `f = Σ q_i g_i + r` where no term of `r` is
/// divisible by any `lm(g_i)`. Terms of the running dividend are processed
/// largest first and the first divisor in list order wins.
pub fn divide<F: Field>(
    f: &Polynomial<F::Elem>,
    divisors: &[Polynomial<F::Elem>],
    order: &TermOrder,
    field: &F,
) -> Result<Division<F::Elem>> {
    let leads = divisors.iter().map(|g| leading_term(g, order)).collect::<Result<Vec<_>>>()?;
    let mut work: BTreeMap<OrderKey, (Monomial, F::Elem)> = BTreeMap::new();
    for (m, c) in f.terms() {
        work.insert(order.key(m)?, (m.clone(), c.clone()));
    }
    let mut quotient_terms: Vec<Vec<(F::Elem, Monomial)>> = vec![Vec::new(); divisors.len()];
    let mut remainder = Vec::new();
    while let Some((_, (m, c))) = work.pop_last() {
        let hit = leads.iter().position(|(_, lm)| divides(lm, &m).unwrap_or(false));
        let Some(i) = hit else {
            remainder.push((c, m));
            continue;
        };
        let (lc, lm) = &leads[i];
        let q = field.div(&c, lc)?;
        let t = m.div(lm).expect("checked divisibility");
        for (gm, gc) in divisors[i].terms() {
            if gm == lm {
                continue; // cancels the popped term exactly
            }
            let pm = gm.mul(&t)?;
            let delta = field.neg(&field.mul(&q, gc));
            let key = order.key(&pm)?;
            match work.get_mut(&key) {
                Some((_, v)) => {
                    *v = field.add(v, &delta);
                    if field.is_zero(v) {
                        work.remove(&key);
                    }
                }
                None => {
                    work.insert(key, (pm, delta));
                }
            }
        }
        quotient_terms[i].push((q, t));
    }
    let quotients =
        quotient_terms.into_iter().map(|ts| Polynomial::from_terms(field, ts)).collect::<Result<Vec<_>>>()?;
    let remainder = Polynomial::from_terms(field, remainder)?;
    debug_assert!(remainder.terms().all(|(m, _)| leads.iter().all(|(_, lm)| !divides(lm, m).unwrap_or(false))));
    Ok(Division { quotients, remainder })
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuchbergerOptions {
    /// Skip pairs whose leading monomials are coprime (their S-polynomial
    /// always reduces to zero). Off by default: the exhaustive path is the
    /// reference.
    pub skip_coprime: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub generators: usize,
    pub pairs_checked: usize,
    pub pairs_skipped: usize,
    /// Pairs `(i, j)` whose S-polynomial leaves a nonzero remainder.
    pub failing_pairs: Vec<(usize, usize)>,
}

impl CriterionReport {
    pub fn is_groebner(&self) -> bool {
        self.failing_pairs.is_empty()
    }
}

/// Buchberger's criterion on every pair of `basis`.
pub fn buchberger_criterion<F: Field>(
    basis: &[Polynomial<F::Elem>],
    order: &TermOrder,
    field: &F,
    options: BuchbergerOptions,
) -> Result<CriterionReport> {
    if basis.iter().any(Polynomial::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    let leads = basis.iter().map(|g| leading_monomial(g, order)).collect::<Result<Vec<_>>>()?;
    let mut pairs = Vec::new();
    let mut skipped = 0;
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if options.skip_coprime && leads[i].is_coprime(&leads[j]) {
                skipped += 1;
            } else {
                pairs.push((i, j));
            }
        }
    }
    let verdicts = pairs
        .par_iter()
        .map(|&(i, j)| {
            let s = s_polynomial(&basis[i], &basis[j], order, field)?;
            Ok(divide(&s, basis, order, field)?.remainder.is_zero())
        })
        .collect::<Result<Vec<bool>>>()?;
    let failing_pairs = pairs.iter().zip(&verdicts).filter(|(_, ok)| !**ok).map(|(p, _)| *p).collect();
    Ok(CriterionReport { generators: basis.len(), pairs_checked: pairs.len(), pairs_skipped: skipped, failing_pairs })
}

pub fn is_groebner_basis<F: Field>(
    basis: &[Polynomial<F::Elem>],
    order: &TermOrder,
    field: &F,
    options: BuchbergerOptions,
) -> Result<bool> {
    Ok(buchberger_criterion(basis, order, field, options)?.is_groebner())
}

/// Buchberger completion: appends nonzero S-polynomial remainders until every
/// pair reduces to zero. Fails once more than `pair_budget` pairs were reduced.
pub fn buchberger_completion<F: Field>(
    generators: &[Polynomial<F::Elem>],
    order: &TermOrder,
    field: &F,
    pair_budget: usize,
) -> Result<Vec<Polynomial<F::Elem>>> {
    let mut basis: Vec<Polynomial<F::Elem>> = generators.iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut queue: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            queue.push((i, j));
        }
    }
    let mut processed = 0;
    while let Some((i, j)) = queue.pop() {
        processed += 1;
        if processed > pair_budget {
            return Err(Error::PairBudgetExceeded(pair_budget));
        }
        let s = s_polynomial(&basis[i], &basis[j], order, field)?;
        let r = divide(&s, &basis, order, field)?.remainder;
        if !r.is_zero() {
            let (c, _) = leading_term(&r, order)?;
            let r = r.scale(&field.inv(&c)?, field);
            let k = basis.len();
            basis.push(r);
            queue.extend((0..k).map(|i| (i, k)));
        }
    }
    Ok(basis)
}

/// `⟨lm(g) : g ∈ G⟩`, minimalized. With `check` set, refuses if `G` fails
/// Buchberger's criterion.
pub fn initial_ideal<F: Field>(
    basis: &[Polynomial<F::Elem>],
    order: &TermOrder,
    field: &F,
    check: bool,
) -> Result<MonomialIdeal> {
    if check && !is_groebner_basis(basis, order, field, BuchbergerOptions::default())? {
        return Err(Error::NotGroebner);
    }
    let leads = basis.iter().map(|g| leading_monomial(g, order)).collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(minimal_generators(&leads)?)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompatibilityReport {
    pub checked: usize,
    pub skipped: usize,
    pub counterexamples: Vec<String>,
}

impl CompatibilityReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Compares leading terms under a restricted order and its parent. For each
/// polynomial supported on `small_vars`, `ι(lt_small f) = lt_big(ι f)`; for each
/// polynomial whose big leading monomial lies in `small_vars`,
/// `π(lt_big g) = lt_small(π g)`. Polynomials where neither applies are skipped.
pub fn check_order_compatibility<F: Field>(
    small: &TermOrder,
    big: &TermOrder,
    small_vars: &BTreeSet<VarIndex>,
    polys: &[Polynomial<F::Elem>],
    field: &F,
) -> Result<CompatibilityReport> {
    match small {
        TermOrder::Restriction { vars, .. } if vars == small_vars && small.base() == big.base() => {}
        _ => return Err(Error::Inconsistent("small order is not the restriction of the big one".into())),
    }
    let _ = field;
    let mut report = CompatibilityReport::default();
    for f in polys.iter().filter(|f| !f.is_zero()) {
        let mut applicable = false;
        if f.variables().iter().all(|v| small_vars.contains(v)) {
            applicable = true;
            let a = leading_term(f, small)?;
            let b = leading_term(f, big)?;
            if a != b {
                report.counterexamples.push(format!("inclusion: lt_small = {}, lt_big = {}", a.1, b.1));
            }
        }
        let (cb, mb) = leading_term(f, big)?;
        if mb.support().all(|v| small_vars.contains(&v)) {
            applicable = true;
            let projected = f.project(|v| small_vars.contains(v));
            let ps = leading_term(&projected, small)?;
            if ps != (cb, mb.clone()) {
                report.counterexamples.push(format!("projection: lt_big = {}, lt_small(π) = {}", mb, ps.1));
            }
        }
        if applicable {
            report.checked += 1;
        } else {
            report.skipped += 1;
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InitialUnionReport {
    /// Minimal generators of `in_<(∪ η_n(I_n))` at the top truncation.
    pub initial_of_union: Vec<Monomial>,
    /// Minimal generators of `∪ η_n(in_{<_n}(I_n))`.
    pub union_of_initials: Vec<Monomial>,
    pub equal: bool,
}

/// Compares the initial ideal of the union of a chain of ideals with the union
/// of the levelwise initial ideals. Each level is a Gröbner basis under its
/// own order; `big` is the order on the top ring.
pub fn check_initial_union<F: Field>(
    levels: &[(Vec<Polynomial<F::Elem>>, TermOrder)],
    big: &TermOrder,
    field: &F,
    pair_budget: usize,
) -> Result<InitialUnionReport> {
    let mut union_leads = Vec::new();
    let mut all = Vec::new();
    for (basis, order) in levels {
        if !is_groebner_basis(basis, order, field, BuchbergerOptions::default())? {
            return Err(Error::NotGroebner);
        }
        for g in basis {
            union_leads.push(leading_monomial(g, order)?);
            all.push(g.clone());
        }
    }
    let union_of_initials = minimal_generators(&union_leads)?;
    let completed = buchberger_completion(&all, big, field, pair_budget)?;
    let leads = completed.iter().map(|g| leading_monomial(g, big)).collect::<Result<Vec<_>>>()?;
    let initial_of_union = minimal_generators(&leads)?;
    let equal = initial_of_union == union_of_initials;
    Ok(InitialUnionReport { initial_of_union, union_of_initials, equal })
}
