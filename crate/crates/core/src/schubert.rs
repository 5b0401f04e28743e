//! Partial permutations, rank matrices and Schubert determinantal ideals.
//!
//! `σ ∈ S_{m,n}` is an injection `[m] → [n]`. Its rank matrix counts the ones
//! of the permutation matrix weakly to the left and above each entry, and
//! `I_σ` is generated by the `(r_{k,l}+1)`-minors of every top-left `k × l`
//! block of the generic matrix `[x_{i,j}]`. Infinite permutations enter through
//! their truncations `σ_m = σ|_{[m]} ∈ S_{m, max σ([m])}`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cm::{verify_theorem_a_hypotheses, ChainReport};
use crate::complex::{complex_from_ideal, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};
use crate::groebner::{
    buchberger_criterion, check_initial_union, divide, leading_monomial, BuchbergerOptions, CriterionReport,
    InitialUnionReport,
};
use crate::linalg::subsets;
use crate::monomial::{minimal_generators, Monomial, MonomialIdeal, VarIndex};
use crate::order::TermOrder;
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialPermutation {
    images: Vec<u32>,
    n: u32,
}

impl PartialPermutation {
    /// `σ(j) = images[j-1]` in `S_{m,n}` with `m = images.len()`.
    pub fn new(images: Vec<u32>, n: u32) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &v in &images {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!("image {v} outside 1..={n}")));
            }
            if !seen.insert(v) {
                return Err(Error::InvalidPermutation(format!("image {v} repeated")));
            }
        }
        // injectivity into [n] already forces m <= n
        Ok(PartialPermutation { images, n })
    }

    /// One-line notation, e.g. `2 5 3 1`; the width is the largest image.
    pub fn parse(s: &str) -> Result<Self> {
        let images = parse_numbers(s)?;
        if images.is_empty() {
            return Err(Error::InvalidPermutation("empty permutation".into()));
        }
        let n = *images.iter().max().expect("nonempty");
        Self::new(images, n)
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn m(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Variables of `T_m`: the `m × n` grid, row-major.
    pub fn variables(&self) -> Vec<VarIndex> {
        grid_variables(self.m(), self.n)
    }

    /// The 0/1 permutation matrix entry at `(i, j)`.
    pub fn matrix_entry(&self, i: u32, j: u32) -> bool {
        self.images.get(i as usize - 1) == Some(&j)
    }
}

impl fmt::Display for PartialPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.images.iter().map(ToString::to_string).collect();
        write!(f, "{}", s.join(" "))
    }
}

fn parse_numbers(s: &str) -> Result<Vec<u32>> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u32>().map_err(|_| Error::InvalidPermutation(format!("`{t}` is not a positive integer"))))
        .collect()
}

pub fn grid_variables(m: u32, n: u32) -> Vec<VarIndex> {
    (1..=m).flat_map(|i| (1..=n).map(move |j| VarIndex::Grid(i, j))).collect()
}

/// A bijection of the positive integers we can truncate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum InfinitePermutation {
    /// Identity outside the listed `i ↦ σ(i)` pairs.
    FinitelySupported(BTreeMap<u32, u32>),
    /// `σ(1) = 1`, `σ(2k) = 2k + 1`, `σ(2k + 1) = 2k`.
    RuleEven,
}

impl InfinitePermutation {
    pub fn finitely_supported(pairs: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (i, v) in pairs {
            if i == 0 || v == 0 {
                return Err(Error::InvalidPermutation("indices start at 1".into()));
            }
            if map.insert(i, v).is_some_and(|old| old != v) {
                return Err(Error::InvalidPermutation(format!("{i} has two images")));
            }
        }
        map.retain(|i, v| i != v);
        let domain: BTreeSet<u32> = map.keys().copied().collect();
        let range: BTreeSet<u32> = map.values().copied().collect();
        if domain != range || range.len() != map.len() {
            return Err(Error::InvalidPermutation("pairs are not a bijection of their support".into()));
        }
        Ok(InfinitePermutation::FinitelySupported(map))
    }

    pub fn identity() -> Self {
        InfinitePermutation::FinitelySupported(BTreeMap::new())
    }

    /// Cycle notation `(1 2)(3 5)`, one-line notation of a permutation of
    /// `1..=k` extended by the identity, or the names `id` and `rule:even`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        match t {
            "id" => return Ok(Self::identity()),
            "rule:even" => return Ok(InfinitePermutation::RuleEven),
            _ => {}
        }
        if t.contains('(') {
            let mut pairs = Vec::new();
            let mut rest = t;
            while let Some(open) = rest.find('(') {
                if !rest[..open].trim().is_empty() {
                    return Err(Error::InvalidPermutation(format!("unexpected `{}`", rest[..open].trim())));
                }
                let close =
                    rest[open..].find(')').ok_or_else(|| Error::InvalidPermutation("unbalanced parenthesis".into()))?
                        + open;
                let cycle = parse_numbers(&rest[open + 1..close])?;
                for (k, &a) in cycle.iter().enumerate() {
                    pairs.push((a, cycle[(k + 1) % cycle.len()]));
                }
                rest = &rest[close + 1..];
            }
            if !rest.trim().is_empty() {
                return Err(Error::InvalidPermutation(format!("unexpected `{}`", rest.trim())));
            }
            let mut seen = BTreeSet::new();
            if pairs.iter().any(|(a, _)| !seen.insert(*a)) {
                return Err(Error::InvalidPermutation("cycles are not disjoint".into()));
            }
            Self::finitely_supported(pairs)
        } else {
            let images = parse_numbers(t)?;
            let k = images.len() as u32;
            let sorted: BTreeSet<u32> = images.iter().copied().collect();
            if sorted.len() != images.len() || sorted.iter().copied().ne(1..=k) {
                return Err(Error::InvalidPermutation(format!("`{t}` is not a permutation of 1..={k}")));
            }
            Self::finitely_supported((1..=k).zip(images))
        }
    }

    pub fn apply(&self, i: u32) -> u32 {
        match self {
            InfinitePermutation::FinitelySupported(map) => map.get(&i).copied().unwrap_or(i),
            InfinitePermutation::RuleEven => match i {
                1 => 1,
                _ if i.is_multiple_of(2) => i + 1,
                _ => i - 1,
            },
        }
    }

    /// `σ_m = σ|_{[m]}` in `S_{m, max σ([m])}`.
    pub fn truncate(&self, m: u32) -> Result<PartialPermutation> {
        if m == 0 {
            return Err(Error::InvalidPermutation("truncation level starts at 1".into()));
        }
        let images: Vec<u32> = (1..=m).map(|i| self.apply(i)).collect();
        let n = *images.iter().max().expect("m >= 1");
        PartialPermutation::new(images, n)
    }
}

impl fmt::Display for InfinitePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InfinitePermutation::RuleEven => write!(f, "rule:even"),
            InfinitePermutation::FinitelySupported(map) if map.is_empty() => write!(f, "id"),
            InfinitePermutation::FinitelySupported(map) => {
                let mut done = BTreeSet::new();
                for &start in map.keys() {
                    if done.contains(&start) {
                        continue;
                    }
                    let mut cycle = vec![start];
                    done.insert(start);
                    let mut i = map[&start];
                    while i != start {
                        cycle.push(i);
                        done.insert(i);
                        i = map[&i];
                    }
                    let s: Vec<String> = cycle.iter().map(ToString::to_string).collect();
                    write!(f, "({})", s.join(" "))?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankMatrix(pub Vec<Vec<u32>>);

impl RankMatrix {
    /// `r_{k,l}` with 1-based indices.
    pub fn get(&self, k: u32, l: u32) -> u32 {
        self.0[k as usize - 1][l as usize - 1]
    }
}

impl fmt::Display for RankMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.0 {
            let s: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{}", s.join(" "))?;
        }
        Ok(())
    }
}

/// `r_{i,j} = #{k ≤ i : σ(k) ≤ j}`.
pub fn rank_matrix(sigma: &PartialPermutation) -> RankMatrix {
    let (m, n) = (sigma.m() as usize, sigma.n() as usize);
    let mut r = vec![vec![0u32; n]; m];
    for i in 0..m {
        for j in 0..n {
            let above = if i > 0 { r[i - 1][j] } else { 0 };
            let left = if j > 0 { r[i][j - 1] } else { 0 };
            let diag = if i > 0 && j > 0 { r[i - 1][j - 1] } else { 0 };
            r[i][j] = above + left - diag + sigma.matrix_entry(i as u32 + 1, j as u32 + 1) as u32;
        }
    }
    RankMatrix(r)
}

/// A minor of the generic matrix, by 1-based row and column sets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Minor {
    pub rows: Vec<u32>,
    pub cols: Vec<u32>,
}

impl Minor {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Leibniz expansion with the standard sign.
    pub fn polynomial<F: Field>(&self, field: &F) -> Result<Polynomial<F::Elem>> {
        let k = self.size();
        let mut terms = Vec::new();
        let mut perm: Vec<usize> = (0..k).collect();
        permutations(&mut perm, 0, &mut |p, sign| {
            let vars = (0..k).map(|i| VarIndex::Grid(self.rows[i], self.cols[p[i]]));
            let mono = Monomial::squarefree(vars).expect("distinct grid variables");
            terms.push((field.embed_int(sign), mono));
        });
        Polynomial::from_terms(field, terms)
    }

    /// `x_{r_1,c_k} x_{r_2,c_{k-1}} ⋯ x_{r_k,c_1}`.
    pub fn antidiagonal(&self) -> Monomial {
        let k = self.size();
        Monomial::squarefree((0..k).map(|i| VarIndex::Grid(self.rows[i], self.cols[k - 1 - i])))
            .expect("distinct grid variables")
    }
}

/// Heap-free recursive enumeration of permutations with their signs.
fn permutations(p: &mut Vec<usize>, start: usize, visit: &mut dyn FnMut(&[usize], i64)) {
    fn go(p: &mut Vec<usize>, start: usize, sign: i64, visit: &mut dyn FnMut(&[usize], i64)) {
        if start == p.len() {
            visit(p, sign);
            return;
        }
        for i in start..p.len() {
            p.swap(start, i);
            go(p, start + 1, if i == start { sign } else { -sign }, visit);
            p.swap(start, i);
        }
    }
    go(p, start, 1, visit)
}

/// Every `(r_{k,l}+1)`-minor of every top-left `k × l` block, deduplicated,
/// ordered by size, then rows, then columns.
pub fn minor_generators(sigma: &PartialPermutation) -> Vec<Minor> {
    let r = rank_matrix(sigma);
    let mut out: BTreeSet<(usize, Minor)> = BTreeSet::new();
    for k in 1..=sigma.m() {
        for l in 1..=sigma.n() {
            let size = r.get(k, l) as usize + 1;
            if size > k.min(l) as usize {
                continue;
            }
            for rows in subsets(k as usize, size) {
                for cols in subsets(l as usize, size) {
                    let minor = Minor {
                        rows: rows.iter().map(|&i| i as u32 + 1).collect(),
                        cols: cols.iter().map(|&j| j as u32 + 1).collect(),
                    };
                    out.insert((size, minor));
                }
            }
        }
    }
    out.into_iter().map(|(_, m)| m).collect()
}

/// The antidiagonal order restricted to the variables of `T_m`.
pub fn level_order(sigma: &PartialPermutation) -> TermOrder {
    TermOrder::AntidiagonalOmega2.restrict(sigma.variables())
}

/// Generators of `I_σ`. With `essential` set, a minor is dropped when it
/// reduces to zero modulo the minors kept before it.
pub fn determinantal_ideal<F: Field>(
    sigma: &PartialPermutation,
    field: &F,
    essential: bool,
) -> Result<Vec<Polynomial<F::Elem>>> {
    let minors = minor_generators(sigma);
    let polys = minors.iter().map(|m| m.polynomial(field)).collect::<Result<Vec<_>>>()?;
    if !essential {
        return Ok(polys);
    }
    let order = level_order(sigma);
    let mut kept: Vec<Polynomial<F::Elem>> = Vec::new();
    for p in polys {
        if kept.is_empty() || !divide(&p, &kept, &order, field)?.remainder.is_zero() {
            kept.push(p);
        }
    }
    Ok(kept)
}

/// `in(I_σ)` under the antidiagonal order. With `verify` set the minors are
/// first certified as a Gröbner basis by Buchberger's criterion.
pub fn antidiagonal_initial_ideal<F: Field>(
    sigma: &PartialPermutation,
    field: &F,
    verify: bool,
) -> Result<MonomialIdeal> {
    let gens = determinantal_ideal(sigma, field, false)?;
    let order = level_order(sigma);
    if verify && !buchberger_criterion(&gens, &order, field, BuchbergerOptions::default())?.is_groebner() {
        return Err(Error::NotGroebner);
    }
    let leads = gens.iter().map(|g| leading_monomial(g, &order)).collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(minimal_generators(&leads)?)
}

/// `Δ_σ`: the Stanley-Reisner complex of `in(I_σ)` on all variables of `T_m`.
pub fn initial_complex<F: Field>(sigma: &PartialPermutation, field: &F, verify: bool) -> Result<SimplicialComplex> {
    let ideal = antidiagonal_initial_ideal(sigma, field, verify)?;
    complex_from_ideal(&ideal, sigma.variables())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorCheck {
    pub generator: String,
    /// `contained`, `killed` (projects to zero) or `not contained`.
    pub tag: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InclusionReport {
    pub m: u32,
    /// Generators of `I_{σ_m}` inside `I_{σ_{m+1}}`.
    pub up: Vec<GeneratorCheck>,
    /// Projections of generators of `I_{σ_{m+1}}` inside `I_{σ_m}`.
    pub down: Vec<GeneratorCheck>,
    pub pass: bool,
}

fn membership<F: Field>(
    f: &Polynomial<F::Elem>,
    basis: &[Polynomial<F::Elem>],
    order: &TermOrder,
    field: &F,
) -> Result<bool> {
    Ok(divide(f, basis, order, field)?.remainder.is_zero())
}

fn inclusion_report<F: Field>(
    m: u32,
    small: (&PartialPermutation, &[Polynomial<F::Elem>]),
    big: (&PartialPermutation, &[Polynomial<F::Elem>]),
    field: &F,
) -> Result<InclusionReport> {
    let (small_sigma, small_gens) = small;
    let (big_sigma, big_gens) = big;
    let small_order = level_order(small_sigma);
    let big_order = level_order(big_sigma);
    let small_vars: BTreeSet<VarIndex> = small_sigma.variables().into_iter().collect();
    let up = small_gens
        .iter()
        .map(|g| {
            let ok = membership(g, big_gens, &big_order, field)?;
            Ok(GeneratorCheck {
                generator: g.to_text(field),
                tag: if ok { "contained" } else { "not contained" }.into(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let down = big_gens
        .iter()
        .map(|g| {
            let p = g.project(|v| small_vars.contains(v));
            let tag = if p.is_zero() {
                "killed"
            } else if membership(&p, small_gens, &small_order, field)? {
                "contained"
            } else {
                "not contained"
            };
            Ok(GeneratorCheck { generator: g.to_text(field), tag: tag.into() })
        })
        .collect::<Result<Vec<_>>>()?;
    let pass = up.iter().chain(&down).all(|c| c.tag != "not contained");
    Ok(InclusionReport { m, up, down, pass })
}

/// `ι_m(I_{σ_m}) ⊆ I_{σ_{m+1}}` and `π_m(I_{σ_{m+1}}) ⊆ I_{σ_m}`, decided by
/// division against the minor generators (a Gröbner basis).
pub fn verify_inclusions<F: Field>(sigma: &InfinitePermutation, m: u32, field: &F) -> Result<InclusionReport> {
    let small = sigma.truncate(m)?;
    let big = sigma.truncate(m + 1)?;
    let small_gens = determinantal_ideal(&small, field, false)?;
    let big_gens = determinantal_ideal(&big, field, false)?;
    inclusion_report(m, (&small, &small_gens), (&big, &big_gens), field)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnionCheck {
    pub generator: String,
    /// Smallest level `n` with the generator in `η_n(I_{σ_n})T`.
    pub first_level: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnionReport {
    pub m_max: u32,
    /// Generators of `I_σ` visible in the top truncation.
    pub generators: Vec<UnionCheck>,
    /// Every level's generators lie in the truncated `I_σ`.
    pub levels_contained: bool,
    pub pass: bool,
}

/// `∪ η_n(I_{σ_n})T = I_σ` at truncation `m_max`: the minors of `I_σ` inside
/// the top grid (ranks taken from `σ` itself) each lie in some level, and each
/// level lies in them.
fn union_report<F: Field>(
    sigma: &InfinitePermutation,
    levels: &[(PartialPermutation, Vec<Polynomial<F::Elem>>)],
    field: &F,
) -> Result<UnionReport> {
    let (top, _) = levels.last().ok_or_else(|| Error::Shape("no levels".into()))?;
    let order = level_order(top);
    // ranks of σ on the top grid only see σ(1..=m_max)
    let truncated = determinantal_ideal(top, field, false)?;
    let generators = truncated
        .iter()
        .map(|g| {
            let mut first_level = None;
            for (sigma_n, gens) in levels {
                if membership(g, gens, &order, field)? {
                    first_level = Some(sigma_n.m());
                    break;
                }
            }
            Ok(UnionCheck { generator: g.to_text(field), first_level })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut levels_contained = true;
    for (_, gens) in levels {
        for g in gens {
            levels_contained &= membership(g, &truncated, &order, field)?;
        }
    }
    let _ = sigma;
    let pass = levels_contained && generators.iter().all(|g| g.first_level.is_some());
    Ok(UnionReport { m_max: top.m(), generators, levels_contained, pass })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchubertLevel {
    pub m: u32,
    pub permutation: PartialPermutation,
    pub rank_matrix: RankMatrix,
    pub generators: Vec<String>,
    pub groebner: CriterionReport,
    pub initial_ideal: Vec<String>,
    pub ambient_vertices: usize,
    pub vertices: usize,
    pub facets: usize,
    pub dimension: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineReport {
    pub permutation: String,
    pub m_max: u32,
    pub modulus: u64,
    pub seed: u64,
    pub sample_budget: usize,
    pub pair_budget: usize,
    pub face_cap: usize,
    pub levels: Vec<SchubertLevel>,
    pub inclusions: Vec<InclusionReport>,
    pub union: UnionReport,
    pub initial_union: InitialUnionReport,
    pub chain: ChainReport,
    pub pass: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PipelineConfig {
    pub m_max: u32,
    pub seed: u64,
    pub sample_budget: usize,
    pub pair_budget: usize,
    pub face_cap: usize,
}

/// Builds `σ_m`, `I_{σ_m}`, `in(I_{σ_m})` and `Δ_{σ_m}` for `m = 1..=m_max` and
/// checks everything the direct-limit argument needs at this truncation.
pub fn theorem_d_pipeline(
    sigma: &InfinitePermutation,
    field: &PrimeField,
    config: PipelineConfig,
) -> Result<PipelineReport> {
    if config.m_max == 0 {
        return Err(Error::InvalidPermutation("m_max starts at 1".into()));
    }
    let perms = (1..=config.m_max).map(|m| sigma.truncate(m)).collect::<Result<Vec<_>>>()?;
    let built = perms
        .par_iter()
        .map(|s| {
            let gens = determinantal_ideal(s, field, false)?;
            let order = level_order(s);
            let groebner = buchberger_criterion(&gens, &order, field, BuchbergerOptions::default())?;
            let leads = gens.iter().map(|g| leading_monomial(g, &order)).collect::<Result<Vec<_>>>()?;
            let ideal = MonomialIdeal::new(minimal_generators(&leads)?)?;
            let complex = complex_from_ideal(&ideal, s.variables())?;
            complex.faces_capped(config.face_cap)?;
            Ok((gens, groebner, ideal, complex))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut levels = Vec::new();
    let mut complexes = Vec::new();
    let mut gen_levels = Vec::new();
    for (s, (gens, groebner, ideal, complex)) in perms.iter().zip(built) {
        levels.push(SchubertLevel {
            m: s.m(),
            permutation: s.clone(),
            rank_matrix: rank_matrix(s),
            generators: gens.iter().map(|g| g.to_text(field)).collect(),
            groebner,
            initial_ideal: ideal.generators().iter().map(ToString::to_string).collect(),
            ambient_vertices: complex.vertices().len(),
            vertices: complex.vertex_set().len(),
            facets: complex.facet_masks().len(),
            dimension: complex.dimension(),
        });
        complexes.push(complex);
        gen_levels.push((s.clone(), gens));
    }

    let inclusions = gen_levels
        .windows(2)
        .map(|w| inclusion_report(w[0].0.m(), (&w[0].0, &w[0].1), (&w[1].0, &w[1].1), field))
        .collect::<Result<Vec<_>>>()?;
    let union = union_report(sigma, &gen_levels, field)?;
    let top = perms.last().expect("m_max >= 1");
    let ordered: Vec<_> = gen_levels.iter().map(|(s, g)| (g.clone(), level_order(s))).collect();
    let initial_union = check_initial_union(&ordered, &level_order(top), field, config.pair_budget)?;
    let chain = verify_theorem_a_hypotheses(
        &complexes,
        complexes.last().expect("m_max >= 1"),
        field,
        config.seed,
        config.sample_budget,
    )?;
    let pass = levels.iter().all(|l| l.groebner.is_groebner())
        && inclusions.iter().all(|r| r.pass)
        && union.pass
        && initial_union.equal
        && chain.pass;
    Ok(PipelineReport {
        permutation: sigma.to_string(),
        m_max: config.m_max,
        modulus: field.modulus(),
        seed: config.seed,
        sample_budget: config.sample_budget,
        pair_budget: config.pair_budget,
        face_cap: config.face_cap,
        levels,
        inclusions,
        union,
        initial_union,
        chain,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn g(i: u32, j: u32) -> VarIndex {
        VarIndex::Grid(i, j)
    }

    #[test]
    fn truncation_examples() {
        let id = InfinitePermutation::identity();
        let t = id.truncate(3).unwrap();
        assert_eq!((t.images(), t.n()), (&[1, 2, 3][..], 3));
        let e = InfinitePermutation::RuleEven;
        let t = e.truncate(2).unwrap();
        assert_eq!((t.images(), t.n()), (&[1, 3][..], 3));
        let t = e.truncate(4).unwrap();
        assert_eq!((t.images(), t.n()), (&[1, 3, 2, 5][..], 5));
    }

    #[test]
    fn parsing() {
        let s = PartialPermutation::parse("2 5 3 1").unwrap();
        assert_eq!((s.m(), s.n()), (4, 5));
        assert!(PartialPermutation::parse("2 2").is_err());
        assert!(PartialPermutation::parse("0 1").is_err());
        let t = InfinitePermutation::parse("(1 2)").unwrap();
        assert_eq!(t.apply(1), 2);
        assert_eq!(t.apply(2), 1);
        assert_eq!(t.apply(7), 7);
        assert_eq!(t.to_string(), "(1 2)");
        assert_eq!(InfinitePermutation::parse("(1 2 3)(5 4)").unwrap().to_string(), "(1 2 3)(4 5)");
        assert_eq!(InfinitePermutation::parse("2 1 3").unwrap(), t);
        assert!(InfinitePermutation::parse("2 3").is_err());
        assert!(InfinitePermutation::parse("(1 2)(2 3)").is_err());
    }

    #[test]
    fn rank_matrix_examples() {
        let s = PartialPermutation::parse("2 5 3 1").unwrap();
        let expected = vec![vec![0, 1, 1, 1, 1], vec![0, 1, 1, 1, 2], vec![0, 1, 2, 2, 3], vec![1, 2, 3, 3, 4]];
        assert_eq!(rank_matrix(&s).0, expected);
        let id = PartialPermutation::parse("1 2 3").unwrap();
        let r = rank_matrix(&id);
        for i in 1..=3 {
            for j in 1..=3 {
                assert_eq!(r.get(i, j), i.min(j));
            }
        }
        assert_eq!(rank_matrix(&PartialPermutation::parse("2 1").unwrap()).0, vec![vec![0, 1], vec![1, 2]]);
    }

    #[test]
    fn minors_and_antidiagonals() {
        let m = Minor { rows: vec![1, 2], cols: vec![1, 2] };
        let p = m.polynomial(&Rationals).unwrap();
        assert_eq!(p.to_text(&Rationals), "x[1,1]*x[2,2] - x[1,2]*x[2,1]");
        assert_eq!(m.antidiagonal(), Monomial::squarefree([g(1, 2), g(2, 1)]).unwrap());
        let m3 = Minor { rows: vec![1, 2, 3], cols: vec![1, 2, 3] };
        assert_eq!(m3.polynomial(&Rationals).unwrap().len(), 6);
    }

    #[test]
    fn identity_ideal_is_zero() {
        let id = PartialPermutation::parse("1 2 3").unwrap();
        assert!(determinantal_ideal(&id, &Rationals, false).unwrap().is_empty());
        assert!(antidiagonal_initial_ideal(&id, &Rationals, true).unwrap().generators().is_empty());
        let c = initial_complex(&id, &Rationals, true).unwrap();
        assert_eq!(c.facet_masks().len(), 1);
        assert_eq!(c.dimension(), 8);
    }

    #[test]
    fn transposition_inclusions() {
        let t = InfinitePermutation::parse("(1 2)").unwrap();
        let r = verify_inclusions(&t, 1, &Rationals).unwrap();
        assert!(r.pass);
        assert_eq!(r.up.len(), 1);
        assert_eq!(r.up[0].generator, "x[1,1]");
        let r = verify_inclusions(&InfinitePermutation::identity(), 3, &Rationals).unwrap();
        assert!(r.pass && r.up.is_empty() && r.down.is_empty());
    }
}
