//! Finite simplicial complexes and the Stanley-Reisner correspondence.
//!
//! A complex lives on an ordered ambient vertex set `V` (at most 128 vertices)
//! and is stored by its facets as bitmasks over `V`. The explicit face list is
//! enumerated lazily and only while it stays below a face-count cap; facet-based
//! algorithms (membership, fullness, links, the 1-skeleton) never need it.
//!
//! Ambient vertices that are not faces (`{v}` missing from the complex) are
//! allowed: `V(Δ)` is always computed from the facets, never assumed to be `V`.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg;
use crate::monomial::{common_family, contains, Monomial, MonomialIdeal, VarIndex};

pub type FaceMask = u128;

pub const MAX_VERTICES: usize = 128;
pub const DEFAULT_FACE_CAP: usize = 1 << 22;

pub(crate) fn bits(mut m: FaceMask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let i = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(i)
    })
}

fn is_subset(a: FaceMask, b: FaceMask) -> bool {
    a & !b == 0
}

/// Keeps only inclusion-maximal masks, sorted by (size, value).
fn maximal(mut sets: Vec<FaceMask>) -> Vec<FaceMask> {
    sets.sort_by_key(|&m| (std::cmp::Reverse(m.count_ones()), m));
    sets.dedup();
    let mut out: Vec<FaceMask> = Vec::new();
    for s in sets {
        if !out.iter().any(|&t| is_subset(s, t)) {
            out.push(s);
        }
    }
    out.sort_by_key(|&m| (m.count_ones(), m));
    out
}

#[derive(Debug)]
pub struct SimplicialComplex {
    vertices: Vec<VarIndex>,
    facets: Vec<FaceMask>,
    faces: OnceLock<Vec<FaceMask>>,
}

impl Clone for SimplicialComplex {
    fn clone(&self) -> Self {
        SimplicialComplex { vertices: self.vertices.clone(), facets: self.facets.clone(), faces: self.faces.clone() }
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

fn check_vertices(mut vertices: Vec<VarIndex>) -> Result<Vec<VarIndex>> {
    common_family(&vertices)?;
    vertices.sort();
    vertices.dedup();
    if vertices.len() > MAX_VERTICES {
        return Err(Error::TooManyVertices(vertices.len()));
    }
    Ok(vertices)
}

impl SimplicialComplex {
    fn from_masks(vertices: Vec<VarIndex>, facets: Vec<FaceMask>) -> Self {
        SimplicialComplex { vertices, facets: maximal(facets), faces: OnceLock::new() }
    }

    /// The complex generated by the given faces (each one and all its subsets)
    /// on the ambient vertex set `vertices`.
    pub fn from_facets(vertices: Vec<VarIndex>, facets: &[Vec<VarIndex>]) -> Result<Self> {
        let vertices = check_vertices(vertices)?;
        let masks = facets.iter().map(|f| mask_of(&vertices, f)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_masks(vertices, masks))
    }

    /// The full simplex on `vertices`.
    pub fn simplex(vertices: Vec<VarIndex>) -> Result<Self> {
        let vertices = check_vertices(vertices)?;
        let full = full_mask(vertices.len());
        Ok(Self::from_masks(vertices, vec![full]))
    }

    /// The complex with no faces at all, not even `∅`.
    pub fn void(vertices: Vec<VarIndex>) -> Result<Self> {
        Ok(Self::from_masks(check_vertices(vertices)?, Vec::new()))
    }

    /// Ambient vertex set `V`, sorted canonically.
    pub fn vertices(&self) -> &[VarIndex] {
        &self.vertices
    }

    pub fn facet_masks(&self) -> &[FaceMask] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `V(Δ)`: the ambient vertices `v` with `{v}` a face.
    pub fn vertex_mask(&self) -> FaceMask {
        self.facets.iter().fold(0, |a, &f| a | f)
    }

    pub fn vertex_set(&self) -> Vec<VarIndex> {
        self.decode(self.vertex_mask())
    }

    pub fn decode(&self, m: FaceMask) -> Vec<VarIndex> {
        bits(m).map(|i| self.vertices[i]).collect()
    }

    pub fn encode(&self, face: &[VarIndex]) -> Result<FaceMask> {
        mask_of(&self.vertices, face)
    }

    pub fn facets(&self) -> Vec<Vec<VarIndex>> {
        self.facets.iter().map(|&f| self.decode(f)).collect()
    }

    /// `max |F| - 1`; `-1` both for `{∅}` and for the void complex.
    pub fn dimension(&self) -> i64 {
        self.facets.iter().map(|f| f.count_ones() as i64).max().unwrap_or(0) - 1
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].count_ones() == w[1].count_ones())
    }

    pub fn contains_mask(&self, m: FaceMask) -> bool {
        self.facets.iter().any(|&f| is_subset(m, f))
    }

    pub fn contains_face(&self, face: &[VarIndex]) -> bool {
        match self.encode(face) {
            Ok(m) => self.contains_mask(m),
            Err(_) => false,
        }
    }

    /// All faces, sorted by (size, mask). Fails once more than `cap` faces
    /// would be produced; a successful enumeration is cached.
    pub fn faces_capped(&self, cap: usize) -> Result<&[FaceMask]> {
        if let Some(f) = self.faces.get() {
            return Ok(f);
        }
        let mut out = Vec::new();
        if !self.is_void() {
            let vmask = self.vertex_mask();
            let verts: Vec<usize> = bits(vmask).collect();
            let mut stack: Vec<(FaceMask, usize)> = vec![(0, 0)];
            while let Some((face, next)) = stack.pop() {
                out.push(face);
                if out.len() > cap {
                    return Err(Error::FaceCapExceeded { cap });
                }
                for (k, &v) in verts.iter().enumerate().skip(next) {
                    let g = face | (1 << v);
                    if self.contains_mask(g) {
                        stack.push((g, k + 1));
                    }
                }
            }
        }
        out.sort_by_key(|&m| (m.count_ones(), m));
        let _ = self.faces.set(out);
        Ok(self.faces.get().expect("just set"))
    }

    pub fn faces(&self) -> Result<&[FaceMask]> {
        self.faces_capped(DEFAULT_FACE_CAP)
    }

    /// Same complex on a different ambient vertex set containing `V(Δ)`.
    pub fn with_ambient(&self, vertices: Vec<VarIndex>) -> Result<Self> {
        let vertices = check_vertices(vertices)?;
        let facets = self.facets.iter().map(|&f| mask_of(&vertices, &self.decode(f))).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_masks(vertices, facets))
    }

    /// Maps a face mask of `self` onto the ambient set of `other`.
    fn transfer(&self, m: FaceMask, other: &SimplicialComplex) -> Result<FaceMask> {
        mask_of(&other.vertices, &self.decode(m))
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> Result<bool> {
        for &f in &self.facets {
            match self.transfer(f, other) {
                Ok(g) if other.contains_mask(g) => {}
                Ok(_) => return Ok(false),
                Err(Error::OutsideVertexSet(_)) => return Ok(false),
                Err(e) => return Err(e),
            }
        }
        Ok(true)
    }
}

fn full_mask(n: usize) -> FaceMask {
    if n == 128 {
        !0
    } else {
        (1u128 << n) - 1
    }
}

fn mask_of(vertices: &[VarIndex], face: &[VarIndex]) -> Result<FaceMask> {
    let mut m = 0;
    for v in face {
        let i = vertices.binary_search(v).map_err(|_| Error::OutsideVertexSet(v.to_string()))?;
        m |= 1 << i;
    }
    Ok(m)
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    vertices: Vec<VarIndex>,
    facets: Vec<Vec<VarIndex>>,
}

impl Serialize for SimplicialComplex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ComplexJson { vertices: self.vertices.clone(), facets: self.facets() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SimplicialComplex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = ComplexJson::deserialize(d)?;
        SimplicialComplex::from_facets(raw.vertices, &raw.facets).map_err(serde::de::Error::custom)
    }
}

/// `ψ(I)`: the complex of finite subsets `A ⊆ V` with `x^A ∉ I`.
pub fn complex_from_ideal(ideal: &MonomialIdeal, vertices: Vec<VarIndex>) -> Result<SimplicialComplex> {
    let vertices = check_vertices(vertices)?;
    let mut gens = Vec::new();
    for g in ideal.generators() {
        if !g.is_squarefree() {
            return Err(Error::NotSquarefree(g.to_string()));
        }
        let s: Vec<VarIndex> = g.support().collect();
        gens.push(mask_of(&vertices, &s).map_err(|_| Error::OutsideVertexSet(g.to_string()))?);
    }
    if let Some(v) = vertices.first() {
        if let Some(g) = ideal.generators().iter().find(|g| g.family().is_some_and(|f| f != v.family())) {
            return Err(Error::OutsideVertexSet(g.to_string()));
        }
    }
    let facets = facets_avoiding(vertices.len(), &gens);
    Ok(SimplicialComplex::from_masks(vertices, facets))
}

/// Maximal subsets of `0..n` containing none of `gens`. Branches only on
/// vertices that occur in some generator; everything else is a cone point.
fn facets_avoiding(n: usize, gens: &[FaceMask]) -> Vec<FaceMask> {
    if gens.contains(&0) {
        return Vec::new();
    }
    let touched = gens.iter().fold(0, |a, &g| a | g);
    let cone = full_mask(n) & !touched;
    let branch: Vec<usize> = bits(touched).collect();
    let blocked = |s: FaceMask| gens.iter().any(|&g| is_subset(g, s));
    let mut out = Vec::new();
    fn go(k: usize, s: FaceMask, branch: &[usize], blocked: &dyn Fn(FaceMask) -> bool, out: &mut Vec<FaceMask>) {
        if k == branch.len() {
            let maximal = branch.iter().all(|&v| s & (1 << v) != 0 || blocked(s | (1 << v)));
            if maximal {
                out.push(s);
            }
            return;
        }
        let v = 1u128 << branch[k];
        if !blocked(s | v) {
            go(k + 1, s | v, branch, blocked, out);
        }
        go(k + 1, s, branch, blocked, out);
    }
    go(0, 0, &branch, &blocked, &mut out);
    out.into_iter().map(|s| s | cone).collect()
}

/// Minimal non-faces of `Δ` over its ambient vertex set, as face masks.
pub(crate) fn minimal_nonfaces(complex: &SimplicialComplex) -> Result<Vec<FaceMask>> {
    if complex.is_void() {
        return Ok(vec![0]);
    }
    let n = complex.vertices.len();
    let mut out = Vec::new();
    // every minimal non-face is (a face) + (one vertex above its top element)
    for &face in complex.faces()? {
        let start = if face == 0 { 0 } else { 128 - face.leading_zeros() as usize };
        for v in start..n {
            let cand = face | (1 << v);
            if complex.contains_mask(cand) {
                continue;
            }
            if bits(face).all(|u| complex.contains_mask(cand & !(1 << u))) {
                out.push(cand);
            }
        }
    }
    out.sort_by_key(|&m| (m.count_ones(), m));
    Ok(out)
}

/// `φ(Δ)`: the squarefree ideal generated by the minimal non-faces.
pub fn ideal_from_complex(complex: &SimplicialComplex) -> Result<MonomialIdeal> {
    let gens = minimal_nonfaces(complex)?
        .into_iter()
        .map(|m| Monomial::squarefree(complex.decode(m)))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(gens)
}

/// Fullness by faces: `Δ ⊆ Σ` and every face of `Σ` on `V(Δ)` is a face of `Δ`.
pub fn full_subcomplex_by_faces(delta: &SimplicialComplex, sigma: &SimplicialComplex) -> Result<bool> {
    check_nested(delta, sigma)?;
    if !delta.is_subcomplex_of(sigma)? {
        return Ok(false);
    }
    let vdelta = delta.transfer(delta.vertex_mask(), sigma)?;
    for &g in &sigma.facets {
        let part = sigma.transfer(g & vdelta, delta)?;
        if !delta.contains_mask(part) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Fullness by ideals: `π(I_Σ) ⊆ I_Δ` and `ι(I_Δ) ⊆ I_Σ`, with `Δ`'s ideal
/// taken over `V(Δ)`.
pub fn full_subcomplex_by_ideals(delta: &SimplicialComplex, sigma: &SimplicialComplex) -> Result<bool> {
    check_nested(delta, sigma)?;
    let own = delta.with_ambient(delta.vertex_set())?;
    let i_delta = ideal_from_complex(&own)?;
    let i_sigma = ideal_from_complex(sigma)?;
    let vdelta: BTreeSet<VarIndex> = own.vertices.iter().copied().collect();
    let pi_ok =
        i_sigma.generators().iter().filter_map(|g| g.project(|v| vdelta.contains(v))).all(|g| contains(&i_delta, &g));
    let iota_ok = i_delta.generators().iter().all(|g| contains(&i_sigma, g));
    Ok(pi_ok && iota_ok)
}

fn check_nested(delta: &SimplicialComplex, sigma: &SimplicialComplex) -> Result<()> {
    for v in delta.vertex_set() {
        if sigma.vertices.binary_search(&v).is_err() {
            return Err(Error::VerticesNotNested(format!(
                "{v} is a vertex of the subcomplex but not ambient in the target"
            )));
        }
    }
    Ok(())
}

/// `Δ` is a full subcomplex of `Σ`. Both characterisations are evaluated and
/// must agree.
pub fn is_full_subcomplex(delta: &SimplicialComplex, sigma: &SimplicialComplex) -> Result<bool> {
    let by_faces = full_subcomplex_by_faces(delta, sigma)?;
    let by_ideals = full_subcomplex_by_ideals(delta, sigma)?;
    if by_faces != by_ideals {
        return Err(Error::Inconsistent(format!(
            "fullness by faces = {by_faces}, by ideal containments = {by_ideals}"
        )));
    }
    Ok(by_faces)
}

/// `lk(F) = {G : G ∩ F = ∅, G ∪ F ∈ Δ}` on the ambient set `V(Δ) \ F`.
pub fn link(complex: &SimplicialComplex, face: &[VarIndex]) -> Result<SimplicialComplex> {
    let f = complex.encode(face).map_err(|_| Error::NotAFace(format!("{face:?}")))?;
    link_mask(complex, f)
}

pub(crate) fn link_mask(complex: &SimplicialComplex, f: FaceMask) -> Result<SimplicialComplex> {
    if !complex.contains_mask(f) {
        return Err(Error::NotAFace(format!("{:?}", complex.decode(f))));
    }
    let ambient = complex.decode(complex.vertex_mask() & !f);
    let facets: Vec<Vec<VarIndex>> =
        complex.facets.iter().filter(|&&g| is_subset(f, g)).map(|&g| complex.decode(g & !f)).collect();
    SimplicialComplex::from_facets(ambient, &facets)
}

/// Face counts `f_{-1}, f_0, …, f_{dim}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVector(pub Vec<u64>);

/// `h_0, …, h_d` with `d = dim + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HVector(pub Vec<i64>);

pub fn f_vector(complex: &SimplicialComplex) -> Result<FVector> {
    if complex.is_void() {
        return Ok(FVector(Vec::new()));
    }
    let mut f = vec![0u64; (complex.dimension() + 2) as usize];
    for &face in complex.faces()? {
        f[face.count_ones() as usize] += 1;
    }
    Ok(FVector(f))
}

pub(crate) fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}

pub fn h_from_f(f: &FVector) -> HVector {
    let d = f.0.len() as i64 - 1;
    let h = (0..=d)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                    sign * binomial(d - i, k - i) * f.0[i as usize] as i64
                })
                .sum()
        })
        .collect();
    HVector(h)
}

pub fn h_vector(complex: &SimplicialComplex) -> Result<HVector> {
    Ok(h_from_f(&f_vector(complex)?))
}

/// Ranks of reduced homology over `F_p`, indexed by dimension `-1..=dim`.
pub fn reduced_homology_ranks(complex: &SimplicialComplex, field: &PrimeField) -> Result<Vec<usize>> {
    if complex.is_void() {
        return Err(Error::Shape("reduced homology of the void complex".into()));
    }
    let dim = complex.dimension();
    let top = (dim + 1) as usize; // largest face size
    let mut by_size: Vec<Vec<FaceMask>> = vec![Vec::new(); top + 1];
    for &face in complex.faces()? {
        by_size[face.count_ones() as usize].push(face);
    }
    // rank of the boundary map from faces of size s to faces of size s-1
    let ranks: Vec<usize> = (1..=top)
        .into_par_iter()
        .map(|s| {
            let index: HashMap<FaceMask, usize> = by_size[s - 1].iter().enumerate().map(|(i, &m)| (m, i)).collect();
            let rows: Vec<Vec<u64>> = by_size[s]
                .iter()
                .map(|&face| {
                    let mut row = vec![0u64; by_size[s - 1].len()];
                    for (j, v) in bits(face).enumerate() {
                        let col = index[&(face & !(1 << v))];
                        row[col] = if j % 2 == 0 { 1 } else { field.modulus() - 1 };
                    }
                    row
                })
                .collect();
            linalg::rank(field, rows)
        })
        .collect();
    let rank_at = |s: usize| if s >= 1 && s <= top { ranks[s - 1] } else { 0 };
    Ok((0..=top).map(|s| by_size[s].len() - rank_at(s) - rank_at(s + 1)).collect())
}

pub fn euler_characteristic(f: &FVector) -> i64 {
    // reduced: Σ (-1)^i f_i over i = -1..dim
    f.0.iter().enumerate().map(|(k, &c)| if k % 2 == 0 { -(c as i64) } else { c as i64 }).sum()
}

fn dot_id(v: &VarIndex) -> String {
    format!("\"{v}\"")
}

/// DOT rendering of the 1-skeleton: one node per vertex of `V(Δ)` and one edge
/// per 1-face, in canonical order. Ambient non-vertices are listed in a comment.
pub fn one_skeleton_dot(complex: &SimplicialComplex) -> String {
    let vmask = complex.vertex_mask();
    let verts: Vec<usize> = bits(vmask).collect();
    let mut out = String::from("graph skeleton {\n");
    let missing = complex.decode(full_mask(complex.vertices.len()) & !vmask);
    if !missing.is_empty() {
        let names: Vec<String> = missing.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "  // ambient non-vertices: {}", names.join(" "));
    }
    for &i in &verts {
        let _ = writeln!(out, "  {};", dot_id(&complex.vertices[i]));
    }
    for (a, &i) in verts.iter().enumerate() {
        for &j in &verts[a + 1..] {
            if complex.contains_mask((1 << i) | (1 << j)) {
                let _ = writeln!(out, "  {} -- {};", dot_id(&complex.vertices[i]), dot_id(&complex.vertices[j]));
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Edges of the 1-skeleton as canonical vertex pairs.
pub fn edges(complex: &SimplicialComplex) -> Vec<(VarIndex, VarIndex)> {
    let verts: Vec<usize> = bits(complex.vertex_mask()).collect();
    let mut out = Vec::new();
    for (a, &i) in verts.iter().enumerate() {
        for &j in &verts[a + 1..] {
            if complex.contains_mask((1 << i) | (1 << j)) {
                out.push((complex.vertices[i], complex.vertices[j]));
            }
        }
    }
    out
}
