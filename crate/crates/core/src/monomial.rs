//! Monomials over grid-indexed (`x[i,j]`) or line-indexed (`x[n]`) variables and
//! monomial ideals with their unique minimal generating sets.
//!
//! A monomial is a finitely supported exponent vector. The divisibility order is
//! componentwise; it is well-founded because total degree strictly drops along
//! any proper divisor chain.

use std::cmp::Ordering;
use std::fmt;

use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A polynomial-ring variable: `x[i,j]` of the doubly indexed ring or `x[n]` of
/// the singly indexed one. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarIndex {
    Grid(u32, u32),
    Line(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Grid,
    Line,
}

impl VarIndex {
    pub fn grid(row: u32, col: u32) -> Result<Self> {
        if row == 0 || col == 0 {
            return Err(Error::ZeroIndex(format!("x[{row},{col}]")));
        }
        Ok(VarIndex::Grid(row, col))
    }

    pub fn line(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroIndex("x[0]".into()));
        }
        Ok(VarIndex::Line(n))
    }

    pub fn family(&self) -> Family {
        match self {
            VarIndex::Grid(..) => Family::Grid,
            VarIndex::Line(_) => Family::Line,
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            VarIndex::Grid(i, j) if i == 0 || j == 0 => Err(Error::ZeroIndex(self.to_string())),
            VarIndex::Line(0) => Err(Error::ZeroIndex(self.to_string())),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for VarIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarIndex::Grid(i, j) => write!(f, "x[{i},{j}]"),
            VarIndex::Line(n) => write!(f, "x[{n}]"),
        }
    }
}

impl Serialize for VarIndex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match *self {
            VarIndex::Grid(i, j) => [i, j].serialize(s),
            VarIndex::Line(n) => n.serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for VarIndex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Grid([u32; 2]),
            Line(u32),
        }
        let v = match Raw::deserialize(d)? {
            Raw::Grid([i, j]) => VarIndex::Grid(i, j),
            Raw::Line(n) => VarIndex::Line(n),
        };
        v.validate().map_err(de::Error::custom)?;
        Ok(v)
    }
}

/// Returns the common family of a set of variables, or an error if they mix.
pub fn common_family<'a>(vars: impl IntoIterator<Item = &'a VarIndex>) -> Result<Option<Family>> {
    let mut fam = None;
    for v in vars {
        match fam {
            None => fam = Some(v.family()),
            Some(f) if f != v.family() => return Err(Error::MixedFamilies),
            _ => {}
        }
    }
    Ok(fam)
}

/// A monomial, stored as `(variable, exponent)` pairs sorted by variable with
/// strictly positive exponents. The empty monomial is `1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    exps: Vec<(VarIndex, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(v: VarIndex) -> Self {
        Monomial { exps: vec![(v, 1)] }
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs. Repeated
    /// variables are merged, zero exponents dropped.
    pub fn new(pairs: impl IntoIterator<Item = (VarIndex, u32)>) -> Result<Self> {
        let mut exps: Vec<(VarIndex, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        for (v, _) in &exps {
            v.validate()?;
        }
        common_family(exps.iter().map(|(v, _)| v))?;
        exps.sort_by_key(|&(v, _)| v);
        let mut merged: Vec<(VarIndex, u32)> = Vec::with_capacity(exps.len());
        for (v, e) in exps {
            match merged.last_mut() {
                Some((w, f)) if *w == v => *f = f.checked_add(e).ok_or(Error::ExponentOverflow)?,
                _ => merged.push((v, e)),
            }
        }
        Ok(Monomial { exps: merged })
    }

    /// The squarefree monomial `x^A`.
    pub fn squarefree(vars: impl IntoIterator<Item = VarIndex>) -> Result<Self> {
        Self::new(vars.into_iter().map(|v| (v, 1)))
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponents(&self) -> &[(VarIndex, u32)] {
        &self.exps
    }

    pub fn exponent(&self, v: VarIndex) -> u32 {
        self.exps.binary_search_by_key(&v, |&(w, _)| w).map(|i| self.exps[i].1).unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = VarIndex> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    pub fn family(&self) -> Option<Family> {
        self.exps.first().map(|(v, _)| v.family())
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&(_, e)| e == 1)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&(_, e)| e as u64).sum()
    }

    fn check_family(&self, other: &Monomial) -> Result<()> {
        match (self.family(), other.family()) {
            (Some(a), Some(b)) if a != b => Err(Error::MixedFamilies),
            _ => Ok(()),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_family(other)?;
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() || j < other.exps.len() {
            let ord = match (self.exps.get(i), other.exps.get(j)) {
                (Some(a), Some(b)) => a.0.cmp(&b.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(self.exps[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.exps[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = self.exps[i].1.checked_add(other.exps[j].1).ok_or(Error::ExponentOverflow)?;
                    out.push((self.exps[i].0, e));
                    i += 1;
                    j += 1;
                }
            }
        }
        Ok(Monomial { exps: out })
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !divides(other, self).ok()? {
            return None;
        }
        let exps = self
            .exps
            .iter()
            .filter_map(|&(v, e)| {
                let r = e - other.exponent(v);
                (r > 0).then_some((v, r))
            })
            .collect();
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_family(other)?;
        let mut out: Vec<(VarIndex, u32)> = self.exps.clone();
        for &(v, e) in &other.exps {
            match out.binary_search_by_key(&v, |&(w, _)| w) {
                Ok(i) => out[i].1 = out[i].1.max(e),
                Err(i) => out.insert(i, (v, e)),
            }
        }
        Ok(Monomial { exps: out })
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|&(v, _)| other.exponent(v) == 0)
    }

    /// Sets every variable outside `keep` to zero: returns `None` if the
    /// monomial involves such a variable.
    pub fn project(&self, keep: impl Fn(&VarIndex) -> bool) -> Option<Monomial> {
        self.exps.iter().all(|(v, _)| keep(v)).then(|| self.clone())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (k, &(v, e)) in self.exps.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "{v}")?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.exps.len()))?;
        for (v, e) in &self.exps {
            seq.serialize_element(&(v, e))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<(VarIndex, u32)> = Vec::deserialize(d)?;
        Monomial::new(pairs).map_err(de::Error::custom)
    }
}

/// `a` divides `b`: every exponent of `a` is at most the matching exponent of `b`.
pub fn divides(a: &Monomial, b: &Monomial) -> Result<bool> {
    a.check_family(b)?;
    let mut j = 0;
    for &(v, e) in &a.exps {
        while j < b.exps.len() && b.exps[j].0 < v {
            j += 1;
        }
        if j == b.exps.len() || b.exps[j].0 != v || b.exps[j].1 < e {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn total_degree(a: &Monomial) -> u64 {
    a.total_degree()
}

/// The unique inclusion-minimal generating set of the ideal generated by `gens`,
/// sorted canonically.
pub fn minimal_generators(gens: &[Monomial]) -> Result<Vec<Monomial>> {
    common_family(gens.iter().flat_map(|m| m.exps.iter().map(|(v, _)| v)))?;
    let mut sorted: Vec<&Monomial> = gens.iter().collect();
    // a proper divisor has strictly smaller degree, so scanning by degree lets
    // each candidate be checked against already accepted generators only
    sorted.sort_by(|a, b| a.total_degree().cmp(&b.total_degree()).then_with(|| a.cmp(b)));
    sorted.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    for m in sorted {
        if !kept.iter().any(|k| divides(k, m).unwrap_or(false)) {
            kept.push(m.clone());
        }
    }
    kept.sort();
    Ok(kept)
}

/// A monomial ideal given by a (not necessarily minimal) list of generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomialIdeal {
    squarefree: bool,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Stores the generators deduplicated but otherwise as given.
    pub fn new(generators: Vec<Monomial>) -> Result<Self> {
        common_family(generators.iter().flat_map(|m| m.exps.iter().map(|(v, _)| v)))?;
        let mut generators = generators;
        generators.sort();
        generators.dedup();
        let squarefree = generators.iter().all(Monomial::is_squarefree);
        Ok(MonomialIdeal { squarefree, generators })
    }

    pub fn zero() -> Self {
        MonomialIdeal { squarefree: true, generators: Vec::new() }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_squarefree(&self) -> bool {
        self.squarefree
    }

    pub fn minimalized(&self) -> MonomialIdeal {
        let generators = minimal_generators(&self.generators).expect("family checked on construction");
        MonomialIdeal { squarefree: self.squarefree, generators }
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        contains(self, m)
    }

    /// Equality as ideals, i.e. of minimal generating sets.
    pub fn same_ideal(&self, other: &MonomialIdeal) -> bool {
        self.minimalized().generators == other.minimalized().generators
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            squarefree: bool,
            generators: Vec<Monomial>,
        }
        let raw = Raw::deserialize(d)?;
        let ideal = MonomialIdeal::new(raw.generators).map_err(de::Error::custom)?;
        if raw.squarefree && !ideal.squarefree {
            return Err(de::Error::custom("ideal flagged squarefree has a non-squarefree generator"));
        }
        Ok(ideal)
    }
}

/// Membership of a monomial: some generator divides it.
pub fn contains(ideal: &MonomialIdeal, m: &Monomial) -> bool {
    ideal.generators.iter().any(|g| divides(g, m).unwrap_or(false))
}
