//! Sparse multivariate polynomials with exact coefficients.
//!
//! Text format: `c*x[i,j]^e*x[k,l] + ... - ...` (or `x[n]` for line variables);
//! coefficients are integers or fractions `a/b`, the coefficient `1` may be
//! omitted.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{common_family, Monomial, VarIndex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial<E> {
    terms: BTreeMap<Monomial, E>,
}

impl<E: Clone + PartialEq> Polynomial<E> {
    pub fn zero() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }

    /// Builds a polynomial from terms, merging repeated monomials and dropping
    /// zero coefficients.
    pub fn from_terms<F: Field<Elem = E>>(field: &F, terms: impl IntoIterator<Item = (E, Monomial)>) -> Result<Self> {
        let mut out: BTreeMap<Monomial, E> = BTreeMap::new();
        for (c, m) in terms {
            let entry = out.entry(m).or_insert_with(|| field.zero());
            *entry = field.add(entry, &c);
        }
        out.retain(|_, c| !field.is_zero(c));
        common_family(out.keys().flat_map(|m| m.exponents().iter().map(|(v, _)| v)))?;
        Ok(Polynomial { terms: out })
    }

    pub fn monomial<F: Field<Elem = E>>(field: &F, c: E, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !field.is_zero(&c) {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn constant<F: Field<Elem = E>>(field: &F, c: E) -> Self {
        Self::monomial(field, c, Monomial::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (variable-sorted) monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &E)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&E> {
        self.terms.get(m)
    }

    pub fn variables(&self) -> Vec<VarIndex> {
        let mut vs: Vec<VarIndex> = self.terms.keys().flat_map(|m| m.support()).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn add<F: Field<Elem = E>>(&self, other: &Self, field: &F) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            match terms.get_mut(m) {
                Some(d) => {
                    *d = field.add(d, c);
                    if field.is_zero(d) {
                        terms.remove(m);
                    }
                }
                None => {
                    terms.insert(m.clone(), c.clone());
                }
            }
        }
        Polynomial { terms }
    }

    pub fn neg<F: Field<Elem = E>>(&self, field: &F) -> Self {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect() }
    }

    pub fn sub<F: Field<Elem = E>>(&self, other: &Self, field: &F) -> Self {
        self.add(&other.neg(field), field)
    }

    /// `c·m·self`.
    pub fn mul_term<F: Field<Elem = E>>(&self, c: &E, m: &Monomial, field: &F) -> Result<Self> {
        if field.is_zero(c) {
            return Ok(Self::zero());
        }
        let mut terms = BTreeMap::new();
        for (n, d) in &self.terms {
            terms.insert(n.mul(m)?, field.mul(c, d));
        }
        Ok(Polynomial { terms })
    }

    pub fn mul<F: Field<Elem = E>>(&self, other: &Self, field: &F) -> Result<Self> {
        let mut acc = Self::zero();
        for (m, c) in &other.terms {
            acc = acc.add(&self.mul_term(c, m, field)?, field);
        }
        Ok(acc)
    }

    pub fn scale<F: Field<Elem = E>>(&self, c: &E, field: &F) -> Self {
        self.mul_term(c, &Monomial::one(), field).expect("multiplying by 1 cannot overflow")
    }

    /// Kills every variable outside `keep` (the projection onto a smaller ring).
    pub fn project(&self, keep: impl Fn(&VarIndex) -> bool) -> Self {
        Polynomial { terms: self.terms.iter().filter_map(|(m, c)| m.project(&keep).map(|m| (m, c.clone()))).collect() }
    }

    /// Evaluates at a point given by `value(v)` for each variable.
    pub fn evaluate<F: Field<Elem = E>>(&self, field: &F, value: impl Fn(&VarIndex) -> E) -> E {
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.exponents() {
                let x = value(&v);
                for _ in 0..e {
                    t = field.mul(&t, &x);
                }
            }
            acc = field.add(&acc, &t);
        }
        acc
    }

    pub fn to_text<F: Field<Elem = E>>(&self, field: &F) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = field.is_negative_display(c);
            let abs = if neg { field.neg(c) } else { c.clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff = field.format(&abs);
            if m.is_one() {
                out.push_str(&coeff);
            } else if coeff == "1" {
                out.push_str(&m.to_string());
            } else {
                out.push_str(&format!("{coeff}*{m}"));
            }
        }
        out
    }
}

/// Parses the textual polynomial format.
pub fn parse_polynomial<F: Field>(field: &F, text: &str) -> Result<Polynomial<F::Elem>> {
    let mut p = Parser { s: text.as_bytes(), i: 0 };
    let mut terms = Vec::new();
    p.ws();
    if p.eof() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut first = true;
    loop {
        p.ws();
        if p.eof() {
            break;
        }
        let mut negative = false;
        match p.peek() {
            Some(b'+') => {
                p.i += 1;
            }
            Some(b'-') => {
                negative = true;
                p.i += 1;
            }
            _ if !first => return Err(p.err("expected `+` or `-`")),
            _ => {}
        }
        first = false;
        p.ws();
        let (num, den, mono) = p.term()?;
        let mut c = field.embed_ratio(&num, &den)?;
        if negative {
            c = field.neg(&c);
        }
        terms.push((c, mono));
    }
    Polynomial::from_terms(field, terms)
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
}

impl Parser<'_> {
    fn eof(&self) -> bool {
        self.i >= self.s.len()
    }
    fn peek(&self) -> Option<u8> {
        self.s.get(self.i).copied()
    }
    fn ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.i += 1;
        }
    }
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at byte {}", self.i))
    }
    fn expect(&mut self, c: u8) -> Result<()> {
        self.ws();
        if self.peek() == Some(c) {
            self.i += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected `{}`", c as char)))
        }
    }
    fn digits(&mut self) -> Result<&str> {
        self.ws();
        let start = self.i;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.i += 1;
        }
        if start == self.i {
            return Err(self.err("expected a number"));
        }
        Ok(std::str::from_utf8(&self.s[start..self.i]).expect("ascii digits"))
    }
    fn uint(&mut self) -> Result<u32> {
        let d = self.digits()?;
        d.parse().map_err(|_| Error::Parse(format!("number `{d}` out of range")))
    }

    fn term(&mut self) -> Result<(BigInt, BigInt, Monomial)> {
        let mut num = BigInt::from(1);
        let mut den = BigInt::from(1);
        let mut factors = Vec::new();
        let mut expect_factor = true;
        while expect_factor {
            self.ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let n: BigInt = self.digits()?.parse().expect("digits");
                    num *= n;
                    self.ws();
                    if self.peek() == Some(b'/') {
                        self.i += 1;
                        let d: BigInt = self.digits()?.parse().expect("digits");
                        den *= d;
                    }
                }
                Some(b'x') => {
                    self.i += 1;
                    self.expect(b'[')?;
                    let a = self.uint()?;
                    self.ws();
                    let v = if self.peek() == Some(b',') {
                        self.i += 1;
                        let b = self.uint()?;
                        VarIndex::grid(a, b)?
                    } else {
                        VarIndex::line(a)?
                    };
                    self.expect(b']')?;
                    self.ws();
                    let mut e = 1;
                    if self.peek() == Some(b'^') {
                        self.i += 1;
                        e = self.uint()?;
                    }
                    factors.push((v, e));
                }
                _ => return Err(self.err("expected a coefficient or variable")),
            }
            self.ws();
            expect_factor = self.peek() == Some(b'*');
            if expect_factor {
                self.i += 1;
            }
        }
        Ok((num, den, Monomial::new(factors)?))
    }
}
