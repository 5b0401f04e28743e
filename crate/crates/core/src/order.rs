//! Lexicographic term orders on infinitely many variables.
//!
//! Both orders rank the variables and compare two monomials at the largest
//! variable where their exponents differ. `InfiniteLex` ranks `x[1] < x[2] < …`.
//! `AntidiagonalOmega2` walks the diagonals `Q_d = {x[i,j] : j - i = d}` in the
//! sequence `Q_0 < Q_1 < Q_-1 < Q_2 < Q_-2 < …`, and inside a diagonal
//! `x[i,j] < x[i+1,j+1]`; the variable order has type ω².

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::monomial::{Family, Monomial, VarIndex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TermOrder {
    InfiniteLex,
    AntidiagonalOmega2,
    /// The parent order on monomials in a finite variable subset.
    Restriction {
        parent: Box<TermOrder>,
        vars: BTreeSet<VarIndex>,
    },
}

/// Sort key of a monomial: `(variable rank, exponent)` pairs by decreasing
/// rank. Comparing keys lexicographically is exactly the term order.
pub type OrderKey = Vec<(u64, u32)>;

impl TermOrder {
    pub fn restrict(&self, vars: impl IntoIterator<Item = VarIndex>) -> TermOrder {
        TermOrder::Restriction { parent: Box::new(self.base().clone()), vars: vars.into_iter().collect() }
    }

    /// The unrestricted order underneath any chain of restrictions.
    pub fn base(&self) -> &TermOrder {
        match self {
            TermOrder::Restriction { parent, .. } => parent.base(),
            o => o,
        }
    }

    pub fn family(&self) -> Family {
        match self.base() {
            TermOrder::InfiniteLex => Family::Line,
            _ => Family::Grid,
        }
    }

    pub fn name(&self) -> &'static str {
        match self.base() {
            TermOrder::InfiniteLex => "lex",
            _ => "antidiag",
        }
    }

    /// Position of a variable in the variable order.
    pub fn var_rank(&self, v: &VarIndex) -> Result<u64> {
        match (self.base(), v) {
            (TermOrder::InfiniteLex, VarIndex::Line(n)) => Ok(*n as u64),
            (TermOrder::AntidiagonalOmega2, &VarIndex::Grid(i, j)) => {
                let d = j as i64 - i as i64;
                let diag = match d.cmp(&0) {
                    Ordering::Equal => 0,
                    Ordering::Greater => 2 * d - 1,
                    Ordering::Less => -2 * d,
                } as u64;
                Ok((diag << 32) | i as u64)
            }
            _ => Err(Error::IncomparableFamily),
        }
    }

    fn admits(&self, m: &Monomial) -> Result<()> {
        let mut o = self;
        while let TermOrder::Restriction { parent, vars } = o {
            if let Some(v) = m.support().find(|v| !vars.contains(v)) {
                return Err(Error::OutsideRestriction(format!("{m} (variable {v})")));
            }
            o = parent;
        }
        Ok(())
    }

    pub fn key(&self, m: &Monomial) -> Result<OrderKey> {
        self.admits(m)?;
        let mut key = m.exponents().iter().map(|&(v, e)| Ok((self.var_rank(&v)?, e))).collect::<Result<OrderKey>>()?;
        key.sort_unstable_by_key(|a| std::cmp::Reverse(a.0));
        Ok(key)
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        Ok(self.key(a)?.cmp(&self.key(b)?))
    }
}

pub fn compare(order: &TermOrder, a: &Monomial, b: &Monomial) -> Result<Ordering> {
    order.compare(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(i: u32, j: u32) -> VarIndex {
        VarIndex::Grid(i, j)
    }

    #[test]
    fn infinite_lex_examples() {
        let o = TermOrder::InfiniteLex;
        let x1 = Monomial::var(VarIndex::Line(1));
        let x2 = Monomial::var(VarIndex::Line(2));
        assert_eq!(o.compare(&x1, &x2).unwrap(), Ordering::Less);
        // x1^5 < x2: the largest differing variable decides
        let x1_5 = Monomial::new([(VarIndex::Line(1), 5)]).unwrap();
        assert_eq!(o.compare(&x1_5, &x2).unwrap(), Ordering::Less);
        assert_eq!(o.compare(&Monomial::one(), &x1).unwrap(), Ordering::Less);
    }

    #[test]
    fn antidiagonal_examples() {
        let o = TermOrder::AntidiagonalOmega2;
        assert_eq!(o.compare(&Monomial::var(g(1, 1)), &Monomial::var(g(1, 2))).unwrap(), Ordering::Less);
        let anti = Monomial::squarefree([g(1, 2), g(2, 1)]).unwrap();
        let diag = Monomial::squarefree([g(1, 1), g(2, 2)]).unwrap();
        assert_eq!(o.compare(&anti, &diag).unwrap(), Ordering::Greater);
    }

    #[test]
    fn diagonal_sequence() {
        let o = TermOrder::AntidiagonalOmega2;
        // Q_0 < Q_1 < Q_-1 < Q_2 < Q_-2, and x[i,j] < x[i+1,j+1]
        let chain = [g(1, 1), g(5, 5), g(1, 2), g(4, 5), g(2, 1), g(9, 8), g(1, 3), g(3, 1)];
        for w in chain.windows(2) {
            assert!(o.var_rank(&w[0]).unwrap() < o.var_rank(&w[1]).unwrap(), "{} < {}", w[0], w[1]);
        }
    }

    #[test]
    fn exhaustive_2x2_comparison_oracle() {
        // independent oracle: explicit rank table for the four variables
        let table = [(g(1, 1), 0), (g(2, 2), 1), (g(1, 2), 2), (g(2, 1), 3)];
        let rank = |v: VarIndex| table.iter().find(|(w, _)| *w == v).unwrap().1;
        let vars: Vec<VarIndex> = table.iter().map(|t| t.0).collect();
        let mut monos = Vec::new();
        for e in 0..16u32 {
            monos.push(Monomial::new(vars.iter().enumerate().map(|(k, &v)| (v, (e >> k) & 1))).unwrap());
        }
        let oracle = |a: &Monomial, b: &Monomial| {
            let mut vs = vars.clone();
            vs.sort_by_key(|&v| std::cmp::Reverse(rank(v)));
            for v in vs {
                let (ea, eb) = (a.exponent(v), b.exponent(v));
                if ea != eb {
                    return ea.cmp(&eb);
                }
            }
            Ordering::Equal
        };
        let o = TermOrder::AntidiagonalOmega2;
        for a in &monos {
            for b in &monos {
                assert_eq!(o.compare(a, b).unwrap(), oracle(a, b));
            }
        }
    }

    #[test]
    fn restriction_and_family_errors() {
        let o = TermOrder::AntidiagonalOmega2.restrict([g(1, 1), g(1, 2)]);
        assert!(o.compare(&Monomial::var(g(1, 1)), &Monomial::var(g(1, 2))).is_ok());
        assert!(matches!(
            o.compare(&Monomial::var(g(1, 1)), &Monomial::var(g(2, 2))),
            Err(Error::OutsideRestriction(_))
        ));
        assert_eq!(
            TermOrder::InfiniteLex.compare(&Monomial::var(g(1, 1)), &Monomial::one()),
            Err(Error::IncomparableFamily)
        );
    }
}
