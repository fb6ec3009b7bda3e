//! Sparse polynomials in `z1..zr` with big-integer coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is the
//! canonical emission order: total degree ascending, and within one degree
//! the exponent vectors in descending lexicographic order (so `z1` precedes
//! `z7`, and `z1^2` precedes `z1*z8` precedes `z8^2`). The leading monomial is
//! therefore the last key.

mod parse;

pub use parse::parse_poly;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Exponent vector of a monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(rank: usize) -> Self {
        Monomial(vec![0; rank])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "z{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZPolynomial {
    rank: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl ZPolynomial {
    pub fn zero(rank: usize) -> Self {
        ZPolynomial {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, BigInt::one())
    }

    pub fn constant(rank: usize, c: BigInt) -> Self {
        let mut p = Self::zero(rank);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(rank), c);
        }
        p
    }

    /// The variable `z_{j+1}` (zero-based index).
    pub fn var(rank: usize, j: usize) -> Self {
        let mut exps = vec![0; rank];
        exps[j] = 1;
        Self::monomial(Monomial(exps), BigInt::one())
    }

    pub fn monomial(m: Monomial, c: BigInt) -> Self {
        let rank = m.0.len();
        let mut p = Self::zero(rank);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a polynomial from possibly repeated or zero terms.
    pub fn from_terms<I>(rank: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut p = Self::zero(rank);
        for (m, c) in terms {
            debug_assert_eq!(m.0.len(), rank);
            p.add_term(m, c);
        }
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
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

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check(&self, other: &ZPolynomial) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: other.rank,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &ZPolynomial) -> Result<ZPolynomial> {
        self.check(other)?;
        let mut out = self.clone();
        out.add_assign_unchecked(other);
        Ok(out)
    }

    pub fn sub(&self, other: &ZPolynomial) -> Result<ZPolynomial> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub(crate) fn add_assign_unchecked(&mut self, other: &ZPolynomial) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    /// `self += c * other`.
    pub(crate) fn add_scaled_unchecked(&mut self, other: &ZPolynomial, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &BigInt) -> ZPolynomial {
        if c.is_zero() {
            return ZPolynomial::zero(self.rank);
        }
        ZPolynomial {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn neg(&self) -> ZPolynomial {
        self.scale(&BigInt::from(-1))
    }

    pub fn mul(&self, other: &ZPolynomial) -> Result<ZPolynomial> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &ZPolynomial) -> ZPolynomial {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(self.len() * other.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                *acc.entry(m1.mul(m2)).or_default() += c1 * c2;
            }
        }
        ZPolynomial {
            rank: self.rank,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Multiplication by the single variable `z_{j+1}`.
    pub fn mul_var(&self, j: usize) -> ZPolynomial {
        ZPolynomial {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e[j] += 1;
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    /// Formal derivative with respect to `z_{j+1}` (zero-based index).
    pub fn partial_derivative(&self, j: usize) -> Result<ZPolynomial> {
        if j >= self.rank {
            return Err(Error::VariableOutOfRange {
                index: j + 1,
                rank: self.rank,
            });
        }
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[j] > 0)
            .map(|(m, c)| {
                let mut e = m.0.clone();
                let k = e[j];
                e[j] -= 1;
                (Monomial(e), c * BigInt::from(k))
            })
            .collect();
        Ok(ZPolynomial { rank: self.rank, terms })
    }

    pub fn evaluate(&self, point: &[BigInt]) -> Result<BigInt> {
        if point.len() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: point.len(),
            });
        }
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    term *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Exact division by an integer, or `None` if some coefficient is not
    /// divisible.
    pub fn div_exact(&self, d: &BigInt) -> Option<ZPolynomial> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let (q, r) = num_integer::Integer::div_rem(c, d);
            if !r.is_zero() {
                return None;
            }
            terms.insert(m.clone(), q);
        }
        Some(ZPolynomial { rank: self.rank, terms })
    }

    /// Term map as JSON: `[{"exps": [..], "coeff": "decimal"}]` in canonical
    /// order.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| json!({ "exps": m.exponents(), "coeff": c.to_string() }))
                .collect(),
        )
    }

    pub fn from_json(rank: usize, v: &Value) -> Result<ZPolynomial> {
        let bad = |msg: &str| Error::Fixture(format!("bad polynomial JSON: {msg}"));
        let arr = v.as_array().ok_or_else(|| bad("expected an array"))?;
        let mut p = ZPolynomial::zero(rank);
        for t in arr {
            let exps: Vec<u32> = t["exps"]
                .as_array()
                .ok_or_else(|| bad("missing exps"))?
                .iter()
                .map(|e| e.as_u64().map(|e| e as u32).ok_or_else(|| bad("bad exponent")))
                .collect::<Result<_>>()?;
            if exps.len() != rank {
                return Err(Error::RankMismatch { expected: rank, got: exps.len() });
            }
            let coeff: BigInt = t["coeff"]
                .as_str()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| bad("bad coefficient"))?;
            p.add_term(Monomial(exps), coeff);
        }
        Ok(p)
    }
}

impl fmt::Display for ZPolynomial {
    /// Canonical text: ascending term order, explicit signs, unit
    /// coefficients omitted on non-constant terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

pub fn print_poly(p: &ZPolynomial) -> String {
    p.to_string()
}
