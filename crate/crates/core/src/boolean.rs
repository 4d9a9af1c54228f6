//! Generalized and extended generalized Boolean functions.
//!
//! A [`PolyFunction`] maps `Z_b^n → Z_q`. With `b = 2` it is a GBF; with
//! `b > 2` an EGBF. Its associated sequence lists the values at every index
//! `h = Σ_l h_l b^{l-1}`, so variable 1 is the least-significant digit.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::sequence::QarySequence;

/// Base-`b` digits of `h`, least significant first, padded to `n` digits.
pub fn digits(mut h: usize, b: u32, n: usize) -> Vec<u32> {
    let b = b as usize;
    (0..n)
        .map(|_| {
            let d = h % b;
            h /= b;
            d as u32
        })
        .collect()
}

/// Inverse of [`digits`].
pub fn from_digits(ds: &[u32], b: u32) -> usize {
    ds.iter()
        .rev()
        .fold(0usize, |acc, &d| acc * b as usize + d as usize)
}

/// A polynomial function `Z_b^n → Z_q` in monomials of distinct variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyFunction {
    b: u32,
    n_vars: usize,
    q: u32,
    // sorted variable set (1-based) -> nonzero coefficient in Z_q; the empty
    // set is the constant term
    terms: BTreeMap<Vec<usize>, u32>,
}

impl PolyFunction {
    /// The zero function.
    pub fn zero(b: u32, n_vars: usize, q: u32) -> Result<Self> {
        if b < 2 || b > q {
            return Err(Error::InvalidDomain { b, q });
        }
        match (b as usize).checked_pow(n_vars as u32) {
            Some(size) if size <= 1 << 32 => {}
            _ => return Err(Error::DomainTooLarge { b, n_vars }),
        }
        Ok(Self {
            b,
            n_vars,
            q,
            terms: BTreeMap::new(),
        })
    }

    pub fn constant(b: u32, n_vars: usize, q: u32, value: u32) -> Result<Self> {
        let mut f = Self::zero(b, n_vars, q)?;
        f.add_term(value, &[])?;
        Ok(f)
    }

    /// `coeff · v_index`.
    pub fn variable(b: u32, n_vars: usize, q: u32, index: usize, coeff: u32) -> Result<Self> {
        let mut f = Self::zero(b, n_vars, q)?;
        f.add_term(coeff, &[index])?;
        Ok(f)
    }

    /// Adds `coeff · Π_{l ∈ vars} v_l`, merging with an existing monomial.
    pub fn add_term(&mut self, coeff: u32, vars: &[usize]) -> Result<()> {
        let mut key = vars.to_vec();
        key.sort_unstable();
        if let Some(w) = key.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::RepeatedVariable(w[0]));
        }
        if let Some(&index) = key.iter().find(|&&v| v == 0 || v > self.n_vars) {
            return Err(Error::VariableOutOfRange {
                index,
                n_vars: self.n_vars,
            });
        }
        let c = coeff % self.q;
        let entry = self.terms.entry(key).or_insert(0);
        *entry = (*entry + c) % self.q;
        self.terms.retain(|_, c| *c != 0);
        Ok(())
    }

    pub fn with_term(mut self, coeff: u32, vars: &[usize]) -> Result<Self> {
        self.add_term(coeff, vars)?;
        Ok(self)
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Monomials as `(coefficient, sorted variable indices)`.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &[usize])> {
        self.terms.iter().map(|(vars, &c)| (c, vars.as_slice()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    /// Domain size `b^n`, the length of the associated sequence.
    pub fn domain_size(&self) -> usize {
        (self.b as usize).pow(self.n_vars as u32)
    }

    /// Value at a digit vector `(v_1, …, v_n)`; monomials multiply digit values.
    pub fn evaluate(&self, point: &[u32]) -> u32 {
        debug_assert_eq!(point.len(), self.n_vars);
        let q = self.q as u64;
        self.terms.iter().fold(0u64, |acc, (vars, &c)| {
            let prod = vars
                .iter()
                .fold(c as u64, |p, &v| p * point[v - 1] as u64 % q);
            (acc + prod) % q
        }) as u32
    }

    pub fn sequence(&self) -> QarySequence {
        let exps = (0..self.domain_size())
            .map(|h| self.evaluate(&digits(h, self.b, self.n_vars)))
            .collect();
        QarySequence::new(self.q, exps).expect("values are reduced and domain is non-empty")
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.b != other.b || self.n_vars != other.n_vars || self.q != other.q {
            return Err(Error::DomainMismatch);
        }
        let mut out = self.clone();
        for (vars, &c) in &other.terms {
            out.add_term(c, vars)?;
        }
        Ok(out)
    }
}

impl fmt::Display for PolyFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let var = if self.b == 2 { 'x' } else { 'y' };
        // highest degree first, constant last
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then(a.0.cmp(b.0)));
        for (i, (vars, c)) in terms.into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if vars.is_empty() || *c != 1 {
                write!(f, "{c}")?;
            }
            for v in vars {
                write!(f, "{var}{v}")?;
            }
        }
        Ok(())
    }
}

/// The sequence associated with `f`.
pub fn sequence_of(f: &PolyFunction) -> QarySequence {
    f.sequence()
}

/// `s^{(len)}`: the first `len` entries of `s`.
pub fn truncate(s: &QarySequence, len: usize) -> Result<QarySequence> {
    if len < 1 || len > s.len() {
        return Err(Error::TruncationOutOfRange { len, max: s.len() });
    }
    QarySequence::new(s.q(), s.exponents()[..len].to_vec())
}
