//! Optimal `(b^n, 2^k, b^n, 2^k)`-ZCSs from extended generalized Boolean
//! functions.
//!
//! Inputs: an even `q`, a divisor `b` of `q`, `m` binary variables split into
//! `k` ordered blocks `π_1, …, π_k` whose first elements are exactly
//! `{1, …, k}`, and affine coefficients `β_0, …, β_m`. The quadratic GBF
//!
//! ```text
//! f = (q/2) Σ_γ Σ_l x_{π_γ(l)} x_{π_γ(l+1)} + Σ_l β_l x_l + β_0
//! ```
//!
//! is truncated to length `b^n`; flock `p` adds the EGBF offset
//! `g^p = (q/b) Σ_l p_l y_l` and, for each `λ ∈ Z_2^k`, the binary mask
//! `(q/2) Σ_γ λ_γ x_{π_γ(1)}`.

use crate::boolean::{digits, truncate, PolyFunction};
use crate::error::{Error, Result};
use crate::family::{Flock, ZcsFamily};
use crate::sequence::QarySequence;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParamError {
    #[error("q must be even (got {0})")]
    OddModulus(u32),
    #[error("b must satisfy 2 <= b <= q (got b={b}, q={q})")]
    BaseOutOfRange { b: u32, q: u32 },
    #[error("b does not divide q (b={b}, q={q})")]
    BaseNotDivisor { b: u32, q: u32 },
    #[error("m must be at least 1")]
    NoBinaryVariables,
    #[error("n must be at least 1")]
    NoBaseVariables,
    #[error("b^n exceeds 2^m (b={b}, n={n}, m={m})")]
    LengthExceedsDomain { b: u32, n: usize, m: usize },
    #[error("at least one block is required")]
    NoBlocks,
    #[error("k exceeds m (k={k}, m={m})")]
    TooManyBlocks { k: usize, m: usize },
    #[error("block {0} is empty")]
    EmptyBlock(usize),
    #[error("variable {0} is outside 1..=m")]
    VariableOutOfRange(usize),
    #[error("variable {0} appears in more than one block position")]
    DuplicateVariable(usize),
    #[error("variable {0} is not covered by any block")]
    MissingVariable(usize),
    #[error("first elements of the blocks must be exactly 1..=k")]
    FirstElements,
    #[error("beta must have m+1 = {expected} entries (got {got})")]
    BetaLength { expected: usize, got: usize },
    #[error("beta_{index} = {value} is not a residue modulo q")]
    BetaOutOfRange { index: usize, value: u32 },
    #[error("2^k exceeds the sequence length b^n (k={k}, b^n={len})")]
    WidthExceedsLength { k: usize, len: usize },
}

/// Inputs of the construction. `blocks[γ]` lists `π_γ(1), π_γ(2), …` (1-based);
/// `beta[l]` is `β_l` with `β_0` the constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionParams {
    pub q: u32,
    pub b: u32,
    pub m: usize,
    pub n: usize,
    pub blocks: Vec<Vec<usize>>,
    pub beta: Vec<u32>,
}

impl ConstructionParams {
    pub fn new(
        q: u32,
        b: u32,
        m: usize,
        n: usize,
        blocks: Vec<Vec<usize>>,
        beta: Vec<u32>,
    ) -> Result<Self, ParamError> {
        let params = Self {
            q,
            b,
            m,
            n,
            blocks,
            beta,
        };
        params.validate()?;
        Ok(params)
    }

    /// The `(6, 4, 6, 4)` example: `q = b = 6`, `m = 3`, `n = 1`, blocks
    /// `(1, 3)` and `(2)`, all `β = 0`.
    pub fn table_one() -> Self {
        Self::new(6, 6, 3, 1, vec![vec![1, 3], vec![2]], vec![0; 4]).expect("valid example")
    }

    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    /// Sequence length and set size `b^n`.
    pub fn length(&self) -> usize {
        (self.b as usize).pow(self.n as u32)
    }

    /// Flock size and ZCZ width `2^k`.
    pub fn flock_size(&self) -> usize {
        1 << self.k()
    }

    pub fn validate(&self) -> Result<(), ParamError> {
        let (q, b, m, n) = (self.q, self.b, self.m, self.n);
        if q % 2 != 0 {
            return Err(ParamError::OddModulus(q));
        }
        if b < 2 || b > q {
            return Err(ParamError::BaseOutOfRange { b, q });
        }
        if q % b != 0 {
            return Err(ParamError::BaseNotDivisor { b, q });
        }
        if m == 0 {
            return Err(ParamError::NoBinaryVariables);
        }
        if n == 0 {
            return Err(ParamError::NoBaseVariables);
        }
        let len = (b as u128).checked_pow(n as u32);
        let domain = 1u128.checked_shl(m as u32).filter(|_| m < 64);
        match (len, domain) {
            (Some(len), Some(domain)) if len <= domain => {}
            _ => return Err(ParamError::LengthExceedsDomain { b, n, m }),
        }
        let k = self.k();
        if k == 0 {
            return Err(ParamError::NoBlocks);
        }
        if k > m {
            return Err(ParamError::TooManyBlocks { k, m });
        }
        let mut seen = vec![false; m + 1];
        for (gamma, block) in self.blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(ParamError::EmptyBlock(gamma + 1));
            }
            for &v in block {
                if v == 0 || v > m {
                    return Err(ParamError::VariableOutOfRange(v));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(ParamError::DuplicateVariable(v));
                }
            }
        }
        if let Some(v) = (1..=m).find(|&v| !seen[v]) {
            return Err(ParamError::MissingVariable(v));
        }
        let mut firsts: Vec<usize> = self.blocks.iter().map(|bl| bl[0]).collect();
        firsts.sort_unstable();
        if firsts != (1..=k).collect::<Vec<_>>() {
            return Err(ParamError::FirstElements);
        }
        if self.beta.len() != m + 1 {
            return Err(ParamError::BetaLength {
                expected: m + 1,
                got: self.beta.len(),
            });
        }
        if let Some((index, &value)) = self.beta.iter().enumerate().find(|(_, &v)| v >= q) {
            return Err(ParamError::BetaOutOfRange { index, value });
        }
        let len = self.length();
        if k >= usize::BITS as usize || (1usize << k) > len {
            return Err(ParamError::WidthExceedsLength { k, len });
        }
        Ok(())
    }
}

/// The quadratic GBF `f` over `Z_2^m`.
pub fn build_quadratic_gbf(params: &ConstructionParams) -> Result<PolyFunction> {
    params.validate()?;
    let q = params.q;
    let mut f = PolyFunction::zero(2, params.m, q)?;
    for block in &params.blocks {
        for pair in block.windows(2) {
            f.add_term(q / 2, pair)?;
        }
    }
    for (l, &beta) in params.beta.iter().enumerate() {
        if l == 0 {
            f.add_term(beta, &[])?;
        } else {
            f.add_term(beta, &[l])?;
        }
    }
    Ok(f)
}

/// The EGBF offset `g^p = (q/b) Σ_l p_l y_l` over `Z_b^n`.
pub fn build_offset_egbf(p: usize, params: &ConstructionParams) -> Result<PolyFunction> {
    params.validate()?;
    let len = params.length();
    if p >= len {
        return Err(Error::OffsetOutOfRange { p, count: len });
    }
    let step = params.q / params.b;
    let mut g = PolyFunction::zero(params.b, params.n, params.q)?;
    for (l, d) in digits(p, params.b, params.n).into_iter().enumerate() {
        g.add_term(step * d, &[l + 1])?;
    }
    Ok(g)
}

/// Builds the family; flock `p` lists its sequences by `λ_1 + 2λ_2 + … + 2^{k−1}λ_k`.
pub fn build_zcs(params: &ConstructionParams) -> Result<ZcsFamily> {
    params.validate()?;
    let q = params.q;
    let len = params.length();
    let half = q / 2;

    let f = truncate(&build_quadratic_gbf(params)?.sequence(), len)?;
    let masks: Vec<QarySequence> = params
        .blocks
        .iter()
        .map(|block| {
            let x = PolyFunction::variable(2, params.m, q, block[0], half)?.sequence();
            truncate(&x, len)
        })
        .collect::<Result<_>>()?;

    let mut flocks = Vec::with_capacity(len);
    for p in 0..len {
        let g = build_offset_egbf(p, params)?.sequence();
        let base: Vec<u32> = f
            .exponents()
            .iter()
            .zip(g.exponents())
            .map(|(a, b)| (a + b) % q)
            .collect();
        let mut seqs = Vec::with_capacity(params.flock_size());
        for lambda in 0..params.flock_size() {
            let mut row = base.clone();
            for (gamma, mask) in masks.iter().enumerate() {
                if lambda >> gamma & 1 == 1 {
                    for (r, &x) in row.iter_mut().zip(mask.exponents()) {
                        *r = (*r + x) % q;
                    }
                }
            }
            seqs.push(QarySequence::new(q, row)?);
        }
        flocks.push(Flock::new(seqs)?);
    }
    ZcsFamily::new(flocks, Some(params.flock_size()))
}
