//! Exact checking of the Z-complementary conditions.
//!
//! For an `(M, N, L, Z)`-ZCS every set correlation `ρ(C^p, C^t; u)` must be
//! `NL` at `u = 0, p = t`, and zero for `0 < |u| < Z` (`p = t`) and for
//! `|u| < Z` (`p ≠ t`). Zeros are decided exactly in `Z[ξ]`.

use std::fmt;

use crate::bounds::bounds;
use crate::cyclo::CycloValue;
use crate::error::{Error, Result};
use crate::family::{Flock, ZcsFamily};
use crate::sequence::accumulate_accf;

/// `ρ(C^p, C^t; u) = Σ_λ ρ(c^p_λ, c^t_λ; u)`.
pub fn set_correlation(cp: &Flock, ct: &Flock, u: isize) -> Result<CycloValue> {
    cp.compatible(ct)?;
    let len = cp.seq_len();
    if u.unsigned_abs() >= len {
        return Err(Error::ShiftOutOfRange { u, len });
    }
    Ok(flock_correlation(cp, ct, u))
}

fn flock_correlation(cp: &Flock, ct: &Flock, u: isize) -> CycloValue {
    let q = cp.q();
    let mut out = CycloValue::zero(q);
    let coeffs = out.coeffs_mut();
    for (a, b) in cp.sequences().iter().zip(ct.sequences()) {
        accumulate_accf(a.exponents(), b.exponents(), q, u, coeffs);
    }
    out
}

/// Flattened exponents for repeated correlation of one family: `pos` holds
/// `c^p_λ[i]`, `neg` holds `q − c^p_λ[i]`, so `pos + neg` indexes a `2q`-bin
/// histogram without a modular branch.
struct Packed {
    q: usize,
    n: usize,
    l: usize,
    pos: Vec<u32>,
    neg: Vec<u32>,
    hist: Vec<u32>,
}

const BANKS: usize = 4;

impl Packed {
    fn new(family: &ZcsFamily) -> Self {
        let q = family.q();
        let pos: Vec<u32> = family
            .flocks()
            .iter()
            .flat_map(|f| f.sequences())
            .flat_map(|s| s.exponents().iter().copied())
            .collect();
        let neg = pos.iter().map(|&e| q - e).collect();
        let q = q as usize;
        Self {
            q,
            n: family.flock_size(),
            l: family.seq_len(),
            pos,
            neg,
            hist: vec![0; BANKS * 2 * q],
        }
    }

    /// `ρ(C^p, C^t; u)` for `0 <= u < L`.
    fn correlate(&mut self, p: usize, t: usize, u: usize) -> CycloValue {
        let (q, n, l) = (self.q, self.n, self.l);
        let width = 2 * q;
        self.hist.fill(0);
        let (h0, rest) = self.hist.split_at_mut(width);
        let (h1, rest) = rest.split_at_mut(width);
        let (h2, h3) = rest.split_at_mut(width);
        for lambda in 0..n {
            let a = &self.pos[(p * n + lambda) * l + u..(p * n + lambda + 1) * l];
            let b = &self.neg[(t * n + lambda) * l..(t * n + lambda) * l + l - u];
            // independent banks keep repeated bins from serializing on one counter
            let mut ca = a.chunks_exact(BANKS);
            let mut cb = b.chunks_exact(BANKS);
            for (x, y) in (&mut ca).zip(&mut cb) {
                h0[(x[0] + y[0]) as usize] += 1;
                h1[(x[1] + y[1]) as usize] += 1;
                h2[(x[2] + y[2]) as usize] += 1;
                h3[(x[3] + y[3]) as usize] += 1;
            }
            for (x, y) in ca.remainder().iter().zip(cb.remainder()) {
                h0[(x + y) as usize] += 1;
            }
        }
        let mut out = CycloValue::zero(q as u32);
        let coeffs = out.coeffs_mut();
        for bank in self.hist.chunks_exact(width) {
            for (e, &count) in bank.iter().enumerate() {
                coeffs[e % q] += count as i64;
            }
        }
        out
    }
}

/// A violated condition: `ρ(C^p, C^t; u) = value`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub p: usize,
    pub t: usize,
    pub u: isize,
    pub value: CycloValue,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(p={}, t={}, u={}) -> {}",
            self.p, self.t, self.u, self.value
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub z: usize,
    pub ok: bool,
    pub measured_z: usize,
    /// Every violation with `|u| < z`, ordered by `(p, t, u)`.
    pub failures: Vec<Witness>,
    pub energy_ok: bool,
}

struct Scan {
    failures: Vec<Witness>,
    energy_ok: bool,
    measured_z: usize,
}

/// Walks shifts `u = 0, 1, …` over all ordered flock pairs, recording
/// violations for `u < collect_below` and stopping at the first violation at
/// or beyond it. Negative shifts follow from
/// `ρ(C^p, C^t; −u) = conj ρ(C^t, C^p; u)`.
fn scan(family: &ZcsFamily, collect_below: usize) -> Scan {
    let m = family.set_size();
    let l = family.seq_len();
    let mut packed = Packed::new(family);
    let energy = (family.flock_size() * l) as i64;

    let mut failures = Vec::new();
    let mut energy_ok = true;
    let mut measured = None;

    'shifts: for u in 0..l {
        if u >= collect_below && measured.is_some() {
            break;
        }
        for p in 0..m {
            for t in 0..m {
                let v = packed.correlate(p, t, u);
                let violated = if p == t && u == 0 {
                    !v.is_rational_integer(energy)
                } else {
                    !v.is_zero()
                };
                if !violated {
                    continue;
                }
                measured.get_or_insert(u);
                if u >= collect_below {
                    break 'shifts;
                }
                if p == t && u == 0 {
                    energy_ok = false;
                }
                if u > 0 {
                    failures.push(Witness {
                        p: t,
                        t: p,
                        u: -(u as isize),
                        value: v.conj(),
                    });
                }
                failures.push(Witness {
                    p,
                    t,
                    u: u as isize,
                    value: v,
                });
            }
        }
    }
    failures.sort_by_key(|w| (w.p, w.t, w.u));
    Scan {
        failures,
        energy_ok,
        measured_z: measured.unwrap_or(l),
    }
}

/// Checks the ZCS conditions at width `z` and measures the maximal width.
pub fn verify_zcs(family: &ZcsFamily, z: usize) -> Result<VerificationReport> {
    let len = family.seq_len();
    if z < 1 || z > len {
        return Err(Error::WidthOutOfRange { z, len });
    }
    let scan = scan(family, z);
    Ok(VerificationReport {
        z,
        ok: scan.failures.is_empty(),
        measured_z: scan.measured_z,
        failures: scan.failures,
        energy_ok: scan.energy_ok,
    })
}

/// Largest `Z ∈ [1, L]` at which the family is a ZCS, or 0 when the `u = 0`
/// conditions already fail.
pub fn max_zcz_width(family: &ZcsFamily) -> usize {
    scan(family, 0).measured_z
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Optimality {
    Optimal,
    Suboptimal,
    NotAZcs,
}

impl fmt::Display for Optimality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Optimality::Optimal => "optimal",
            Optimality::Suboptimal => "suboptimal",
            Optimality::NotAZcs => "not-a-ZCS",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Optimality,
    pub m: usize,
    pub n: usize,
    pub l: usize,
    /// Measured ZCZ width.
    pub z: usize,
    /// `⌊NL/Z⌋` at the measured width; absent when `z = 0`.
    pub bound: Option<u64>,
}

pub fn classify_optimality(family: &ZcsFamily) -> Classification {
    let (m, n, l) = (family.set_size(), family.flock_size(), family.seq_len());
    let z = max_zcz_width(family);
    let bound = (z >= 1).then(|| bounds(n, l, z).expect("1 <= z <= l").theorem1);
    let verdict = match bound {
        None => Optimality::NotAZcs,
        Some(b) if b == m as u64 => Optimality::Optimal,
        Some(_) => Optimality::Suboptimal,
    };
    Classification {
        verdict,
        m,
        n,
        l,
        z,
        bound,
    }
}
