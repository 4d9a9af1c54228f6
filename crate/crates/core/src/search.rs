//! Brute-force oracles: exhaustive maximum set size at tiny parameters, and
//! the excluded-term identity for orthogonal unimodular pairs.
//!
//! The set-size search treats every flock (an ordered `N`-tuple of q-ary
//! length-`L` sequences) whose summed autocorrelation vanishes for `0 < u < Z`
//! as a vertex, joins two flocks when their set cross-correlation vanishes for
//! `|u| < Z`, and finds a maximum clique.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::bounds;
use crate::cyclo::CycloValue;
use crate::error::{Error, Result};
use crate::family::{Flock, ZcsFamily};
use crate::sequence::{accf, QarySequence};
use crate::verify::set_correlation;

pub const DEFAULT_CAP: u64 = 10_000_000;

/// Admissible flocks beyond this make the adjacency matrix impractical.
pub const MAX_GRAPH_VERTICES: usize = 40_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchSpec {
    pub q: u32,
    pub n: usize,
    pub l: usize,
    pub z: usize,
    pub max_candidates: u64,
    pub seed: u64,
}

impl SearchSpec {
    pub fn new(q: u32, n: usize, l: usize, z: usize) -> Self {
        Self {
            q,
            n,
            l,
            z,
            max_candidates: DEFAULT_CAP,
            seed: 0,
        }
    }

    /// `q^(N·L)`, or `None` on overflow.
    pub fn space_size(&self) -> Option<u64> {
        let exp = u32::try_from(self.n.checked_mul(self.l)?).ok()?;
        (self.q as u64).checked_pow(exp)
    }

    pub fn within_cap(&self) -> bool {
        self.space_size().is_some_and(|s| s <= self.max_candidates)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub best_m: usize,
    /// A family achieving `best_m`; absent when no flock is admissible.
    pub witness: Option<ZcsFamily>,
    /// `⌊NL/Z⌋`.
    pub bound: u64,
    pub proven_exhaustive: bool,
    pub candidates_examined: u64,
    pub admissible_flocks: usize,
}

fn decode_flock(mut index: u64, spec: &SearchSpec) -> Flock {
    let q = spec.q as u64;
    let rows = (0..spec.n)
        .map(|_| {
            (0..spec.l)
                .map(|_| {
                    let d = index % q;
                    index /= q;
                    d as u32
                })
                .collect()
        })
        .collect();
    Flock::from_exponents(spec.q, rows).expect("digits are residues")
}

fn auto_zcz(f: &Flock, z: usize) -> bool {
    (1..z).all(|u| set_correlation(f, f, u as isize).unwrap().is_zero())
}

fn cross_zcz(a: &Flock, b: &Flock, z: usize) -> bool {
    (0..z).all(|u| {
        let u = u as isize;
        set_correlation(a, b, u).unwrap().is_zero() && set_correlation(b, a, u).unwrap().is_zero()
    })
}

struct Graph {
    words: usize,
    adj: Vec<Vec<u64>>,
}

impl Graph {
    fn has(set: &[u64], v: usize) -> bool {
        set[v / 64] >> (v % 64) & 1 == 1
    }

    fn count(set: &[u64]) -> usize {
        set.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn expand(&self, clique: &mut Vec<usize>, mut cand: Vec<u64>, best: &mut Vec<usize>) {
        let mut remaining = Self::count(&cand);
        if remaining == 0 {
            if clique.len() > best.len() {
                *best = clique.clone();
            }
            return;
        }
        for v in 0..self.words * 64 {
            if remaining == 0 || clique.len() + remaining <= best.len() {
                return;
            }
            if !Self::has(&cand, v) {
                continue;
            }
            let next: Vec<u64> = cand.iter().zip(&self.adj[v]).map(|(a, b)| a & b).collect();
            clique.push(v);
            self.expand(clique, next, best);
            clique.pop();
            cand[v / 64] &= !(1u64 << (v % 64));
            remaining -= 1;
        }
    }
}

/// Largest `M` for which an `(M, N, L, Z)`-ZCS over `Z_q` exists, by exhaustion.
///
/// When `q^(NL)` exceeds `max_candidates` only the first `max_candidates`
/// flocks are enumerated and the result is flagged non-exhaustive.
pub fn exhaustive_max_set_size(spec: &SearchSpec) -> Result<SearchResult> {
    if spec.q < 2 {
        return Err(Error::InvalidModulus { q: spec.q, min: 2 });
    }
    let bound = bounds(spec.n, spec.l, spec.z)?.theorem1;
    let total = spec.space_size();
    let limit = total.map_or(spec.max_candidates, |t| t.min(spec.max_candidates));
    let proven_exhaustive = total.is_some_and(|t| t <= spec.max_candidates);

    let admissible: Vec<(u64, Flock)> = (0..limit)
        .map(|i| (i, decode_flock(i, spec)))
        .filter(|(_, f)| auto_zcz(f, spec.z))
        .collect();
    if admissible.len() > MAX_GRAPH_VERTICES {
        return Err(Error::SearchGraphTooLarge(admissible.len()));
    }

    // vertex positions follow a seeded shuffle of the canonical order
    let mut order: Vec<usize> = (0..admissible.len()).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(spec.seed));
    let v = order.len();
    let words = v.div_ceil(64).max(1);
    let mut adj = vec![vec![0u64; words]; v];
    for i in 0..v {
        for j in i + 1..v {
            if cross_zcz(&admissible[order[i]].1, &admissible[order[j]].1, spec.z) {
                adj[i][j / 64] |= 1 << (j % 64);
                adj[j][i / 64] |= 1 << (i % 64);
            }
        }
    }
    let graph = Graph { words, adj };
    let mut all = vec![0u64; words];
    for i in 0..v {
        all[i / 64] |= 1 << (i % 64);
    }
    let mut best = Vec::new();
    graph.expand(&mut Vec::new(), all, &mut best);

    let mut members: Vec<usize> = best.into_iter().map(|pos| order[pos]).collect();
    members.sort_unstable();
    let witness = if members.is_empty() {
        None
    } else {
        let flocks = members.iter().map(|&i| admissible[i].1.clone()).collect();
        Some(ZcsFamily::new(flocks, Some(spec.z))?)
    };

    Ok(SearchResult {
        best_m: members.len(),
        witness,
        bound,
        proven_exhaustive,
        candidates_examined: limit,
        admissible_flocks: admissible.len(),
    })
}

/// `Σ_{l≠α} c_l d_l^*` for orthogonal `c`, `d`.
pub fn excluded_sum(c: &QarySequence, d: &QarySequence, alpha: usize) -> Result<CycloValue> {
    let full = accf(c, d, 0)?;
    if !full.is_zero() {
        return Err(Error::NotOrthogonal);
    }
    if alpha >= c.len() {
        return Err(Error::PositionOutOfRange {
            alpha,
            len: c.len(),
        });
    }
    let q = c.q();
    let term = (c.exponents()[alpha] + q - d.exponents()[alpha]) % q;
    Ok(full.sub(&CycloValue::monomial(q, term, 1)))
}

/// Whether `|Σ_{l≠α} c_l d_l^*|² = 1`, decided exactly.
pub fn lemma2_check(c: &QarySequence, d: &QarySequence, alpha: usize) -> Result<bool> {
    Ok(excluded_sum(c, d, alpha)?.norm_sqr().is_rational_integer(1))
}

/// Ramps `(a·i mod q)` and `(a'·i mod q)`, which are orthogonal when `L | q`
/// and `a − a'` is a nonzero multiple of `q/L` modulo `q`.
pub fn ramp_pair(q: u32, l: usize, a: u32, a2: u32) -> Result<(QarySequence, QarySequence)> {
    if q < 1 {
        return Err(Error::InvalidModulus { q, min: 1 });
    }
    if l == 0 || !(q as usize).is_multiple_of(l) {
        return Err(Error::LengthDoesNotDivide { l, q });
    }
    let step = q / l as u32;
    let diff = (a as i64 - a2 as i64).rem_euclid(q as i64) as u32;
    if diff == 0 || !diff.is_multiple_of(step) {
        return Err(Error::RampNotOrthogonal);
    }
    let ramp = |s: u32| QarySequence::from_residues(q, (0..l as i64).map(|i| s as i64 * i));
    Ok((ramp(a)?, ramp(a2)?))
}

/// A seeded orthogonal ramp pair of length `L` over `Z_q`.
pub fn random_orthogonal_pair(q: u32, l: usize, seed: u64) -> Result<(QarySequence, QarySequence)> {
    if l == 0 || q == 0 || !(q as usize).is_multiple_of(l) {
        return Err(Error::LengthDoesNotDivide { l, q });
    }
    if l < 2 {
        return Err(Error::RampNotOrthogonal);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let step = q / l as u32;
    let a = rng.random_range(0..q);
    let j = rng.random_range(1..l as u32);
    ramp_pair(q, l, a, (a + j * step) % q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(q: u32, e: &[u32]) -> QarySequence {
        QarySequence::new(q, e.to_vec()).unwrap()
    }

    #[test]
    fn lemma2_examples() {
        assert!(lemma2_check(&seq(6, &[0, 0]), &seq(6, &[0, 3]), 0).unwrap());
        assert!(lemma2_check(&seq(4, &[0, 0, 0, 0]), &seq(4, &[0, 1, 2, 3]), 2).unwrap());
        assert_eq!(
            lemma2_check(&seq(2, &[0, 0]), &seq(2, &[0, 0]), 0),
            Err(Error::NotOrthogonal)
        );
        assert!(matches!(
            lemma2_check(&seq(6, &[0, 0]), &seq(6, &[0, 3]), 2),
            Err(Error::PositionOutOfRange { .. })
        ));
    }

    #[test]
    fn ramps() {
        let (c, d) = ramp_pair(4, 4, 0, 1).unwrap();
        assert_eq!(c.exponents(), &[0, 0, 0, 0]);
        assert_eq!(d.exponents(), &[0, 1, 2, 3]);
        assert!(accf(&c, &d, 0).unwrap().is_zero());

        let (c, d) = random_orthogonal_pair(6, 2, 7).unwrap();
        let diff = (c.exponents()[1] + 6 - d.exponents()[1]) % 6;
        assert_eq!(diff, 3);
        assert!(accf(&c, &d, 0).unwrap().is_zero());

        assert_eq!(
            random_orthogonal_pair(4, 3, 0),
            Err(Error::LengthDoesNotDivide { l: 3, q: 4 })
        );
        assert_eq!(ramp_pair(4, 2, 1, 1), Err(Error::RampNotOrthogonal));
        assert_eq!(ramp_pair(4, 2, 1, 2), Err(Error::RampNotOrthogonal));
    }

    #[test]
    fn tiny_searches() {
        let r = exhaustive_max_set_size(&SearchSpec::new(2, 1, 2, 1)).unwrap();
        assert_eq!((r.best_m, r.bound, r.proven_exhaustive), (2, 2, true));
        assert_eq!(r.candidates_examined, 4);

        let r = exhaustive_max_set_size(&SearchSpec::new(2, 2, 2, 2)).unwrap();
        assert_eq!((r.best_m, r.bound), (2, 2));
        assert_eq!(r.witness.unwrap().set_size(), 2);
    }

    #[test]
    fn cap_marks_partial() {
        let spec = SearchSpec {
            max_candidates: 10,
            ..SearchSpec::new(2, 2, 3, 2)
        };
        assert!(!spec.within_cap());
        let r = exhaustive_max_set_size(&spec).unwrap();
        assert!(!r.proven_exhaustive);
        assert_eq!(r.candidates_examined, 10);
    }

    #[test]
    fn seed_only_changes_tie_breaking() {
        let a = exhaustive_max_set_size(&SearchSpec { seed: 1, ..SearchSpec::new(2, 2, 3, 2) }).unwrap();
        let b = exhaustive_max_set_size(&SearchSpec { seed: 1, ..SearchSpec::new(2, 2, 3, 2) }).unwrap();
        let c = exhaustive_max_set_size(&SearchSpec { seed: 99, ..SearchSpec::new(2, 2, 3, 2) }).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.best_m, c.best_m);
    }
}
