#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use zcs_core::{ConstructionParams, ZcsFamily};

/// The optimal (6, 4, 6, 4)-ZCS as published, exponents of ξ = exp(2πi/6).
pub const TABLE_ONE: [[&str; 4]; 6] = [
    ["000003", "030300", "003303", "033000"],
    ["012342", "042045", "015042", "045345"],
    ["024021", "054324", "021321", "051024"],
    ["030300", "000003", "033000", "003303"],
    ["042045", "012342", "045345", "015042"],
    ["054324", "024021", "051024", "021321"],
];

pub fn table_one_exponents() -> Vec<Vec<Vec<u32>>> {
    TABLE_ONE
        .iter()
        .map(|set| {
            set.iter()
                .map(|row| row.chars().map(|c| c.to_digit(10).unwrap()).collect())
                .collect()
        })
        .collect()
}

pub fn table_one_family() -> ZcsFamily {
    ZcsFamily::from_exponents(6, table_one_exponents(), Some(4)).unwrap()
}

/// Random ordered partition of {1..m} into k blocks whose first elements are {1..k}.
pub fn random_blocks<R: Rng>(m: usize, k: usize, rng: &mut R) -> Vec<Vec<usize>> {
    let mut firsts: Vec<usize> = (1..=k).collect();
    firsts.shuffle(rng);
    let mut blocks: Vec<Vec<usize>> = firsts.into_iter().map(|f| vec![f]).collect();
    let mut rest: Vec<usize> = (k + 1..=m).collect();
    rest.shuffle(rng);
    for v in rest {
        let g = rng.random_range(0..k);
        blocks[g].push(v);
    }
    blocks
}

pub fn random_params<R: Rng>(q: u32, b: u32, m: usize, n: usize, k: usize, rng: &mut R) -> ConstructionParams {
    let blocks = random_blocks(m, k, rng);
    let beta = (0..=m).map(|_| rng.random_range(0..q)).collect();
    ConstructionParams::new(q, b, m, n, blocks, beta).unwrap()
}

/// Every (q, b, m, n, k) with q ∈ {2,4,6,8}, b | q, b^n ≤ 2^m ≤ 64, 2^k ≤ b^n.
pub fn parameter_grid(max_m: usize) -> Vec<(u32, u32, usize, usize, usize)> {
    let mut out = Vec::new();
    for q in [2u32, 4, 6, 8] {
        for b in (2..=q).filter(|b| q % b == 0) {
            for m in 1..=max_m {
                let mut n = 1;
                while (b as usize).pow(n as u32) <= 1 << m {
                    let len = (b as usize).pow(n as u32);
                    for k in (1..=m).filter(|&k| 1usize << k <= len) {
                        out.push((q, b, m, n, k));
                    }
                    n += 1;
                }
            }
        }
    }
    out
}
