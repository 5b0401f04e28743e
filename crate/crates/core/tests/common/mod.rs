#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

use infcm::complex::SimplicialComplex;
use infcm::monomial::VarIndex;

pub fn config(cases: u32, seed: u64) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(seed), failure_persistence: None, ..Config::default() }
}

pub fn line(n: u32) -> VarIndex {
    VarIndex::Line(n)
}

pub fn vertices(n: usize) -> Vec<VarIndex> {
    (1..=n as u32).map(line).collect()
}

pub fn decode(n: usize, mask: u32) -> Vec<VarIndex> {
    (0..n).filter(|i| mask >> i & 1 == 1).map(|i| line(i as u32 + 1)).collect()
}

pub fn complex(n: usize, masks: &[u32]) -> SimplicialComplex {
    let facets: Vec<Vec<VarIndex>> = masks.iter().map(|&m| decode(n, m)).collect();
    SimplicialComplex::from_facets(vertices(n), &facets).unwrap()
}

/// Arbitrary complexes on `1..=max_n` ambient vertices given by up to five
/// generating faces.
pub fn any_complex(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_n)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(0u32..(1 << n), 1..6)))
        .prop_map(|(n, masks)| complex(n, &masks))
}

/// Pure complexes: every generating face has the same size `k`.
pub fn pure_complex(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_n)
        .prop_flat_map(|n| (Just(n), 1..=n))
        .prop_flat_map(|(n, k)| {
            let all: Vec<u32> = (0..(1u32 << n)).filter(|m| m.count_ones() as usize == k).collect();
            (Just(n), prop::collection::vec(prop::sample::select(all), 1..5))
        })
        .prop_map(|(n, masks)| complex(n, &masks))
}
