//! Shared generators and brute-force oracles for the integration tests.
#![allow(dead_code)]

use num_complex::Complex64;
use qgame::prelude::*;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_game(rng: &mut impl Rng) -> GamePayoffs {
    let mut table = || std::array::from_fn(|_| rng.gen_range(-10.0..10.0));
    let alice = table();
    let bob = table();
    GamePayoffs::new(alice, bob).unwrap()
}

fn random_unit<const N: usize>(rng: &mut impl Rng) -> [Complex64; N] {
    loop {
        let v: [Complex64; N] = std::array::from_fn(|_| {
            Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        });
        let n = v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if n > 1e-2 {
            return v.map(|c| c / n);
        }
    }
}

pub fn random_single(rng: &mut impl Rng) -> SingleStrategy {
    let [o, t] = random_unit::<2>(rng);
    SingleStrategy::new(o, t).unwrap()
}

pub fn random_state(rng: &mut impl Rng) -> StrategyState {
    StrategyState::new(random_unit::<4>(rng)).unwrap()
}

pub fn random_factorizable(rng: &mut impl Rng) -> StrategyState {
    tensor_product(&random_single(rng), &random_single(rng))
}

/// A random state whose reshaped determinant is clearly non-zero.
pub fn random_entangled(rng: &mut impl Rng) -> StrategyState {
    loop {
        let s = random_state(rng);
        if s.entanglement_determinant() > 0.05 {
            return s;
        }
    }
}

/// A random mixed density matrix: convex mixture of four random pure states.
pub fn random_density(rng: &mut impl Rng) -> DensityMatrix {
    let mut rho = DensityMatrix::from_state(&random_state(rng));
    let mut weight = 1.0;
    for _ in 0..3 {
        let next = DensityMatrix::from_state(&random_state(rng));
        weight += 1.0;
        rho = rho.mix(&next, (weight - 1.0) / weight).unwrap();
    }
    rho
}

/// Grid points that are equilibria of the game restricted to the
/// `n × n` grid, found by checking every unilateral grid deviation.
pub fn scan_equilibria(
    game: &GamePayoffs,
    rho: &DensityMatrix,
    n: usize,
    tol: f64,
) -> Vec<(f64, f64)> {
    let axis: Vec<f64> = (0..n).map(|k| k as f64 / (n - 1) as f64).collect();
    let table: Vec<Vec<PayoffPair>> = axis
        .iter()
        .map(|&p| {
            axis.iter()
                .map(|&q| expected_payoffs(game, rho, TacticsProfile::new(p, q).unwrap()).unwrap())
                .collect()
        })
        .collect();
    let mut found = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let here = table[i][j];
            let alice_best = (0..n)
                .map(|k| table[k][j].alice)
                .fold(f64::NEG_INFINITY, f64::max);
            let bob_best = (0..n)
                .map(|k| table[i][k].bob)
                .fold(f64::NEG_INFINITY, f64::max);
            if alice_best <= here.alice + tol && bob_best <= here.bob + tol {
                found.push((axis[i], axis[j]));
            }
        }
    }
    found
}

pub fn entangled_rho() -> DensityMatrix {
    DensityMatrix::from_state(&StrategyState::entangled_bos())
}

pub fn oo_rho() -> DensityMatrix {
    DensityMatrix::from_state(&StrategyState::basis(0))
}

pub fn bos(alpha: f64, beta: f64, gamma: f64) -> GamePayoffs {
    GamePayoffs::battle_of_sexes(BoSParameters::new(alpha, beta, gamma).unwrap())
}
