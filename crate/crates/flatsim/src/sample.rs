//! Random translation surfaces via the zippered-rectangle suspension over
//! an irreducible interval-exchange permutation: interval lengths are
//! uniform on the simplex, suspension heights uniform among the admissible
//! ones, and the result is normalized to unit area.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::surface::{build_from_polygons, PolygonSpec, TranslationSurface};

/// A permutation of `{0, .., n-1}` with no invariant prefix
/// (`pi({0..k}) != {0..k}` for `k < n-1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreduciblePermutation {
    map: Vec<usize>,
}

impl IrreduciblePermutation {
    pub fn new(map: Vec<usize>) -> Result<IrreduciblePermutation> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &v in &map {
            if v >= n || seen[v] {
                return Err(Error::Reducible(map.clone()));
            }
            seen[v] = true;
        }
        let mut max_seen = 0;
        for k in 0..n.saturating_sub(1) {
            max_seen = max_seen.max(map[k]);
            if max_seen == k {
                return Err(Error::Reducible(map.clone()));
            }
        }
        Ok(IrreduciblePermutation { map })
    }

    /// The reversal `i -> n-1-i`, irreducible for every `n >= 2`.
    pub fn symmetric(n: usize) -> IrreduciblePermutation {
        IrreduciblePermutation::new((0..n).rev().collect()).expect("reversal is irreducible")
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }
}

/// Builds the suspension polygon over `pi` with interval lengths `lambda`
/// and height data `tau` (both length n). The suspension inequalities must
/// hold: partial sums of `tau` along the top are positive and along the
/// bottom negative.
fn suspension_surface(
    pi: &IrreduciblePermutation,
    lambda: &[f64],
    tau: &[f64],
) -> Result<TranslationSurface> {
    let n = pi.len();
    let mut inv = vec![0usize; n];
    for i in 0..n {
        inv[pi.apply(i)] = i;
    }
    // counterclockwise polygon boundary: bottom path left to right (below
    // the axis), then the top path right to left (above it)
    let mut vertices: Vec<[f64; 2]> = Vec::with_capacity(2 * n);
    vertices.push([0.0, 0.0]);
    let mut q = [0.0, 0.0];
    for k in 0..n - 1 {
        let j = inv[k];
        q = [q[0] + lambda[j], q[1] + tau[j]];
        vertices.push(q);
    }
    let total = [lambda.iter().sum::<f64>(), tau.iter().sum::<f64>()];
    vertices.push(total);
    let mut p = [0.0, 0.0];
    let mut top = Vec::with_capacity(n - 1);
    for i in 0..n - 1 {
        p = [p[0] + lambda[i], p[1] + tau[i]];
        top.push(p);
    }
    for &v in top.iter().rev() {
        vertices.push(v);
    }
    // boundary sides 0..n-1 are the bottom positions left to right; side
    // 2n-1-j is top interval j traversed right to left
    let pairs: Vec<[usize; 2]> = (0..n).map(|j| [2 * n - 1 - j, pi.apply(j)]).collect();
    build_from_polygons(&[PolygonSpec { vertices, pairs }])
}

/// Suspension data validity: top partial sums positive, bottom negative.
fn admissible(pi: &IrreduciblePermutation, tau: &[f64]) -> bool {
    let n = pi.len();
    let mut sum = 0.0;
    for &t in tau.iter().take(n - 1) {
        sum += t;
        if sum <= 0.0 {
            return false;
        }
    }
    let mut inv = vec![0usize; n];
    for i in 0..n {
        inv[pi.apply(i)] = i;
    }
    let mut sum = 0.0;
    for k in 0..n - 1 {
        sum += tau[inv[k]];
        if sum >= 0.0 {
            return false;
        }
    }
    true
}

/// The canonical deterministic suspension: generic lengths and the height
/// data `tau_i = pi(i) - i`, admissible for every irreducible permutation.
pub fn canonical_suspension(pi: &IrreduciblePermutation) -> Result<TranslationSurface> {
    let n = pi.len();
    let lambda: Vec<f64> = (0..n).map(|i| 1.0 + ((i + 1) as f64).sqrt() / 10.0).collect();
    let tau: Vec<f64> = (0..n).map(|i| pi.apply(i) as f64 - i as f64).collect();
    suspension_surface(pi, &lambda, &tau)
}

/// The stratum of every suspension over `pi`: zero orders measured on the
/// canonical suspension (marked points included as order 0).
pub fn stratum_of_permutation(pi: &IrreduciblePermutation) -> Result<Vec<u32>> {
    Ok(canonical_suspension(pi)?.zero_orders())
}

/// A random unit-area surface in the stratum of `pi`; deterministic per
/// seed.
pub fn sample_surface(pi: &IrreduciblePermutation, seed: u64) -> Result<TranslationSurface> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = pi.len();
    const RETRIES: usize = 10_000;
    for _ in 0..RETRIES {
        // uniform on the simplex: normalized exponentials
        let mut lambda: Vec<f64> = (0..n)
            .map(|_| -(1.0 - rng.gen::<f64>()).ln())
            .collect();
        let total: f64 = lambda.iter().sum();
        for l in &mut lambda {
            *l /= total;
        }
        let tau: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        if !admissible(pi, &tau) {
            continue;
        }
        match suspension_surface(pi, &lambda, &tau) {
            Ok(mut s) => {
                s.normalize_area();
                return Ok(s);
            }
            Err(_) => continue,
        }
    }
    Err(Error::SamplingFailure(RETRIES))
}
