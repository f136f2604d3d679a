//! Configurations of p homologous saddle connections joining two distinct
//! zeros: validation, canonical forms under the cyclic and reversal
//! symmetries, and enumeration.
//!
//! A configuration is a cyclic sequence of pieces. Piece i records the split
//! `a'_i + a''_i` of its distinguished zero (the angle data) together with
//! the multiset of unchanged zeros it carries. The piece stratum is
//! `H(rest + {a'_i + a''_i})`, with a marked point when the split sums to 0
//! and exactly `H(0)` for a torus piece.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::stratum::{Partition, Stratum};

/// One piece of a distinct-zeros configuration.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DistinctPiece {
    pub a_prime: u32,
    pub a_dprime: u32,
    /// Unchanged zeros carried by this piece (no marked points).
    pub rest: Partition,
}

impl DistinctPiece {
    pub fn new(a_prime: u32, a_dprime: u32, rest: Partition) -> DistinctPiece {
        DistinctPiece {
            a_prime,
            a_dprime,
            rest,
        }
    }

    /// Order of the distinguished zero after collapsing.
    pub fn a(&self) -> u32 {
        self.a_prime + self.a_dprime
    }

    /// The stratum of the piece surface: rest plus the distinguished zero,
    /// stored as a marked point when its order is 0.
    pub fn stratum(&self) -> Stratum {
        Stratum::new(self.rest.with_entry(self.a()))
    }

    fn swapped(&self) -> DistinctPiece {
        DistinctPiece {
            a_prime: self.a_dprime,
            a_dprime: self.a_prime,
            rest: self.rest.clone(),
        }
    }
}

/// A cyclically ordered collection of pieces joining a zero of order `m1`
/// to a zero of order `m2`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DistinctConfig {
    pub m1: u32,
    pub m2: u32,
    pub pieces: Vec<DistinctPiece>,
}

/// Symmetry data of a configuration: `rot_order` is the order of the cyclic
/// stabilizer (the stratum interchange), `gamma_order` is 2 exactly when the
/// reversed, prime-swapped cycle reproduces the configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryInfo {
    pub gamma_order: u32,
    pub rot_order: u32,
}

impl DistinctConfig {
    pub fn p(&self) -> usize {
        self.pieces.len()
    }

    fn rotated(&self, k: usize) -> Vec<DistinctPiece> {
        let p = self.pieces.len();
        (0..p).map(|i| self.pieces[(i + k) % p].clone()).collect()
    }

    /// The reversed cycle with all splits swapped; composing with rotations
    /// gives the full orbit of the configuration under the gamma -> -gamma
    /// symmetry. Reversal exchanges the roles of the two zeros.
    fn reversed(&self) -> DistinctConfig {
        let p = self.pieces.len();
        let pieces = (0..p).map(|j| self.pieces[p - 1 - j].swapped()).collect();
        DistinctConfig {
            m1: self.m2,
            m2: self.m1,
            pieces,
        }
    }

    /// All labeled cycles in the symmetry orbit.
    fn orbit(&self) -> Vec<DistinctConfig> {
        let p = self.pieces.len();
        let mut out = Vec::with_capacity(2 * p);
        for k in 0..p {
            out.push(DistinctConfig {
                m1: self.m1,
                m2: self.m2,
                pieces: self.rotated(k),
            });
        }
        let rev = self.reversed();
        for k in 0..p {
            out.push(DistinctConfig {
                m1: rev.m1,
                m2: rev.m2,
                pieces: rev.rotated(k),
            });
        }
        out
    }
}

/// Checks the admissibility conditions against an ambient stratum: the two
/// split sums, the multiset bookkeeping of unchanged zeros, the per-piece
/// parity condition, and validity of every piece stratum. Violations are
/// returned as data, not errors.
pub fn validate_distinct(cfg: &DistinctConfig, ambient: &Stratum) -> Vec<String> {
    let mut violations = Vec::new();
    let p = cfg.pieces.len() as u32;
    if p == 0 {
        violations.push("configuration has no pieces".to_string());
        return violations;
    }
    let sum_a1: u32 = cfg.pieces.iter().map(|q| q.a_prime).sum();
    let sum_a2: u32 = cfg.pieces.iter().map(|q| q.a_dprime).sum();
    if sum_a1 + p != cfg.m1 + 1 {
        violations.push(format!(
            "sum of a' is {sum_a1}, expected m1 + 1 - p = {}",
            cfg.m1 as i64 + 1 - p as i64
        ));
    }
    if sum_a2 + p != cfg.m2 + 1 {
        violations.push(format!(
            "sum of a'' is {sum_a2}, expected m2 + 1 - p = {}",
            cfg.m2 as i64 + 1 - p as i64
        ));
    }
    for (i, piece) in cfg.pieces.iter().enumerate() {
        if piece.rest.multiplicity(0) > 0 {
            violations.push(format!("piece {i} carries a marked point in its rest"));
        }
        if (piece.rest.total() + piece.a()) % 2 != 0 {
            violations.push(format!(
                "piece {i} has odd total order {}; no such surface exists",
                piece.rest.total() + piece.a()
            ));
        }
    }
    let mut collected = Vec::new();
    for piece in &cfg.pieces {
        collected.extend_from_slice(piece.rest.entries());
    }
    collected.push(cfg.m1);
    collected.push(cfg.m2);
    collected.sort_unstable_by(|a, b| b.cmp(a));
    let ambient_pos = ambient.alpha().strip_marked_points();
    if collected != ambient_pos.entries() {
        violations.push(format!(
            "rests + {{m1, m2}} give ({}) instead of ({})",
            collected
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(","),
            ambient_pos
        ));
    }
    violations
}

/// Cyclic-stabilizer order and gamma -> -gamma detection.
pub fn symmetry_distinct(cfg: &DistinctConfig) -> SymmetryInfo {
    let p = cfg.pieces.len();
    let rot_order = (1..=p)
        .filter(|&k| p % k == 0 && cfg.rotated(k) == cfg.pieces)
        .min()
        .map(|k| (p / k) as u32)
        .unwrap_or(1);
    let gamma_order = if cfg.m1 == cfg.m2 {
        let rev = cfg.reversed();
        let fixed = (0..p).any(|k| rev.rotated(k) == cfg.pieces);
        if fixed {
            2
        } else {
            1
        }
    } else {
        1
    };
    SymmetryInfo {
        gamma_order,
        rot_order,
    }
}

/// The lexicographically least element of the orbit under rotations and the
/// prime-swapped reversal. Idempotent.
pub fn canonicalize_distinct(cfg: &DistinctConfig) -> DistinctConfig {
    cfg.orbit().into_iter().min().unwrap()
}

/// All configurations joining a zero of order `m1` to a zero of order `m2`
/// in the ambient stratum, one canonical representative per orbit, in
/// lexicographic order.
pub fn enumerate_distinct(ambient: &Stratum, m1: u32, m2: u32) -> Result<Vec<DistinctConfig>> {
    let alpha = ambient.alpha().strip_marked_points();
    for m in [m1, m2] {
        if m == 0 || alpha.multiplicity(m) == 0 {
            return Err(Error::ZeroNotInStratum {
                order: m,
                stratum: ambient.to_string(),
            });
        }
    }
    if m1 == m2 && alpha.multiplicity(m1) < 2 {
        return Err(Error::ZeroNotInStratum {
            order: m1,
            stratum: format!("{ambient} (needs two zeros of order {m1})"),
        });
    }
    let unchanged = alpha
        .without_entry(m1)
        .and_then(|r| r.without_entry(m2))
        .expect("orders verified above");

    let mut out = std::collections::BTreeSet::new();
    let p_max = (m1.min(m2) + 1) as usize;
    for p in 1..=p_max {
        let sum_a1 = m1 + 1 - p as u32;
        let sum_a2 = m2 + 1 - p as u32;
        let splits1 = compositions(sum_a1, p);
        let splits2 = compositions(sum_a2, p);
        let rest_dists = distributions(&unchanged, p);
        for s1 in &splits1 {
            for s2 in &splits2 {
                'dist: for rests in &rest_dists {
                    let pieces: Vec<DistinctPiece> = (0..p)
                        .map(|i| DistinctPiece::new(s1[i], s2[i], rests[i].clone()))
                        .collect();
                    for piece in &pieces {
                        if (piece.rest.total() + piece.a()) % 2 != 0 {
                            continue 'dist;
                        }
                    }
                    let cfg = DistinctConfig {
                        m1,
                        m2,
                        pieces,
                    };
                    debug_assert!(validate_distinct(&cfg, ambient).is_empty());
                    out.insert(canonicalize_distinct(&cfg));
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// All ordered ways to write `total` as a sum of `parts` non-negative
/// integers.
pub(crate) fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; parts];
    fn rec(total: u32, idx: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if idx + 1 == current.len() {
            current[idx] = total;
            out.push(current.clone());
            return;
        }
        for v in 0..=total {
            current[idx] = v;
            rec(total - v, idx + 1, current, out);
        }
    }
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(total, 0, &mut current, &mut out);
    out
}

/// All ways to distribute the multiset `items` over `parts` slots.
pub(crate) fn distributions(items: &Partition, parts: usize) -> Vec<Vec<Partition>> {
    let values = items.distinct_values();
    let mut out: Vec<Vec<Vec<u32>>> = vec![vec![Vec::new(); parts]];
    for v in values {
        let count = items.multiplicity(v) as u32;
        let splits = compositions(count, parts);
        let mut next = Vec::with_capacity(out.len() * splits.len());
        for assignment in &out {
            for split in &splits {
                let mut a = assignment.clone();
                for (slot, &k) in split.iter().enumerate() {
                    for _ in 0..k {
                        a[slot].push(v);
                    }
                }
                next.push(a);
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|assignment| {
            assignment
                .into_iter()
                .map(Partition::new)
                .collect()
        })
        .collect()
}

/// Genus and dimension bookkeeping used in tests and in the constant
/// pipeline: the piece genera sum to the ambient genus, and the piece
/// dimensions plus 2 give the ambient dimension.
pub fn piece_dimension_sum(cfg: &DistinctConfig) -> (u32, u32) {
    let mut genus = 0;
    let mut dim = 0;
    for piece in &cfg.pieces {
        let s = piece.stratum();
        genus += s.genus();
        dim += s.dim_real();
    }
    (genus, dim)
}
