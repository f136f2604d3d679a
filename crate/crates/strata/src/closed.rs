//! Configurations of homologous closed saddle connections: cyclic sequences
//! of surgery pieces (figure-eight or pair-of-holes) with direct or cylinder
//! gluings between consecutive pieces.
//!
//! `glue[i]` sits between piece `i-1` and piece `i` (cyclically). Walking
//! the cycle, maximal chains delimited by cylinders and by pair-of-holes
//! sides each produce one newborn zero: a chain entered from a cylinder
//! contributes nothing at that end, a chain entered from the `b''` side of
//! a hole piece contributes `b'' + 1`, every figure-eight piece passed
//! contributes `a + 2`, and the chain ends either at a cylinder (nothing)
//! or at the `b'` side of a hole piece (`b' + 1`).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::stratum::{Partition, Stratum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Gluing {
    Direct,
    Cylinder,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PieceKind {
    /// Figure-eight surgery at one zero, split `a' + a''`.
    FigureEight { a_prime: u32, a_dprime: u32 },
    /// Pair-of-holes surgery at two points of orders `b'` (left, toward the
    /// previous piece) and `b''` (right, toward the next piece).
    PairOfHoles { b_prime: u32, b_dprime: u32 },
}

impl PieceKind {
    fn swapped(&self) -> PieceKind {
        match *self {
            PieceKind::FigureEight { a_prime, a_dprime } => PieceKind::FigureEight {
                a_prime: a_dprime,
                a_dprime: a_prime,
            },
            PieceKind::PairOfHoles { b_prime, b_dprime } => PieceKind::PairOfHoles {
                b_prime: b_dprime,
                b_dprime: b_prime,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ClosedPiece {
    pub kind: PieceKind,
    /// Unchanged zeros carried by this piece.
    pub rest: Partition,
}

impl ClosedPiece {
    pub fn figure_eight(a_prime: u32, a_dprime: u32, rest: Partition) -> ClosedPiece {
        ClosedPiece {
            kind: PieceKind::FigureEight { a_prime, a_dprime },
            rest,
        }
    }

    pub fn pair_of_holes(b_prime: u32, b_dprime: u32, rest: Partition) -> ClosedPiece {
        ClosedPiece {
            kind: PieceKind::PairOfHoles { b_prime, b_dprime },
            rest,
        }
    }

    /// Sum of the distinguished orders.
    pub fn surgery_total(&self) -> u32 {
        match self.kind {
            PieceKind::FigureEight { a_prime, a_dprime } => a_prime + a_dprime,
            PieceKind::PairOfHoles { b_prime, b_dprime } => b_prime + b_dprime,
        }
    }

    /// The piece stratum with every distinguished point included as an
    /// entry; orders 0 become marked points. A torus figure-eight piece is
    /// `H(0)`, a torus pair-of-holes piece is `H(0,0)`.
    pub fn stratum(&self) -> Stratum {
        let alpha = match self.kind {
            PieceKind::FigureEight { a_prime, a_dprime } => {
                self.rest.with_entry(a_prime + a_dprime)
            }
            PieceKind::PairOfHoles { b_prime, b_dprime } => {
                self.rest.with_entry(b_prime).with_entry(b_dprime)
            }
        };
        Stratum::new(alpha)
    }

    fn swapped(&self) -> ClosedPiece {
        ClosedPiece {
            kind: self.kind.swapped(),
            rest: self.rest.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ClosedConfig {
    pub pieces: Vec<ClosedPiece>,
    /// `glue[i]` binds piece `i-1` to piece `i` (cyclic).
    pub glue: Vec<Gluing>,
}

/// Chain type of a newborn zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NewbornType {
    /// cylinder .. figure-eights .. cylinder
    I,
    /// cylinder .. figure-eights .. hole side (either orientation)
    II,
    /// hole side .. figure-eights .. hole side
    III,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NewbornZero {
    pub order: u32,
    pub type_tag: NewbornType,
    /// Boundary indices traversed by the chain, in cyclic order.
    pub chain: Vec<usize>,
}

impl ClosedConfig {
    pub fn p(&self) -> usize {
        self.pieces.len()
    }

    /// Number of cylinders.
    pub fn q(&self) -> usize {
        self.glue.iter().filter(|&&g| g == Gluing::Cylinder).count()
    }

    /// Total number of homologous saddle connections: each direct boundary
    /// carries one, each cylinder two.
    pub fn multiplicity(&self) -> usize {
        self.p() + self.q()
    }

    pub fn has_hole_piece(&self) -> bool {
        self.pieces
            .iter()
            .any(|pc| matches!(pc.kind, PieceKind::PairOfHoles { .. }))
    }

    fn rotated(&self, k: usize) -> ClosedConfig {
        let p = self.pieces.len();
        ClosedConfig {
            pieces: (0..p).map(|i| self.pieces[(i + k) % p].clone()).collect(),
            glue: (0..p).map(|i| self.glue[(i + k) % p]).collect(),
        }
    }

    /// Reversal of the cyclic order with all primed pairs swapped and the
    /// gluing flags reattached to the reversed boundaries.
    pub fn reversed(&self) -> ClosedConfig {
        let p = self.pieces.len();
        ClosedConfig {
            pieces: (0..p).map(|j| self.pieces[p - 1 - j].swapped()).collect(),
            glue: (0..p).map(|j| self.glue[(p - j) % p]).collect(),
        }
    }

    pub fn orbit(&self) -> Vec<ClosedConfig> {
        let p = self.pieces.len();
        let mut out = Vec::with_capacity(2 * p);
        for k in 0..p {
            out.push(self.rotated(k));
        }
        let rev = self.reversed();
        for k in 0..p {
            out.push(rev.rotated(k));
        }
        out
    }
}

/// Walks the cycle and returns the newborn zeros, one per maximal chain.
/// A chain starts either just after a cylinder (entering the piece that
/// follows the cylinder) or at the `b''` side of a hole piece, and ends at
/// the first cylinder boundary or `b'` hole side it meets. There are
/// exactly q + (number of hole pieces) chains.
pub fn newborn_zeros(cfg: &ClosedConfig) -> Result<Vec<NewbornZero>> {
    let p = cfg.pieces.len();
    if p == 0 || cfg.glue.len() != p {
        return Err(Error::MalformedCycle(format!(
            "{} pieces with {} gluings",
            p,
            cfg.glue.len()
        )));
    }
    let is_cyl = |i: usize| cfg.glue[i % p] == Gluing::Cylinder;

    // (entry piece, initial order, started at a hole side)
    let mut starts: Vec<(usize, u32, bool)> = Vec::new();
    for i in 0..p {
        if is_cyl(i) {
            starts.push((i, 0, false));
        }
    }
    for (k, piece) in cfg.pieces.iter().enumerate() {
        if let PieceKind::PairOfHoles { b_dprime, .. } = piece.kind {
            starts.push(((k + 1) % p, b_dprime + 1, true));
        }
    }
    if starts.is_empty() {
        return Err(Error::MalformedCycle(
            "all gluings direct and no pair-of-holes piece".to_string(),
        ));
    }

    let mut zeros = Vec::new();
    for (entry, initial, from_hole) in starts {
        let mut order = initial;
        let mut chain = vec![entry];
        let mut j = entry;
        let mut steps = 0usize;
        // A hole-side start whose very next boundary is a cylinder ends at
        // once without entering any piece.
        let ends_at_hole = if from_hole && is_cyl(entry) {
            false
        } else {
            loop {
                match cfg.pieces[j % p].kind {
                    PieceKind::FigureEight { a_prime, a_dprime } => {
                        order += a_prime + a_dprime + 2;
                        j += 1;
                        chain.push(j % p);
                        if is_cyl(j) {
                            break false;
                        }
                        steps += 1;
                        if steps > p {
                            return Err(Error::MalformedCycle(
                                "chain never terminates".to_string(),
                            ));
                        }
                    }
                    PieceKind::PairOfHoles { b_prime, .. } => {
                        order += b_prime + 1;
                        break true;
                    }
                }
            }
        };
        let type_tag = match (from_hole, ends_at_hole) {
            (false, false) => NewbornType::I,
            (true, true) => NewbornType::III,
            _ => NewbornType::II,
        };
        zeros.push(NewbornZero {
            order,
            type_tag,
            chain,
        });
    }
    Ok(zeros)
}

/// Checks the nondegeneracy alternative (at least one pair of holes or at
/// least one cylinder), piece-stratum validity, and the zero bookkeeping
/// against the ambient stratum.
pub fn validate_closed(cfg: &ClosedConfig, ambient: &Stratum) -> Vec<String> {
    let mut violations = Vec::new();
    if cfg.pieces.is_empty() {
        violations.push("configuration has no pieces".to_string());
        return violations;
    }
    if cfg.glue.len() != cfg.pieces.len() {
        violations.push(format!(
            "{} gluing flags for {} pieces",
            cfg.glue.len(),
            cfg.pieces.len()
        ));
        return violations;
    }
    if !cfg.has_hole_piece() && cfg.q() == 0 {
        violations.push(
            "needs at least one pair-of-holes piece or at least one cylinder".to_string(),
        );
    }
    for (i, piece) in cfg.pieces.iter().enumerate() {
        if piece.rest.multiplicity(0) > 0 {
            violations.push(format!("piece {i} carries a marked point in its rest"));
        }
        if (piece.rest.total() + piece.surgery_total()) % 2 != 0 {
            violations.push(format!(
                "piece {i} has odd total order {}; no such surface exists",
                piece.rest.total() + piece.surgery_total()
            ));
        }
    }
    if !violations.is_empty() {
        return violations;
    }
    let newborn = match newborn_zeros(cfg) {
        Ok(z) => z,
        Err(e) => {
            violations.push(e.to_string());
            return violations;
        }
    };
    let mut collected: Vec<u32> = newborn.iter().map(|z| z.order).collect();
    for piece in &cfg.pieces {
        collected.extend_from_slice(piece.rest.entries());
    }
    collected.sort_unstable_by(|a, b| b.cmp(a));
    let ambient_pos = ambient.alpha().strip_marked_points();
    if collected != ambient_pos.entries() {
        violations.push(format!(
            "newborn + rests give ({}) instead of ({})",
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

/// Cyclic-stabilizer order and reversal symmetry of the decorated cycle.
pub fn symmetry_closed(cfg: &ClosedConfig) -> crate::distinct::SymmetryInfo {
    let p = cfg.pieces.len();
    let rot_order = (1..=p)
        .filter(|&k| p % k == 0 && cfg.rotated(k) == *cfg)
        .min()
        .map(|k| (p / k) as u32)
        .unwrap_or(1);
    let rev = cfg.reversed();
    let gamma_order = if (0..p).any(|k| rev.rotated(k) == *cfg) {
        2
    } else {
        1
    };
    crate::distinct::SymmetryInfo {
        gamma_order,
        rot_order,
    }
}

/// Lexicographically least element of the orbit. Idempotent.
pub fn canonicalize_closed(cfg: &ClosedConfig) -> ClosedConfig {
    cfg.orbit().into_iter().min().unwrap()
}

/// `d_i` values: real dimension of each piece stratum with all
/// distinguished points included. Verifies `2q + 2 + sum d_i = dim_R` of
/// the ambient stratum.
pub fn d_values(cfg: &ClosedConfig, ambient: &Stratum) -> Result<Vec<u32>> {
    let dims: Vec<u32> = cfg.pieces.iter().map(|pc| pc.stratum().dim_real()).collect();
    let total = 2 * cfg.q() as u32 + 2 + dims.iter().sum::<u32>();
    if total != ambient.dim_real() {
        return Err(Error::DimensionMismatch(format!(
            "2q + 2 + sum(d_i) = {total} but dim_R {ambient} = {}",
            ambient.dim_real()
        )));
    }
    Ok(dims)
}

/// All valid closed configurations for the stratum (no component filtering),
/// one canonical representative per orbit, in lexicographic order.
pub fn enumerate_closed_raw(ambient: &Stratum) -> Vec<ClosedConfig> {
    let alpha = ambient.alpha().strip_marked_points();
    let g = ambient.strip_marked_points().genus();
    let mut out = std::collections::BTreeSet::new();
    if g < 2 {
        // On the torus every closed geodesic is regular; there is no
        // configuration of closed saddle connections through a zero.
        return Vec::new();
    }
    let max_entry = alpha.entries().first().copied().unwrap_or(0);
    let p_max = (g - 1) as usize;
    for p in 1..=p_max {
        let budget = 2 * (g - 1) - 2 * p as u32; // max total surgery order
        let mut skeleton: Vec<PieceKind> = Vec::with_capacity(p);
        enumerate_skeletons(&alpha, max_entry, budget, p, &mut skeleton, &mut out);
    }
    out.into_iter().collect()
}

fn enumerate_skeletons(
    alpha: &Partition,
    max_entry: u32,
    budget: u32,
    p: usize,
    skeleton: &mut Vec<PieceKind>,
    out: &mut std::collections::BTreeSet<ClosedConfig>,
) {
    if skeleton.len() == p {
        complete_skeleton(alpha, p, skeleton, out);
        return;
    }
    let used: u32 = skeleton.iter().map(surgery_sum).sum();
    let left = budget - used;
    // figure-eight pieces: a <= max_entry - 2 so that some chain can absorb it
    for a in 0..=left.min(max_entry.saturating_sub(2)) {
        for a1 in 0..=a {
            skeleton.push(PieceKind::FigureEight {
                a_prime: a1,
                a_dprime: a - a1,
            });
            enumerate_skeletons(alpha, max_entry, budget, p, skeleton, out);
            skeleton.pop();
        }
    }
    // pair-of-holes pieces: each side b + 1 <= max_entry
    let b_cap = max_entry.saturating_sub(1);
    for b1 in 0..=b_cap.min(left) {
        for b2 in 0..=b_cap.min(left - b1) {
            skeleton.push(PieceKind::PairOfHoles {
                b_prime: b1,
                b_dprime: b2,
            });
            enumerate_skeletons(alpha, max_entry, budget, p, skeleton, out);
            skeleton.pop();
        }
    }
}

fn surgery_sum(kind: &PieceKind) -> u32 {
    match *kind {
        PieceKind::FigureEight { a_prime, a_dprime } => a_prime + a_dprime,
        PieceKind::PairOfHoles { b_prime, b_dprime } => b_prime + b_dprime,
    }
}

fn complete_skeleton(
    alpha: &Partition,
    p: usize,
    skeleton: &[PieceKind],
    out: &mut std::collections::BTreeSet<ClosedConfig>,
) {
    let has_hole = skeleton
        .iter()
        .any(|k| matches!(k, PieceKind::PairOfHoles { .. }));
    for flags in 0..(1u32 << p) {
        let glue: Vec<Gluing> = (0..p)
            .map(|i| {
                if flags & (1 << i) != 0 {
                    Gluing::Cylinder
                } else {
                    Gluing::Direct
                }
            })
            .collect();
        if !has_hole && glue.iter().all(|&g| g == Gluing::Direct) {
            continue;
        }
        let probe = ClosedConfig {
            pieces: skeleton
                .iter()
                .map(|k| ClosedPiece {
                    kind: k.clone(),
                    rest: Partition::new(Vec::new()),
                })
                .collect(),
            glue: glue.clone(),
        };
        let newborn = match newborn_zeros(&probe) {
            Ok(z) => z,
            Err(_) => continue,
        };
        let newborn_part = Partition::new(newborn.iter().map(|z| z.order).collect::<Vec<_>>());
        let unchanged = match alpha.checked_sub(&newborn_part) {
            Some(u) => u,
            None => continue,
        };
        for rests in crate::distinct::distributions(&unchanged, p) {
            let pieces: Vec<ClosedPiece> = skeleton
                .iter()
                .zip(&rests)
                .map(|(k, rest)| ClosedPiece {
                    kind: k.clone(),
                    rest: rest.clone(),
                })
                .collect();
            if pieces
                .iter()
                .any(|pc| (pc.rest.total() + pc.surgery_total()) % 2 != 0)
            {
                continue;
            }
            let cfg = ClosedConfig {
                pieces,
                glue: glue.clone(),
            };
            out.insert(canonicalize_closed(&cfg));
        }
    }
}
