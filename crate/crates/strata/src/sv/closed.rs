//! Constants for configurations of homologous closed saddle connections.
//!
//! Connected strata use the plain volume ratio. Hyperelliptic components
//! admit only the symmetric shapes, with each pair-of-holes count
//! `(b'+1)(b''+1)` replaced by `b'+1` (the slit endpoints must be symmetric
//! under the involution) and hyperelliptic piece volumes. Spin components
//! split into three branches: figure-eights only (a parity congruence
//! involving the `a'` angles), holes with even orders (a plain parity
//! congruence), and holes with odd orders (total volumes, halved). On the
//! two exceptional stratum shapes the hyperelliptic contribution is
//! subtracted from the matching spin component.

use crate::closed::{
    canonicalize_closed, enumerate_closed_raw, newborn_zeros, symmetry_closed, validate_closed,
    ClosedConfig, PieceKind,
};
use crate::distinct::SymmetryInfo;
use crate::error::{Error, Result};
use crate::rat::{rat, Rat};
use crate::stratum::{delta, ComponentLabel, Parity, Partition, Stratum, StratumComponent};
use crate::sv::{dimension_factor, redistribution_factor, SVConstant};
use crate::volumes::VolumeTable;

/// The combinatorial factor `M` of a closed configuration: symmetry
/// quotient, zero redistribution with the corrections for surgery orders
/// already present in the stratum, and the surgery counts
/// `prod (a_i + 1) * prod (b'_k + 1)(b''_k + 1)`.
pub fn combinatorial_factor_closed(cfg: &ClosedConfig) -> Rat {
    combinatorial_factor(cfg, HoleCount::Full)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum HoleCount {
    /// `(b' + 1)(b'' + 1)` slit choices per pair-of-holes piece.
    Full,
    /// `b' + 1` choices: the hyperelliptic involution pins the second
    /// endpoint.
    LeftOnly,
}

fn combinatorial_factor(cfg: &ClosedConfig, holes: HoleCount) -> Rat {
    let sym = symmetry_closed(cfg);
    let piece_strata: Vec<Stratum> = cfg.pieces.iter().map(|pc| pc.stratum()).collect();
    let ambient = ambient_partition(cfg);
    // Redistribution corrections apply only to surgery orders that are also
    // zero orders of the ambient stratum.
    let in_ambient = |v: u32| v != 0 && ambient.multiplicity(v) > 0;
    let mut m = redistribution_factor(&ambient, &piece_strata);
    for (piece, stratum) in cfg.pieces.iter().zip(&piece_strata) {
        match piece.kind {
            PieceKind::FigureEight { a_prime, a_dprime } => {
                let a = a_prime + a_dprime;
                if in_ambient(a) {
                    m *= rat(stratum.alpha().multiplicity(a) as i64, 1);
                }
                m *= rat(a as i64 + 1, 1);
            }
            PieceKind::PairOfHoles { b_prime, b_dprime } => {
                if b_prime == b_dprime {
                    if in_ambient(b_prime) {
                        let o = stratum.alpha().multiplicity(b_prime) as i64;
                        m *= rat(o * (o - 1), 1);
                    }
                } else {
                    for b in [b_prime, b_dprime] {
                        if in_ambient(b) {
                            m *= rat(stratum.alpha().multiplicity(b) as i64, 1);
                        }
                    }
                }
                m *= match holes {
                    HoleCount::Full => rat((b_prime as i64 + 1) * (b_dprime as i64 + 1), 1),
                    HoleCount::LeftOnly => rat(b_prime as i64 + 1, 1),
                };
            }
        }
    }
    m / rat((sym.gamma_order * sym.rot_order) as i64, 1)
}

fn ambient_partition(cfg: &ClosedConfig) -> Partition {
    let mut entries: Vec<u32> = newborn_zeros(cfg)
        .expect("validated configuration")
        .iter()
        .map(|z| z.order)
        .collect();
    for piece in &cfg.pieces {
        entries.extend_from_slice(piece.rest.entries());
    }
    Partition::new(entries)
}

/// Shape according to the hyperelliptic decomposition lemmas, when the
/// ambient stratum is `(2g-2)` or `(g-1,g-1)`.
fn is_hyp_lemma_shape(cfg: &ClosedConfig, ambient: &Stratum) -> bool {
    let pos = ambient.alpha().strip_marked_points();
    let symmetric = |pc: &crate::closed::ClosedPiece| match pc.kind {
        PieceKind::FigureEight { a_prime, a_dprime } => a_prime == a_dprime,
        PieceKind::PairOfHoles { b_prime, b_dprime } => b_prime == b_dprime,
    };
    let all_symmetric_bare = cfg
        .pieces
        .iter()
        .all(|pc| symmetric(pc) && pc.rest.is_empty());
    if !all_symmetric_bare {
        return false;
    }
    let holes = cfg
        .pieces
        .iter()
        .filter(|pc| matches!(pc.kind, PieceKind::PairOfHoles { .. }))
        .count();
    match pos.entries() {
        [_] => match (cfg.p(), cfg.q(), holes) {
            // -(H b,b)-
            (1, 0, 1) => true,
            // =(F a+a)=
            (1, 1, 0) => true,
            // -(F x+x)-(H y,y)-
            (2, 0, 1) => true,
            _ => false,
        },
        [a, b] if a == b => match (cfg.p(), cfg.q(), holes) {
            // =(H b,b)=
            (1, 1, 1) => true,
            // -(H y1,y1)-(H y2,y2)-
            (2, 0, 2) => true,
            _ => false,
        },
        _ => false,
    }
}

/// Spin-structure branch of a configuration on an all-even stratum.
enum SpinBranch {
    FigureEightsOnly,
    HolesEven,
    HolesOdd,
}

fn spin_branch(cfg: &ClosedConfig) -> SpinBranch {
    let mut any_hole = false;
    for pc in &cfg.pieces {
        if let PieceKind::PairOfHoles { b_prime, .. } = pc.kind {
            if b_prime % 2 == 1 {
                return SpinBranch::HolesOdd;
            }
            any_hole = true;
        }
    }
    if any_hole {
        SpinBranch::HolesEven
    } else {
        SpinBranch::FigureEightsOnly
    }
}

/// Evaluates the constant of a validated closed configuration on the given
/// component. The result is `coeff / pi^2`.
pub fn constant_closed(
    cfg: &ClosedConfig,
    component: &StratumComponent,
    table: &VolumeTable,
) -> Result<SVConstant> {
    let ambient = component.stratum();
    if let Some(v) = validate_closed(cfg, ambient).first() {
        return Err(Error::NotAdmissible(v.clone()));
    }
    let coeff = match component.label() {
        ComponentLabel::Connected => {
            let denom = table.lookup(ambient, ComponentLabel::Connected)?;
            let mut num = rat(1, 1);
            let mut pi = 0;
            for pc in &cfg.pieces {
                let v = table.lookup(&pc.stratum(), ComponentLabel::Connected)?;
                num *= v.coeff;
                pi += v.pi_power;
            }
            debug_assert_eq!(pi + 2, denom.pi_power);
            assemble(cfg, ambient, HoleCount::Full, num, denom.coeff)?
        }
        ComponentLabel::Hyperelliptic => hyperelliptic_constant(cfg, ambient, table)?,
        ComponentLabel::NonHyperelliptic => {
            let denom = table
                .lookup(ambient, ComponentLabel::NonHyperelliptic)?
                .coeff;
            let mut num = rat(1, 1);
            for pc in &cfg.pieces {
                num *= table.lookup(&pc.stratum(), ComponentLabel::Connected)?.coeff;
            }
            let mut c = assemble(cfg, ambient, HoleCount::Full, num, denom.clone())?;
            if is_hyp_lemma_shape(cfg, ambient) {
                let hyp = hyperelliptic_constant(cfg, ambient, table)?;
                let vol_hyp = table.lookup(ambient, ComponentLabel::Hyperelliptic)?.coeff;
                c -= hyp * vol_hyp / denom;
            }
            c
        }
        ComponentLabel::EvenSpin | ComponentLabel::OddSpin => {
            let phi = if component.label() == ComponentLabel::EvenSpin {
                Parity::Even
            } else {
                Parity::Odd
            };
            spin_constant(cfg, ambient, phi, table)?
        }
    };
    Ok(SVConstant::closed(coeff))
}

/// `M * (1/2^(p-1)) * prod (d_i/2 - 1)! / (d/2 - 2)! * numerator / denominator`.
fn assemble(
    cfg: &ClosedConfig,
    ambient: &Stratum,
    holes: HoleCount,
    numerator: Rat,
    denominator: Rat,
) -> Result<Rat> {
    let dims = crate::closed::d_values(cfg, ambient)?;
    Ok(combinatorial_factor(cfg, holes)
        * dimension_factor(&dims, ambient.dim_real())
        * numerator
        / denominator)
}

fn hyperelliptic_constant(
    cfg: &ClosedConfig,
    ambient: &Stratum,
    table: &VolumeTable,
) -> Result<Rat> {
    if !is_hyp_lemma_shape(cfg, ambient) {
        return Err(Error::NotAdmissible(format!(
            "only the symmetric shapes occur on H^hyp({})",
            ambient.alpha()
        )));
    }
    let denom = table.lookup(ambient, ComponentLabel::Hyperelliptic)?.coeff;
    let mut num = rat(1, 1);
    for pc in &cfg.pieces {
        num *= table
            .lookup(&pc.stratum(), ComponentLabel::Hyperelliptic)?
            .coeff;
    }
    assemble(cfg, ambient, HoleCount::LeftOnly, num, denom)
}

fn spin_constant(
    cfg: &ClosedConfig,
    ambient: &Stratum,
    phi: Parity,
    table: &VolumeTable,
) -> Result<Rat> {
    let denom = table
        .lookup(
            ambient,
            match phi {
                Parity::Even => ComponentLabel::EvenSpin,
                Parity::Odd => ComponentLabel::OddSpin,
            },
        )?
        .coeff;
    let piece_strata: Vec<Stratum> = cfg.pieces.iter().map(|pc| pc.stratum()).collect();

    let mut c = match spin_branch(cfg) {
        SpinBranch::HolesOdd => {
            // Half of the slit choices give each parity; total volumes.
            let mut num = rat(1, 1);
            for s in &piece_strata {
                num *= table.lookup(s, ComponentLabel::Connected)?.coeff;
            }
            assemble(cfg, ambient, HoleCount::Full, num * rat(1, 2), denom.clone())?
        }
        branch => {
            // Parity congruence: the figure-eight-only branch shifts the
            // target by sum(a'_i) + p + 1; with holes of even order the
            // parities of the pieces add up directly.
            let target = match branch {
                SpinBranch::FigureEightsOnly => {
                    let shift: u32 = cfg
                        .pieces
                        .iter()
                        .map(|pc| match pc.kind {
                            PieceKind::FigureEight { a_prime, .. } => a_prime,
                            PieceKind::PairOfHoles { .. } => unreachable!(),
                        })
                        .sum::<u32>()
                        + cfg.p() as u32
                        + 1;
                    phi.add(Parity::from_int(shift))
                }
                _ => phi,
            };
            let num = spin_parity_sum(&piece_strata, target, table)?;
            assemble(cfg, ambient, HoleCount::Full, num, denom.clone())?
        }
    };

    // Hyperelliptic shapes assembled symmetrically produce hyperelliptic
    // surfaces; when the ambient hyperelliptic component has parity phi
    // these were counted above and belong to H^hyp instead.
    if is_hyp_lemma_shape(cfg, ambient) && delta(&ambient.alpha().strip_marked_points(), phi) == 1 {
        let hyp = hyperelliptic_constant(cfg, ambient, table)?;
        let vol_hyp = table.lookup(ambient, ComponentLabel::Hyperelliptic)?.coeff;
        c -= hyp * vol_hyp / denom;
    }
    Ok(c)
}

fn spin_parity_sum(piece_strata: &[Stratum], target: Parity, table: &VolumeTable) -> Result<Rat> {
    let p = piece_strata.len();
    let mut total = rat(0, 1);
    for mask in 0..(1u32 << p) {
        let parity = if mask.count_ones() % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        };
        if parity != target {
            continue;
        }
        let mut prod = rat(1, 1);
        for (i, s) in piece_strata.iter().enumerate() {
            let phi = if mask & (1 << i) != 0 {
                Parity::Odd
            } else {
                Parity::Even
            };
            prod *= table.parity_volume_or_zero(s.alpha(), phi)?.coeff;
            if prod == rat(0, 1) {
                break;
            }
        }
        total += prod;
    }
    Ok(total)
}

/// One row of a closed-configuration table.
#[derive(Debug, Clone)]
pub struct ClosedRow {
    pub config: ClosedConfig,
    pub symmetry: SymmetryInfo,
    pub m_factor: Rat,
    pub constant: SVConstant,
}

/// Admissible configurations for the component, one canonical
/// representative per orbit, filtered to those actually realized (nonzero
/// constant). Deterministic order: by multiplicity, then canonical form.
pub fn enumerate_closed(
    component: &StratumComponent,
    table: &VolumeTable,
) -> Result<Vec<ClosedConfig>> {
    Ok(table_closed(component, table)?
        .into_iter()
        .map(|row| row.config)
        .collect())
}

/// Full table of admissible configurations with symmetries, combinatorial
/// factors, and constants.
pub fn table_closed(component: &StratumComponent, table: &VolumeTable) -> Result<Vec<ClosedRow>> {
    let mut rows = Vec::new();
    for cfg in enumerate_closed_raw(component.stratum()) {
        let canon = canonicalize_closed(&cfg);
        match constant_closed(&canon, component, table) {
            Ok(constant) => {
                if constant.coeff == rat(0, 1) {
                    continue;
                }
                rows.push(ClosedRow {
                    symmetry: symmetry_closed(&canon),
                    m_factor: combinatorial_factor_closed(&canon),
                    constant,
                    config: canon,
                });
            }
            Err(Error::NotAdmissible(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    rows.sort_by_key(|r| (r.config.multiplicity(), r.config.clone()));
    Ok(rows)
}
