//! Constants for configurations of saddle connections joining two distinct
//! zeros, with the component-specific variants: connected strata use the
//! plain volume ratio, hyperelliptic components admit only the symmetric
//! degenerations with hyperelliptic piece volumes, spin components sum
//! delta-augmented parity products, and nonhyperelliptic components
//! subtract the hyperelliptic contribution.

use crate::distinct::{
    canonicalize_distinct, enumerate_distinct, symmetry_distinct, validate_distinct,
    DistinctConfig, SymmetryInfo,
};
use crate::error::{Error, Result};
use crate::rat::{rat, Rat};
use crate::stratum::{
    delta, ComponentLabel, Parity, Partition, Stratum, StratumComponent,
};
use crate::sv::{dimension_factor, redistribution_factor, SVConstant};
use crate::volumes::VolumeTable;

/// The combinatorial factor `M`: symmetry quotient, zero redistribution,
/// the corrections for newborn orders already present in the stratum, and
/// the product of the `a_i + 1` surgery counts.
pub fn combinatorial_factor_distinct(cfg: &DistinctConfig) -> Rat {
    let sym = symmetry_distinct(cfg);
    let piece_strata: Vec<Stratum> = cfg.pieces.iter().map(|q| q.stratum()).collect();
    let ambient = ambient_partition(cfg);
    let mut m = redistribution_factor(&ambient, &piece_strata);
    for (piece, stratum) in cfg.pieces.iter().zip(&piece_strata) {
        let a = piece.a();
        if a != 0 {
            m *= rat(stratum.alpha().multiplicity(a) as i64, 1);
        }
        m *= rat(a as i64 + 1, 1);
    }
    m / rat((sym.gamma_order * sym.rot_order) as i64, 1)
}

fn ambient_partition(cfg: &DistinctConfig) -> Partition {
    let mut entries = vec![cfg.m1, cfg.m2];
    for piece in &cfg.pieces {
        entries.extend_from_slice(piece.rest.entries());
    }
    Partition::new(entries)
}

/// Is this the symmetric degeneration of Lemma `lm:admissible:split`'s
/// hyperelliptic counterpart: ambient `(g-1, g-1)`, every split symmetric,
/// no unchanged zeros, multiplicity at most two.
fn is_hyp_lemma_shape(cfg: &DistinctConfig, ambient: &Stratum) -> bool {
    let pos = ambient.alpha().strip_marked_points();
    let two_equal = matches!(pos.entries(), [a, b] if a == b);
    two_equal
        && cfg.m1 == cfg.m2
        && cfg.pieces.len() <= 2
        && cfg
            .pieces
            .iter()
            .all(|q| q.a_prime == q.a_dprime && q.rest.is_empty())
}

/// Evaluates the constant for a validated configuration on the given
/// stratum component.
pub fn constant_general(
    cfg: &DistinctConfig,
    component: &StratumComponent,
    table: &VolumeTable,
) -> Result<SVConstant> {
    let ambient = component.stratum();
    let violations = validate_distinct(cfg, ambient);
    if let Some(v) = violations.first() {
        return Err(Error::NotAdmissible(v.clone()));
    }
    let piece_strata: Vec<Stratum> = cfg.pieces.iter().map(|q| q.stratum()).collect();
    let dims: Vec<u32> = piece_strata.iter().map(|s| s.dim_real()).collect();
    let dim_f = dimension_factor(&dims, ambient.dim_real());
    let m = combinatorial_factor_distinct(cfg);

    let coeff = match component.label() {
        ComponentLabel::Connected => {
            let denom = table.lookup(ambient, ComponentLabel::Connected)?;
            let mut num = rat(1, 1);
            let mut pi = 0;
            for s in &piece_strata {
                let v = table.lookup(s, ComponentLabel::Connected)?;
                num *= v.coeff;
                pi += v.pi_power;
            }
            debug_assert_eq!(pi, denom.pi_power);
            m * dim_f * num / denom.coeff
        }
        ComponentLabel::Hyperelliptic => {
            if !is_hyp_lemma_shape(cfg, ambient) {
                return Err(Error::NotAdmissible(format!(
                    "only symmetric degenerations of multiplicity <= 2 occur on {component}"
                )));
            }
            let denom = table.lookup(ambient, ComponentLabel::Hyperelliptic)?;
            let mut num = rat(1, 1);
            for s in &piece_strata {
                num *= table.lookup(s, ComponentLabel::Hyperelliptic)?.coeff;
            }
            m * dim_f * num / denom.coeff
        }
        ComponentLabel::NonHyperelliptic => {
            let denom = table
                .lookup(ambient, ComponentLabel::NonHyperelliptic)?
                .coeff;
            let mut num = rat(1, 1);
            for s in &piece_strata {
                num *= table.lookup(s, ComponentLabel::Connected)?.coeff;
            }
            if is_hyp_lemma_shape(cfg, ambient) {
                let mut hyp = rat(1, 1);
                for s in &piece_strata {
                    hyp *= table.lookup(s, ComponentLabel::Hyperelliptic)?.coeff;
                }
                num -= hyp;
            }
            m * dim_f * num / denom
        }
        ComponentLabel::EvenSpin | ComponentLabel::OddSpin => {
            let phi = if component.label() == ComponentLabel::EvenSpin {
                Parity::Even
            } else {
                Parity::Odd
            };
            let denom = table.lookup(ambient, component.label())?.coeff;
            let mut num = parity_sum(&piece_strata, phi, table)?;
            // Surfaces assembled entirely from hyperelliptic pieces with a
            // symmetric slit are hyperelliptic; when the ambient
            // hyperelliptic component has parity phi they were counted in
            // the parity sum and belong elsewhere.
            if is_hyp_lemma_shape(cfg, ambient)
                && delta(&ambient.alpha().strip_marked_points(), phi) == 1
            {
                let mut hyp = rat(1, 1);
                for s in &piece_strata {
                    hyp *= table.lookup(s, ComponentLabel::Hyperelliptic)?.coeff;
                }
                num -= hyp;
            }
            m * dim_f * num / denom
        }
    };
    Ok(SVConstant::distinct(coeff))
}

/// Sum over parity assignments with the prescribed total parity of the
/// delta-augmented volume products.
fn parity_sum(piece_strata: &[Stratum], target: Parity, table: &VolumeTable) -> Result<Rat> {
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
            let v = table.parity_volume_or_zero(s.alpha(), phi)?;
            prod *= v.coeff;
            if prod == rat(0, 1) {
                break;
            }
        }
        total += prod;
    }
    Ok(total)
}

/// Multiplicity-one constant: the single-piece configuration with split
/// `m1 + m2`.
pub fn constant_mult1(
    component: &StratumComponent,
    m1: u32,
    m2: u32,
    table: &VolumeTable,
) -> Result<SVConstant> {
    let alpha = component.stratum().alpha().strip_marked_points();
    for m in [m1, m2] {
        if alpha.multiplicity(m) == 0 {
            return Err(Error::ZeroNotInStratum {
                order: m,
                stratum: component.stratum().to_string(),
            });
        }
    }
    if m1 == m2 && alpha.multiplicity(m1) < 2 {
        return Err(Error::ZeroNotInStratum {
            order: m1,
            stratum: component.stratum().to_string(),
        });
    }
    let rest = alpha
        .without_entry(m1)
        .and_then(|r| r.without_entry(m2))
        .expect("orders verified");
    let cfg = DistinctConfig {
        m1: m1.min(m2),
        m2: m1.max(m2),
        pieces: vec![crate::distinct::DistinctPiece::new(
            m1.min(m2),
            m1.max(m2),
            rest,
        )],
    };
    constant_general(&cfg, component, table)
}

/// The named-zeros (Problem 1) variant: the symmetry quotient and surgery
/// counts without any zero-redistribution factors.
pub fn constant_problem1(
    cfg: &DistinctConfig,
    component: &StratumComponent,
    table: &VolumeTable,
) -> Result<SVConstant> {
    let full = constant_general(cfg, component, table)?;
    let piece_strata: Vec<Stratum> = cfg.pieces.iter().map(|q| q.stratum()).collect();
    let ambient = ambient_partition(cfg);
    let mut extras = redistribution_factor(&ambient, &piece_strata);
    for (piece, stratum) in cfg.pieces.iter().zip(&piece_strata) {
        let a = piece.a();
        if a != 0 {
            extras *= rat(stratum.alpha().multiplicity(a) as i64, 1);
        }
    }
    Ok(SVConstant::distinct(full.coeff / extras))
}

/// One row of a configuration table.
#[derive(Debug, Clone)]
pub struct DistinctRow {
    pub config: DistinctConfig,
    pub symmetry: SymmetryInfo,
    pub m_factor: Rat,
    pub constant: SVConstant,
}

/// All admissible configurations over all pairs of zero orders, with their
/// symmetries, combinatorial factors and constants. Deterministic order:
/// by multiplicity, then by the canonical form.
pub fn table_distinct(
    component: &StratumComponent,
    table: &VolumeTable,
) -> Result<Vec<DistinctRow>> {
    let alpha = component.stratum().alpha().strip_marked_points();
    let values = alpha.distinct_values();
    let mut rows = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (i, &m1) in values.iter().enumerate() {
        for &m2 in &values[i..] {
            if m1 == m2 && alpha.multiplicity(m1) < 2 {
                continue;
            }
            for cfg in enumerate_distinct(component.stratum(), m1, m2)? {
                let canon = canonicalize_distinct(&cfg);
                if !seen.insert(canon.clone()) {
                    continue;
                }
                match constant_general(&canon, component, table) {
                    Ok(constant) => {
                        if constant.coeff == rat(0, 1) {
                            continue;
                        }
                        rows.push(DistinctRow {
                            symmetry: symmetry_distinct(&canon),
                            m_factor: combinatorial_factor_distinct(&canon),
                            constant,
                            config: canon,
                        });
                    }
                    Err(Error::NotAdmissible(_)) => continue,
                    Err(e) => return Err(e),
                }
            }
        }
    }
    rows.sort_by_key(|r| (r.config.p(), r.config.clone()));
    Ok(rows)
}
