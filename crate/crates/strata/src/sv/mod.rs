//! Siegel-Veech constants. A constant for saddle connections joining
//! distinct zeros is a pure rational; a constant for closed saddle
//! connections is a rational multiple of 1/pi^2, reported as the exact
//! rational `c * zeta(2) = coeff / 6`.

pub mod closed;
pub mod distinct;

use num_bigint::BigInt;

use crate::rat::{factorial, format_rat, rat, Rat};
use crate::stratum::{Partition, Stratum};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstantKind {
    /// `c = coeff`
    Distinct,
    /// `c = coeff / pi^2`, reported as `c * zeta(2) = coeff / 6`
    Closed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SVConstant {
    pub coeff: Rat,
    pub kind: ConstantKind,
}

impl SVConstant {
    pub fn distinct(coeff: Rat) -> SVConstant {
        SVConstant {
            coeff,
            kind: ConstantKind::Distinct,
        }
    }

    pub fn closed(coeff: Rat) -> SVConstant {
        SVConstant {
            coeff,
            kind: ConstantKind::Closed,
        }
    }

    /// For closed constants, the exact rational `c * zeta(2)`; for distinct
    /// constants, the constant itself.
    pub fn reported(&self) -> Rat {
        match self.kind {
            ConstantKind::Distinct => self.coeff.clone(),
            ConstantKind::Closed => &self.coeff / rat(6, 1),
        }
    }

    /// Approximate numerical value of `c` itself.
    pub fn approx(&self) -> f64 {
        let v = rat_to_f64(&self.coeff);
        match self.kind {
            ConstantKind::Distinct => v,
            ConstantKind::Closed => v / (std::f64::consts::PI * std::f64::consts::PI),
        }
    }

    /// Wire form: `p/q` for distinct, `p/q * zeta2^-1` for closed (with
    /// `p/q` the reported `c * zeta(2)`).
    pub fn serialize(&self) -> String {
        match self.kind {
            ConstantKind::Distinct => format_rat(&self.coeff),
            ConstantKind::Closed => format!("{} * zeta2^-1", format_rat(&self.reported())),
        }
    }
}

pub(crate) fn rat_to_f64(q: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// The zero-redistribution factor `prod_m o(m)! / prod_i o_i(m)!` where `m`
/// runs over the distinct orders of the ambient stratum, `o` counts zeros
/// in the ambient partition and `o_i` in the i-th piece stratum (with its
/// distinguished zeros included).
pub(crate) fn redistribution_factor(ambient: &Partition, piece_strata: &[Stratum]) -> Rat {
    let mut factor = rat(1, 1);
    for m in ambient.distinct_values() {
        let o = ambient.multiplicity(m) as u64;
        let mut term = Rat::from_integer(factorial(o));
        for s in piece_strata {
            let oi = s.alpha().multiplicity(m) as u64;
            term /= Rat::from_integer(factorial(oi));
        }
        factor *= term;
    }
    factor
}

/// `(1/2^(p-1)) * prod (d_i/2 - 1)! / (d/2 - 2)!` where the `d_i` are the
/// piece dimensions and `d` the ambient real dimension.
pub(crate) fn dimension_factor(piece_dims: &[u32], ambient_dim: u32) -> Rat {
    let mut num = BigInt::from(1);
    for &d in piece_dims {
        num *= factorial(d as u64 / 2 - 1);
    }
    let mut f = Rat::new(num, factorial(ambient_dim as u64 / 2 - 2));
    f /= Rat::from_integer(BigInt::from(1) << (piece_dims.len() - 1));
    f
}
