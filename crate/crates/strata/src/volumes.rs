//! Exact stratum-component volumes.
//!
//! A volume is stored as the rational coefficient `r` in
//! `Vol(H_1(alpha)) = r * pi^(2g)`; pi powers are tracked separately so the
//! constant pipelines can verify that they cancel as expected. The bundled
//! data covers every connected component in genera up to 4 plus the torus.
//! Entries for higher genera can be merged in from a user-supplied table.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rat::{factorial, rat, Rat};
use crate::stratum::{
    classify_components, delta, genus_of, is_hyperelliptic_shape,
    ComponentLabel, Parity, Partition, Stratum, StratumComponent,
};

/// An exact volume `coeff * pi^pi_power`. `coeff = 0` encodes a component
/// that does not exist ("dummy" volume).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumVolume {
    pub coeff: Rat,
    pub pi_power: u32,
}

impl StratumVolume {
    pub fn zero(pi_power: u32) -> StratumVolume {
        StratumVolume {
            coeff: Rat::zero(),
            pi_power,
        }
    }
}

/// Map from (stripped partition, component label) to the rational volume
/// coefficient. Lookups on partitions with marked points resolve to the
/// stripped partition: the volumes coincide.
#[derive(Debug, Clone, Default)]
pub struct VolumeTable {
    entries: BTreeMap<(Vec<u32>, ComponentLabel), Rat>,
}

/// Bundled volume data: every stratum component of genus <= 4 plus `H(0)`,
/// as `(partition, component tag, numerator, denominator)`.
const BUNDLED: &[(&[u32], ComponentLabel, i64, i64)] = &[
    (&[0], ComponentLabel::Connected, 1, 3),
    (&[2], ComponentLabel::Hyperelliptic, 1, 120),
    (&[1, 1], ComponentLabel::Hyperelliptic, 1, 135),
    (&[4], ComponentLabel::Hyperelliptic, 1, 6720),
    (&[4], ComponentLabel::OddSpin, 1, 2430),
    (&[3, 1], ComponentLabel::Connected, 16, 42525),
    (&[2, 2], ComponentLabel::Hyperelliptic, 1, 9450),
    (&[2, 2], ComponentLabel::OddSpin, 1, 4320),
    (&[2, 1, 1], ComponentLabel::Connected, 1, 3780),
    (&[1, 1, 1, 1], ComponentLabel::Connected, 1, 4860),
    (&[6], ComponentLabel::Hyperelliptic, 1, 580608),
    (&[6], ComponentLabel::OddSpin, 1, 37800),
    (&[6], ComponentLabel::EvenSpin, 32, 1913625),
    (&[5, 1], ComponentLabel::Connected, 1, 36750),
    (&[4, 2], ComponentLabel::OddSpin, 1, 79380),
    (&[4, 2], ComponentLabel::EvenSpin, 1, 107520),
    (&[4, 1, 1], ComponentLabel::Connected, 11, 653184),
    (&[3, 3], ComponentLabel::NonHyperelliptic, 1, 51030),
    (&[3, 3], ComponentLabel::Hyperelliptic, 1, 992250),
    (&[3, 2, 1], ComponentLabel::Connected, 1, 70875),
    (&[3, 1, 1, 1], ComponentLabel::Connected, 62, 5740875),
    (&[2, 2, 2], ComponentLabel::OddSpin, 31, 4354560),
    (&[2, 2, 2], ComponentLabel::EvenSpin, 37, 6804000),
    (&[2, 2, 1, 1], ComponentLabel::Connected, 131, 13608000),
    (&[2, 1, 1, 1, 1], ComponentLabel::Connected, 1, 136080),
    (&[1, 1, 1, 1, 1, 1], ComponentLabel::Connected, 377, 67359600),
];

/// Canonical storage key: marked points stripped, with the torus kept as
/// its conventional form `(0)`.
fn key_entries(alpha: &Partition) -> Vec<u32> {
    let stripped = alpha.strip_marked_points();
    if stripped.is_empty() {
        vec![0]
    } else {
        stripped.entries().to_vec()
    }
}

impl VolumeTable {
    /// The bundled table alone.
    pub fn bundled() -> VolumeTable {
        let mut table = VolumeTable::default();
        for &(part, label, num, den) in BUNDLED {
            table.entries.insert((part.to_vec(), label), rat(num, den));
        }
        table
    }

    /// Inserts or overrides one entry; returns the previous coefficient.
    pub fn insert(&mut self, alpha: &Partition, label: ComponentLabel, coeff: Rat) -> Option<Rat> {
        self.entries.insert((key_entries(alpha), label), coeff)
    }

    fn stored(&self, stripped: &Partition, label: ComponentLabel) -> Option<&Rat> {
        self.entries.get(&(key_entries(stripped), label))
    }

    /// Exact volume of a stratum component. `Connected` on a multi-component
    /// stratum means the sum over its components. The volume of a
    /// nonexistent spin component of an all-even stratum is 0, as is the
    /// hyperelliptic volume of a stratum that has no hyperelliptic shape.
    pub fn lookup(&self, stratum: &Stratum, label: ComponentLabel) -> Result<StratumVolume> {
        let stripped = stratum.alpha().strip_marked_points();
        let pi_power = 2 * genus_of(&stripped);
        let base = Stratum::new(stripped.clone());
        let comps = classify_components(&base);
        let coeff = match label {
            ComponentLabel::Connected => {
                let mut acc = Rat::zero();
                for &c in &comps {
                    acc += self.component_coeff(&stripped, c)?;
                }
                acc
            }
            _ if comps.contains(&label) => self.component_coeff(&stripped, label)?,
            ComponentLabel::Hyperelliptic => {
                if is_hyperelliptic_shape(&stripped) {
                    // single-component hyperelliptic stratum stored under
                    // its own label (g <= 2)
                    self.component_coeff(&stripped, comps[0])?
                } else {
                    Rat::zero()
                }
            }
            ComponentLabel::EvenSpin | ComponentLabel::OddSpin => {
                if stripped.all_even() || stripped.is_empty() {
                    // nonexistent spin component of small genus: dummy 0
                    Rat::zero()
                } else {
                    return Err(Error::NoSpinStructure(base.to_string()));
                }
            }
            ComponentLabel::NonHyperelliptic => {
                return Err(Error::UnknownComponent {
                    label: label.tag().to_string(),
                    stratum: base.to_string(),
                })
            }
        };
        Ok(StratumVolume { coeff, pi_power })
    }

    fn component_coeff(&self, stripped: &Partition, label: ComponentLabel) -> Result<Rat> {
        self.stored(stripped, label).cloned().ok_or_else(|| {
            let s = Stratum::new(stripped.clone());
            let name = match label {
                ComponentLabel::Connected => s.to_string(),
                l => format!("H^{}({})", l.tag(), stripped),
            };
            Error::MissingVolume(name)
        })
    }

    pub fn lookup_component(&self, component: &StratumComponent) -> Result<StratumVolume> {
        self.lookup(component.stratum(), component.label())
    }

    /// `Vol(H^phi(alpha)) + delta(alpha, phi) * Vol(H^hyp(alpha))`: the total
    /// volume of flat structures with spin parity `phi`. Errors when the
    /// stratum carries no spin structure.
    pub fn volume_with_hyp(&self, alpha: &Partition, phi: Parity) -> Result<StratumVolume> {
        let stripped = alpha.strip_marked_points();
        if !stripped.all_even() && !stripped.is_empty() {
            return Err(Error::NoSpinStructure(Stratum::new(stripped).to_string()));
        }
        let stratum = Stratum::new(stripped.clone());
        let label = match phi {
            Parity::Even => ComponentLabel::EvenSpin,
            Parity::Odd => ComponentLabel::OddSpin,
        };
        let mut vol = self.lookup(&stratum, label)?;
        if delta(&stripped, phi) == 1 {
            vol.coeff += self.lookup(&stratum, ComponentLabel::Hyperelliptic)?.coeff;
        }
        Ok(vol)
    }

    /// Parity-sum helper: like `volume_with_hyp` but a stratum without spin
    /// structure contributes 0 instead of erroring. Such pieces cannot occur
    /// in an admissible spin-component configuration, and a zero factor
    /// makes the whole constant vanish.
    pub fn parity_volume_or_zero(&self, alpha: &Partition, phi: Parity) -> Result<StratumVolume> {
        let stripped = alpha.strip_marked_points();
        let pi_power = 2 * genus_of(&stripped);
        if !stripped.all_even() && !stripped.is_empty() {
            return Ok(StratumVolume::zero(pi_power));
        }
        self.volume_with_hyp(alpha, phi)
    }

    /// Volume of a stratum of disconnected surfaces with parts
    /// `H(alpha'_1) x ... x H(alpha'_p)`:
    /// `(1/2^(p-1)) * prod (d_i/2 - 1)! / (d/2 - 1)! * prod Vol(H_1(alpha'_i))`
    /// where `d_i` are the real dimensions and `d` their sum.
    pub fn volume_disconnected(&self, parts: &[StratumComponent]) -> Result<StratumVolume> {
        assert!(!parts.is_empty());
        let mut coeff = rat(1, 1);
        let mut pi_power = 0;
        let mut dims = Vec::new();
        for part in parts {
            let v = self.lookup_component(part)?;
            coeff *= v.coeff;
            pi_power += v.pi_power;
            dims.push(part.stratum().dim_real() as u64);
        }
        let d: u64 = dims.iter().sum();
        let mut numer = BigInt::from(1);
        for &di in &dims {
            numer *= factorial(di / 2 - 1);
        }
        coeff *= Rat::new(numer, factorial(d / 2 - 1));
        coeff /= Rat::from_integer(BigInt::from(1) << (parts.len() - 1));
        Ok(StratumVolume { coeff, pi_power })
    }

    /// Parses the text format, one entry per line:
    /// `<partition> | <component tag> | <numerator>/<denominator>`.
    /// Lines starting with `#` and blank lines are skipped. Returns the
    /// parsed table merged over `self`, plus a warning for every override
    /// of an existing entry.
    pub fn merge_from_text(&mut self, source: &str) -> Result<Vec<String>> {
        let mut warnings = Vec::new();
        for (idx, raw) in source.lines().enumerate() {
            let line = idx + 1;
            let text = raw.trim();
            if text.is_empty() || text.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = text.split('|').map(str::trim).collect();
            if fields.len() != 3 {
                return Err(Error::TableParseError {
                    line,
                    message: format!("expected three `|`-separated fields, got {}", fields.len()),
                });
            }
            let alpha = crate::stratum::parse_partition(fields[0]).map_err(|e| {
                Error::TableParseError {
                    line,
                    message: e.to_string(),
                }
            })?;
            let label = ComponentLabel::parse(fields[1]).ok_or_else(|| Error::TableParseError {
                line,
                message: format!("unknown component tag {:?}", fields[1]),
            })?;
            let coeff = parse_fraction(fields[2]).ok_or_else(|| Error::TableParseError {
                line,
                message: format!("bad volume fraction {:?}", fields[2]),
            })?;
            if self.insert(&alpha, label, coeff).is_some() {
                warnings.push(format!(
                    "line {line}: overriding bundled volume for {} | {}",
                    alpha, label
                ));
            }
        }
        Ok(warnings)
    }

    /// Serializes all entries in the text format; parsing the result gives
    /// back the same table.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for ((alpha, label), coeff) in &self.entries {
            let strs: Vec<String> = alpha.iter().map(|e| e.to_string()).collect();
            let _ = writeln!(
                out,
                "{} | {} | {}/{}",
                strs.join(","),
                label.tag(),
                coeff.numer(),
                coeff.denom()
            );
        }
        out
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn parse_fraction(text: &str) -> Option<Rat> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = den.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rat::new(n, d))
}

/// Loads a user table on top of the bundled defaults.
pub fn load_volume_table(source: &str) -> Result<(VolumeTable, Vec<String>)> {
    let mut table = VolumeTable::bundled();
    let warnings = table.merge_from_text(source)?;
    Ok((table, warnings))
}
