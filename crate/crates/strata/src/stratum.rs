//! Partitions, strata of abelian differentials, connected-component
//! classification, spin parities of hyperelliptic components, and the
//! delta-function used by the spin-aware volume accessors.
//!
//! A stratum `H(alpha)` is recorded by the orders of the zeros of the
//! differential; order-0 entries are marked points. The flat torus is always
//! stored as `H(0)` (one marked point).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Spin parity, a mod-2 invariant defined when all zero orders are even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_int(n: u32) -> Parity {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    /// Sum of parities in Z/2.
    pub fn add(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

/// A multiset of non-negative zero orders, stored weakly decreasing.
/// Order-0 entries are marked points.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Partition {
    entries: Vec<u32>,
}

impl Partition {
    /// Builds a multiset of orders from entries in any order; they are
    /// stored sorted weakly decreasing. No parity requirement: partial
    /// collections of zeros (piece rests) are partitions too. A stratum
    /// additionally needs an even total, checked by [`Stratum`].
    pub fn new(entries: impl Into<Vec<u32>>) -> Partition {
        let mut entries = entries.into();
        entries.sort_unstable_by(|a, b| b.cmp(a));
        Partition { entries }
    }

    /// The torus stratum `H(0)`.
    pub fn torus() -> Partition {
        Partition { entries: vec![0] }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of entries, counting marked points.
    pub fn card(&self) -> usize {
        self.entries.len()
    }

    /// Sum of all entries (marked points contribute 0).
    pub fn total(&self) -> u32 {
        self.entries.iter().sum()
    }

    /// Multiplicity of the order `m` among the entries.
    pub fn multiplicity(&self, m: u32) -> usize {
        self.entries.iter().filter(|&&e| e == m).count()
    }

    /// The partition with all order-0 entries removed.
    pub fn strip_marked_points(&self) -> Partition {
        Partition {
            entries: self.entries.iter().copied().filter(|&e| e > 0).collect(),
        }
    }

    /// Distinct values among the entries, decreasing.
    pub fn distinct_values(&self) -> Vec<u32> {
        let mut vals = self.entries.clone();
        vals.dedup();
        vals
    }

    /// Adds one entry, restoring sorted order.
    pub fn with_entry(&self, m: u32) -> Partition {
        let mut entries = self.entries.clone();
        entries.push(m);
        entries.sort_unstable_by(|a, b| b.cmp(a));
        Partition { entries }
    }

    /// Removes one copy of `m`, if present.
    pub fn without_entry(&self, m: u32) -> Option<Partition> {
        let pos = self.entries.iter().position(|&e| e == m)?;
        let mut entries = self.entries.clone();
        entries.remove(pos);
        Some(Partition { entries })
    }

    /// Multiset difference `self - other`; `None` if `other` is not contained.
    pub fn checked_sub(&self, other: &Partition) -> Option<Partition> {
        let mut entries = self.entries.clone();
        for &m in other.entries() {
            let pos = entries.iter().position(|&e| e == m)?;
            entries.remove(pos);
        }
        Some(Partition { entries })
    }

    /// True when every entry is even (the stratum then carries spin data).
    pub fn all_even(&self) -> bool {
        self.entries.iter().all(|&e| e % 2 == 0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

/// Genus of the stratum with the given zero orders: `(sum + 2) / 2`.
/// Only meaningful when the total is even.
pub fn genus_of(alpha: &Partition) -> u32 {
    debug_assert_eq!(alpha.total() % 2, 0, "odd total order in {alpha}");
    alpha.total() / 2 + 1
}

/// A stratum of abelian differentials, possibly with marked points.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Stratum {
    alpha: Partition,
}

impl Stratum {
    /// Wraps a partition already known to have an even total.
    pub fn new(alpha: Partition) -> Stratum {
        debug_assert_eq!(alpha.total() % 2, 0, "odd total order in {alpha}");
        Stratum { alpha }
    }

    pub fn from_partition(alpha: Partition) -> Result<Stratum> {
        if alpha.total() % 2 != 0 {
            return Err(Error::OddSum(alpha.entries().to_vec()));
        }
        Ok(Stratum { alpha })
    }

    pub fn from_entries(entries: impl Into<Vec<u32>>) -> Result<Stratum> {
        Stratum::from_partition(Partition::new(entries))
    }

    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    pub fn genus(&self) -> u32 {
        genus_of(&self.alpha)
    }

    /// Complex dimension `2g - 1 + card(alpha)`, counting marked points.
    /// The torus `H(0)` has dimension 2.
    pub fn dim_complex(&self) -> u32 {
        2 * self.genus() - 1 + self.alpha.card() as u32
    }

    pub fn dim_real(&self) -> u32 {
        2 * self.dim_complex()
    }

    pub fn strip_marked_points(&self) -> Stratum {
        Stratum::new(self.alpha.strip_marked_points())
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H({})", self.alpha)
    }
}

/// Connected-component label of a stratum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ComponentLabel {
    Connected,
    Hyperelliptic,
    EvenSpin,
    OddSpin,
    NonHyperelliptic,
}

impl ComponentLabel {
    pub fn tag(&self) -> &'static str {
        match self {
            ComponentLabel::Connected => "c",
            ComponentLabel::Hyperelliptic => "hyp",
            ComponentLabel::EvenSpin => "even",
            ComponentLabel::OddSpin => "odd",
            ComponentLabel::NonHyperelliptic => "nonhyp",
        }
    }

    pub fn parse(tag: &str) -> Option<ComponentLabel> {
        match tag {
            "c" | "connected" => Some(ComponentLabel::Connected),
            "hyp" => Some(ComponentLabel::Hyperelliptic),
            "even" => Some(ComponentLabel::EvenSpin),
            "odd" => Some(ComponentLabel::OddSpin),
            "nonhyp" => Some(ComponentLabel::NonHyperelliptic),
            _ => None,
        }
    }
}

impl fmt::Display for ComponentLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())
    }
}

/// True when `alpha` (marked points ignored) is `(2g-2)` or `(g-1,g-1)`,
/// the two shapes that can carry a hyperelliptic component. The torus
/// counts as `(2g-2)` with `g = 1`.
pub fn is_hyperelliptic_shape(alpha: &Partition) -> bool {
    let pos = alpha.strip_marked_points();
    match pos.entries() {
        [] => true,
        [_] => true,
        [a, b] => a == b,
        _ => false,
    }
}

/// Kontsevich-Zorich classification of connected components. Marked points
/// are stripped first; they do not affect the components.
pub fn classify_components(stratum: &Stratum) -> Vec<ComponentLabel> {
    use ComponentLabel::*;
    let pos = stratum.alpha().strip_marked_points();
    let g = genus_of(&pos);
    if g == 1 {
        return vec![Connected];
    }
    if g == 2 {
        // H(2) and H(1,1) are connected and coincide with their
        // hyperelliptic components.
        return vec![Hyperelliptic];
    }
    let entries = pos.entries();
    if g == 3 {
        return if entries == [4] || entries == [2, 2] {
            vec![Hyperelliptic, OddSpin]
        } else {
            vec![Connected]
        };
    }
    if entries.len() == 1 {
        // alpha = (2g-2)
        return vec![Hyperelliptic, EvenSpin, OddSpin];
    }
    if entries.len() == 2 && entries[0] == entries[1] {
        // alpha = (g-1, g-1)
        return if g % 2 == 0 {
            vec![Hyperelliptic, NonHyperelliptic]
        } else {
            vec![Hyperelliptic, EvenSpin, OddSpin]
        };
    }
    if pos.all_even() {
        vec![EvenSpin, OddSpin]
    } else {
        vec![Connected]
    }
}

/// Spin parity of the hyperelliptic component, where defined:
/// `[(g+1)/2] mod 2` for `(2g-2)` and `((g+1)/2) mod 2` for `(g-1,g-1)`
/// with odd `g`. The torus `H(0)` falls under the first case with `g = 1`.
pub fn hyperelliptic_spin_parity(stratum: &Stratum) -> Option<Parity> {
    let pos = stratum.alpha().strip_marked_points();
    match pos.entries() {
        [] => Some(Parity::Odd), // torus: [(1+1)/2] = 1
        [_] => {
            let g = genus_of(&pos);
            Some(Parity::from_int((g + 1) / 2))
        }
        [a, b] if a == b && a % 2 == 0 => {
            // two equal even entries force odd genus g = a + 1
            let g = genus_of(&pos);
            debug_assert_eq!(g % 2, 1);
            Some(Parity::from_int((g + 1) / 2))
        }
        _ => None,
    }
}

/// The delta-function: 1 exactly when `H(alpha)` has a hyperelliptic
/// component whose spin parity equals `phi`.
pub fn delta(alpha: &Partition, phi: Parity) -> u32 {
    let stratum = Stratum::new(alpha.clone());
    match hyperelliptic_spin_parity(&stratum) {
        Some(p) if p == phi => 1,
        _ => 0,
    }
}

/// A stratum together with a component label admitted by the classification.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StratumComponent {
    stratum: Stratum,
    label: ComponentLabel,
}

impl StratumComponent {
    /// Validates the label against `classify_components`. The `Connected`
    /// label is accepted as an alias for the unique component of a
    /// single-component stratum.
    pub fn new(stratum: Stratum, label: ComponentLabel) -> Result<StratumComponent> {
        let comps = classify_components(&stratum);
        let label = if comps.contains(&label) {
            label
        } else if label == ComponentLabel::Connected && comps.len() == 1 {
            comps[0]
        } else {
            return Err(Error::UnknownComponent {
                label: label.tag().to_string(),
                stratum: stratum.to_string(),
            });
        };
        Ok(StratumComponent { stratum, label })
    }

    pub fn connected(stratum: Stratum) -> Result<StratumComponent> {
        StratumComponent::new(stratum, ComponentLabel::Connected)
    }

    pub fn stratum(&self) -> &Stratum {
        &self.stratum
    }

    pub fn label(&self) -> ComponentLabel {
        self.label
    }
}

impl fmt::Display for StratumComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.label {
            ComponentLabel::Connected => write!(f, "{}", self.stratum),
            l => write!(f, "H^{}({})", l.tag(), self.stratum.alpha()),
        }
    }
}

/// Parses the stratum text form: comma-separated non-negative integers,
/// order-insensitive. The total must be even.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let mut entries = Vec::new();
    for (i, piece) in text.split(',').enumerate() {
        let piece = piece.trim();
        let v: u32 = piece.parse().map_err(|_| Error::ParseError {
            offset: i,
            message: format!("bad partition entry {piece:?}"),
        })?;
        entries.push(v);
    }
    let alpha = Partition::new(entries);
    if alpha.total() % 2 != 0 {
        return Err(Error::OddSum(alpha.entries().to_vec()));
    }
    Ok(alpha)
}
