//! Closed-form bounds on `t(n,d)` — the minimum edge count among order-`n`
//! graphs with rainbow connection number at most `d` — plus the per-graph
//! structural check behind the bridge-decomposition lower bound.
//!
//! `t(n,1) = C(n,2)` (only complete graphs have rc 1), `t(n,d) = n` in the
//! midrange `n/2 <= d <= n-2`, and `t(n, n-1) = n-1` (paths); for
//! `3 <= d < ceil(n/2)` the value is sandwiched between the
//! bridge-decomposition lower bound and the cycle-bouquet upper bound.

use crate::coloring::EdgeColoring;
use crate::graph::{BridgeDecomposition, Graph, GraphError};
use crate::verify::{is_rainbow_connected, ConnectivityCheck, VerifyError};
use alloc::vec::Vec;
use core::fmt;

/// Errors from bound evaluation.
#[derive(Clone, Debug, PartialEq)]
pub enum BoundsError {
    NOutOfRange {
        n: usize,
        min: usize,
    },
    DOutOfRange {
        n: usize,
        d: usize,
    },
    POutOfRange {
        p: usize,
    },
    /// `decomposition_check` needs a certified witness.
    NotCertified(NotCertified),
    Graph(GraphError),
}

#[derive(Clone, Debug, PartialEq)]
pub enum NotCertified {
    /// The witness uses more than `d` colors.
    TooManyColors {
        used: usize,
        d: usize,
    },
    /// The witness is not rainbow connected.
    NotRainbowConnected {
        pair: (usize, usize),
    },
    Verify(VerifyError),
}

impl fmt::Display for BoundsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundsError::NOutOfRange { n, min } => {
                write!(f, "order {n} below the minimum {min} for this bound")
            }
            BoundsError::DOutOfRange { n, d } => {
                write!(f, "d = {d} outside the bound's range for n = {n}")
            }
            BoundsError::POutOfRange { p } => write!(f, "diameter {p} below the minimum 2"),
            BoundsError::NotCertified(why) => match why {
                NotCertified::TooManyColors { used, d } => {
                    write!(f, "witness uses {used} colors, more than d = {d}")
                }
                NotCertified::NotRainbowConnected { pair } => {
                    write!(f, "witness fails at pair ({}, {})", pair.0, pair.1)
                }
                NotCertified::Verify(e) => write!(f, "witness check failed: {e}"),
            },
            BoundsError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for BoundsError {}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// Bound direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Lower,
    Upper,
    Exact,
}

/// Whether a bound entry applies at the queried `(n, d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Applicability {
    Valid,
    OutOfRange,
    /// A lower bound below the trivial connected floor `n - 1`.
    Vacuous,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BoundValue {
    Edges(i64),
    Real(f64),
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundValue::Edges(v) => write!(f, "{v}"),
            BoundValue::Real(v) => write!(f, "{v:.3}"),
        }
    }
}

/// One named bound with value, direction, and applicability at `(n, d)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundEntry {
    pub name: &'static str,
    pub direction: Direction,
    pub value: BoundValue,
    pub applicability: Applicability,
}

/// All bound entries evaluated at `(n, d)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub n: usize,
    pub d: usize,
    pub entries: Vec<BoundEntry>,
}

/// The classical exact values and upper bounds for `t(n,d)`, restricted to
/// the clauses applicable at `(n, d)`.
///
/// `d = 1`: exactly `C(n,2)`. `d = 2`: upper
/// `(n+1)*floor(log2 n) - 2^floor(log2 n) - 2`. `d = 3`: upper `2n - 5`.
/// `4 <= d < (n-1)/2`: upper `n - 1 + ceil((n-2)/(d-2))`.
/// `n/2 <= d <= n-2`: exactly `n`. `d = n - 1`: exactly `n - 1`.
pub fn schiermeyer_bounds(n: usize, d: usize) -> Result<Vec<BoundEntry>, BoundsError> {
    if n < 2 {
        return Err(BoundsError::NOutOfRange { n, min: 2 });
    }
    if d < 1 || d > n - 1 {
        return Err(BoundsError::DOutOfRange { n, d });
    }
    let mut entries = Vec::new();
    if d == 1 {
        entries.push(BoundEntry {
            name: "complete_exact",
            direction: Direction::Exact,
            value: BoundValue::Edges((n * (n - 1) / 2) as i64),
            applicability: Applicability::Valid,
        });
    }
    if d == 2 {
        let fl = ilog2_floor(n) as i64;
        let value = (n as i64 + 1) * fl - (1i64 << fl) - 2;
        entries.push(BoundEntry {
            name: "two_color_upper",
            direction: Direction::Upper,
            value: BoundValue::Edges(value),
            applicability: Applicability::Valid,
        });
    }
    if d == 3 {
        entries.push(BoundEntry {
            name: "three_color_upper",
            direction: Direction::Upper,
            value: BoundValue::Edges(2 * n as i64 - 5),
            applicability: Applicability::Valid,
        });
    }
    if d >= 4 && 2 * d < n - 1 {
        entries.push(BoundEntry {
            name: "general_upper",
            direction: Direction::Upper,
            value: BoundValue::Edges((n - 1 + ceil_div(n - 2, d - 2)) as i64),
            applicability: Applicability::Valid,
        });
    }
    if n <= 2 * d && d <= n - 2 {
        entries.push(BoundEntry {
            name: "midrange_exact",
            direction: Direction::Exact,
            value: BoundValue::Edges(n as i64),
            applicability: Applicability::Valid,
        });
    }
    if d == n - 1 {
        entries.push(BoundEntry {
            name: "tree_exact",
            direction: Direction::Exact,
            value: BoundValue::Edges(n as i64 - 1),
            applicability: Applicability::Valid,
        });
    }
    Ok(entries)
}

fn ilog2_floor(n: usize) -> u32 {
    usize::BITS - 1 - n.leading_zeros()
}

/// Value and vacuity of the asymptotic lower bound for `t(n,2)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AsymptoticLower {
    pub value: f64,
    /// Below the trivial floor `n - 1`; the bound only bites for very
    /// large `n`.
    pub vacuous: bool,
}

/// `n*log2(n) - 4n*log2(log2(n)) - 2n`, the asymptotic lower bound for
/// `t(n,2)`, flagged vacuous when below the connected floor `n - 1`.
pub fn t2_asymptotic_lower(n: usize) -> Result<AsymptoticLower, BoundsError> {
    if n < 4 {
        return Err(BoundsError::NOutOfRange { n, min: 4 });
    }
    let nf = n as f64;
    let log_n = libm::log2(nf);
    let value = nf * log_n - 4.0 * nf * libm::log2(log_n) - 2.0 * nf;
    Ok(AsymptoticLower {
        value,
        vacuous: value < (n - 1) as f64,
    })
}

/// Lower bound `n - d - 3 + ceil((n-1)/d)` for `3 <= d < ceil(n/2)`, from
/// deleting bridges and bounding each leftover component.
pub fn decomposition_lower(n: usize, d: usize) -> Result<u64, BoundsError> {
    if d < 3 || d >= ceil_div(n, 2) {
        return Err(BoundsError::DOutOfRange { n, d });
    }
    Ok((n - d - 3 + ceil_div(n - 1, d)) as u64)
}

/// Upper bound `n - 2 + ceil(n/(d-1))` for `3 <= d < ceil(n/2)`, achieved
/// by the cycle bouquet.
pub fn construction_upper(n: usize, d: usize) -> Result<u64, BoundsError> {
    if d < 3 || d >= ceil_div(n, 2) {
        return Err(BoundsError::DOutOfRange { n, d });
    }
    Ok((n - 2 + ceil_div(n, d - 1)) as u64)
}

/// Minimum edges of a 2-edge-connected graph of order `n` and diameter
/// `p >= 2`: `ceil((np - (2p+1))/(p-1))` for odd `p`, and additionally
/// capped by `ceil((n-1)(p+1)/p)` for even `p`.
pub fn jarry_laugier_min_edges(n: usize, p: usize) -> Result<u64, BoundsError> {
    if n < 3 {
        return Err(BoundsError::NOutOfRange { n, min: 3 });
    }
    if p < 2 {
        return Err(BoundsError::POutOfRange { p });
    }
    let a = ceil_div(n * p - (2 * p + 1), p - 1) as u64;
    if p % 2 == 1 {
        Ok(a)
    } else {
        let b = ceil_div((n - 1) * (p + 1), p) as u64;
        Ok(a.min(b))
    }
}

/// The relaxed form `n - 2 + ceil((n-2)/p)`; never exceeds
/// [`jarry_laugier_min_edges`].
pub fn jarry_laugier_relaxed(n: usize, p: usize) -> Result<u64, BoundsError> {
    if n < 3 {
        return Err(BoundsError::NOutOfRange { n, min: 3 });
    }
    if p < 2 {
        return Err(BoundsError::POutOfRange { p });
    }
    Ok((n - 2 + ceil_div(n - 2, p)) as u64)
}

/// `ceil(sqrt(n-1))`: the smallest maximum degree a 2-rainbow-connected
/// graph of order `n` can have (a diameter-2 ball must cover all vertices).
pub fn two_rainbow_min_max_degree(n: usize) -> Result<u64, BoundsError> {
    if n < 2 {
        return Err(BoundsError::NOutOfRange { n, min: 2 });
    }
    let target = (n - 1) as u64;
    let mut s = libm::sqrt(target as f64) as u64;
    while s * s >= target && s > 0 {
        s -= 1;
    }
    while s * s < target {
        s += 1;
    }
    Ok(s)
}

/// Result of checking a computed `t(n,d)` against the applicable bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SandwichOutcome {
    /// An exact clause applies at this `(n, d)`.
    Exact {
        clause: &'static str,
        expected: u64,
        pass: bool,
    },
    /// The sandwich range: `lower <= t <= upper` with
    /// `lower = max(n-1, decomposition bound)` and `upper` the best
    /// applicable upper bound.
    Interval { lower: u64, upper: u64, pass: bool },
}

impl SandwichOutcome {
    pub fn pass(&self) -> bool {
        match self {
            SandwichOutcome::Exact { pass, .. } => *pass,
            SandwichOutcome::Interval { pass, .. } => *pass,
        }
    }
}

/// Checks a computed `t(n,d)` value: exact clauses where they apply, the
/// lower/upper sandwich for `3 <= d < ceil(n/2)`. `d = 2` with `n >= 5` has
/// no finite two-sided check and is a range error.
pub fn sandwich_check(n: usize, d: usize, t_value: u64) -> Result<SandwichOutcome, BoundsError> {
    if n < 2 {
        return Err(BoundsError::NOutOfRange { n, min: 2 });
    }
    if d < 1 || d > n - 1 {
        return Err(BoundsError::DOutOfRange { n, d });
    }
    if d == 1 {
        let expected = (n * (n - 1) / 2) as u64;
        return Ok(SandwichOutcome::Exact {
            clause: "complete_exact",
            expected,
            pass: t_value == expected,
        });
    }
    if d == n - 1 {
        let expected = (n - 1) as u64;
        return Ok(SandwichOutcome::Exact {
            clause: "tree_exact",
            expected,
            pass: t_value == expected,
        });
    }
    if n <= 2 * d && d <= n - 2 {
        let expected = n as u64;
        return Ok(SandwichOutcome::Exact {
            clause: "midrange_exact",
            expected,
            pass: t_value == expected,
        });
    }
    if d >= 3 && d < ceil_div(n, 2) {
        let lower = ((n - 1) as u64).max(decomposition_lower(n, d)?);
        let mut upper = construction_upper(n, d)?;
        for entry in schiermeyer_bounds(n, d)? {
            if entry.direction == Direction::Upper {
                if let BoundValue::Edges(v) = entry.value {
                    if v >= 0 {
                        upper = upper.min(v as u64);
                    }
                }
            }
        }
        return Ok(SandwichOutcome::Interval {
            lower,
            upper,
            pass: lower <= t_value && t_value <= upper,
        });
    }
    Err(BoundsError::DOutOfRange { n, d })
}

/// Evaluates every bound at `(n, d)`, marking each entry valid, vacuous,
/// or out of range.
pub fn bound_report(n: usize, d: usize) -> Result<BoundReport, BoundsError> {
    if n < 2 {
        return Err(BoundsError::NOutOfRange { n, min: 2 });
    }
    if d < 1 || d > n - 1 {
        return Err(BoundsError::DOutOfRange { n, d });
    }
    let mut entries = Vec::new();
    entries.push(BoundEntry {
        name: "connected_floor",
        direction: Direction::Lower,
        value: BoundValue::Edges((n - 1) as i64),
        applicability: Applicability::Valid,
    });
    entries.extend(schiermeyer_bounds(n, d)?);
    if d == 2 {
        match t2_asymptotic_lower(n) {
            Ok(asym) => entries.push(BoundEntry {
                name: "asymptotic_two_color_lower",
                direction: Direction::Lower,
                value: BoundValue::Real(asym.value),
                applicability: if asym.vacuous {
                    Applicability::Vacuous
                } else {
                    Applicability::Valid
                },
            }),
            Err(_) => entries.push(BoundEntry {
                name: "asymptotic_two_color_lower",
                direction: Direction::Lower,
                value: BoundValue::Real(f64::NEG_INFINITY),
                applicability: Applicability::OutOfRange,
            }),
        }
    }
    match decomposition_lower(n, d) {
        Ok(v) => entries.push(BoundEntry {
            name: "decomposition_lower",
            direction: Direction::Lower,
            value: BoundValue::Edges(v as i64),
            applicability: if v < (n - 1) as u64 {
                Applicability::Vacuous
            } else {
                Applicability::Valid
            },
        }),
        Err(_) => entries.push(BoundEntry {
            name: "decomposition_lower",
            direction: Direction::Lower,
            value: BoundValue::Edges(0),
            applicability: Applicability::OutOfRange,
        }),
    }
    match construction_upper(n, d) {
        Ok(v) => entries.push(BoundEntry {
            name: "construction_upper",
            direction: Direction::Upper,
            value: BoundValue::Edges(v as i64),
            applicability: Applicability::Valid,
        }),
        Err(_) => entries.push(BoundEntry {
            name: "construction_upper",
            direction: Direction::Upper,
            value: BoundValue::Edges(0),
            applicability: Applicability::OutOfRange,
        }),
    }
    Ok(BoundReport { n, d, entries })
}

/// Per-component check within [`DecompositionReport`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentCheck {
    pub order: usize,
    pub diameter: usize,
    pub edges: usize,
    /// Trivial, complete of order >= 3, or 2-edge-connected with
    /// diameter >= 2.
    pub class_ok: bool,
    /// Component diameter at most `d`.
    pub diameter_ok: bool,
    /// `edges >= order - 2 + ceil((order-2)/diameter)` for non-trivial
    /// components.
    pub min_edges_ok: bool,
}

/// Structural facts behind the decomposition lower bound, checked on one
/// graph with certified `rc <= d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub bridge_count: usize,
    /// `bridge_count <= d`.
    pub bridge_count_ok: bool,
    pub components: Vec<ComponentCheck>,
    /// Total edges vs `bridges + sum of per-component minimums` using each
    /// component's own diameter.
    pub chain_lhs: usize,
    pub chain_rhs_own_diameter: usize,
    /// Same sum with every component diameter relaxed to `d`.
    pub chain_rhs_relaxed: usize,
}

impl DecompositionReport {
    pub fn chain_ok(&self) -> bool {
        self.chain_lhs >= self.chain_rhs_own_diameter && self.chain_lhs >= self.chain_rhs_relaxed
    }

    pub fn all_ok(&self) -> bool {
        self.bridge_count_ok
            && self.chain_ok()
            && self
                .components
                .iter()
                .all(|c| c.class_ok && c.diameter_ok && c.min_edges_ok)
    }
}

/// Verifies the structural claims behind the decomposition lower bound on a
/// graph with `rc <= d`, certified by `witness`: at most `d` bridges; every
/// non-trivial post-deletion component either complete of order >= 3 or
/// 2-edge-connected with diameter >= 2; component diameters at most `d`;
/// and the edge-count chain with both the per-component and the relaxed
/// diameter.
pub fn decomposition_check(
    g: &Graph,
    d: usize,
    witness: &EdgeColoring,
) -> Result<DecompositionReport, BoundsError> {
    let used = witness.colors_used();
    if used > d {
        return Err(BoundsError::NotCertified(NotCertified::TooManyColors {
            used,
            d,
        }));
    }
    match is_rainbow_connected(g, witness) {
        Ok(ConnectivityCheck::RainbowConnected(_)) => {}
        Ok(ConnectivityCheck::Obstructed { pair }) => {
            return Err(BoundsError::NotCertified(
                NotCertified::NotRainbowConnected { pair },
            ));
        }
        Err(e) => return Err(BoundsError::NotCertified(NotCertified::Verify(e))),
    }
    let dec = g.bridge_decomposition().map_err(BoundsError::Graph)?;
    Ok(decomposition_report(g, d, &dec))
}

fn decomposition_report(g: &Graph, d: usize, dec: &BridgeDecomposition) -> DecompositionReport {
    let k = dec.bridge_count();
    let mut components = Vec::with_capacity(dec.components.len());
    let mut rhs_own = k;
    let mut rhs_relaxed = k;
    for comp in &dec.components {
        let order = comp.order();
        let (class_ok, min_edges_ok) = if comp.is_trivial() {
            (true, true)
        } else {
            let class_ok = (comp.complete && order >= 3) || (comp.bridgeless && comp.diameter >= 2);
            let own = order - 2 + ceil_div(order - 2, comp.diameter.max(1));
            let relaxed = order - 2 + ceil_div(order - 2, d.max(1));
            rhs_own += own;
            rhs_relaxed += relaxed;
            (class_ok, comp.edge_count >= own)
        };
        components.push(ComponentCheck {
            order,
            diameter: comp.diameter,
            edges: comp.edge_count,
            class_ok,
            diameter_ok: comp.diameter <= d,
            min_edges_ok,
        });
    }
    DecompositionReport {
        bridge_count: k,
        bridge_count_ok: k <= d,
        components,
        chain_lhs: g.edge_count(),
        chain_rhs_own_diameter: rhs_own,
        chain_rhs_relaxed: rhs_relaxed,
    }
}
