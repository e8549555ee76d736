//! Machine-readable records and table rendering for `t(n,d)` results.

use crate::formats::write_coloring;
use rainbow_core::bounds::SandwichOutcome;
use rainbow_core::extremal::{ExtremalResult, TableCell, TierTally};
use rainbow_core::graph6;
use serde::Serialize;

/// Schema version for all JSON outputs.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct TierRecord {
    pub m: usize,
    pub classes: u64,
    pub filtered_diameter: u64,
    pub filtered_bridges: u64,
    pub filtered_degree: u64,
    pub searched: u64,
    pub feasible_index: Option<usize>,
}

impl From<&TierTally> for TierRecord {
    fn from(t: &TierTally) -> Self {
        TierRecord {
            m: t.m,
            classes: t.classes,
            filtered_diameter: t.filtered_diameter,
            filtered_bridges: t.filtered_bridges,
            filtered_degree: t.filtered_degree,
            searched: t.searched,
            feasible_index: t.feasible_index,
        }
    }
}

/// One computed `t(n,d)` value with its witness and scan tallies.
#[derive(Clone, Debug, Serialize)]
pub struct TndRecord {
    pub schema: u32,
    pub n: usize,
    pub d: usize,
    pub t: usize,
    pub witness_graph6: String,
    /// Witness coloring in the coloring file format.
    pub witness_coloring: String,
    pub graphs_tested: u64,
    pub tallies: Vec<TierRecord>,
}

impl From<&ExtremalResult> for TndRecord {
    fn from(res: &ExtremalResult) -> Self {
        TndRecord {
            schema: SCHEMA_VERSION,
            n: res.n,
            d: res.d,
            t: res.t_value,
            witness_graph6: graph6::encode(&res.witness_graph),
            witness_coloring: write_coloring(&res.witness_coloring),
            graphs_tested: res.graphs_tested,
            tallies: res.tallies.iter().map(TierRecord::from).collect(),
        }
    }
}

/// Serializes any schema-bearing record as pretty JSON with a trailing
/// newline (stable field order, reproducible byte-for-byte).
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

#[derive(Clone, Debug, Serialize)]
pub struct CellRecord {
    pub n: usize,
    pub d: usize,
    pub t: Option<usize>,
    pub lower: Option<u64>,
    pub upper: Option<u64>,
    pub gap_lower: Option<i64>,
    pub gap_upper: Option<i64>,
    pub status: String,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableRecord {
    pub schema: u32,
    pub cells: Vec<CellRecord>,
}

fn cell_status(cell: &TableCell) -> String {
    if let Some(err) = &cell.error {
        return format!("error: {err}");
    }
    match &cell.sandwich {
        Some(SandwichOutcome::Exact {
            clause,
            expected,
            pass,
        }) => {
            if *pass {
                format!("exact:{clause}={expected}")
            } else {
                format!("VIOLATION exact:{clause}={expected}")
            }
        }
        Some(SandwichOutcome::Interval { lower, upper, pass }) => {
            let t = cell.t.expect("interval implies value");
            if !*pass {
                format!("VIOLATION bounds [{lower}, {upper}]")
            } else if (t as u64) == *lower && (t as u64) == *upper {
                "tight".into()
            } else if (t as u64) == *lower {
                "meets-lower".into()
            } else if (t as u64) == *upper {
                "meets-upper".into()
            } else {
                "strictly-between".into()
            }
        }
        None => "n/a".into(),
    }
}

fn cell_record(cell: &TableCell) -> CellRecord {
    let (lower, upper) = match &cell.sandwich {
        Some(SandwichOutcome::Interval { lower, upper, .. }) => (Some(*lower), Some(*upper)),
        Some(SandwichOutcome::Exact { expected, .. }) => (Some(*expected), Some(*expected)),
        None => (cell.lower, cell.upper),
    };
    let t = cell.t;
    CellRecord {
        n: cell.n,
        d: cell.d,
        t,
        lower,
        upper,
        gap_lower: match (t, lower) {
            (Some(t), Some(lo)) => Some(t as i64 - lo as i64),
            _ => None,
        },
        gap_upper: match (t, upper) {
            (Some(t), Some(up)) => Some(up as i64 - t as i64),
            _ => None,
        },
        status: cell_status(cell),
        error: cell.error.clone(),
    }
}

/// Table as JSON.
pub fn table_json(cells: &[TableCell]) -> String {
    to_json(&TableRecord {
        schema: SCHEMA_VERSION,
        cells: cells.iter().map(cell_record).collect(),
    })
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(T::to_string).unwrap_or_default()
}

/// Table as CSV (header row included).
pub fn table_csv(cells: &[TableCell]) -> String {
    let mut out = String::from("n,d,t,lower,upper,gap_lower,gap_upper,status\n");
    for cell in cells {
        let r = cell_record(cell);
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            r.n,
            r.d,
            opt(&r.t),
            opt(&r.lower),
            opt(&r.upper),
            opt(&r.gap_lower),
            opt(&r.gap_upper),
            r.status
        ));
    }
    out
}

/// Table as a Markdown grid; the gap columns make bound tightness visible.
pub fn table_markdown(cells: &[TableCell]) -> String {
    let mut out = String::from(
        "| n | d | t(n,d) | lower | upper | t-lower | upper-t | status |\n\
         |---|---|--------|-------|-------|---------|---------|--------|\n",
    );
    for cell in cells {
        let r = cell_record(cell);
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} | {} | {} |\n",
            r.n,
            r.d,
            opt(&r.t),
            opt(&r.lower),
            opt(&r.upper),
            opt(&r.gap_lower),
            opt(&r.gap_upper),
            r.status
        ));
    }
    out
}
