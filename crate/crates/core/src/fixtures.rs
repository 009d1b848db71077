//! Built-in fixtures: the thirteen elliptic-curve potentials with their
//! group orders and transposition pairing, and the curve/surface pair of
//! the worked example. Embedded as data so the test suite and the
//! command-line tool share one source of truth.

use std::sync::OnceLock;

use crate::delsarte::DelsartePolynomial;
use crate::error::{Error, Result};
use crate::parse;

const TABLE_DATA: &str = include_str!("../data/elliptic_table.txt");
const EXAMPLE_DATA: &str = include_str!("../data/worked_example.txt");

/// One row of the elliptic-curve table.
#[derive(Debug, Clone)]
pub struct EllipticTableRow {
    pub index: usize,
    pub weights: [i64; 3],
    pub potential: DelsartePolynomial,
    pub sl_order: u64,
    pub sl_tilde_order: u64,
    /// Index (1-based) of the row whose potential is the transpose of this
    /// one up to permutation of variables. An involution on 1..=13.
    pub mirror_index: usize,
}

/// The thirteen elliptic potentials.
pub fn elliptic_table() -> &'static [EllipticTableRow] {
    static TABLE: OnceLock<Vec<EllipticTableRow>> = OnceLock::new();
    TABLE.get_or_init(|| parse_table(TABLE_DATA).expect("embedded table is well-formed"))
}

fn parse_table(data: &str) -> Result<Vec<EllipticTableRow>> {
    let mut rows = Vec::new();
    for line in data.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 6 {
            return Err(Error::Internal(format!(
                "table row `{line}` has {} fields",
                fields.len()
            )));
        }
        let index: usize = fields[0]
            .parse()
            .map_err(|_| Error::Internal(format!("bad index in `{line}`")))?;
        let weight_parts: Vec<i64> = fields[1]
            .split(',')
            .map(|w| w.parse())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Internal(format!("bad weights in `{line}`")))?;
        let weights: [i64; 3] = weight_parts
            .try_into()
            .map_err(|_| Error::Internal(format!("expected 3 weights in `{line}`")))?;
        let vars: Vec<String> = ["x0", "x1", "x2"].iter().map(|s| s.to_string()).collect();
        let potential = parse::parse_with_variables(fields[2], &vars)?.polynomial;
        let sl_order = fields[3]
            .parse()
            .map_err(|_| Error::Internal(format!("bad sl order in `{line}`")))?;
        let sl_tilde_order = fields[4]
            .parse()
            .map_err(|_| Error::Internal(format!("bad quotient order in `{line}`")))?;
        let mirror_index = fields[5]
            .parse()
            .map_err(|_| Error::Internal(format!("bad mirror index in `{line}`")))?;
        rows.push(EllipticTableRow {
            index,
            weights,
            potential,
            sl_order,
            sl_tilde_order,
            mirror_index,
        });
    }
    Ok(rows)
}

/// The curve and surface of the worked example.
#[derive(Debug, Clone)]
pub struct WorkedExample {
    pub curve: DelsartePolynomial,
    pub surface: DelsartePolynomial,
}

pub fn worked_example() -> &'static WorkedExample {
    static EXAMPLE: OnceLock<WorkedExample> = OnceLock::new();
    EXAMPLE.get_or_init(|| {
        let mut curve = None;
        let mut surface = None;
        for line in EXAMPLE_DATA.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (role, text) = line.split_once(char::is_whitespace).expect("role and text");
            let vars: Vec<String> = match role {
                "curve" => ["x0", "x1", "x2"].iter().map(|s| s.to_string()).collect(),
                _ => ["y0", "y1", "y2", "y3"]
                    .iter()
                    .map(|s| s.to_string())
                    .collect(),
            };
            let poly = parse::parse_with_variables(text.trim(), &vars)
                .expect("embedded example is well-formed")
                .polynomial;
            match role {
                "curve" => curve = Some(poly),
                "surface" => surface = Some(poly),
                other => panic!("unknown fixture role {other}"),
            }
        }
        WorkedExample {
            curve: curve.expect("curve fixture present"),
            surface: surface.expect("surface fixture present"),
        }
    })
}
