//! Row-by-row reproduction of the Jaco degree and irregularity tables.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fibonacci::FibCache;
use crate::irregularity::Metric;
use crate::jaco::build_profile;

/// Published irr_t(J*_i) for i = 1..=12.
pub const REFERENCE_IRR: [u64; 12] = [0, 0, 2, 4, 8, 14, 26, 42, 60, 86, 116, 149];
/// Published firr_t(J*_i) for i = 1..=12.
pub const REFERENCE_FIRR: [u64; 12] = [0, 0, 0, 0, 4, 9, 20, 54, 70, 133, 224, 322];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TableKind {
    Irr,
    Firr,
}

impl TableKind {
    pub fn metric(self) -> Metric {
        match self {
            TableKind::Irr => Metric::Total,
            TableKind::Firr => Metric::Fibonacci,
        }
    }

    pub fn reference(self, i: usize) -> Option<u64> {
        let table = match self {
            TableKind::Irr => &REFERENCE_IRR,
            TableKind::Firr => &REFERENCE_FIRR,
        };
        i.checked_sub(1).and_then(|idx| table.get(idx)).copied()
    }

    fn value_header(self) -> &'static str {
        match self {
            TableKind::Irr => "irr_t",
            TableKind::Firr => "firr_t",
        }
    }
}

impl FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "irr" => Ok(TableKind::Irr),
            "firr" => Ok(TableKind::Firr),
            _ => Err(Error::Parse(format!("unknown table kind {s:?}"))),
        }
    }
}

fn compact_number<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v.to_u64() {
        Some(x) => s.serialize_u64(x),
        None => s.collect_str(v),
    }
}

fn compact_numbers<S: Serializer>(v: &[BigUint], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    #[derive(Serialize)]
    struct Item<'a>(#[serde(serialize_with = "compact_number")] &'a BigUint);
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&Item(x))?;
    }
    seq.end()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub i: usize,
    pub in_degree: usize,
    pub out_degree: usize,
    /// Degrees (irr table) or Fibonacci weights (firr table) of `J*_i`.
    #[serde(serialize_with = "compact_numbers")]
    pub sequence: Vec<BigUint>,
    #[serde(serialize_with = "compact_number")]
    pub value: BigUint,
    /// Published value, when one exists for this row.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reference: Option<u64>,
    /// Computed value differs from the published one.
    pub diverges: bool,
}

impl TableRow {
    fn note(&self) -> String {
        match self.reference {
            Some(r) if self.diverges => format!("published {r}"),
            _ => String::new(),
        }
    }
}

pub fn table_rows(kind: TableKind, n_max: usize) -> Result<Vec<TableRow>> {
    let profile = build_profile(n_max)?;
    let mut fib = FibCache::up_to(n_max);
    let metric = kind.metric();
    Ok((1..=n_max)
        .map(|i| {
            let degrees = profile.finite_degrees(i);
            let sequence = degrees
                .iter()
                .map(|d| match kind {
                    TableKind::Irr => BigUint::from(d),
                    TableKind::Firr => fib.weight(d),
                })
                .collect();
            let value = metric.evaluate(&degrees).value;
            let reference = kind.reference(i);
            let diverges = reference.is_some_and(|r| value != BigUint::from(r));
            TableRow {
                i,
                in_degree: profile.in_degree(i),
                out_degree: profile.out_degree(i),
                sequence,
                value,
                reference,
                diverges,
            }
        })
        .collect())
}

fn joined(seq: &[BigUint], sep: &str) -> String {
    seq.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

pub fn render_csv(kind: TableKind, rows: &[TableRow]) -> String {
    let mut out = format!("i,in_degree,out_degree,sequence,{},note\n", kind.value_header());
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},[{}],{},{}",
            r.i,
            r.in_degree,
            r.out_degree,
            joined(&r.sequence, ";"),
            r.value,
            r.note().replace(' ', "=")
        );
    }
    out
}

pub fn render_json(rows: &[TableRow]) -> String {
    serde_json::to_string_pretty(rows).expect("table json")
}

pub fn render_text(kind: TableKind, rows: &[TableRow]) -> String {
    let seqs: Vec<String> = rows
        .iter()
        .map(|r| format!("({})", joined(&r.sequence, ", ")))
        .collect();
    let values: Vec<String> = rows.iter().map(|r| r.value.to_string()).collect();
    let iw = rows.last().map_or(1, |r| r.i.to_string().len()).max(1);
    let sw = seqs.iter().map(String::len).max().unwrap_or(0).max(8);
    let vw = values
        .iter()
        .map(String::len)
        .max()
        .unwrap_or(0)
        .max(kind.value_header().len());
    let dw = rows
        .last()
        .map_or(2, |r| r.out_degree.to_string().len())
        .max(2);

    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>iw$}  {:>dw$}  {:>dw$}  {:<sw$}  {:>vw$}",
        "i",
        "d-",
        "d+",
        "sequence",
        kind.value_header()
    );
    for ((r, s), v) in rows.iter().zip(&seqs).zip(&values) {
        let line = format!(
            "{:>iw$}  {:>dw$}  {:>dw$}  {:<sw$}  {:>vw$}  {}",
            r.i,
            r.in_degree,
            r.out_degree,
            s,
            v,
            r.note()
        );
        let _ = writeln!(out, "{}", line.trim_end());
    }
    out
}
