//! Report records: one line per check, in JSONL or CSV.
//!
//! Key order is part of the format: `type, id, p, params, modulus, lhs,
//! rhs, pass, micros`. Residues are serialized as decimal strings so
//! consumers never have to guess integer widths. Default runs write
//! `micros: 0` to keep report files byte-deterministic; real timings are
//! opt-in (`--timings`) and documented as breaking byte-for-byte equality
//! between runs.

use std::collections::BTreeMap;
use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde::Serialize;

use tricon::claims::{Params, VerifyResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Jsonl,
    Csv,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq, PartialOrd, Ord)]
#[serde(untagged)]
pub enum ParamValue {
    Int(i64),
    /// Rational parameters (the certificate's `m`, the integral identity's
    /// `t`) as their canonical `num/den` rendering.
    Ratio(String),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::Ratio(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Record {
    #[serde(rename = "type")]
    pub kind: &'static str,
    pub id: String,
    pub p: Option<u64>,
    pub params: BTreeMap<String, ParamValue>,
    pub modulus: Option<String>,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub pass: bool,
    pub micros: u64,
}

pub fn params_map(params: &Params) -> BTreeMap<String, ParamValue> {
    let mut map = BTreeMap::new();
    match params {
        Params::None => {}
        Params::M(m) => {
            map.insert("m".into(), ParamValue::Int(*m));
        }
        Params::Index { n, b, c } => {
            map.insert("b".into(), ParamValue::Int(*b));
            map.insert("c".into(), ParamValue::Int(*c));
            map.insert("n".into(), ParamValue::Int(*n as i64));
        }
    }
    map
}

pub fn congruence_record(r: &VerifyResult, timings: bool) -> Record {
    Record {
        kind: "congruence",
        id: r.claim_id.to_string(),
        p: r.p,
        params: params_map(&r.params),
        modulus: Some(format!("{}^{}", r.modulus_base, r.modulus_exponent)),
        lhs: r.lhs.map(|v| v.to_string()),
        rhs: r.rhs.map(|v| v.to_string()),
        pass: r.pass,
        micros: if timings { r.elapsed_micros } else { 0 },
    }
}

pub fn identity_record(
    id: &str,
    params: BTreeMap<String, ParamValue>,
    pass: bool,
    micros: u64,
) -> Record {
    Record {
        kind: "identity",
        id: id.to_string(),
        p: None,
        params,
        modulus: None,
        lhs: None,
        rhs: None,
        pass,
        micros,
    }
}

pub fn oracle_record(
    r: &VerifyResult,
    oracle_value: Option<u128>,
    timings: bool,
) -> Record {
    let pass = match (r.lhs, oracle_value) {
        (Some(a), Some(b)) => a == b,
        _ => false,
    };
    Record {
        kind: "oracle",
        id: r.claim_id.to_string(),
        p: r.p,
        params: params_map(&r.params),
        modulus: Some(format!("{}^{}", r.modulus_base, r.modulus_exponent)),
        lhs: r.lhs.map(|v| v.to_string()),
        rhs: oracle_value.map(|v| v.to_string()),
        pass,
        micros: if timings { r.elapsed_micros } else { 0 },
    }
}

pub fn jsonl_line(record: &Record) -> String {
    let mut line = serde_json::to_string(record).expect("records serialize");
    line.push('\n');
    line
}

pub fn csv_header() -> &'static str {
    "type,id,p,params,modulus,lhs,rhs,pass,micros\n"
}

pub fn csv_line(record: &Record) -> String {
    let params = record
        .params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";");
    let opt = |v: &Option<String>| v.clone().unwrap_or_default();
    format!(
        "{},{},{},{},{},{},{},{},{}\n",
        record.kind,
        record.id,
        record.p.map(|p| p.to_string()).unwrap_or_default(),
        params,
        opt(&record.modulus),
        opt(&record.lhs),
        opt(&record.rhs),
        record.pass,
        record.micros
    )
}

/// Write all records, one fully-formed line per write so an interrupted run
/// never leaves a partial line.
pub fn write_records(
    records: &[Record],
    format: Format,
    out: Option<&Path>,
) -> io::Result<()> {
    let mut sink: Box<dyn Write> = match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(io::stdout().lock()),
    };
    if format == Format::Csv {
        sink.write_all(csv_header().as_bytes())?;
    }
    for record in records {
        let line = match format {
            Format::Jsonl => jsonl_line(record),
            Format::Csv => csv_line(record),
        };
        sink.write_all(line.as_bytes())?;
        sink.flush()?;
    }
    Ok(())
}

/// The serialized report as a byte string (used by the determinism checks).
pub fn render(records: &[Record], format: Format) -> Vec<u8> {
    let mut buf = Vec::new();
    if format == Format::Csv {
        buf.extend_from_slice(csv_header().as_bytes());
    }
    for record in records {
        let line = match format {
            Format::Jsonl => jsonl_line(record),
            Format::Csv => csv_line(record),
        };
        buf.extend_from_slice(line.as_bytes());
    }
    buf
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Record {
        Record {
            kind: "congruence",
            id: "thm1".into(),
            p: Some(5),
            params: BTreeMap::new(),
            modulus: Some("5^2".into()),
            lhs: Some("4".into()),
            rhs: Some("4".into()),
            pass: true,
            micros: 0,
        }
    }

    #[test]
    fn jsonl_key_order_is_fixed() {
        let line = jsonl_line(&sample());
        assert_eq!(
            line,
            "{\"type\":\"congruence\",\"id\":\"thm1\",\"p\":5,\"params\":{},\"modulus\":\"5^2\",\"lhs\":\"4\",\"rhs\":\"4\",\"pass\":true,\"micros\":0}\n"
        );
    }

    #[test]
    fn csv_flattens_params() {
        let mut r = sample();
        r.id = "thm3".into();
        r.params.insert("m".into(), ParamValue::Int(-3));
        assert_eq!(csv_line(&r), "congruence,thm3,5,m=-3,5^2,4,4,true,0\n");
        let mut r = sample();
        r.kind = "identity";
        r.p = None;
        r.modulus = None;
        r.lhs = None;
        r.rhs = None;
        r.params.insert("n".into(), ParamValue::Int(2));
        r.params.insert("t".into(), ParamValue::Ratio("-4/3".into()));
        assert_eq!(csv_line(&r), "identity,thm1,,n=2;t=-4/3,,,,true,0\n");
    }
}
