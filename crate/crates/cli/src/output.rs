//! Serializable shapes for JSON output and the CSV writer.

use parity_descents::verify::{CheckRecord, VerificationReport};
use parity_descents::{BivariatePolynomial, Family};
use serde::Serialize;

#[derive(Serialize)]
pub struct CoefficientDoc {
    pub z: u32,
    pub x: u32,
    /// Decimal string; values quickly outgrow 64 bits.
    pub value: String,
}

#[derive(Serialize)]
pub struct TableDoc {
    pub family: String,
    pub n: usize,
    pub coefficients: Vec<CoefficientDoc>,
}

impl TableDoc {
    pub fn new(family: Family, n: usize, poly: &BivariatePolynomial) -> Self {
        TableDoc {
            family: family.to_string(),
            n,
            coefficients: poly
                .terms()
                .map(|((z, x), v)| CoefficientDoc {
                    z,
                    x,
                    value: v.to_string(),
                })
                .collect(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("z,x,value\n");
        for c in &self.coefficients {
            out.push_str(&format!("{},{},{}\n", c.z, c.x, c.value));
        }
        out
    }
}

#[derive(Serialize)]
pub struct RecordDoc<'a> {
    pub identity: &'a str,
    pub n: Option<usize>,
    pub status: String,
    pub left: &'a str,
    pub right: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'a str>,
}

#[derive(Serialize)]
pub struct ReportDoc<'a> {
    pub suite: &'a str,
    pub passed: bool,
    pub records: Vec<RecordDoc<'a>>,
}

impl<'a> From<&'a CheckRecord> for RecordDoc<'a> {
    fn from(r: &'a CheckRecord) -> Self {
        RecordDoc {
            identity: &r.identity,
            n: r.n,
            status: r.status.to_string(),
            left: &r.left,
            right: &r.right,
            note: r.note.as_deref(),
        }
    }
}

impl<'a> From<&'a VerificationReport> for ReportDoc<'a> {
    fn from(r: &'a VerificationReport) -> Self {
        ReportDoc {
            suite: &r.suite,
            passed: r.passed(),
            records: r.records.iter().map(RecordDoc::from).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct PairDoc {
    pub from: String,
    pub to: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tag: Option<String>,
}

#[derive(Serialize)]
pub struct BijectionDoc {
    pub name: String,
    pub n: usize,
    pub pairs: Vec<PairDoc>,
}
