//! Output records and encoders. Complex values are split into `_re`/`_im`
//! fields because CSV has no complex type; JSON mirrors the same layout.

use serde::Serialize;

#[derive(Serialize, Debug, Clone)]
pub struct IntegrateRecord {
    pub value_re: f64,
    pub value_im: f64,
    pub algorithm: String,
    pub n_used: usize,
    pub evaluations: usize,
    pub certified_bound: f64,
    pub reference_re: f64,
    pub reference_im: f64,
    pub reference_gap: f64,
}

#[derive(Serialize, Debug, Clone)]
pub struct ErrorRecord {
    pub kind: String,
    pub value: f64,
    pub report_kind: String,
    pub truncation_terms: usize,
    pub tail_bound: f64,
    pub provenance: String,
}

#[derive(Serialize, Debug, Clone)]
pub struct ComplexityRecord {
    pub lower: u64,
    pub upper: u64,
    pub achieved: u64,
    pub zero_case: bool,
}

/// Serialized lower-bound certificate (the `f_label` re-parses through the
/// function mini-language up to the normalizing scale factor).
#[derive(Serialize, Debug, Clone)]
pub struct CertificateRecord {
    pub k: i64,
    pub s: u32,
    pub n_samples: usize,
    pub norm_hs: f64,
    pub integral_abs: f64,
    pub sample_residuals: f64,
    pub bound_value: f64,
    pub rescale: f64,
    pub valid: bool,
    pub f_label: String,
}

/// Verification report: the pass/fail table plus any certificates produced.
#[derive(Serialize, Debug, Clone)]
pub struct VerifyReport {
    pub checks: Vec<CheckRecord>,
    pub certificates: Vec<CertificateRecord>,
    pub passed: usize,
    pub failed: usize,
    pub elapsed_seconds: f64,
}

#[derive(Serialize, Debug, Clone)]
pub struct CheckRecord {
    pub suite: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// One row of the `curve` sweep.
#[derive(Serialize, Debug, Clone)]
pub struct CurveRow {
    pub n: u64,
    pub k: i64,
    pub s: u32,
    pub exact_qmc: f64,
    pub star_exact: f64,
    pub per_bound: f64,
    pub tayper_bound: f64,
    pub lower_bound: f64,
    pub upper_bound: f64,
}

pub const CURVE_HEADER: &str = "n,k,s,exact_qmc,star_exact,per_bound,tayper_bound,lower_bound,upper_bound";

impl CurveRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.n,
            self.k,
            self.s,
            self.exact_qmc,
            self.star_exact,
            self.per_bound,
            self.tayper_bound,
            self.lower_bound,
            self.upper_bound
        )
    }
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("records serialize")
}

/// Single-record CSV: one header line, one row, fields in declaration order.
pub trait RecordCsv {
    fn csv_header(&self) -> &'static str;
    fn csv_row(&self) -> String;
    fn to_csv(&self) -> String {
        format!("{}\n{}", self.csv_header(), self.csv_row())
    }
}

impl RecordCsv for IntegrateRecord {
    fn csv_header(&self) -> &'static str {
        "value_re,value_im,algorithm,n_used,evaluations,certified_bound,reference_re,reference_im,reference_gap"
    }
    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.value_re,
            self.value_im,
            self.algorithm.replace(',', ";"),
            self.n_used,
            self.evaluations,
            self.certified_bound,
            self.reference_re,
            self.reference_im,
            self.reference_gap
        )
    }
}

impl RecordCsv for ErrorRecord {
    fn csv_header(&self) -> &'static str {
        "kind,value,report_kind,truncation_terms,tail_bound,provenance"
    }
    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.kind,
            self.value,
            self.report_kind,
            self.truncation_terms,
            self.tail_bound,
            self.provenance.replace(',', ";")
        )
    }
}

impl RecordCsv for ComplexityRecord {
    fn csv_header(&self) -> &'static str {
        "lower,upper,achieved,zero_case"
    }
    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{}",
            self.lower, self.upper, self.achieved, self.zero_case
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_row_matches_header() {
        let row = CurveRow {
            n: 1,
            k: 2,
            s: 3,
            exact_qmc: 0.5,
            star_exact: 0.25,
            per_bound: 0.1,
            tayper_bound: 0.2,
            lower_bound: 0.01,
            upper_bound: 0.9,
        };
        assert_eq!(
            row.to_csv().split(',').count(),
            CURVE_HEADER.split(',').count()
        );
    }

    #[test]
    fn record_csv_is_two_lines() {
        let rec = ComplexityRecord {
            lower: 1,
            upper: 10,
            achieved: 5,
            zero_case: false,
        };
        let text = rec.to_csv();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), "lower,upper,achieved,zero_case");
        assert_eq!(lines.next().unwrap(), "1,10,5,false");
    }
}
