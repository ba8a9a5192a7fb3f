//! Deterministic CSV and JSON rendering of metric rows.
//!
//! Every floating value is printed with 12 significant digits in scientific
//! notation, so repeated runs are byte-identical and the CSV and JSON forms
//! of one run carry identical numeric tokens. Fields without a defined value
//! emit "NA" in CSV and null in JSON.

use causal_mzi::experiments::EmergenceComparison;

pub const REPORT_HEADER: &str =
    "theta_rad,phi_rad,gamma_rad,branch,ei_bits,determinism,degeneracy,k_sigma";

pub const COMPARE_HEADER: &str =
    "theta_rad,phi_rad,gamma_rad,branch,ei_fine_bits,ei_coarse_bits,ei_classical_aggregate_bits,delta_bits";

/// One output row of the fine, coarse, sweep, or kcurve commands.
#[derive(Debug, Clone)]
pub struct ReportRow {
    pub theta: Option<f64>,
    pub phi: Option<f64>,
    pub gamma: Option<f64>,
    pub branch: Option<&'static str>,
    pub ei: Option<f64>,
    pub determinism: Option<f64>,
    pub degeneracy: Option<f64>,
    pub k_sigma: Option<f64>,
}

/// The single output row of the compare command.
#[derive(Debug, Clone)]
pub struct CompareRow {
    pub theta: f64,
    pub phi: f64,
    pub gamma: f64,
    pub branch: &'static str,
    pub cmp: EmergenceComparison,
}

/// Run parameters echoed into the "params" object of JSON output.
pub type Params = Vec<(&'static str, ParamValue)>;

#[derive(Debug, Clone)]
pub enum ParamValue {
    Text(&'static str),
    Float(f64),
    Int(u64),
    Bool(bool),
    Floats(Vec<f64>),
}

/// 12 significant digits, scientific notation. The output is also a valid
/// JSON number.
pub fn fmt_sig(x: f64) -> String {
    format!("{x:.11e}")
}

fn csv_num(x: Option<f64>) -> String {
    x.map(fmt_sig).unwrap_or_else(|| "NA".to_string())
}

fn json_num(x: Option<f64>) -> String {
    x.map(fmt_sig).unwrap_or_else(|| "null".to_string())
}

fn csv_text(s: Option<&'static str>) -> String {
    s.unwrap_or("NA").to_string()
}

fn json_text(s: Option<&'static str>) -> String {
    s.map(|v| format!("\"{v}\""))
        .unwrap_or_else(|| "null".to_string())
}

impl ReportRow {
    fn csv_line(&self) -> String {
        [
            csv_num(self.theta),
            csv_num(self.phi),
            csv_num(self.gamma),
            csv_text(self.branch),
            csv_num(self.ei),
            csv_num(self.determinism),
            csv_num(self.degeneracy),
            csv_num(self.k_sigma),
        ]
        .join(",")
    }

    fn json_object(&self) -> String {
        format!(
            "{{\"theta_rad\":{},\"phi_rad\":{},\"gamma_rad\":{},\"branch\":{},\"ei_bits\":{},\"determinism\":{},\"degeneracy\":{},\"k_sigma\":{}}}",
            json_num(self.theta),
            json_num(self.phi),
            json_num(self.gamma),
            json_text(self.branch),
            json_num(self.ei),
            json_num(self.determinism),
            json_num(self.degeneracy),
            json_num(self.k_sigma),
        )
    }
}

impl CompareRow {
    fn csv_line(&self) -> String {
        [
            fmt_sig(self.theta),
            fmt_sig(self.phi),
            fmt_sig(self.gamma),
            self.branch.to_string(),
            fmt_sig(self.cmp.ei_fine),
            fmt_sig(self.cmp.ei_coarse),
            fmt_sig(self.cmp.ei_classical_aggregate),
            fmt_sig(self.cmp.delta),
        ]
        .join(",")
    }

    fn json_object(&self) -> String {
        format!(
            "{{\"theta_rad\":{},\"phi_rad\":{},\"gamma_rad\":{},\"branch\":\"{}\",\"ei_fine_bits\":{},\"ei_coarse_bits\":{},\"ei_classical_aggregate_bits\":{},\"delta_bits\":{}}}",
            fmt_sig(self.theta),
            fmt_sig(self.phi),
            fmt_sig(self.gamma),
            self.branch,
            fmt_sig(self.cmp.ei_fine),
            fmt_sig(self.cmp.ei_coarse),
            fmt_sig(self.cmp.ei_classical_aggregate),
            fmt_sig(self.cmp.delta),
        )
    }
}

fn params_object(params: &Params) -> String {
    let fields: Vec<String> = params
        .iter()
        .map(|(key, value)| {
            let rendered = match value {
                ParamValue::Text(s) => format!("\"{s}\""),
                ParamValue::Float(x) => fmt_sig(*x),
                ParamValue::Int(n) => n.to_string(),
                ParamValue::Bool(b) => b.to_string(),
                ParamValue::Floats(xs) => {
                    let inner: Vec<String> = xs.iter().map(|&x| fmt_sig(x)).collect();
                    format!("[{}]", inner.join(","))
                }
            };
            format!("\"{key}\":{rendered}")
        })
        .collect();
    format!("{{{}}}", fields.join(","))
}

pub fn report_csv(rows: &[ReportRow]) -> String {
    let mut out = String::from(REPORT_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.csv_line());
        out.push('\n');
    }
    out
}

pub fn report_json(rows: &[ReportRow], params: &Params) -> String {
    let objects: Vec<String> = rows.iter().map(|r| r.json_object()).collect();
    format!(
        "{{\"rows\":[{}],\"params\":{}}}\n",
        objects.join(","),
        params_object(params)
    )
}

pub fn compare_csv(row: &CompareRow) -> String {
    format!("{}\n{}\n", COMPARE_HEADER, row.csv_line())
}

pub fn compare_json(row: &CompareRow, params: &Params) -> String {
    format!(
        "{{\"rows\":[{}],\"params\":{}}}\n",
        row.json_object(),
        params_object(params)
    )
}
