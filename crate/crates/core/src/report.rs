//! Output records and command logic behind the `orthohaar` binary.

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::canonicalize;
use crate::exact::{
    classify, evaluate_diagram, f1, order6_catalog, x_integral, z_integral, EvalError, Order6Shape,
};
use crate::mc::{mc_estimate_with, McConfig, McError, McEstimate};
use crate::monomial::{parse_monomial, Monomial, MonomialError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_UNSUPPORTED: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

/// Largest accepted distance between the MC mean and the exact value, in
/// standard errors.
pub const SIGMA_LIMIT: f64 = 4.0;

#[derive(Debug, Error)]
pub enum CommandError {
    #[error("{error}\n  {input}\n  {caret}", caret = caret(*position))]
    Parse {
        error: MonomialError,
        input: String,
        position: usize,
    },
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Mc(#[from] McError),
}

fn caret(position: usize) -> String {
    format!("{}^", " ".repeat(position))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct McBlock {
    pub mean: f64,
    #[serde(rename = "stdError")]
    pub std_error: f64,
    pub samples: u64,
    pub seed: u64,
    #[serde(rename = "sigmaDistance")]
    pub sigma_distance: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub label: Option<String>,
    pub monomial: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub exact: Option<String>,
    pub decimal: Option<f64>,
    pub classification: String,
    pub formula: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mc: Option<McBlock>,
}

/// `p/q` with the sign on the numerator, `0/1` for zero.
pub fn exact_string(value: &BigRational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// The value rounded to 12 significant digits.
pub fn decimal(value: &BigRational) -> f64 {
    let x = value.to_f64().unwrap_or(f64::NAN);
    format!("{x:.11e}").parse().unwrap_or(x)
}

fn parse(text: &str) -> Result<Monomial, CommandError> {
    parse_monomial(text).map_err(|error| CommandError::Parse {
        position: error.position(),
        error,
        input: text.to_string(),
    })
}

fn record_for(m: &Monomial, n: usize) -> Result<(OutputRecord, Option<BigRational>), CommandError> {
    let d = canonicalize(m);
    let result = evaluate_diagram(&d, n)?;
    let record = OutputRecord {
        label: None,
        monomial: d.to_monomial().to_string(),
        n,
        exact: result.value.as_ref().map(exact_string),
        decimal: result.value.as_ref().map(decimal),
        classification: result.classification.name().to_string(),
        formula: result.formula,
        mc: None,
    };
    Ok((record, result.value))
}

fn attach_mc(record: &mut OutputRecord, estimate: &McEstimate, exact: Option<&BigRational>) {
    record.mc = Some(McBlock {
        mean: estimate.mean,
        std_error: estimate.std_error,
        samples: estimate.samples,
        seed: estimate.seed,
        sigma_distance: exact.map(|v| estimate.sigma_distance(v.to_f64().unwrap_or(f64::NAN))),
    });
}

/// `eval`: exact value, optionally with an MC estimate attached.
/// Returns the record and the process exit code.
pub fn cmd_eval(
    text: &str,
    n: usize,
    mc: Option<McConfig>,
) -> Result<(OutputRecord, i32), CommandError> {
    let m = parse(text)?;
    let (mut record, value) = record_for(&m, n)?;
    if let Some(config) = mc {
        let estimate = mc_estimate_with(&m, n, config)?;
        attach_mc(&mut record, &estimate, value.as_ref());
    }
    let code = if value.is_none() {
        EXIT_UNSUPPORTED
    } else {
        EXIT_OK
    };
    Ok((record, code))
}

/// `verify`: exact value plus MC estimate; fails if they are more than
/// [`SIGMA_LIMIT`] standard errors apart.
pub fn cmd_verify(
    text: &str,
    n: usize,
    config: McConfig,
) -> Result<(OutputRecord, i32), CommandError> {
    let m = parse(text)?;
    let (mut record, value) = record_for(&m, n)?;
    let estimate = mc_estimate_with(&m, n, config)?;
    attach_mc(&mut record, &estimate, value.as_ref());
    let code = match record.mc.as_ref().and_then(|b| b.sigma_distance) {
        None => EXIT_UNSUPPORTED,
        Some(sigma) if sigma <= SIGMA_LIMIT => EXIT_OK,
        Some(_) => EXIT_VERIFY_FAILED,
    };
    Ok((record, code))
}

fn catalog_entry(
    label: String,
    m: Monomial,
    n: usize,
    value: BigRational,
    formula: String,
) -> OutputRecord {
    let d = canonicalize(&m);
    OutputRecord {
        label: Some(label),
        monomial: d.to_monomial().to_string(),
        n,
        exact: Some(exact_string(&value)),
        decimal: Some(decimal(&value)),
        classification: classify(&d).name().to_string(),
        formula,
        mc: None,
    }
}

/// `catalog`: one-line integrals, the order-6 table, the basic exchange
/// integral and a few Z values at dimension `N >= 3`. `filter` keeps entries
/// whose label contains it (case-insensitive).
pub fn cmd_catalog(n: usize, filter: Option<&str>) -> Result<Vec<OutputRecord>, CommandError> {
    if n < 3 {
        return Err(EvalError::DimensionTooSmall { required: 3, n }.into());
    }
    let mut out = Vec::new();
    for m in 1..=5u32 {
        out.push(catalog_entry(
            format!("F1({})", 2 * m),
            Monomial::from_triples(&[(1, 1, 2 * m)]),
            n,
            f1(2 * m, n)?,
            "one-vector closed form F1(2m)".into(),
        ));
    }
    for shape in Order6Shape::ALL {
        out.push(catalog_entry(
            format!("I({shape})"),
            shape.monomial(),
            n,
            order6_catalog(shape, n)?,
            format!("order-6 catalog I({shape})"),
        ));
    }
    out.push(catalog_entry(
        "X(1,1,1,1)".into(),
        Monomial::from_triples(&[(1, 1, 1), (2, 1, 1), (2, 2, 1), (1, 2, 1)]),
        n,
        x_integral(1, 1, 1, 1, n)?,
        "exchange recursion down to Z/fan".into(),
    ));
    for (m1, m2, m3) in [(2, 0, 2), (2, 2, 2), (4, 2, 2), (2, 4, 2)] {
        out.push(catalog_entry(
            format!("Z({m1},{m2},{m3})"),
            Monomial::from_triples(&[(1, 1, m1), (1, 2, m2), (2, 2, m3)]),
            n,
            z_integral(m1, m2, m3, n)?,
            "Z recursion in m3 from F2 base".into(),
        ));
    }
    if let Some(f) = filter {
        let f = f.to_ascii_lowercase();
        out.retain(|r| {
            r.label
                .as_deref()
                .is_some_and(|l| l.to_ascii_lowercase().contains(&f))
        });
    }
    Ok(out)
}

/// Key/value text for a single record.
pub fn render_record(r: &OutputRecord) -> String {
    let mut rows: Vec<(&str, String)> = Vec::new();
    if let Some(label) = &r.label {
        rows.push(("label", label.clone()));
    }
    rows.push(("monomial", r.monomial.clone()));
    rows.push(("N", r.n.to_string()));
    rows.push(("exact", r.exact.clone().unwrap_or_else(|| "-".into())));
    rows.push((
        "decimal",
        r.decimal.map_or_else(|| "-".into(), |d| d.to_string()),
    ));
    rows.push(("classification", r.classification.clone()));
    rows.push(("formula", r.formula.clone()));
    if let Some(mc) = &r.mc {
        rows.push(("mc.mean", mc.mean.to_string()));
        rows.push(("mc.stdError", mc.std_error.to_string()));
        rows.push(("mc.samples", mc.samples.to_string()));
        rows.push(("mc.seed", mc.seed.to_string()));
        rows.push((
            "mc.sigmaDistance",
            mc.sigma_distance
                .map_or_else(|| "-".into(), |s| format!("{s:.3}")),
        ));
    }
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}

/// Aligned table for catalog output.
pub fn render_table(records: &[OutputRecord]) -> String {
    let header = ["entry", "monomial", "exact", "decimal", "class"];
    let rows: Vec<[String; 5]> = records
        .iter()
        .map(|r| {
            [
                r.label.clone().unwrap_or_default(),
                r.monomial.clone(),
                r.exact.clone().unwrap_or_default(),
                r.decimal.map(|d| d.to_string()).unwrap_or_default(),
                r.classification.clone(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: [&str; 5]| -> String {
        let mut s = String::new();
        for (k, cell) in cells.iter().enumerate() {
            if k > 0 {
                s.push_str("  ");
            }
            s.push_str(&format!("{cell:<w$}", w = widths[k]));
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line(header);
    for row in &rows {
        out.push_str(&line([&row[0], &row[1], &row[2], &row[3], &row[4]]));
    }
    out
}
