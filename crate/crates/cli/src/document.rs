//! Scheme input documents.
//!
//! JSON:
//!
//! ```json
//! {"probabilities": [0.5, 0.5], "utilities": [1, 2], "kind": "complete", "labels": ["a", "b"]}
//! ```
//!
//! `utilities` defaults to all ones and `kind` to `"complete"`. The CSV form
//! has one row per event with columns `p,u` (the `u` column and a header row
//! are optional) and is always read as a complete distribution.

use std::io::Read;
use std::path::Path;

use igf_core::{
    DistributionKind, ProbabilityDistribution, UtilityDistribution, UtilityInformationScheme,
};
use serde::Deserialize;

use crate::error::{CliError, CliResult};
use crate::render::format_roundtrip;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum InputFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(rename_all = "lowercase")]
enum KindField {
    Complete,
    Generalized,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SchemeDocument {
    probabilities: Vec<f64>,
    #[serde(default)]
    utilities: Option<Vec<f64>>,
    #[serde(default)]
    kind: Option<KindField>,
    #[serde(default)]
    labels: Option<Vec<String>>,
}

fn build(
    probs: Vec<f64>,
    utils: Option<Vec<f64>>,
    kind: DistributionKind,
    labels: Option<Vec<String>>,
) -> CliResult<UtilityInformationScheme> {
    let utils = utils.unwrap_or_else(|| vec![1.0; probs.len()]);
    if utils.len() != probs.len() {
        return Err(igf_core::Error::LengthMismatch {
            left: probs.len(),
            right: utils.len(),
        }
        .into());
    }
    let dist = ProbabilityDistribution::new(probs, kind)?;
    let util = UtilityDistribution::new(utils)?;
    Ok(UtilityInformationScheme::new(dist, util, labels)?)
}

pub fn parse_json(text: &str) -> CliResult<UtilityInformationScheme> {
    let doc: SchemeDocument = serde_json::from_str(text)
        .map_err(|e| CliError::validation(format!("invalid scheme document: {e}")))?;
    let kind = match doc.kind.unwrap_or(KindField::Complete) {
        KindField::Complete => DistributionKind::Complete,
        KindField::Generalized => DistributionKind::Generalized,
    };
    build(doc.probabilities, doc.utilities, kind, doc.labels)
}

pub fn parse_csv(text: &str) -> CliResult<UtilityInformationScheme> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut probs = Vec::new();
    let mut utils = Vec::new();
    let mut columns = None;
    for (line, record) in reader.records().enumerate() {
        let record = record.map_err(|e| CliError::validation(format!("invalid CSV input: {e}")))?;
        if record.iter().all(str::is_empty) {
            continue;
        }
        let first = record.get(0).unwrap_or_default();
        if line == 0 && first.parse::<f64>().is_err() {
            // header row
            continue;
        }
        let width = record.len();
        if !(1..=2).contains(&width) || *columns.get_or_insert(width) != width {
            return Err(CliError::validation(format!(
                "CSV row {} must have the same 1 or 2 columns (p[,u]) as the first row",
                line + 1
            )));
        }
        let parse = |s: &str| {
            s.parse::<f64>().map_err(|_| {
                CliError::validation(format!("CSV row {}: not a number: {s:?}", line + 1))
            })
        };
        probs.push(parse(first)?);
        if width == 2 {
            utils.push(parse(&record[1])?);
        }
    }
    let utils = (columns == Some(2)).then_some(utils);
    build(probs, utils, DistributionKind::Complete, None)
}

pub fn parse(text: &str, format: InputFormat) -> CliResult<UtilityInformationScheme> {
    match format {
        InputFormat::Json => parse_json(text),
        InputFormat::Csv => parse_csv(text),
    }
}

pub fn load(path: &Path, format: InputFormat) -> CliResult<UtilityInformationScheme> {
    let mut text = String::new();
    std::fs::File::open(path)
        .and_then(|mut f| f.read_to_string(&mut text))
        .map_err(|e| CliError::validation(format!("cannot read {}: {e}", path.display())))?;
    parse(&text, format)
}

/// Canonical JSON rendering with every number at 17 significant digits.
pub fn to_canonical_json(scheme: &UtilityInformationScheme) -> String {
    fn array(values: &[f64]) -> String {
        let items: Vec<String> = values.iter().map(|&v| format_roundtrip(v)).collect();
        format!("[{}]", items.join(", "))
    }
    let mut out = String::from("{\n");
    out.push_str(&format!(
        "  \"kind\": \"{}\",\n",
        scheme.dist().kind().as_str()
    ));
    out.push_str(&format!(
        "  \"probabilities\": {},\n",
        array(scheme.dist().probs())
    ));
    out.push_str(&format!(
        "  \"utilities\": {}",
        array(scheme.util().utils())
    ));
    if let Some(labels) = scheme.labels() {
        let items: Vec<String> = labels
            .iter()
            .map(|l| serde_json::to_string(l).expect("string serialization"))
            .collect();
        out.push_str(&format!(",\n  \"labels\": [{}]", items.join(", ")));
    }
    out.push_str("\n}\n");
    out
}
