//! Text formats: Cayley tables, spec and convention strings, the published
//! sign table, survey documents, certificates and Markdown reports.
//!
//! Every emitter is deterministic, uses `\n` line ends and never writes
//! trailing whitespace.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corpus::{CorpusDescriptor, CorpusError};
use crate::derivative::{
    enumerate_specs, table_blocks, Action, Convention, DerivativeSpec, IsotopyTriple,
    TranslationSource, TripleComponent, TripleError,
};
use crate::parastrophe::ParastropheSym;
use crate::qcore::{Quasigroup, QuasigroupError};
use crate::survey::{
    CaseId, CaseOutcome, CaseStatus, CellStatus, Certificate, DiffReport, Sign, SignTable,
    SurveyResult,
};
use crate::units::UnitKind;

/// The published unit table, one line per (block, row).
pub const PAPER_TABLE_DATA: &str = include_str!("../data/paper_table.txt");

pub const SURVEY_FORMAT: &str = "qderiv-survey";
pub const SURVEY_VERSION: &str = "1.0";
const SURVEY_MAJOR: &str = "1";

pub const QUANTIFICATION_NOTE: &str =
    "'+' = a unit exists for every square in the corpus and every element a (bounded evidence, not proof); \
     '-' = a certified counterexample exists";

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}, column {column}: {source}")]
    Table {
        line: usize,
        column: usize,
        source: QuasigroupError,
    },
    #[error("{0}")]
    Quasigroup(#[from] QuasigroupError),
    #[error("bad token {token:?}: {message}")]
    Token { token: String, message: String },
    #[error(transparent)]
    Triple(#[from] TripleError),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error("unsupported document version {0:?}")]
    Version(String),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

fn token_error(token: &str, message: impl Into<String>) -> ParseError {
    ParseError::Token {
        token: token.to_string(),
        message: message.into(),
    }
}

// ---------------------------------------------------------------- Cayley

/// Parses `# comment` lines, then `n`, then `n` rows of `n` integers.
pub fn parse_cayley(text: &str) -> Result<Quasigroup, ParseError> {
    let mut data = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (order_line, order_text) = data.next().ok_or(ParseError::Syntax {
        line: 1,
        message: "missing order line".into(),
    })?;
    let n: usize = order_text.parse().map_err(|_| ParseError::Syntax {
        line: order_line,
        message: format!("expected the order, found {order_text:?}"),
    })?;
    let mut rows = Vec::with_capacity(n);
    let mut row_lines = Vec::with_capacity(n);
    for (line, text) in data {
        if rows.len() == n {
            return Err(ParseError::Syntax {
                line,
                message: format!("more than {n} rows"),
            });
        }
        let row = text
            .split_whitespace()
            .enumerate()
            .map(|(col, tok)| {
                tok.parse::<usize>().map_err(|_| ParseError::Syntax {
                    line,
                    message: format!("column {}: expected an integer, found {tok:?}", col + 1),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
        row_lines.push(line);
    }
    Quasigroup::from_table(n, &rows).map_err(|source| {
        let (row, column) = match source {
            QuasigroupError::BadEntry { row, col, .. } => (Some(row), col + 1),
            QuasigroupError::RowLength { row, .. } => (Some(row), 0),
            QuasigroupError::NotLatin { line, index, .. } => match line {
                crate::qcore::Line::Row => (Some(index), 0),
                crate::qcore::Line::Column => (None, index + 1),
            },
            _ => (None, 0),
        };
        match row.and_then(|r| row_lines.get(r)) {
            Some(&line) => ParseError::Table {
                line,
                column,
                source,
            },
            None => ParseError::Quasigroup(source),
        }
    })
}

pub fn emit_cayley(q: &Quasigroup) -> String {
    let mut out = format!("{}\n", q.order());
    for row in q.rows() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

// ---------------------------------------------------- spec & convention

/// `"<sigma>:<alpha>,<beta>,<gamma>"`, e.g. `"23:L,Pi,E"`.
pub fn parse_spec(text: &str) -> Result<DerivativeSpec, ParseError> {
    let text = text.trim();
    let (sigma_tok, triple_tok) = text
        .split_once(':')
        .ok_or_else(|| token_error(text, "expected <sigma>:<alpha>,<beta>,<gamma>"))?;
    let sigma = ParastropheSym::from_token(sigma_tok)
        .ok_or_else(|| token_error(sigma_tok, "parastrophe must be one of e,12,13,23,123,132"))?;
    let comps = triple_tok
        .split(',')
        .map(|t| {
            TripleComponent::from_token(t)
                .ok_or_else(|| token_error(t, "component must be one of L,Li,R,Ri,P,Pi,E"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let [alpha, beta, gamma]: [TripleComponent; 3] = comps
        .try_into()
        .map_err(|_| token_error(triple_tok, "expected exactly three components"))?;
    Ok(DerivativeSpec::new(
        sigma,
        IsotopyTriple::new(alpha, beta, gamma)?,
    ))
}

impl FromStr for DerivativeSpec {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_spec(s)
    }
}

/// `"A"` or `"args=direct|inverse;result=direct|inverse;trans=base|para"`.
pub fn parse_convention(text: &str) -> Result<Convention, ParseError> {
    let text = text.trim();
    if text == "A" {
        return Ok(Convention::A);
    }
    let (mut args, mut result, mut source) = (None, None, None);
    for part in text.split(';') {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| token_error(part, "expected key=value"))?;
        let action = |v: &str| match v {
            "direct" => Ok(Action::Direct),
            "inverse" => Ok(Action::Inverse),
            _ => Err(token_error(v, "expected direct or inverse")),
        };
        match key {
            "args" => args = Some(action(value)?),
            "result" => result = Some(action(value)?),
            "trans" => {
                source = Some(match value {
                    "base" => TranslationSource::Base,
                    "para" => TranslationSource::Parastrophe,
                    _ => return Err(token_error(value, "expected base or para")),
                })
            }
            _ => return Err(token_error(key, "expected args, result or trans")),
        }
    }
    match (args, result, source) {
        (Some(args), Some(result), Some(source)) => Ok(Convention {
            args,
            result,
            source,
        }),
        _ => Err(token_error(text, "convention needs args, result and trans")),
    }
}

impl FromStr for Convention {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_convention(s)
    }
}

/// `"<spec>/<unit>"`, e.g. `"23:L,Pi,E/f"`.
pub fn parse_case(text: &str) -> Result<CaseId, ParseError> {
    let (spec, unit) = text
        .trim()
        .rsplit_once('/')
        .ok_or_else(|| token_error(text, "expected <spec>/<f|e|s>"))?;
    Ok(CaseId {
        spec: parse_spec(spec)?,
        unit: UnitKind::from_token(unit)
            .ok_or_else(|| token_error(unit, "unit must be f, e or s"))?,
    })
}

// ------------------------------------------------------------ sign tables

pub fn parse_paper_table(text: &str) -> Result<SignTable, ParseError> {
    let specs = enumerate_specs();
    let mut rows = Vec::with_capacity(specs.len());
    let data = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'));
    for (i, line) in data {
        let line_no = i + 1;
        let syntax = |message: String| ParseError::Syntax {
            line: line_no,
            message,
        };
        let fields: Vec<(&str, &str)> = line
            .split_whitespace()
            .map(|f| {
                f.split_once('=')
                    .ok_or_else(|| syntax(format!("expected key=value, found {f:?}")))
            })
            .collect::<Result<_, _>>()?;
        let keys: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
        if keys != ["block", "sigma", "f", "e", "s"] {
            return Err(syntax("expected fields block, sigma, f, e, s".into()));
        }
        let spec = parse_spec(&format!("{}:{}", fields[1].1, fields[0].1))?;
        let sign = |v: &str| Sign::from_symbol(v).ok_or_else(|| syntax(format!("bad sign {v:?}")));
        let signs = [sign(fields[2].1)?, sign(fields[3].1)?, sign(fields[4].1)?];
        match specs.get(rows.len()) {
            Some(expected) if *expected == spec => rows.push((spec, signs)),
            Some(expected) => {
                return Err(syntax(format!("expected row {expected}, found {spec}")));
            }
            None => return Err(syntax("more than 648 rows".into())),
        }
    }
    if rows.len() != specs.len() {
        return Err(ParseError::Syntax {
            line: text.lines().count(),
            message: format!("expected 648 rows, found {}", rows.len()),
        });
    }
    Ok(SignTable { rows })
}

pub fn emit_paper_table(table: &SignTable) -> String {
    let mut out = String::new();
    for (spec, signs) in &table.rows {
        let _ = writeln!(
            out,
            "block={} sigma={} f={} e={} s={}",
            spec.triple,
            spec.sigma,
            signs[0].symbol(),
            signs[1].symbol(),
            signs[2].symbol()
        );
    }
    out
}

/// Markdown mirroring the published layout: one block per isotopy triple,
/// rows `xy, yx, x\y, y\x, y/x, x/y`, columns `f, e, s`.
pub fn emit_table_markdown(table: &SignTable) -> Result<String, crate::survey::SurveyError> {
    table.check_shape()?;
    let mut out = String::new();
    for (block, rows) in table_blocks().iter().zip(table.rows.chunks(6)) {
        let _ = writeln!(out, "### {}\n", block.notation());
        out.push_str("| op | f | e | s |\n|----|---|---|---|\n");
        for (spec, signs) in rows {
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} |",
                md_escape(spec.sigma.formula()),
                signs[0].symbol(),
                signs[1].symbol(),
                signs[2].symbol()
            );
        }
        out.push('\n');
    }
    out.pop();
    Ok(out)
}

fn md_escape(s: &str) -> String {
    s.replace('\\', "\\\\")
}

/// Reads back the output of [`emit_table_markdown`].
pub fn parse_table_markdown(text: &str) -> Result<SignTable, ParseError> {
    let specs = enumerate_specs();
    let mut rows = Vec::with_capacity(648);
    for (i, line) in text.lines().enumerate() {
        let cells: Vec<&str> = line
            .trim()
            .trim_matches('|')
            .split('|')
            .map(str::trim)
            .collect();
        if !line.starts_with('|')
            || cells.len() != 4
            || cells[0] == "op"
            || cells[0].starts_with('-')
        {
            continue;
        }
        let syntax = |message: String| ParseError::Syntax {
            line: i + 1,
            message,
        };
        let expected = specs
            .get(rows.len())
            .ok_or_else(|| syntax("more than 648 rows".into()))?;
        if cells[0] != md_escape(expected.sigma.formula()) {
            return Err(syntax(format!(
                "expected row {}, found {}",
                expected.sigma.formula(),
                cells[0]
            )));
        }
        let sign = |v: &str| Sign::from_symbol(v).ok_or_else(|| syntax(format!("bad sign {v:?}")));
        rows.push((
            *expected,
            [sign(cells[1])?, sign(cells[2])?, sign(cells[3])?],
        ));
    }
    if rows.len() != specs.len() {
        return Err(ParseError::Syntax {
            line: text.lines().count(),
            message: format!("expected 648 rows, found {}", rows.len()),
        });
    }
    Ok(SignTable { rows })
}

// ---------------------------------------------------- survey documents

#[derive(Serialize, Deserialize)]
struct CertificateDoc {
    spec: String,
    unit: UnitKind,
    convention: String,
    a: usize,
    table: Vec<Vec<usize>>,
    derived: Vec<Vec<usize>>,
    witnesses: Vec<usize>,
}

impl From<&Certificate> for CertificateDoc {
    fn from(c: &Certificate) -> Self {
        CertificateDoc {
            spec: c.case.spec.to_string(),
            unit: c.case.unit,
            convention: c.convention.to_string(),
            a: c.a,
            table: c.table.clone(),
            derived: c.derived.clone(),
            witnesses: c.witnesses.clone(),
        }
    }
}

impl CertificateDoc {
    fn into_certificate(self) -> Result<Certificate, ParseError> {
        Ok(Certificate {
            case: CaseId {
                spec: parse_spec(&self.spec)?,
                unit: self.unit,
            },
            convention: parse_convention(&self.convention)?,
            a: self.a,
            table: self.table,
            derived: self.derived,
            witnesses: self.witnesses,
        })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
enum StatusDoc {
    Counterexample {
        order: usize,
        index: usize,
        certificate: CertificateDoc,
    },
    NoCounterexample {
        max_order_checked: usize,
        corpus: String,
    },
}

#[derive(Serialize, Deserialize)]
struct CaseDoc {
    spec: String,
    unit: UnitKind,
    #[serde(flatten)]
    status: StatusDoc,
}

#[derive(Deserialize)]
struct SurveyDoc {
    format: String,
    version: String,
    convention: String,
    corpus: String,
    cases: Vec<CaseDoc>,
}

/// One JSON object per case line, so the document diffs well.
pub fn emit_survey(result: &SurveyResult) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(out, "  \"format\": {},", json_str(SURVEY_FORMAT));
    let _ = writeln!(out, "  \"version\": {},", json_str(SURVEY_VERSION));
    let _ = writeln!(
        out,
        "  \"convention\": {},",
        json_str(&result.convention.to_string())
    );
    let _ = writeln!(
        out,
        "  \"corpus\": {},",
        json_str(&result.corpus.to_string())
    );
    let _ = writeln!(
        out,
        "  \"quantification\": {},",
        json_str(QUANTIFICATION_NOTE)
    );
    out.push_str("  \"cases\": [\n");
    for (i, outcome) in result.cases.iter().enumerate() {
        let doc = CaseDoc {
            spec: outcome.case.spec.to_string(),
            unit: outcome.case.unit,
            status: match &outcome.status {
                CaseStatus::Counterexample {
                    order,
                    index,
                    certificate,
                } => StatusDoc::Counterexample {
                    order: *order,
                    index: *index,
                    certificate: certificate.into(),
                },
                CaseStatus::NoCounterexample {
                    max_order_checked,
                    corpus,
                } => StatusDoc::NoCounterexample {
                    max_order_checked: *max_order_checked,
                    corpus: corpus.to_string(),
                },
            },
        };
        let sep = if i + 1 == result.cases.len() { "" } else { "," };
        let line = serde_json::to_string(&doc).expect("case documents serialize");
        let _ = writeln!(out, "    {line}{sep}");
    }
    out.push_str("  ]\n}\n");
    out
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

pub fn parse_survey(text: &str) -> Result<SurveyResult, ParseError> {
    let doc: SurveyDoc = serde_json::from_str(text)?;
    if doc.format != SURVEY_FORMAT {
        return Err(token_error(&doc.format, "not a survey document"));
    }
    if doc.version.split('.').next() != Some(SURVEY_MAJOR) {
        return Err(ParseError::Version(doc.version));
    }
    let convention = parse_convention(&doc.convention)?;
    let corpus: CorpusDescriptor = doc.corpus.parse()?;
    let cases = doc
        .cases
        .into_iter()
        .map(|c| {
            let case = CaseId {
                spec: parse_spec(&c.spec)?,
                unit: c.unit,
            };
            let status = match c.status {
                StatusDoc::Counterexample {
                    order,
                    index,
                    certificate,
                } => CaseStatus::Counterexample {
                    order,
                    index,
                    certificate: certificate.into_certificate()?,
                },
                StatusDoc::NoCounterexample {
                    max_order_checked,
                    corpus,
                } => CaseStatus::NoCounterexample {
                    max_order_checked,
                    corpus: corpus.parse()?,
                },
            };
            Ok(CaseOutcome { case, status })
        })
        .collect::<Result<Vec<_>, ParseError>>()?;
    Ok(SurveyResult {
        convention,
        corpus,
        cases,
    })
}

pub fn emit_certificate(cert: &Certificate) -> String {
    let mut s =
        serde_json::to_string_pretty(&CertificateDoc::from(cert)).expect("certificates serialize");
    s.push('\n');
    s
}

pub fn parse_certificate(text: &str) -> Result<Certificate, ParseError> {
    serde_json::from_str::<CertificateDoc>(text)?.into_certificate()
}

// ------------------------------------------------------------ diff report

fn rows_inline(rows: &[Vec<usize>]) -> String {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join(" / ")
}

/// Markdown diff: header, summary line `agreement: k/1944`, the block layout
/// with `paper/computed` per cell, then evidence for each disagreement.
pub fn emit_diff_report(report: &DiffReport) -> String {
    let mut out = String::new();
    let total = report.cells.len();
    out.push_str("# Unit table diff\n\n");
    let _ = writeln!(out, "- convention: `{}`", report.convention);
    let _ = writeln!(out, "- corpus: `{}`", report.corpus);
    let _ = writeln!(out, "- quantification: {QUANTIFICATION_NOTE}");
    let _ = writeln!(
        out,
        "- cells: `paper/computed`; `!` marks a disagreement, `?` an unreadable published entry"
    );
    out.push('\n');
    let _ = writeln!(out, "agreement: {}/{}", report.agreement(), total);
    let _ = writeln!(out, "disagree: {}", report.count(CellStatus::Disagree));
    let _ = writeln!(
        out,
        "paper_unknown: {}",
        report.count(CellStatus::PaperUnknown)
    );
    out.push('\n');
    for (block, cells) in table_blocks().iter().zip(report.cells.chunks(18)) {
        let _ = writeln!(out, "### {}\n", block.notation());
        out.push_str("| op | f | e | s |\n|----|---|---|---|\n");
        for row in cells.chunks(3) {
            let rendered: Vec<String> = row
                .iter()
                .map(|c| {
                    let mark = if c.status == CellStatus::Disagree {
                        " !"
                    } else {
                        ""
                    };
                    format!("{}/{}{}", c.paper.symbol(), c.computed.symbol(), mark)
                })
                .collect();
            let _ = writeln!(
                out,
                "| {} | {} |",
                md_escape(row[0].case.spec.sigma.formula()),
                rendered.join(" | ")
            );
        }
        out.push('\n');
    }
    out.push_str("## Disagreements\n\n");
    let mut any = false;
    for c in report
        .cells
        .iter()
        .filter(|c| c.status == CellStatus::Disagree)
    {
        any = true;
        match &c.certificate {
            Some(cert) => {
                let _ = writeln!(
                    out,
                    "- `{}` paper {} computed {}: counterexample order {} a={} table [{}] witnesses [{}]",
                    c.case,
                    c.paper.symbol(),
                    c.computed.symbol(),
                    cert.order(),
                    cert.a,
                    rows_inline(&cert.table),
                    cert.witnesses
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                );
            }
            None => {
                let _ = writeln!(
                    out,
                    "- `{}` paper {} computed {}: no counterexample in `{}` (bounded evidence)",
                    c.case,
                    c.paper.symbol(),
                    c.computed.symbol(),
                    report.corpus
                );
            }
        }
    }
    if !any {
        out.push_str("none\n");
    }
    out
}

/// One line per convention: `<convention> agreement: k/1944 ...`.
pub fn emit_convention_summary(reports: &[DiffReport]) -> String {
    let mut out = String::from("# Agreement by convention\n\n");
    out.push_str("| convention | agreement | disagree | paper_unknown |\n|---|---|---|---|\n");
    for r in reports {
        let _ = writeln!(
            out,
            "| `{}` | {}/{} | {} | {} |",
            r.convention,
            r.agreement(),
            r.cells.len(),
            r.count(CellStatus::Disagree),
            r.count(CellStatus::PaperUnknown)
        );
    }
    out
}
