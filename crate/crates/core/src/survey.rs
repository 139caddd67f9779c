//! Exhaustive unit-existence survey over all 1944 (derivative, unit) cases.
//!
//! For every case the survey looks for the first `(order, stream index, a)`
//! in corpus order at which the derivative lacks the unit. Such a point is
//! stored as a [`Certificate`] that can be re-checked without the search.
//! Cases with no counterexample are reported as bounded evidence only.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::corpus::{CorpusDescriptor, CorpusError, DEFAULT_BOUND};
use crate::derivative::{
    apply_derivative, enumerate_specs, Action, Convention, DerivativeSpec, TranslationSource,
    TripleComponent,
};
use crate::parastrophe::{apply_parastrophe, ParastropheSym};
use crate::qcore::{Element, Quasigroup, QuasigroupError, TranslationKind};
use crate::units::UnitKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CaseId {
    pub spec: DerivativeSpec,
    pub unit: UnitKind,
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.spec, self.unit)
    }
}

/// The 1944 cases: specs in table order, each with `f`, `e`, `s`.
pub fn all_cases() -> Vec<CaseId> {
    enumerate_specs()
        .into_iter()
        .flat_map(|spec| {
            UnitKind::ALL
                .into_iter()
                .map(move |unit| CaseId { spec, unit })
        })
        .collect()
}

/// A stored refutation: for the derivative of `table` at `a`, every
/// candidate `u` has a witness `x` where the unit equation fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub table: Vec<Vec<Element>>,
    pub a: Element,
    pub case: CaseId,
    pub convention: Convention,
    /// The derivative's Cayley table.
    pub derived: Vec<Vec<Element>>,
    /// `witnesses[u]` refutes candidate `u`.
    pub witnesses: Vec<Element>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertificateError {
    #[error("malformed certificate field `{field}`: {reason}")]
    Malformed { field: &'static str, reason: String },
    #[error("certificate table is not a quasigroup: {0}")]
    NotLatin(QuasigroupError),
    #[error("derived table differs from the rebuilt derivative at ({row}, {col})")]
    DerivedMismatch { row: usize, col: usize },
    #[error("witness {witness} for candidate {candidate} satisfies the unit equation")]
    WitnessFails {
        candidate: Element,
        witness: Element,
    },
}

impl Certificate {
    /// Builds the certificate for `case` at `(q, a)`, or `None` if the
    /// derivative does have the unit.
    pub fn build(q: &Quasigroup, a: Element, case: CaseId, convention: Convention) -> Option<Self> {
        let d = apply_derivative(q, a, &case.spec, convention);
        let n = q.order();
        let op = |x, y| d.mul(x, y);
        let witnesses = (0..n)
            .map(|u| (0..n).find(|&x| !case.unit.holds_at(op, u, x)))
            .collect::<Option<Vec<_>>>()?;
        Some(Certificate {
            table: q.rows(),
            a,
            case,
            convention,
            derived: d.rows(),
            witnesses,
        })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn is_valid(&self) -> bool {
        verify_certificate(self).is_ok()
    }
}

/// Re-checks a certificate from scratch: the table must be Latin, the stored
/// derivative must match a rebuild, and each witness must refute its
/// candidate.
pub fn verify_certificate(cert: &Certificate) -> Result<(), CertificateError> {
    let n = cert.table.len();
    let malformed = |field, reason: String| CertificateError::Malformed { field, reason };
    if n == 0 {
        return Err(malformed("table", "empty".into()));
    }
    let q = Quasigroup::from_table(n, &cert.table).map_err(CertificateError::NotLatin)?;
    if cert.a >= n {
        return Err(malformed("a", format!("{} is outside 0..{n}", cert.a)));
    }
    if cert.derived.len() != n || cert.derived.iter().any(|r| r.len() != n) {
        return Err(malformed("derived", format!("expected {n}x{n} rows")));
    }
    if cert.witnesses.len() != n {
        return Err(malformed(
            "witnesses",
            format!("expected {n} witnesses, found {}", cert.witnesses.len()),
        ));
    }
    if let Some(&w) = cert.witnesses.iter().find(|&&w| w >= n) {
        return Err(malformed("witnesses", format!("{w} is outside 0..{n}")));
    }
    let rebuilt = apply_derivative(&q, cert.a, &cert.case.spec, cert.convention);
    for (row, stored) in cert.derived.iter().enumerate() {
        for (col, &v) in stored.iter().enumerate() {
            if rebuilt.mul(row, col) != v {
                return Err(CertificateError::DerivedMismatch { row, col });
            }
        }
    }
    let op = |x, y| rebuilt.mul(x, y);
    for (candidate, &witness) in cert.witnesses.iter().enumerate() {
        if cert.case.unit.holds_at(op, candidate, witness) {
            return Err(CertificateError::WitnessFails { candidate, witness });
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CaseStatus {
    Counterexample {
        order: usize,
        /// Position of the square in its order's stream.
        index: usize,
        certificate: Certificate,
    },
    NoCounterexample {
        max_order_checked: usize,
        corpus: CorpusDescriptor,
    },
}

impl CaseStatus {
    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            CaseStatus::Counterexample { certificate, .. } => Some(certificate),
            CaseStatus::NoCounterexample { .. } => None,
        }
    }

    pub fn sign(&self) -> Sign {
        match self {
            CaseStatus::Counterexample { .. } => Sign::Minus,
            CaseStatus::NoCounterexample { .. } => Sign::Plus,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseOutcome {
    pub case: CaseId,
    pub status: CaseStatus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyResult {
    pub convention: Convention,
    pub corpus: CorpusDescriptor,
    pub cases: Vec<CaseOutcome>,
}

impl SurveyResult {
    pub fn status(&self, case: &CaseId) -> Option<&CaseStatus> {
        self.cases
            .iter()
            .find(|c| c.case == *case)
            .map(|c| &c.status)
    }

    pub fn certificates(&self) -> impl Iterator<Item = &Certificate> {
        self.cases.iter().filter_map(|c| c.status.certificate())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurveyError {
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error("could not start worker pool: {0}")]
    Pool(String),
    #[error("internal invariant breach: {0}")]
    InvariantBreach(String),
    #[error("table shape mismatch: expected {expected} rows, found {found}")]
    ShapeMismatch { expected: usize, found: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurveyOptions {
    /// Worker threads; 0 uses the global pool.
    pub jobs: usize,
    /// Exhaustive order bound.
    pub bound: usize,
    /// Squares per deterministic reduction step.
    pub chunk: usize,
}

impl Default for SurveyOptions {
    fn default() -> Self {
        SurveyOptions {
            jobs: 0,
            bound: DEFAULT_BOUND,
            chunk: 2048,
        }
    }
}

pub fn run_survey(
    corpus: &CorpusDescriptor,
    conv: Convention,
) -> Result<SurveyResult, SurveyError> {
    run_survey_with(corpus, conv, &SurveyOptions::default())
}

pub fn run_survey_with(
    corpus: &CorpusDescriptor,
    conv: Convention,
    opts: &SurveyOptions,
) -> Result<SurveyResult, SurveyError> {
    let cases = all_cases();
    let found = search(corpus, conv, &cases, opts)?;
    let max_order_checked = corpus.orders().last().copied().unwrap_or(corpus.order);
    let cases = cases
        .into_iter()
        .zip(found)
        .map(|(case, hit)| CaseOutcome {
            case,
            status: match hit {
                Some(status) => status,
                None => CaseStatus::NoCounterexample {
                    max_order_checked,
                    corpus: *corpus,
                },
            },
        })
        .collect();
    Ok(SurveyResult {
        convention: conv,
        corpus: *corpus,
        cases,
    })
}

/// First counterexample for one case over every square of orders
/// `3..=max_order`.
pub fn minimal_counterexample(
    case: CaseId,
    conv: Convention,
    max_order: usize,
) -> Result<Option<Certificate>, SurveyError> {
    minimal_counterexample_with(case, conv, max_order, &SurveyOptions::default())
}

pub fn minimal_counterexample_with(
    case: CaseId,
    conv: Convention,
    max_order: usize,
    opts: &SurveyOptions,
) -> Result<Option<Certificate>, SurveyError> {
    let corpus = CorpusDescriptor::exhaustive(max_order.max(3));
    let mut found = search(&corpus, conv, &[case], opts)?;
    Ok(found.pop().flatten().and_then(|s| match s {
        CaseStatus::Counterexample { certificate, .. } => Some(certificate),
        CaseStatus::NoCounterexample { .. } => None,
    }))
}

/// Per-square precomputation shared by every spec.
struct SquareProbe {
    n: usize,
    paras: Vec<Quasigroup>,
}

impl SquareProbe {
    fn new(q: &Quasigroup) -> Self {
        SquareProbe {
            n: q.order(),
            paras: ParastropheSym::ALL
                .iter()
                .map(|&s| apply_parastrophe(q, s))
                .collect(),
        }
    }
}

/// Translation tables at one element `a`: index 0 holds the base quasigroup,
/// index `1 + σ` the parastrophe `σ`. Each holds the six kinds back to back.
struct ElementTranslations {
    tables: Vec<Vec<u8>>,
    identity: Vec<u8>,
}

impl ElementTranslations {
    fn new(probe: &SquareProbe, a: Element, with_paras: bool) -> Self {
        let n = probe.n;
        let fill = |q: &Quasigroup| {
            let mut buf = vec![0u8; 6 * n];
            for k in TranslationKind::ALL {
                q.translation_bytes(k, a, &mut buf[k.index() * n..(k.index() + 1) * n]);
            }
            buf
        };
        let mut tables = vec![fill(&probe.paras[ParastropheSym::Id.index()])];
        if with_paras {
            tables.extend(probe.paras.iter().map(fill));
        }
        ElementTranslations {
            tables,
            identity: (0..n as u8).collect(),
        }
    }

    fn perm(&self, source: usize, c: TripleComponent, action: Action, n: usize) -> &[u8] {
        match c {
            TripleComponent::E => &self.identity,
            TripleComponent::Translation(k) => {
                let k = match action {
                    Action::Direct => k,
                    Action::Inverse => k.inverse(),
                };
                &self.tables[source][k.index() * n..(k.index() + 1) * n]
            }
        }
    }
}

/// Unit test on the derivative formula without building its table.
fn has_unit(kind: UnitKind, n: usize, b: &[u8], alpha: &[u8], beta: &[u8], gamma: &[u8]) -> bool {
    let d =
        |x: usize, y: usize| gamma[b[alpha[x] as usize * n + beta[y] as usize] as usize] as usize;
    match kind {
        UnitKind::LeftF => (0..n).any(|f| (0..n).all(|y| d(f, y) == y)),
        UnitKind::RightE => (0..n).any(|e| (0..n).all(|x| d(x, e) == x)),
        UnitKind::MiddleS => {
            let s = d(0, 0);
            (1..n).all(|x| d(x, x) == s)
        }
    }
}

/// For each square, the first `a` refuting each open case, as
/// `(case slot, a)` pairs.
fn scan_square(
    q: &Quasigroup,
    conv: Convention,
    open: &[(usize, DerivativeSpec, UnitKind)],
) -> Vec<(usize, Element)> {
    let probe = SquareProbe::new(q);
    let n = probe.n;
    let with_paras = conv.source == TranslationSource::Parastrophe;
    let mut hits: Vec<(usize, Element)> = Vec::new();
    let mut refuted = vec![false; open.len()];
    for a in 0..n {
        let tr = ElementTranslations::new(&probe, a, with_paras);
        for (slot, &(case_slot, spec, kind)) in open.iter().enumerate() {
            if refuted[slot] {
                continue;
            }
            let source = if with_paras {
                1 + spec.sigma.index()
            } else {
                0
            };
            let b = probe.paras[spec.sigma.index()].mul_bytes();
            let alpha = tr.perm(source, spec.triple.alpha(), conv.args, n);
            let beta = tr.perm(source, spec.triple.beta(), conv.args, n);
            let gamma = tr.perm(source, spec.triple.gamma(), conv.result, n);
            if !has_unit(kind, n, b, alpha, beta, gamma) {
                refuted[slot] = true;
                hits.push((case_slot, a));
            }
        }
    }
    hits
}

fn search(
    corpus: &CorpusDescriptor,
    conv: Convention,
    cases: &[CaseId],
    opts: &SurveyOptions,
) -> Result<Vec<Option<CaseStatus>>, SurveyError> {
    let stream = corpus.stream(opts.bound)?;
    let run = || search_stream(stream, conv, cases, opts.chunk.max(1));
    if opts.jobs == 0 {
        run()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| SurveyError::Pool(e.to_string()))?;
        pool.install(run)
    }
}

fn search_stream(
    mut stream: Box<dyn Iterator<Item = (usize, usize, Quasigroup)> + Send>,
    conv: Convention,
    cases: &[CaseId],
    chunk_size: usize,
) -> Result<Vec<Option<CaseStatus>>, SurveyError> {
    let mut results: Vec<Option<CaseStatus>> = vec![None; cases.len()];
    loop {
        let open: Vec<(usize, DerivativeSpec, UnitKind)> = cases
            .iter()
            .enumerate()
            .filter(|(i, _)| results[*i].is_none())
            .map(|(i, c)| (i, c.spec, c.unit))
            .collect();
        if open.is_empty() {
            break;
        }
        let chunk: Vec<(usize, usize, Quasigroup)> = stream.by_ref().take(chunk_size).collect();
        if chunk.is_empty() {
            break;
        }
        let hits: Vec<Vec<(usize, Element)>> = chunk
            .par_iter()
            .map(|(_, _, q)| scan_square(q, conv, &open))
            .collect();
        // chunk order is corpus order and each square reports its smallest a,
        // so the first hit per case is the minimum
        for ((order, index, q), square_hits) in chunk.iter().zip(hits) {
            for (case_slot, a) in square_hits {
                if results[case_slot].is_some() {
                    continue;
                }
                let case = cases[case_slot];
                let certificate = Certificate::build(q, a, case, conv).ok_or_else(|| {
                    SurveyError::InvariantBreach(format!(
                        "probe refuted {case} at a={a} but the rebuilt derivative has the unit"
                    ))
                })?;
                results[case_slot] = Some(CaseStatus::Counterexample {
                    order: *order,
                    index: *index,
                    certificate,
                });
            }
        }
    }
    Ok(results)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
    Unknown,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
            Sign::Unknown => '?',
        }
    }

    pub fn from_symbol(c: &str) -> Option<Self> {
        match c {
            "+" => Some(Sign::Plus),
            "-" => Some(Sign::Minus),
            "?" => Some(Sign::Unknown),
            _ => None,
        }
    }
}

/// Signs for the 648 specs in table order, columns `f, e, s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignTable {
    pub rows: Vec<(DerivativeSpec, [Sign; 3])>,
}

pub type PaperTable = SignTable;

impl SignTable {
    pub fn get(&self, case: &CaseId) -> Option<Sign> {
        self.rows
            .iter()
            .find(|(s, _)| *s == case.spec)
            .map(|(_, signs)| signs[case.unit.index()])
    }

    pub fn count(&self, sign: Sign) -> usize {
        self.rows
            .iter()
            .flat_map(|(_, s)| s.iter())
            .filter(|&&s| s == sign)
            .count()
    }

    pub fn check_shape(&self) -> Result<(), SurveyError> {
        let expected = enumerate_specs();
        if self.rows.len() != expected.len() {
            return Err(SurveyError::ShapeMismatch {
                expected: expected.len(),
                found: self.rows.len(),
            });
        }
        if self.rows.iter().zip(&expected).any(|((s, _), e)| s != e) {
            return Err(SurveyError::InvariantBreach(
                "table rows are not in canonical spec order".into(),
            ));
        }
        Ok(())
    }
}

/// Minus where a counterexample was found, plus otherwise.
pub fn compute_table(result: &SurveyResult) -> SignTable {
    let mut rows: Vec<(DerivativeSpec, [Sign; 3])> = enumerate_specs()
        .into_iter()
        .map(|s| (s, [Sign::Plus; 3]))
        .collect();
    let index: HashMap<DerivativeSpec, usize> =
        rows.iter().enumerate().map(|(i, (s, _))| (*s, i)).collect();
    for outcome in &result.cases {
        if let Some(&i) = index.get(&outcome.case.spec) {
            rows[i].1[outcome.case.unit.index()] = outcome.status.sign();
        }
    }
    SignTable { rows }
}

/// Runs the survey and reduces it to signs.
pub fn compute_table_for(
    corpus: &CorpusDescriptor,
    conv: Convention,
    opts: &SurveyOptions,
) -> Result<SignTable, SurveyError> {
    Ok(compute_table(&run_survey_with(corpus, conv, opts)?))
}

pub fn embedded_paper_table() -> PaperTable {
    crate::reportio::parse_paper_table(crate::reportio::PAPER_TABLE_DATA)
        .expect("shipped table data is well formed")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellStatus {
    Agree,
    Disagree,
    PaperUnknown,
}

impl CellStatus {
    pub fn token(self) -> &'static str {
        match self {
            CellStatus::Agree => "agree",
            CellStatus::Disagree => "disagree",
            CellStatus::PaperUnknown => "paper_unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffCell {
    pub case: CaseId,
    pub paper: Sign,
    pub computed: Sign,
    pub status: CellStatus,
    /// Present exactly when the computed sign is minus.
    pub certificate: Option<Certificate>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffReport {
    pub convention: Convention,
    pub corpus: CorpusDescriptor,
    pub cells: Vec<DiffCell>,
}

impl DiffReport {
    pub fn agreement(&self) -> usize {
        self.count(CellStatus::Agree)
    }

    pub fn count(&self, status: CellStatus) -> usize {
        self.cells.iter().filter(|c| c.status == status).count()
    }

    pub fn cell(&self, case: &CaseId) -> Option<&DiffCell> {
        self.cells.iter().find(|c| c.case == *case)
    }
}

/// Compares a survey against the published signs cell by cell.
pub fn diff_against_paper(
    computed: &SurveyResult,
    paper: &PaperTable,
) -> Result<DiffReport, SurveyError> {
    paper.check_shape()?;
    let expected = all_cases().len();
    if computed.cases.len() != expected {
        return Err(SurveyError::ShapeMismatch {
            expected,
            found: computed.cases.len(),
        });
    }
    let cells = computed
        .cases
        .iter()
        .map(|outcome| {
            let paper_sign = paper.get(&outcome.case).ok_or_else(|| {
                SurveyError::InvariantBreach(format!("{} missing from table", outcome.case))
            })?;
            let computed_sign = outcome.status.sign();
            let status = match paper_sign {
                Sign::Unknown => CellStatus::PaperUnknown,
                s if s == computed_sign => CellStatus::Agree,
                _ => CellStatus::Disagree,
            };
            Ok(DiffCell {
                case: outcome.case,
                paper: paper_sign,
                computed: computed_sign,
                status,
                certificate: outcome.status.certificate().cloned(),
            })
        })
        .collect::<Result<Vec<_>, SurveyError>>()?;
    Ok(DiffReport {
        convention: computed.convention,
        corpus: computed.corpus,
        cells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivative::TripleComponent as C;
    use crate::qcore::TranslationKind as K;
    use crate::units::unit;

    fn example_case(unit: UnitKind) -> CaseId {
        CaseId {
            spec: DerivativeSpec::of(ParastropheSym::S23, K::L.into(), K::Pinv.into(), C::E),
            unit,
        }
    }

    fn right_derivative_case() -> CaseId {
        CaseId {
            spec: DerivativeSpec::of(ParastropheSym::Id, K::L.into(), C::E, K::L.into()),
            unit: UnitKind::LeftF,
        }
    }

    #[test]
    fn case_space() {
        let cases = all_cases();
        assert_eq!(cases.len(), 1944);
        let distinct: std::collections::HashSet<_> = cases.iter().collect();
        assert_eq!(distinct.len(), 1944);
    }

    #[test]
    fn probe_agrees_with_full_rebuild_on_order_three() {
        let specs = enumerate_specs();
        for q in crate::corpus::enumerate_all(3).unwrap() {
            for conv in [Convention::A, Convention::all()[5]] {
                let open: Vec<_> = specs
                    .iter()
                    .flat_map(|&s| UnitKind::ALL.map(|u| (s, u)))
                    .enumerate()
                    .map(|(i, (s, u))| (i, s, u))
                    .collect();
                let hits: HashMap<usize, Element> =
                    scan_square(&q, conv, &open).into_iter().collect();
                for &(slot, spec, kind) in &open {
                    let first = (0..3)
                        .find(|&a| unit(&apply_derivative(&q, a, &spec, conv), kind).is_none());
                    assert_eq!(hits.get(&slot).copied(), first, "{spec}/{kind} {conv}");
                }
            }
        }
    }

    #[test]
    fn example_case_counterexample_at_z3() {
        let cert = minimal_counterexample(example_case(UnitKind::LeftF), Convention::A, 3)
            .unwrap()
            .expect("counterexample");
        assert_eq!(cert.table, Quasigroup::cyclic(3).rows());
        assert_eq!(cert.a, 0);
        assert!(cert.is_valid());
        let cert = minimal_counterexample(example_case(UnitKind::RightE), Convention::A, 3)
            .unwrap()
            .expect("counterexample");
        assert_eq!(cert.order(), 3);
    }

    #[test]
    fn right_derivative_has_no_counterexample() {
        assert_eq!(
            minimal_counterexample(right_derivative_case(), Convention::A, 4).unwrap(),
            None
        );
    }

    #[test]
    fn tampered_certificate_fails() {
        let cert = minimal_counterexample(example_case(UnitKind::LeftF), Convention::A, 3)
            .unwrap()
            .unwrap();
        // the diamond table of Z3 at a=0: row 0 is 0 2 1, so x=0 satisfies 0⋄0=0
        let mut bad = cert.clone();
        bad.witnesses[0] = 0;
        assert_eq!(
            verify_certificate(&bad),
            Err(CertificateError::WitnessFails {
                candidate: 0,
                witness: 0
            })
        );
        let mut bad = cert.clone();
        bad.derived[0][0] = 1;
        assert!(matches!(
            verify_certificate(&bad),
            Err(CertificateError::DerivedMismatch { row: 0, col: 0 })
        ));
        let mut bad = cert.clone();
        bad.witnesses.pop();
        assert!(matches!(
            verify_certificate(&bad),
            Err(CertificateError::Malformed {
                field: "witnesses",
                ..
            })
        ));
        let mut bad = cert;
        bad.table[0][0] = 1;
        assert!(matches!(
            verify_certificate(&bad),
            Err(CertificateError::NotLatin(_))
        ));
    }

    #[test]
    fn singleton_corpus_is_all_plus() {
        let table = compute_table_for(
            &CorpusDescriptor::exhaustive(1),
            Convention::A,
            &SurveyOptions::default(),
        )
        .unwrap();
        assert_eq!(table.count(Sign::Plus), 1944);
    }

    #[test]
    fn paper_table_shape() {
        let paper = embedded_paper_table();
        paper.check_shape().unwrap();
        assert_eq!(paper.count(Sign::Unknown), 1);
        assert_eq!(paper.count(Sign::Plus) + paper.count(Sign::Minus), 1943);
    }
}
