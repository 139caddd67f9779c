//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Set `QD_ACCEPT_ORDER=4` to run the paper diff at order 4 (quick mode).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use qderiv::checks::{self, squares_up_to};
use qderiv::corpus::{count_all, count_reduced};
use qderiv::reportio::{emit_diff_report, parse_case};
use qderiv::survey::{
    all_cases, diff_against_paper, embedded_paper_table, run_survey, verify_certificate, CaseId,
    CellStatus, Certificate, CertificateError, Sign,
};
use qderiv::{enumerate_specs, Convention, CorpusDescriptor};

type Criterion<'a> = Box<dyn Fn() -> Verdict + 'a>;

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        ok,
        detail: detail.into(),
    }
}

fn qderiv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qderiv"))
        .args(args)
        .env_remove("QD_MAX_ORDER")
        .output()
        .expect("run qderiv binary")
}

fn within(t: Instant, limit: Duration) -> (bool, String) {
    let e = t.elapsed();
    (
        e < limit,
        format!("{:.2}s (limit {}s)", e.as_secs_f64(), limit.as_secs()),
    )
}

fn example() -> Verdict {
    let t = Instant::now();
    let r = checks::verify_example();
    let out = qderiv(&["verify", "example"]);
    let (fast, time) = within(t, Duration::from_secs(1));
    let cli_ok = out.status.code() == Some(0);
    verdict(
        r.passed() && cli_ok && fast,
        format!(
            "tables {}/{}, units {}/{}, cli exit {:?}, {time}",
            r.first_matches,
            r.second_matches,
            r.first_has_no_left_or_right_unit,
            r.second_has_no_middle_unit,
            out.status.code()
        ),
    )
}

fn cardinalities() -> Verdict {
    let specs = enumerate_specs().len();
    let cases = all_cases().len();
    verdict(
        specs == 648 && cases == 1944,
        format!("{specs} specs, {cases} cases"),
    )
}

fn lemma() -> Verdict {
    let t = Instant::now();
    let corpus: Vec<_> = squares_up_to(4).collect();
    let small = corpus.len();
    let r = checks::verify_lemma(corpus.into_iter().chain(checks::random_squares(8, 1, 1000)));
    let (fast, time) = within(t, Duration::from_secs(10));
    verdict(
        small == 591 && r.passed() && fast,
        format!(
            "{small} small squares + 1000 order-8, {} checks, failures {}/{}/{}/{}, {time}",
            r.checked(),
            r.right.failures,
            r.left.failures,
            r.middle.failures,
            r.middle_inverse.failures
        ),
    )
}

fn derived_equations() -> Verdict {
    let r = checks::verify_derived_equations(squares_up_to(4));
    verdict(
        r.passed() && r.right.checked > 0,
        format!("right {}, left {}", r.right, r.left),
    )
}

fn table1() -> Verdict {
    let t = checks::verify_table1(squares_up_to(4).chain(checks::random_squares(8, 1, 100)));
    verdict(t.passed() && t.checked > 0, format!("{t}"))
}

fn closure() -> Verdict {
    let squares =
        checks::verify_birkhoff_closure(squares_up_to(4).chain(checks::random_squares(8, 1, 100)));
    let algebras = checks::verify_birkhoff_closure_all_algebras(2);
    verdict(
        squares.passed() && algebras.passed(),
        format!(
            "{} squares, {} order-2 algebras ({} satisfy the premise); {} / {}",
            squares.examined,
            algebras.examined,
            algebras.premise_holds,
            squares.conclusion,
            algebras.conclusion
        ),
    )
}

fn enumeration() -> Verdict {
    let small: Vec<u64> = (1..=4).map(|n| count_all(n).unwrap()).collect();
    let t = Instant::now();
    let reduced = count_reduced(5).unwrap();
    let all5 = count_all(5).unwrap();
    let (fast, time) = within(t, Duration::from_secs(120));
    let cli = qderiv(&["enumerate", "--order", "4", "--count-only"]);
    let cli_ok = String::from_utf8_lossy(&cli.stdout).trim() == "576";
    verdict(
        small == [1, 2, 12, 576]
            && reduced == 56
            && all5 == reduced * 120 * 24
            && all5 == 161_280
            && cli_ok
            && fast,
        format!("{small:?}, n=5: {all5} = {reduced} reduced x 120 x 24, {time}"),
    )
}

fn determinism(dir: &Path) -> Verdict {
    let mut docs = Vec::new();
    for jobs in ["1", "8"] {
        let out = dir.join(format!("survey4-j{jobs}.json"));
        let o = qderiv(&[
            "--jobs",
            jobs,
            "survey",
            "--corpus",
            "exhaustive:4",
            "--convention",
            "A",
            "--out",
            out.to_str().unwrap(),
        ]);
        if o.status.code() != Some(0) {
            return verdict(false, format!("jobs {jobs}: exit {:?}", o.status.code()));
        }
        docs.push(fs::read(&out).unwrap());
    }
    verdict(docs[0] == docs[1], format!("{} bytes each", docs[0].len()))
}

/// Points a witness at an `x` where the unit equation holds, if there is one.
fn mutate_witness(cert: &Certificate) -> Option<Certificate> {
    let n = cert.order();
    let op = |x: usize, y: usize| cert.derived[x][y];
    (0..n).find_map(|u| {
        (0..n)
            .find(|&x| cert.case.unit.holds_at(op, u, x))
            .map(|x| {
                let mut bad = cert.clone();
                bad.witnesses[u] = x;
                bad
            })
    })
}

fn certificates() -> Verdict {
    let result = run_survey(&CorpusDescriptor::exhaustive(4), Convention::A).unwrap();
    let certs: Vec<_> = result.certificates().collect();
    let invalid = certs
        .iter()
        .filter(|c| verify_certificate(c).is_err())
        .count();
    let mut mutated = 0;
    let mut caught = 0;
    for cert in &certs {
        if let Some(bad) = mutate_witness(cert) {
            mutated += 1;
            if matches!(
                verify_certificate(&bad),
                Err(CertificateError::WitnessFails { .. })
            ) {
                caught += 1;
            }
        }
    }
    verdict(
        !certs.is_empty() && invalid == 0 && mutated > 0 && caught == mutated,
        format!(
            "{} certificates, {invalid} invalid; {caught}/{mutated} witness mutations rejected",
            certs.len()
        ),
    )
}

fn count_cells(report: &str) -> usize {
    report
        .lines()
        .filter(|l| l.starts_with("| ") && !l.starts_with("| op "))
        .map(|l| l.split('|').skip(2).filter(|c| c.contains('/')).count())
        .sum()
}

fn paper_diff(dir: &Path, order: usize) -> Verdict {
    let t = Instant::now();
    let survey = dir.join(format!("survey{order}.json"));
    let corpus = format!("exhaustive:{order}");
    let o = qderiv(&[
        "survey",
        "--corpus",
        &corpus,
        "--out",
        survey.to_str().unwrap(),
    ]);
    if o.status.code() != Some(0) {
        return verdict(false, format!("survey exit {:?}", o.status.code()));
    }
    let o = qderiv(&["diff-paper", survey.to_str().unwrap()]);
    if o.status.code() != Some(0) {
        return verdict(false, format!("diff-paper exit {:?}", o.status.code()));
    }
    let text = String::from_utf8_lossy(&o.stdout).into_owned();
    let cells = count_cells(&text);

    let paper = embedded_paper_table();
    let desc: CorpusDescriptor = corpus.parse().unwrap();
    let mut reports = Vec::new();
    for conv in Convention::all() {
        let result = run_survey(&desc, conv).unwrap();
        reports.push(diff_against_paper(&result, &paper).unwrap());
    }
    let a = &reports[0];
    let same_doc = emit_diff_report(a) == text;

    let example_row = ["f", "e", "s"].iter().all(|u| {
        let case: CaseId = parse_case(&format!("23:L,Pi,E/{u}")).unwrap();
        let c = a.cell(&case).unwrap();
        c.paper == Sign::Minus && c.status == CellStatus::Agree
    });
    let unknown: Vec<_> = a
        .cells
        .iter()
        .filter(|c| c.status == CellStatus::PaperUnknown)
        .collect();
    let unknown_ok = unknown.len() == 1 && unknown[0].case.to_string() == "e:E,R,L/e";

    let disagree: Vec<_> = a
        .cells
        .iter()
        .filter(|c| c.status == CellStatus::Disagree)
        .collect();
    let refuted: Vec<_> = disagree
        .iter()
        .filter(|c| c.computed == Sign::Minus)
        .collect();
    let certified = refuted
        .iter()
        .filter(|c| {
            c.certificate
                .as_ref()
                .is_some_and(|k| verify_certificate(k).is_ok())
        })
        .count();
    let unrefuted = disagree.len() - refuted.len();

    let (fast, time) = within(t, Duration::from_secs(30 * 60));
    let summary: Vec<String> = reports
        .iter()
        .map(|r| format!("{}={}", r.convention, r.agreement()))
        .collect();
    verdict(
        cells == 1944 && same_doc && example_row && unknown_ok && certified == refuted.len() && fast,
        format!(
            "{corpus}: {cells} cells, conv A agreement {}/1944, paper_unknown {}, example row agrees; \
             {certified}/{} computed-minus disagreements carry valid certificates, \
             {unrefuted} paper-minus cells have no counterexample in the corpus (bounded evidence, \
             nothing to certify); all conventions [{}]; {time}",
            a.agreement(),
            unknown.len(),
            refuted.len(),
            summary.join(", ")
        ),
    )
}

fn main() {
    let order: usize = std::env::var("QD_ACCEPT_ORDER")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(5);
    let dir: PathBuf =
        std::env::temp_dir().join(format!("qderiv-acceptance-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();

    let criteria: Vec<(&str, Criterion)> = vec![
        ("example reproduction", Box::new(example)),
        ("cardinalities", Box::new(cardinalities)),
        ("lemma suite", Box::new(lemma)),
        ("derivative equations", Box::new(derived_equations)),
        ("translation transfer", Box::new(table1)),
        ("birkhoff closure", Box::new(closure)),
        ("enumeration counts", Box::new(enumeration)),
        ("survey determinism", Box::new(|| determinism(&dir))),
        ("certificate soundness", Box::new(certificates)),
        ("paper diff", Box::new(|| paper_diff(&dir, order))),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let v = check();
        if !v.ok {
            failed += 1;
        }
        println!(
            "criterion {:>2} {:<22} {} {}",
            i + 1,
            name,
            if v.ok { "PASS" } else { "FAIL" },
            v.detail
        );
    }
    let _ = fs::remove_dir_all(&dir);
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 10 criteria passed");
}
