use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};

use qderiv::checks;
use qderiv::corpus::{self, CorpusDescriptor, DEFAULT_BOUND};
use qderiv::derivative::{apply_derivative, Convention, TheoremClaim};
use qderiv::parastrophe::{apply_parastrophe, ParastropheSym};
use qderiv::qcore::Quasigroup;
use qderiv::reportio;
use qderiv::survey::{self, SurveyError, SurveyOptions};
use qderiv::units::unit_profile;

macro_rules! out {
    ($($t:tt)*) => { write!(io::stdout(), $($t)*)? };
}

macro_rules! outln {
    ($($t:tt)*) => { writeln!(io::stdout(), $($t)*)? };
}

const EXIT_USAGE: u8 = 1;
const EXIT_COUNTEREXAMPLE: u8 = 2;
const EXIT_BREACH: u8 = 3;

#[derive(Parser)]
#[command(
    name = "qderiv",
    version,
    about = "Generalized derivatives of finite quasigroups and their units"
)]
struct Cli {
    /// Worker threads (0 = all cores). Never changes any output byte.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Largest order enumerated exhaustively (also QD_MAX_ORDER).
    #[arg(long, global = true)]
    bound: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a Cayley table file is a quasigroup
    Validate { file: PathBuf },
    /// Print a parastrophe (e, 12, 13, 23, 123, 132)
    Parastrophe {
        file: PathBuf,
        #[arg(long)]
        sigma: String,
    },
    /// Print a generalized derivative
    Derive {
        file: PathBuf,
        #[arg(long)]
        a: usize,
        /// e.g. 23:L,Pi,E
        #[arg(long)]
        spec: String,
        #[arg(long, default_value = "A")]
        convention: String,
    },
    /// Print left, right and middle units
    Units { file: PathBuf },
    /// Enumerate Latin squares of one order
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        reduced: bool,
        #[arg(long)]
        count_only: bool,
    },
    /// Survey all 1944 cases over a corpus
    Survey {
        /// exhaustive:N, reduced:N or random:N:seed=S:count=C
        #[arg(long)]
        corpus: String,
        #[arg(long, default_value = "A")]
        convention: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for the minimal counterexample of one case (exit 2 if found)
    Certify {
        /// e.g. 23:L,Pi,E/f
        #[arg(long)]
        case: String,
        #[arg(long, default_value = "A")]
        convention: String,
        #[arg(long, default_value_t = 5)]
        max_order: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a built-in check
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Diff survey documents against the published unit table
    DiffPaper {
        surveys: Vec<PathBuf>,
        /// Survey every convention over this corpus instead of reading files
        #[arg(long)]
        all_conventions: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the published unit table
    PaperTable {
        #[arg(long)]
        markdown: bool,
    },
}

#[derive(Subcommand)]
enum VerifyTarget {
    /// Rebuild both worked-example derivative tables
    Example,
    /// Units of the four classical derivatives
    Lemma {
        #[arg(long)]
        corpus: Option<String>,
    },
    /// Translation-transfer table on a corpus
    Table1 {
        #[arg(long)]
        corpus: Option<String>,
    },
    /// Defining equations of the right and left derivatives
    Derived {
        #[arg(long)]
        corpus: Option<String>,
    },
    /// Birkhoff closure: the two middle identities follow from the other four
    Closure {
        #[arg(long)]
        corpus: Option<String>,
    },
    /// Per-convention results for one theorem claim
    Theorem {
        #[arg(long)]
        claim: u8,
        #[arg(long)]
        corpus: Option<String>,
    },
    /// Re-check a certificate file
    Certificate { file: PathBuf },
}

/// Outcome carried to the exit code.
enum Outcome {
    Ok,
    Counterexample,
    Breach(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Counterexample) => ExitCode::from(EXIT_COUNTEREXAMPLE),
        Ok(Outcome::Breach(msg)) => {
            eprintln!("invariant breach: {msg}");
            ExitCode::from(EXIT_BREACH)
        }
        Err(e) => {
            if e.downcast_ref::<io::Error>()
                .is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe)
            {
                return ExitCode::SUCCESS;
            }
            if let Some(SurveyError::InvariantBreach(msg)) = e.downcast_ref::<SurveyError>() {
                eprintln!("invariant breach: {msg}");
                return ExitCode::from(EXIT_BREACH);
            }
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn bound(cli_bound: Option<usize>) -> Result<usize> {
    let bound = match (cli_bound, std::env::var("QD_MAX_ORDER")) {
        (Some(b), _) => b,
        (None, Ok(v)) => v
            .parse()
            .with_context(|| format!("QD_MAX_ORDER must be an integer, found {v:?}"))?,
        (None, Err(_)) => DEFAULT_BOUND,
    };
    if bound > DEFAULT_BOUND {
        eprintln!(
            "warning: exhaustive bound raised to {bound}; order 6 alone has 812,851,200 squares"
        );
    }
    Ok(bound)
}

fn read_table(path: &Path) -> Result<Quasigroup> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    reportio::parse_cayley(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_out(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            out!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    let opts = SurveyOptions {
        jobs: cli.jobs,
        bound: bound(cli.bound)?,
        ..SurveyOptions::default()
    };
    match cli.command {
        Command::Validate { file } => {
            let q = read_table(&file)?;
            let report = q.check_identities();
            outln!("valid quasigroup of order {}", q.order());
            out!("{report}");
            if !report.all_hold() {
                return Ok(Outcome::Breach(
                    "Birkhoff identities fail on a validated table".into(),
                ));
            }
        }
        Command::Parastrophe { file, sigma } => {
            let q = read_table(&file)?;
            let s = ParastropheSym::from_token(&sigma).ok_or_else(|| {
                anyhow!("unknown parastrophe {sigma:?}; expected e, 12, 13, 23, 123 or 132")
            })?;
            out!("{}", reportio::emit_cayley(&apply_parastrophe(&q, s)));
        }
        Command::Derive {
            file,
            a,
            spec,
            convention,
        } => {
            let q = read_table(&file)?;
            if a >= q.order() {
                bail!("element {a} is outside 0..{}", q.order());
            }
            let spec = reportio::parse_spec(&spec)?;
            let conv = reportio::parse_convention(&convention)?;
            out!(
                "{}",
                reportio::emit_cayley(&apply_derivative(&q, a, &spec, conv))
            );
        }
        Command::Units { file } => {
            let q = read_table(&file)?;
            outln!("{}", unit_profile(&q));
        }
        Command::Enumerate {
            order,
            reduced,
            count_only,
        } => {
            let squares = if reduced {
                corpus::enumerate_reduced_bounded(order, opts.bound)?
            } else {
                corpus::enumerate_all_bounded(order, opts.bound)?
            };
            if count_only {
                outln!("{}", squares.count());
            } else {
                for (i, q) in squares.enumerate() {
                    if i > 0 {
                        outln!();
                    }
                    out!("{}", reportio::emit_cayley(&q));
                }
            }
        }
        Command::Survey {
            corpus,
            convention,
            out,
        } => {
            let corpus: CorpusDescriptor = corpus.parse()?;
            let conv = reportio::parse_convention(&convention)?;
            let result = survey::run_survey_with(&corpus, conv, &opts)?;
            let minus = result.certificates().count();
            write_out(out.as_deref(), &reportio::emit_survey(&result))?;
            eprintln!(
                "survey {corpus} `{conv}`: {minus} cases refuted, {} without counterexample",
                result.cases.len() - minus
            );
        }
        Command::Certify {
            case,
            convention,
            max_order,
            out,
        } => {
            let case = reportio::parse_case(&case)?;
            let conv = reportio::parse_convention(&convention)?;
            match survey::minimal_counterexample_with(case, conv, max_order, &opts)? {
                Some(cert) => {
                    if let Err(e) = survey::verify_certificate(&cert) {
                        return Ok(Outcome::Breach(format!("emitted certificate fails: {e}")));
                    }
                    write_out(out.as_deref(), &reportio::emit_certificate(&cert))?;
                    eprintln!(
                        "{case}: counterexample at order {} with a={}",
                        cert.order(),
                        cert.a
                    );
                    return Ok(Outcome::Counterexample);
                }
                None => outln!("{case}: no counterexample up to order {max_order}"),
            }
        }
        Command::Verify { target } => return verify(target, &opts),
        Command::DiffPaper {
            surveys,
            all_conventions,
            out,
        } => {
            let paper = survey::embedded_paper_table();
            let results = match all_conventions {
                Some(corpus) => {
                    let corpus: CorpusDescriptor = corpus.parse()?;
                    Convention::all()
                        .into_iter()
                        .map(|conv| survey::run_survey_with(&corpus, conv, &opts))
                        .collect::<Result<Vec<_>, _>>()?
                }
                None => {
                    if surveys.is_empty() {
                        bail!("diff-paper needs survey files or --all-conventions <corpus>");
                    }
                    surveys
                        .iter()
                        .map(|p| {
                            let text = fs::read_to_string(p)
                                .with_context(|| format!("reading {}", p.display()))?;
                            reportio::parse_survey(&text)
                                .with_context(|| format!("parsing {}", p.display()))
                        })
                        .collect::<Result<Vec<_>>>()?
                }
            };
            let reports = results
                .iter()
                .map(|r| survey::diff_against_paper(r, &paper))
                .collect::<Result<Vec<_>, _>>()?;
            for r in &reports {
                if let Some(bad) = r
                    .cells
                    .iter()
                    .filter_map(|c| c.certificate.as_ref())
                    .find(|c| !c.is_valid())
                {
                    return Ok(Outcome::Breach(format!(
                        "certificate for {} fails",
                        bad.case
                    )));
                }
            }
            let mut text = String::new();
            if reports.len() > 1 {
                text.push_str(&reportio::emit_convention_summary(&reports));
                text.push('\n');
            }
            let docs: Vec<String> = reports.iter().map(reportio::emit_diff_report).collect();
            text.push_str(&docs.join("\n"));
            write_out(out.as_deref(), &text)?;
        }
        Command::PaperTable { markdown } => {
            let table = survey::embedded_paper_table();
            if markdown {
                outln!("{}", reportio::emit_table_markdown(&table)?);
            } else {
                out!("{}", reportio::emit_paper_table(&table));
            }
        }
    }
    Ok(Outcome::Ok)
}

fn corpus_squares(
    corpus: Option<&str>,
    opts: &SurveyOptions,
    random_count: usize,
) -> Result<Vec<Quasigroup>> {
    Ok(match corpus {
        Some(text) => {
            let desc: CorpusDescriptor = text.parse()?;
            desc.stream(opts.bound)?.map(|(_, _, q)| q).collect()
        }
        None => checks::squares_up_to(4)
            .chain(checks::random_squares(8, 1, random_count))
            .collect(),
    })
}

fn status(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn verify(target: VerifyTarget, opts: &SurveyOptions) -> Result<Outcome> {
    let passed = match target {
        VerifyTarget::Example => {
            let r = checks::verify_example();
            let show = |rows: &[Vec<usize>]| {
                rows.iter()
                    .map(|r| {
                        r.iter()
                            .map(ToString::to_string)
                            .collect::<Vec<_>>()
                            .join(" ")
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            outln!("spec {} convention A, a=0", checks::EXAMPLE_SPEC);
            outln!("Z3 ->\n{}", show(&r.first));
            outln!("{} table matches", status(r.first_matches));
            outln!(
                "{} no left and no right unit",
                status(r.first_has_no_left_or_right_unit)
            );
            outln!("second base ->\n{}", show(&r.second));
            outln!("{} table matches", status(r.second_matches));
            outln!("{} no middle unit", status(r.second_has_no_middle_unit));
            r.passed()
        }
        VerifyTarget::Lemma { corpus } => {
            let squares = corpus_squares(corpus.as_deref(), opts, 1000)?;
            let r = checks::verify_lemma(squares);
            outln!(
                "{} right derivative has left unit a\\a: {}",
                status(r.right.passed()),
                r.right
            );
            outln!(
                "{} left derivative has right unit a/a: {}",
                status(r.left.passed()),
                r.left
            );
            outln!(
                "{} middle derivative has left unit a/a: {}",
                status(r.middle.passed()),
                r.middle
            );
            outln!(
                "{} middle inverse derivative has right unit a\\a: {}",
                status(r.middle_inverse.passed()),
                r.middle_inverse
            );
            r.passed()
        }
        VerifyTarget::Table1 { corpus } => {
            let squares = corpus_squares(corpus.as_deref(), opts, 100)?;
            let t = checks::verify_table1(squares);
            outln!("{} translation transfer cells: {t}", status(t.passed()));
            t.passed()
        }
        VerifyTarget::Derived { corpus } => {
            let squares = corpus_squares(corpus.as_deref(), opts, 100)?;
            let r = checks::verify_derived_equations(squares);
            outln!(
                "{} (a·x)·y = a·(x∘y): {}",
                status(r.right.passed()),
                r.right
            );
            outln!("{} (x∗y)·a = x·(y·a): {}", status(r.left.passed()), r.left);
            r.passed()
        }
        VerifyTarget::Closure { corpus } => {
            let squares = corpus_squares(corpus.as_deref(), opts, 100)?;
            let r = checks::verify_birkhoff_closure(squares);
            let all2 = checks::verify_birkhoff_closure_all_algebras(2);
            outln!(
                "{} quasigroups: {} examined, {}",
                status(r.passed()),
                r.examined,
                r.conclusion
            );
            outln!(
                "{} all order-2 algebras: {} examined, {} satisfy the first four, {}",
                status(all2.passed()),
                all2.examined,
                all2.premise_holds,
                all2.conclusion
            );
            r.passed() && all2.passed()
        }
        VerifyTarget::Theorem { claim, corpus } => {
            let claim = TheoremClaim::from_number(claim)
                .ok_or_else(|| anyhow!("--claim must be 1, 2 or 3"))?;
            let squares = match corpus.as_deref() {
                Some(_) => corpus_squares(corpus.as_deref(), opts, 0)?,
                None => checks::squares_up_to(4).collect(),
            };
            let spec = claim.spec();
            outln!(
                "claim {}: {} has a {} unit",
                claim.number(),
                spec,
                claim.unit_kind()
            );
            for row in checks::verify_theorem(&squares, claim) {
                outln!(
                    "`{}` {}/{} (square, a) pairs have the unit{}",
                    row.convention,
                    row.with_unit,
                    row.pairs,
                    row.first_without
                        .map(|w| format!("; first without: {w}"))
                        .unwrap_or_default()
                );
            }
            // reporting only: no convention is asserted
            true
        }
        VerifyTarget::Certificate { file } => {
            let text =
                fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let cert = reportio::parse_certificate(&text)?;
            match survey::verify_certificate(&cert) {
                Ok(()) => {
                    outln!(
                        "PASS certificate for {} (order {}, a={})",
                        cert.case,
                        cert.order(),
                        cert.a
                    );
                    true
                }
                Err(e) => {
                    outln!("FAIL certificate for {}: {e}", cert.case);
                    bail!("certificate does not verify: {e}");
                }
            }
        }
    };
    Ok(if passed {
        Outcome::Ok
    } else {
        Outcome::Breach("verification failed".into())
    })
}
