use qderiv::checks::squares_up_to;
use qderiv::derivative::TheoremClaim;
use qderiv::reportio::{emit_survey, parse_case, parse_survey};
use qderiv::survey::{
    all_cases, compute_table, minimal_counterexample, run_survey_with, verify_certificate, Sign,
    SurveyOptions,
};
use qderiv::{apply_derivative, enumerate_specs, unit_profile, Convention, CorpusDescriptor};

fn opts(jobs: usize) -> SurveyOptions {
    SurveyOptions {
        jobs,
        ..SurveyOptions::default()
    }
}

#[test]
fn classical_derivatives_have_no_counterexample() {
    for text in ["e:L,E,L/f", "e:E,R,R/e", "e:R,Li,E/f", "e:Ri,L,E/e"] {
        let case = parse_case(text).unwrap();
        assert_eq!(
            minimal_counterexample(case, Convention::A, 4).unwrap(),
            None,
            "{text}"
        );
    }
}

#[test]
fn survey_is_monotone_in_the_corpus() {
    let small = run_survey_with(&CorpusDescriptor::exhaustive(3), Convention::A, &opts(1)).unwrap();
    let large = run_survey_with(&CorpusDescriptor::exhaustive(4), Convention::A, &opts(1)).unwrap();
    let (small, large) = (compute_table(&small), compute_table(&large));
    for case in all_cases() {
        if small.get(&case) == Some(Sign::Minus) {
            assert_eq!(large.get(&case), Some(Sign::Minus), "{case}");
        }
    }
}

#[test]
fn job_count_does_not_change_the_document() {
    let corpus = CorpusDescriptor::exhaustive(4);
    let docs: Vec<String> = [1, 4, 8]
        .into_iter()
        .map(|j| emit_survey(&run_survey_with(&corpus, Convention::A, &opts(j)).unwrap()))
        .collect();
    assert_eq!(docs[0], docs[1]);
    assert_eq!(docs[0], docs[2]);
}

#[test]
fn survey_document_round_trips_and_certificates_check() {
    let conv = Convention::all()[3];
    let result = run_survey_with(&CorpusDescriptor::exhaustive(3), conv, &opts(2)).unwrap();
    let doc = emit_survey(&result);
    assert_eq!(parse_survey(&doc).unwrap(), result);
    assert!(result.certificates().count() > 0);
    for cert in result.certificates() {
        verify_certificate(cert).unwrap();
    }
}

#[test]
fn random_corpus_is_reproducible() {
    let corpus: CorpusDescriptor = "random:6:seed=9:count=40".parse().unwrap();
    let a = emit_survey(&run_survey_with(&corpus, Convention::A, &opts(1)).unwrap());
    let b = emit_survey(&run_survey_with(&corpus, Convention::A, &opts(3)).unwrap());
    assert_eq!(a, b);
}

#[test]
fn every_spec_is_latin_at_order_three() {
    for q in squares_up_to(3).filter(|q| q.order() == 3) {
        for conv in Convention::all() {
            for spec in enumerate_specs() {
                for a in 0..3 {
                    let d = apply_derivative(&q, a, &spec, conv);
                    assert!(qderiv::Quasigroup::from_table(3, &d.rows()).is_ok());
                }
            }
        }
    }
}

#[test]
fn theorem_claims_report_per_convention() {
    let squares: Vec<_> = squares_up_to(3).collect();
    for claim in TheoremClaim::ALL {
        let rows = qderiv::checks::verify_theorem(&squares, claim);
        assert_eq!(rows.len(), 8);
        assert!(rows
            .iter()
            .all(|r| r.pairs == rows[0].pairs && r.with_unit <= r.pairs));
    }
}

#[test]
fn trivial_orders_have_every_unit() {
    for q in squares_up_to(2) {
        let p = unit_profile(&q);
        assert!(
            p.left.is_some() && p.right.is_some() && p.middle.is_some(),
            "{:?}",
            q.rows()
        );
    }
}
