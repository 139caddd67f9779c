//! Whole-corpus property checks behind the `verify` commands.

use std::fmt;

use crate::corpus::{enumerate_all_bounded, random_square_with, DEFAULT_BOUND};
use crate::derivative::{
    apply_derivative, left_derivative, middle_derivative, middle_inverse_derivative,
    right_derivative, theorem_check, Convention, DerivativeSpec, TheoremClaim, TripleComponent,
};
use crate::parastrophe::{verify_translation_transfer, ParastropheSym};
use crate::qcore::{check_identities_with, BirkhoffIdentity, Element, Quasigroup, TranslationKind};
use crate::units::{left_unit, middle_unit, right_unit};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Every square of orders `1..=max_order`, in enumeration order.
pub fn squares_up_to(max_order: usize) -> impl Iterator<Item = Quasigroup> {
    (1..=max_order).flat_map(move |n| {
        enumerate_all_bounded(n, max_order.max(DEFAULT_BOUND)).expect("order within bound")
    })
}

/// `count` random squares of order `n` from one seeded stream.
pub fn random_squares(n: usize, seed: u64, count: usize) -> impl Iterator<Item = Quasigroup> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(move |_| random_square_with(n, &mut rng))
}

/// Tally of a property checked over many instances.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    pub checked: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        self.failures += other.failures;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
    }
}

impl fmt::Display for Tally {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} checked, {} failures", self.checked, self.failures)?;
        if let Some(first) = &self.first_failure {
            write!(f, " (first: {first})")?;
        }
        Ok(())
    }
}

fn rows(q: &Quasigroup) -> Vec<Vec<Element>> {
    q.rows()
}

#[derive(Debug, Clone)]
pub struct ExampleReport {
    pub first: Vec<Vec<Element>>,
    pub second: Vec<Vec<Element>>,
    pub first_matches: bool,
    pub second_matches: bool,
    pub first_has_no_left_or_right_unit: bool,
    pub second_has_no_middle_unit: bool,
}

impl ExampleReport {
    pub fn passed(&self) -> bool {
        self.first_matches
            && self.second_matches
            && self.first_has_no_left_or_right_unit
            && self.second_has_no_middle_unit
    }
}

pub const EXAMPLE_SPEC: &str = "23:L,Pi,E";
pub const EXAMPLE_BASE_SECOND: [[Element; 3]; 3] = [[1, 2, 0], [0, 1, 2], [2, 0, 1]];
pub const EXAMPLE_DIAMOND_FIRST: [[Element; 3]; 3] = [[0, 2, 1], [2, 1, 0], [1, 0, 2]];
pub const EXAMPLE_DIAMOND_SECOND: [[Element; 3]; 3] = [[1, 2, 0], [2, 0, 1], [0, 1, 2]];

/// `x ⋄ y = (a·x)\(a/y)` at `a = 0` on the two printed order-3 quasigroups.
pub fn verify_example() -> ExampleReport {
    let spec = DerivativeSpec::of(
        ParastropheSym::S23,
        TranslationKind::L.into(),
        TranslationKind::Pinv.into(),
        TripleComponent::E,
    );
    let z3 = Quasigroup::cyclic(3);
    let second = Quasigroup::from_table(3, &EXAMPLE_BASE_SECOND).expect("printed table is Latin");
    let d1 = apply_derivative(&z3, 0, &spec, Convention::A);
    let d2 = apply_derivative(&second, 0, &spec, Convention::A);
    let as_vec = |t: &[[Element; 3]; 3]| t.iter().map(|r| r.to_vec()).collect::<Vec<_>>();
    ExampleReport {
        first_matches: rows(&d1) == as_vec(&EXAMPLE_DIAMOND_FIRST),
        second_matches: rows(&d2) == as_vec(&EXAMPLE_DIAMOND_SECOND),
        first_has_no_left_or_right_unit: left_unit(&d1).is_none() && right_unit(&d1).is_none(),
        second_has_no_middle_unit: middle_unit(&d2).is_none(),
        first: rows(&d1),
        second: rows(&d2),
    }
}

/// Units of the four classical derivatives, with the explicit local units.
#[derive(Debug, Clone, Default)]
pub struct LemmaReport {
    pub right: Tally,
    pub left: Tally,
    pub middle: Tally,
    pub middle_inverse: Tally,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.right.passed()
            && self.left.passed()
            && self.middle.passed()
            && self.middle_inverse.passed()
    }

    pub fn checked(&self) -> usize {
        self.right.checked + self.left.checked + self.middle.checked + self.middle_inverse.checked
    }
}

pub fn verify_lemma(squares: impl IntoIterator<Item = Quasigroup>) -> LemmaReport {
    let mut r = LemmaReport::default();
    for q in squares {
        for a in 0..q.order() {
            let (a_ldiv_a, a_rdiv_a) = (q.ldiv(a, a), q.rdiv(a, a));
            let at = || format!("a={a} in {:?}", q.rows());
            r.right
                .record(left_unit(&right_derivative(&q, a)) == Some(a_ldiv_a), at);
            r.left
                .record(right_unit(&left_derivative(&q, a)) == Some(a_rdiv_a), at);
            r.middle
                .record(left_unit(&middle_derivative(&q, a)) == Some(a_rdiv_a), at);
            r.middle_inverse.record(
                right_unit(&middle_inverse_derivative(&q, a)) == Some(a_ldiv_a),
                at,
            );
        }
    }
    r
}

/// `(a·x)·y = a·(x∘y)` for the right derivative and
/// `(x∗y)·a = x·(y·a)` for the left derivative, pointwise.
#[derive(Debug, Clone, Default)]
pub struct DerivedEquationReport {
    pub right: Tally,
    pub left: Tally,
}

impl DerivedEquationReport {
    pub fn passed(&self) -> bool {
        self.right.passed() && self.left.passed()
    }
}

pub fn verify_derived_equations(
    squares: impl IntoIterator<Item = Quasigroup>,
) -> DerivedEquationReport {
    let mut r = DerivedEquationReport::default();
    for q in squares {
        let n = q.order();
        for a in 0..n {
            let rd = right_derivative(&q, a);
            let ld = left_derivative(&q, a);
            for x in 0..n {
                for y in 0..n {
                    let at = || format!("a={a} x={x} y={y} in {:?}", q.rows());
                    r.right
                        .record(q.mul(q.mul(a, x), y) == q.mul(a, rd.mul(x, y)), at);
                    r.left
                        .record(q.mul(ld.mul(x, y), a) == q.mul(x, q.mul(y, a)), at);
                }
            }
        }
    }
    r
}

/// All 36 translation-transfer cells on every square.
pub fn verify_table1(squares: impl IntoIterator<Item = Quasigroup>) -> Tally {
    let mut t = Tally::default();
    for q in squares {
        let report = verify_translation_transfer(&q);
        for cell in &report.cells {
            t.record(cell.first_failure.is_none(), || {
                format!(
                    "{}^({}) != {} at a={} in {:?}",
                    cell.kind,
                    cell.sigma,
                    cell.expected,
                    cell.first_failure.unwrap_or_default(),
                    q.rows()
                )
            });
        }
    }
    t
}

/// Identities `x/(y\x) = y` and `(x/y)\x = y` wherever the first four hold.
#[derive(Debug, Clone, Default)]
pub struct ClosureReport {
    /// Algebras on which the first four identities hold.
    pub premise_holds: usize,
    /// Algebras examined.
    pub examined: usize,
    pub conclusion: Tally,
}

impl ClosureReport {
    pub fn passed(&self) -> bool {
        self.conclusion.passed()
    }

    fn absorb(&mut self, n: usize, mul: &[usize], ldiv: &[usize], rdiv: &[usize]) {
        self.examined += 1;
        let report = check_identities_with(
            n,
            |x, y| mul[x * n + y],
            |x, y| ldiv[x * n + y],
            |y, x| rdiv[y * n + x],
        );
        let premise = [
            BirkhoffIdentity::SL,
            BirkhoffIdentity::SR,
            BirkhoffIdentity::IL,
            BirkhoffIdentity::IR,
        ]
        .iter()
        .all(|&i| report.holds(i));
        if premise {
            self.premise_holds += 1;
            self.conclusion.record(
                report.holds(BirkhoffIdentity::SP) && report.holds(BirkhoffIdentity::IP),
                || format!("mul={mul:?} ldiv={ldiv:?} rdiv={rdiv:?}"),
            );
        }
    }
}

/// Runs the closure check on each quasigroup's stored operations.
pub fn verify_birkhoff_closure(squares: impl IntoIterator<Item = Quasigroup>) -> ClosureReport {
    let mut r = ClosureReport::default();
    for q in squares {
        let n = q.order();
        let mul = q.flat_table();
        let ldiv: Vec<_> = (0..n * n).map(|i| q.ldiv(i / n, i % n)).collect();
        let rdiv: Vec<_> = (0..n * n).map(|i| q.rdiv(i / n, i % n)).collect();
        r.absorb(n, &mul, &ldiv, &rdiv);
    }
    r
}

/// Runs the closure check over every triple of operations on a set of
/// `n` elements (`n^(3n²)` algebras; use only for `n ≤ 2`).
pub fn verify_birkhoff_closure_all_algebras(n: usize) -> ClosureReport {
    let cells = n * n;
    let per_op = n.pow(cells as u32);
    let decode = |mut code: usize| {
        let mut t = vec![0; cells];
        for slot in t.iter_mut() {
            *slot = code % n;
            code /= n;
        }
        t
    };
    let tables: Vec<Vec<usize>> = (0..per_op).map(decode).collect();
    let mut r = ClosureReport::default();
    for mul in &tables {
        for ldiv in &tables {
            for rdiv in &tables {
                r.absorb(n, mul, ldiv, rdiv);
            }
        }
    }
    r
}

/// How often each theorem claim's unit exists, per convention.
#[derive(Debug, Clone)]
pub struct TheoremRow {
    pub convention: Convention,
    pub pairs: usize,
    pub with_unit: usize,
    pub first_without: Option<String>,
}

pub fn verify_theorem(squares: &[Quasigroup], claim: TheoremClaim) -> Vec<TheoremRow> {
    Convention::all()
        .into_iter()
        .map(|conv| {
            let mut row = TheoremRow {
                convention: conv,
                pairs: 0,
                with_unit: 0,
                first_without: None,
            };
            for q in squares {
                for a in 0..q.order() {
                    row.pairs += 1;
                    if theorem_check(q, a, claim, conv).is_some() {
                        row.with_unit += 1;
                    } else if row.first_without.is_none() {
                        row.first_without = Some(format!("a={a} in {:?}", q.rows()));
                    }
                }
            }
            row
        })
        .collect()
}

pub fn merge_tallies(tallies: impl IntoIterator<Item = Tally>) -> Tally {
    let mut out = Tally::default();
    for t in tallies {
        out.merge(t);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_passes() {
        let r = verify_example();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn small_corpus_counts() {
        assert_eq!(squares_up_to(4).count(), 591);
    }

    #[test]
    fn lemma_on_order_three() {
        let r = verify_lemma(squares_up_to(3));
        assert!(r.passed());
        assert_eq!(r.right.checked, 1 + 2 * 2 + 12 * 3);
    }

    #[test]
    fn closure_over_all_order_two_algebras() {
        let r = verify_birkhoff_closure_all_algebras(2);
        assert_eq!(r.examined, 16 * 16 * 16);
        // Z2 and its isotope 1+x+y each have exactly one division pair
        assert_eq!(r.premise_holds, 2);
        assert!(r.passed());
    }

    #[test]
    fn theorem_claims_report_all_conventions() {
        let squares: Vec<_> = squares_up_to(3).collect();
        let rows = verify_theorem(&squares, TheoremClaim::Three);
        assert_eq!(rows.len(), 8);
        assert!(rows.iter().all(|r| r.pairs == 41));
    }
}
