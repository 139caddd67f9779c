//! Finite quasigroups stored as Cayley tables together with their two
//! division tables, plus translations and the Birkhoff identities.

use std::fmt;

use thiserror::Error;

/// An element of a quasigroup of order `n`, encoded as a dense index in `0..n`.
pub type Element = usize;

/// Largest order representable by the `u8` tables.
pub const MAX_ORDER: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Row,
    Column,
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Line::Row => f.write_str("row"),
            Line::Column => f.write_str("column"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuasigroupError {
    #[error("order must be at least 1")]
    EmptyOrder,
    #[error("order {0} exceeds the supported maximum of {MAX_ORDER}")]
    UnsupportedOrder(usize),
    #[error("expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("row {row} has {found} entries, expected {expected}")]
    RowLength {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("entry {value} at row {row}, column {col} is outside 0..{n}")]
    BadEntry {
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },
    #[error("not a Latin square: {line} {index} repeats value {value}")]
    NotLatin {
        line: Line,
        index: usize,
        value: usize,
    },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermutationError {
    #[error("image {value} at position {position} is outside 0..{n}")]
    OutOfRange {
        position: usize,
        value: usize,
        n: usize,
    },
    #[error("value {0} occurs twice")]
    Repeated(usize),
}

/// A bijection on `{0..n-1}`, stored as its image sequence.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<Element>,
}

impl Permutation {
    pub fn new(images: Vec<Element>) -> Result<Self, PermutationError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (position, &value) in images.iter().enumerate() {
            if value >= n {
                return Err(PermutationError::OutOfRange { position, value, n });
            }
            if std::mem::replace(&mut seen[value], true) {
                return Err(PermutationError::Repeated(value));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    #[inline]
    pub fn apply(&self, x: Element) -> Element {
        self.images[x]
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[Element] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(
            self.len(),
            other.len(),
            "composing permutations of different degree"
        );
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// The six translations of a quasigroup at a fixed element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TranslationKind {
    L,
    Linv,
    R,
    Rinv,
    P,
    Pinv,
}

impl TranslationKind {
    pub const ALL: [TranslationKind; 6] = [
        TranslationKind::L,
        TranslationKind::Linv,
        TranslationKind::R,
        TranslationKind::Rinv,
        TranslationKind::P,
        TranslationKind::Pinv,
    ];

    pub fn inverse(self) -> Self {
        use TranslationKind::*;
        match self {
            L => Linv,
            Linv => L,
            R => Rinv,
            Rinv => R,
            P => Pinv,
            Pinv => P,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    /// Token used in spec strings (`L`, `Li`, `R`, `Ri`, `P`, `Pi`).
    pub fn token(self) -> &'static str {
        use TranslationKind::*;
        match self {
            L => "L",
            Linv => "Li",
            R => "R",
            Rinv => "Ri",
            P => "P",
            Pinv => "Pi",
        }
    }

    pub fn from_token(tok: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.token() == tok)
    }

    /// Human notation, e.g. `L^{-1}_a`.
    pub fn notation(self) -> &'static str {
        use TranslationKind::*;
        match self {
            L => "L_a",
            Linv => "L^{-1}_a",
            R => "R_a",
            Rinv => "R^{-1}_a",
            P => "P_a",
            Pinv => "P^{-1}_a",
        }
    }
}

impl fmt::Display for TranslationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// A finite quasigroup `(Q, ·, \, /)`.
///
/// All three tables are stored row-major with the left argument selecting the
/// row. `ldiv(x, y) = x\y` is the unique `z` with `x·z = y`, and
/// `rdiv(y, x) = y/x` is the unique `z` with `z·x = y`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quasigroup {
    n: usize,
    mul: Vec<u8>,
    ldiv: Vec<u8>,
    rdiv: Vec<u8>,
}

impl fmt::Debug for Quasigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Quasigroup")
            .field("n", &self.n)
            .field("rows", &self.rows())
            .finish()
    }
}

impl Quasigroup {
    pub fn from_table<R: AsRef<[Element]>>(n: usize, rows: &[R]) -> Result<Self, QuasigroupError> {
        if rows.len() != n {
            return Err(QuasigroupError::RowCount {
                expected: n,
                found: rows.len(),
            });
        }
        let mut flat = Vec::with_capacity(n * n);
        for (row, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != n {
                return Err(QuasigroupError::RowLength {
                    row,
                    expected: n,
                    found: r.len(),
                });
            }
            flat.extend_from_slice(r);
        }
        Self::from_flat(n, &flat)
    }

    /// Builds from a row-major `n*n` table.
    pub fn from_flat(n: usize, table: &[Element]) -> Result<Self, QuasigroupError> {
        if n == 0 {
            return Err(QuasigroupError::EmptyOrder);
        }
        if n > MAX_ORDER {
            return Err(QuasigroupError::UnsupportedOrder(n));
        }
        if table.len() != n * n {
            return Err(QuasigroupError::RowCount {
                expected: n,
                found: table.len() / n,
            });
        }
        for (i, &value) in table.iter().enumerate() {
            if value >= n {
                return Err(QuasigroupError::BadEntry {
                    row: i / n,
                    col: i % n,
                    value,
                    n,
                });
            }
        }
        const UNSET: u8 = 0;
        let mut ldiv = vec![UNSET; n * n];
        let mut rdiv = vec![UNSET; n * n];
        let mut row_seen = vec![false; n * n];
        let mut col_seen = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                let z = table[x * n + y];
                if std::mem::replace(&mut row_seen[x * n + z], true) {
                    return Err(QuasigroupError::NotLatin {
                        line: Line::Row,
                        index: x,
                        value: z,
                    });
                }
                if std::mem::replace(&mut col_seen[y * n + z], true) {
                    return Err(QuasigroupError::NotLatin {
                        line: Line::Column,
                        index: y,
                        value: z,
                    });
                }
                // x·y = z  ⇒  x\z = y  and  z/y = x
                ldiv[x * n + z] = y as u8;
                rdiv[z * n + y] = x as u8;
            }
        }
        Ok(Quasigroup {
            n,
            mul: table.iter().map(|&v| v as u8).collect(),
            ldiv,
            rdiv,
        })
    }

    /// Cyclic group `Z_n` under addition.
    pub fn cyclic(n: usize) -> Self {
        let flat: Vec<Element> = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        Self::from_flat(n, &flat).expect("Z_n is a Latin square")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, x: Element, y: Element) -> Element {
        self.mul[x * self.n + y] as Element
    }

    /// `x\y`: the unique `z` with `x·z = y`.
    #[inline]
    pub fn ldiv(&self, x: Element, y: Element) -> Element {
        self.ldiv[x * self.n + y] as Element
    }

    /// `y/x`: the unique `z` with `z·x = y`.
    #[inline]
    pub fn rdiv(&self, y: Element, x: Element) -> Element {
        self.rdiv[y * self.n + x] as Element
    }

    pub fn rows(&self) -> Vec<Vec<Element>> {
        self.mul
            .chunks(self.n)
            .map(|r| r.iter().map(|&v| v as Element).collect())
            .collect()
    }

    pub fn flat_table(&self) -> Vec<Element> {
        self.mul.iter().map(|&v| v as Element).collect()
    }

    pub(crate) fn mul_bytes(&self) -> &[u8] {
        &self.mul
    }

    /// Translation images as raw bytes; `translation` wraps this.
    pub(crate) fn translation_bytes(&self, kind: TranslationKind, a: Element, out: &mut [u8]) {
        use TranslationKind::*;
        for (x, slot) in out.iter_mut().enumerate().take(self.n) {
            *slot = match kind {
                L => self.mul(a, x),
                R => self.mul(x, a),
                P => self.ldiv(x, a),
                Linv => self.ldiv(a, x),
                Rinv => self.rdiv(x, a),
                Pinv => self.rdiv(a, x),
            } as u8;
        }
    }

    /// `L_a(x) = a·x`, `R_a(x) = x·a`, `P_a(x) = x\a` (so `x·P_a(x) = a`)
    /// and their inverses.
    pub fn translation(&self, kind: TranslationKind, a: Element) -> Permutation {
        let mut buf = vec![0u8; self.n];
        self.translation_bytes(kind, a, &mut buf);
        Permutation {
            images: buf.into_iter().map(Element::from).collect(),
        }
    }

    /// Checks the six Birkhoff identities against the stored tables.
    pub fn check_identities(&self) -> IdentityReport {
        check_identities_with(
            self.n,
            |x, y| self.mul(x, y),
            |x, y| self.ldiv(x, y),
            |y, x| self.rdiv(y, x),
        )
    }
}

impl fmt::Display for Quasigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::reportio::emit_cayley(self))
    }
}

/// The identities of an equational quasigroup `(Q, ·, \, /)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BirkhoffIdentity {
    /// `x·(x\y) = y`
    SL,
    /// `(y/x)·x = y`
    SR,
    /// `x\(x·y) = y`
    IL,
    /// `(y·x)/x = y`
    IR,
    /// `x/(y\x) = y`
    SP,
    /// `(x/y)\x = y`
    IP,
}

impl BirkhoffIdentity {
    pub const ALL: [BirkhoffIdentity; 6] = [
        BirkhoffIdentity::SL,
        BirkhoffIdentity::SR,
        BirkhoffIdentity::IL,
        BirkhoffIdentity::IR,
        BirkhoffIdentity::SP,
        BirkhoffIdentity::IP,
    ];

    pub fn formula(self) -> &'static str {
        match self {
            BirkhoffIdentity::SL => "x·(x\\y) = y",
            BirkhoffIdentity::SR => "(y/x)·x = y",
            BirkhoffIdentity::IL => "x\\(x·y) = y",
            BirkhoffIdentity::IR => "(y·x)/x = y",
            BirkhoffIdentity::SP => "x/(y\\x) = y",
            BirkhoffIdentity::IP => "(x/y)\\x = y",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub identity: BirkhoffIdentity,
    /// First `(x, y)` in row-major order where the identity fails.
    pub first_failure: Option<(Element, Element)>,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.first_failure.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(IdentityCheck::holds)
    }

    pub fn holds(&self, identity: BirkhoffIdentity) -> bool {
        self.checks
            .iter()
            .find(|c| c.identity == identity)
            .is_some_and(IdentityCheck::holds)
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match c.first_failure {
                None => writeln!(f, "{:?} {}: pass", c.identity, c.identity.formula())?,
                Some((x, y)) => writeln!(
                    f,
                    "{:?} {}: FAIL at x={x}, y={y}",
                    c.identity,
                    c.identity.formula()
                )?,
            }
        }
        Ok(())
    }
}

/// Evaluates the six identities on an arbitrary algebra given by three
/// operations on `0..n` (which need not form a quasigroup). `rdiv(y, x)`
/// stands for `y/x`.
pub fn check_identities_with(
    n: usize,
    mul: impl Fn(Element, Element) -> Element,
    ldiv: impl Fn(Element, Element) -> Element,
    rdiv: impl Fn(Element, Element) -> Element,
) -> IdentityReport {
    let first = |pred: &dyn Fn(Element, Element) -> bool| {
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| !pred(x, y))
    };
    let checks = BirkhoffIdentity::ALL
        .iter()
        .map(|&identity| {
            let first_failure = match identity {
                BirkhoffIdentity::SL => first(&|x, y| mul(x, ldiv(x, y)) == y),
                BirkhoffIdentity::SR => first(&|x, y| mul(rdiv(y, x), x) == y),
                BirkhoffIdentity::IL => first(&|x, y| ldiv(x, mul(x, y)) == y),
                BirkhoffIdentity::IR => first(&|x, y| rdiv(mul(y, x), x) == y),
                BirkhoffIdentity::SP => first(&|x, y| rdiv(x, ldiv(y, x)) == y),
                BirkhoffIdentity::IP => first(&|x, y| ldiv(rdiv(x, y), x) == y),
            };
            IdentityCheck {
                identity,
                first_failure,
            }
        })
        .collect();
    IdentityReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z3() -> Quasigroup {
        Quasigroup::from_table(3, &[[0, 1, 2], [1, 2, 0], [2, 0, 1]]).unwrap()
    }

    #[test]
    fn builds_z3_and_trivial() {
        let q = z3();
        assert_eq!(q, Quasigroup::cyclic(3));
        let one = Quasigroup::from_table(1, &[[0]]).unwrap();
        assert_eq!(one.order(), 1);
        assert_eq!(one.mul(0, 0), 0);
    }

    #[test]
    fn rejects_non_latin_and_out_of_range() {
        let err = Quasigroup::from_table(2, &[[0, 0], [1, 1]]).unwrap_err();
        assert_eq!(
            err,
            QuasigroupError::NotLatin {
                line: Line::Row,
                index: 0,
                value: 0
            }
        );
        let err = Quasigroup::from_table(2, &[[0, 1], [0, 1]]).unwrap_err();
        assert!(matches!(
            err,
            QuasigroupError::NotLatin {
                line: Line::Column,
                ..
            }
        ));
        let err = Quasigroup::from_table(2, &[[0, 2], [1, 0]]).unwrap_err();
        assert!(matches!(err, QuasigroupError::BadEntry { value: 2, .. }));
        assert_eq!(
            Quasigroup::from_table::<[usize; 0]>(0, &[]).unwrap_err(),
            QuasigroupError::EmptyOrder
        );
        let err = Quasigroup::from_table(2, &[vec![0, 1], vec![1]]).unwrap_err();
        assert!(matches!(err, QuasigroupError::RowLength { row: 1, .. }));
    }

    #[test]
    fn z3_operations() {
        let q = z3();
        assert_eq!(q.mul(1, 2), 0);
        for y in 0..3 {
            assert_eq!(q.mul(0, y), y);
        }
        assert_eq!(q.ldiv(1, 0), 2);
        assert_eq!(q.rdiv(0, 2), 1);
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(q.mul(x, q.ldiv(x, y)), y);
                assert_eq!(q.rdiv(x, q.ldiv(y, x)), y);
            }
        }
    }

    #[test]
    fn z3_translations() {
        let q = z3();
        assert_eq!(q.translation(TranslationKind::L, 1).images(), &[1, 2, 0]);
        assert_eq!(q.translation(TranslationKind::P, 0).images(), &[0, 2, 1]);
        for a in 0..3 {
            for kind in TranslationKind::ALL {
                let t = q.translation(kind, a);
                let inv = q.translation(kind.inverse(), a);
                assert!(inv.compose(&t).is_identity(), "{kind} at {a}");
                assert_eq!(t.inverse(), inv);
            }
        }
    }

    #[test]
    fn translation_views() {
        let q = Quasigroup::from_table(3, &[[1, 2, 0], [0, 1, 2], [2, 0, 1]]).unwrap();
        for a in 0..3 {
            let row: Vec<_> = (0..3).map(|y| q.mul(a, y)).collect();
            let col: Vec<_> = (0..3).map(|x| q.mul(x, a)).collect();
            assert_eq!(
                q.translation(TranslationKind::L, a).images(),
                row.as_slice()
            );
            assert_eq!(
                q.translation(TranslationKind::R, a).images(),
                col.as_slice()
            );
            let p = q.translation(TranslationKind::P, a);
            for x in 0..3 {
                assert_eq!(q.mul(x, p.apply(x)), a);
            }
        }
    }

    #[test]
    fn identities_hold_on_paper_squares() {
        assert!(z3().check_identities().all_hold());
        let q = Quasigroup::from_table(3, &[[1, 2, 0], [0, 1, 2], [2, 0, 1]]).unwrap();
        let report = q.check_identities();
        assert!(report.all_hold());
        assert_eq!(report.checks.len(), 6);
    }

    #[test]
    fn identities_report_failures_on_non_quasigroups() {
        // constant operations violate SL at the very first pair with y != 0
        let r = check_identities_with(2, |_, _| 0, |_, _| 0, |_, _| 0);
        assert_eq!(r.checks[0].first_failure, Some((0, 1)));
        assert!(!r.all_hold());
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![1, 0, 2]).is_ok());
        assert_eq!(
            Permutation::new(vec![1, 1]).unwrap_err(),
            PermutationError::Repeated(1)
        );
        assert!(matches!(
            Permutation::new(vec![0, 3]).unwrap_err(),
            PermutationError::OutOfRange { value: 3, .. }
        ));
        let p = Permutation::new(vec![1, 2, 0]).unwrap();
        let q = Permutation::new(vec![0, 2, 1]).unwrap();
        // p∘q: 0→0→1, 1→2→0, 2→1→2
        assert_eq!(p.compose(&q).images(), &[1, 0, 2]);
    }
}
