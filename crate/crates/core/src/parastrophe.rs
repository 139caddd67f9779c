//! The six parastrophes (conjugates) of a binary quasigroup and the
//! translation-transfer table relating their translations to those of the
//! base quasigroup.

use std::fmt;

use crate::qcore::{Element, Quasigroup, TranslationKind};

/// A parastrophe, indexed by the permutation of the roles in `A(x1, x2) = x3`.
///
/// | sym    | defining relation      | `B(x, y)` |
/// |--------|------------------------|-----------|
/// | `Id`   | `A(x1, x2) = x3`       | `x·y`     |
/// | `S12`  | `B(x2, x1) = x3`       | `y·x`     |
/// | `S13`  | `B(x3, x2) = x1`       | `x/y`     |
/// | `S23`  | `B(x1, x3) = x2`       | `x\y`     |
/// | `S123` | `B(x2, x3) = x1`       | `y/x`     |
/// | `S132` | `B(x3, x1) = x2`       | `y\x`     |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParastropheSym {
    Id,
    S12,
    S13,
    S23,
    S123,
    S132,
}

impl ParastropheSym {
    pub const ALL: [ParastropheSym; 6] = [
        ParastropheSym::Id,
        ParastropheSym::S12,
        ParastropheSym::S13,
        ParastropheSym::S23,
        ParastropheSym::S123,
        ParastropheSym::S132,
    ];

    /// Row order used by the published unit table: `xy, yx, x\y, y\x, y/x, x/y`.
    pub const TABLE_ROW_ORDER: [ParastropheSym; 6] = [
        ParastropheSym::Id,
        ParastropheSym::S12,
        ParastropheSym::S23,
        ParastropheSym::S132,
        ParastropheSym::S123,
        ParastropheSym::S13,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    /// For the triple `t = (x1, x2, x3)` of the base operation, the parastrophe
    /// satisfies `B(t[p[0]], t[p[1]]) = t[p[2]]`.
    fn positions(self) -> [usize; 3] {
        match self {
            ParastropheSym::Id => [0, 1, 2],
            ParastropheSym::S12 => [1, 0, 2],
            ParastropheSym::S13 => [2, 1, 0],
            ParastropheSym::S23 => [0, 2, 1],
            ParastropheSym::S123 => [1, 2, 0],
            ParastropheSym::S132 => [2, 0, 1],
        }
    }

    fn from_positions(p: [usize; 3]) -> Self {
        Self::ALL
            .into_iter()
            .find(|s| s.positions() == p)
            .expect("every permutation of three roles is a parastrophe")
    }

    pub fn token(self) -> &'static str {
        match self {
            ParastropheSym::Id => "e",
            ParastropheSym::S12 => "12",
            ParastropheSym::S13 => "13",
            ParastropheSym::S23 => "23",
            ParastropheSym::S123 => "123",
            ParastropheSym::S132 => "132",
        }
    }

    pub fn from_token(tok: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|s| s.token() == tok)
    }

    /// Operation symbol as printed in the unit table's row labels.
    pub fn formula(self) -> &'static str {
        match self {
            ParastropheSym::Id => "xy",
            ParastropheSym::S12 => "yx",
            ParastropheSym::S13 => "x/y",
            ParastropheSym::S23 => "x\\y",
            ParastropheSym::S123 => "y/x",
            ParastropheSym::S132 => "y\\x",
        }
    }

    /// Evaluates `B(x, y)` directly through the base operations.
    pub fn eval(self, q: &Quasigroup, x: Element, y: Element) -> Element {
        match self {
            ParastropheSym::Id => q.mul(x, y),
            ParastropheSym::S12 => q.mul(y, x),
            ParastropheSym::S13 => q.rdiv(x, y),
            ParastropheSym::S23 => q.ldiv(x, y),
            ParastropheSym::S123 => q.rdiv(y, x),
            ParastropheSym::S132 => q.ldiv(y, x),
        }
    }
}

impl fmt::Display for ParastropheSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Builds the parastrophe by permuting the roles of every triple of the table.
pub fn apply_parastrophe(q: &Quasigroup, sigma: ParastropheSym) -> Quasigroup {
    let n = q.order();
    let p = sigma.positions();
    let mut table = vec![0; n * n];
    for x1 in 0..n {
        for x2 in 0..n {
            let t = [x1, x2, q.mul(x1, x2)];
            table[t[p[0]] * n + t[p[1]]] = t[p[2]];
        }
    }
    Quasigroup::from_flat(n, &table).expect("a parastrophe of a quasigroup is a quasigroup")
}

/// Product in S3 with `apply(Q, compose(s, t)) = apply(apply(Q, t), s)`.
pub fn compose(sigma: ParastropheSym, tau: ParastropheSym) -> ParastropheSym {
    let ps = sigma.positions();
    let pt = tau.positions();
    ParastropheSym::from_positions([pt[ps[0]], pt[ps[1]], pt[ps[2]]])
}

pub fn inverse(sigma: ParastropheSym) -> ParastropheSym {
    ParastropheSym::ALL
        .into_iter()
        .find(|&t| compose(sigma, t) == ParastropheSym::Id)
        .expect("S3 is a group")
}

/// Which translation of the base quasigroup equals the `kind` translation of
/// its `sigma`-parastrophe (at the same element).
pub fn transferred_translation(kind: TranslationKind, sigma: ParastropheSym) -> TranslationKind {
    use ParastropheSym as S;
    use TranslationKind::*;
    // columns: e, (12), (13), (23), (123), (132)
    let row: [TranslationKind; 6] = match kind {
        R => [R, L, Rinv, P, Pinv, Linv],
        L => [L, R, Pinv, Linv, Rinv, P],
        P => [P, Pinv, Linv, R, L, Rinv],
        Rinv => [Rinv, Linv, R, Pinv, P, L],
        Linv => [Linv, Rinv, P, L, R, Pinv],
        Pinv => [Pinv, P, L, Rinv, Linv, R],
    };
    let col = match sigma {
        S::Id => 0,
        S::S12 => 1,
        S::S13 => 2,
        S::S23 => 3,
        S::S123 => 4,
        S::S132 => 5,
    };
    row[col]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferCell {
    pub kind: TranslationKind,
    pub sigma: ParastropheSym,
    pub expected: TranslationKind,
    /// Smallest element `a` at which the cell fails.
    pub first_failure: Option<Element>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferReport {
    pub cells: Vec<TransferCell>,
}

impl TransferReport {
    pub fn all_pass(&self) -> bool {
        self.cells.iter().all(|c| c.first_failure.is_none())
    }

    pub fn failures(&self) -> impl Iterator<Item = &TransferCell> {
        self.cells.iter().filter(|c| c.first_failure.is_some())
    }
}

/// Checks all 36 cells of the translation-transfer table on `q`, for every `a`.
pub fn verify_translation_transfer(q: &Quasigroup) -> TransferReport {
    let paras: Vec<Quasigroup> = ParastropheSym::ALL
        .iter()
        .map(|&s| apply_parastrophe(q, s))
        .collect();
    let mut cells = Vec::with_capacity(36);
    for kind in TranslationKind::ALL {
        for sigma in ParastropheSym::ALL {
            let expected = transferred_translation(kind, sigma);
            let b = &paras[sigma.index()];
            let first_failure =
                (0..q.order()).find(|&a| b.translation(kind, a) != q.translation(expected, a));
            cells.push(TransferCell {
                kind,
                sigma,
                expected,
                first_failure,
            });
        }
    }
    TransferReport { cells }
}
