//! Left, right and middle units.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::qcore::{Element, Quasigroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum UnitKind {
    /// `f·x = x` for all `x`
    #[serde(rename = "f")]
    LeftF,
    /// `x·e = x` for all `x`
    #[serde(rename = "e")]
    RightE,
    /// `x·x = s` for all `x`
    #[serde(rename = "s")]
    MiddleS,
}

impl UnitKind {
    pub const ALL: [UnitKind; 3] = [UnitKind::LeftF, UnitKind::RightE, UnitKind::MiddleS];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn token(self) -> &'static str {
        match self {
            UnitKind::LeftF => "f",
            UnitKind::RightE => "e",
            UnitKind::MiddleS => "s",
        }
    }

    pub fn from_token(tok: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.token() == tok)
    }

    /// Whether the defining equation of a `self`-unit `u` holds at `x`
    /// for the operation `op`.
    pub fn holds_at(
        self,
        op: impl Fn(Element, Element) -> Element,
        u: Element,
        x: Element,
    ) -> bool {
        match self {
            UnitKind::LeftF => op(u, x) == x,
            UnitKind::RightE => op(x, u) == x,
            UnitKind::MiddleS => op(x, x) == u,
        }
    }
}

impl fmt::Display for UnitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

pub fn left_unit(q: &Quasigroup) -> Option<Element> {
    let n = q.order();
    // a left unit f satisfies f·0 = 0, and the column of 0 holds 0 exactly once
    let f = q.rdiv(0, 0);
    (0..n).all(|x| q.mul(f, x) == x).then_some(f)
}

pub fn right_unit(q: &Quasigroup) -> Option<Element> {
    let n = q.order();
    let e = q.ldiv(0, 0);
    (0..n).all(|x| q.mul(x, e) == x).then_some(e)
}

pub fn middle_unit(q: &Quasigroup) -> Option<Element> {
    let s = q.mul(0, 0);
    (1..q.order()).all(|x| q.mul(x, x) == s).then_some(s)
}

pub fn unit(q: &Quasigroup, kind: UnitKind) -> Option<Element> {
    match kind {
        UnitKind::LeftF => left_unit(q),
        UnitKind::RightE => right_unit(q),
        UnitKind::MiddleS => middle_unit(q),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct UnitProfile {
    pub left: Option<Element>,
    pub right: Option<Element>,
    pub middle: Option<Element>,
}

impl UnitProfile {
    pub fn get(&self, kind: UnitKind) -> Option<Element> {
        match kind {
            UnitKind::LeftF => self.left,
            UnitKind::RightE => self.right,
            UnitKind::MiddleS => self.middle,
        }
    }
}

impl fmt::Display for UnitProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |u: Option<Element>| u.map_or_else(|| "none".to_string(), |v| v.to_string());
        write!(
            f,
            "f={} e={} s={}",
            show(self.left),
            show(self.right),
            show(self.middle)
        )
    }
}

pub fn unit_profile(q: &Quasigroup) -> UnitProfile {
    UnitProfile {
        left: left_unit(q),
        right: right_unit(q),
        middle: middle_unit(q),
    }
}
