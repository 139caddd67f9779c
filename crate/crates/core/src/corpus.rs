//! Latin square corpora: exhaustive and reduced enumeration in lexicographic
//! order, and seeded random sampling.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::qcore::Quasigroup;

/// Largest order enumerated exhaustively unless explicitly raised.
pub const DEFAULT_BOUND: usize = 5;

/// `(order, index within that order's stream, square)` in corpus order.
pub type SquareStream = Box<dyn Iterator<Item = (usize, usize, Quasigroup)> + Send>;

/// Hard ceiling for the bitmask enumerator.
const MASK_BITS: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CorpusError {
    #[error("order {order} exceeds the exhaustive bound {bound}")]
    OrderTooLarge { order: usize, bound: usize },
    #[error("order must be at least 1")]
    EmptyOrder,
    #[error("bad corpus descriptor {text:?}: {reason}")]
    Syntax { text: String, reason: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CorpusMode {
    Exhaustive,
    Reduced,
    Random,
}

/// `exhaustive:N`, `reduced:N` or `random:N:seed=S:count=C`.
///
/// Exhaustive and reduced corpora cover every order from 3 up to `N`
/// (just order `N` when `N < 3`); random corpora contain `C` squares of
/// order `N` drawn from one seeded stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CorpusDescriptor {
    pub mode: CorpusMode,
    pub order: usize,
    pub seed: Option<u64>,
    pub count: Option<usize>,
}

impl CorpusDescriptor {
    pub fn exhaustive(order: usize) -> Self {
        CorpusDescriptor {
            mode: CorpusMode::Exhaustive,
            order,
            seed: None,
            count: None,
        }
    }

    pub fn reduced(order: usize) -> Self {
        CorpusDescriptor {
            mode: CorpusMode::Reduced,
            ..Self::exhaustive(order)
        }
    }

    pub fn random(order: usize, seed: u64, count: usize) -> Self {
        CorpusDescriptor {
            mode: CorpusMode::Random,
            order,
            seed: Some(seed),
            count: Some(count),
        }
    }

    pub fn validate(&self, bound: usize) -> Result<(), CorpusError> {
        if self.order == 0 {
            return Err(CorpusError::EmptyOrder);
        }
        match self.mode {
            CorpusMode::Exhaustive | CorpusMode::Reduced => check_bound(self.order, bound),
            CorpusMode::Random => {
                if self.seed.is_none() || self.count.is_none() {
                    return Err(CorpusError::Syntax {
                        text: self.to_string(),
                        reason: "random corpora need seed and count".into(),
                    });
                }
                Ok(())
            }
        }
    }

    /// Orders scanned, ascending.
    pub fn orders(&self) -> Vec<usize> {
        match self.mode {
            CorpusMode::Random => vec![self.order],
            _ if self.order < 3 => vec![self.order],
            _ => (3..=self.order).collect(),
        }
    }

    /// The corpus as a deterministic stream of `(order, index within that
    /// order's stream, square)`.
    pub fn stream(&self, bound: usize) -> Result<SquareStream, CorpusError> {
        self.validate(bound)?;
        let desc = *self;
        Ok(match self.mode {
            CorpusMode::Exhaustive | CorpusMode::Reduced => {
                let reduced = self.mode == CorpusMode::Reduced;
                Box::new(desc.orders().into_iter().flat_map(move |n| {
                    LatinSquares::new(n, reduced)
                        .enumerate()
                        .map(move |(i, q)| (n, i, q))
                }))
            }
            CorpusMode::Random => {
                let n = self.order;
                let mut rng = ChaCha8Rng::seed_from_u64(self.seed.unwrap_or_default());
                Box::new(
                    (0..self.count.unwrap_or_default())
                        .map(move |i| (n, i, random_square_with(n, &mut rng))),
                )
            }
        })
    }
}

impl fmt::Display for CorpusDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.mode {
            CorpusMode::Exhaustive => write!(f, "exhaustive:{}", self.order),
            CorpusMode::Reduced => write!(f, "reduced:{}", self.order),
            CorpusMode::Random => write!(
                f,
                "random:{}:seed={}:count={}",
                self.order,
                self.seed.unwrap_or_default(),
                self.count.unwrap_or_default()
            ),
        }
    }
}

impl FromStr for CorpusDescriptor {
    type Err = CorpusError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let syntax = |reason: &str| CorpusError::Syntax {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let mut parts = text.trim().split(':');
        let mode = match parts.next() {
            Some("exhaustive") => CorpusMode::Exhaustive,
            Some("reduced") => CorpusMode::Reduced,
            Some("random") => CorpusMode::Random,
            _ => return Err(syntax("mode must be exhaustive, reduced or random")),
        };
        let order: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| syntax("missing or non-numeric order"))?;
        let mut desc = CorpusDescriptor {
            mode,
            order,
            seed: None,
            count: None,
        };
        for part in parts {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| syntax("expected key=value"))?;
            match (mode, key) {
                (CorpusMode::Random, "seed") => {
                    desc.seed = Some(value.parse().map_err(|_| syntax("bad seed"))?)
                }
                (CorpusMode::Random, "count") => {
                    desc.count = Some(value.parse().map_err(|_| syntax("bad count"))?)
                }
                _ => return Err(syntax(&format!("unexpected field {key:?}"))),
            }
        }
        if mode == CorpusMode::Random && (desc.seed.is_none() || desc.count.is_none()) {
            return Err(syntax("random corpora need seed and count"));
        }
        if order == 0 {
            return Err(CorpusError::EmptyOrder);
        }
        Ok(desc)
    }
}

fn check_bound(order: usize, bound: usize) -> Result<(), CorpusError> {
    if order == 0 {
        Err(CorpusError::EmptyOrder)
    } else if order > bound || order > MASK_BITS {
        Err(CorpusError::OrderTooLarge { order, bound })
    } else {
        Ok(())
    }
}

/// Depth-first enumeration of Latin squares, filling cells in row-major order
/// with ascending candidates, so squares come out in lexicographic order.
pub struct LatinSquares {
    n: usize,
    reduced: bool,
    cells: Vec<u8>,
    placed: Vec<bool>,
    next_candidate: Vec<u8>,
    row_used: Vec<u64>,
    col_used: Vec<u64>,
    pos: usize,
    done: bool,
}

impl LatinSquares {
    fn new(n: usize, reduced: bool) -> Self {
        assert!((1..=MASK_BITS).contains(&n));
        LatinSquares {
            n,
            reduced,
            cells: vec![0; n * n],
            placed: vec![false; n * n],
            next_candidate: vec![0; n * n],
            row_used: vec![0; n],
            col_used: vec![0; n],
            pos: 0,
            done: false,
        }
    }

    /// Moves to the next complete square; false when exhausted.
    fn advance(&mut self) -> bool {
        let n = self.n;
        let total = n * n;
        if self.done {
            return false;
        }
        if self.pos == total {
            self.pos = total - 1;
        }
        let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        loop {
            if self.pos == total {
                return true;
            }
            let (r, c) = (self.pos / n, self.pos % n);
            if self.placed[self.pos] {
                let bit = 1u64 << self.cells[self.pos];
                self.row_used[r] &= !bit;
                self.col_used[c] &= !bit;
                self.placed[self.pos] = false;
            }
            let from = self.next_candidate[self.pos] as usize;
            let mut avail = if from >= 64 {
                0
            } else {
                !(self.row_used[r] | self.col_used[c]) & full & (u64::MAX << from)
            };
            if self.reduced {
                let forced = if r == 0 {
                    Some(c)
                } else if c == 0 {
                    Some(r)
                } else {
                    None
                };
                if let Some(v) = forced {
                    avail &= 1u64 << v;
                }
            }
            if avail == 0 {
                self.next_candidate[self.pos] = 0;
                if self.pos == 0 {
                    self.done = true;
                    return false;
                }
                self.pos -= 1;
                continue;
            }
            let v = avail.trailing_zeros() as usize;
            let bit = 1u64 << v;
            self.row_used[r] |= bit;
            self.col_used[c] |= bit;
            self.cells[self.pos] = v as u8;
            self.placed[self.pos] = true;
            self.next_candidate[self.pos] = (v + 1) as u8;
            self.pos += 1;
        }
    }

    fn current(&self) -> Quasigroup {
        let flat: Vec<usize> = self.cells.iter().map(|&v| v as usize).collect();
        Quasigroup::from_flat(self.n, &flat).expect("enumerator emits Latin squares")
    }
}

impl Iterator for LatinSquares {
    type Item = Quasigroup;

    fn next(&mut self) -> Option<Quasigroup> {
        self.advance().then(|| self.current())
    }
}

/// Every Latin square of order `n` (up to [`DEFAULT_BOUND`]) in lexicographic
/// row-major order.
pub fn enumerate_all(n: usize) -> Result<LatinSquares, CorpusError> {
    enumerate_all_bounded(n, DEFAULT_BOUND)
}

pub fn enumerate_all_bounded(n: usize, bound: usize) -> Result<LatinSquares, CorpusError> {
    check_bound(n, bound)?;
    Ok(LatinSquares::new(n, false))
}

/// Latin squares whose first row and first column are `0, 1, ..., n-1`.
pub fn enumerate_reduced(n: usize) -> Result<LatinSquares, CorpusError> {
    enumerate_reduced_bounded(n, DEFAULT_BOUND)
}

pub fn enumerate_reduced_bounded(n: usize, bound: usize) -> Result<LatinSquares, CorpusError> {
    check_bound(n, bound)?;
    Ok(LatinSquares::new(n, true))
}

pub fn count_all(n: usize) -> Result<u64, CorpusError> {
    count_all_bounded(n, DEFAULT_BOUND)
}

pub fn count_all_bounded(n: usize, bound: usize) -> Result<u64, CorpusError> {
    check_bound(n, bound)?;
    let mut it = LatinSquares::new(n, false);
    let mut count = 0;
    while it.advance() {
        count += 1;
    }
    Ok(count)
}

pub fn count_reduced(n: usize) -> Result<u64, CorpusError> {
    check_bound(n, DEFAULT_BOUND)?;
    let mut it = LatinSquares::new(n, true);
    let mut count = 0;
    while it.advance() {
        count += 1;
    }
    Ok(count)
}

/// A random Latin square of order `n`, deterministic in `seed`.
///
/// Rows are built one at a time as a randomized perfect matching between
/// columns and the symbols still missing from them; a Latin rectangle always
/// extends by a row, so no earlier row is ever revisited. The distribution is
/// not uniform over Latin squares.
pub fn random_square(n: usize, seed: u64) -> Quasigroup {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_square_with(n, &mut rng)
}

pub fn random_square_with(n: usize, rng: &mut ChaCha8Rng) -> Quasigroup {
    assert!(n >= 1, "order must be at least 1");
    let mut col_has = vec![vec![false; n]; n];
    let mut table = vec![0usize; n * n];
    for r in 0..n {
        let mut columns: Vec<usize> = (0..n).collect();
        columns.shuffle(rng);
        let options: Vec<Vec<usize>> = (0..n)
            .map(|c| {
                let mut vs: Vec<usize> = (0..n).filter(|&v| !col_has[c][v]).collect();
                vs.shuffle(rng);
                vs
            })
            .collect();
        // value_owner[v] = column currently holding v in this row
        let mut value_owner: Vec<Option<usize>> = vec![None; n];
        for &c in &columns {
            let mut visited = vec![false; n];
            let ok = augment(c, &options, &mut value_owner, &mut visited);
            assert!(ok, "a Latin rectangle always extends by one row");
        }
        for (v, owner) in value_owner.iter().enumerate() {
            let c = owner.expect("perfect matching");
            table[r * n + c] = v;
            col_has[c][v] = true;
        }
    }
    Quasigroup::from_flat(n, &table).expect("matching rows form a Latin square")
}

fn augment(
    c: usize,
    options: &[Vec<usize>],
    value_owner: &mut [Option<usize>],
    visited: &mut [bool],
) -> bool {
    for &v in &options[c] {
        if visited[v] {
            continue;
        }
        visited[v] = true;
        let free = match value_owner[v] {
            None => true,
            Some(other) => augment(other, options, value_owner, visited),
        };
        if free {
            value_owner[v] = Some(c);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: fill cells recursively, checking rows and columns
    /// by scanning rather than with masks.
    fn oracle_count(n: usize, reduced: bool) -> u64 {
        fn go(n: usize, reduced: bool, cells: &mut Vec<usize>) -> u64 {
            let pos = cells.len();
            if pos == n * n {
                return 1;
            }
            let (r, c) = (pos / n, pos % n);
            let mut total = 0;
            for v in 0..n {
                if reduced && ((r == 0 && v != c) || (c == 0 && v != r)) {
                    continue;
                }
                let row_ok = (0..c).all(|j| cells[r * n + j] != v);
                let col_ok = (0..r).all(|i| cells[i * n + c] != v);
                if row_ok && col_ok {
                    cells.push(v);
                    total += go(n, reduced, cells);
                    cells.pop();
                }
            }
            total
        }
        go(n, reduced, &mut Vec::new())
    }

    #[test]
    fn counts_match_oracle() {
        for n in 1..=4 {
            assert_eq!(count_all(n).unwrap(), oracle_count(n, false), "n={n}");
            assert_eq!(count_reduced(n).unwrap(), oracle_count(n, true), "n={n}");
        }
        assert_eq!(count_all(3).unwrap(), 12);
        assert_eq!(count_all(4).unwrap(), 576);
        assert_eq!(count_all(1).unwrap(), 1);
        assert_eq!(count_reduced(2).unwrap(), 1);
        assert_eq!(count_reduced(4).unwrap(), 4);
    }

    #[test]
    fn reduced_order_five() {
        assert_eq!(count_reduced(5).unwrap(), oracle_count(5, true));
        assert_eq!(count_reduced(5).unwrap(), 56);
    }

    #[test]
    fn lexicographic_and_distinct() {
        let squares: Vec<_> = enumerate_all(4).unwrap().map(|q| q.flat_table()).collect();
        assert_eq!(squares.len(), 576);
        assert!(squares.windows(2).all(|w| w[0] < w[1]));
        let first = enumerate_all(3).unwrap().next().unwrap();
        assert_eq!(first, Quasigroup::cyclic(3));
    }

    #[test]
    fn reduced_squares_are_reduced() {
        for q in enumerate_reduced(4).unwrap() {
            for i in 0..4 {
                assert_eq!(q.mul(0, i), i);
                assert_eq!(q.mul(i, 0), i);
            }
        }
    }

    #[test]
    fn bound_enforced() {
        assert_eq!(
            count_all(6).unwrap_err(),
            CorpusError::OrderTooLarge { order: 6, bound: 5 }
        );
        assert!(enumerate_all_bounded(6, 6).is_ok());
        assert_eq!(count_all(0).unwrap_err(), CorpusError::EmptyOrder);
    }

    #[test]
    fn random_is_deterministic_and_valid() {
        assert_eq!(random_square(8, 1), random_square(8, 1));
        assert_ne!(random_square(8, 1), random_square(8, 2));
        assert_eq!(random_square(1, 99).rows(), vec![vec![0]]);
        for seed in 0..20 {
            assert!(random_square(5, seed).check_identities().all_hold());
        }
        // large orders stay polynomial
        assert_eq!(random_square(40, 3).order(), 40);
    }

    #[test]
    fn descriptors() {
        for text in ["exhaustive:4", "reduced:5", "random:8:seed=42:count=1000"] {
            let d: CorpusDescriptor = text.parse().unwrap();
            assert_eq!(d.to_string(), text);
        }
        assert!("random:8".parse::<CorpusDescriptor>().is_err());
        assert!("exhaustive:x".parse::<CorpusDescriptor>().is_err());
        assert!("exhaustive:4:seed=1".parse::<CorpusDescriptor>().is_err());
        assert!("bogus:4".parse::<CorpusDescriptor>().is_err());
        assert_eq!(CorpusDescriptor::exhaustive(4).orders(), vec![3, 4]);
        assert_eq!(CorpusDescriptor::exhaustive(1).orders(), vec![1]);
        assert!(matches!(
            CorpusDescriptor::exhaustive(6).validate(DEFAULT_BOUND),
            Err(CorpusError::OrderTooLarge { .. })
        ));
    }

    #[test]
    fn streams() {
        let d = CorpusDescriptor::exhaustive(4);
        let items: Vec<_> = d.stream(DEFAULT_BOUND).unwrap().collect();
        assert_eq!(items.len(), 12 + 576);
        assert_eq!((items[12].0, items[12].1), (4, 0));
        let r = CorpusDescriptor::random(6, 7, 5);
        let a: Vec<_> = r.stream(DEFAULT_BOUND).unwrap().map(|t| t.2).collect();
        let b: Vec<_> = r.stream(DEFAULT_BOUND).unwrap().map(|t| t.2).collect();
        assert_eq!(a, b);
        assert_eq!(a.len(), 5);
    }
}
