//! Classical and generalized (isostrophic) derivatives.
//!
//! A generalized derivative of `(Q, ·)` with respect to `a` is the isostrophe
//! `(Q, ·σ)(α, β, γ)` where `·σ` is one of the six parastrophes and exactly
//! one of `α, β, γ` is the identity, the other two being translations at `a`.
//! How the triple acts on the operation is not fixed by the notation alone, so
//! it is made explicit through [`Convention`].

use std::fmt;

use thiserror::Error;

use crate::parastrophe::{apply_parastrophe, ParastropheSym};
use crate::qcore::{Element, Permutation, Quasigroup, TranslationKind};
use crate::units::{unit, UnitKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TripleComponent {
    Translation(TranslationKind),
    /// The identity permutation `ε`.
    E,
}

impl TripleComponent {
    /// `L, Li, R, Ri, P, Pi` followed by `E`.
    pub const ALL: [TripleComponent; 7] = [
        TripleComponent::Translation(TranslationKind::L),
        TripleComponent::Translation(TranslationKind::Linv),
        TripleComponent::Translation(TranslationKind::R),
        TripleComponent::Translation(TranslationKind::Rinv),
        TripleComponent::Translation(TranslationKind::P),
        TripleComponent::Translation(TranslationKind::Pinv),
        TripleComponent::E,
    ];

    pub fn token(self) -> &'static str {
        match self {
            TripleComponent::Translation(k) => k.token(),
            TripleComponent::E => "E",
        }
    }

    pub fn from_token(tok: &str) -> Option<Self> {
        if tok == "E" {
            Some(TripleComponent::E)
        } else {
            TranslationKind::from_token(tok).map(TripleComponent::Translation)
        }
    }

    pub fn notation(self) -> &'static str {
        match self {
            TripleComponent::Translation(k) => k.notation(),
            TripleComponent::E => "ε",
        }
    }
}

impl From<TranslationKind> for TripleComponent {
    fn from(k: TranslationKind) -> Self {
        TripleComponent::Translation(k)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TripleError {
    #[error("isotopy triple has no identity component")]
    NoE,
    #[error("isotopy triple has {0} identity components, expected exactly one")]
    MultipleE(usize),
}

/// `(α, β, γ)` with exactly one identity component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IsotopyTriple {
    alpha: TripleComponent,
    beta: TripleComponent,
    gamma: TripleComponent,
}

impl IsotopyTriple {
    pub fn new(
        alpha: TripleComponent,
        beta: TripleComponent,
        gamma: TripleComponent,
    ) -> Result<Self, TripleError> {
        let es = [alpha, beta, gamma]
            .iter()
            .filter(|c| **c == TripleComponent::E)
            .count();
        match es {
            0 => Err(TripleError::NoE),
            1 => Ok(IsotopyTriple { alpha, beta, gamma }),
            k => Err(TripleError::MultipleE(k)),
        }
    }

    pub fn alpha(&self) -> TripleComponent {
        self.alpha
    }

    pub fn beta(&self) -> TripleComponent {
        self.beta
    }

    pub fn gamma(&self) -> TripleComponent {
        self.gamma
    }

    pub fn components(&self) -> [TripleComponent; 3] {
        [self.alpha, self.beta, self.gamma]
    }

    /// Block header as printed in the unit table, e.g. `(L_a, ε, L^{-1}_a)`.
    pub fn notation(&self) -> String {
        format!(
            "({}, {}, {})",
            self.alpha.notation(),
            self.beta.notation(),
            self.gamma.notation()
        )
    }
}

impl fmt::Display for IsotopyTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{}",
            self.alpha.token(),
            self.beta.token(),
            self.gamma.token()
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DerivativeSpec {
    pub sigma: ParastropheSym,
    pub triple: IsotopyTriple,
}

impl DerivativeSpec {
    pub fn new(sigma: ParastropheSym, triple: IsotopyTriple) -> Self {
        DerivativeSpec { sigma, triple }
    }

    /// Shorthand for tests and fixed catalogue entries; panics on a bad triple.
    pub fn of(
        sigma: ParastropheSym,
        alpha: TripleComponent,
        beta: TripleComponent,
        gamma: TripleComponent,
    ) -> Self {
        DerivativeSpec {
            sigma,
            triple: IsotopyTriple::new(alpha, beta, gamma).expect("exactly one E"),
        }
    }
}

impl fmt::Display for DerivativeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.sigma, self.triple)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Action {
    Direct,
    Inverse,
}

impl Action {
    pub fn token(self) -> &'static str {
        match self {
            Action::Direct => "direct",
            Action::Inverse => "inverse",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TranslationSource {
    /// Translations of the base quasigroup `(Q, ·)`.
    Base,
    /// Translations of the parastrophe `(Q, ·σ)`.
    Parastrophe,
}

impl TranslationSource {
    pub fn token(self) -> &'static str {
        match self {
            TranslationSource::Base => "base",
            TranslationSource::Parastrophe => "para",
        }
    }
}

/// How an isotopy triple acts: the derivative is
/// `x ⋆ y = γ'(B(α'x, β'y))` where `α' = α` or `α⁻¹` (likewise `β'`) per
/// `args`, and `γ' = γ` or `γ⁻¹` per `result`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Convention {
    pub args: Action,
    pub result: Action,
    pub source: TranslationSource,
}

impl Convention {
    /// `γ(x ⋆ y) = αx · βy` with translations of the base quasigroup.
    pub const A: Convention = Convention {
        args: Action::Direct,
        result: Action::Inverse,
        source: TranslationSource::Base,
    };

    /// The eight conventions, convention A first.
    pub fn all() -> Vec<Convention> {
        let mut all = Vec::with_capacity(8);
        for args in [Action::Direct, Action::Inverse] {
            for result in [Action::Inverse, Action::Direct] {
                for source in [TranslationSource::Base, TranslationSource::Parastrophe] {
                    all.push(Convention {
                        args,
                        result,
                        source,
                    });
                }
            }
        }
        all
    }
}

impl Default for Convention {
    fn default() -> Self {
        Convention::A
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "args={};result={};trans={}",
            self.args.token(),
            self.result.token(),
            self.source.token()
        )
    }
}

/// The 108 isotopy triples in the printed block order: for each base
/// translation `k`, the blocks `(k, *, ε)`, `(k, ε, *)` and `(ε, k, *)`.
pub fn table_blocks() -> Vec<IsotopyTriple> {
    let kinds = TranslationKind::ALL;
    let mut blocks = Vec::with_capacity(108);
    for k in kinds {
        let k = TripleComponent::from(k);
        for &t in &kinds {
            blocks.push(IsotopyTriple::new(k, t.into(), TripleComponent::E).unwrap());
        }
        for &t in &kinds {
            blocks.push(IsotopyTriple::new(k, TripleComponent::E, t.into()).unwrap());
        }
        for &t in &kinds {
            blocks.push(IsotopyTriple::new(TripleComponent::E, k, t.into()).unwrap());
        }
    }
    blocks
}

/// All 648 generalized derivative specs, block by block, rows in table order.
pub fn enumerate_specs() -> Vec<DerivativeSpec> {
    table_blocks()
        .into_iter()
        .flat_map(|triple| {
            ParastropheSym::TABLE_ROW_ORDER
                .into_iter()
                .map(move |sigma| DerivativeSpec { sigma, triple })
        })
        .collect()
}

fn component_permutation(source: &Quasigroup, c: TripleComponent, a: Element) -> Permutation {
    match c {
        TripleComponent::Translation(k) => source.translation(k, a),
        TripleComponent::E => Permutation::identity(source.order()),
    }
}

/// Builds the generalized derivative of `q` at `a` as a full Cayley table.
pub fn apply_derivative(
    q: &Quasigroup,
    a: Element,
    spec: &DerivativeSpec,
    conv: Convention,
) -> Quasigroup {
    let n = q.order();
    let b = apply_parastrophe(q, spec.sigma);
    let source = match conv.source {
        TranslationSource::Base => q,
        TranslationSource::Parastrophe => &b,
    };
    let act = |c: TripleComponent, action: Action| {
        let p = component_permutation(source, c, a);
        match action {
            Action::Direct => p,
            Action::Inverse => p.inverse(),
        }
    };
    let alpha = act(spec.triple.alpha, conv.args);
    let beta = act(spec.triple.beta, conv.args);
    let gamma = act(spec.triple.gamma, conv.result);
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            table.push(gamma.apply(b.mul(alpha.apply(x), beta.apply(y))));
        }
    }
    Quasigroup::from_flat(n, &table).expect("an isostrophe of a quasigroup is a quasigroup")
}

fn classical(q: &Quasigroup, a: Element, triple: [TripleComponent; 3]) -> Quasigroup {
    let spec = DerivativeSpec::of(ParastropheSym::Id, triple[0], triple[1], triple[2]);
    apply_derivative(q, a, &spec, Convention::A)
}

use TranslationKind as K;

/// `(Q, ·)(L_a, ε, L_a)`: `x ∘ y = a\((a·x)·y)`, so `(a·x)·y = a·(x∘y)`.
pub fn right_derivative(q: &Quasigroup, a: Element) -> Quasigroup {
    classical(q, a, [K::L.into(), TripleComponent::E, K::L.into()])
}

/// `(Q, ·)(ε, R_a, R_a)`: `x ∗ y = (x·(y·a))/a`.
pub fn left_derivative(q: &Quasigroup, a: Element) -> Quasigroup {
    classical(q, a, [TripleComponent::E, K::R.into(), K::R.into()])
}

/// `(Q, ·)(R_a, L_a⁻¹, ε)`: `x ⋆ y = (x·a)·(a\y)`.
pub fn middle_derivative(q: &Quasigroup, a: Element) -> Quasigroup {
    classical(q, a, [K::R.into(), K::Linv.into(), TripleComponent::E])
}

/// `(Q, ·)(R_a⁻¹, L_a, ε)`: `x ⋄ y = (x/a)·(a·y)`.
pub fn middle_inverse_derivative(q: &Quasigroup, a: Element) -> Quasigroup {
    classical(q, a, [K::Rinv.into(), K::L.into(), TripleComponent::E])
}

/// The three unit claims about `(L_a, L_a, ε)`-type derivatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremClaim {
    /// `(Q, ·)(L_a, L_a, ε)` has a left unit.
    One,
    /// `(Q, ·(12))(L_a, L_a, ε)` has a right unit.
    Two,
    /// `(Q, \)(L_a, L_a⁻¹, ε)` has a left unit.
    Three,
}

impl TheoremClaim {
    pub const ALL: [TheoremClaim; 3] = [TheoremClaim::One, TheoremClaim::Two, TheoremClaim::Three];

    pub fn from_number(n: u8) -> Option<Self> {
        match n {
            1 => Some(TheoremClaim::One),
            2 => Some(TheoremClaim::Two),
            3 => Some(TheoremClaim::Three),
            _ => None,
        }
    }

    pub fn number(self) -> u8 {
        match self {
            TheoremClaim::One => 1,
            TheoremClaim::Two => 2,
            TheoremClaim::Three => 3,
        }
    }

    pub fn spec(self) -> DerivativeSpec {
        let e = TripleComponent::E;
        match self {
            TheoremClaim::One => {
                DerivativeSpec::of(ParastropheSym::Id, K::L.into(), K::L.into(), e)
            }
            TheoremClaim::Two => {
                DerivativeSpec::of(ParastropheSym::S12, K::L.into(), K::L.into(), e)
            }
            TheoremClaim::Three => {
                DerivativeSpec::of(ParastropheSym::S23, K::L.into(), K::Linv.into(), e)
            }
        }
    }

    pub fn unit_kind(self) -> UnitKind {
        match self {
            TheoremClaim::One | TheoremClaim::Three => UnitKind::LeftF,
            TheoremClaim::Two => UnitKind::RightE,
        }
    }
}

/// Builds the claim's derivative under `conv` and returns its unit of the
/// claimed kind, if there is one.
pub fn theorem_check(
    q: &Quasigroup,
    a: Element,
    claim: TheoremClaim,
    conv: Convention,
) -> Option<Element> {
    let d = apply_derivative(q, a, &claim.spec(), conv);
    unit(&d, claim.unit_kind())
}
