//! Generalized (isostrophic) derivatives of finite quasigroups.
//!
//! The crate builds the 648 derivatives of a quasigroup obtained from one of
//! its six parastrophes and an isotopy made of translations at a fixed
//! element, detects left, right and middle units, and surveys all 1944
//! (derivative, unit) cases over corpora of Latin squares. Every negative
//! answer comes with a [`survey::Certificate`] that can be checked on its own.

pub mod checks;
pub mod corpus;
pub mod derivative;
pub mod parastrophe;
pub mod qcore;
pub mod reportio;
pub mod survey;
pub mod units;

pub use corpus::{CorpusDescriptor, CorpusError};
pub use derivative::{apply_derivative, enumerate_specs, Convention, DerivativeSpec};
pub use parastrophe::{apply_parastrophe, ParastropheSym};
pub use qcore::{Element, Permutation, Quasigroup, QuasigroupError, TranslationKind};
pub use survey::{run_survey, Certificate, SurveyResult};
pub use units::{unit_profile, UnitKind, UnitProfile};
