//! Exact-arithmetic toolkit for certifying hypotheses about a degree-7
//! polynomial's root orbit on the twisted cubic.
//!
//! The pipeline takes f over the rationals, certifies its Galois group from
//! cycle-type witnesses, checks that the seven orbit points are in general
//! position, builds the explicit cubic forms through the orbit together with
//! their branch sextic, verifies the mod-2 structure of the associated rank-8
//! lattice, confirms simplicity of the induced 6-dimensional F2 module, and
//! validates the relevant character tables. The final verdict is a
//! machine-checkable certificate that all hypotheses of the endomorphism-ring
//! criterion hold for f.
//!
//! Every quantity on the certification path is computed exactly (arbitrary
//! precision rationals, F2, or cyclotomic integers). Floating point appears
//! only inside test oracles.

pub mod cache;
pub mod chartab;
pub mod cyclo;
pub mod f2;
pub mod forms;
pub mod galois;
pub mod modp;
pub mod numfield;
pub mod picard;
pub mod pipeline;
pub mod poly;
pub mod rat;
pub mod resolvent;
pub mod series;

pub use poly::UniPoly;
pub use rat::Rat;

/// Crate-wide error type. Variants map onto the CLI exit codes: input
/// contract violations exit 2, validation and internal failures exit 3.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("operation requires a monic polynomial")]
    NotMonic,
    #[error("polynomial is not separable")]
    Inseparable,
    #[error("REDUCIBLE: {0}")]
    Reducible(String),
    #[error("prime {prime} is not usable: {reason}")]
    NotUsablePrime { prime: u64, reason: String },
    #[error("number-field elements have different moduli")]
    ModulusMismatch,
    #[error("cyclotomic conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u32, u32),
    #[error("character table data: {0}")]
    Data(String),
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("replay failed at {stage}: {detail}")]
    Replay { stage: String, detail: String },
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
