//! Minimal linear codes over F_3 built from two ternary functions.
//!
//! The crate computes exact weight distributions and complete weight
//! enumerators of `C(f, g)` from Walsh spectra, decides minimality either by
//! brute-force support inclusion or by a spectral criterion, and builds the
//! explicit family of Hamming-weight based functions together with its
//! closed-form enumerators.
//!
//! Bulk loops go through [`par`], which uses rayon when the default `parallel`
//! feature is on and runs sequentially otherwise.

pub mod code;
pub mod error;
pub mod gf3;
pub mod golden;
pub mod hwconstruct;
pub mod kraw;
pub mod minimality;
pub mod par;
pub mod report;
pub mod spectrum;

pub use code::{
    classify, CodeSpec, Codeword, CodewordParams, CompleteWeightEnumerator, HypothesisViolation, Member,
    ViolationKind, WeightDistribution,
};
pub use error::{Error, Result};
pub use gf3::{pow3, Trit, TritVector};
pub use hwconstruct::HWParams;
pub use minimality::{CheckOptions, MinimalityVerdict, StopPolicy};
pub use report::EnumeratorReport;
pub use spectrum::{transform, CountSpectrum, EisensteinInt, TernaryFunction};
