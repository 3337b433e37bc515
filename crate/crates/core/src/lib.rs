//! Separability of fermionic states under a split of the modes into two
//! groups.
//!
//! States are dense density matrices in the Fock basis with mode 1 as the
//! most significant bit. [`classify::classify`] runs every membership test,
//! [`xstate`] has the closed forms for one mode per side, [`measures`] the
//! entanglement of formation and [`xychain`] the thermal state of two
//! neighbouring sites of the XY chain.
//!
//! ```
//! use fermisep::classify::{classify, SetLabel, Tolerances, Verdict};
//! use fermisep::linalg::c;
//! use fermisep::split::ModeBipartition;
//! use fermisep::xstate::XStateParams;
//!
//! let rho = XStateParams::even(0.5, 0.4, 0.1, c(0.0, 0.0), c(0.1, 0.0)).to_matrix();
//! let report = classify(&rho, ModeBipartition::one_by_one(), Tolerances::default()).unwrap();
//! assert_eq!(report.verdict(SetLabel::S2PrimePi), Some(Verdict::Member));
//! ```

pub mod classify;
pub mod error;
pub use error::{Error, Result};
pub mod fermion;
pub mod linalg;
pub mod split;
pub mod xstate;
pub mod multicopy;
pub mod random;
pub mod search;
pub mod measures;
pub mod xychain;
pub mod oracles;
pub mod selftest;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/modes.md")]
    mod modes {}
    #[doc = include_str!("../../../book/src/separability.md")]
    mod separability {}
    #[doc = include_str!("../../../book/src/two-modes.md")]
    mod two_modes {}
    #[doc = include_str!("../../../book/src/search.md")]
    mod search {}
    #[doc = include_str!("../../../book/src/entanglement.md")]
    mod entanglement {}
    #[doc = include_str!("../../../book/src/xy-chain.md")]
    mod xy_chain {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
