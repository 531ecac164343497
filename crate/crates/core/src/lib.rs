//! Gcd chains of monic polynomials over `k[x]/<p^e>`.

pub mod bipoly;
pub mod chain;
pub mod error;
pub mod format;
pub mod io;
pub mod lifting;
pub mod nilpotent;
pub mod ring;
pub mod samples;
pub mod subresultant;
pub mod trace;
pub mod verify;
pub mod weierstrass;

pub use bipoly::YPoly;
pub use chain::{
    gcd_chain, gcd_chain_traced, largest_factor, largest_factor_traced, Block, GcdChain, LargestFactorOutcome, Next,
};
pub use error::{Error, Result};
pub use lifting::{bezout_mod, hensel_lift, BezoutPair, HenselLift, HenselStep};
pub use nilpotent::{nilpotent_factor, NilpotentFactor};
pub use ring::{Field, Modulus, RElem, Scalar, XPoly};
pub use subresultant::{prem, subres_modified, subres_prs_mod, PrsOutcome, SubresOutcome};
pub use trace::{Event, Trace};
pub use weierstrass::{
    series_inverse_trunc, weierstrass_divide, weierstrass_factorization, weierstrass_monic, WeierstrassDivision,
    WeierstrassFactorization,
};
