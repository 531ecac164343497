//! Base-field scalars, `k[x]`, and the quotient ring `k[x]/<T>`.

pub mod quotient;
pub mod scalar;
pub mod xpoly;

pub use quotient::{relem_inverse, Modulus, RElem};
pub use scalar::{Field, Scalar};
pub use xpoly::{xpoly_divrem, xpoly_gcd, xpoly_xgcd, XPoly};
