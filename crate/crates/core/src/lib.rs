//! Computer-assisted verification of sharp coefficient bounds for the class
//! of starlike functions associated with the right loop of the lemniscate of
//! Bernoulli (`zf'/f ≺ √(1+z)`).
//!
//! Everything on the certification path is exact rational arithmetic:
//! polynomial identities are checked term by term, maxima over boxes are
//! bracketed by Bernstein branch-and-bound, and real roots are isolated with
//! Sturm sequences. Floating point appears only in the sampling oracle, the
//! grid-based class-membership checks and in report rendering.

pub mod algebra;
pub mod boxopt;
pub mod caratheodory;
pub mod classtools;
pub mod error;
pub mod functionals;
pub mod oracle;
pub mod polyalg;
pub mod report;
pub mod series;
pub mod suite;

pub use algebra::{rat, Rat};
pub use error::{Error, Result};
pub use polyalg::{BoxRegion, ComplexPoly, RatInterval, RatPoly};
pub use report::{Claim, Status, VerificationReport};
