//! Jack superpolynomials in superspace, computed exactly over `ℚ(α)`,
//! together with their specializations at negative rational `α`, the ideals
//! they span, and the vanishing and clustering properties of those ideals.
//!
//! Modules, from the bottom up:
//!
//! - [`coeffring`]: exact rationals, `ℚ(α)`, linear algebra.
//! - [`spart`]: superpartitions, diagrams, hooks, admissibility.
//! - [`superpoly`]: polynomials in commuting `x` and anticommuting `θ`.
//! - [`ops`]: differential and exchange operators acting on them.
//! - [`jack`]: Jack superpolynomials and their identities.
//! - [`ideals`]: ideals at `α = α_{k,r}`, characters, vanishing.

pub mod coeffring;
pub mod ideals;
pub mod jack;
pub mod ops;
pub mod par;
pub mod spart;
pub mod superpoly;
