//! Exact Selberg-like integrals over Jack-polynomial and power-sum integrands.
//!
//! The crate expands an integrand in the Jack basis `P_λ^{(1/κ)}`, replaces
//! every basis element by its normalized integral (a product of affine factors
//! in `N`, `a`, `b`, `κ`), and returns the sum as a reduced rational function
//! of the number of variables `N`. From there the large-`N` behaviour is read
//! off exactly.
//!
//! - [`exactnum`]: exact rational functions in `κ, a, b, ℓ, q, t, u, N`
//! - [`partitions`]: integer partitions, arm and leg lengths, dominance
//! - [`symfunc`]: monomial and power-sum bases, the `κ`-deformed scalar product
//! - [`jack`]: Gram–Schmidt Jack bases, closed-form power-sum coefficients,
//!   the Macdonald coefficient and its Jack limit
//! - [`selberg`]: normalized integrals of Jack polynomials, power sums and
//!   arbitrary polynomials
//! - [`oracle`]: brute-force moment integration for integer `κ`
//! - [`asymptotics`]: `N → ∞` degree, leading coefficient and the two limit laws
//! - [`report`]: tables and records shared by the `selberg` binary

pub mod asymptotics;
pub mod error;
pub mod exactnum;
pub mod jack;
pub mod oracle;
pub mod partitions;
pub mod report;
pub mod selberg;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use exactnum::{Bindings, NRationalFn, ParamScalar, Var};
pub use partitions::Partition;
