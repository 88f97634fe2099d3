//! Exact determinant divisibility sequences of matrix power maps.
//!
//! For an integer square matrix `X` of size `s`, the power map `X ↦ Xⁿ` has an
//! `s² × s²` Jacobian `Jₙ = Σₖ (Xᵗ)ᵏ ⊗ Xⁿ⁻¹⁻ᵏ`. The sequence `det Jₙ` is a
//! divisibility sequence, and when the characteristic polynomial `f` of `X`
//! has distinct roots it has the closed form
//!
//! ```text
//! det Jₙ = nˢ · det(X)ⁿ⁻¹ · Δ(gₙ) / Δ(f)
//! ```
//!
//! where `gₙ` is the monic polynomial whose roots are the `n`-th powers of the
//! roots of `f` and `Δ` is the discriminant. Everything here is computed with
//! arbitrary-precision integers; no floating point is involved.
//!
//! The crate is `no_std` and only needs `alloc`.
//!
//! * [`linalg`]: integer matrices, Kronecker products, Bareiss determinants,
//!   the Jacobian of the power map.
//! * [`poly`]: characteristic polynomials, power sums, Newton identities,
//!   resultants and discriminants.
//! * [`sequence`]: the sequence engine (oracle, closed form, 2×2 Lucas form)
//!   and divisibility verification.
//! * [`factor`]: Miller–Rabin and Pollard–Brent rho factorization.

#![no_std]
#![deny(missing_docs)]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod error;
pub mod factor;
pub mod linalg;
pub mod poly;
pub mod sequence;

pub use error::{Error, Result};
pub use factor::{factorize, is_prime, Factorization, Factorizer};
pub use linalg::{IntMatrix, IntVector};
pub use poly::{IntPolynomial, MonicIntPolynomial, PowerSums};
pub use sequence::{
    Column, DivisibilityCheck, SequenceContext, SequenceEntry, VerificationReport,
};

pub use num_bigint::{BigInt, BigUint};
