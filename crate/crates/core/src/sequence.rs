//! The determinant divisibility sequence `dₙ = det Jₙ` of a matrix power map.
//!
//! Three routes to the same numbers:
//!
//! * the oracle, a Bareiss determinant of the explicit `s² × s²` Jacobian;
//! * the closed form `nˢ · det(X)ⁿ⁻¹ · Δ(gₙ)/Δ(f)`, valid when the
//!   characteristic polynomial `f` has distinct roots;
//! * for `2 × 2` matrices, the Lucas form `n² · det(X)ⁿ⁻¹ · Uₙ²`.
//!
//! The "reduced" value `det(X)ⁿ⁻¹ · Δ(gₙ)/Δ(f)` is `dₙ / nˢ`. The "literal"
//! value keeps an `n²` prefactor regardless of `s`; it agrees with `dₙ` only
//! for `s = 2` and is carried as a comparison column.

use alloc::vec::Vec;
use core::fmt::{self, Write};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::factor::{Factorization, Factorizer};
use crate::linalg::{jacobian_power_map, IntMatrix};
use crate::poly::{char_poly, discriminant, power_polynomial, MonicIntPolynomial};

/// One row of a computed sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceEntry {
    /// Index, starting at 1.
    pub n: u64,
    /// `det Jₙ`.
    pub d_jac: BigInt,
    /// `d_jac / nˢ`, absent only if that division is not exact.
    pub reduced: Option<BigInt>,
    /// `n² · reduced`; absent on the fallback path.
    pub literal_thm: Option<BigInt>,
    /// Set when `Δ(f) = 0` and `d_jac` came from the Jacobian determinant.
    pub fallback_used: bool,
    /// Factorization of `|reduced|`, when requested.
    pub factorization: Option<Factorization>,
}

/// Which value of a [`SequenceEntry`] to look at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Column {
    /// [`SequenceEntry::reduced`].
    Reduced,
    /// [`SequenceEntry::d_jac`].
    Jacobian,
}

impl Column {
    /// Lowercase name used in reports and on the command line.
    pub fn name(self) -> &'static str {
        match self {
            Column::Reduced => "reduced",
            Column::Jacobian => "jacobian",
        }
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl SequenceEntry {
    /// The value in `column`, if present.
    pub fn value(&self, column: Column) -> Option<&BigInt> {
        match column {
            Column::Reduced => self.reduced.as_ref(),
            Column::Jacobian => Some(&self.d_jac),
        }
    }
}

/// One `dₙ | dₘ` check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisibilityCheck {
    /// Column checked.
    pub column: Column,
    /// Divisor index.
    pub n: u64,
    /// Multiple index, `n | m`.
    pub m: u64,
    /// Whether `dₙ | dₘ`.
    pub passed: bool,
}

/// The oracle and the `nˢ` closed form disagree. Always a failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormMismatch {
    /// Index.
    pub n: u64,
    /// `det Jₙ`.
    pub oracle: BigInt,
    /// `nˢ · det(X)ⁿ⁻¹ · Δ(gₙ)/Δ(f)`.
    pub closed: BigInt,
}

/// The `n²`-prefactor value differs from the oracle. Informational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiteralDiscrepancy {
    /// Index.
    pub n: u64,
    /// `det Jₙ`.
    pub oracle: BigInt,
    /// `n² · det(X)ⁿ⁻¹ · Δ(gₙ)/Δ(f)`.
    pub literal: BigInt,
}

/// Outcome of closed-form and divisibility checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    /// [`fingerprint`] of the matrix, when known.
    pub fingerprint: Option<u64>,
    /// Matrix dimension `s`, when known.
    pub dim: Option<usize>,
    /// Highest index checked.
    pub n_max: u64,
    /// Every `(n, m)` pair checked, per column.
    pub divisibility: Vec<DivisibilityCheck>,
    /// Pairs skipped because a value was absent.
    pub skipped_pairs: usize,
    /// Indices where the `nˢ` closed form was compared with the oracle.
    pub closed_form_checked: Vec<u64>,
    /// Indices where the closed form does not apply (`Δ(f) = 0`).
    pub fallback_indices: Vec<u64>,
    /// Closed-form failures.
    pub closed_form_mismatches: Vec<ClosedFormMismatch>,
    /// Informational `n²` discrepancies.
    pub literal_discrepancies: Vec<LiteralDiscrepancy>,
}

impl VerificationReport {
    /// Failing divisibility checks.
    pub fn divisibility_failures(&self) -> impl Iterator<Item = &DivisibilityCheck> {
        self.divisibility.iter().filter(|c| !c.passed)
    }

    /// True when no divisibility check failed and the closed form matched
    /// everywhere it applied. Literal discrepancies do not count.
    pub fn passed(&self) -> bool {
        self.closed_form_mismatches.is_empty() && self.divisibility.iter().all(|c| c.passed)
    }

    /// Appends the checks of `other`.
    pub fn merge(&mut self, other: VerificationReport) {
        self.fingerprint = self.fingerprint.or(other.fingerprint);
        self.dim = self.dim.or(other.dim);
        self.n_max = self.n_max.max(other.n_max);
        self.divisibility.extend(other.divisibility);
        self.skipped_pairs += other.skipped_pairs;
        self.closed_form_checked.extend(other.closed_form_checked);
        self.fallback_indices.extend(other.fallback_indices);
        self.closed_form_mismatches.extend(other.closed_form_mismatches);
        self.literal_discrepancies.extend(other.literal_discrepancies);
    }
}

struct Fnv1a(u64);

impl Write for Fnv1a {
    fn write_str(&mut self, s: &str) -> fmt::Result {
        for b in s.bytes() {
            self.0 ^= b as u64;
            self.0 = self.0.wrapping_mul(0x0100_0000_01b3);
        }
        Ok(())
    }
}

/// 64-bit FNV-1a hash of the dimension and decimal entries.
pub fn fingerprint(x: &IntMatrix) -> u64 {
    let mut h = Fnv1a(0xcbf2_9ce4_8422_2325);
    let _ = write!(h, "{}:", x.dim());
    for e in x.entries() {
        let _ = write!(h, "{e},");
    }
    h.0
}

/// `a | b` on signed integers: every value divides 0, 0 divides only 0.
pub fn divides(a: &BigInt, b: &BigInt) -> bool {
    if a.is_zero() {
        b.is_zero()
    } else {
        (b % a).is_zero()
    }
}

/// Precomputed data for one matrix `X`.
#[derive(Clone, Debug)]
pub struct SequenceContext {
    x: IntMatrix,
    det: BigInt,
    charpoly: MonicIntPolynomial,
    // None for 1×1 matrices: no root pairs, the ratio is the empty product
    disc: Option<BigInt>,
}

impl SequenceContext {
    /// Computes the characteristic polynomial and its discriminant.
    pub fn new(x: IntMatrix) -> Self {
        let charpoly = char_poly(&x);
        let disc = (x.dim() >= 2).then(|| discriminant(&charpoly).expect("degree >= 2"));
        let det = x.det();
        SequenceContext { x, det, charpoly, disc }
    }

    /// The matrix.
    pub fn matrix(&self) -> &IntMatrix {
        &self.x
    }

    /// `s`.
    pub fn dim(&self) -> usize {
        self.x.dim()
    }

    /// `det X`.
    pub fn det(&self) -> &BigInt {
        &self.det
    }

    /// `f = det(λI − X)`.
    pub fn char_poly(&self) -> &MonicIntPolynomial {
        &self.charpoly
    }

    /// `Δ(f)`; `None` for `1 × 1` matrices.
    pub fn discriminant(&self) -> Option<&BigInt> {
        self.disc.as_ref()
    }

    /// True when the closed form applies, i.e. `Δ(f) ≠ 0`.
    pub fn has_distinct_eigenvalues(&self) -> bool {
        self.disc.as_ref().is_none_or(|d| !d.is_zero())
    }

    /// `det Jₙ` from the explicit Jacobian.
    pub fn d_jacobian(&self, n: u64) -> Result<BigInt> {
        Ok(jacobian_power_map(&self.x, n)?.det())
    }

    /// `Δ(gₙ) / Δ(f) = ∏_{i<j} ((λᵢⁿ − λⱼⁿ)/(λᵢ − λⱼ))²`.
    ///
    /// Panics if the division is not exact, which would contradict the
    /// integrality of symmetric functions of algebraic integers.
    pub fn p_ratio(&self, n: u64) -> Result<BigInt> {
        if n == 0 {
            return Err(Error::ZeroIndex);
        }
        let Some(disc) = &self.disc else {
            return Ok(BigInt::one());
        };
        if disc.is_zero() {
            return Err(Error::RepeatedEigenvalue);
        }
        if n == 1 {
            return Ok(BigInt::one());
        }
        let g = power_polynomial(&self.charpoly, n as usize)?;
        let dg = discriminant(&g)?;
        let (q, r) = dg.div_rem(disc);
        assert!(r.is_zero(), "discriminant ratio is not an integer");
        Ok(q)
    }

    /// `det(X)ⁿ⁻¹ · Δ(gₙ)/Δ(f)`.
    fn reduced_closed(&self, n: u64) -> Result<BigInt> {
        Ok(num_traits::pow(self.det.clone(), (n - 1) as usize) * self.p_ratio(n)?)
    }

    /// The sequence entry at `n`, by the closed form when `Δ(f) ≠ 0` and by
    /// the Jacobian determinant otherwise.
    pub fn d_closed(&self, n: u64) -> Result<SequenceEntry> {
        if n == 0 {
            return Err(Error::ZeroIndex);
        }
        let scale = num_traits::pow(BigInt::from(n), self.dim());
        if self.has_distinct_eigenvalues() {
            let reduced = self.reduced_closed(n)?;
            let literal = BigInt::from(n * n) * &reduced;
            return Ok(SequenceEntry {
                n,
                d_jac: &scale * &reduced,
                reduced: Some(reduced),
                literal_thm: Some(literal),
                fallback_used: false,
                factorization: None,
            });
        }
        let d_jac = self.d_jacobian(n)?;
        let (q, r) = d_jac.div_rem(&scale);
        Ok(SequenceEntry {
            n,
            d_jac,
            reduced: r.is_zero().then_some(q),
            literal_thm: None,
            fallback_used: true,
            factorization: None,
        })
    }

    /// `n² · det(X)ⁿ⁻¹ · Uₙ²` with the Lucas sequence `U₀ = 0, U₁ = 1,
    /// Uₖ = tr(X)·Uₖ₋₁ − det(X)·Uₖ₋₂`. Only for `2 × 2` matrices.
    pub fn lucas_2x2(&self, n: u64) -> Result<BigInt> {
        lucas_2x2(&self.x, n)
    }

    /// Entries `1 ..= n_max`, optionally with factorizations of `|reduced|`.
    pub fn generate(&self, n_max: u64, with_factorization: bool) -> Result<Vec<SequenceEntry>> {
        let factorizer = with_factorization.then(Factorizer::default);
        (1..=n_max)
            .map(|n| {
                let mut e = self.d_closed(n)?;
                if let (Some(fz), Some(r)) = (&factorizer, &e.reduced) {
                    e.factorization = Some(fz.factorize(&r.abs()));
                }
                Ok(e)
            })
            .collect()
    }

    /// Compares the oracle with the `nˢ` closed form for `n ≤ n_max`, and
    /// notes every index where the `n²` form differs.
    pub fn verify_closed_form(&self, n_max: u64) -> Result<VerificationReport> {
        let mut report = self.empty_report(n_max);
        let s = self.dim();
        for n in 1..=n_max {
            let oracle = self.d_jacobian(n)?;
            if !self.has_distinct_eigenvalues() {
                report.fallback_indices.push(n);
                continue;
            }
            let reduced = self.reduced_closed(n)?;
            let closed = num_traits::pow(BigInt::from(n), s) * &reduced;
            let literal = BigInt::from(n * n) * &reduced;
            report.closed_form_checked.push(n);
            if closed != oracle {
                report.closed_form_mismatches.push(ClosedFormMismatch { n, oracle: oracle.clone(), closed });
            }
            if literal != oracle {
                report.literal_discrepancies.push(LiteralDiscrepancy { n, oracle, literal });
            }
        }
        Ok(report)
    }

    /// Closed-form check plus divisibility on both columns.
    pub fn verify(&self, n_max: u64) -> Result<VerificationReport> {
        let mut report = self.verify_closed_form(n_max)?;
        let entries = self.generate(n_max, false)?;
        for column in [Column::Jacobian, Column::Reduced] {
            report.merge(verify_divisibility(&entries, column));
        }
        Ok(report)
    }

    fn empty_report(&self, n_max: u64) -> VerificationReport {
        VerificationReport {
            fingerprint: Some(fingerprint(&self.x)),
            dim: Some(self.dim()),
            n_max,
            ..Default::default()
        }
    }
}

/// `det Jₙ` for `X`.
pub fn d_jacobian(x: &IntMatrix, n: u64) -> Result<BigInt> {
    Ok(jacobian_power_map(x, n)?.det())
}

/// `Δ(gₙ)/Δ(f)` for `X`; errors with [`Error::RepeatedEigenvalue`] when
/// `Δ(f) = 0`.
pub fn p_ratio(x: &IntMatrix, n: u64) -> Result<BigInt> {
    SequenceContext::new(x.clone()).p_ratio(n)
}

/// See [`SequenceContext::d_closed`].
pub fn d_closed(x: &IntMatrix, n: u64) -> Result<SequenceEntry> {
    SequenceContext::new(x.clone()).d_closed(n)
}

/// See [`SequenceContext::lucas_2x2`].
pub fn lucas_2x2(x: &IntMatrix, n: u64) -> Result<BigInt> {
    if x.dim() != 2 {
        return Err(Error::WrongDimension { expected: 2, found: x.dim() });
    }
    if n == 0 {
        return Err(Error::ZeroIndex);
    }
    let a = x.trace();
    let c = x.det();
    let (mut prev, mut cur) = (BigInt::zero(), BigInt::one());
    for _ in 1..n {
        let next = &a * &cur - &c * &prev;
        prev = cur;
        cur = next;
    }
    Ok(BigInt::from(n * n) * num_traits::pow(c, (n - 1) as usize) * &cur * &cur)
}

/// See [`SequenceContext::generate`].
pub fn generate_sequence(x: &IntMatrix, n_max: u64, with_factorization: bool) -> Result<Vec<SequenceEntry>> {
    SequenceContext::new(x.clone()).generate(n_max, with_factorization)
}

/// See [`SequenceContext::verify_closed_form`].
pub fn verify_closed_form(x: &IntMatrix, n_max: u64) -> Result<VerificationReport> {
    SequenceContext::new(x.clone()).verify_closed_form(n_max)
}

/// Checks `dₙ | dₘ` for every pair of indices `n | m`, `n < m`, present in
/// `entries`. Pairs with an absent value are counted as skipped.
pub fn verify_divisibility(entries: &[SequenceEntry], column: Column) -> VerificationReport {
    let mut report = VerificationReport {
        n_max: entries.iter().map(|e| e.n).max().unwrap_or(0),
        ..Default::default()
    };
    let mut sorted: Vec<&SequenceEntry> = entries.iter().collect();
    sorted.sort_by_key(|e| e.n);
    for (i, small) in sorted.iter().enumerate() {
        for big in &sorted[i + 1..] {
            if big.n % small.n != 0 {
                continue;
            }
            match (small.value(column), big.value(column)) {
                (Some(a), Some(b)) => report.divisibility.push(DivisibilityCheck {
                    column,
                    n: small.n,
                    m: big.n,
                    passed: divides(a, b),
                }),
                _ => report.skipped_pairs += 1,
            }
        }
    }
    report
}
