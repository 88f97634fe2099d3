//! Integer polynomials, characteristic polynomials and symmetric functions
//! of their roots.
//!
//! Coefficients are stored leading coefficient first. Symmetric functions
//! of eigenvalues (power sums, the polynomial of `n`-th powers of the roots,
//! discriminants) are computed through Newton's identities and Sylvester
//! determinants, so the roots themselves are never needed.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// Polynomial with integer coefficients and nonzero leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

/// Monic integer polynomial of degree at least one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonicIntPolynomial {
    coeffs: Vec<BigInt>,
}

/// Power sums `p₀ … p_N` of the roots of a polynomial; `p₀` is the degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSums {
    values: Vec<BigInt>,
}

impl IntPolynomial {
    /// Leading coefficient first; it must be nonzero.
    pub fn new<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>) -> Result<Self> {
        let coeffs: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        match coeffs.first() {
            None => Err(Error::Empty),
            Some(c) if c.is_zero() => Err(Error::LeadingCoefficient),
            Some(_) => Ok(IntPolynomial { coeffs }),
        }
    }

    /// Degree.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients, leading first.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Value at an integer point (Horner).
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl MonicIntPolynomial {
    /// Leading coefficient first; it must equal one and the degree must be
    /// at least one.
    pub fn new<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>) -> Result<Self> {
        let coeffs: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        if coeffs.is_empty() {
            return Err(Error::Empty);
        }
        if !coeffs[0].is_one() {
            return Err(Error::LeadingCoefficient);
        }
        if coeffs.len() < 2 {
            return Err(Error::Degree { min: 1, found: 0 });
        }
        Ok(MonicIntPolynomial { coeffs })
    }

    /// Degree.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients, leading first.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Constant term `f(0)`.
    pub fn constant_term(&self) -> &BigInt {
        &self.coeffs[self.degree()]
    }

    /// Value at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Value at a square matrix, `f(X) = Xᵈ + a₁Xᵈ⁻¹ + … + a_d·I`.
    pub fn eval_matrix(&self, x: &IntMatrix) -> IntMatrix {
        let id = IntMatrix::identity(x.dim());
        let mut acc = IntMatrix::zero(x.dim());
        for c in &self.coeffs {
            acc = acc.mul(x).expect("same dim").add(&id.scale(c)).expect("same dim");
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> IntPolynomial {
        let d = self.degree();
        let coeffs = self.coeffs[..d]
            .iter()
            .enumerate()
            .map(|(i, c)| c * BigInt::from(d - i))
            .collect();
        IntPolynomial { coeffs }
    }

    /// Forgets monicity.
    pub fn to_int_polynomial(&self) -> IntPolynomial {
        IntPolynomial { coeffs: self.coeffs.clone() }
    }
}

impl PowerSums {
    /// Wraps `p₀ … p_N`.
    pub fn new(values: Vec<BigInt>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Empty);
        }
        Ok(PowerSums { values })
    }

    /// Highest index `N` available.
    pub fn count(&self) -> usize {
        self.values.len() - 1
    }

    /// `p_k`.
    pub fn get(&self, k: usize) -> &BigInt {
        &self.values[k]
    }

    /// All values `p₀ … p_N`.
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }
}

fn fmt_poly(coeffs: &[BigInt], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let d = coeffs.len() - 1;
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() && !(first && i == d) {
            continue;
        }
        let p = d - i;
        let mag = c.abs();
        if first {
            if c.is_negative() {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if c.is_negative() { " - " } else { " + " })?;
        }
        first = false;
        if !mag.is_one() || p == 0 {
            write!(f, "{mag}")?;
        }
        match p {
            0 => {}
            1 => f.write_str("x")?,
            _ => write!(f, "x^{p}")?,
        }
    }
    Ok(())
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(&self.coeffs, f)
    }
}

impl fmt::Display for MonicIntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(&self.coeffs, f)
    }
}

/// Characteristic polynomial `det(λI − X)` by Faddeev–LeVerrier.
///
/// Each step divides a trace by `k`; the division is asserted exact.
pub fn char_poly(x: &IntMatrix) -> MonicIntPolynomial {
    let s = x.dim();
    let id = IntMatrix::identity(s);
    let mut coeffs = Vec::with_capacity(s + 1);
    coeffs.push(BigInt::one());
    let mut m = IntMatrix::zero(s);
    for k in 1..=s {
        m = x.mul(&m).expect("same dim").add(&id.scale(&coeffs[k - 1])).expect("same dim");
        let t = x.mul(&m).expect("same dim").trace();
        let (q, r) = t.div_rem(&BigInt::from(k));
        assert!(r.is_zero(), "Faddeev-LeVerrier trace not divisible by {k}");
        coeffs.push(-q);
    }
    MonicIntPolynomial { coeffs }
}

/// Power sums `p_k = Σ λᵢᵏ` of the roots of `f` for `k = 0 … n`.
pub fn power_sums(f: &MonicIntPolynomial, n: usize) -> PowerSums {
    let d = f.degree();
    let a = &f.coeffs;
    let mut p: Vec<BigInt> = Vec::with_capacity(n + 1);
    p.push(BigInt::from(d));
    for k in 1..=n {
        // p_k + a₁p_{k−1} + … + a_{k−1}p₁ + k·a_k = 0   (k ≤ d)
        // p_k + a₁p_{k−1} + … + a_d p_{k−d} = 0        (k > d)
        let mut acc = BigInt::zero();
        for i in 1..k.min(d + 1) {
            acc += &a[i] * &p[k - i];
        }
        if k <= d {
            acc += &a[k] * BigInt::from(k);
        }
        p.push(-acc);
    }
    PowerSums { values: p }
}

/// The monic polynomial of the given degree whose roots have power sums
/// `p₁ … p_degree`, by inverse Newton identities.
pub fn poly_from_power_sums(p: &PowerSums, degree: usize) -> Result<MonicIntPolynomial> {
    if degree == 0 {
        return Err(Error::Degree { min: 1, found: 0 });
    }
    if p.count() < degree {
        return Err(Error::TooFewPowerSums { degree, count: p.count() });
    }
    let mut a = Vec::with_capacity(degree + 1);
    a.push(BigInt::one());
    for k in 1..=degree {
        let mut acc = p.values[k].clone();
        for (i, ai) in a.iter().enumerate().take(k).skip(1) {
            acc += ai * &p.values[k - i];
        }
        let (q, r) = acc.div_rem(&BigInt::from(k));
        if !r.is_zero() {
            return Err(Error::NotRealizable { k });
        }
        a.push(-q);
    }
    Ok(MonicIntPolynomial { coeffs: a })
}

/// Monic polynomial whose roots are the `n`-th powers of the roots of `f`.
pub fn power_polynomial(f: &MonicIntPolynomial, n: usize) -> Result<MonicIntPolynomial> {
    if n == 0 {
        return Err(Error::ZeroIndex);
    }
    if n == 1 {
        return Ok(f.clone());
    }
    let d = f.degree();
    let all = power_sums(f, d * n);
    let picked: Vec<BigInt> = (0..=d).map(|k| all.values[k * n].clone()).collect();
    poly_from_power_sums(&PowerSums { values: picked }, d)
}

/// Sylvester matrix of `f` (degree m) and `g` (degree k), size `m + k`.
pub fn sylvester_matrix(f: &[BigInt], g: &[BigInt]) -> IntMatrix {
    let m = f.len() - 1;
    let k = g.len() - 1;
    let size = m + k;
    let mut rows = vec![vec![BigInt::zero(); size]; size];
    for (i, row) in rows.iter_mut().enumerate().take(k) {
        for (j, c) in f.iter().enumerate() {
            row[i + j] = c.clone();
        }
    }
    for (i, row) in rows.iter_mut().skip(k).enumerate() {
        for (j, c) in g.iter().enumerate() {
            row[i + j] = c.clone();
        }
    }
    IntMatrix::from_rows(rows).expect("square by construction")
}

/// Resultant `Res(f, g)` as the Sylvester determinant.
pub fn resultant(f: &MonicIntPolynomial, g: &IntPolynomial) -> Result<BigInt> {
    if g.degree() == 0 {
        return Err(Error::Degree { min: 1, found: 0 });
    }
    Ok(sylvester_matrix(&f.coeffs, &g.coeffs).det())
}

/// Discriminant `(−1)^{d(d−1)/2} · Res(f, f′)`; zero exactly when `f` has a
/// repeated root.
pub fn discriminant(f: &MonicIntPolynomial) -> Result<BigInt> {
    let d = f.degree();
    if d < 2 {
        return Err(Error::Degree { min: 2, found: d });
    }
    let r = resultant(f, &f.derivative())?;
    Ok(if (d * (d - 1) / 2) % 2 == 1 { -r } else { r })
}
