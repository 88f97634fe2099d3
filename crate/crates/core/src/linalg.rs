//! Exact square integer matrices.
//!
//! Storage is row-major. The vec embedding used throughout is column
//! stacking: `vec(E)[j·s + i] = E[i][j]`. With that convention the Jacobian
//! of `X ↦ Xⁿ` is exactly `Σₖ (Xᵗ)ᵏ ⊗ Xⁿ⁻¹⁻ᵏ`.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Index;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Square matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

/// Integer column vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntVector {
    entries: Vec<BigInt>,
}

impl IntMatrix {
    /// Builds a `dim × dim` matrix from row-major entries.
    pub fn new(dim: usize, entries: Vec<BigInt>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Empty);
        }
        if entries.len() != dim * dim {
            return Err(Error::NotSquare { dim, len: entries.len() });
        }
        Ok(IntMatrix { dim, entries })
    }

    /// Builds a matrix from rows; every row must have as many entries as
    /// there are rows.
    pub fn from_rows<R, T>(rows: R) -> Result<Self>
    where
        R: IntoIterator,
        R::Item: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let rows: Vec<Vec<BigInt>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(Into::into).collect())
            .collect();
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::Empty);
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::NotSquare { dim, len: row.len() * dim });
            }
            entries.extend(row);
        }
        Ok(IntMatrix { dim, entries })
    }

    /// Builds a matrix entry by entry.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        assert!(dim > 0, "matrix dimension must be positive");
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        IntMatrix { dim, entries }
    }

    /// The zero matrix.
    pub fn zero(dim: usize) -> Self {
        Self::from_fn(dim, |_, _| BigInt::zero())
    }

    /// The identity matrix.
    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { BigInt::one() } else { BigInt::zero() })
    }

    /// Diagonal matrix with the given entries.
    pub fn diagonal<T: Into<BigInt>>(diag: impl IntoIterator<Item = T>) -> Result<Self> {
        let diag: Vec<BigInt> = diag.into_iter().map(Into::into).collect();
        if diag.is_empty() {
            return Err(Error::Empty);
        }
        Ok(Self::from_fn(diag.len(), |i, j| {
            if i == j {
                diag[i].clone()
            } else {
                BigInt::zero()
            }
        }))
    }

    /// Side length `s`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry at row `i`, column `j`.
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.dim + j]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// Iterator over rows as slices.
    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.entries.chunks(self.dim)
    }

    /// Transpose.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).clone())
    }

    /// Sum of the diagonal.
    pub fn trace(&self) -> BigInt {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Matrix product.
    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        check_dims(self, other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &IntMatrix) -> IntMatrix {
        let s = self.dim;
        let mut out = Vec::with_capacity(s * s);
        for i in 0..s {
            for j in 0..s {
                let mut acc = BigInt::zero();
                for k in 0..s {
                    let a = self.get(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc += a * other.get(k, j);
                }
                out.push(acc);
            }
        }
        IntMatrix { dim: s, entries: out }
    }

    /// Entrywise sum.
    pub fn add(&self, other: &IntMatrix) -> Result<IntMatrix> {
        check_dims(self, other)?;
        Ok(self.add_unchecked(other))
    }

    fn add_unchecked(&self, other: &IntMatrix) -> IntMatrix {
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        IntMatrix { dim: self.dim, entries }
    }

    /// Multiplies every entry by `c`.
    pub fn scale(&self, c: &BigInt) -> IntMatrix {
        IntMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    /// `Xⁿ` by binary exponentiation; `X⁰ = I`.
    pub fn pow(&self, mut n: u64) -> IntMatrix {
        let mut result = IntMatrix::identity(self.dim);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        result
    }

    /// Kronecker product `self ⊗ other`: block `(i, j)` is `self[i][j] · other`.
    pub fn kronecker(&self, other: &IntMatrix) -> IntMatrix {
        let (a, b) = (self.dim, other.dim);
        IntMatrix::from_fn(a * b, |r, c| self.get(r / b, c / b) * other.get(r % b, c % b))
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    ///
    /// Every intermediate division is exact; a remainder panics since it can
    /// only come from a bug in the elimination.
    pub fn det(&self) -> BigInt {
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                match (k + 1..n).find(|&r| !a[r * n + k].is_zero()) {
                    Some(r) => {
                        for c in 0..n {
                            a.swap(k * n + c, r * n + c);
                        }
                        negate = !negate;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                    let (q, r) = num.div_rem(&prev);
                    assert!(r.is_zero(), "Bareiss division left a remainder");
                    a[i * n + j] = q;
                }
                a[i * n + k] = BigInt::zero();
            }
            prev = a[k * n + k].clone();
        }
        let d = a[n * n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    /// Column-stacking vec: entry `E[i][j]` lands at index `j·s + i`.
    pub fn vec(&self) -> IntVector {
        let s = self.dim;
        let mut entries = Vec::with_capacity(s * s);
        for j in 0..s {
            for i in 0..s {
                entries.push(self.get(i, j).clone());
            }
        }
        IntVector { entries }
    }

    /// Matrix–vector product.
    pub fn mul_vec(&self, v: &IntVector) -> Result<IntVector> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: v.len() });
        }
        let entries = self
            .rows()
            .map(|row| row.iter().zip(&v.entries).map(|(a, b)| a * b).sum())
            .collect();
        Ok(IntVector { entries })
    }

    /// Largest absolute entry.
    pub fn max_abs_entry(&self) -> BigInt {
        self.entries.iter().map(|e| e.abs()).max().unwrap_or_default()
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        self.get(i, j)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (r, row) in self.rows().enumerate() {
            if r > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (c, e) in row.iter().enumerate() {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl IntVector {
    /// Builds a vector; it must be nonempty.
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Empty);
        }
        Ok(IntVector { entries })
    }

    /// Number of entries.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Always false; vectors are nonempty.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries.
    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// Inverse of [`IntMatrix::vec`]; the length must be a perfect square.
    pub fn unvec(&self) -> Result<IntMatrix> {
        let len = self.entries.len();
        let s = len.sqrt();
        if s * s != len {
            return Err(Error::NotSquare { dim: s, len });
        }
        Ok(IntMatrix::from_fn(s, |i, j| self.entries[j * s + i].clone()))
    }
}

fn check_dims(a: &IntMatrix, b: &IntMatrix) -> Result<()> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch { left: a.dim, right: b.dim });
    }
    Ok(())
}

/// Exact matrix product; dimensions must agree.
pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix> {
    a.mul(b)
}

/// `Xⁿ`, with `X⁰ = I`.
pub fn mat_pow(x: &IntMatrix, n: u64) -> IntMatrix {
    x.pow(n)
}

/// Kronecker product `A ⊗ B`.
pub fn kronecker(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    a.kronecker(b)
}

/// Exact determinant by Bareiss elimination.
pub fn det_bareiss(a: &IntMatrix) -> BigInt {
    a.det()
}

/// The `s² × s²` Jacobian of `X ↦ Xⁿ` on column-stacked coordinates,
/// `Jₙ = Σₖ₌₀ⁿ⁻¹ (Xᵗ)ᵏ ⊗ Xⁿ⁻¹⁻ᵏ`.
pub fn jacobian_power_map(x: &IntMatrix, n: u64) -> Result<IntMatrix> {
    if n == 0 {
        return Err(Error::ZeroIndex);
    }
    let s = x.dim();
    let xt = x.transpose();
    // powers[k] = X^k for k < n
    let mut powers = Vec::with_capacity(n as usize);
    powers.push(IntMatrix::identity(s));
    for k in 1..n as usize {
        let next = powers[k - 1].mul_unchecked(x);
        powers.push(next);
    }
    let mut left = IntMatrix::identity(s);
    let mut acc = IntMatrix::zero(s * s);
    for k in 0..n as usize {
        acc = acc.add_unchecked(&left.kronecker(&powers[n as usize - 1 - k]));
        if k + 1 < n as usize {
            left = left.mul_unchecked(&xt);
        }
    }
    Ok(acc)
}

/// Derivative of `X ↦ Xⁿ` at `X` in direction `E`: `Σₖ Xᵏ E Xⁿ⁻¹⁻ᵏ`.
pub fn apply_power_derivative(x: &IntMatrix, e: &IntMatrix, n: u64) -> Result<IntMatrix> {
    check_dims(x, e)?;
    if n == 0 {
        return Err(Error::ZeroIndex);
    }
    let mut powers = Vec::with_capacity(n as usize);
    powers.push(IntMatrix::identity(x.dim()));
    for k in 1..n as usize {
        let next = powers[k - 1].mul_unchecked(x);
        powers.push(next);
    }
    let mut acc = IntMatrix::zero(x.dim());
    for k in 0..n as usize {
        let term = powers[k].mul_unchecked(e).mul_unchecked(&powers[n as usize - 1 - k]);
        acc = acc.add_unchecked(&term);
    }
    Ok(acc)
}
