//! Parallel sequence generation.
//!
//! Indices are evaluated independently on the rayon pool and collected in
//! ascending order, so output never depends on scheduling.

use matdivseq_core::{Column, Factorization, Factorizer, Result, SequenceContext, SequenceEntry};
use num_traits::Signed;
use rayon::prelude::*;

/// Entries `1 ..= n_max`. With `factor_column` set, each entry gets the
/// factorization of the absolute value in that column.
pub fn generate(ctx: &SequenceContext, n_max: u64, factor_column: Option<Column>) -> Result<Vec<SequenceEntry>> {
    let factorizer = factor_column.map(|_| Factorizer::default());
    (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let mut e = ctx.d_closed(n)?;
            if let (Some(fz), Some(col)) = (&factorizer, factor_column) {
                e.factorization = e.value(col).map(|v| fz.factorize(&v.abs()));
            }
            Ok(e)
        })
        .collect()
}

/// Factorization attached to an entry, if any.
pub fn factorization(e: &SequenceEntry) -> Option<&Factorization> {
    e.factorization.as_ref()
}

#[cfg(test)]
mod tests {
    use super::*;
    use matdivseq_core::IntMatrix;

    #[test]
    fn matches_sequential() {
        let x = IntMatrix::from_rows([[1, -2, -6], [0, 1, 3], [-1, 0, 1]]).unwrap();
        let ctx = SequenceContext::new(x);
        let par = generate(&ctx, 12, Some(Column::Reduced)).unwrap();
        let seq = ctx.generate(12, true).unwrap();
        assert_eq!(par, seq);
    }

    #[test]
    fn jacobian_column_factorization() {
        let ctx = SequenceContext::new(IntMatrix::from_rows([[1, 1], [1, 0]]).unwrap());
        let rows = generate(&ctx, 3, Some(Column::Jacobian)).unwrap();
        let f: Vec<String> = rows.iter().map(|e| e.factorization.as_ref().unwrap().to_string()).collect();
        assert_eq!(f, ["1", "2^2", "2^2 3^2"]);
    }
}
