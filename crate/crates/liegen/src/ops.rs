use matcore::{re, ComplexMatrix};

use crate::LieError;

/// Swap operator on `d ⊗ d`: `P(e_i ⊗ e_j) = e_j ⊗ e_i`.
pub fn permutation_op(d: usize) -> ComplexMatrix {
    assert!(d >= 2, "permutation needs d >= 2");
    ComplexMatrix::from_fn(d * d, |row, col| {
        let (i, j) = (col / d, col % d);
        if row == j * d + i {
            re(1.0)
        } else {
            re(0.0)
        }
    })
}

/// Jimbo's signed labels for the n-dimensional vector module, doubled so that
/// they are integers: n = 5 gives (−4, −2, 0, 2, 4), n = 6 gives
/// (−5, −3, −1, 1, 3, 5). Index `k` and index `n − 1 − k` carry opposite labels.
pub fn jimbo_labels(n: usize) -> Result<Vec<i32>, LieError> {
    match n {
        5 | 6 => Ok((0..n as i32).map(|k| 2 * k - (n as i32 - 1)).collect()),
        _ => Err(LieError::UnsupportedN(n)),
    }
}

/// `<ab|A|cd> = δ_{a,−b} δ_{c,−d}` on `n ⊗ n` in Jimbo labels.
pub fn a_n_op(n: usize) -> Result<ComplexMatrix, LieError> {
    let lab = jimbo_labels(n)?;
    Ok(ComplexMatrix::from_fn(n * n, |row, col| {
        let (a, b) = (row / n, row % n);
        let (cc, d) = (col / n, col % n);
        if lab[a] == -lab[b] && lab[cc] == -lab[d] {
            re(1.0)
        } else {
            re(0.0)
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p_squares_to_identity() {
        for d in 2..5 {
            let p = permutation_op(d);
            assert_eq!(p.matmul(&p), ComplexMatrix::identity(d * d));
        }
    }

    #[test]
    fn labels() {
        assert_eq!(jimbo_labels(5).unwrap(), vec![-4, -2, 0, 2, 4]);
        assert_eq!(jimbo_labels(6).unwrap(), vec![-5, -3, -1, 1, 3, 5]);
        assert!(a_n_op(7).is_err());
    }
}
