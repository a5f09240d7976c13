use crate::error::Result;
use crate::exactalg::Matrix;
use crate::kostant::center_ideal_rank1;
use crate::{q, QMatrix, Rational};

/// `δ(C₂)` on the weight `λ + k − 2t` space of `M_λ ⊗ V^{kϖ₁}`, in the basis
/// `f^a v_λ ⊗ w_b` with `a + b = t`, ordered by `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightBlockMatrix {
    pub lambda: Rational,
    pub k: u32,
    pub depth: u32,
    pub basis: Vec<(u32, u32)>,
    pub matrix: QMatrix,
}

impl WeightBlockMatrix {
    pub fn weight(&self) -> Rational {
        &self.lambda + q(i64::from(self.k) - 2 * i64::from(self.depth))
    }

    /// `(λ+k−2j)(λ+k−2j+2)` for `0 ≤ j ≤ min(t, k)`.
    pub fn predicted_eigenvalues(&self) -> Vec<Rational> {
        (0..=self.depth.min(self.k))
            .map(|j| {
                let s = &self.lambda + q(i64::from(self.k) - 2 * i64::from(j));
                &s * (&s + q(2))
            })
            .collect()
    }
}

/// `C₂ = h² + 2h + 4fe` acting diagonally. On the Verma side `e v_a =
/// a(λ−a+1) v_{a−1}`, `f v_a = v_{a+1}`; on `V^k` likewise with `λ = k` and
/// `f w_k = 0`.
pub fn casimir_block_matrix(lambda: &Rational, k: u32, t: u32) -> WeightBlockMatrix {
    let basis: Vec<(u32, u32)> = (0..=t.min(k)).map(|b| (t - b, b)).collect();
    let index = |b: u32| b as usize;
    let n = basis.len();
    let kq = q(i64::from(k));
    let mut fe = vec![vec![Rational::from_integer(0.into()); n]; n];
    for (col, &(a, b)) in basis.iter().enumerate() {
        // e, landing at depth t − 1
        let mut lowered: Vec<((u32, u32), Rational)> = Vec::new();
        if a > 0 {
            let aq = q(i64::from(a));
            lowered.push(((a - 1, b), &aq * (lambda - &aq + q(1))));
        }
        if b > 0 {
            let bq = q(i64::from(b));
            lowered.push(((a, b - 1), &bq * (&kq - &bq + q(1))));
        }
        for ((_, b2), c) in lowered {
            fe[index(b2)][col] += &c;
            if b2 < k {
                fe[index(b2 + 1)][col] += &c;
            }
        }
    }
    let nu = lambda + q(i64::from(k) - 2 * i64::from(t));
    let diag = &nu * (&nu + q(2));
    let matrix = Matrix::from_fn(n, n, |r, c| {
        let mut v = &fe[r][c] * q(4);
        if r == c {
            v += &diag;
        }
        v
    });
    WeightBlockMatrix { lambda: lambda.clone(), k, depth: t, basis, matrix }
}

/// Substitutes `C₂ = χ_λ · Id` and `M̃₁ = δ(C₂)` into the product of the
/// tilde factors on every weight space down to `depth_max`; true iff all
/// results vanish.
pub fn operator_relation_check(lambda: &Rational, k: u32, depth_max: u32) -> Result<bool> {
    let relation = center_ideal_rank1(k).product();
    let chi = lambda * (lambda + q(2));
    for t in 0..=depth_max {
        let block = casimir_block_matrix(lambda, k, t);
        let n = block.matrix.rows();
        let value = Matrix::eval_poly(&relation, &[Matrix::scalar(n, chi.clone()), block.matrix]);
        if !value.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qf;

    #[test]
    fn highest_line() {
        let m = casimir_block_matrix(&qf(1, 3), 3, 0);
        assert_eq!(m.matrix, Matrix::from_rows(vec![vec![qf(160, 9)]]));
    }

    #[test]
    fn trace_matches_eigenvalues() {
        for t in 0..6 {
            let m = casimir_block_matrix(&qf(1, 3), 3, t);
            assert_eq!(m.matrix.rows(), t.min(3) as usize + 1);
            let sum = m.predicted_eigenvalues().into_iter().fold(q(0), |a, b| a + b);
            assert_eq!(m.matrix.trace(), sum);
        }
    }

    #[test]
    fn relation_holds_at_special_lambda() {
        assert!(operator_relation_check(&qf(1, 3), 5, 8).unwrap());
        assert!(operator_relation_check(&q(2), 5, 8).unwrap());
        assert!(operator_relation_check(&q(-1), 0, 3).unwrap());
    }

    #[test]
    fn wrong_relation_fails() {
        // dropping a factor breaks the identity below the top weight
        let p = center_ideal_rank1(3);
        let partial = p.factors[0].clone();
        let block = casimir_block_matrix(&qf(1, 3), 3, 3);
        let n = block.matrix.rows();
        let chi = qf(1, 3) * (qf(1, 3) + q(2));
        assert!(!Matrix::eval_poly(&partial, &[Matrix::scalar(n, chi), block.matrix]).is_zero());
    }

}
