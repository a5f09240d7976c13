use crate::error::{Error, Result};
use crate::exactalg::{Matrix, MPoly};
use crate::scalar::Scalar;

/// Sylvester resultant of `p` and `q` with respect to `var`.
///
/// The result keeps the input arity and no longer involves `var`. Its
/// vanishing at a point of the remaining variables means a common root in
/// `var`, provided the leading coefficients do not both vanish there
/// (see [`leading_coefficients`]).
pub fn resultant<T: Scalar>(p: &MPoly<T>, q: &MPoly<T>, var: usize) -> Result<MPoly<T>> {
    if p.arity() != q.arity() {
        return Err(Error::ArityMismatch { expected: p.arity(), found: q.arity() });
    }
    if var >= p.arity() {
        return Err(Error::OutOfRegime(format!("variable {var} out of range")));
    }
    let m = p.degree_in(var) as usize;
    let n = q.degree_in(var) as usize;
    if m == 0 && n == 0 {
        return Err(Error::ConstantInVariable(var));
    }
    if p.is_zero() || q.is_zero() {
        return Ok(MPoly::zero(p.arity()));
    }
    if m == 0 {
        return Ok(p.pow(n as u32));
    }
    if n == 0 {
        return Ok(q.pow(m as u32));
    }
    let sylvester = sylvester_matrix(p, q, var);
    Ok(sylvester.det_bareiss())
}

/// The `(m+n)×(m+n)` Sylvester matrix, coefficients in decreasing degree.
pub fn sylvester_matrix<T: Scalar>(p: &MPoly<T>, q: &MPoly<T>, var: usize) -> Matrix<MPoly<T>> {
    let pc = p.coefficients_in(var);
    let qc = q.coefficients_in(var);
    let (m, n) = (pc.len() - 1, qc.len() - 1);
    let size = m + n;
    let zero = MPoly::zero(p.arity());
    Matrix::from_fn(size, size, |r, c| {
        if r < n {
            // row r holds p shifted right by r
            c.checked_sub(r).filter(|&k| k <= m).map(|k| pc[m - k].clone()).unwrap_or_else(|| zero.clone())
        } else {
            let s = r - n;
            c.checked_sub(s).filter(|&k| k <= n).map(|k| qc[n - k].clone()).unwrap_or_else(|| zero.clone())
        }
    })
}

/// Leading coefficients of `p` and `q` in `var`; a specialization where both
/// vanish is the degenerate case in which the resultant says nothing.
pub fn leading_coefficients<T: Scalar>(p: &MPoly<T>, q: &MPoly<T>, var: usize) -> (MPoly<T>, MPoly<T>) {
    let pc = p.coefficients_in(var);
    let qc = q.coefficients_in(var);
    (pc[pc.len() - 1].clone(), qc[qc.len() - 1].clone())
}
