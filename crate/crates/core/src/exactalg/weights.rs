use crate::error::{Error, Result};
use crate::exactalg::poly::weighted;
use crate::exactalg::MPoly;
use crate::scalar::Scalar;

/// Positive per-variable weights defining a filtration degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeWeights(Vec<u32>);

impl DegreeWeights {
    pub fn new(weights: Vec<u32>) -> Result<Self> {
        if weights.iter().any(|&w| w == 0) {
            return Err(Error::OutOfRegime("degree weights must be positive".into()));
        }
        Ok(DegreeWeights(weights))
    }

    pub fn uniform(arity: usize) -> Self {
        DegreeWeights(vec![1; arity])
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Sum of the terms of maximal weighted degree.
pub fn leading_form<T: Scalar>(p: &MPoly<T>, w: &DegreeWeights) -> Result<MPoly<T>> {
    if w.len() != p.arity() {
        return Err(Error::ArityMismatch { expected: p.arity(), found: w.len() });
    }
    let top = p.weighted_degree(w.as_slice()).ok_or(Error::ZeroPolynomial)?;
    Ok(p.filter_terms(|e| weighted(e, w.as_slice()) == top))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, Poly};

    #[test]
    fn linear_leading_form() {
        let x = Poly::var(1, 0);
        let p = &x + &Poly::one(1);
        assert_eq!(leading_form(&p, &DegreeWeights::uniform(1)).unwrap(), x);
    }

    #[test]
    fn zero_rejected() {
        assert_eq!(leading_form(&Poly::zero(1), &DegreeWeights::uniform(1)), Err(Error::ZeroPolynomial));
        assert!(DegreeWeights::new(vec![1, 0]).is_err());
    }

    #[test]
    fn weight_length_checked() {
        let p = Poly::constant(2, q(1));
        assert!(leading_form(&p, &DegreeWeights::uniform(3)).is_err());
    }
}
