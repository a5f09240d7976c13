use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactalg::poly::graded_cmp_by;
use crate::{Poly, Rational};

/// Scales `p` to integer coefficients with gcd 1 and a positive leading
/// coefficient, the leading term being taken in the graded order whose ties
/// are broken by `priority` (first variable most significant).
pub fn primitive_normalized(p: &Poly, priority: &[usize]) -> Poly {
    if p.is_zero() {
        return p.clone();
    }
    let lcm_den = p.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let gcd_num = p.terms().fold(BigInt::zero(), |acc, (_, c)| {
        let n = (c * Rational::from_integer(lcm_den.clone())).to_integer();
        acc.gcd(&n)
    });
    let lead = p
        .terms()
        .max_by(|a, b| graded_cmp_by(a.0, b.0, priority))
        .map(|(_, c)| c.clone())
        .expect("nonzero polynomial");
    let mut factor = Rational::new(lcm_den, gcd_num);
    if lead.is_negative() {
        factor = -factor;
    }
    p.scale(&factor)
}

/// Default normalization: graded order with variable 0 most significant.
pub fn normalize(p: &Poly) -> Poly {
    let priority: Vec<usize> = (0..p.arity()).collect();
    primitive_normalized(p, &priority)
}

/// Content-free representative comparison: equal up to a nonzero rational scalar.
pub fn equal_up_to_scalar(a: &Poly, b: &Poly) -> bool {
    normalize(a) == normalize(b)
}

/// Sorts polynomials deterministically (graded-lex on their term lists) for set comparison.
pub fn sort_factors(factors: &mut [Poly]) {
    factors.sort_by(|a, b| cmp_polys(a, b));
}

fn cmp_polys(a: &Poly, b: &Poly) -> Ordering {
    let ta = a.terms_grlex_desc();
    let tb = b.terms_grlex_desc();
    for (x, y) in ta.iter().zip(&tb) {
        let o = crate::exactalg::poly::grlex_cmp(x.0, y.0).then_with(|| x.1.cmp(y.1));
        if o.is_ne() {
            return o;
        }
    }
    ta.len().cmp(&tb.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, qf};

    #[test]
    fn clears_denominators_and_content() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let p = &x.scale(&qf(-2, 3)) + &y.scale(&qf(4, 9));
        let n = normalize(&p);
        assert_eq!(n, &x.scale(&q(3)) - &y.scale(&q(2)));
    }

    #[test]
    fn priority_changes_sign_choice() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let p = &y - &x;
        assert_eq!(primitive_normalized(&p, &[0, 1]), &x - &y);
        assert_eq!(primitive_normalized(&p, &[1, 0]), &y - &x);
    }
}
