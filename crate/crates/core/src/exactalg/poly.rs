use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{Domain, Scalar};

/// Dense exponent vector; its length is the arity of the owning polynomial.
pub type Exponent = Vec<u32>;

/// Sparse multivariate polynomial over `T` with a fixed number of variables.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality. Terms are kept in lexicographic exponent order (variable 0 most
/// significant); serialization and display use graded-lex instead.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MPoly<T> {
    arity: usize,
    terms: BTreeMap<Exponent, T>,
}

/// Graded-lexicographic comparison with variable 0 most significant.
pub fn grlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

/// Graded comparison where ties are broken lexicographically in the given
/// variable priority (first entry most significant).
pub fn graded_cmp_by(a: &[u32], b: &[u32], priority: &[usize]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        priority
            .iter()
            .map(|&i| a[i].cmp(&b[i]))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    })
}

impl<T: Scalar> MPoly<T> {
    pub fn zero(arity: usize) -> Self {
        MPoly { arity, terms: BTreeMap::new() }
    }

    pub fn constant(arity: usize, c: T) -> Self {
        Self::monomial(vec![0; arity], c)
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, T::one())
    }

    /// The polynomial `x_index`.
    pub fn var(arity: usize, index: usize) -> Self {
        assert!(index < arity, "variable {index} out of range for arity {arity}");
        let mut exp = vec![0; arity];
        exp[index] = 1;
        Self::monomial(exp, T::one())
    }

    pub fn monomial(exp: Exponent, c: T) -> Self {
        let arity = exp.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        MPoly { arity, terms }
    }

    /// Builds a polynomial from (exponent, coefficient) pairs, summing repeats.
    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Exponent, T)>) -> Result<Self> {
        let mut p = Self::zero(arity);
        for (exp, c) in terms {
            if exp.len() != arity {
                return Err(Error::ArityMismatch { expected: arity, found: exp.len() });
            }
            p.add_term(exp, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, exp: Exponent, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &T)> {
        self.terms.iter()
    }

    /// Terms sorted graded-lexicographically, highest first.
    pub fn terms_grlex_desc(&self) -> Vec<(&Exponent, &T)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| grlex_cmp(b.0, a.0));
        v
    }

    pub fn coeff(&self, exp: &[u32]) -> T {
        self.terms.get(exp).cloned().unwrap_or_else(T::zero)
    }

    pub fn constant_term(&self) -> T {
        self.coeff(&vec![0; self.arity])
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Degree in one variable; zero for the zero polynomial.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    /// Degree with respect to positive integer variable weights.
    pub fn weighted_degree(&self, weights: &[u32]) -> Option<u64> {
        self.terms.keys().map(|e| weighted(e, weights)).max()
    }

    fn check_arity(&self, other: &Self) {
        assert_eq!(self.arity, other.arity, "polynomial arity mismatch");
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        MPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v.clone() * c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.arity);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.arity_ok(other)?;
        Ok(self + other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.arity_ok(other)?;
        Ok(self * other)
    }

    fn arity_ok(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: other.arity });
        }
        Ok(())
    }

    /// Exact value at a point.
    pub fn evaluate(&self, point: &[T]) -> Result<T> {
        if point.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: point.len() });
        }
        let mut acc = T::zero();
        for (exp, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(exp) {
                for _ in 0..e {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Replaces variable `i` by `images[i]`; all images share the target arity.
    pub fn substitute(&self, images: &[MPoly<T>]) -> Result<MPoly<T>> {
        if images.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: images.len() });
        }
        let target = match images.first() {
            Some(p) => p.arity,
            None => 0,
        };
        if let Some(bad) = images.iter().find(|p| p.arity != target) {
            return Err(Error::ArityMismatch { expected: target, found: bad.arity });
        }
        // Cache powers per variable; degrees here are small.
        let mut powers: Vec<Vec<MPoly<T>>> = images.iter().map(|p| vec![MPoly::one(target), p.clone()]).collect();
        let mut out = MPoly::zero(target);
        for (exp, c) in &self.terms {
            let mut t = MPoly::constant(target, c.clone());
            for (i, &e) in exp.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Coefficients of `self` viewed as a univariate polynomial in `var`,
    /// indexed by power. Each coefficient keeps the full arity with `var` absent.
    pub fn coefficients_in(&self, var: usize) -> Vec<MPoly<T>> {
        let deg = self.degree_in(var) as usize;
        let mut out = vec![MPoly::zero(self.arity); deg + 1];
        for (exp, c) in &self.terms {
            let k = exp[var] as usize;
            let mut e = exp.clone();
            e[var] = 0;
            out[k].add_term(e, c.clone());
        }
        out
    }

    /// Removes a variable the polynomial does not depend on.
    pub fn drop_var(&self, var: usize) -> Result<MPoly<T>> {
        if self.degree_in(var) > 0 {
            return Err(Error::OutOfRegime(format!("polynomial still depends on variable {var}")));
        }
        let terms = self.terms.iter().map(|(e, c)| {
            let mut e = e.clone();
            e.remove(var);
            (e, c.clone())
        });
        MPoly::from_terms(self.arity - 1, terms)
    }

    /// Re-embeds into a ring of `arity` variables, sending variable `i` to `positions[i]`.
    pub fn embed(&self, arity: usize, positions: &[usize]) -> Result<MPoly<T>> {
        if positions.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: positions.len() });
        }
        let terms = self.terms.iter().map(|(e, c)| {
            let mut ne = vec![0; arity];
            for (i, &p) in positions.iter().enumerate() {
                ne[p] += e[i];
            }
            (ne, c.clone())
        });
        MPoly::from_terms(arity, terms)
    }

    pub fn derivative(&self, var: usize) -> MPoly<T> {
        let mut out = MPoly::zero(self.arity);
        for (exp, c) in &self.terms {
            if exp[var] == 0 {
                continue;
            }
            let mut e = exp.clone();
            let mut k = T::zero();
            for _ in 0..e[var] {
                k = k + T::one();
            }
            e[var] -= 1;
            out.add_term(e, c.clone() * k);
        }
        out
    }

    pub fn map_coeffs<U: Scalar>(&self, mut f: impl FnMut(&T) -> U) -> MPoly<U> {
        let mut out = MPoly::zero(self.arity);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Keeps only the terms selected by `keep`.
    pub fn filter_terms(&self, mut keep: impl FnMut(&Exponent) -> bool) -> MPoly<T> {
        MPoly {
            arity: self.arity,
            terms: self.terms.iter().filter(|(e, _)| keep(e)).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    /// Leading term under lex order.
    fn lex_leading(&self) -> Option<(&Exponent, &T)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a remainder.
    ///
    /// Uses lex-order multivariate division; assumes field-like coefficient division.
    pub fn div_exact(&self, divisor: &MPoly<T>) -> Option<MPoly<T>> {
        self.check_arity(divisor);
        let (dexp, dc) = divisor.lex_leading()?;
        let (dexp, dc) = (dexp.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = MPoly::zero(self.arity);
        while let Some((rexp, rc)) = rem.lex_leading() {
            if rexp.iter().zip(&dexp).any(|(r, d)| r < d) {
                return None;
            }
            let texp: Exponent = rexp.iter().zip(&dexp).map(|(r, d)| r - d).collect();
            let lead = rexp.clone();
            let t = MPoly::monomial(texp, rc.clone() / dc.clone());
            rem = &rem - &(&t * divisor);
            if rem.terms.contains_key(&lead) {
                return None;
            }
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Formats with the given variable names.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> DisplayPoly<'a, T> {
        DisplayPoly { poly: self, names }
    }
}

pub(crate) fn weighted(exp: &[u32], weights: &[u32]) -> u64 {
    exp.iter().zip(weights).map(|(&e, &w)| e as u64 * w as u64).sum()
}

impl<T: Scalar> Add for &MPoly<T> {
    type Output = MPoly<T>;
    fn add(self, rhs: &MPoly<T>) -> MPoly<T> {
        self.check_arity(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<T: Scalar> Sub for &MPoly<T> {
    type Output = MPoly<T>;
    fn sub(self, rhs: &MPoly<T>) -> MPoly<T> {
        self.check_arity(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<T: Scalar> Mul for &MPoly<T> {
    type Output = MPoly<T>;
    fn mul(self, rhs: &MPoly<T>) -> MPoly<T> {
        self.check_arity(rhs);
        let mut out = MPoly::zero(self.arity);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Exponent = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<T: Scalar> Neg for &MPoly<T> {
    type Output = MPoly<T>;
    fn neg(self) -> MPoly<T> {
        MPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for MPoly<T> {
            type Output = MPoly<T>;
            fn $m(self, rhs: MPoly<T>) -> MPoly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<T: Scalar> Neg for MPoly<T> {
    type Output = MPoly<T>;
    fn neg(self) -> MPoly<T> {
        -&self
    }
}

impl<T: Scalar> Domain for MPoly<T> {
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn zero_like(&self) -> Self {
        MPoly::zero(self.arity)
    }
    fn one_like(&self) -> Self {
        MPoly::one(self.arity)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        MPoly::div_exact(self, divisor)
    }
}

pub struct DisplayPoly<'a, T> {
    poly: &'a MPoly<T>,
    names: &'a [String],
}

impl<T> fmt::Display for DisplayPoly<'_, T>
where
    T: Scalar + fmt::Display + PartialOrd,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.poly.terms_grlex_desc();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (exp, c)) in terms.into_iter().enumerate() {
            let negative = *c < T::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let vars: Vec<String> = exp
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| {
                    let name = self.names.get(v).cloned().unwrap_or_else(|| format!("x{v}"));
                    if e == 1 {
                        name
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, Poly};

    fn xy() -> (Poly, Poly) {
        (Poly::var(2, 0), Poly::var(2, 1))
    }

    #[test]
    fn evaluate_simple() {
        let (x, y) = xy();
        let p = &(&x * &y) + &Poly::one(2);
        assert_eq!(p.evaluate(&[q(2), q(3)]).unwrap(), q(7));
    }

    #[test]
    fn substitute_identity_case() {
        let (x, y) = xy();
        let p = &x - &y;
        assert!(p.substitute(&[y.clone(), y.clone()]).unwrap().is_zero());
    }

    #[test]
    fn casimir_at_three() {
        let l = Poly::var(1, 0);
        let c2 = &l * &(&l + &Poly::constant(1, q(2)));
        assert_eq!(c2.evaluate(&[q(3)]).unwrap(), q(15));
    }

    #[test]
    fn arity_errors() {
        let (x, _) = xy();
        assert_eq!(x.evaluate(&[q(1)]), Err(Error::ArityMismatch { expected: 2, found: 1 }));
        assert!(x.checked_add(&Poly::var(3, 0)).is_err());
        assert!(x.substitute(&[Poly::var(1, 0), Poly::var(2, 0)]).is_err());
    }

    #[test]
    fn zero_coefficients_not_stored() {
        let (x, _) = xy();
        let p = &x - &x;
        assert!(p.is_zero());
        assert_eq!(p, Poly::zero(2));
    }

    #[test]
    fn exact_division() {
        let (x, y) = xy();
        let a = &(&x + &y) * &(&x - &y);
        assert_eq!(a.div_exact(&(&x - &y)).unwrap(), &x + &y);
        assert!(a.div_exact(&(&x + &Poly::one(2))).is_none());
    }

    #[test]
    fn display_grlex() {
        let (x, y) = xy();
        let p = &(&(&x * &x) - &(&x * &y).scale(&q(2))) - &Poly::constant(2, q(3));
        let names = vec!["C2".to_string(), "M1".to_string()];
        assert_eq!(p.display_with(&names).to_string(), "C2^2 - 2*C2*M1 - 3");
    }

    #[test]
    fn float_instantiation() {
        let x = MPoly::<f64>::var(1, 0);
        let p = &(&x * &x) + &MPoly::constant(1, 2.0);
        assert_eq!(p.evaluate(&[1.5]).unwrap(), 4.25);
    }
}
