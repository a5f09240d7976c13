//! Sampled ideal membership on component parametrizations, and relation
//! discovery by interpolation.

use crate::error::{Error, Result};
use crate::exactalg::{normalize, Matrix};
use crate::hccenter::InvariantBasis;
use crate::kostant::CenterComponent;
use crate::liecore::Weight;
use crate::sampling::Sampler;
use crate::{Poly, QMatrix, Rational};

/// A sampled point where a candidate relation fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub component: usize,
    pub lambda: Weight,
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipReport {
    pub passed: bool,
    pub points_checked: usize,
    pub witness: Option<Witness>,
}

fn check_arity(basis: &InvariantBasis, q: &Poly) -> Result<()> {
    let expected = 2 * basis.generators().len();
    if q.arity() != expected {
        return Err(Error::ArityMismatch { expected, found: q.arity() });
    }
    Ok(())
}

/// Evaluates `q` (x-block then y-block) at `samples` seeded λ on each
/// component, stopping at the first nonzero value.
pub fn membership_test(
    basis: &InvariantBasis,
    components: &[CenterComponent],
    q: &Poly,
    samples: usize,
    seed: u64,
) -> Result<MembershipReport> {
    check_arity(basis, q)?;
    let mut sampler = Sampler::new(seed);
    let mut points_checked = 0;
    for (idx, comp) in components.iter().enumerate() {
        for _ in 0..samples {
            let lambda = sampler.weight(basis.rank());
            let value = q.evaluate(&comp.flat_point(basis, &lambda))?;
            points_checked += 1;
            if value != Rational::from_integer(0.into()) {
                let witness = Some(Witness { component: idx, lambda, value });
                return Ok(MembershipReport { passed: false, points_checked, witness });
            }
        }
    }
    Ok(MembershipReport { passed: true, points_checked, witness: None })
}

/// Monomials in `x_i` and `d_i = y_i − x_i` of weighted degree at most
/// `max_weight`, where `x_i` has weight `degrees[i]` and `d_i` weight
/// `degrees[i] − 1`. Returned as polynomials in `(x, y)`.
pub fn difference_monomials(degrees: &[u32], max_weight: u32) -> Vec<Poly> {
    let n = degrees.len();
    let arity = 2 * n;
    let weights: Vec<u32> = degrees.iter().copied().chain(degrees.iter().map(|d| d.saturating_sub(1).max(1))).collect();
    let factors: Vec<Poly> = (0..n)
        .map(|i| Poly::var(arity, i))
        .chain((0..n).map(|i| &Poly::var(arity, n + i) - &Poly::var(arity, i)))
        .collect();
    let mut exps: Vec<Vec<u32>> = vec![vec![]];
    for &w in &weights {
        exps = exps
            .into_iter()
            .flat_map(|e| {
                let used: u32 = e.iter().zip(&weights).map(|(a, b)| a * b).sum();
                (0..=(max_weight - used) / w).map(move |k| {
                    let mut next = e.clone();
                    next.push(k);
                    next
                })
            })
            .collect();
    }
    exps.sort_by(|a, b| crate::exactalg::poly::grlex_cmp(a, b));
    exps.iter()
        .map(|e| e.iter().zip(&factors).fold(Poly::one(arity), |acc, (&k, f)| &acc * &f.pow(k)))
        .collect()
}

/// Linear combinations of `monomials` vanishing at `samples` seeded points
/// of `component`, each normalized. Candidates only: the caller re-tests
/// them on fresh points.
pub fn interpolate_relations(
    basis: &InvariantBasis,
    component: &CenterComponent,
    monomials: &[Poly],
    samples: usize,
    seed: u64,
) -> Result<Vec<Poly>> {
    if let Some(m) = monomials.first() {
        check_arity(basis, m)?;
    }
    let mut sampler = Sampler::new(seed);
    let rows: Vec<Vec<Rational>> = (0..samples)
        .map(|_| {
            let point = component.flat_point(basis, &sampler.weight(basis.rank()));
            monomials.iter().map(|m| m.evaluate(&point)).collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let system: QMatrix = Matrix::from_rows(rows);
    Ok(system
        .nullspace()
        .into_iter()
        .map(|v| {
            let arity = monomials[0].arity();
            let rel = v.iter().zip(monomials).fold(Poly::zero(arity), |acc, (c, m)| &acc + &m.scale(c));
            normalize(&rel)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kostant::{center_components, center_ideal_rank1};
    use crate::liecore::Bounds;

    fn setup(name: &str, mu: &[i64]) -> (InvariantBasis, Vec<CenterComponent>) {
        let b = InvariantBasis::new(&name.parse().unwrap(), &Bounds::default()).unwrap();
        let c = center_components(&b, &Weight::from_ints(mu), &Bounds::default()).unwrap();
        (b, c)
    }

    #[test]
    fn rank1_product_and_counterexample() {
        let (b, c) = setup("A1", &[5]);
        let prod = center_ideal_rank1(5).product();
        assert!(membership_test(&b, &c, &prod, 20, 1).unwrap().passed);
        let bad = &Poly::var(2, 0) - &Poly::var(2, 1);
        let r = membership_test(&b, &c, &bad, 20, 1).unwrap();
        assert!(!r.passed);
        assert!(r.witness.is_some());
        assert!(matches!(membership_test(&b, &c, &Poly::var(3, 0), 1, 1), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn monomial_count() {
        assert_eq!(difference_monomials(&[2], 2).len(), 4);
        let a2 = difference_monomials(&[2, 3], 6);
        assert!(a2.len() < 50);
        assert!(a2.iter().all(|m| m.arity() == 4));
    }

    #[test]
    fn a1_interpolation_recovers_conic() {
        let (b, c) = setup("A1", &[3]);
        let monos = difference_monomials(&[2], 4);
        for comp in &c {
            let rels = interpolate_relations(&b, comp, &monos, 30, 5).unwrap();
            assert!(!rels.is_empty());
            let m = comp.orbit_rep.to_ints().unwrap()[0] as u32;
            let conic = crate::kostant::rank1::tilde_factor(m);
            let lowest = rels.iter().min_by_key(|r| r.total_degree()).unwrap();
            assert_eq!(crate::exactalg::normalize(lowest), crate::exactalg::normalize(&conic));
        }
    }

    #[test]
    fn a2_adjoint_relations() {
        let (b, c) = setup("A2", &[1, 1]);
        let monos = difference_monomials(b.degrees(), 6);
        for comp in &c {
            let rels = interpolate_relations(&b, comp, &monos, 50, 100).unwrap();
            assert!(!rels.is_empty());
            for r in &rels {
                let report = membership_test(&b, std::slice::from_ref(comp), r, 50, 200).unwrap();
                assert!(report.passed, "{r:?}");
            }
            eprintln!("rep {} -> {} relations, {} monomials", comp.orbit_rep, rels.len(), monos.len());
        }
    }
}
