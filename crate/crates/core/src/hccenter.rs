//! The Harish-Chandra picture `Spec Z(g) ≅ h*//W•`: dot-invariant
//! generators, infinitesimal characters as points, and linkage tests.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::json::{rational_from_str, rational_to_string};
use crate::exactalg::{normalize, Matrix};
use crate::liecore::{dot_orbit, weyl_group, Bounds, RootSystem, Series, Weight, WeylElement};
use crate::sampling::Sampler;
use crate::{q, Poly, QMatrix, Rational};

/// Value of each invariant generator at a representative of one dot-orbit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharacterPoint(pub Vec<Rational>);

impl CharacterPoint {
    pub fn values(&self) -> &[Rational] {
        &self.0
    }
}

impl Serialize for CharacterPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.iter().map(rational_to_string).collect::<Vec<_>>().serialize(s)
    }
}

impl<'de> Deserialize<'de> for CharacterPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        v.iter()
            .map(|s| rational_from_str(s))
            .collect::<Result<Vec<_>>>()
            .map(CharacterPoint)
            .map_err(serde::de::Error::custom)
    }
}

/// Generators of `S(h)^{W•}` as polynomials in the fundamental-weight
/// coordinates of `λ`.
///
/// A1 uses the Casimir normalization `C₂ = λ(λ+2)`. Other types use
/// W-averages of powers of linear forms in `λ + ρ`, one per fundamental
/// degree, accepted greedily while the Jacobian rank grows. Algebraically
/// independent homogeneous invariants whose degrees multiply to `|W|` form a
/// basic set, so these generate.
#[derive(Clone, Debug)]
pub struct InvariantBasis {
    rs: RootSystem,
    group: Vec<WeylElement>,
    generators: Vec<Poly>,
    degrees: Vec<u32>,
}

impl InvariantBasis {
    pub fn new(rs: &RootSystem, bounds: &Bounds) -> Result<Self> {
        let group = weyl_group(rs, bounds)?;
        let (generators, degrees) = if rs.series() == Series::A && rs.rank() == 1 {
            let l = Poly::var(1, 0);
            (vec![&l * &(&l + &Poly::constant(1, q(2)))], vec![2])
        } else {
            symmetrized_generators(rs, &group)?
        };
        Ok(InvariantBasis { rs: rs.clone(), group, generators, degrees })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn group(&self) -> &[WeylElement] {
        &self.group
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// `χ_λ` as the vector of generator values.
    pub fn character_point(&self, lambda: &Weight) -> CharacterPoint {
        CharacterPoint(
            self.generators
                .iter()
                .map(|g| g.evaluate(lambda.coords()).expect("generator arity equals rank"))
                .collect(),
        )
    }

    /// Whether `ψ ∈ W•λ`, by orbit enumeration.
    pub fn same_character(&self, lambda: &Weight, psi: &Weight) -> bool {
        dot_orbit(&self.rs, &self.group, lambda).binary_search(psi).is_ok()
    }
}

pub fn invariant_generators(rs: &RootSystem, bounds: &Bounds) -> Result<InvariantBasis> {
    InvariantBasis::new(rs, bounds)
}

fn symmetrized_generators(rs: &RootSystem, group: &[WeylElement]) -> Result<(Vec<Poly>, Vec<u32>)> {
    let n = rs.rank();
    let shifted: Vec<Poly> = (0..n).map(|i| &Poly::var(n, i) + &Poly::one(n)).collect();
    let mut probe = Sampler::new(0x5eed);
    let point: Vec<Rational> = (0..n).map(|_| probe.rational()).collect();

    let mut candidates: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    candidates.push((1..=n as i64).collect());
    candidates.push((1..=n as i64).rev().collect());
    let mut extra = Sampler::new(0xc0ffee);
    for _ in 0..40 {
        candidates.push((0..n).map(|_| extra.int(-3, 5)).collect());
    }

    let mut gens: Vec<Poly> = Vec::new();
    let mut degrees = Vec::new();
    for d in rs.fundamental_degrees() {
        let accepted = candidates.iter().find_map(|c| {
            let f = orbit_power_sum(group, c, d, &shifted);
            if f.is_zero() {
                return None;
            }
            let mut trial = gens.clone();
            trial.push(f.clone());
            (jacobian_rank(&trial, &point) == trial.len()).then_some(f)
        });
        let f = accepted.ok_or_else(|| {
            Error::OutOfRegime(format!("no independent invariant of degree {d} found for {}", rs.name()))
        })?;
        gens.push(normalize(&f));
        degrees.push(d);
    }
    Ok((gens, degrees))
}

/// `Σ_w (c · w(λ+ρ))^d`, grouping equal linear forms.
fn orbit_power_sum(group: &[WeylElement], c: &[i64], d: u32, shifted: &[Poly]) -> Poly {
    let n = c.len();
    let mut forms: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for w in group {
        let m = w.matrix();
        let row: Vec<i64> = (0..n).map(|j| (0..n).map(|i| c[i] * m[i][j]).sum()).collect();
        *forms.entry(row).or_default() += 1;
    }
    let arity = shifted.first().map_or(0, |p| p.arity());
    let mut total = Poly::zero(arity);
    for (row, count) in forms {
        let lin = row
            .iter()
            .zip(shifted)
            .fold(Poly::zero(arity), |acc, (&k, s)| &acc + &s.scale(&q(k)));
        total = &total + &lin.pow(d).scale(&q(count));
    }
    total
}

fn jacobian_rank(gens: &[Poly], point: &[Rational]) -> usize {
    let n = point.len();
    let jac: QMatrix = Matrix::from_fn(gens.len(), n, |r, c| {
        gens[r].derivative(c).evaluate(point).expect("arity matches")
    });
    jac.rank()
}
