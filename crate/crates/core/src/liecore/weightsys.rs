use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::liecore::{Bounds, RootSystem, Weight, WeylElement};
use crate::{q, Rational};

/// The weights of `V^μ` with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSystem {
    highest: Weight,
    entries: Vec<(Weight, u64)>,
}

/// JSON row: `{"weight": [ints], "mult": n}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightEntryJson {
    pub weight: Vec<i64>,
    pub mult: u64,
}

impl WeightSystem {
    pub fn highest(&self) -> &Weight {
        &self.highest
    }

    /// Entries ordered by depth below the highest weight, then lexicographically.
    pub fn entries(&self) -> &[(Weight, u64)] {
        &self.entries
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.entries.iter().find(|(x, _)| x == w).map_or(0, |(_, m)| *m)
    }

    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.entries.iter().map(|(w, _)| w)
    }

    pub fn dim(&self) -> u64 {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.entries.iter().all(|(_, m)| *m <= 1)
    }

    /// `S^μ = −S^μ` (with multiplicities).
    pub fn is_self_dual(&self) -> bool {
        self.entries.iter().all(|(w, m)| self.multiplicity(&-w) == *m)
    }

    pub fn to_json(&self) -> Vec<WeightEntryJson> {
        self.entries
            .iter()
            .map(|(w, m)| WeightEntryJson { weight: w.to_ints().expect("integral weights"), mult: *m })
            .collect()
    }
}

/// Weight system of `V^μ` via Freudenthal's recursion.
pub fn weight_system(rs: &RootSystem, mu: &Weight, bounds: &Bounds) -> Result<WeightSystem> {
    mu.check_rank(rs.rank())?;
    if !mu.is_dominant_integral() {
        return Err(Error::NotDominantIntegral(mu.to_string()));
    }
    let dim = rs.weyl_dimension(mu);
    let dim_int = dim.to_integer().to_u128().unwrap_or(u128::MAX);
    if dim_int > bounds.max_dim {
        return Err(Error::DimensionTooLarge { dim: dim_int, bound: bounds.max_dim });
    }

    let dominant = dominant_weights_below(rs, mu);
    let mut all: BTreeSet<Weight> = BTreeSet::new();
    for d in &dominant {
        all.extend(rs.orbit(d));
    }
    let depth = |w: &Weight| -> Rational {
        rs.weight_to_root_coords(&(mu - w)).into_iter().fold(Rational::zero(), |a, b| a + b)
    };
    let mut ordered: Vec<(Rational, Weight)> = all.iter().map(|w| (depth(w), w.clone())).collect();
    ordered.sort();

    let shifted_top = mu + rs.rho();
    let top_norm = rs.inner(&shifted_top, &shifted_top);
    let roots: Vec<(Vec<i64>, Weight)> =
        rs.positive_roots().iter().map(|r| (r.clone(), rs.root_to_weight(r))).collect();
    let mut mult: BTreeMap<Weight, u64> = BTreeMap::new();
    for (_, lam) in &ordered {
        if lam == mu {
            mult.insert(lam.clone(), 1);
            continue;
        }
        if !lam.is_dominant() {
            let (dom, _) = rs.dominant_conjugate(lam);
            let m = *mult.get(&dom).expect("dominant conjugate lies higher and is already processed");
            mult.insert(lam.clone(), m);
            continue;
        }
        let mut numer = Rational::zero();
        for (root, alpha) in &roots {
            let mut k = 1i64;
            loop {
                let up = lam + &alpha.scale(&q(k));
                let Some(&m) = mult.get(&up) else { break };
                numer += q(2) * rs.pair_with_root(&up, root) * q(m as i64);
                k += 1;
            }
        }
        let shifted = lam + rs.rho();
        let denom = &top_norm - rs.inner(&shifted, &shifted);
        assert!(!denom.is_zero(), "zero Freudenthal denominator at {lam}");
        let m = numer / denom;
        assert!(m.is_integer(), "non-integral multiplicity at {lam}");
        mult.insert(lam.clone(), m.to_integer().to_u64().expect("nonnegative multiplicity"));
    }
    let entries: Vec<(Weight, u64)> =
        ordered.into_iter().map(|(_, w)| (w.clone(), mult[&w])).filter(|(_, m)| *m > 0).collect();
    Ok(WeightSystem { highest: mu.clone(), entries })
}

/// Dominant weights `λ ≼ μ`, reached by subtracting positive roots.
fn dominant_weights_below(rs: &RootSystem, mu: &Weight) -> Vec<Weight> {
    let roots: Vec<Weight> = rs.positive_roots().iter().map(|r| rs.root_to_weight(r)).collect();
    let mut seen = BTreeSet::from([mu.clone()]);
    let mut queue = VecDeque::from([mu.clone()]);
    while let Some(cur) = queue.pop_front() {
        for a in &roots {
            let next = &cur - a;
            if next.is_dominant() && seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.into_iter().collect()
}

pub fn is_multiplicity_free(rs: &RootSystem, mu: &Weight, bounds: &Bounds) -> Result<bool> {
    Ok(weight_system(rs, mu, bounds)?.is_multiplicity_free())
}

/// One W-orbit inside a weight system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightOrbit {
    pub representative: Weight,
    pub orbit: Vec<Weight>,
    pub stabilizer_order: usize,
}

/// Splits the support of `ws` into W-orbits, each with its dominant representative.
pub fn orbit_decomposition(rs: &RootSystem, group: &[WeylElement], ws: &WeightSystem) -> Vec<WeightOrbit> {
    let mut reps: BTreeSet<Weight> = BTreeSet::new();
    for w in ws.support() {
        reps.insert(rs.dominant_conjugate(w).0);
    }
    reps.into_iter()
        .map(|rep| {
            let mut orbit: Vec<Weight> = group.iter().map(|w| w.apply(&rep)).collect();
            orbit.sort();
            orbit.dedup();
            let stabilizer_order = group.iter().filter(|w| w.apply(&rep) == rep).count();
            WeightOrbit { representative: rep, orbit, stabilizer_order }
        })
        .collect()
}

/// `Σ_λ (m^μ_λ)²`.
pub fn fiber_dimension(ws: &WeightSystem) -> u64 {
    ws.entries().iter().map(|(_, m)| m * m).sum()
}
