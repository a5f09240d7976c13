use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::hccenter::{CharacterPoint, InvariantBasis};
use crate::liecore::{orbit_decomposition, weight_system, Bounds, Weight};

/// The component `{([λ]•, [λ+μ_i]•)}` attached to one W-orbit of weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterComponent {
    pub orbit_rep: Weight,
    pub stabilizer_order: usize,
}

/// `{"rep": [ints], "stab": n}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentJson {
    pub rep: Vec<i64>,
    pub stab: usize,
}

impl CenterComponent {
    /// `λ ↦ (χ_λ, χ_{λ+μ_i})`.
    pub fn point(&self, basis: &InvariantBasis, lambda: &Weight) -> (CharacterPoint, CharacterPoint) {
        (basis.character_point(lambda), basis.character_point(&(lambda + &self.orbit_rep)))
    }

    /// The point as one vector, x-block then y-block.
    pub fn flat_point(&self, basis: &InvariantBasis, lambda: &Weight) -> Vec<crate::Rational> {
        let (x, y) = self.point(basis, lambda);
        x.0.into_iter().chain(y.0).collect()
    }

    pub fn to_json(&self) -> ComponentJson {
        ComponentJson {
            rep: self.orbit_rep.to_ints().expect("integral orbit representative"),
            stab: self.stabilizer_order,
        }
    }
}

/// One component per W-orbit in `S^μ`, ordered by dominant representative.
pub fn center_components(basis: &InvariantBasis, mu: &Weight, bounds: &Bounds) -> Result<Vec<CenterComponent>> {
    let ws = weight_system(basis.root_system(), mu, bounds)?;
    Ok(orbit_decomposition(basis.root_system(), basis.group(), &ws)
        .into_iter()
        .map(|o| CenterComponent { orbit_rep: o.representative, stabilizer_order: o.stabilizer_order })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comps(name: &str, mu: &[i64]) -> (InvariantBasis, Vec<CenterComponent>) {
        let b = InvariantBasis::new(&name.parse().unwrap(), &Bounds::default()).unwrap();
        let c = center_components(&b, &Weight::from_ints(mu), &Bounds::default()).unwrap();
        (b, c)
    }

    #[test]
    fn counts() {
        let (_, c) = comps("A1", &[5]);
        let reps: Vec<_> = c.iter().map(|x| x.to_json().rep[0]).collect();
        assert_eq!(reps, vec![1, 3, 5]);
        let (_, c) = comps("A2", &[1, 1]);
        assert_eq!(c.len(), 2);
        assert_eq!(c[0].to_json(), ComponentJson { rep: vec![0, 0], stab: 6 });
        assert_eq!(c[1].to_json(), ComponentJson { rep: vec![1, 1], stab: 1 });
        let (_, c) = comps("B2", &[0, 2]);
        assert_eq!(c.len(), 3);
    }

    #[test]
    fn trivial_is_diagonal() {
        let (b, c) = comps("G2", &[0, 0]);
        assert_eq!(c.len(), 1);
        let lam = Weight::new(vec![crate::qf(3, 7), crate::q(-2)]);
        let (x, y) = c[0].point(&b, &lam);
        assert_eq!(x, y);
    }
}
