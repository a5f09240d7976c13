use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::normalize::sort_factors;
use crate::exactalg::PolyJson;
use crate::kostant::ComponentJson;
use crate::Poly;

/// Coordinates on `Spec Z(g) × Spec Z(g)` in rank 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoordSystem {
    /// `(C₂, M̃₁)` with `M̃₁ = δ(C₂)`.
    Tilde,
    /// `(C₂, M₁)` with `M₁ = δ(C₂) − C₂ − C₂(μ)`.
    Rozhkovskaya,
    /// `(c₂, M₁)` on the associated graded.
    Graded,
}

impl CoordSystem {
    pub fn as_str(self) -> &'static str {
        match self {
            CoordSystem::Tilde => "tilde",
            CoordSystem::Rozhkovskaya => "rozhkovskaya",
            CoordSystem::Graded => "graded",
        }
    }

    pub fn var_names(self) -> Vec<String> {
        let names: [&str; 2] = match self {
            CoordSystem::Tilde => ["C2", "Mt1"],
            CoordSystem::Rozhkovskaya => ["C2", "M1"],
            CoordSystem::Graded => ["c2", "M1"],
        };
        names.iter().map(|s| s.to_string()).collect()
    }
}

impl fmt::Display for CoordSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CoordSystem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tilde" => Ok(CoordSystem::Tilde),
            "rozhkovskaya" => Ok(CoordSystem::Rozhkovskaya),
            "graded" => Ok(CoordSystem::Graded),
            _ => Err(Error::Parse(format!("unknown coordinate system {s:?}"))),
        }
    }
}

/// `Spec Z^μ(g)` as a union of hypersurfaces, one factor per W-orbit of `S^μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterPresentation {
    pub coords: CoordSystem,
    pub vars: Vec<String>,
    pub factors: Vec<Poly>,
    pub components: Vec<ComponentJson>,
}

/// `{"coords", "vars", "factors": [poly], "components": [{"rep","stab"}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub coords: CoordSystem,
    pub vars: Vec<String>,
    pub factors: Vec<PolyJson>,
    pub components: Vec<ComponentJson>,
}

impl CenterPresentation {
    /// Product of all factors, the generator of the defining ideal.
    pub fn product(&self) -> Poly {
        self.factors.iter().fold(Poly::one(self.vars.len()), |acc, f| &acc * f)
    }

    /// Factors sorted into a canonical order, for set comparison.
    pub fn factor_set(&self) -> Vec<Poly> {
        let mut f = self.factors.clone();
        sort_factors(&mut f);
        f.dedup();
        f
    }

    /// `k` for `μ = kϖ₁`, read off the top component.
    pub fn rank1_k(&self) -> Result<i64> {
        self.components
            .iter()
            .filter_map(|c| (c.rep.len() == 1).then_some(c.rep[0]))
            .max()
            .ok_or_else(|| Error::OutOfRegime("presentation has no rank-1 components".into()))
    }

    pub fn to_json(&self) -> PresentationJson {
        PresentationJson {
            coords: self.coords,
            vars: self.vars.clone(),
            factors: self.factors.iter().map(|f| PolyJson::from_poly(f, &self.vars)).collect(),
            components: self.components.clone(),
        }
    }

    pub fn from_json(j: &PresentationJson) -> Result<Self> {
        let factors = j
            .factors
            .iter()
            .map(|f| {
                if f.vars != j.vars {
                    return Err(Error::Parse("factor variables differ from presentation variables".into()));
                }
                f.to_poly()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CenterPresentation { coords: j.coords, vars: j.vars.clone(), factors, components: j.components.clone() })
    }

    /// Factored form, e.g. `(C2^2 - 2*C2*Mt1 + ...)(...)`.
    pub fn factored_string(&self) -> String {
        self.factors.iter().map(|f| format!("({})", f.display_with(&self.vars))).collect()
    }
}
