use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hccenter::{CharacterPoint, InvariantBasis};
use crate::liecore::{weight_system, Bounds, Weight};
use crate::{q, qf, Rational};

/// `P_ψ` (projective cover at the antidominant member) or `M_ψ` (Verma).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockLabel {
    Projective(Weight),
    Verma(Weight),
}

impl fmt::Display for BlockLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockLabel::Projective(w) => write!(f, "P:{w}"),
            BlockLabel::Verma(w) => write!(f, "M:{w}"),
        }
    }
}

impl Serialize for BlockLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl BlockLabel {
    /// `P_{-6}` style.
    pub fn subscripted(&self) -> String {
        match self {
            BlockLabel::Projective(w) => format!("P_{{{w}}}"),
            BlockLabel::Verma(w) => format!("M_{{{w}}}"),
        }
    }
}

/// The weights `μ_i` whose shifts `λ + μ_i` share one dot-orbit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkageBlock {
    pub weights: Vec<Weight>,
    pub character: CharacterPoint,
    pub label: Option<BlockLabel>,
    pub mult: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkageDecomposition {
    pub lambda: Weight,
    pub mu: Weight,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    pub blocks: Vec<LinkageBlock>,
}

impl LinkageDecomposition {
    /// `P_{-5} ⊕ P_{-3} ⊕ M_{-1} ⊕ M_{5}`, or `None` if any block is unlabeled.
    pub fn labeled_sum(&self) -> Option<String> {
        let parts: Option<Vec<String>> = self.blocks.iter().map(|b| b.label.as_ref().map(|l| l.subscripted())).collect();
        parts.map(|p| p.join(" ⊕ "))
    }

    pub fn characters(&self) -> Vec<(CharacterPoint, u64)> {
        self.blocks.iter().map(|b| (b.character.clone(), b.mult)).collect()
    }
}

/// Groups `λ + S^μ` by dot-orbit; blocks are ordered by their lowest shifted
/// member, members within a block by shifted weight.
pub fn linkage_decomposition(
    basis: &InvariantBasis,
    lambda: &Weight,
    mu: &Weight,
    bounds: &Bounds,
) -> Result<LinkageDecomposition> {
    lambda.check_rank(basis.rank())?;
    let ws = weight_system(basis.root_system(), mu, bounds)?;
    let mut shifted: Vec<(Weight, Weight, u64)> =
        ws.entries().iter().map(|(w, m)| (lambda + w, w.clone(), *m)).collect();
    shifted.sort();
    let mut blocks: Vec<(Vec<Weight>, Vec<Weight>, u64)> = Vec::new();
    for (s, w, m) in shifted {
        match blocks.iter_mut().find(|(members, _, _)| basis.same_character(&members[0], &s)) {
            Some(block) => {
                block.0.push(s);
                block.1.push(w);
                block.2 += m;
            }
            None => blocks.push((vec![s], vec![w], m)),
        }
    }
    let blocks = blocks
        .into_iter()
        .map(|(members, weights, mult)| LinkageBlock {
            character: basis.character_point(&members[0]),
            weights,
            label: None,
            mult,
        })
        .collect();
    Ok(LinkageDecomposition { lambda: lambda.clone(), mu: mu.clone(), k: None, blocks })
}

/// Characters of `M_λ ⊗ V^μ` with multiplicities, merged along linkage.
pub fn tensor_characters(
    basis: &InvariantBasis,
    lambda: &Weight,
    mu: &Weight,
    bounds: &Bounds,
) -> Result<Vec<(CharacterPoint, u64)>> {
    Ok(linkage_decomposition(basis, lambda, mu, bounds)?.characters())
}

fn sl2_basis() -> InvariantBasis {
    InvariantBasis::new(&"A1".parse().expect("A1 is valid"), &Bounds::default()).expect("A1 is enumerable")
}

/// `sl₂` decomposition with labels: a linked pair `{ψ₁ > ψ₂}` gives
/// `P_{ψ₂}`, a singleton `{ψ}` gives `M_ψ`. Labels are only asserted for
/// `λ ≥ −1`.
pub fn linkage_decomposition_sl2(lambda: i64, k: u32) -> Result<LinkageDecomposition> {
    if lambda < -1 {
        return Err(Error::OutOfRegime(format!("labels are asserted only for λ ≥ -1, got {lambda}")));
    }
    let basis = sl2_basis();
    let lam = Weight::from_ints(&[lambda]);
    let mut dec = linkage_decomposition(&basis, &lam, &Weight::from_ints(&[i64::from(k)]), &Bounds::default())?;
    for block in &mut dec.blocks {
        let lowest = &lam + &block.weights[0];
        block.label = Some(match block.weights.len() {
            1 => BlockLabel::Verma(lowest),
            _ => BlockLabel::Projective(lowest),
        });
    }
    dec.k = Some(i64::from(k));
    Ok(dec)
}

/// `C₂`-values where two shifts `λ + i`, `λ + j` (`i ≠ j` in `S^{kϖ₁}`) are
/// dot-linked, i.e. `λ = −(i+j+2)/2`. Sorted ascending.
pub fn discriminant_sl2(k: u32) -> Vec<Rational> {
    let k = i64::from(k);
    let weights: Vec<i64> = (0..=k).map(|j| k - 2 * j).collect();
    let mut out = BTreeSet::new();
    for (a, &i) in weights.iter().enumerate() {
        for &j in &weights[a + 1..] {
            let lam = qf(-(i + j + 2), 2);
            out.insert(&lam * (&lam + q(2)));
        }
    }
    out.into_iter().collect()
}
