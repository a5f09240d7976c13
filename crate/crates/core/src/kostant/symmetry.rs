use crate::error::{Error, Result};
use crate::hccenter::{CharacterPoint, InvariantBasis};
use crate::kostant::rank1::normalize_rank1;
use crate::kostant::{CenterPresentation, CoordSystem};
use crate::liecore::{weight_system, Bounds, Weight};
use crate::{q, Poly};

/// `−•v = −v − 2ρ`.
pub fn minus_dot(basis: &InvariantBasis, v: &Weight) -> Weight {
    &(-v) - &basis.root_system().rho().scale(&q(2))
}

/// `(χ_λ, χ_ψ) ↦ (χ_{−ψ−2ρ}, χ_{−λ−2ρ})`, computed from representatives.
pub fn phi_involution(basis: &InvariantBasis, lambda: &Weight, psi: &Weight) -> (CharacterPoint, CharacterPoint) {
    (basis.character_point(&minus_dot(basis, psi)), basis.character_point(&minus_dot(basis, lambda)))
}

/// The four elements `1, Φ, −•, −•Φ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KleinElement {
    Identity,
    Phi,
    MinusDot,
    MinusDotPhi,
}

impl KleinElement {
    pub const ALL: [KleinElement; 4] =
        [KleinElement::Identity, KleinElement::Phi, KleinElement::MinusDot, KleinElement::MinusDotPhi];

    fn bits(self) -> u8 {
        match self {
            KleinElement::Identity => 0,
            KleinElement::Phi => 1,
            KleinElement::MinusDot => 2,
            KleinElement::MinusDotPhi => 3,
        }
    }

    fn from_bits(b: u8) -> Self {
        KleinElement::ALL[usize::from(b & 3)]
    }

    /// Group law of `ℤ/2 × ℤ/2`.
    pub fn compose(self, other: KleinElement) -> KleinElement {
        KleinElement::from_bits(self.bits() ^ other.bits())
    }

    /// Action on a pair of representatives.
    pub fn act_on_reps(self, basis: &InvariantBasis, lambda: &Weight, psi: &Weight) -> (Weight, Weight) {
        let phi = |(a, b): (Weight, Weight)| (minus_dot(basis, &b), minus_dot(basis, &a));
        let neg = |(a, b): (Weight, Weight)| (minus_dot(basis, &a), minus_dot(basis, &b));
        let pair = (lambda.clone(), psi.clone());
        match self {
            KleinElement::Identity => pair,
            KleinElement::Phi => phi(pair),
            KleinElement::MinusDot => neg(pair),
            KleinElement::MinusDotPhi => neg(phi(pair)),
        }
    }
}

/// The Klein group acting on `Spec Z^μ(g)` for self-dual `μ`.
#[derive(Clone, Debug)]
pub struct KleinAction<'a> {
    basis: &'a InvariantBasis,
}

impl<'a> KleinAction<'a> {
    pub fn new(basis: &'a InvariantBasis, mu: &Weight, bounds: &Bounds) -> Result<Self> {
        if !weight_system(basis.root_system(), mu, bounds)?.is_self_dual() {
            return Err(Error::NotSelfDual);
        }
        Ok(KleinAction { basis })
    }

    pub fn act(&self, g: KleinElement, lambda: &Weight, psi: &Weight) -> (CharacterPoint, CharacterPoint) {
        let (a, b) = g.act_on_reps(self.basis, lambda, psi);
        (self.basis.character_point(&a), self.basis.character_point(&b))
    }

    /// `g(h(p)) = (gh)(p)` for all sixteen pairs, at the given representatives.
    pub fn composition_table_holds(&self, lambda: &Weight, psi: &Weight) -> bool {
        KleinElement::ALL.iter().all(|&g| {
            KleinElement::ALL.iter().all(|&h| {
                let (a, b) = h.act_on_reps(self.basis, lambda, psi);
                self.act(g, &a, &b) == self.act(g.compose(h), lambda, psi)
            })
        })
    }
}

/// `Φ` on a tilde presentation: swaps `C₂` and `M̃₁`.
pub fn phi_presentation(p: &CenterPresentation) -> Result<CenterPresentation> {
    if p.coords != CoordSystem::Tilde {
        return Err(Error::UnsupportedPresentation { from: p.coords.to_string(), to: "swapped tilde".into() });
    }
    let swap = [Poly::var(2, 1), Poly::var(2, 0)];
    let factors = p
        .factors
        .iter()
        .map(|f| f.substitute(&swap).map(|g| normalize_rank1(&g)))
        .collect::<Result<Vec<_>>>()?;
    Ok(CenterPresentation { factors, ..p.clone() })
}

pub fn is_swap_invariant(p: &CenterPresentation) -> Result<bool> {
    Ok(phi_presentation(p)?.factor_set() == p.factor_set())
}

/// Invariance of the factor set under `M₁ ↦ −M₁`.
pub fn is_sign_invariant(p: &CenterPresentation) -> bool {
    let flip = [Poly::var(2, 0), -&Poly::var(2, 1)];
    let flipped = CenterPresentation {
        factors: p.factors.iter().map(|f| normalize_rank1(&f.substitute(&flip).expect("rank-1 arity"))).collect(),
        ..p.clone()
    };
    flipped.factor_set() == p.factor_set()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kostant::{center_ideal_rank1, graded_medium, rozhkovskaya_presentation};
    use crate::sampling::Sampler;

    fn a1() -> InvariantBasis {
        InvariantBasis::new(&"A1".parse().unwrap(), &Bounds::default()).unwrap()
    }

    #[test]
    fn phi_example_and_fixed_point() {
        let b = a1();
        let (x, y) = phi_involution(&b, &Weight::from_ints(&[3]), &Weight::from_ints(&[2]));
        assert_eq!((x.0, y.0), (vec![q(8)], vec![q(15)]));
        let m = Weight::from_ints(&[-1]);
        let (x, y) = phi_involution(&b, &m, &m);
        assert_eq!(x, b.character_point(&m));
        assert_eq!(y, b.character_point(&m));
    }

    #[test]
    fn klein_group() {
        let b = a1();
        let k = KleinAction::new(&b, &Weight::from_ints(&[5]), &Bounds::default()).unwrap();
        let mut s = Sampler::new(11);
        for _ in 0..20 {
            let l = s.weight(1);
            let p = &l + &Weight::from_ints(&[3]);
            assert!(k.composition_table_holds(&l, &p));
            let (a, c) = KleinElement::MinusDot.act_on_reps(&b, &l, &p);
            assert_eq!(k.act(KleinElement::MinusDot, &a, &c), (b.character_point(&l), b.character_point(&p)));
        }
    }

    #[test]
    fn a2_not_self_dual() {
        let b = InvariantBasis::new(&"A2".parse().unwrap(), &Bounds::default()).unwrap();
        assert!(matches!(KleinAction::new(&b, &Weight::from_ints(&[1, 0]), &Bounds::default()), Err(Error::NotSelfDual)));
        assert!(KleinAction::new(&b, &Weight::from_ints(&[1, 1]), &Bounds::default()).is_ok());
    }

    #[test]
    fn presentation_symmetries() {
        for k in 0..=7 {
            assert!(is_swap_invariant(&center_ideal_rank1(k)).unwrap());
            assert!(is_sign_invariant(&graded_medium(&rozhkovskaya_presentation(k)).unwrap()));
        }
        assert!(!is_sign_invariant(&rozhkovskaya_presentation(3)));
    }
}
