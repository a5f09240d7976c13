//! Closed-form presentations for `g = sl₂`, `μ = kϖ₁`.

use crate::error::{Error, Result};
use crate::exactalg::{leading_form, primitive_normalized, resultant, DegreeWeights};
use crate::kostant::{CenterPresentation, ComponentJson, CoordSystem};
use crate::{q, qf, Poly};

/// Normalization used for every rank-1 factor: graded, second variable first.
pub fn normalize_rank1(p: &Poly) -> Poly {
    primitive_normalized(p, &[1, 0])
}

/// `C₂(kϖ₁) = k(k+2)`.
pub fn casimir_value(k: i64) -> i64 {
    k * (k + 2)
}

fn rank1_components(k: u32) -> Vec<ComponentJson> {
    (k % 2..=k)
        .step_by(2)
        .map(|m| ComponentJson { rep: vec![i64::from(m)], stab: if m == 0 { 2 } else { 1 } })
        .collect()
}

/// Vanishing polynomial in `(X, Y)` of `λ ↦ (λ(λ+2), (λ+m)(λ+m+2))`, by
/// eliminating `λ`. For `m = 0` the resultant is `(Y−X)²` and the reduced
/// factor `Y − X` is returned.
pub fn tilde_factor(m: u32) -> Poly {
    if m == 0 {
        return normalize_rank1(&(&Poly::var(2, 1) - &Poly::var(2, 0)));
    }
    let x = Poly::var(3, 0);
    let y = Poly::var(3, 1);
    let l = Poly::var(3, 2);
    let shift = |s: i64| &l + &Poly::constant(3, q(s));
    let mi = i64::from(m);
    let p = &x - &(&l * &shift(2));
    let r = &y - &(&shift(mi) * &shift(mi + 2));
    let res = resultant(&p, &r, 2).expect("both inputs have degree 2 in λ");
    normalize_rank1(&res.drop_var(2).expect("λ eliminated"))
}

/// `Spec Z^{kϖ₁}(sl₂)` in `(C₂, M̃₁)`, one conic per orbit `{±m}`, ordered by `m`.
pub fn center_ideal_rank1(k: u32) -> CenterPresentation {
    let components = rank1_components(k);
    let factors = components.iter().map(|c| tilde_factor(c.rep[0] as u32)).collect();
    CenterPresentation { coords: CoordSystem::Tilde, vars: CoordSystem::Tilde.var_names(), factors, components }
}

/// `a + b·√(C₂+1)` with `a, b ∈ ℚ[C₂, M₁]`.
#[derive(Clone, Debug)]
struct Surd {
    a: Poly,
    b: Poly,
}

impl Surd {
    fn add(&self, o: &Surd) -> Surd {
        Surd { a: &self.a + &o.a, b: &self.b + &o.b }
    }

    fn mul(&self, o: &Surd) -> Surd {
        let radicand = &Poly::var(2, 0) + &Poly::one(2);
        Surd { a: &(&self.a * &o.a) + &(&(&self.b * &o.b) * &radicand), b: &(&self.a * &o.b) + &(&self.b * &o.a) }
    }

    fn rational_part(self) -> Poly {
        assert!(self.b.is_zero(), "conjugate pairing left an irrational part");
        self.a
    }
}

/// `b_j = 4(j² − n/2 − jn + (n/2 − j)√(C₂+1))` with `n = k`.
fn root_b(j: i64, k: i64) -> Surd {
    let rational = q(4) * (q(j * j - j * k) - qf(k, 2));
    let irrational = q(4) * (qf(k, 2) - q(j));
    Surd { a: Poly::constant(2, rational), b: Poly::constant(2, irrational) }
}

/// Minimal polynomial of `M₁` over `ℚ[C₂]`, split into rational factors by
/// pairing the conjugate roots `b_j`, `b_{k−j}`.
pub fn rozhkovskaya_presentation(k: u32) -> CenterPresentation {
    let ki = i64::from(k);
    let m1 = Poly::var(2, 1);
    let mut factors = Vec::new();
    for j in 0..=ki / 2 {
        let bj = root_b(j, ki);
        if 2 * j == ki {
            factors.push(normalize_rank1(&(&m1 - &bj.rational_part())));
            continue;
        }
        let bc = root_b(ki - j, ki);
        let sum = bj.add(&bc).rational_part();
        let product = bj.mul(&bc).rational_part();
        let quad = &(&(&m1 * &m1) - &(&sum * &m1)) + &product;
        factors.push(normalize_rank1(&quad));
    }
    let mut components = rank1_components(k);
    components.reverse();
    CenterPresentation {
        coords: CoordSystem::Rozhkovskaya,
        vars: CoordSystem::Rozhkovskaya.var_names(),
        factors,
        components,
    }
}

/// Substitutes `M̃₁ = M₁ + C₂ + C₂(μ)` or its inverse; `graded` targets go
/// through [`graded_medium`].
pub fn change_presentation(p: &CenterPresentation, target: CoordSystem) -> Result<CenterPresentation> {
    let unsupported = || Error::UnsupportedPresentation { from: p.coords.to_string(), to: target.to_string() };
    if p.vars.len() != 2 {
        return Err(Error::OutOfRegime("presentation changes are rank-1 only".into()));
    }
    let c = Poly::constant(2, q(casimir_value(p.rank1_k()?)));
    let x = Poly::var(2, 0);
    let y = Poly::var(2, 1);
    let image = match (p.coords, target) {
        (a, b) if a == b => return Ok(p.clone()),
        (CoordSystem::Tilde, CoordSystem::Rozhkovskaya) => &(&y + &x) + &c,
        (CoordSystem::Rozhkovskaya, CoordSystem::Tilde) => &(&y - &x) - &c,
        (CoordSystem::Rozhkovskaya, CoordSystem::Graded) => return graded_medium(p),
        (CoordSystem::Tilde, CoordSystem::Graded) => {
            return graded_medium(&change_presentation(p, CoordSystem::Rozhkovskaya)?)
        }
        _ => return Err(unsupported()),
    };
    let factors = p
        .factors
        .iter()
        .map(|f| f.substitute(&[x.clone(), image.clone()]).map(|g| normalize_rank1(&g)))
        .collect::<Result<Vec<_>>>()?;
    Ok(CenterPresentation { coords: target, vars: target.var_names(), factors, components: p.components.clone() })
}

/// Leading forms for the filtration weights `w(C₂) = 2`, `w(M₁) = 1`.
pub fn graded_medium(p: &CenterPresentation) -> Result<CenterPresentation> {
    if p.coords != CoordSystem::Rozhkovskaya {
        return Err(Error::UnsupportedPresentation { from: p.coords.to_string(), to: "graded".into() });
    }
    let w = DegreeWeights::new(vec![2, 1])?;
    let factors = p
        .factors
        .iter()
        .map(|f| leading_form(f, &w).map(|g| normalize_rank1(&g)))
        .collect::<Result<Vec<_>>>()?;
    Ok(CenterPresentation {
        coords: CoordSystem::Graded,
        vars: CoordSystem::Graded.var_names(),
        factors,
        components: p.components.clone(),
    })
}

/// Whether `Z^{k_big ϖ₁} ↠ Z^{k_small ϖ₁}` is visible as containment of factor sets.
pub fn restriction_surjection_check(k_big: u32, k_small: u32) -> Result<bool> {
    if k_big % 2 != k_small % 2 {
        return Err(Error::ParityMismatch(k_big, k_small));
    }
    let big = center_ideal_rank1(k_big).factor_set();
    Ok(center_ideal_rank1(k_small).factors.iter().all(|f| big.contains(f)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_poly;

    fn parse(s: &str, c: CoordSystem) -> Poly {
        normalize_rank1(&parse_poly(s, &c.var_names()).unwrap())
    }

    #[test]
    fn k2_closed_form() {
        let f = tilde_factor(2);
        let oracle = parse("(Mt1 - C2 - 8)^2 + 8*(Mt1 - C2 - 8) - 16*C2", CoordSystem::Tilde);
        assert_eq!(f, oracle);
        assert_eq!(center_ideal_rank1(2).factors[0], parse("Mt1 - C2", CoordSystem::Tilde));
        assert_eq!(center_ideal_rank1(0).factors, vec![parse("Mt1 - C2", CoordSystem::Tilde)]);
    }

    #[test]
    fn small_k_rozhkovskaya() {
        assert_eq!(rozhkovskaya_presentation(0).factors, vec![parse("M1", CoordSystem::Rozhkovskaya)]);
        assert_eq!(
            rozhkovskaya_presentation(1).factors,
            vec![parse("M1^2 + 4*M1 - 4*C2", CoordSystem::Rozhkovskaya)]
        );
        let g = graded_medium(&rozhkovskaya_presentation(1)).unwrap();
        assert_eq!(g.factors, vec![parse("M1^2 - 4*c2", CoordSystem::Graded)]);
        assert_eq!(graded_medium(&rozhkovskaya_presentation(0)).unwrap().factors, vec![parse("M1", CoordSystem::Graded)]);
    }

    #[test]
    fn change_k0() {
        let r = change_presentation(&center_ideal_rank1(0), CoordSystem::Rozhkovskaya).unwrap();
        assert_eq!(r.factors, vec![parse("M1", CoordSystem::Rozhkovskaya)]);
        assert!(matches!(
            change_presentation(&graded_medium(&r).unwrap(), CoordSystem::Tilde),
            Err(Error::UnsupportedPresentation { .. })
        ));
        assert!(graded_medium(&center_ideal_rank1(1)).is_err());
    }

    #[test]
    fn restriction() {
        assert!(restriction_surjection_check(5, 3).unwrap());
        assert!(restriction_surjection_check(5, 5).unwrap());
        assert!(restriction_surjection_check(4, 0).unwrap());
        assert!(!restriction_surjection_check(3, 5).unwrap());
        assert_eq!(restriction_surjection_check(5, 2), Err(Error::ParityMismatch(5, 2)));
    }
}
