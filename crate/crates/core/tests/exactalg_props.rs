use kostant_core::exactalg::{leading_form, parse_poly, resultant, DegreeWeights, PolyJson};
use kostant_core::{q, qf, Poly, Rational};
use num_traits::Zero;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| qf(n, d))
}

fn poly(arity: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, arity), rational()), 0..=max_terms)
        .prop_map(move |terms| Poly::from_terms(arity, terms).unwrap())
}

/// Dense univariate coefficients, lowest degree first, trailing zeros trimmed.
fn dense(p: &Poly) -> Vec<Rational> {
    let deg = p.degree_in(0) as usize;
    let mut out = vec![Rational::zero(); deg + 1];
    for (e, c) in p.terms() {
        out[e[0] as usize] += c;
    }
    while out.len() > 1 && out.last().unwrap().is_zero() {
        out.pop();
    }
    out
}

fn degree(f: &[Rational]) -> Option<usize> {
    f.iter().rposition(|c| !c.is_zero())
}

fn remainder(f: &[Rational], g: &[Rational]) -> Vec<Rational> {
    let mut r = f.to_vec();
    let dg = degree(g).unwrap();
    while let Some(dr) = degree(&r) {
        if dr < dg {
            break;
        }
        let c = &r[dr] / &g[dg];
        for i in 0..=dg {
            r[dr - dg + i] -= &c * &g[i];
        }
    }
    r
}

fn pow(x: &Rational, n: usize) -> Rational {
    (0..n).fold(q(1), |acc, _| acc * x)
}

/// Euclidean-algorithm resultant of univariate polynomials.
fn euclid_resultant(f: &[Rational], g: &[Rational]) -> Rational {
    let (Some(m), Some(n)) = (degree(f), degree(g)) else { return q(0) };
    if n == 0 {
        return pow(&g[0], m);
    }
    if m == 0 {
        return pow(&f[0], n);
    }
    let sign = if (m * n) % 2 == 1 { q(-1) } else { q(1) };
    let r = remainder(f, g);
    let Some(dr) = degree(&r) else { return q(0) };
    // Res(f, g) = (−1)^{mn} Res(g, f) = (−1)^{mn} lc(g)^{m − deg r} Res(g, r)
    sign * pow(&g[n], m - dr) * euclid_resultant(g, &r)
}

fn specialize(p: &Poly, a: &Rational, b: &Rational) -> Poly {
    p.substitute(&[Poly::var(1, 0), Poly::constant(1, a.clone()), Poly::constant(1, b.clone())]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(3, 3, 4), b in poly(3, 3, 4), c in poly(3, 3, 4)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Poly::one(3), a.clone());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(2, 3, 4), b in poly(2, 3, 4), x in rational(), y in rational()) {
        let pt = [x, y];
        prop_assert_eq!((&a * &b).evaluate(&pt).unwrap(), a.evaluate(&pt).unwrap() * b.evaluate(&pt).unwrap());
        prop_assert_eq!((&a + &b).evaluate(&pt).unwrap(), a.evaluate(&pt).unwrap() + b.evaluate(&pt).unwrap());
    }

    #[test]
    fn resultant_specializes(p in poly(3, 2, 4), r in poly(3, 2, 4), a in rational(), b in rational()) {
        prop_assume!(p.degree_in(0) > 0 && r.degree_in(0) > 0);
        let (ps, rs) = (specialize(&p, &a, &b), specialize(&r, &a, &b));
        prop_assume!(ps.degree_in(0) == p.degree_in(0) && rs.degree_in(0) == r.degree_in(0));
        let full = resultant(&p, &r, 0).unwrap();
        let value = full.evaluate(&[q(0), a, b]).unwrap();
        prop_assert_eq!(value, euclid_resultant(&dense(&ps), &dense(&rs)));
    }

    #[test]
    fn leading_form_multiplicative(a in poly(2, 3, 4), b in poly(2, 3, 4), w0 in 1u32..4, w1 in 1u32..4) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let w = DegreeWeights::new(vec![w0, w1]).unwrap();
        let la = leading_form(&a, &w).unwrap();
        prop_assert_eq!(leading_form(&la, &w).unwrap(), la.clone());
        prop_assert_eq!(leading_form(&(&a * &b), &w).unwrap(), &la * &leading_form(&b, &w).unwrap());
    }

    #[test]
    fn json_and_text_round_trip(a in poly(2, 4, 6)) {
        let names = vec!["C2".to_string(), "M1".to_string()];
        let js = serde_json::to_string(&PolyJson::from_poly(&a, &names)).unwrap();
        let back: PolyJson = serde_json::from_str(&js).unwrap();
        prop_assert_eq!(back.to_poly().unwrap(), a.clone());
        let text = a.display_with(&names).to_string();
        prop_assert_eq!(parse_poly(&text, &names).unwrap(), a);
    }
}

#[test]
fn concrete_examples() {
    let names: Vec<String> = ["x", "y"].iter().map(|s| s.to_string()).collect();
    let p = parse_poly("x*y + 1", &names).unwrap();
    assert_eq!(p.evaluate(&[q(2), q(3)]).unwrap(), q(7));
    let d = parse_poly("x - y", &names).unwrap();
    assert!(d.substitute(&[Poly::var(2, 1), Poly::var(2, 1)]).unwrap().is_zero());
    let c2 = parse_poly("x*(x+2)", &names).unwrap();
    assert_eq!(c2.evaluate(&[q(3), q(0)]).unwrap(), q(15));
    let x = Poly::var(3, 0);
    let lin = |i: usize| &x - &Poly::var(3, i);
    assert_eq!(resultant(&lin(1), &lin(2), 0).unwrap(), &Poly::var(3, 1) - &Poly::var(3, 2));
    assert!(leading_form(&Poly::zero(2), &DegreeWeights::uniform(2)).is_err());
    assert_eq!(
        leading_form(&parse_poly("x + 1", &names).unwrap(), &DegreeWeights::uniform(2)).unwrap(),
        Poly::var(2, 0)
    );
}

#[test]
fn euclid_oracle_sanity() {
    // Res(x² − 1, x − 2) = 3, Res(x − a, x − b) = a − b
    assert_eq!(euclid_resultant(&[q(-1), q(0), q(1)], &[q(-2), q(1)]), q(3));
    assert_eq!(euclid_resultant(&[q(-3), q(1)], &[q(-5), q(1)]), q(-2));
}
