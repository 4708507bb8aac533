use flatband_exact::algebraic::real_roots;
use flatband_exact::factor::factor;
use flatband_exact::unipoly::int_poly;
use flatband_exact::{field_of, rat, BigRational, Field, Gaussian, LaurentPoly, NumberFieldElement, Ring, UniPoly};
use num_bigint::BigInt;
use proptest::prelude::*;

fn poly_strategy() -> impl Strategy<Value = UniPoly<BigInt>> {
    proptest::collection::vec(-6i64..7, 2..7).prop_map(|c| int_poly(&c)).prop_filter("nonconstant", |p| p.degree().unwrap_or(0) > 0)
}

fn gaussian(a: i64, b: i64) -> Gaussian {
    Gaussian::new(rat(a), rat(b))
}

fn laurent_strategy() -> impl Strategy<Value = LaurentPoly<Gaussian>> {
    proptest::collection::vec(((-2i64..3, -2i64..3), (-3i64..4, -3i64..4)), 0..5)
        .prop_map(|t| LaurentPoly::from_terms(2, t.into_iter().map(|((e, f), (a, b))| (vec![e, f], gaussian(a, b)))))
}

fn rat_poly_strategy() -> impl Strategy<Value = UniPoly<BigRational>> {
    proptest::collection::vec(-4i64..5, 0..5).prop_map(|c| int_poly(&c).to_rational())
}

proptest! {
    #[test]
    fn laurent_ring_axioms(a in laurent_strategy(), b in laurent_strategy(), c in laurent_strategy()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn unipoly_ring_axioms(a in rat_poly_strategy(), b in rat_poly_strategy(), c in rat_poly_strategy()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn involution_is_an_antiautomorphism(a in laurent_strategy(), b in laurent_strategy(), r in proptest::collection::vec((-2i64..3, -3i64..4), 0..4)) {
        prop_assert_eq!(a.involute().involute(), a.clone());
        prop_assert_eq!(a.mul(&b).involute(), b.involute().mul(&a.involute()));
        prop_assert_eq!(a.add(&b).involute(), a.involute().add(&b.involute()));
        let real = LaurentPoly::from_terms(2, r.into_iter().map(|(e, k)| (vec![0, e], gaussian(k, 0))));
        let sym = real.add(&real.involute());
        prop_assert_eq!(sym.involute(), sym);
    }

    #[test]
    fn gcd_divides_and_keeps_common_roots(a in rat_poly_strategy(), b in rat_poly_strategy(), common in -3i64..4) {
        let lin = int_poly(&[-common, 1]).to_rational();
        let (a, b) = (a.mul(&lin), b.mul(&lin));
        prop_assume!(!a.is_zero() && !b.is_zero());
        let g = a.gcd(&b);
        prop_assert!(a.rem(&g).is_zero() && b.rem(&g).is_zero());
        prop_assert!(g.eval(&rat(common)).is_zero());
    }

    #[test]
    fn non_real_roots_pair_up(c in proptest::collection::vec(-5i64..6, 2..8)) {
        let p = int_poly(&c).to_rational();
        prop_assume!(p.degree().unwrap_or(0) > 0);
        let real: usize = real_roots(&p).iter().map(|(_, m)| m).sum();
        let deg = p.degree().unwrap();
        prop_assert!(real <= deg && (deg - real) % 2 == 0);
    }

    #[test]
    fn factorization_multiplies_back(a in poly_strategy(), b in poly_strategy()) {
        let p = a.mul(&b);
        let f = factor(&p);
        let mut prod = UniPoly::<BigInt>::one();
        for (g, m) in &f {
            prop_assert!(g.degree().unwrap() >= 1);
            prod = prod.mul(&g.pow(*m as u32));
        }
        prop_assert_eq!(prod.primitive(), p.primitive());
    }

    #[test]
    fn real_roots_match_sign_changes(c in proptest::collection::vec(-5i64..6, 3..7)) {
        let p = int_poly(&c);
        prop_assume!(p.degree().unwrap_or(0) > 0);
        let pr = p.to_rational();
        let roots = real_roots(&pr);
        for w in roots.windows(2) {
            prop_assert!(w[0].0 < w[1].0);
        }
        for (r, _) in &roots {
            prop_assert!(r.is_root_of(&pr));
            let x = r.to_f64();
            let v: f64 = c.iter().rev().fold(0.0, |acc, &k| acc * x + k as f64);
            let scale: f64 = c.iter().enumerate().map(|(i, &k)| (k as f64).abs() * x.abs().powi(i as i32)).sum();
            prop_assert!(v.abs() <= 1e-6 * scale.max(1.0));
        }
        // sign changes on a fine grid never exceed the root count
        let mut changes = 0;
        let mut last = 0.0f64;
        for i in -4000..=4000 {
            let x = i as f64 / 500.0 + 1e-7;
            let v: f64 = c.iter().rev().fold(0.0, |acc, &k| acc * x + k as f64);
            if v != 0.0 && last != 0.0 && v.signum() != last.signum() {
                changes += 1;
            }
            if v != 0.0 {
                last = v;
            }
        }
        prop_assert!(changes <= roots.len());
    }

    #[test]
    fn number_field_inverse(a in -5i64..6, b in -5i64..6, n in 2i64..12) {
        let sq = real_roots(&int_poly(&[-n, 0, 1]).to_rational());
        let theta = sq.last().unwrap().0.clone();
        let (_, g) = field_of(&theta);
        let x = g.scale_rat(a).add(&NumberFieldElement::from_int(b));
        if x.is_zero() {
            prop_assert!(x.inv().is_none());
        } else {
            prop_assert_eq!(x.mul(&x.inv().unwrap()), NumberFieldElement::one());
        }
    }
}

trait ScaleRat {
    fn scale_rat(&self, k: i64) -> Self;
}

impl ScaleRat for NumberFieldElement {
    fn scale_rat(&self, k: i64) -> Self {
        self.mul(&NumberFieldElement::rational(rat(k)))
    }
}
