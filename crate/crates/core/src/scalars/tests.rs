use super::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn q() -> RatFunc {
    RatFunc::q()
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

fn random_rational(rng: &mut StdRng) -> Rational {
    rat(rng.gen_range(-20..=20), rng.gen_range(1..=12))
}

fn random_ratfunc(rng: &mut StdRng) -> RatFunc {
    let mut num = QPoly::zero();
    for d in 0..rng.gen_range(1..=3) {
        num = num + QPoly::monomial(random_rational(rng), d);
    }
    let mut den = QPoly::zero();
    for d in 0..rng.gen_range(1..=2) {
        den = den + QPoly::monomial(random_rational(rng), d);
    }
    if den.is_zero() {
        den = QPoly::one();
    }
    RatFunc::new(num, den).unwrap()
}

#[test]
fn rational_arithmetic_examples() {
    assert_eq!(rat(1, 2) + rat(1, 3), rat(5, 6));
    assert_eq!(rat(2, 4), rat(1, 2));
    assert!(rat(0, 5).is_zero());
    assert_eq!(rat(3, -6), rat(-1, 2));
    assert_eq!(Rational::new(1, 0), Err(ScalarError::DivisionByZero));
}

#[test]
fn inv_of_q_minus_qinv() {
    // q - q^-1 = (q^2 - 1)/q, so the inverse is q/(q^2 - 1).
    let x = q() - RatFunc::q_pow(-1);
    let inv = x.inv().unwrap();
    let expected = RatFunc::new(
        QPoly::q(),
        QPoly::monomial(Rational::one(), 2) - QPoly::one(),
    )
    .unwrap();
    assert_eq!(inv, expected);
    assert!((inv * x).is_one());
}

#[test]
fn cancellation_to_q_plus_one() {
    let num = QPoly::monomial(Rational::one(), 2) - QPoly::one();
    let den = QPoly::q() - QPoly::one();
    let f = RatFunc::new(num, den).unwrap();
    let expected = RatFunc::from_poly(QPoly::q() + QPoly::one());
    assert_eq!(f, expected);
    assert_eq!(f.to_string(), "q^1 + 1");
}

#[test]
fn specialize_examples() {
    let f = RatFunc::from_poly(QPoly::monomial(Rational::one(), 2) - QPoly::one());
    assert_eq!(f.specialize(&rat(2, 1)).unwrap(), rat(3, 1));

    let pole = RatFunc::new(QPoly::one(), QPoly::q() - QPoly::one()).unwrap();
    assert_eq!(pole.specialize(&rat(1, 1)), Err(ScalarError::PoleAtPoint));

    let cancels = RatFunc::new(
        QPoly::monomial(Rational::one(), 2) - QPoly::one(),
        QPoly::q() - QPoly::one(),
    )
    .unwrap();
    assert_eq!(cancels.specialize(&rat(3, 1)).unwrap(), rat(4, 1));
}

#[test]
fn specialize_is_a_ring_homomorphism() {
    let mut rng = StdRng::seed_from_u64(11);
    let q0 = rat(2, 1);
    for _ in 0..50 {
        let a = random_ratfunc(&mut rng);
        let b = random_ratfunc(&mut rng);
        let (sa, sb) = match (a.specialize(&q0), b.specialize(&q0)) {
            (Ok(x), Ok(y)) => (x, y),
            _ => continue,
        };
        assert_eq!((a.clone() + b.clone()).specialize(&q0).unwrap(), sa.clone() + sb.clone());
        assert_eq!((a * b).specialize(&q0).unwrap(), sa * sb);
    }
}

fn field_axioms<K: Field>(triples: Vec<(K, K, K)>) {
    for (a, b, c) in triples {
        assert_eq!(
            (a.clone() + b.clone()) + c.clone(),
            a.clone() + (b.clone() + c.clone())
        );
        assert_eq!(
            (a.clone() * b.clone()) * c.clone(),
            a.clone() * (b.clone() * c.clone())
        );
        assert_eq!(
            a.clone() * (b.clone() + c.clone()),
            a.clone() * b.clone() + a.clone() * c.clone()
        );
        assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        // Canonical zero: a - a is the literal zero representation.
        let z = a.clone() - a.clone();
        assert!(z.is_zero());
        assert_eq!(z, K::zero());
        if !a.is_zero() {
            assert!((a.clone() * a.inv().unwrap()).is_one());
        }
    }
}

#[test]
fn field_axioms_hold_exactly() {
    let mut rng = StdRng::seed_from_u64(7);
    let rats = (0..40)
        .map(|_| {
            (
                random_rational(&mut rng),
                random_rational(&mut rng),
                random_rational(&mut rng),
            )
        })
        .collect();
    field_axioms::<Rational>(rats);
    let funcs = (0..25)
        .map(|_| {
            (
                random_ratfunc(&mut rng),
                random_ratfunc(&mut rng),
                random_ratfunc(&mut rng),
            )
        })
        .collect();
    field_axioms::<RatFunc>(funcs);
}

#[test]
fn parse_spec_examples() {
    assert_eq!(RatFunc::parse("3/2").unwrap(), RatFunc::from_rational(&rat(3, 2)));
    assert_eq!(
        RatFunc::parse("q^2 - 1").unwrap(),
        RatFunc::from_poly(QPoly::monomial(Rational::one(), 2) - QPoly::one())
    );
    assert_eq!(
        RatFunc::parse("(q^2-1)/(q)").unwrap(),
        q() - RatFunc::q_pow(-1)
    );
    assert_eq!(RatFunc::parse("q^-1").unwrap(), RatFunc::q_pow(-1));
    assert_eq!(RatFunc::parse("q").unwrap(), q());
    assert_eq!(
        RatFunc::parse("-1/2*q^3").unwrap(),
        RatFunc::from_poly(QPoly::monomial(rat(-1, 2), 3))
    );
    assert_eq!(Rational::parse("3/2").unwrap(), rat(3, 2));
    assert!(Rational::parse("q^2").is_err());
    assert!(RatFunc::parse("q^2 +").is_err());
    assert!(RatFunc::parse("(q)/(q - q)").is_err());
}

#[test]
fn print_parse_round_trip() {
    let mut rng = StdRng::seed_from_u64(23);
    for _ in 0..200 {
        let f = random_ratfunc(&mut rng);
        let s = f.to_string();
        let back = RatFunc::parse(&s).unwrap();
        assert_eq!(back, f, "round-trip failed for `{s}`");
    }
    for _ in 0..100 {
        let r = random_rational(&mut rng);
        assert_eq!(Rational::parse(&r.to_string()).unwrap(), r);
    }
    // Laurent printing keeps a monomial denominator out of fraction form.
    let f = (q() - RatFunc::q_pow(-1)) * RatFunc::q_pow(-1);
    assert_eq!(f.to_string(), "1 - q^-2");
    assert_eq!(RatFunc::parse(&f.to_string()).unwrap(), f);
}

#[test]
fn pow_int_handles_negative_exponents() {
    let x = q() + RatFunc::one();
    let p = x.pow_int(-3).unwrap();
    assert!((p * x.pow_int(3).unwrap()).is_one());
    assert_eq!(RatFunc::zero().pow_int(-1), Err(ScalarError::DivisionByZero));
}
