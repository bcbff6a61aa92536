use mpoly::{
    binomial_mod_p, multiplicity_at, roots_univariate, Elem, Field, Monomial, MpolyError, Poly, PolyRing,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn gf(q: u32) -> Field {
    Field::of_order(q).unwrap()
}

#[test]
fn arithmetic_examples() {
    let r7 = PolyRing::lex(&gf(7), &["x", "y"]).unwrap();
    let x_plus_y = r7.parse("x+y").unwrap();
    let x_minus_y = r7.parse("x-y").unwrap();
    assert_eq!(&x_plus_y + &x_minus_y, r7.parse("2*x").unwrap());

    let r2 = PolyRing::lex(&gf(2), &["x", "y"]).unwrap();
    assert_eq!(r2.parse("(x+y)^2").unwrap(), r2.parse("x^2+y^2").unwrap());
    let x = r2.var(0);
    assert!((&x * &r2.zero()).is_zero());

    let other = PolyRing::lex(&gf(2), &["a"]).unwrap();
    assert_eq!(x.try_add(&other.var(0)), Err(MpolyError::RingMismatch));
}

#[test]
fn leading_terms() {
    let r = PolyRing::lex(&gf(7), &["x", "y"]).unwrap();
    let p = r.parse("x^2*y + y^3").unwrap();
    let (m, c) = p.leading_term().unwrap();
    assert_eq!(m, Monomial::from_exponents(&[0, 3]).unwrap());
    assert_eq!(c, Elem::ONE);
    let three = r.parse("3").unwrap();
    assert_eq!(three.leading_term().unwrap(), (Monomial::ONE, r.field().from_int(3)));
    assert_eq!(r.zero().try_leading_term(), Err(MpolyError::ZeroPolynomial));

    let ring = PolyRing::lex(&gf(4), &["s1", "s2", "s3", "s4", "s5", "x"]).unwrap();
    let g5 = ring.parse("x^2*s5 + x*(s5*s4*s2^2 + s1) + s5^3*s3 + s2").unwrap();
    let x = ring.var_index("x").unwrap();
    assert_eq!(g5.leading_poly(x).unwrap(), ring.parse("s5").unwrap());
}

#[test]
fn evaluation_and_specialization() {
    let f4 = gf(4);
    let r = PolyRing::lex(&f4, &["x", "y"]).unwrap();
    let curve = r.parse("y^2+y+x^3").unwrap();
    let a = f4.generator();
    assert_eq!(curve.evaluate(&[Elem::ONE, a]), Elem::ZERO);
    assert_eq!(curve.evaluate_named(&[("x", Elem::ONE), ("y", a)]).unwrap(), Elem::ZERO);
    assert_eq!(r.zero().evaluate(&[a, a]), Elem::ZERO);
    assert!(matches!(curve.evaluate_named(&[("x", a)]), Err(MpolyError::UnassignedVariable(_))));
    assert!(matches!(curve.specialize_named(&[("z", a)]), Err(MpolyError::UnknownVariable(_))));

    let rs = PolyRing::lex(&f4, &["s1", "x"]).unwrap();
    let p = rs.parse("x^2+x*s1").unwrap();
    assert_eq!(p.specialize_named(&[("s1", Elem::ZERO)]).unwrap(), rs.parse("x^2").unwrap());
}

#[test]
fn hasse_derivative_examples() {
    let r2 = PolyRing::lex(&gf(2), &["x"]).unwrap();
    assert!(r2.parse("x^2").unwrap().hasse_derivative(0, 1).is_zero());
    let r7 = PolyRing::lex(&gf(7), &["x"]).unwrap();
    assert_eq!(r7.parse("x^5").unwrap().hasse_derivative(0, 2), r7.parse("3*x^3").unwrap());
    let p = r7.parse("x^4+2*x+1").unwrap();
    assert_eq!(p.hasse_derivative(0, 0), p);
}

/// Binomials computed by Pascal's rule over the integers, reduced mod p.
#[test]
fn lucas_binomials_match_pascal_triangle() {
    let mut rows: Vec<Vec<u128>> = vec![vec![1]];
    for n in 1..=60usize {
        let prev = &rows[n - 1];
        let mut row = vec![1u128; n + 1];
        for k in 1..n {
            row[k] = prev[k - 1] + prev[k];
        }
        rows.push(row);
    }
    for p in [2u64, 3, 5, 7] {
        for (n, row) in rows.iter().enumerate() {
            for (k, &b) in row.iter().enumerate() {
                assert_eq!(binomial_mod_p(n as u64, k as u64, p), (b % p as u128) as u64, "C({n},{k}) mod {p}");
            }
            assert_eq!(binomial_mod_p(n as u64, n as u64 + 1, p), 0);
        }
    }
}

#[test]
fn multiplicity_examples() {
    let r2 = PolyRing::lex(&gf(2), &["x"]).unwrap();
    assert_eq!(multiplicity_at(&r2.parse("(x+1)^2").unwrap(), 0, Elem::ONE).unwrap(), 2);

    let f4 = gf(4);
    let a = f4.generator();
    let r4 = PolyRing::lex(&f4, &["y"]).unwrap();
    let p = r4.parse("y^2+g").unwrap();
    assert_eq!(multiplicity_at(&p, 0, f4.add(a, Elem::ONE)).unwrap(), 2);
    assert_eq!(multiplicity_at(&r4.parse("y^2+y+1").unwrap(), 0, a).unwrap(), 1);
    assert_eq!(multiplicity_at(&r4.parse("y^2+y+1").unwrap(), 0, Elem::ONE).unwrap(), 0);
    assert_eq!(multiplicity_at(&r4.zero(), 0, a), Err(MpolyError::ZeroPolynomial));
}

#[test]
fn root_finding_examples() {
    let f4 = gf(4);
    let a = f4.generator();
    let r4 = PolyRing::lex(&f4, &["x"]).unwrap();
    assert_eq!(
        roots_univariate(&r4.parse("x^2+x+1").unwrap(), 0).unwrap(),
        vec![(a, 1), (f4.add(a, Elem::ONE), 1)]
    );
    assert_eq!(roots_univariate(&r4.parse("x^2").unwrap(), 0).unwrap(), vec![(Elem::ZERO, 2)]);

    let f7 = gf(7);
    let r7 = PolyRing::lex(&f7, &["y"]).unwrap();
    assert_eq!(
        roots_univariate(&r7.parse("y^2-3*y+2").unwrap(), 0).unwrap(),
        vec![(Elem::ONE, 1), (f7.from_int(2), 1)]
    );
    let r2 = PolyRing::lex(&f4, &["x", "y"]).unwrap();
    assert_eq!(roots_univariate(&r2.parse("x*y").unwrap(), 0), Err(MpolyError::NotUnivariate));
}

/// Divides by `(x - r)` repeatedly using schoolbook division.
fn divides_power(coeffs: &[Elem], r: Elem, m: usize, f: &Field) -> bool {
    let mut c = coeffs.to_vec();
    for _ in 0..m {
        if c.len() < 2 {
            // a nonzero constant is not divisible by a linear factor
            return false;
        }
        // synthetic division by (x - r)
        let n = c.len() - 1;
        let mut q = vec![Elem::ZERO; n];
        let mut carry = Elem::ZERO;
        for i in (0..=n).rev() {
            let v = f.add(c[i], carry);
            if i == 0 {
                if !v.is_zero() {
                    return false;
                }
            } else {
                q[i - 1] = v;
                carry = f.mul(v, r);
            }
        }
        c = q;
    }
    true
}

#[test]
fn multiplicity_matches_explicit_division() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for q in [2, 3, 4, 5, 7, 8, 9] {
        let f = gf(q);
        let ring = PolyRing::lex(&f, &["x"]).unwrap();
        let els = f.elements();
        for _ in 0..200 {
            let deg = rng.gen_range(1..=8);
            let mut coeffs: Vec<Elem> = (0..deg).map(|_| els[rng.gen_range(0..els.len())]).collect();
            coeffs.push(els[rng.gen_range(1..els.len())]);
            let p = Poly::from_univariate(&ring, 0, &coeffs);
            for &r in &els {
                let m = multiplicity_at(&p, 0, r).unwrap() as usize;
                assert!(divides_power(&coeffs, r, m, &f), "(x-r)^{m} must divide");
                assert!(!divides_power(&coeffs, r, m + 1, &f), "(x-r)^{} must not divide", m + 1);
            }
        }
    }
}

#[test]
fn hasse_leibniz_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for q in [2, 3, 4, 7, 8, 9] {
        let f = gf(q);
        let ring = PolyRing::lex(&f, &["x"]).unwrap();
        let els = f.elements();
        let random_poly = |rng: &mut ChaCha8Rng| {
            let deg = rng.gen_range(0..=6);
            let coeffs: Vec<Elem> = (0..=deg).map(|_| els[rng.gen_range(0..els.len())]).collect();
            Poly::from_univariate(&ring, 0, &coeffs)
        };
        for _ in 0..100 {
            let a = random_poly(&mut rng);
            let b = random_poly(&mut rng);
            let ab = &a * &b;
            for n in 0..=4 {
                let mut rhs = ring.zero();
                for i in 0..=n {
                    rhs = &rhs + &(&a.hasse_derivative(0, i) * &b.hasse_derivative(0, n - i));
                }
                assert_eq!(ab.hasse_derivative(0, n), rhs);
            }
        }
    }
}

#[test]
fn term_order_laws() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let random_mono = |rng: &mut ChaCha8Rng| {
        let exps: Vec<u32> = (0..8).map(|_| rng.gen_range(0..6)).collect();
        (Monomial::from_exponents(&exps).unwrap(), exps)
    };
    // lexicographic comparison with later variables bigger, written out directly
    let lex = |a: &[u32], b: &[u32]| {
        for i in (0..a.len()).rev() {
            if a[i] != b[i] {
                return a[i].cmp(&b[i]);
            }
        }
        std::cmp::Ordering::Equal
    };
    for _ in 0..2000 {
        let (u, ue) = random_mono(&mut rng);
        let (v, ve) = random_mono(&mut rng);
        let (w, _) = random_mono(&mut rng);
        assert_eq!(u.cmp(&v), lex(&ue, &ve));
        assert!(Monomial::ONE <= u);
        if u < v {
            assert!(u * w < v * w);
        }
        assert_eq!(u.cmp(&v) == std::cmp::Ordering::Equal, u == v);
        let l = u.lcm(v);
        assert!(u.divides(l) && v.divides(l));
        let g = u.gcd(v);
        assert!(g.divides(u) && g.divides(v));
        assert_eq!(g * l, u * v);
        assert_eq!(u.is_coprime(v), g.is_one());
        let expect_div = ue.iter().zip(&ve).all(|(a, b)| a <= b);
        assert_eq!(u.divides(v), expect_div);
    }
}

#[test]
fn parse_and_format() {
    let f4 = gf(4);
    let r = PolyRing::lex(&f4, &["x", "y"]).unwrap();
    let p = r.parse("g^2*x + 1").unwrap();
    let alpha_plus_one = f4.add(f4.generator(), Elem::ONE);
    assert_eq!(p.terms()[0].1, alpha_plus_one);
    assert_eq!(r.parse("y^2+y+x^3").unwrap().to_text(), "y^2+y+x^3");

    let f8 = gf(8);
    let r8 = PolyRing::lex(&f8, &["x", "y"]).unwrap();
    let nt = r8.parse("x^7-y^4-y^2-y").unwrap();
    assert_eq!(nt.len(), 4);
    assert_eq!(r8.parse(&nt.to_text()).unwrap(), nt);

    let r7 = PolyRing::lex(&gf(7), &["x", "y"]).unwrap();
    let q = r7.parse(" - ( y - 3 ) * ( y^2 - 1 ) + 5 * x ").unwrap();
    assert_eq!(r7.parse(&q.to_text()).unwrap(), q);
    assert_eq!(r7.parse("y^2-3*y+2").unwrap().to_text(), "y^2-3*y+2");

    for bad in ["x+", "x*(y", "z", "x^", "x y", "3x", "x^200"] {
        assert!(matches!(r7.parse(bad), Err(MpolyError::Parse { .. })), "{bad} should fail");
    }
    match r7.parse("x + zz") {
        Err(MpolyError::Parse { position, .. }) => assert_eq!(position, 4),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn random_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for q in [2, 4, 7, 8, 9] {
        let f = gf(q);
        let ring = PolyRing::lex(&f, &["s1", "s2", "x_2", "y2"]).unwrap();
        let els = f.elements();
        for _ in 0..200 {
            let terms = (0..rng.gen_range(0..8))
                .map(|_| {
                    let exps: Vec<u32> = (0..4).map(|_| rng.gen_range(0..5)).collect();
                    (Monomial::from_exponents(&exps).unwrap(), els[rng.gen_range(0..els.len())])
                })
                .collect();
            let p = Poly::from_terms(&ring, terms);
            assert_eq!(ring.parse(&p.to_text()).unwrap(), p, "{}", p);
        }
    }
}
