use num_bigint::BigInt;
use proptest::prelude::*;

use super::*;

fn z() -> Ring {
    Ring::integers()
}

fn ints(r: &Ring, xs: &[i64]) -> Vec<Elem> {
    xs.iter().map(|&x| r.int(x)).collect()
}

fn check_witness(r: &Ring, xs: &[Elem]) {
    let c = r.bezout(xs).expect("unimodular");
    let terms: Vec<Elem> = c.iter().zip(xs).map(|(c, x)| r.mul(c, x)).collect();
    assert_eq!(r.sum(&terms), r.one());
}

#[test]
fn capability_table() {
    let caps = z().capabilities();
    assert!(caps.bezout && !caps.finite && caps.gcd && caps.divisor_enumeration);

    let z12 = Ring::zmod(12).unwrap();
    assert!(z12.capabilities().finite);
    assert_eq!(z12.elements().unwrap().len(), 12);

    let zq = Ring::zquad(5).unwrap();
    let quot =
        Ring::new(&RingDescriptor::QuotientRing { base: Box::new(zq.descriptor().clone()), modulus: Elem::quad(1, 1) })
            .unwrap();
    assert_eq!(quot.size(), Some(BigInt::from(6)));
    assert_eq!(quot.elements().unwrap().len(), 6);
}

#[test]
fn descriptor_rejections() {
    assert!(Ring::zmod(1).is_err());
    assert!(Ring::zloc(1).is_err());
    assert!(Ring::zquad(0).is_err());
    let zero_mod = RingDescriptor::QuotientRing { base: Box::new(RingDescriptor::Integers), modulus: Elem::int(0) };
    assert_eq!(Ring::new(&zero_mod).unwrap_err(), Error::ZeroModulus);
    let bad_base = RingDescriptor::QuotientRing { base: Box::new(RingDescriptor::zmod(6)), modulus: Elem::int(2) };
    assert!(matches!(Ring::new(&bad_base), Err(Error::InvalidDescriptor(_))));
}

#[test]
fn units() {
    assert!(z().is_unit(&z().int(1)));
    assert!(z().is_unit(&z().int(-1)));
    assert!(!z().is_unit(&z().int(2)));
    let z6 = Ring::zmod(6).unwrap();
    assert!(z6.is_unit(&z6.int(5)));
    let zq = Ring::zquad(5).unwrap();
    assert!(!zq.is_unit(&Elem::quad(1, 1)));
    assert!(zq.is_unit(&Elem::quad(-1, 0)));
    let gauss = Ring::zquad(1).unwrap();
    assert!(gauss.is_unit(&Elem::quad(0, 1)));
    assert!(gauss.is_unit(&Elem::quad(0, -1)));
    let loc = Ring::zloc(21).unwrap();
    assert!(loc.is_unit(&loc.int(3)));
    assert!(loc.is_unit(&loc.int(-49)));
    assert!(!loc.is_unit(&loc.int(6)));
}

#[test]
fn bezout_examples() {
    let xs = ints(&z(), &[15, 6, 10, 14]);
    check_witness(&z(), &xs);
    assert!(z().bezout(&ints(&z(), &[2, 4])).is_none());

    let zq = Ring::zquad(5).unwrap();
    let xs = vec![Elem::quad(3, 0), Elem::quad(1, -1), Elem::quad(1, 1), Elem::quad(2, 0)];
    check_witness(&zq, &xs);
    // The ideal (2, 1+θ) is the non-principal prime over 2.
    assert!(zq.bezout(&[Elem::quad(2, 0), Elem::quad(1, 1)]).is_none());
    assert!(zq.bezout(&[zq.zero(), zq.zero()]).is_none());
}

#[test]
fn unimodular_examples() {
    assert!(z().is_unimodular(&ints(&z(), &[6, 10, 15])));
    let z4 = Ring::zmod(4).unwrap();
    assert!(!z4.is_unimodular(&[z4.int(2)]));
    assert!(!z().is_unimodular(&[z().int(0)]));
}

#[test]
fn localized_arithmetic() {
    let loc = Ring::zloc(21).unwrap();
    let third = loc.inverse(&loc.int(3)).unwrap();
    assert_eq!(third, Elem::Frac { num: 7.into(), exp: 1 });
    assert_eq!(loc.mul(&third, &loc.int(3)), loc.one());
    assert_eq!(loc.frac(42, 2).unwrap(), Elem::Frac { num: 2.into(), exp: 1 });
    assert_eq!(loc.frac(441, 2).unwrap(), loc.one());
    let xs = vec![loc.int(6), loc.int(15)];
    check_witness(&loc, &xs);
    assert!(!loc.is_unimodular(&[loc.int(10), loc.int(4)]));
    let q = loc.divide_exact(&loc.int(5), &loc.int(15)).unwrap();
    assert_eq!(loc.mul(&q, &loc.int(15)), loc.int(5));
    assert!(loc.divide_exact(&loc.int(5), &loc.int(10)).is_none());
    let q = loc.divide_exact(&loc.frac(1, 1).unwrap(), &loc.int(-9)).unwrap();
    assert_eq!(loc.mul(&q, &loc.int(-9)), loc.frac(1, 1).unwrap());
}

#[test]
fn jacobson_examples() {
    assert!(!z().jacobson_contains(&z().int(3)));
    assert!(z().jacobson_contains(&z().int(0)));
    let z12 = Ring::zmod(12).unwrap();
    assert!(z12.jacobson_contains(&z12.int(6)));
    assert!(!z12.jacobson_contains(&z12.int(4)));
}

#[test]
fn jacobson_matches_definition_on_residue_rings() {
    for n in 2..=30u64 {
        let r = Ring::zmod(n).unwrap();
        let els = r.elements().unwrap();
        for x in &els {
            let by_definition = els.iter().all(|y| r.is_unit(&r.sub(&r.one(), &r.mul(x, y))));
            assert_eq!(r.jacobson_contains(x), by_definition, "n={n} x={x:?}");
        }
    }
}

#[test]
fn jacobson_of_quadratic_quotient() {
    let zq = Ring::zquad(5).unwrap();
    let r = zq.quotient_ring(&Elem::quad(2, 0)).unwrap();
    // ℤ[θ]/(2) with θ² = -5 ≡ 1 is F2[θ]/(θ+1)², local with radical {0, 1+θ}.
    let rad: Vec<Elem> = r.elements().unwrap().into_iter().filter(|x| r.jacobson_contains(x)).collect();
    assert_eq!(rad, vec![Elem::quad(0, 0), Elem::quad(1, 1)]);
}

#[test]
fn bezout_complete_on_residue_rings() {
    for n in 2..=30u64 {
        let r = Ring::zmod(n).unwrap();
        for x in 0..n {
            let single = (0..n).any(|c| c * x % n == 1 % n);
            assert_eq!(r.is_unimodular(&[r.int(x as i64)]), single);
            for y in 0..n {
                let exhaustive = (0..n).any(|c| (0..n).any(|d| (c * x + d * y) % n == 1));
                assert_eq!(r.is_unimodular(&[r.int(x as i64), r.int(y as i64)]), exhaustive, "n={n} ({x},{y})");
            }
        }
    }
}

#[test]
fn divisor_examples() {
    assert_eq!(z().divisors_up_to_units(&z().int(6)).unwrap(), ints(&z(), &[1, 2, 3, 6]));
    let zq = Ring::zquad(5).unwrap();
    assert_eq!(zq.divisors_up_to_units(&Elem::quad(2, 0)).unwrap(), vec![Elem::quad(1, 0), Elem::quad(2, 0)]);
    assert_eq!(zq.divisors_up_to_units(&Elem::quad(1, 1)).unwrap(), vec![Elem::quad(1, 0), Elem::quad(1, 1)]);
    assert!(zq.divisors_up_to_units(&zq.zero()).is_err());
    assert!(Ring::zmod(6).unwrap().divisors_up_to_units(&Elem::int(2)).is_err());
}

#[test]
fn quadratic_divisors_match_brute_force() {
    let q = 5i64;
    let zq = Ring::zquad(5).unwrap();
    for x in -7i64..=7 {
        for y in -3i64..=3 {
            let n = x * x + q * y * y;
            if n == 0 || n > 50 {
                continue;
            }
            let target = Elem::quad(x, y);
            let mut brute: Vec<Elem> = Vec::new();
            for u in -n..=n {
                for v in -n..=n {
                    if u * u + q * v * v > n || (u == 0 && v == 0) {
                        continue;
                    }
                    let d = Elem::quad(u, v);
                    if zq.divides(&d, &target) {
                        let rep = zq.associate_normal(&d);
                        if !brute.contains(&rep) {
                            brute.push(rep);
                        }
                    }
                }
            }
            let mut got = zq.divisors_up_to_units(&target).unwrap();
            for d in &got {
                assert!(zq.divides(d, &target));
                assert_eq!(n % zq.norm(d).unwrap().to_string().parse::<i64>().unwrap(), 0);
            }
            got.sort();
            brute.sort();
            assert_eq!(got, brute, "divisors of {x}+{y}θ");
        }
    }
}

#[test]
fn gaussian_associates() {
    let g = Ring::zquad(1).unwrap();
    // 2 = -θ(1+θ)², so its divisors up to units are 1, 1+θ, 2.
    assert_eq!(
        g.divisors_up_to_units(&Elem::quad(2, 0)).unwrap(),
        vec![Elem::quad(1, 0), Elem::quad(1, 1), Elem::quad(2, 0)]
    );
}

#[test]
fn quotient_examples() {
    let q = z().quotient(&z().int(150)).unwrap();
    assert_eq!(q.target().descriptor(), &RingDescriptor::zmod(150));

    let loc = Ring::zloc(21).unwrap();
    let q = loc.quotient(&loc.int(90)).unwrap();
    assert_eq!(q.target().descriptor(), &RingDescriptor::zmod(10));

    let zq = Ring::zquad(5).unwrap();
    let r = zq.quotient_ring(&Elem::quad(0, 1)).unwrap();
    assert_eq!(r.size(), Some(BigInt::from(5)));

    assert_eq!(z().quotient(&z().int(-1)).unwrap_err(), Error::ZeroRing);
    assert_eq!(loc.quotient(&loc.int(63)).unwrap_err(), Error::ZeroRing);
    assert_eq!(z().quotient(&z().zero()).unwrap_err(), Error::ZeroModulus);
    let z12 = Ring::zmod(12).unwrap();
    assert_eq!(z12.quotient_ring(&z12.int(8)).unwrap().descriptor(), &RingDescriptor::zmod(4));
    assert_eq!(z12.quotient(&z12.int(5)).unwrap_err(), Error::ZeroRing);
}

#[test]
fn localized_quotient_is_a_ring_map() {
    let loc = Ring::zloc(21).unwrap();
    let q = loc.quotient(&loc.int(90)).unwrap();
    let t = q.target();
    let units = t.elements().unwrap().iter().filter(|x| t.is_unit(x)).count();
    assert_eq!(units, 4);
    let samples: Vec<Elem> =
        (-6..=6).flat_map(|n| (0..3).map(move |e| (n, e))).map(|(n, e)| loc.frac(n, e).unwrap()).collect();
    for x in &samples {
        for y in &samples {
            assert_eq!(q.reduce(&loc.add(x, y)), t.add(&q.reduce(x), &q.reduce(y)));
            assert_eq!(q.reduce(&loc.mul(x, y)), t.mul(&q.reduce(x), &q.reduce(y)));
        }
        // Units of ℤ[1/21] stay units in the quotient.
        if loc.is_unit(x) {
            assert!(t.is_unit(&q.reduce(x)));
        }
    }
    assert_eq!(q.reduce(&loc.int(90)), t.zero());
    assert_eq!(q.reduce(&loc.frac(90, 3).unwrap()), t.zero());
}

#[test]
fn enumeration() {
    let z3 = Ring::zmod(3).unwrap();
    assert_eq!(z3.elements().unwrap(), ints(&z3, &[0, 1, 2]));
    assert!(z().elements().is_err());
    let zq = Ring::zquad(5).unwrap();
    let r = zq.quotient_ring(&Elem::quad(2, 0)).unwrap();
    assert_eq!(r.elements().unwrap(), vec![Elem::quad(0, 0), Elem::quad(1, 0), Elem::quad(0, 1), Elem::quad(1, 1)]);
    // θ² = -5 ≡ 1 (mod 2).
    let t = Elem::quad(0, 1);
    assert_eq!(r.mul(&t, &t), r.one());
}

#[test]
fn quadratic_quotient_residues_are_canonical() {
    let zq = Ring::zquad(5).unwrap();
    let m = Elem::quad(1, 1);
    let r = zq.quotient_ring(&m).unwrap();
    assert_eq!(r.coerce(&m).unwrap(), r.zero());
    assert_eq!(r.coerce(&zq.mul(&m, &Elem::quad(4, -7))).unwrap(), r.zero());
    for x in r.elements().unwrap() {
        assert_eq!(r.coerce(&x).unwrap(), x);
    }
}

#[test]
fn show_formats() {
    let zq = Ring::zquad(5).unwrap();
    assert_eq!(zq.show(&Elem::quad(1, -1)), "1-θ");
    assert_eq!(zq.show(&Elem::quad(1, 1)), "1+θ");
    assert_eq!(zq.show(&Elem::quad(0, 3)), "3θ");
    let loc = Ring::zloc(21).unwrap();
    assert_eq!(loc.show(&loc.inverse(&loc.int(3)).unwrap()), "7/21");
}

proptest! {
    #[test]
    fn integer_bezout_is_sound(xs in proptest::collection::vec(-500i64..500, 1..6)) {
        let r = z();
        let els = ints(&r, &xs);
        let g = xs.iter().fold(0i64, |g, &x| num_integer::gcd(g, x));
        prop_assert_eq!(r.is_unimodular(&els), g == 1);
    }

    #[test]
    fn quadratic_bezout_matches_ideal_norm_test(a in -6i64..6, b in -6i64..6, c in -6i64..6, d in -6i64..6) {
        // (α, β) is unimodular iff β is invertible in ℤ[θ]/(α); the inverse is found by
        // scanning the finite quotient, independently of the lattice witness.
        let zq = Ring::zquad(5).unwrap();
        let x = Elem::quad(a, b);
        let y = Elem::quad(c, d);
        let got = zq.is_unimodular(&[x.clone(), y.clone()]);
        let expected = if zq.is_zero(&x) {
            zq.is_unit(&y)
        } else if zq.is_unit(&x) {
            true
        } else {
            let quo = zq.quotient(&x).unwrap();
            let t = quo.target();
            let yb = quo.reduce(&y);
            t.elements().unwrap().iter().any(|z| t.mul(&yb, z) == t.one())
        };
        prop_assert_eq!(got, expected);
    }
}
