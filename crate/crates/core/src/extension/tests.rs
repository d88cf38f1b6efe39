use proptest::prelude::*;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::ring::Ring;

fn z() -> Ring {
    Ring::integers()
}

fn ex8(q: u64, r_entry: i64) -> Mat2 {
    let r = Ring::zquad(q).unwrap();
    Mat2::new(&r, Elem::quad(r_entry, 0), Elem::quad(1, -1), Elem::quad(1, 1), Elem::quad(2, 0)).unwrap()
}

fn assert_simple(a: &Mat2, out: &ExtensionOutcome) {
    let ExtensionOutcome::Simple { extension, certificate } = out else { panic!("{a}: expected simple, got {out:?}") };
    let r = a.ring();
    assert_eq!(extension.det(), r.one());
    assert_eq!(&extension.theta(), a);
    assert!(r.is_zero(extension.get(2, 2)));
    assert!(certificate.is_valid_for(a));
}

#[test]
fn assemble_examples() {
    let r = z();
    let a = Mat2::from_ints(&r, [[15, 6], [10, 14]]);
    let ext = assemble_simple_extension(&a, &Certificate::from_ints(&r, [-1, -2, -1, 1])).unwrap();
    assert_eq!(ext, Mat3::from_ints(&r, [[15, 6, -2], [10, 14, 1], [-1, -1, 0]]));

    let i = Mat2::identity(&r);
    let ext = assemble_simple_extension(&i, &Certificate::from_ints(&r, [1, 0, 1, 0])).unwrap();
    assert_eq!(ext, Mat3::from_ints(&r, [[1, 0, 0], [0, 1, -1], [0, 1, 0]]));
    assert_eq!(ext.det(), r.one());

    let a = Mat2::from_ints(&r, [[30, 42], [70, 105]]);
    let ext = assemble_simple_extension(&a, &Certificate::from_ints(&r, [-3, 1, 1, -1])).unwrap();
    assert_eq!(ext, Mat3::from_ints(&r, [[30, 42, 1], [70, 105, 3], [1, 1, 0]]));

    assert_eq!(
        assemble_simple_extension(&i, &Certificate::from_ints(&r, [1, 1, 1, 1])),
        Err(Error::InvalidCertificate)
    );
}

#[test]
fn complete_pair_examples() {
    let r = z();
    let i = Mat2::identity(&r);
    assert_eq!(complete_pair(&i, &r.one(), &r.zero()), Some(Certificate::from_ints(&r, [1, 0, 1, 0])));

    let a = Mat2::from_ints(&r, [[15, 6], [10, 14]]);
    let cert = complete_pair(&a, &r.int(-1), &r.int(-2)).unwrap();
    assert!(cert.is_valid_for(&a));
    assert_eq!(pair::pair_image(&a, &cert.e, &cert.f), (r.int(-35), r.int(-34)));

    let two = Mat2::from_ints(&r, [[2, 0], [0, 2]]);
    for (e, f) in [(1, 0), (0, 1), (3, 5), (-7, 2)] {
        assert!(complete_pair(&two, &r.int(e), &r.int(f)).is_none());
    }

    // Only the transposed test succeeds: (1, 0)·A = (0, 2), but A·(1, 0)ᵀ = (0, 1).
    let a = Mat2::from_ints(&r, [[0, 2], [1, 0]]);
    assert!(pair::complete_direct(&a, &r.one(), &r.zero()).is_none());
    let cert = complete_pair(&a, &r.one(), &r.zero()).unwrap();
    assert!(cert.is_valid_for(&a));
}

#[test]
fn heuristic_examples() {
    let r = z();
    let a = Mat2::from_ints(&r, [[1, 7], [9, 4]]);
    assert_eq!(heuristic_pair(&a), Some((r.one(), r.zero())));
    let ext = assemble_simple_extension(&a, &complete_pair(&a, &r.one(), &r.zero()).unwrap()).unwrap();
    assert_eq!(ext, Mat3::from_ints(&r, [[1, 7, 0], [9, 4, -1], [0, 1, 0]]));

    let a = Mat2::from_ints(&r, [[0, 3], [2, 6]]);
    assert_eq!(heuristic_pair(&a), Some((r.one(), r.int(-1))));
    let ext = assemble_simple_extension(&a, &complete_pair(&a, &r.one(), &r.int(-1)).unwrap()).unwrap();
    assert_eq!(ext, Mat3::from_ints(&r, [[0, 3, -1], [2, 6, -1], [1, 1, 0]]));

    let a = Mat2::from_ints(&r, [[2, 0], [0, 3]]);
    let (e, f) = heuristic_pair(&a).unwrap();
    assert_eq!(r.dot2(&r.int(2), &e, &r.int(3), &f), r.one());
    assert_eq!(pair::pair_image(&a, &e, &f), (r.int(-2), r.int(3)));

    // a | b and a | c.
    let a = Mat2::from_ints(&r, [[5, 10], [15, 7]]);
    let (e, f) = heuristic_pair(&a).unwrap();
    assert!(complete_pair(&a, &e, &f).is_some());
}

#[test]
fn search_examples() {
    let r = z();
    let a = Mat2::from_ints(&r, [[15, 6], [10, 14]]);
    let (e, f) = search_pair(&a, 3).unwrap().unwrap();
    assert!(complete_pair(&a, &e, &f).is_some());
    assert!(search_pair(&Mat2::from_ints(&r, [[2, 4], [6, 8]]), 3).is_err());

    let r6 = Ring::zmod(6).unwrap();
    for rows in [[[2, 3], [3, 2]], [[0, 2], [3, 0]], [[4, 3], [3, 4]]] {
        let a = Mat2::from_ints(&r6, rows);
        let (e, f) = search_pair(&a, 0).unwrap().unwrap();
        assert!(complete_pair(&a, &e, &f).is_some());
    }
}

#[test]
fn simply_extend_examples() {
    let r = z();
    let a = Mat2::from_ints(&r, [[15, 6], [10, 14]]);
    assert_simple(&a, &simply_extend(&a, DEFAULT_BOUND).unwrap());
    let a = Mat2::from_ints(&r, [[30, 42], [70, 105]]);
    assert_simple(&a, &simply_extend(&a, DEFAULT_BOUND).unwrap());

    for d in [-9, 0, 1, 2, 150] {
        let a = Mat2::diag(&r, r.one(), r.int(d));
        assert_simple(&a, &simply_extend(&a, DEFAULT_BOUND).unwrap());
    }

    for (q, re) in [(5, 3), (13, 7)] {
        let b = ex8(q, re);
        let out = simply_extend(&b, DEFAULT_BOUND).unwrap();
        assert!(matches!(out, ExtensionOutcome::NotExtendable { witness: FullnessWitness::FullProof(_) }), "{out:?}");
    }

    let err = simply_extend(&Mat2::from_ints(&r, [[2, 4], [6, 8]]), DEFAULT_BOUND).unwrap_err();
    assert!(matches!(err, Error::NotUnimodular { .. }));
}

#[test]
fn extend_examples() {
    let r = z();
    let a = Mat2::from_ints(&r, [[7, 11], [0, 1]]);
    let out = extend(&a, DEFAULT_BOUND).unwrap();
    let ext = out.extension().expect("extendable");
    assert_eq!((ext.det(), ext.theta()), (r.one(), a.clone()));

    let b = ex8(5, 3);
    assert!(matches!(extend(&b, DEFAULT_BOUND).unwrap(), ExtensionOutcome::NotExtendable { .. }));

    let i = Mat2::identity(&r);
    assert_simple(&i, &extend(&i, DEFAULT_BOUND).unwrap());
}

#[test]
fn lemma_lift_keeps_corner_correction() {
    // The lift from R/(det A) alone, before any upgrade.
    let r = z();
    for rows in [[[7, 11], [0, 1]], [[15, 6], [10, 14]], [[4, 9], [6, 7]]] {
        let a = Mat2::from_ints(&r, rows);
        let Lifted::Some { e, f, extension } = lift_from_quotient(&a).unwrap() else { panic!("{a} extends") };
        assert_eq!((extension.det(), extension.theta()), (r.one(), a.clone()));
        let (u, w) = pair::pair_image(&a, &e, &f);
        assert!(r.is_unimodular(&[u, w, a.det()]));
    }
}

#[test]
fn quadratic_nonzero_det() {
    // Same entries as the full matrix, rearranged: nonzero determinant, extendable.
    let r = Ring::zquad(5).unwrap();
    let a = Mat2::new(&r, Elem::quad(1, 1), Elem::quad(1, -1), Elem::quad(3, 0), Elem::quad(2, 0)).unwrap();
    assert!(!r.is_zero(&a.det()));
    let out = simply_extend(&a, 4).unwrap();
    assert_simple(&a, &out);
    let out = extend(&a, 4).unwrap();
    assert!(out.extension().is_some());
}

#[test]
fn finite_quadratic_quotient() {
    let desc = crate::ring::RingDescriptor::QuotientRing {
        base: Box::new(crate::ring::RingDescriptor::zquad(5)),
        modulus: Elem::quad(1, 1),
    };
    let r = Ring::new(&desc).unwrap();
    let elems = r.elements().unwrap();
    let mut count = 0;
    for a in &elems {
        for d in &elems {
            let m = Mat2::new(&r, a.clone(), r.one(), r.zero(), d.clone()).unwrap();
            assert_simple(&m, &simply_extend(&m, 0).unwrap());
            count += 1;
        }
    }
    assert_eq!(count, 36);
}

#[test]
fn localized_examples() {
    let r = Ring::zloc(21).unwrap();
    let a = Mat2::from_ints(&r, [[6, -10], [0, -15]]);
    assert_simple(&a, &simply_extend(&a, DEFAULT_BOUND).unwrap());
    let a = Mat2::new(&r, r.frac(5, 1).unwrap(), r.int(2), r.int(4), r.frac(1, 2).unwrap()).unwrap();
    assert_simple(&a, &simply_extend(&a, DEFAULT_BOUND).unwrap());
    let a = Mat2::from_ints(&r, [[2, 4], [3, 6]]);
    assert_simple(&a, &simply_extend(&a, DEFAULT_BOUND).unwrap());
}

fn random_unimodular(rng: &mut ChaCha8Rng, r: &Ring, lo: i64, hi: i64) -> Mat2 {
    loop {
        let v: [i64; 4] = std::array::from_fn(|_| rng.gen_range(lo..=hi));
        let m = Mat2::from_ints(r, [[v[0], v[1]], [v[2], v[3]]]);
        if m.is_unimodular() {
            return m;
        }
    }
}

#[test]
fn integer_completeness_sample() {
    let r = z();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..300 {
        let a = random_unimodular(&mut rng, &r, -50, 50);
        assert_simple(&a, &simply_extend(&a, DEFAULT_BOUND).unwrap());
    }
}

#[test]
fn upgrade_realises_simple_extension() {
    let r = z();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut done = 0;
    while done < 100 {
        let a = random_unimodular(&mut rng, &r, -40, 40);
        let det = a.det();
        if r.is_zero(&det) || r.is_unit(&det) {
            continue;
        }
        let Lifted::Some { e, f, .. } = lift_from_quotient(&a).unwrap() else { panic!("{a} extends over Z") };
        let cert = upgrade_to_simple(&a, &e, &f, 0).unwrap().unwrap();
        assert!(complete_pair(&a, &cert.e, &cert.f).is_some());
        done += 1;
    }
}

/// Independent non-fullness test: the row of `(l, m)ᵀ(o, q) = A` is forced to `(e, f)·A`
/// for any Bézout pair `(e, f)` of the column.
fn nonfull_oracle(a: &Mat2) -> bool {
    let r = a.ring();
    let elems = r.elements().unwrap();
    for l in &elems {
        for m in &elems {
            let Some(c) = r.bezout(&[l.clone(), m.clone()]) else { continue };
            let (o, q) = pair::pair_image(a, &c[0], &c[1]);
            let prod = Mat2::new(r, r.mul(l, &o), r.mul(l, &q), r.mul(m, &o), r.mul(m, &q)).unwrap();
            if prod == *a {
                return true;
            }
        }
    }
    false
}

fn all_matrices(r: &Ring) -> Vec<Mat2> {
    let elems = r.elements().unwrap();
    let mut out = Vec::new();
    for a in &elems {
        for b in &elems {
            for c in &elems {
                for d in &elems {
                    out.push(Mat2::new(r, a.clone(), b.clone(), c.clone(), d.clone()).unwrap());
                }
            }
        }
    }
    out
}

#[test]
fn det_zero_equivalence_on_residue_rings() {
    for n in 2..=20u64 {
        let r = Ring::zmod(n).unwrap();
        for a in all_matrices(&r) {
            if !r.is_zero(&a.det()) || !a.is_unimodular() {
                continue;
            }
            let factorised = nonfull_factorize(&a).unwrap().is_factorization();
            let certified = search_pair(&a, 0).unwrap().is_some();
            assert_eq!(factorised, certified, "{a} over Z/{n}");
            assert_eq!(factorised, nonfull_oracle(&a), "{a} over Z/{n}");
        }
    }
}

#[test]
fn transpose_symmetry_on_residue_rings() {
    for n in 2..=12u64 {
        let r = Ring::zmod(n).unwrap();
        for a in all_matrices(&r) {
            if !a.is_unimodular() {
                continue;
            }
            let x = simply_extend(&a, 0).unwrap().is_simple();
            let y = simply_extend(&a.transpose(), 0).unwrap().is_simple();
            assert_eq!(x, y, "{a} over Z/{n}");
        }
    }
}

proptest! {
    #[test]
    fn eq1_identity(v in proptest::array::uniform8(-10i64..=10)) {
        let r = z();
        let [a, b, c, d, e, f, s, t] = v.map(|x| r.int(x));
        let m = Mat2::new(&r, a.clone(), b.clone(), c.clone(), d.clone()).unwrap();
        let q = pair::assemble(&m, &e, &f, &s, &t, &r.zero());
        let first = r.dot2(&r.dot2(&b, &e, &d, &f), &t, &r.dot2(&a, &e, &c, &f), &s);
        let second = r.sum(&[
            r.mul(&a, &r.mul(&e, &s)),
            r.mul(&b, &r.mul(&e, &t)),
            r.mul(&c, &r.mul(&f, &s)),
            r.mul(&d, &r.mul(&f, &t)),
        ]);
        prop_assert_eq!(q.det(), first.clone());
        prop_assert_eq!(first, second);
    }

    #[test]
    fn integer_completeness(v in proptest::array::uniform4(-50i64..=50)) {
        let r = z();
        let a = Mat2::from_ints(&r, [[v[0], v[1]], [v[2], v[3]]]);
        prop_assume!(a.is_unimodular());
        let out = simply_extend(&a, DEFAULT_BOUND).unwrap();
        prop_assert!(out.is_simple());
    }

    #[test]
    fn diagonal_round_trip(v in proptest::array::uniform4(-30i64..=30)) {
        let r = z();
        let a = Mat2::from_ints(&r, [[v[0], v[1]], [v[2], v[3]]]);
        prop_assume!(a.is_unimodular());
        let ExtensionOutcome::Simple { certificate, .. } = simply_extend(&a, DEFAULT_BOUND).unwrap() else {
            panic!("Z is complete")
        };
        let (m, n) = diagonal_reduce(&a, &certificate).unwrap();
        prop_assert_eq!(m.mul(&a).mul(&n), Mat2::diag(&r, r.one(), a.det()));
        prop_assert!(r.is_unit(&m.det()) && r.is_unit(&n.det()));
        let ext = extension_from_diagonal(&m, &n, &a.det()).unwrap();
        prop_assert_eq!(ext.det(), r.one());
        prop_assert_eq!(ext.theta(), a);
        prop_assert!(r.is_zero(ext.get(2, 2)));
    }

    #[test]
    fn localized_completeness(v in proptest::array::uniform4(-30i64..=30), ex in proptest::array::uniform4(0u32..3)) {
        let r = Ring::zloc(10).unwrap();
        let [a, b, c, d] = std::array::from_fn(|i| r.frac(v[i], ex[i]).unwrap());
        let m = Mat2::new(&r, a, b, c, d).unwrap();
        prop_assume!(m.is_unimodular());
        prop_assert!(simply_extend(&m, DEFAULT_BOUND).unwrap().is_simple());
    }
}
