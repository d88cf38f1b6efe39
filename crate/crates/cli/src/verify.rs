//! Golden checks against the fixtures in `fixtures/v1`.

use std::fmt::Write as _;

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use sl3ext::classification::classify_sweep;
use sl3ext::enumeration::{nu_diag_closed_form, nu_enumerate};
use sl3ext::extension::{
    assemble_simple_extension, complete_pair, extend, heuristic_pair, simply_extend, triangular_simple_extension,
    Certificate, ExtensionOutcome, FullnessWitness, DEFAULT_BOUND,
};
use sl3ext::json::{certificate_from_json, elem_from_json, mat2_from_json, mat3_from_json};
use sl3ext::{Mat2, Mat3, Ring};

use crate::{CliError, Format, Output, VerifyArgs};

const FIXTURES: &[(&str, &str)] = &[
    ("diag_7_11", include_str!("../fixtures/v1/diag_7_11.json")),
    ("double_primes", include_str!("../fixtures/v1/double_primes.json")),
    ("triple_primes", include_str!("../fixtures/v1/triple_primes.json")),
    ("zero_corner", include_str!("../fixtures/v1/zero_corner.json")),
    ("upper_triangular", include_str!("../fixtures/v1/upper_triangular.json")),
    ("full_zquad5", include_str!("../fixtures/v1/full_zquad5.json")),
    ("full_zquad13", include_str!("../fixtures/v1/full_zquad13.json")),
    ("lift_7_11", include_str!("../fixtures/v1/lift_7_11.json")),
];

fn fixture(name: &str) -> Value {
    let text = FIXTURES.iter().find(|(n, _)| *n == name).expect("known fixture").1;
    serde_json::from_str(text).expect("fixtures are valid JSON")
}

fn matrix(name: &str) -> (Mat2, Value) {
    let v = fixture(name);
    (mat2_from_json(&v, None).expect("fixture matrix"), v)
}

fn expected_ext(a: &Mat2, v: &Value) -> Mat3 {
    mat3_from_json(&json!({"rows": v["expect"]["extension"]}), Some(a.ring())).expect("fixture extension")
}

/// `det = 1` and the upper-left block is `a`.
fn validates(a: &Mat2, ext: &Mat3) -> bool {
    ext.det() == a.ring().one() && ext.theta() == *a
}

struct Row {
    name: &'static str,
    pass: bool,
    detail: String,
}

type Check = fn(u64) -> (bool, String);

fn diag_multiple_of_four(_: u64) -> (bool, String) {
    let (a, v) = matrix("diag_7_11");
    let r = a.ring().clone();
    let bound = v["expect"]["bound"].as_u64().unwrap() as u32;
    let modulus = elem_from_json(&r, &v["expect"]["modulus"]).unwrap();
    let Ok(sample) = nu_enumerate(&a, bound) else { return (false, "enumeration failed".into()) };
    let all_divisible = sample.values.iter().all(|x| r.divides(&modulus, x));
    let wanted: Vec<_> =
        v["expect"]["contains"].as_array().unwrap().iter().map(|x| elem_from_json(&r, x).unwrap()).collect();
    let present = wanted.iter().all(|x| sample.values.contains(x));
    (all_divisible && present, format!("{} values at bound {bound}", sample.values.len()))
}

fn diag_closed_form(_: u64) -> (bool, String) {
    let r = Ring::integers();
    let mut checked = 0;
    for d in [0, 1, 2, 5] {
        let class = nu_diag_closed_form(&r, &r.int(d)).unwrap();
        let sample = nu_enumerate(&Mat2::diag(&r, r.one(), r.int(d)), 10).unwrap();
        if !sample.values.iter().all(|x| class.contains(x)) {
            return (false, format!("d = {d}: value outside {}", class.show()));
        }
        checked += sample.values.len();
    }
    (true, format!("{checked} values, d in {{0, 1, 2, 5}}"))
}

fn zero_corner_heuristic(_: u64) -> (bool, String) {
    let (a, v) = matrix("zero_corner");
    let r = a.ring().clone();
    let want = expected_ext(&a, &v);
    let Some((e, f)) = heuristic_pair(&a) else { return (false, "no heuristic pair".into()) };
    let built = complete_pair(&a, &e, &f).and_then(|c| assemble_simple_extension(&a, &c).ok());
    let pass = (e, f) == (r.one(), r.int(-1)) && built.as_ref() == Some(&want) && validates(&a, &want);
    (pass, "(e, f) = (1, -1)".into())
}

fn full_matrix(name: &str) -> (bool, String) {
    let (b, v) = matrix(name);
    let r = b.ring().clone();
    let divisors: Vec<_> =
        v["expect"]["divisors"].as_array().unwrap().iter().map(|x| elem_from_json(&r, x).unwrap()).collect();
    match extend(&b, DEFAULT_BOUND) {
        Ok(ExtensionOutcome::NotExtendable { witness: FullnessWitness::FullProof(p) }) => {
            let mut got: Vec<_> = p.divisors.iter().map(|x| r.associate_normal(x)).collect();
            got.sort();
            let pass = got == divisors && p.excluded.len() == p.divisors.len();
            (pass, format!("full; pivot {} has {} divisor classes", r.show(&p.pivot_value), got.len()))
        }
        other => (false, format!("unexpected {other:?}")),
    }
}

fn full_q5(_: u64) -> (bool, String) {
    full_matrix("full_zquad5")
}

fn full_q13(_: u64) -> (bool, String) {
    full_matrix("full_zquad13")
}

/// `ν = -4 + m - 6k + (-6k² + 5k - 1)/m` with `m | -6k² + 5k - 1`.
fn in_zero_corner_family(nu: i64) -> bool {
    (-60i64..=60).any(|k| {
        let p = -6 * k * k + 5 * k - 1;
        (1..=p.abs()).filter(|m| p % m == 0).any(|m| [m, -m].iter().any(|&m| -4 + m - 6 * k + p / m == nu))
    })
}

/// `ν = -88 + 7k - 2m` with `3m - 1 | (1 + 5k)(2k + m)`.
fn in_triangular_family(nu: i64) -> bool {
    (-600i64..=600).any(|m| {
        let num = nu + 88 + 2 * m;
        num % 7 == 0 && ((1 + 5 * (num / 7)) * (2 * (num / 7) + m)) % (3 * m - 1) == 0
    })
}

fn ints(r: &Ring, xs: &[sl3ext::Elem]) -> Option<Vec<i64>> {
    xs.iter().map(|x| i64::try_from(r.lift_int(x)).ok()).collect()
}

fn zero_corner_family(_: u64) -> (bool, String) {
    let (a, _) = matrix("zero_corner");
    let sample = nu_enumerate(&a, 10).unwrap();
    let values = ints(a.ring(), &sample.values).unwrap();
    (
        !values.is_empty() && values.iter().all(|&v| in_zero_corner_family(v)),
        format!("{} values at bound 10", values.len()),
    )
}

fn triangular(_: u64) -> (bool, String) {
    let (a, v) = matrix("upper_triangular");
    let r = a.ring().clone();
    let want = expected_ext(&a, &v);
    let Ok(ext) = triangular_simple_extension(&a) else { return (false, "no triangular extension".into()) };
    let sample = nu_enumerate(&a, 20).unwrap();
    let values = ints(&r, &sample.values).unwrap();
    let in_family = values.iter().all(|&v| in_triangular_family(v));
    let residues = values.iter().any(|v| v.rem_euclid(7) == 3) && values.iter().any(|v| v.rem_euclid(14) == 1);
    let pass = validates(&a, &want) && validates(&a, &ext) && *ext.get(1, 2) == r.int(-1) && in_family && residues;
    (pass, format!("(2,3) entry -1; {} values at bound 20", values.len()))
}

fn double_primes(_: u64) -> (bool, String) {
    let (a, v) = matrix("double_primes");
    let r = a.ring().clone();
    let cert = certificate_from_json(&r, &v["certificate"]).unwrap();
    let want = expected_ext(&a, &v);
    let Ok(ext) = assemble_simple_extension(&a, &cert) else { return (false, "certificate rejected".into()) };
    let (_, nu, det) = ext.char_poly();
    let pass = ext == want
        && det == r.one()
        && nu == elem_from_json(&r, &v["expect"]["nu"]).unwrap()
        && a.det() == elem_from_json(&r, &v["expect"]["det"]).unwrap();
    (pass, format!("nu = {}", r.show(&nu)))
}

fn triple_primes(_: u64) -> (bool, String) {
    let (a, v) = matrix("triple_primes");
    let want = expected_ext(&a, &v);
    let simple = simply_extend(&a, DEFAULT_BOUND).map(|o| o.is_simple()).unwrap_or(false);
    (validates(&a, &want) && simple, "given extension validates; simple".into())
}

fn lift(_: u64) -> (bool, String) {
    let (a, _) = matrix("lift_7_11");
    match extend(&a, DEFAULT_BOUND) {
        Ok(o) => (o.extension().is_some_and(|e| validates(&a, e)), o.status().to_string()),
        Err(e) => (false, e.to_string()),
    }
}

fn eq1_fuzz(seed: u64) -> (bool, String) {
    let r = Ring::integers();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trials = 10_000;
    for _ in 0..trials {
        let v: [i64; 8] = std::array::from_fn(|_| rng.gen_range(-10..=10));
        let [a, b, c, d, e, f, s, t] = v.map(|x| r.int(x));
        let m = Mat2::new(&r, a.clone(), b.clone(), c.clone(), d.clone()).unwrap();
        let cert = Certificate { e: e.clone(), f: f.clone(), s: s.clone(), t: t.clone() };
        let ext = Mat3::new(
            &r,
            [[a.clone(), b.clone(), f.clone()], [c.clone(), d.clone(), r.neg(&e)], [r.neg(&t), s.clone(), r.zero()]],
        )
        .unwrap();
        let factored = r.dot2(&r.dot2(&b, &e, &d, &f), &t, &r.dot2(&a, &e, &c, &f), &s);
        let expanded = r.sum(&[
            r.mul(&a, &r.mul(&e, &s)),
            r.mul(&b, &r.mul(&e, &t)),
            r.mul(&c, &r.mul(&f, &s)),
            r.mul(&d, &r.mul(&f, &t)),
        ]);
        if ext.det() != factored || factored != expanded || cert.is_valid_for(&m) != r.is_one(&expanded) {
            return (false, format!("failed at {v:?}"));
        }
    }
    (true, format!("{trials} octuples, seed {seed}"))
}

pub(crate) fn run(args: &VerifyArgs) -> Result<Output, CliError> {
    let checks: [(&'static str, Check); 11] = [
        ("nu-diag-multiple-of-4", diag_multiple_of_four),
        ("nu-diag-closed-form", diag_closed_form),
        ("zero-corner-heuristic", zero_corner_heuristic),
        ("full-zquad-q5", full_q5),
        ("full-zquad-q13", full_q13),
        ("zero-corner-nu-family", zero_corner_family),
        ("upper-triangular", triangular),
        ("double-primes-golden", double_primes),
        ("triple-primes-golden", triple_primes),
        ("lift-extendable", lift),
        ("det-identity-fuzz", eq1_fuzz),
    ];
    let mut rows: Vec<Row> = checks
        .iter()
        .map(|(name, f)| {
            let (pass, detail) = f(args.seed);
            Row { name, pass, detail }
        })
        .collect();
    let range = args.sweep.clone();
    let sweep = match classify_sweep(range.clone(), sl3ext::classification::DEFAULT_CAP) {
        Ok(reports) => {
            let pass = reports.iter().all(|r| r.all_true() && r.chains_hold());
            Row { name: "zn-sweep", pass, detail: format!("Z/n for n in {}..{}", range.start(), range.end()) }
        }
        Err(e) => Row { name: "zn-sweep", pass: false, detail: e.to_string() },
    };
    rows.push(sweep);

    let all = rows.iter().all(|r| r.pass);
    let stdout = match args.format {
        None => {
            let mut s = String::new();
            for r in &rows {
                writeln!(s, "{:<4}  {:<24}  {}", if r.pass { "PASS" } else { "FAIL" }, r.name, r.detail).unwrap();
            }
            let passed = rows.iter().filter(|r| r.pass).count();
            writeln!(s, "{passed}/{} passed", rows.len()).unwrap();
            s
        }
        Some(Format::Json) => {
            let items: Vec<Value> =
                rows.iter().map(|r| json!({"name": r.name, "pass": r.pass, "detail": r.detail})).collect();
            crate::pretty(&Value::Array(items))
        }
        Some(Format::Csv) => {
            let mut s = String::from("name,pass,detail\n");
            for r in &rows {
                writeln!(s, "{},{},\"{}\"", r.name, r.pass, r.detail.replace('"', "\"\"")).unwrap();
            }
            s
        }
    };
    Ok(Output { code: if all { 0 } else { 1 }, stdout })
}
