//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

use std::time::Instant;

use num_bigint::BigInt;
use serde_json::json;
use supersym::cli::run_args;
use supersym::derivations::diag_binomial_check;
use supersym::superalgebra::normalize_generators;
use supersym::verify::{modular_rank_report, rank_report};
use supersym::{
    canonical_ell, enumerate_semistandard, run_suite, standard_generators, zform_closure_check,
    BasicTableau, Expander, FormalSum, MultiIndex, Partition, Scope, Signature, Suite, Symbol,
    Variant,
};

type Outcome = (bool, String);
type Criterion = (&'static str, fn() -> Outcome);

fn sig(m: usize, n: usize) -> Signature {
    Signature::new(m, n).unwrap()
}

/// (m, n, r) triples of the base scale: m = n = 1, r = 2..4.
const BASE: [(usize, usize, usize); 3] = [(1, 1, 2), (1, 1, 3), (1, 1, 4)];
const RANK_GRID: [(usize, usize, usize); 6] = [
    (1, 1, 2),
    (1, 1, 3),
    (1, 1, 4),
    (2, 1, 3),
    (1, 2, 3),
    (2, 2, 2),
];

fn suites(grid: &[(usize, usize, usize)], names: &[Suite]) -> Outcome {
    let mut checked = 0;
    let mut failures = Vec::new();
    for &(m, n, r) in grid {
        for &suite in names {
            let rep = run_suite(suite, &Scope::new(sig(m, n), r)).unwrap();
            checked += rep.checked;
            if !rep.passed() {
                failures.push(format!(
                    "{} at ({m}|{n},{r}): {} violations",
                    suite.name(),
                    rep.violations.len()
                ));
            }
        }
    }
    if failures.is_empty() {
        (true, format!("{checked} checks"))
    } else {
        (false, failures.join("; "))
    }
}

fn variant_equality() -> Outcome {
    suites(&BASE, &[Suite::VariantEquality])
}

fn lemma_suite() -> Outcome {
    let mut grid = BASE.to_vec();
    grid.push((2, 1, 3));
    suites(
        &grid,
        &[
            Suite::ColumnSign,
            Suite::ColumnGarnir,
            Suite::RowSign,
            Suite::RowGarnir,
        ],
    )
}

fn straightening() -> Outcome {
    suites(
        &BASE,
        &[Suite::StraightenSound, Suite::StraightenTriangular],
    )
}

fn basis_theorem() -> Outcome {
    let mut bad = Vec::new();
    let mut shapes = 0;
    for (m, n, r) in RANK_GRID {
        for shape in Partition::all(r) {
            let v = rank_report(&shape, &sig(m, n)).unwrap();
            shapes += 1;
            let hook = shape.is_hook(m, n);
            let ok = v["match"] == json!(true) && (hook || v["rank"] == json!(0));
            if !ok {
                bad.push(format!("({m}|{n}) {shape}: {v}"));
            }
        }
    }
    (
        bad.is_empty(),
        if bad.is_empty() {
            format!("{shapes} shapes")
        } else {
            bad.join("; ")
        },
    )
}

fn decomposition() -> Outcome {
    let (ok, detail) = suites(&RANK_GRID, &[Suite::Decomposition]);
    let s = sig(1, 1);
    let small: usize = Partition::hooks(2, 1, 1)
        .iter()
        .map(|p| enumerate_semistandard(p, &s).len().pow(2))
        .sum();
    let ok = ok && small == 8 && supersym::superalgebra::monomial_count(&s, 2) == 8;
    (ok, detail)
}

fn capelli() -> Outcome {
    let grid = [
        (1, 1, 1),
        (1, 1, 2),
        (1, 1, 3),
        (1, 1, 4),
        (2, 1, 1),
        (2, 1, 2),
        (2, 1, 3),
    ];
    let (mut diag_checked, mut diag_bad, mut zero) = (0, 0, 0);
    for (m, n, r) in grid {
        let rep = run_suite(Suite::CapelliDiagonal, &Scope::new(sig(m, n), r)).unwrap();
        diag_checked += rep.checked;
        diag_bad += rep.violations.len();
        zero += rep
            .violations
            .iter()
            .filter(|v| v["found"] == json!("zero"))
            .count();
    }
    let (tri_ok, tri_detail) = suites(&grid, &[Suite::CapelliTriangular]);
    let detail = format!(
        "diagonal: {}/{diag_checked} pairs give the canonical image ({zero} of the {diag_bad} failures are zero); triangularity: {}",
        diag_checked - diag_bad,
        if tri_ok { format!("ok, {tri_detail}") } else { tri_detail }
    );
    (diag_bad == 0 && tri_ok, detail)
}

fn integrality() -> Outcome {
    suites(&BASE, &[Suite::ModifiedIntegral, Suite::StraightenIntegral])
}

fn zform() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for r in [2, 3] {
        let s = sig(1, 1);
        let ops = standard_generators(&s, r);
        let even_t = |t: usize| (1..=r).contains(&t);
        let ok = ops.iter().all(|(d, t)| if d.parity(&s) == 0 { even_t(*t) } else { *t == 1 })
            // both sides, both ordered pairs of the two symbols
            && ops.iter().filter(|(_, t)| *t == 1).count() == 4;
        if !ok {
            bad.push(format!("generator set at r={r}"));
        }
        for shape in Partition::hooks(r, 1, 1) {
            let c = zform_closure_check(&shape, &s, &ops).unwrap();
            let d = diag_binomial_check(&shape, &s).unwrap();
            checked += c.checked + d.checked;
            if !c.is_clean() || !d.is_clean() {
                bad.push(format!("r={r} {shape}: {} + {}", c.to_json(), d.to_json()));
            }
        }
    }
    (
        bad.is_empty(),
        if bad.is_empty() {
            format!("{checked} checks")
        } else {
            bad.join("; ")
        },
    )
}

fn modular() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for (m, n, r) in RANK_GRID {
        for shape in Partition::hooks(r, m, n) {
            for p in [3, 5] {
                let v = modular_rank_report(&shape, &sig(m, n), p).unwrap();
                count += 1;
                if v["match"] != json!(true) {
                    bad.push(v.to_string());
                }
            }
        }
    }
    (
        bad.is_empty(),
        if bad.is_empty() {
            format!("{count} ranks")
        } else {
            bad.join("; ")
        },
    )
}

fn explicit_values() -> Outcome {
    let mut bad = Vec::new();
    let p = Symbol::Plain;

    let s20 = sig(2, 0);
    let shape = Partition::new(vec![1, 1]).unwrap();
    let ell = canonical_ell(&shape, &s20).unwrap();
    let e = Expander::new(BasicTableau::new(shape), s20);
    let got = e.expand(&ell, &ell, Variant::default()).unwrap();
    let mut want = FormalSum::<BigInt>::zero();
    for (word, c) in [
        ([(p(1), p(1)), (p(2), p(2))], 1),
        ([(p(1), p(2)), (p(2), p(1))], -1),
    ] {
        let (sign, mon) = normalize_generators(&word, &s20).unwrap();
        want.add_term(mon, BigInt::from(c * i64::from(sign)));
    }
    if got != want {
        bad.push(format!("T(1,1)[l:l] = {got}"));
    }

    let s11 = sig(1, 1);
    let e = Expander::new(BasicTableau::new(Partition::new(vec![2]).unwrap()), s11);
    let z = e
        .expand(
            &MultiIndex::plain(&[1, 2]),
            &MultiIndex::plain(&[2, 2]),
            Variant::default(),
        )
        .unwrap();
    if !z.is_zero() {
        bad.push(format!("T(2)[12:22] = {z}"));
    }

    for (shape, count) in [("2", 2), ("1,1", 2)] {
        let (code, v) = run_args([
            "supersym", "tableaux", "-m", "1", "-n", "1", "--shape", shape,
        ])
        .unwrap();
        if code != 0 || v["count"] != json!(count) {
            bad.push(format!("SSYT({shape}) = {}", v["count"]));
        }
    }
    (
        bad.is_empty(),
        if bad.is_empty() {
            "golden values match".into()
        } else {
            bad.join("; ")
        },
    )
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("variant equality", variant_equality),
        ("sign, invariance and Garnir identities", lemma_suite),
        ("straightening soundness and triangularity", straightening),
        ("basis theorem ranks", basis_theorem),
        ("decomposition count", decomposition),
        ("Capelli diagonal and triangularity", capelli),
        ("integrality of modified symmetrizers", integrality),
        ("Z-form closure", zform),
        ("modular ranks", modular),
        ("explicit small values", explicit_values),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = f();
        let verdict = if ok { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {verdict} {name} [{:.1}s] {detail}",
            k + 1,
            start.elapsed().as_secs_f64()
        );
        failed += usize::from(!ok);
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
