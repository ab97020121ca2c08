//! Named verification suites. Each suite sweeps one identity exhaustively
//! over a given `(m|n, r)` (optionally a single shape) and reports how many
//! cases it checked and which ones failed.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::capelli::CapelliEvaluator;
use crate::combinatorics::{
    combinations, dominance_leq, enumerate_semistandard, garnir_transversal, next_permutation,
    Axis, BasicTableau, DominanceStats, MultiIndex, Partition, Perm,
};
use crate::derivations::{
    diag_binomial_check, standard_generators, zform_closure_check, ZFormReport,
};
use crate::error::{Error, Result};
use crate::exact_linalg::{rank_exact, reduce_mod_p};
use crate::straightening::Straightener;
use crate::superalgebra::{monomial_count, normalize_monomial, star_action, FormalSum, Signature};
use crate::symmetrizer::{Expander, Variant};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    StarCocycle,
    ChiEquivalence,
    VariantEquality,
    ColumnSign,
    ColumnGarnir,
    RowSign,
    RowGarnir,
    Garnir,
    StraightenSound,
    StraightenTriangular,
    CapelliDiagonal,
    CapelliTriangular,
    RankTheorem,
    Decomposition,
    ModifiedIntegral,
    StraightenIntegral,
    ModularRank,
    ZformClosure,
    DiagBinomial,
}

impl Suite {
    pub const ALL: [Suite; 19] = [
        Suite::StarCocycle,
        Suite::ChiEquivalence,
        Suite::VariantEquality,
        Suite::ColumnSign,
        Suite::ColumnGarnir,
        Suite::RowSign,
        Suite::RowGarnir,
        Suite::Garnir,
        Suite::StraightenSound,
        Suite::StraightenTriangular,
        Suite::CapelliDiagonal,
        Suite::CapelliTriangular,
        Suite::RankTheorem,
        Suite::Decomposition,
        Suite::ModifiedIntegral,
        Suite::StraightenIntegral,
        Suite::ModularRank,
        Suite::ZformClosure,
        Suite::DiagBinomial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::StarCocycle => "star-cocycle",
            Suite::ChiEquivalence => "chi-equivalence",
            Suite::VariantEquality => "variant-equality",
            Suite::ColumnSign => "lemma-l1",
            Suite::ColumnGarnir => "lemma-l2",
            Suite::RowSign => "lemma-l3",
            Suite::RowGarnir => "lemma-l4",
            Suite::Garnir => "garnir",
            Suite::StraightenSound => "straighten-sound",
            Suite::StraightenTriangular => "straighten-triangular",
            Suite::CapelliDiagonal => "capelli-p41",
            Suite::CapelliTriangular => "capelli-p42",
            Suite::RankTheorem => "rank-thm41",
            Suite::Decomposition => "decomposition",
            Suite::ModifiedIntegral => "modified-integral",
            Suite::StraightenIntegral => "straighten-integral",
            Suite::ModularRank => "modular-rank",
            Suite::ZformClosure => "zform-closure",
            Suite::DiagBinomial => "diag-binomial",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown suite `{s}`")))
    }
}

/// What a suite sweeps over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scope {
    pub sig: Signature,
    pub r: usize,
    pub shape: Option<Partition>,
    /// Characteristics used by the modular suite; empty means 3 and 5.
    pub primes: Vec<u64>,
}

impl Scope {
    pub fn new(sig: Signature, r: usize) -> Self {
        Scope {
            sig,
            r,
            shape: None,
            primes: Vec::new(),
        }
    }

    pub fn with_shape(mut self, shape: Partition) -> Self {
        self.shape = Some(shape);
        self
    }

    pub fn with_primes(mut self, primes: Vec<u64>) -> Self {
        self.primes = primes;
        self
    }

    fn shapes(&self) -> Vec<Partition> {
        match &self.shape {
            Some(s) => vec![s.clone()],
            None => Partition::all(self.r),
        }
    }

    fn hooks(&self) -> Vec<Partition> {
        self.shapes()
            .into_iter()
            .filter(|s| s.is_hook(self.sig.m, self.sig.n))
            .collect()
    }

    fn words(&self) -> Vec<MultiIndex> {
        MultiIndex::all_plain(&self.sig, self.r)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checked: usize,
    pub violations: Vec<Value>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        SuiteReport {
            suite,
            checked: 0,
            violations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> Value) {
        self.checked += 1;
        if !ok {
            self.violations.push(detail());
        }
    }

    fn absorb(&mut self, shape: &Partition, z: ZFormReport) {
        self.checked += z.checked;
        for v in z.violations {
            let mut entry = v.to_json();
            entry["shape"] = json!(shape.to_string());
            self.violations.push(entry);
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite.name(),
            "checked": self.checked,
            "violations": self.violations,
            "passed": self.passed(),
        })
    }
}

pub fn run_suite(suite: Suite, scope: &Scope) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(suite);
    match suite {
        Suite::StarCocycle => star_cocycle(scope, &mut rep)?,
        Suite::ChiEquivalence => chi_equivalence(scope, &mut rep)?,
        Suite::VariantEquality => variant_equality(scope, &mut rep)?,
        Suite::ColumnSign => line_sign(scope, Axis::Column, &mut rep)?,
        Suite::RowSign => line_sign(scope, Axis::Row, &mut rep)?,
        Suite::ColumnGarnir => garnir(scope, Axis::Column, &mut rep)?,
        Suite::RowGarnir => garnir(scope, Axis::Row, &mut rep)?,
        Suite::Garnir => {
            garnir(scope, Axis::Column, &mut rep)?;
            garnir(scope, Axis::Row, &mut rep)?;
        }
        Suite::StraightenSound => straighten_sound(scope, &mut rep)?,
        Suite::StraightenTriangular => straighten_triangular(scope, &mut rep)?,
        Suite::CapelliDiagonal => capelli_diagonal(scope, &mut rep)?,
        Suite::CapelliTriangular => capelli_triangular(scope, &mut rep)?,
        Suite::RankTheorem => rank_theorem(scope, &mut rep)?,
        Suite::Decomposition => decomposition(scope, &mut rep),
        Suite::ModifiedIntegral => modified_integral(scope, &mut rep)?,
        Suite::StraightenIntegral => straighten_integral(scope, &mut rep)?,
        Suite::ModularRank => modular_rank(scope, &mut rep)?,
        Suite::ZformClosure => {
            for shape in scope.hooks() {
                let z = zform_closure_check(
                    &shape,
                    &scope.sig,
                    &standard_generators(&scope.sig, scope.r),
                )?;
                rep.absorb(&shape, z);
            }
        }
        Suite::DiagBinomial => {
            for shape in scope.hooks() {
                rep.absorb(&shape, diag_binomial_check(&shape, &scope.sig)?);
            }
        }
    }
    Ok(rep)
}

fn all_perms(r: usize) -> Vec<Perm> {
    let mut v: Vec<usize> = (0..r).collect();
    let mut out = vec![Perm::identity(r)];
    while next_permutation(&mut v) {
        out.push(Perm::from_images(v.clone()).expect("permutation"));
    }
    out
}

fn star_cocycle(scope: &Scope, rep: &mut SuiteReport) -> Result<()> {
    let perms = all_perms(scope.r);
    for j in scope.words() {
        for pi in &perms {
            let a = star_action(&j, pi, &scope.sig)?;
            for sigma in &perms {
                let b = star_action(&a.word, sigma, &scope.sig)?;
                let c = star_action(&j, &pi.compose(sigma), &scope.sig)?;
                rep.check(
                    c.word == b.word && c.sign == a.sign * b.sign,
                    || json!({"j": j.to_string(), "pi": pi.images(), "sigma": sigma.images()}),
                );
            }
        }
    }
    Ok(())
}

fn chi_equivalence(scope: &Scope, rep: &mut SuiteReport) -> Result<()> {
    let perms = all_perms(scope.r);
    let words = scope.words();
    for i in &words {
        for j in &words {
            let base = normalize_monomial(i, j, &scope.sig)?;
            for pi in &perms {
                let a = star_action(i, pi, &scope.sig)?;
                let b = star_action(j, pi, &scope.sig)?;
                let moved = normalize_monomial(&a.word, &b.word, &scope.sig)?;
                let ok = match (&base, &moved) {
                    (None, None) => true,
                    (Some((s, m)), Some((t, n))) => m == n && *s == t * a.sign * b.sign,
                    _ => false,
                };
                rep.check(
                    ok,
                    || json!({"i": i.to_string(), "j": j.to_string(), "pi": pi.images()}),
                );
            }
        }
    }
    Ok(())
}

fn variant_equality(scope: &Scope, rep: &mut SuiteReport) -> Result<()> {
    let words = scope.words();
    for shape in scope.shapes() {
        let e = Expander::new(BasicTableau::new(shape.clone()), scope.sig);
        for i in &words {
            for j in &words {
                let base = e.expand(i, j, Variant::RowThenColumn)?;
                for v in [Variant::RightComposed, Variant::LeftComposed] {
                    let ok = e.expand(i, j, v)? == base;
                    rep.check(ok, || {
                        pair_detail(&shape, i, j, json!({"variant": v.name()}))
                    });
                }
            }
        }
    }
    Ok(())
}

fn pair_detail(shape: &Partition, i: &MultiIndex, j: &MultiIndex, extra: Value) -> Value {
    let mut v = json!({"shape": shape.to_string(), "i": i.to_string(), "j": j.to_string()});
    if let (Value::Object(a), Value::Object(b)) = (&mut v, extra) {
        a.extend(b);
    }
    v
}

/// Column group on the right with signs, or row group on the left without,
/// plus the vanishing on repeated even (column) or odd (row) entries.
fn line_sign(scope: &Scope, axis: Axis, rep: &mut SuiteReport) -> Result<()> {
    let words = scope.words();
    let sig = &scope.sig;
    for shape in scope.shapes() {
        let t = BasicTableau::new(shape.clone());
        let e = Expander::new(t.clone(), *sig);
        let group: Vec<(Perm, i8)> = t.iterate_group(axis).collect();
        for i in &words {
            for j in &words {
                let base = e.expand(i, j, Variant::default())?;
                for (g, sgn) in &group {
                    let (lhs, want) = match axis {
                        Axis::Column => {
                            let a = star_action(j, g, sig)?;
                            (
                                e.expand(i, &a.word, Variant::default())?
                                    .scale(&BigInt::from(a.sign)),
                                base.scale(&BigInt::from(*sgn)),
                            )
                        }
                        Axis::Row => {
                            let a = star_action(i, g, sig)?;
                            (
                                e.expand(&a.word, j, Variant::default())?
                                    .scale(&BigInt::from(a.sign)),
                                base.clone(),
                            )
                        }
                    };
                    rep.check(lhs == want, || {
                        pair_detail(&shape, i, j, json!({"sigma": g.images()}))
                    });
                }
                let w = if axis == Axis::Column { j } else { i };
                let repeats = t.lines(axis).iter().any(|line| {
                    line.iter().enumerate().any(|(a, &x)| {
                        line[a + 1..].iter().any(|&y| {
                            w.get(x) == w.get(y) && (sig.is_odd(w.get(x)) == (axis == Axis::Row))
                        })
                    })
                });
                if repeats {
                    rep.check(base.is_zero(), || {
                        pair_detail(&shape, i, j, json!({"expected": "zero"}))
                    });
                }
            }
        }
    }
    Ok(())
}

/// All admissible `(X, Y)` for adjacent lines `k`, `k+1` along `axis`.
fn admissible_sets(t: &BasicTableau, axis: Axis) -> Vec<(Vec<usize>, Vec<usize>)> {
    let lines = t.lines(axis);
    let mut out = Vec::new();
    for k in 0..lines.len().saturating_sub(1) {
        let (a, b) = (&lines[k], &lines[k + 1]);
        for sx in 1..=a.len() {
            for sy in 1..=b.len() {
                if sx + sy <= a.len() {
                    continue;
                }
                for xs in combinations(a.len(), sx) {
                    for ys in combinations(b.len(), sy) {
                        out.push((
                            xs.iter().map(|&p| a[p]).collect(),
                            ys.iter().map(|&p| b[p]).collect(),
                        ));
                    }
                }
            }
        }
    }
    out
}

fn garnir(scope: &Scope, axis: Axis, rep: &mut SuiteReport) -> Result<()> {
    let words = scope.words();
    let sig = &scope.sig;
    for shape in scope.shapes() {
        let t = BasicTableau::new(shape.clone());
        let e = Expander::new(t.clone(), *sig);
        let size = t.size();
        let sets: Vec<(Vec<usize>, Vec<usize>, Vec<Perm>)> = admissible_sets(&t, axis)
            .into_iter()
            .map(|(x, y)| {
                let tr = garnir_transversal(&x, &y, size)?;
                Ok((x, y, tr))
            })
            .collect::<Result<_>>()?;
        for i in &words {
            for j in &words {
                for (x, y, tr) in &sets {
                    let mut total = FormalSum::<BigInt>::zero();
                    for sigma in tr {
                        match axis {
                            Axis::Column => {
                                let a = star_action(j, sigma, sig)?;
                                let k = BigInt::from(a.sign * sigma.sign());
                                total.add_scaled(&e.expand(i, &a.word, Variant::default())?, &k);
                            }
                            Axis::Row => {
                                let a = star_action(i, sigma, sig)?;
                                total.add_scaled(
                                    &e.expand(&a.word, j, Variant::default())?,
                                    &BigInt::from(a.sign),
                                );
                            }
                        }
                    }
                    rep.check(total.is_zero(), || {
                        pair_detail(&shape, i, j, json!({"x": x, "y": y}))
                    });
                }
            }
        }
    }
    Ok(())
}

fn straighten_sound(scope: &Scope, rep: &mut SuiteReport) -> Result<()> {
    let words = scope.words();
    for shape in scope.hooks() {
        let st = Straightener::<BigRational>::new(BasicTableau::new(shape.clone()), scope.sig);
        for i in &words {
            for j in &words {
                let res = st.straighten_pair(i, j)?;
                let direct = st
                    .expander()
                    .expand(i, j, Variant::default())?
                    .to_rational();
                let ok =
                    st.reexpand(&res)? == direct && res.all_semistandard(st.tableau(), &scope.sig);
                rep.check(ok, || pair_detail(&shape, i, j, json!({})));
            }
        }
    }
    Ok(())
}

fn straighten_triangular(scope: &Scope, rep: &mut SuiteReport) -> Result<()> {
    let words = scope.words();
    for shape in scope.hooks() {
        let st = Straightener::<BigRational>::new(BasicTableau::new(shape.clone()), scope.sig);
        for i in &words {
            for j in &words {
                let res = st.straighten_pair(i, j)?;
                let bad = st.triangularity_violations(i, j, &res)?;
                rep.check(bad.is_empty(), || {
                    let terms: Vec<String> = bad.iter().map(|(k, l)| format!("{k}|{l}")).collect();
                    pair_detail(&shape, i, j, json!({"terms": terms}))
                });
            }
        }
    }
    Ok(())
}

fn capelli_diagonal(scope: &Scope, rep: &mut SuiteReport) -> Result<()> {
    for shape in scope.hooks() {
        let ev = CapelliEvaluator::new(shape.clone(), scope.sig);
        let canon = ev.colored_canonical()?;
        let ss = enumerate_semistandard(&shape, &scope.sig);
        for k in &ss {
            for l in &ss {
                let got = ev.apply(k, l, k, l)?;
                let ok = !canon.is_zero() && got == canon;
                rep.check(ok, || {
                    let found = if got.is_zero() { "zero" } else { "other" };
                    pair_detail(&shape, k, l, json!({"found": found}))
                });
            }
        }
    }
    Ok(())
}

fn capelli_triangular(scope: &Scope, rep: &mut SuiteReport) -> Result<()> {
    let sig = &scope.sig;
    for shape in scope.hooks() {
        let ev = CapelliEvaluator::new(shape.clone(), *sig);
        let t = ev.expander().tableau().clone();
        let ss = enumerate_semistandard(&shape, sig);
        let cols: Vec<DominanceStats> = ss
            .iter()
            .map(|w| DominanceStats::column(&t, w, sig))
            .collect();
        let rows: Vec<DominanceStats> =
            ss.iter().map(|w| DominanceStats::row(&t, w, sig)).collect();
        for (a, k) in ss.iter().enumerate() {
            for (b, l) in ss.iter().enumerate() {
                for (c, i) in ss.iter().enumerate() {
                    for (d, j) in ss.iter().enumerate() {
                        if ev.apply(k, l, i, j)?.is_zero() {
                            rep.checked += 1;
                            continue;
                        }
                        let ok = dominance_leq(&cols[a], &cols[c])?
                            && dominance_leq(&rows[b], &rows[d])?;
                        rep.check(ok, || {
                            json!({"shape": shape.to_string(), "k": k.to_string(), "l": l.to_string(),
                                   "i": i.to_string(), "j": j.to_string()})
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

/// Rank over ℚ of all `T[i:j]` and of the semistandard ones, against `#SSYT²`.
pub fn rank_report(shape: &Partition, sig: &Signature) -> Result<Value> {
    let e = Expander::new(BasicTableau::new(shape.clone()), *sig);
    let words = MultiIndex::all_plain(sig, shape.size());
    let mut all = Vec::new();
    for i in &words {
        for j in &words {
            all.push(e.expand(i, j, Variant::default())?);
        }
    }
    let ss = enumerate_semistandard(shape, sig);
    let mut semi = Vec::new();
    for i in &ss {
        for j in &ss {
            semi.push(e.expand(i, j, Variant::default())?);
        }
    }
    let (rank, rank_ss, want) = (rank_exact(&all), rank_exact(&semi), ss.len() * ss.len());
    Ok(json!({
        "shape": shape.to_string(),
        "m": sig.m,
        "n": sig.n,
        "char": 0,
        "rank": rank,
        "rank_semistandard": rank_ss,
        "ssyt_count": ss.len(),
        "ssyt_squared": want,
        "match": rank == want && rank_ss == want,
    }))
}

/// Rank over `𝔽_p` of the reduced semistandard `T{i:j}`.
pub fn modular_rank_report(shape: &Partition, sig: &Signature, p: u64) -> Result<Value> {
    let e = Expander::new(BasicTableau::new(shape.clone()), *sig);
    let ss = enumerate_semistandard(shape, sig);
    let mut rows = Vec::new();
    for i in &ss {
        for j in &ss {
            rows.push(reduce_mod_p(&e.modified(i, j)?, p)?);
        }
    }
    let (rank, want) = (rank_exact(&rows), ss.len() * ss.len());
    Ok(json!({
        "shape": shape.to_string(),
        "m": sig.m,
        "n": sig.n,
        "char": p,
        "rank": rank,
        "ssyt_count": ss.len(),
        "ssyt_squared": want,
        "match": rank == want,
    }))
}

fn rank_theorem(scope: &Scope, rep: &mut SuiteReport) -> Result<()> {
    for shape in scope.shapes() {
        let v = rank_report(&shape, &scope.sig)?;
        rep.check(v["match"] == json!(true), || v.clone());
    }
    Ok(())
}

fn decomposition(scope: &Scope, rep: &mut SuiteReport) {
    let sig = &scope.sig;
    let sum: usize = Partition::hooks(scope.r, sig.m, sig.n)
        .iter()
        .map(|s| enumerate_semistandard(s, sig).len().pow(2))
        .sum();
    let dim = monomial_count(sig, scope.r);
    rep.check(
        sum as u128 == dim,
        || json!({"sum_of_squares": sum, "monomials": dim.to_string()}),
    );
}

fn modified_integral(scope: &Scope, rep: &mut SuiteReport) -> Result<()> {
    let words = scope.words();
    for shape in scope.shapes() {
        let e = Expander::new(BasicTableau::new(shape.clone()), scope.sig);
        for i in &words {
            for j in &words {
                let res = e.modified(i, j);
                if let Err(ref err) = res {
                    if !matches!(err, Error::Integrality(_)) {
                        return Err(err.clone());
                    }
                }
                rep.check(res.is_ok(), || pair_detail(&shape, i, j, json!({})));
            }
        }
    }
    Ok(())
}

fn straighten_integral(scope: &Scope, rep: &mut SuiteReport) -> Result<()> {
    let words = scope.words();
    for shape in scope.hooks() {
        let st = Straightener::<BigInt>::new(BasicTableau::new(shape.clone()), scope.sig);
        for i in &words {
            for j in &words {
                let detail = match st.straighten_pair(i, j) {
                    Ok(res) => {
                        let direct = st.expander().modified(i, j)?;
                        (st.reexpand(&res)? != direct).then(|| "re-expansion differs".to_string())
                    }
                    Err(err @ (Error::Integrality(_) | Error::Straightening(_))) => {
                        Some(err.to_string())
                    }
                    Err(err) => return Err(err),
                };
                rep.check(detail.is_none(), || {
                    pair_detail(&shape, i, j, json!({"detail": detail}))
                });
            }
        }
    }
    Ok(())
}

fn modular_rank(scope: &Scope, rep: &mut SuiteReport) -> Result<()> {
    let primes = if scope.primes.is_empty() {
        vec![3, 5]
    } else {
        scope.primes.clone()
    };
    for shape in scope.hooks() {
        for &p in &primes {
            let v = modular_rank_report(&shape, &scope.sig, p)?;
            rep.check(v["match"] == json!(true), || v.clone());
        }
    }
    Ok(())
}
