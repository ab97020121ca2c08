//! Command-line front end. Every command prints one JSON document with
//! sorted keys; exit code 0 means every checked assertion held, 1 means the
//! report lists violations and 2 means the invocation itself was invalid.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::capelli::{CapelliEvaluator, CapelliMatrix};
use crate::combinatorics::{enumerate_semistandard, BasicTableau, MultiIndex, Partition};
use crate::derivations::{
    diag_binomial_check, divided_power, standard_generators, zform_closure_check, DerivationSpec,
};
use crate::error::{Error, Result};
use crate::exact_linalg::{is_odd_prime, BasisSolver};
use crate::straightening::Straightener;
use crate::superalgebra::{rational_string, Side, Signature};
use crate::symmetrizer::{symmetry_factors, Expander, Variant};
use crate::verify::{modular_rank_report, rank_report, run_suite, Scope, Suite};

/// Largest degree accepted without `--force`.
pub const MAX_DEGREE: usize = 8;
/// Largest `(m+n)^r` accepted without `--force`.
pub const MAX_WORDS: u128 = 1_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "supersym",
    version,
    about = "Symmetrizers of Schur superalgebras with exact arithmetic"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub flags: Flags,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Enumerate semistandard tableaux.
    Tableaux,
    /// Expand T[i:j].
    Symmetrizer,
    /// Expand the modified symmetrizer T{i:j}.
    Modified,
    /// Straighten T[i:j] (or T{i:j} with --integral) to semistandard pairs.
    Straighten,
    /// Apply C(T_k,T_l) to T[k:l], or tabulate the Capelli matrix of a shape.
    Capelli,
    /// Apply a divided power of a superderivation to T{i:j}.
    Derive,
    /// Check that modified symmetrizers span a lattice stable under the integral generators.
    ZformCheck,
    /// Rank of the symmetrizers of a shape over Q or F_p.
    Rank,
    /// Run a named verification suite.
    Verify,
}

#[derive(Clone, Debug, Default, Args)]
pub struct Flags {
    /// Number of even symbols.
    #[arg(short = 'm', global = true)]
    pub m: Option<usize>,
    /// Number of odd symbols.
    #[arg(short = 'n', global = true)]
    pub n: Option<usize>,
    /// Degree.
    #[arg(short = 'r', global = true)]
    pub r: Option<usize>,
    /// Partition, comma separated.
    #[arg(long, global = true)]
    pub shape: Option<String>,
    /// Characteristic: 0 or an odd prime.
    #[arg(long = "char", global = true, default_value_t = 0)]
    pub characteristic: u64,
    /// Left word, comma separated ("1,2,1"; coloured "2^", "1_").
    #[arg(long, global = true)]
    pub left: Option<String>,
    /// Right word.
    #[arg(long, global = true)]
    pub right: Option<String>,
    #[arg(long, global = true, default_value = "row-then-column")]
    pub variant: String,
    #[arg(long, global = true)]
    pub integral: bool,
    #[arg(long, global = true)]
    pub suite: Option<String>,
    /// Derivation as SIDE:P,Q[:T], e.g. left:1,2 or right:2,1:2.
    #[arg(long, global = true)]
    pub op: Option<String>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Lift the size guards.
    #[arg(long, global = true)]
    pub force: bool,
}

/// A validated invocation.
#[derive(Clone, Debug, PartialEq)]
pub struct JobConfig {
    pub sig: Signature,
    pub r: Option<usize>,
    pub shape: Option<Partition>,
    pub characteristic: u64,
    pub left: Option<MultiIndex>,
    pub right: Option<MultiIndex>,
    pub variant: Variant,
    pub integral: bool,
    pub suite: Option<Suite>,
    pub op: Option<(DerivationSpec, usize)>,
    pub out: Option<PathBuf>,
    pub force: bool,
}

impl JobConfig {
    pub fn from_flags(f: &Flags) -> Result<Self> {
        let (Some(m), Some(n)) = (f.m, f.n) else {
            return Err(Error::Usage("both -m and -n are required".into()));
        };
        let sig = Signature::new(m, n)?;
        let shape = f
            .shape
            .as_deref()
            .map(str::parse::<Partition>)
            .transpose()?;
        if let (Some(s), Some(r)) = (&shape, f.r) {
            if s.size() != r {
                return Err(Error::Usage(format!("shape {s} is not a partition of {r}")));
            }
        }
        if f.characteristic != 0 && !is_odd_prime(f.characteristic) {
            return Err(Error::BadCharacteristic(f.characteristic));
        }
        let word = |w: &Option<String>| -> Result<Option<MultiIndex>> {
            w.as_deref()
                .map(|s| {
                    let w: MultiIndex = s.parse()?;
                    sig.check_word(&w)?;
                    Ok(w)
                })
                .transpose()
        };
        let config = JobConfig {
            sig,
            r: f.r.or(shape.as_ref().map(Partition::size)),
            left: word(&f.left)?,
            right: word(&f.right)?,
            shape,
            characteristic: f.characteristic,
            variant: f.variant.parse()?,
            integral: f.integral,
            suite: f.suite.as_deref().map(str::parse).transpose()?,
            op: f.op.as_deref().map(|s| parse_op(s, &sig)).transpose()?,
            out: f.out.clone(),
            force: f.force,
        };
        config.check_size()?;
        Ok(config)
    }

    fn check_size(&self) -> Result<()> {
        let Some(r) = self.r else { return Ok(()) };
        if self.force {
            return Ok(());
        }
        let words = (self.sig.alphabet_len() as u128)
            .checked_pow(r as u32)
            .unwrap_or(u128::MAX);
        if r > MAX_DEGREE || words > MAX_WORDS {
            return Err(Error::Usage(format!(
                "degree {r} over {} symbols exceeds the default limits (r <= {MAX_DEGREE}, (m+n)^r <= {MAX_WORDS}); pass --force",
                self.sig.alphabet_len()
            )));
        }
        Ok(())
    }

    fn shape(&self) -> Result<&Partition> {
        self.shape
            .as_ref()
            .ok_or_else(|| Error::Usage("--shape is required".into()))
    }

    fn degree(&self) -> Result<usize> {
        self.r
            .ok_or_else(|| Error::Usage("-r or --shape is required".into()))
    }

    fn words(&self) -> Result<(&MultiIndex, &MultiIndex)> {
        match (&self.left, &self.right) {
            (Some(i), Some(j)) => Ok((i, j)),
            _ => Err(Error::Usage("--left and --right are required".into())),
        }
    }

    /// Shapes named by the config: the given one, or every partition of `r`.
    fn shapes(&self) -> Result<Vec<Partition>> {
        match &self.shape {
            Some(s) => Ok(vec![s.clone()]),
            None => Ok(Partition::all(self.degree()?)),
        }
    }
}

fn parse_op(s: &str, sig: &Signature) -> Result<(DerivationSpec, usize)> {
    let bad = || {
        Error::Usage(format!(
            "cannot parse derivation `{s}`, expected SIDE:P,Q[:T]"
        ))
    };
    let mut parts = s.split(':');
    let side: Side = parts.next().ok_or_else(bad)?.parse()?;
    let pq: MultiIndex = parts.next().ok_or_else(bad)?.parse()?;
    let t = parts
        .next()
        .map(|x| x.parse::<usize>().map_err(|_| bad()))
        .transpose()?
        .unwrap_or(1);
    if parts.next().is_some() || pq.len() != 2 {
        return Err(bad());
    }
    Ok((DerivationSpec::new(pq.get(0), pq.get(1), side, sig)?, t))
}

/// Runs one command; returns the exit code and the report.
pub fn run(command: Command, config: &JobConfig) -> Result<(i32, Value)> {
    let report = match command {
        Command::Tableaux => tableaux(config)?,
        Command::Symmetrizer => symmetrizer(config)?,
        Command::Modified => modified(config)?,
        Command::Straighten => straighten(config)?,
        Command::Capelli => capelli(config)?,
        Command::Derive => derive(config)?,
        Command::ZformCheck => zform_check(config)?,
        Command::Rank => rank(config)?,
        Command::Verify => verify(config)?,
    };
    let failed = report
        .get("violations")
        .and_then(Value::as_array)
        .is_some_and(|v| !v.is_empty())
        || report.get("match") == Some(&Value::Bool(false));
    Ok((i32::from(failed), report))
}

fn base(config: &JobConfig) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("m".into(), json!(config.sig.m));
    m.insert("n".into(), json!(config.sig.n));
    m
}

fn tableaux(config: &JobConfig) -> Result<Value> {
    let list = |shape: &Partition| {
        let ss = enumerate_semistandard(shape, &config.sig);
        json!({
            "shape": shape.to_string(),
            "count": ss.len(),
            "tableaux": ss.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
        })
    };
    let mut out = base(config);
    match &config.shape {
        Some(shape) => {
            if let Value::Object(o) = list(shape) {
                out.extend(o);
            }
        }
        None => {
            out.insert("r".into(), json!(config.degree()?));
            out.insert(
                "shapes".into(),
                Value::Array(config.shapes()?.iter().map(list).collect()),
            );
        }
    }
    Ok(Value::Object(out))
}

fn pair_header(config: &JobConfig) -> Result<(Map<String, Value>, Expander)> {
    let shape = config.shape()?;
    let (i, j) = config.words()?;
    let t = BasicTableau::new(shape.clone());
    t.check_word(i)?;
    t.check_word(j)?;
    let mut out = base(config);
    out.insert("shape".into(), json!(shape.to_string()));
    out.insert("left".into(), json!(i.to_string()));
    out.insert("right".into(), json!(j.to_string()));
    Ok((out, Expander::new(t, config.sig)))
}

fn symmetrizer(config: &JobConfig) -> Result<Value> {
    let (mut out, e) = pair_header(config)?;
    let (i, j) = config.words()?;
    let s = e.expand(i, j, config.variant)?;
    out.insert("variant".into(), json!(config.variant.name()));
    out.insert("zero".into(), json!(s.is_zero()));
    out.insert("terms".into(), s.to_json());
    Ok(Value::Object(out))
}

fn modified(config: &JobConfig) -> Result<Value> {
    let (mut out, e) = pair_header(config)?;
    let (i, j) = config.words()?;
    let f = symmetry_factors(e.tableau(), i, j, &config.sig)?;
    let s = e.modified(i, j)?;
    out.insert("factors".into(), f.to_json());
    out.insert("zero".into(), json!(s.is_zero()));
    out.insert("terms".into(), s.to_json());
    Ok(Value::Object(out))
}

fn straighten(config: &JobConfig) -> Result<Value> {
    let (mut out, e) = pair_header(config)?;
    let (i, j) = config.words()?;
    let (t, sig) = (e.tableau().clone(), config.sig);
    let mut violations = Vec::new();
    let (coeffs, semistandard, sound, triangular) = if config.integral {
        let st = Straightener::<BigInt>::new(t, sig);
        let res = st.straighten_pair(i, j)?;
        let sound = st.reexpand(&res)? == st.expander().modified(i, j)?;
        let tri = st.triangularity_violations(i, j, &res)?.is_empty();
        (
            res.to_json(),
            res.all_semistandard(st.tableau(), &sig),
            sound,
            tri,
        )
    } else {
        let st = Straightener::<BigRational>::new(t, sig);
        let res = st.straighten_pair(i, j)?;
        let sound = st.reexpand(&res)?
            == st
                .expander()
                .expand(i, j, Variant::default())?
                .to_rational();
        let tri = st.triangularity_violations(i, j, &res)?.is_empty();
        (
            res.to_json(),
            res.all_semistandard(st.tableau(), &sig),
            sound,
            tri,
        )
    };
    for (ok, what) in [
        (sound, "re-expansion differs"),
        (semistandard, "non-semistandard term"),
        (triangular, "dominance"),
    ] {
        if !ok {
            violations.push(json!(what));
        }
    }
    out.insert(
        "mode".into(),
        json!(if config.integral {
            "integral"
        } else {
            "rational"
        }),
    );
    out.insert("coefficients".into(), coeffs);
    out.insert("violations".into(), Value::Array(violations));
    Ok(Value::Object(out))
}

fn capelli(config: &JobConfig) -> Result<Value> {
    let shape = config.shape()?;
    let mut out = base(config);
    out.insert("shape".into(), json!(shape.to_string()));
    let mut violations = Vec::new();
    match (&config.left, &config.right) {
        (Some(k), Some(l)) => {
            let ev = CapelliEvaluator::new(shape.clone(), config.sig);
            let image = ev.apply(k, l, k, l)?;
            let canon = ev.colored_canonical()?;
            if image.is_zero() {
                violations.push(json!("image is zero"));
            } else if image != canon {
                violations.push(json!(
                    "image differs from the coloured canonical symmetrizer"
                ));
            }
            out.insert("left".into(), json!(k.to_string()));
            out.insert("right".into(), json!(l.to_string()));
            out.insert("image".into(), image.to_json());
            out.insert("canonical".into(), canon.to_json());
        }
        (None, None) => {
            let mat = CapelliMatrix::compute(shape, &config.sig)?;
            if mat.rank() < mat.pairs.len() {
                violations.push(json!({"rank": mat.rank(), "pairs": mat.pairs.len()}));
            }
            out.insert("matrix".into(), mat.to_json());
        }
        _ => {
            return Err(Error::Usage(
                "give both --left and --right, or neither".into(),
            ))
        }
    }
    out.insert("violations".into(), Value::Array(violations));
    Ok(Value::Object(out))
}

fn derive(config: &JobConfig) -> Result<Value> {
    let (mut out, e) = pair_header(config)?;
    let (i, j) = config.words()?;
    let (spec, t) = config
        .op
        .ok_or_else(|| Error::Usage("--op is required".into()))?;
    let shape = config.shape()?;
    let image = divided_power(&spec, t, &e.modified(i, j)?.to_rational(), &config.sig)?;
    let mut violations = Vec::new();
    let mut coords = Map::new();
    if shape.is_hook(config.sig.m, config.sig.n) {
        let ss = enumerate_semistandard(shape, &config.sig);
        let mut pairs = Vec::new();
        let mut basis = Vec::new();
        for k in &ss {
            for l in &ss {
                basis.push(e.modified(k, l)?.to_rational());
                pairs.push(format!("{k}|{l}"));
            }
        }
        match BasisSolver::new(&basis)?.solve(&image) {
            Some(x) => {
                for (name, c) in pairs.iter().zip(&x) {
                    if !num_traits::Zero::is_zero(c) {
                        coords.insert(name.clone(), json!(rational_string(c)));
                        if !c.is_integer() {
                            violations
                                .push(json!({"pair": name, "coordinate": rational_string(c)}));
                        }
                    }
                }
            }
            None => violations.push(json!("image leaves the span of the basis")),
        }
    }
    out.insert("operator".into(), json!(format!("{spec}^({t})")));
    out.insert("image".into(), image.to_json());
    out.insert("coordinates".into(), Value::Object(coords));
    out.insert("violations".into(), Value::Array(violations));
    Ok(Value::Object(out))
}

fn zform_check(config: &JobConfig) -> Result<Value> {
    let r = config.degree()?;
    let ops = standard_generators(&config.sig, r);
    let mut shapes = Map::new();
    let mut violations = Vec::new();
    let mut checked = 0;
    for shape in config
        .shapes()?
        .into_iter()
        .filter(|s| s.is_hook(config.sig.m, config.sig.n))
    {
        let closure = zform_closure_check(&shape, &config.sig, &ops)?;
        let diag = diag_binomial_check(&shape, &config.sig)?;
        checked += closure.checked + diag.checked;
        for v in closure.violations.iter().chain(&diag.violations) {
            let mut entry = v.to_json();
            entry["shape"] = json!(shape.to_string());
            violations.push(entry);
        }
        shapes.insert(
            shape.to_string(),
            json!({"closure": closure.to_json(), "diag_binomial": diag.to_json()}),
        );
    }
    let mut out = base(config);
    out.insert("r".into(), json!(r));
    out.insert(
        "operators".into(),
        json!(ops
            .iter()
            .map(|(d, t)| format!("{d}^({t})"))
            .collect::<Vec<_>>()),
    );
    out.insert("shapes".into(), Value::Object(shapes));
    out.insert("checked".into(), json!(checked));
    out.insert("violations".into(), Value::Array(violations));
    Ok(Value::Object(out))
}

fn rank(config: &JobConfig) -> Result<Value> {
    let one = |shape: &Partition| match config.characteristic {
        0 => rank_report(shape, &config.sig),
        p => modular_rank_report(shape, &config.sig, p),
    };
    match &config.shape {
        Some(shape) => one(shape),
        None => {
            let results = config
                .shapes()?
                .iter()
                .map(one)
                .collect::<Result<Vec<_>>>()?;
            let all = results.iter().all(|v| v["match"] == json!(true));
            let mut out = base(config);
            out.insert("r".into(), json!(config.degree()?));
            out.insert("char".into(), json!(config.characteristic));
            out.insert("results".into(), Value::Array(results));
            out.insert("match".into(), json!(all));
            Ok(Value::Object(out))
        }
    }
}

fn verify(config: &JobConfig) -> Result<Value> {
    let suite = config
        .suite
        .ok_or_else(|| Error::Usage("--suite is required".into()))?;
    let mut scope = Scope::new(config.sig, config.degree()?);
    if let Some(s) = &config.shape {
        scope = scope.with_shape(s.clone());
    }
    if config.characteristic != 0 {
        scope = scope.with_primes(vec![config.characteristic]);
    }
    let rep = run_suite(suite, &scope)?;
    let mut out = base(config);
    out.insert("r".into(), json!(scope.r));
    if let Some(s) = &config.shape {
        out.insert("shape".into(), json!(s.to_string()));
    }
    if let Value::Object(o) = rep.to_json() {
        out.extend(o);
    }
    Ok(Value::Object(out))
}

/// Renders a report exactly as the binary prints it.
pub fn render(report: &Value) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// Parses arguments, runs the command and writes the report. Returns the
/// process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let outcome =
        JobConfig::from_flags(&cli.flags).and_then(|c| run(cli.command, &c).map(|r| (c, r)));
    let (config, (code, report)) = match outcome {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: {e}");
            eprintln!("run with --help for usage");
            return 2;
        }
    };
    let text = render(&report);
    match &config.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{text}"),
    }
    code
}

/// Convenience for tests and examples: parse and run without printing.
pub fn run_args<I, T>(args: I) -> Result<(i32, Value)>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| Error::Usage(e.to_string()))?;
    let config = JobConfig::from_flags(&cli.flags)?;
    run(cli.command, &config)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> (i32, Value) {
        run_args(std::iter::once("supersym").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn tableaux_count() {
        let (code, v) = go(&["tableaux", "-m", "1", "-n", "1", "--shape", "2"]);
        assert_eq!(code, 0);
        assert_eq!(v["count"], 2);
        assert_eq!(v["tableaux"], json!(["1,1", "1,2"]));
    }

    #[test]
    fn rank_example() {
        let (code, v) = go(&["rank", "-m", "1", "-n", "1", "-r", "2", "--shape", "2"]);
        assert_eq!(code, 0);
        assert_eq!(
            (
                v["rank"].clone(),
                v["ssyt_squared"].clone(),
                v["match"].clone()
            ),
            (json!(4), json!(4), json!(true))
        );
        let (_, v) = go(&["rank", "-m", "1", "-n", "1", "--shape", "2", "--char", "3"]);
        assert_eq!(v["char"], 3);
        assert_eq!(v["match"], true);
    }

    #[test]
    fn garnir_suite() {
        let (code, v) = go(&[
            "verify", "--suite", "garnir", "-m", "1", "-n", "1", "-r", "3",
        ]);
        assert_eq!(code, 0);
        assert_eq!(v["violations"], json!([]));
    }

    #[test]
    fn usage_errors() {
        for args in [
            vec!["rank", "-m", "1"],
            vec!["rank", "-m", "1", "-n", "1", "--shape", "2", "--char", "4"],
            vec!["rank", "-m", "1", "-n", "1", "-r", "3", "--shape", "2"],
            vec!["rank", "-m", "1", "-n", "1", "-r", "9"],
            vec!["rank", "-m", "5", "-n", "5", "-r", "7"],
            vec![
                "verify", "-m", "1", "-n", "1", "-r", "2", "--suite", "bogus",
            ],
            vec![
                "symmetrizer",
                "-m",
                "1",
                "-n",
                "1",
                "--shape",
                "2",
                "--left",
                "1,3",
                "--right",
                "1,1",
            ],
        ] {
            let all = std::iter::once("supersym").chain(args.iter().copied());
            assert!(run_args(all).is_err(), "{args:?}");
        }
        assert_eq!(
            main_with_args(["supersym", "rank", "-m", "1", "-n", "1", "-r", "9"]),
            2
        );
    }

    #[test]
    fn force_lifts_the_guard() {
        let f = Flags {
            m: Some(1),
            n: Some(1),
            r: Some(9),
            force: true,
            variant: "row-then-column".into(),
            ..Default::default()
        };
        assert!(JobConfig::from_flags(&f).is_ok());
    }

    #[test]
    fn derive_reports_coordinates() {
        let (code, v) = go(&[
            "derive", "-m", "1", "-n", "1", "--shape", "2", "--left", "1,2", "--right", "1,2",
            "--op", "left:1,2",
        ]);
        assert_eq!(code, 0);
        assert!(v["coordinates"].as_object().unwrap().len() <= 4);
        assert!(run_args([
            "supersym", "derive", "-m", "1", "-n", "1", "--shape", "2", "--left", "1,2", "--right",
            "1,2", "--op", "up:1,2"
        ])
        .is_err());
    }
}
