//! Superderivations of `A(m|n)`, their divided powers and the diagonal
//! binomial operators, together with the check that the integral span of
//! modified symmetrizers is stable under all of them.
//!
//! A row derivation `D_pq` sends `c_kl` to `δ_qk c_pl`; a column derivation
//! `_pqD` sends `c_kl` to `δ_lp c_kq`. Both are extended to products by the
//! graded Leibniz rule. The row derivation picks up the Koszul sign of the
//! generators to the right of the one it acts on, the column derivation the
//! sign of those to its left, which makes both compatible with the action of
//! the Schur superalgebra on `A(m|n)`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::combinatorics::{
    enumerate_semistandard, factorial, BasicTableau, MultiIndex, Partition,
};
use crate::error::{Error, Result};
use crate::exact_linalg::BasisSolver;
use crate::superalgebra::{
    binomial, normalize_generators, rational_string, Coeff, FormalSum, Side, Signature, Symbol,
};
use crate::symmetrizer::Expander;

/// `D_pq` (`side = Left`, acting on row indices) or `_pqD` (`side = Right`,
/// acting on column indices).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DerivationSpec {
    pub p: Symbol,
    pub q: Symbol,
    pub side: Side,
}

impl DerivationSpec {
    pub fn new(p: Symbol, q: Symbol, side: Side, sig: &Signature) -> Result<Self> {
        for s in [p, q] {
            if !s.is_plain() {
                return Err(Error::ColoredSymbol(s.to_string()));
            }
            sig.check_word(&MultiIndex::new(vec![s]))?;
        }
        Ok(DerivationSpec { p, q, side })
    }

    pub fn parity(&self, sig: &Signature) -> u8 {
        (sig.parity(self.p) + sig.parity(self.q)) % 2
    }

    /// The image of one generator, if the derivation does not kill it.
    fn apply_generator(&self, g: (Symbol, Symbol)) -> Option<(Symbol, Symbol)> {
        match self.side {
            Side::Left => (g.0 == self.q).then_some((self.p, g.1)),
            Side::Right => (g.1 == self.p).then_some((g.0, self.q)),
        }
    }
}

impl fmt::Display for DerivationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::Left => write!(f, "D[{},{}]", self.p, self.q),
            Side::Right => write!(f, "[{},{}]D", self.p, self.q),
        }
    }
}

/// Applies one superderivation to every monomial of `s`.
pub fn superderive<R: Coeff>(
    spec: &DerivationSpec,
    s: &FormalSum<R>,
    sig: &Signature,
) -> FormalSum<R> {
    let odd = spec.parity(sig) == 1;
    let mut out = FormalSum::zero();
    for (mon, c) in s.iter() {
        let word = mon.word();
        let parities: Vec<u8> = word
            .iter()
            .map(|&(u, v)| sig.generator_parity(u, v))
            .collect();
        for (t, &g) in word.iter().enumerate() {
            let Some(image) = spec.apply_generator(g) else {
                continue;
            };
            let passed: u32 = match spec.side {
                Side::Left => parities[t + 1..].iter().map(|&x| x as u32).sum(),
                Side::Right => parities[..t].iter().map(|&x| x as u32).sum(),
            };
            let mut next = word.clone();
            next[t] = image;
            if let Some((sign, m2)) = normalize_generators(&next, sig) {
                let koszul = if odd && passed % 2 == 1 { -1 } else { 1 };
                out.add_term(m2, c.mul_int((sign * koszul) as i64));
            }
        }
    }
    out
}

fn check_power(spec: &DerivationSpec, t: usize, sig: &Signature) -> Result<()> {
    if t >= 2 && spec.parity(sig) == 1 {
        return Err(Error::OddDividedPower { t });
    }
    Ok(())
}

fn iterate<R: Coeff>(
    spec: &DerivationSpec,
    t: usize,
    s: &FormalSum<R>,
    sig: &Signature,
) -> FormalSum<R> {
    (0..t).fold(s.clone(), |acc, _| superderive(spec, &acc, sig))
}

/// `e^{(t)} = e^t / t!` over ℚ.
pub fn divided_power(
    spec: &DerivationSpec,
    t: usize,
    s: &FormalSum<BigRational>,
    sig: &Signature,
) -> Result<FormalSum<BigRational>> {
    check_power(spec, t, sig)?;
    iterate(spec, t, s, sig).divide(&BigRational::from_integer(BigInt::from(factorial(t))))
}

/// `e^{(t)}` over ℤ, failing if the division by `t!` is inexact.
pub fn divided_power_integral(
    spec: &DerivationSpec,
    t: usize,
    s: &FormalSum<BigInt>,
    sig: &Signature,
) -> Result<FormalSum<BigInt>> {
    check_power(spec, t, sig)?;
    iterate(spec, t, s, sig).exact_divide(&BigInt::from(factorial(t)))
}

/// `binom(e_qq, k)`: each monomial is scaled by `binom(c, k)`, `c` being the
/// number of generators whose row (left) or column (right) index is `q`.
pub fn diag_binomial<R: Coeff>(q: Symbol, k: usize, side: Side, s: &FormalSum<R>) -> FormalSum<R> {
    let mut out = FormalSum::zero();
    for (mon, c) in s.iter() {
        let count: u32 = mon
            .generators()
            .iter()
            .filter(|g| match side {
                Side::Left => g.0 == q,
                Side::Right => g.1 == q,
            })
            .map(|g| g.2)
            .sum();
        let b = binomial(count as u128, k as u128);
        out.add_term(mon.clone(), c.mul_int(b as i64));
    }
    out
}

/// The integral generators of degree `r`: every `e_pq^{(t)}` with `p ≠ q`,
/// `t ≤ r` for even pairs and `t = 1` for odd ones, on both sides.
pub fn standard_generators(sig: &Signature, r: usize) -> Vec<(DerivationSpec, usize)> {
    let mut out = Vec::new();
    for side in [Side::Left, Side::Right] {
        for p in sig.plain_symbols() {
            for q in sig.plain_symbols().filter(|&q| q != p) {
                let spec = DerivationSpec { p, q, side };
                let top = if spec.parity(sig) == 0 { r } else { 1 };
                out.extend((1..=top).map(|t| (spec, t)));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct ZFormViolation {
    pub left: MultiIndex,
    pub right: MultiIndex,
    pub operator: String,
    pub detail: String,
}

impl ZFormViolation {
    pub fn to_json(&self) -> Value {
        json!({
            "left": self.left.to_string(),
            "right": self.right.to_string(),
            "operator": self.operator,
            "detail": self.detail,
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ZFormReport {
    pub checked: usize,
    pub violations: Vec<ZFormViolation>,
}

impl ZFormReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "checked": self.checked,
            "violations": self.violations.iter().map(ZFormViolation::to_json).collect::<Vec<_>>(),
        })
    }
}

/// The semistandard pairs of a hook shape and their modified symmetrizers.
fn modified_basis(
    shape: &Partition,
    sig: &Signature,
) -> Result<(Vec<(MultiIndex, MultiIndex)>, Vec<FormalSum<BigInt>>)> {
    if !shape.is_hook(sig.m, sig.n) {
        return Err(Error::NotHook(shape.to_string(), sig.m, sig.n));
    }
    let e = Expander::new(BasicTableau::new(shape.clone()), *sig);
    let ssyt = enumerate_semistandard(shape, sig);
    let mut pairs = Vec::new();
    let mut sums = Vec::new();
    for i in &ssyt {
        for j in &ssyt {
            sums.push(e.modified(i, j)?);
            pairs.push((i.clone(), j.clone()));
        }
    }
    Ok((pairs, sums))
}

/// Applies each operator to every semistandard `T{i:j}` and checks that the
/// image has integer coordinates in the semistandard modified basis.
pub fn zform_closure_check(
    shape: &Partition,
    sig: &Signature,
    operators: &[(DerivationSpec, usize)],
) -> Result<ZFormReport> {
    let (pairs, sums) = modified_basis(shape, sig)?;
    let basis: Vec<FormalSum<BigRational>> = sums.iter().map(FormalSum::to_rational).collect();
    let solver = BasisSolver::new(&basis)?;
    let mut report = ZFormReport::default();
    for ((i, j), s) in pairs.iter().zip(&basis) {
        for (spec, t) in operators {
            let image = divided_power(spec, *t, s, sig)?;
            report.checked += 1;
            let detail = match solver.solve(&image) {
                None => Some("image leaves the span of the basis".to_string()),
                Some(x) => x
                    .iter()
                    .zip(&pairs)
                    .find(|(c, _)| !c.is_integer())
                    .map(|(c, (k, l))| format!("coordinate {} at ({k}|{l})", rational_string(c))),
            };
            if let Some(detail) = detail {
                report.violations.push(ZFormViolation {
                    left: i.clone(),
                    right: j.clone(),
                    operator: format!("{spec}^({t})"),
                    detail,
                });
            }
        }
    }
    Ok(report)
}

/// Checks `binom(e_qq, k) T{i:j} = binom(cont(·, q), k) T{i:j}` on both sides
/// for every semistandard pair and every `k ≤ r`.
pub fn diag_binomial_check(shape: &Partition, sig: &Signature) -> Result<ZFormReport> {
    let (pairs, sums) = modified_basis(shape, sig)?;
    let mut report = ZFormReport::default();
    for ((i, j), s) in pairs.iter().zip(&sums) {
        for side in [Side::Left, Side::Right] {
            let w = if side == Side::Left { i } else { j };
            for q in sig.plain_symbols() {
                for k in 0..=shape.size() {
                    let want = binomial(w.count(q) as u128, k as u128);
                    report.checked += 1;
                    if diag_binomial(q, k, side, s) != s.scale(&BigInt::from(want)) {
                        report.violations.push(ZFormViolation {
                            left: i.clone(),
                            right: j.clone(),
                            operator: format!("binom({}:{q},{k})", side.name()),
                            detail: format!("not the scalar {want}"),
                        });
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Coordinates of `t = 0` operators: the identity matrix, as a sanity anchor.
pub fn identity_coordinates(shape: &Partition, sig: &Signature) -> Result<Vec<Vec<BigRational>>> {
    let (_, sums) = modified_basis(shape, sig)?;
    let basis: Vec<FormalSum<BigRational>> = sums.iter().map(FormalSum::to_rational).collect();
    let solver = BasisSolver::new(&basis)?;
    basis
        .iter()
        .map(|b| {
            solver
                .solve(b)
                .ok_or_else(|| Error::Integrality("basis element outside its own span".into()))
        })
        .collect()
}
