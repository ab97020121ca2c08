//! Symmetrizers `T[i:j]` and modified symmetrizers `T{i:j}`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::combinatorics::{factorial, Axis, BasicTableau, MultiIndex, Partition, Perm};
use crate::error::{Error, Result};
use crate::superalgebra::{normalize_monomial, star_sign, FormalSum, Monomial, Signature, Symbol};

/// The three equivalent ways of writing a symmetrizer.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `Σ_ρ Σ_κ sgn(κ) χ_{i*ρ, j*κ}`
    #[default]
    RowThenColumn,
    /// `Σ_ρ Σ_κ sgn(κ) χ_{i, j*κ*ρ}`
    RightComposed,
    /// `Σ_ρ Σ_κ sgn(κ) χ_{i*ρ*κ, j}`
    LeftComposed,
}

impl Variant {
    pub const ALL: [Variant; 3] = [
        Variant::RowThenColumn,
        Variant::RightComposed,
        Variant::LeftComposed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Variant::RowThenColumn => "row-then-column",
            Variant::RightComposed => "right-composed",
            Variant::LeftComposed => "left-composed",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Variant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown variant `{s}`")))
    }
}

/// Everything needed to name one symmetrizer.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymmetrizerKey {
    pub shape: Partition,
    pub left: MultiIndex,
    pub right: MultiIndex,
    pub variant: Variant,
}

impl SymmetrizerKey {
    pub fn new(shape: Partition, left: MultiIndex, right: MultiIndex) -> Result<Self> {
        let r = shape.size();
        for w in [&left, &right] {
            if w.len() != r {
                return Err(Error::LengthMismatch {
                    expected: r,
                    actual: w.len(),
                });
            }
        }
        Ok(SymmetrizerKey {
            shape,
            left,
            right,
            variant: Variant::default(),
        })
    }

    pub fn with_variant(mut self, variant: Variant) -> Self {
        self.variant = variant;
        self
    }

    pub fn expand(&self, sig: &Signature) -> Result<FormalSum<BigInt>> {
        let t = BasicTableau::new(self.shape.clone());
        symmetrizer(&t, &self.left, &self.right, self.variant, sig)
    }
}

/// Expands symmetrizers of one shape, reusing its row and column groups.
#[derive(Clone, Debug)]
pub struct Expander {
    tableau: BasicTableau,
    sig: Signature,
    rows: Vec<Perm>,
    columns: Vec<(Perm, i8)>,
}

impl Expander {
    pub fn new(tableau: BasicTableau, sig: Signature) -> Self {
        let rows = tableau.iterate_group(Axis::Row).map(|(g, _)| g).collect();
        let columns = tableau.iterate_group(Axis::Column).collect();
        Expander {
            tableau,
            sig,
            rows,
            columns,
        }
    }

    pub fn tableau(&self) -> &BasicTableau {
        &self.tableau
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    fn act(&self, w: &MultiIndex, g: &Perm) -> (i8, MultiIndex) {
        let out = w.permuted(g);
        (star_sign(&out, g, &self.sig), out)
    }

    pub fn expand(
        &self,
        i: &MultiIndex,
        j: &MultiIndex,
        variant: Variant,
    ) -> Result<FormalSum<BigInt>> {
        self.tableau.check_word(i)?;
        self.tableau.check_word(j)?;
        self.sig.check_word(i)?;
        self.sig.check_word(j)?;
        let mut acc: HashMap<Monomial, i64> = HashMap::new();
        let mut push = |sign: i64, a: &MultiIndex, b: &MultiIndex| -> Result<()> {
            if let Some((s, mon)) = normalize_monomial(a, b, &self.sig)? {
                *acc.entry(mon).or_insert(0) += sign * s as i64;
            }
            Ok(())
        };
        match variant {
            Variant::RowThenColumn => {
                let lefts: Vec<(i8, MultiIndex)> =
                    self.rows.iter().map(|rho| self.act(i, rho)).collect();
                for (kappa, sk) in &self.columns {
                    let (s2, jk) = self.act(j, kappa);
                    for (s1, ir) in &lefts {
                        push((*sk * s1 * s2) as i64, ir, &jk)?;
                    }
                }
            }
            Variant::RightComposed => {
                for (kappa, sk) in &self.columns {
                    let (s2, jk) = self.act(j, kappa);
                    for rho in &self.rows {
                        let (s3, jkr) = self.act(&jk, rho);
                        push((*sk * s2 * s3) as i64, i, &jkr)?;
                    }
                }
            }
            Variant::LeftComposed => {
                for rho in &self.rows {
                    let (s1, ir) = self.act(i, rho);
                    for (kappa, sk) in &self.columns {
                        let (s3, irk) = self.act(&ir, kappa);
                        push((*sk * s1 * s3) as i64, &irk, j)?;
                    }
                }
            }
        }
        Ok(acc.into_iter().map(|(m, c)| (m, BigInt::from(c))).collect())
    }

    pub fn modified(&self, i: &MultiIndex, j: &MultiIndex) -> Result<FormalSum<BigInt>> {
        i.ensure_plain()?;
        j.ensure_plain()?;
        let f = symmetry_factors(&self.tableau, i, j, &self.sig)?;
        self.expand(i, j, Variant::default())?
            .exact_divide(&f.product())
    }
}

/// `T[i:j]` expanded in normal form.
pub fn symmetrizer(
    t: &BasicTableau,
    i: &MultiIndex,
    j: &MultiIndex,
    variant: Variant,
    sig: &Signature,
) -> Result<FormalSum<BigInt>> {
    Expander::new(t.clone(), *sig).expand(i, j, variant)
}

/// `T{i:j} = T[i:j] / (r(T_i) c(T_j))`, failing if the division is inexact.
pub fn modified_symmetrizer(
    t: &BasicTableau,
    i: &MultiIndex,
    j: &MultiIndex,
    sig: &Signature,
) -> Result<FormalSum<BigInt>> {
    Expander::new(t.clone(), *sig).modified(i, j)
}

/// The word of the canonical tableau `T_ℓ`: row `k ≤ m` is filled with `k`,
/// and below row `m` column `c` is filled with `m + c`.
pub fn canonical_ell(shape: &Partition, sig: &Signature) -> Result<MultiIndex> {
    if !shape.is_hook(sig.m, sig.n) {
        return Err(Error::NotHook(shape.to_string(), sig.m, sig.n));
    }
    let t = BasicTableau::new(shape.clone());
    let entries = (0..t.size())
        .map(|label| {
            let (row, col) = t.position(label);
            let u = if row < sig.m {
                row + 1
            } else {
                sig.m + col + 1
            };
            Symbol::Plain(u as u16)
        })
        .collect();
    Ok(MultiIndex::new(entries))
}

/// `r(T_i)` and `c(T_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryFactors {
    pub r_factor: BigInt,
    pub c_factor: BigInt,
}

impl SymmetryFactors {
    pub fn product(&self) -> BigInt {
        &self.r_factor * &self.c_factor
    }

    pub fn to_json(&self) -> Value {
        json!({"r": self.r_factor.to_string(), "c": self.c_factor.to_string()})
    }
}

pub fn symmetry_factors(
    t: &BasicTableau,
    i: &MultiIndex,
    j: &MultiIndex,
    sig: &Signature,
) -> Result<SymmetryFactors> {
    t.check_word(i)?;
    t.check_word(j)?;
    i.ensure_plain()?;
    j.ensure_plain()?;
    Ok(SymmetryFactors {
        r_factor: row_factor(t, i, sig),
        c_factor: column_factor(t, j, sig),
    })
}

/// `r(T_i)`: product over rows of the factorials of even multiplicities.
pub fn row_factor(t: &BasicTableau, i: &MultiIndex, sig: &Signature) -> BigInt {
    multiplicity_factor(t.rows(), i, |s| !sig.is_odd(s))
}

/// `c(T_j)`: product over columns of the factorials of odd multiplicities.
pub fn column_factor(t: &BasicTableau, j: &MultiIndex, sig: &Signature) -> BigInt {
    multiplicity_factor(t.columns(), j, |s| sig.is_odd(s))
}

fn multiplicity_factor(
    lines: &[Vec<usize>],
    w: &MultiIndex,
    counted: impl Fn(Symbol) -> bool,
) -> BigInt {
    let mut out = BigInt::from(1);
    for line in lines {
        let mut counts: HashMap<Symbol, usize> = HashMap::new();
        for &label in line {
            *counts.entry(w.get(label)).or_insert(0) += 1;
        }
        for (s, c) in counts {
            if counted(s) {
                out *= BigInt::from(factorial(c));
            }
        }
    }
    out
}
