//! Polarizations into the coloured alphabet and Capelli operators.
//!
//! A polarization `D^t(target, source)` replaces `t` of the occurrences of
//! `source` in a word by `target`, summed over all choices. Capelli operators
//! compose one polarization per (line, symbol) of a plain tableau and act on
//! symmetrizers through their index words, so `C(T_k,T_l) T[r:s]` is the sum
//! of `T[k_t : l_u]` over all polarized words `k_t` of `r` and `l_u` of `s`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::combinatorics::{combinations, BasicTableau, MultiIndex, Partition};
use crate::error::{Error, Result};
use crate::exact_linalg::rank_integer_matrix;
use crate::superalgebra::{FormalSum, Monomial, Side, Signature, Symbol};
use crate::symmetrizer::{Expander, SymmetrizerKey};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PolarizationSpec {
    pub target: Symbol,
    pub source: Symbol,
    pub t: usize,
    pub side: Side,
}

impl PolarizationSpec {
    pub fn new(target: Symbol, source: Symbol, t: usize, side: Side) -> Result<Self> {
        if target.is_plain() {
            return Err(Error::Usage(format!(
                "polarization target {target} must be coloured"
            )));
        }
        if !source.is_plain() {
            return Err(Error::ColoredSymbol(source.to_string()));
        }
        Ok(PolarizationSpec {
            target,
            source,
            t,
            side,
        })
    }
}

/// All words obtained by replacing `t` occurrences of the source symbol.
pub fn polarize(spec: &PolarizationSpec, k: &MultiIndex) -> Vec<MultiIndex> {
    let positions: Vec<usize> = (0..k.len()).filter(|&p| k.get(p) == spec.source).collect();
    combinations(positions.len(), spec.t)
        .into_iter()
        .map(|subset| {
            let mut w = k.clone();
            for s in subset {
                w.set(positions[s], spec.target);
            }
            w
        })
        .collect()
}

/// Applies the polarizations in order, returning each resulting word with
/// the number of ways it arises.
pub fn polarize_all(specs: &[PolarizationSpec], w: &MultiIndex) -> BTreeMap<MultiIndex, u64> {
    let mut cur = BTreeMap::from([(w.clone(), 1u64)]);
    for spec in specs {
        let mut next = BTreeMap::new();
        for (word, mult) in &cur {
            for out in polarize(spec, word) {
                *next.entry(out).or_insert(0) += mult;
            }
        }
        cur = next;
    }
    cur
}

/// The factors of `C_L(T_k)`: `c_i(T_k, j)` occurrences of `i` go to `j̄`.
pub fn left_operator(
    t: &BasicTableau,
    k: &MultiIndex,
    sig: &Signature,
) -> Result<Vec<PolarizationSpec>> {
    line_operator(t.columns(), t, k, sig, Symbol::ColoredOdd, Side::Left)
}

/// The factors of `C_P(T_l)`: `r_i(T_l, j)` occurrences of `i` go to `j̲`.
pub fn right_operator(
    t: &BasicTableau,
    l: &MultiIndex,
    sig: &Signature,
) -> Result<Vec<PolarizationSpec>> {
    line_operator(t.rows(), t, l, sig, Symbol::ColoredEven, Side::Right)
}

fn line_operator(
    lines: &[Vec<usize>],
    t: &BasicTableau,
    w: &MultiIndex,
    sig: &Signature,
    colour: fn(u16) -> Symbol,
    side: Side,
) -> Result<Vec<PolarizationSpec>> {
    t.check_word(w)?;
    w.ensure_plain()?;
    sig.check_word(w)?;
    let mut specs = Vec::new();
    for (j, line) in lines.iter().enumerate() {
        for i in sig.plain_symbols() {
            let c = line.iter().filter(|&&p| w.get(p) == i).count();
            if c > 0 {
                specs.push(PolarizationSpec {
                    target: colour(j as u16 + 1),
                    source: i,
                    t: c,
                    side,
                });
            }
        }
    }
    Ok(specs)
}

/// `ℓ̄(λ)`: column `j` filled with the odd colour `j̄`.
pub fn ell_bar(shape: &Partition) -> MultiIndex {
    let t = BasicTableau::new(shape.clone());
    MultiIndex::new(
        (0..t.size())
            .map(|p| Symbol::ColoredOdd(t.position(p).1 as u16 + 1))
            .collect(),
    )
}

/// `ℓ̲(λ)`: row `j` filled with the even colour `j̲`.
pub fn ell_under(shape: &Partition) -> MultiIndex {
    let t = BasicTableau::new(shape.clone());
    MultiIndex::new(
        (0..t.size())
            .map(|p| Symbol::ColoredEven(t.position(p).0 as u16 + 1))
            .collect(),
    )
}

fn sum_over(
    e: &Expander,
    lefts: &BTreeMap<MultiIndex, u64>,
    rights: &BTreeMap<MultiIndex, u64>,
    key: &SymmetrizerKey,
) -> Result<FormalSum<BigInt>> {
    let mut out = FormalSum::zero();
    for (a, ma) in lefts {
        for (b, mb) in rights {
            out.add_scaled(&e.expand(a, b, key.variant)?, &BigInt::from(ma * mb));
        }
    }
    Ok(out)
}

/// `C_L(T_k) T[r:s]`.
pub fn capelli_left(
    k: &MultiIndex,
    key: &SymmetrizerKey,
    sig: &Signature,
) -> Result<FormalSum<BigInt>> {
    let e = Expander::new(BasicTableau::new(key.shape.clone()), *sig);
    let lefts = polarize_all(&left_operator(e.tableau(), k, sig)?, &key.left);
    sum_over(&e, &lefts, &BTreeMap::from([(key.right.clone(), 1)]), key)
}

/// `C_P(T_l) T[r:s]`.
pub fn capelli_right(
    l: &MultiIndex,
    key: &SymmetrizerKey,
    sig: &Signature,
) -> Result<FormalSum<BigInt>> {
    let e = Expander::new(BasicTableau::new(key.shape.clone()), *sig);
    let rights = polarize_all(&right_operator(e.tableau(), l, sig)?, &key.right);
    sum_over(&e, &BTreeMap::from([(key.left.clone(), 1)]), &rights, key)
}

/// `C(T_k,T_l) T[r:s] = C_L(T_k) C_P(T_l) T[r:s]`.
pub fn capelli_apply(
    k: &MultiIndex,
    l: &MultiIndex,
    key: &SymmetrizerKey,
    sig: &Signature,
) -> Result<FormalSum<BigInt>> {
    CapelliEvaluator::new(key.shape.clone(), *sig).apply(k, l, &key.left, &key.right)
}

/// Capelli operators for one shape, reusing its symmetrizer expander.
pub struct CapelliEvaluator {
    expander: Expander,
}

impl CapelliEvaluator {
    pub fn new(shape: Partition, sig: Signature) -> Self {
        CapelliEvaluator {
            expander: Expander::new(BasicTableau::new(shape), sig),
        }
    }

    pub fn expander(&self) -> &Expander {
        &self.expander
    }

    pub fn apply(
        &self,
        k: &MultiIndex,
        l: &MultiIndex,
        r: &MultiIndex,
        s: &MultiIndex,
    ) -> Result<FormalSum<BigInt>> {
        let (t, sig) = (self.expander.tableau(), self.expander.signature());
        t.check_word(r)?;
        t.check_word(s)?;
        let lefts = polarize_all(&left_operator(t, k, sig)?, r);
        let rights = polarize_all(&right_operator(t, l, sig)?, s);
        let key = SymmetrizerKey::new(t.shape().clone(), r.clone(), s.clone())?;
        sum_over(&self.expander, &lefts, &rights, &key)
    }

    /// Expansion of `T[ℓ̄(λ) : ℓ̲(λ)]`.
    pub fn colored_canonical(&self) -> Result<FormalSum<BigInt>> {
        let shape = self.expander.tableau().shape();
        self.expander
            .expand(&ell_bar(shape), &ell_under(shape), Default::default())
    }
}

/// The matrix `M[(k,l),(i,j)]` = coefficient of a fixed probe monomial of
/// `T[ℓ̄:ℓ̲]` in `C(T_k,T_l) T[i:j]`, over semistandard pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct CapelliMatrix {
    pub pairs: Vec<(MultiIndex, MultiIndex)>,
    pub probe: Option<Monomial>,
    pub entries: Vec<Vec<BigInt>>,
}

impl CapelliMatrix {
    pub fn compute(shape: &Partition, sig: &Signature) -> Result<Self> {
        let ev = CapelliEvaluator::new(shape.clone(), *sig);
        let ssyt = crate::combinatorics::enumerate_semistandard(shape, sig);
        let pairs: Vec<_> = ssyt
            .iter()
            .flat_map(|k| ssyt.iter().map(move |l| (k.clone(), l.clone())))
            .collect();
        let probe = ev.colored_canonical()?.monomials().next().cloned();
        let mut entries = Vec::with_capacity(pairs.len());
        for (k, l) in &pairs {
            let mut row = Vec::with_capacity(pairs.len());
            for (i, j) in &pairs {
                let image = ev.apply(k, l, i, j)?;
                let c = probe
                    .as_ref()
                    .and_then(|p| image.get(p).cloned())
                    .unwrap_or_default();
                row.push(c);
            }
            entries.push(row);
        }
        Ok(CapelliMatrix {
            pairs,
            probe,
            entries,
        })
    }

    pub fn rank(&self) -> usize {
        rank_integer_matrix(&self.entries)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "pairs": self.pairs.iter().map(|(k, l)| format!("{k}|{l}")).collect::<Vec<_>>(),
            "probe": self.probe.as_ref().map(|p| p.to_json()),
            "entries": self.entries.iter().map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "rank": self.rank(),
        })
    }
}
