//! The pairing `ξ_{u,v}(χ_{k,l})` and the two-sided action of `S(m|n,r)` on
//! formal sums.

use std::fmt;

use crate::combinatorics::{next_permutation, MultiIndex, Perm};
use crate::error::{Error, Result};
use crate::superalgebra::{normalize_monomial, star_sign, Coeff, FormalSum, Signature, Symbol};

/// Some `π` with `uπ = k` and `vπ = l`, if one exists.
fn realizing_perm(u: &MultiIndex, v: &MultiIndex, k: &MultiIndex, l: &MultiIndex) -> Option<Perm> {
    let r = u.len();
    if [v.len(), k.len(), l.len()].iter().any(|&x| x != r) {
        return None;
    }
    let mut used = vec![false; r];
    let mut images = Vec::with_capacity(r);
    for t in 0..r {
        let s = (0..r).find(|&s| !used[s] && u.get(s) == k.get(t) && v.get(s) == l.get(t))?;
        used[s] = true;
        images.push(s);
    }
    Some(Perm::from_images(images).expect("bijection by construction"))
}

/// `ξ_{u,v}(χ_{k,l})`: `(−1)^{s(u,π)+s(v,π)}` when `(k,l) = (uπ,vπ)`, else 0.
///
/// A vanishing `χ_{k,l}` (an odd generator repeated) evaluates to 0; for it the
/// sign would depend on the choice of `π`.
pub fn xi_evaluate(
    u: &MultiIndex,
    v: &MultiIndex,
    k: &MultiIndex,
    l: &MultiIndex,
    sig: &Signature,
) -> i8 {
    if k.len() != l.len() || matches!(normalize_monomial(k, l, sig), Ok(None)) {
        return 0;
    }
    match realizing_perm(u, v, k, l) {
        Some(pi) => star_sign(k, &pi, sig) * star_sign(l, &pi, sig),
        None => 0,
    }
}

/// A basis element `ξ_{u,v}`, stored by the lexicographically least pair of
/// its class for which `χ_{u,v}` is its own normal form with sign `+1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct XiElement {
    u: MultiIndex,
    v: MultiIndex,
}

impl XiElement {
    pub fn new(u: &MultiIndex, v: &MultiIndex, sig: &Signature) -> Result<Self> {
        if u.len() != v.len() {
            return Err(Error::LengthMismatch {
                expected: u.len(),
                actual: v.len(),
            });
        }
        let mut pairs: Vec<(Symbol, Symbol)> = u
            .entries()
            .iter()
            .copied()
            .zip(v.entries().iter().copied())
            .collect();
        pairs.sort();
        loop {
            let a = MultiIndex::new(pairs.iter().map(|p| p.0).collect());
            let b = MultiIndex::new(pairs.iter().map(|p| p.1).collect());
            if let Some((1, _)) = normalize_monomial(&a, &b, sig)? {
                return Ok(XiElement { u: a, v: b });
            }
            if !next_permutation(&mut pairs) {
                return Err(Error::NoPositiveRepresentative);
            }
        }
    }

    pub fn left(&self) -> &MultiIndex {
        &self.u
    }

    pub fn right(&self) -> &MultiIndex {
        &self.v
    }

    pub fn evaluate(&self, k: &MultiIndex, l: &MultiIndex, sig: &Signature) -> i8 {
        xi_evaluate(&self.u, &self.v, k, l, sig)
    }
}

impl fmt::Display for XiElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "xi[{}:{}]", self.u, self.v)
    }
}

/// `ξ_{u,v} · s`, with `ξ_{u,v} χ_{i,j} = Σ_a ξ_{u,v}(χ_{a,j}) χ_{i,a}`.
pub fn act_left<R: Coeff>(
    u: &MultiIndex,
    v: &MultiIndex,
    s: &FormalSum<R>,
    sig: &Signature,
) -> Result<FormalSum<R>> {
    let candidates = u.rearrangements();
    let mut out = FormalSum::zero();
    for (mon, c) in s.iter() {
        let (eps, i, j) = mon.lift(sig);
        if i.len() != u.len() {
            return Err(Error::LengthMismatch {
                expected: u.len(),
                actual: i.len(),
            });
        }
        for a in &candidates {
            let x = xi_evaluate(u, v, a, &j, sig);
            if x == 0 {
                continue;
            }
            if let Some((sgn, m2)) = normalize_monomial(&i, a, sig)? {
                out.add_term(m2, c.mul_int((x * sgn * eps) as i64));
            }
        }
    }
    Ok(out)
}

/// `s · ξ_{u,v}`, with `χ_{i,j} ξ_{u,v} = Σ_b ξ_{u,v}(χ_{i,b}) χ_{b,j}`.
pub fn act_right<R: Coeff>(
    u: &MultiIndex,
    v: &MultiIndex,
    s: &FormalSum<R>,
    sig: &Signature,
) -> Result<FormalSum<R>> {
    let candidates = v.rearrangements();
    let mut out = FormalSum::zero();
    for (mon, c) in s.iter() {
        let (eps, i, j) = mon.lift(sig);
        if i.len() != u.len() {
            return Err(Error::LengthMismatch {
                expected: u.len(),
                actual: i.len(),
            });
        }
        for b in &candidates {
            let x = xi_evaluate(u, v, &i, b, sig);
            if x == 0 {
                continue;
            }
            if let Some((sgn, m2)) = normalize_monomial(b, &j, sig)? {
                out.add_term(m2, c.mul_int((x * sgn * eps) as i64));
            }
        }
    }
    Ok(out)
}
