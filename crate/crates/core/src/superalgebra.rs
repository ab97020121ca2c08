//! Symbols, the signed permutation action on words, normal forms of
//! supercommutative monomials in the generators `c_{uv}`, and exact formal sums.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::combinatorics::{MultiIndex, Perm};
use crate::error::{Error, Result};

/// A letter of the extended alphabet.
///
/// The derived order is the alphabet order: plain symbols first, then the
/// even (underlined) colours, then the odd (overlined) colours.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Plain(u16),
    ColoredEven(u16),
    ColoredOdd(u16),
}

impl Symbol {
    pub fn is_plain(self) -> bool {
        matches!(self, Symbol::Plain(_))
    }

    pub fn to_json(self) -> Value {
        match self {
            Symbol::Plain(u) => json!(u),
            other => json!(other.to_string()),
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Plain(u) => write!(f, "{u}"),
            Symbol::ColoredEven(k) => write!(f, "{k}_"),
            Symbol::ColoredOdd(k) => write!(f, "{k}^"),
        }
    }
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidSymbol(s.to_string());
        let s = s.trim();
        let (digits, ctor): (&str, fn(u16) -> Symbol) = if let Some(d) = s.strip_suffix('_') {
            (d, Symbol::ColoredEven)
        } else if let Some(d) = s.strip_suffix('^') {
            (d, Symbol::ColoredOdd)
        } else {
            (s, Symbol::Plain)
        };
        let k: u16 = digits.parse().map_err(|_| bad())?;
        if k == 0 {
            return Err(bad());
        }
        Ok(ctor(k))
    }
}

/// The pair `(m|n)`: plain symbols `1..=m` are even, `m+1..=m+n` odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    pub m: usize,
    pub n: usize,
}

impl Signature {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m + n == 0 || m + n > u16::MAX as usize {
            return Err(Error::InvalidSignature { m, n });
        }
        Ok(Signature { m, n })
    }

    pub fn alphabet_len(&self) -> usize {
        self.m + self.n
    }

    pub fn is_odd(&self, s: Symbol) -> bool {
        match s {
            Symbol::Plain(u) => u as usize > self.m,
            Symbol::ColoredEven(_) => false,
            Symbol::ColoredOdd(_) => true,
        }
    }

    pub fn parity(&self, s: Symbol) -> u8 {
        self.is_odd(s) as u8
    }

    /// Parity of the generator `c_{uv}`.
    pub fn generator_parity(&self, u: Symbol, v: Symbol) -> u8 {
        (self.parity(u) + self.parity(v)) % 2
    }

    pub fn plain_symbols(&self) -> impl Iterator<Item = Symbol> {
        (1..=self.alphabet_len() as u16).map(Symbol::Plain)
    }

    /// Rejects plain symbols outside `1..=m+n`.
    pub fn check_word(&self, w: &MultiIndex) -> Result<()> {
        for s in w.entries() {
            if let Symbol::Plain(u) = *s {
                if u as usize > self.alphabet_len() {
                    return Err(Error::InvalidSymbol(format!(
                        "{u} exceeds m+n = {}",
                        self.alphabet_len()
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Which index of `χ_{i,j}` (or of `T[i:j]`) an operator touches: `Left` is
/// the row index `i`, `Right` the column index `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            _ => Err(Error::Usage(format!("unknown side `{s}`"))),
        }
    }
}

/// `±` times a word, as produced by the star action.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedMultiIndex {
    pub sign: i8,
    pub word: MultiIndex,
}

/// `j*σ = (−1)^{s(j,σ)} jσ` with `(jσ)_t = j_{σ(t)}`.
///
/// `s(j,σ)` counts the pairs `a < b` with `σ(a) > σ(b)` whose letters in `jσ`
/// are both odd, i.e. the transpositions of odd letters needed to rearrange
/// `j` into `jσ`. This makes `*` a right action: `j*(πσ) = (j*π)*σ`.
pub fn star_action(j: &MultiIndex, sigma: &Perm, sig: &Signature) -> Result<SignedMultiIndex> {
    if j.len() != sigma.degree() {
        return Err(Error::LengthMismatch {
            expected: sigma.degree(),
            actual: j.len(),
        });
    }
    let word = j.permuted(sigma);
    let sign = star_sign(&word, sigma, sig);
    Ok(SignedMultiIndex { sign, word })
}

/// Sign of the star action given the already permuted word.
pub(crate) fn star_sign(permuted: &MultiIndex, sigma: &Perm, sig: &Signature) -> i8 {
    let odd: Vec<bool> = permuted.entries().iter().map(|&s| sig.is_odd(s)).collect();
    let img = sigma.images();
    let mut flips = 0u32;
    for a in 0..img.len() {
        if !odd[a] {
            continue;
        }
        for b in a + 1..img.len() {
            if odd[b] && img[a] > img[b] {
                flips += 1;
            }
        }
    }
    if flips.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// A normal-form monomial: generators `c_{uv}` sorted by `(u, v)` with
/// positive exponents, odd generators having exponent one.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    gens: Vec<(Symbol, Symbol, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn generators(&self) -> &[(Symbol, Symbol, u32)] {
        &self.gens
    }

    pub fn degree(&self) -> u32 {
        self.gens.iter().map(|g| g.2).sum()
    }

    pub fn exponent(&self, u: Symbol, v: Symbol) -> u32 {
        self.gens
            .iter()
            .find(|g| g.0 == u && g.1 == v)
            .map_or(0, |g| g.2)
    }

    /// The generator word in canonical order, repeated by exponent.
    pub fn word(&self) -> Vec<(Symbol, Symbol)> {
        self.gens
            .iter()
            .flat_map(|&(u, v, e)| std::iter::repeat_n((u, v), e as usize))
            .collect()
    }

    /// A pair `(i, j)` with `χ_{i,j} = ε · self`, together with `ε`.
    pub fn lift(&self, sig: &Signature) -> (i8, MultiIndex, MultiIndex) {
        let w = self.word();
        let i = MultiIndex::new(w.iter().map(|g| g.0).collect());
        let j = MultiIndex::new(w.iter().map(|g| g.1).collect());
        (prefactor(&i, &j, sig), i, j)
    }

    /// Supercommutative product, `None` when an odd generator would repeat.
    pub fn mul(&self, other: &Monomial, sig: &Signature) -> Option<(i8, Monomial)> {
        let mut w = self.word();
        w.extend(other.word());
        normalize_generators(&w, sig)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.gens
                .iter()
                .map(|&(u, v, e)| json!([u.to_json(), v.to_json(), e]))
                .collect(),
        )
    }

    pub fn is_plain(&self) -> bool {
        self.gens.iter().all(|g| g.0.is_plain() && g.1.is_plain())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .gens
            .iter()
            .map(|&(u, v, e)| {
                let base = if u.is_plain()
                    && v.is_plain()
                    && u.to_string().len() == 1
                    && v.to_string().len() == 1
                {
                    format!("c{u}{v}")
                } else {
                    format!("c[{u},{v}]")
                };
                if e == 1 {
                    base
                } else {
                    format!("{base}^{e}")
                }
            })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

/// `(−1)^{Σ_t |i_t| (|i_{t+1}|+|j_{t+1}|+…+|i_r|+|j_r|)}`.
pub(crate) fn prefactor(i: &MultiIndex, j: &MultiIndex, sig: &Signature) -> i8 {
    let r = i.len();
    let mut tail = 0u32;
    let mut exp = 0u32;
    for t in (0..r).rev() {
        if sig.is_odd(i.get(t)) {
            exp += tail;
        }
        tail += sig.parity(i.get(t)) as u32 + sig.parity(j.get(t)) as u32;
    }
    if exp.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Sorts a product of generators into canonical order with Koszul signs.
pub fn normalize_generators(word: &[(Symbol, Symbol)], sig: &Signature) -> Option<(i8, Monomial)> {
    let odd: Vec<bool> = word
        .iter()
        .map(|&(u, v)| sig.generator_parity(u, v) == 1)
        .collect();
    let mut flips = 0u32;
    for a in 0..word.len() {
        if !odd[a] {
            continue;
        }
        for b in a + 1..word.len() {
            if odd[b] && word[a] > word[b] {
                flips += 1;
            }
        }
    }
    let mut sorted = word.to_vec();
    sorted.sort_unstable();
    let mut gens: Vec<(Symbol, Symbol, u32)> = Vec::new();
    for (u, v) in sorted {
        match gens.last_mut() {
            Some(last) if last.0 == u && last.1 == v => {
                if sig.generator_parity(u, v) == 1 {
                    return None;
                }
                last.2 += 1;
            }
            _ => gens.push((u, v, 1)),
        }
    }
    let sign = if flips.is_multiple_of(2) { 1 } else { -1 };
    Some((sign, Monomial { gens }))
}

/// `χ_{i,j}` in normal form, `Ok(None)` when it vanishes.
pub fn normalize_monomial(
    i: &MultiIndex,
    j: &MultiIndex,
    sig: &Signature,
) -> Result<Option<(i8, Monomial)>> {
    if i.len() != j.len() {
        return Err(Error::LengthMismatch {
            expected: i.len(),
            actual: j.len(),
        });
    }
    let word: Vec<(Symbol, Symbol)> = i
        .entries()
        .iter()
        .copied()
        .zip(j.entries().iter().copied())
        .collect();
    Ok(normalize_generators(&word, sig).map(|(s, mon)| (s * prefactor(i, j, sig), mon)))
}

/// Number of normal-form monomials of degree `r` in the plain generators.
pub fn monomial_count(sig: &Signature, r: usize) -> u128 {
    let (m, n) = (sig.m as u128, sig.n as u128);
    let even = m * m + n * n;
    let odd = 2 * m * n;
    (0..=r as u128)
        .filter(|&k| k <= odd)
        .map(|k| binomial(odd, k) * multichoose(even, r as u128 - k))
        .sum()
}

pub(crate) fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, t| acc * (n - t) / (t + 1))
}

fn multichoose(n: u128, k: u128) -> u128 {
    if k == 0 {
        return 1;
    }
    if n == 0 {
        return 0;
    }
    binomial(n + k - 1, k)
}

/// Exact coefficient rings: ℤ, ℚ and prime fields.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn mul_int(&self, k: i64) -> Self;
}

impl Coeff for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn mul_int(&self, k: i64) -> Self {
        self * k
    }
}

impl Coeff for BigRational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn mul_int(&self, k: i64) -> Self {
        self * BigRational::from_integer(k.into())
    }
}

/// An element of `𝔽_p`; both operands of a binary operation must share `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: i64, modulus: u64) -> Fp {
        let v = value.rem_euclid(modulus as i64) as u64;
        Fp { value: v, modulus }
    }

    pub fn from_bigint(value: &BigInt, modulus: u64) -> Fp {
        let v = value
            .mod_floor(&BigInt::from(modulus))
            .to_u64()
            .expect("reduced below modulus");
        Fp { value: v, modulus }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn inverse(&self) -> Option<Fp> {
        if self.value == 0 {
            return None;
        }
        // Fermat: a^{p-2}
        let mut base = self.value as u128;
        let p = self.modulus as u128;
        let mut e = self.modulus - 2;
        let mut acc = 1u128;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Some(Fp {
            value: acc as u64,
            modulus: self.modulus,
        })
    }

    fn same(&self, other: &Fp) {
        assert_eq!(self.modulus, other.modulus, "mixed characteristics");
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Coeff for Fp {
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn add(&self, other: &Self) -> Self {
        self.same(other);
        Fp {
            value: (self.value + other.value) % self.modulus,
            modulus: self.modulus,
        }
    }
    fn neg(&self) -> Self {
        Fp {
            value: (self.modulus - self.value) % self.modulus,
            modulus: self.modulus,
        }
    }
    fn mul(&self, other: &Self) -> Self {
        self.same(other);
        let v = (self.value as u128 * other.value as u128 % self.modulus as u128) as u64;
        Fp {
            value: v,
            modulus: self.modulus,
        }
    }
    fn mul_int(&self, k: i64) -> Self {
        self.mul(&Fp::new(k.rem_euclid(self.modulus as i64), self.modulus))
    }
}

/// A finitely supported map from monomials to nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSum<R> {
    terms: BTreeMap<Monomial, R>,
}

impl<R> Default for FormalSum<R> {
    fn default() -> Self {
        FormalSum {
            terms: BTreeMap::new(),
        }
    }
}

impl<R: Coeff> FormalSum<R> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(mon: Monomial, c: R) -> Self {
        let mut s = Self::zero();
        s.add_term(mon, c);
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, mon: &Monomial) -> Option<&R> {
        self.terms.get(mon)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &R)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, mon: Monomial, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mon) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().add(&c);
                if v.is_zero() {
                    e.remove();
                } else {
                    e.insert(v);
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add_assign(&mut self, other: &FormalSum<R>) {
        for (mon, c) in &other.terms {
            self.add_term(mon.clone(), c.clone());
        }
    }

    /// `self += k · other`.
    pub fn add_scaled(&mut self, other: &FormalSum<R>, k: &R) {
        for (mon, c) in &other.terms {
            self.add_term(mon.clone(), c.mul(k));
        }
    }

    pub fn add(&self, other: &FormalSum<R>) -> FormalSum<R> {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn neg(&self) -> FormalSum<R> {
        FormalSum {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &R) -> FormalSum<R> {
        let mut out = FormalSum::zero();
        out.add_scaled(self, k);
        out
    }

    pub fn map_coeffs<S: Coeff>(&self, f: impl Fn(&R) -> S) -> FormalSum<S> {
        let mut out = FormalSum::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// JSON form `[[monomial, "coeff"], …]` in canonical monomial order.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| json!([m.to_json(), c.to_string()]))
                .collect(),
        )
    }
}

impl<R: Coeff> fmt::Display for FormalSum<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("({c})*{m}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl<R: Coeff> FromIterator<(Monomial, R)> for FormalSum<R> {
    fn from_iter<I: IntoIterator<Item = (Monomial, R)>>(iter: I) -> Self {
        let mut s = FormalSum::zero();
        for (m, c) in iter {
            s.add_term(m, c);
        }
        s
    }
}

impl FormalSum<BigInt> {
    /// Divides every coefficient by `d`, failing on a nonzero remainder.
    pub fn exact_divide(&self, d: &BigInt) -> Result<FormalSum<BigInt>> {
        if Zero::is_zero(d) {
            return Err(Error::Integrality("division by zero".into()));
        }
        let mut out = FormalSum::zero();
        for (m, c) in &self.terms {
            let (q, rem) = c.div_rem(d);
            if !Zero::is_zero(&rem) {
                return Err(Error::Integrality(format!(
                    "coefficient {c} of {m} is not divisible by {d}"
                )));
            }
            out.add_term(m.clone(), q);
        }
        Ok(out)
    }

    pub fn to_rational(&self) -> FormalSum<BigRational> {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }
}

impl FormalSum<BigRational> {
    pub fn divide(&self, d: &BigRational) -> Result<FormalSum<BigRational>> {
        if Zero::is_zero(d) {
            return Err(Error::Integrality("division by zero".into()));
        }
        Ok(self.map_coeffs(|c| c / d))
    }

    /// The integral sum with the same coefficients, if they are all integers.
    pub fn to_integral(&self) -> Result<FormalSum<BigInt>> {
        let mut out = FormalSum::zero();
        for (m, c) in &self.terms {
            if !c.is_integer() {
                return Err(Error::Integrality(format!("coefficient {c} of {m}")));
            }
            out.add_term(m.clone(), c.to_integer());
        }
        Ok(out)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

/// Rational number rendered `p/q`, or `p` when integral.
pub fn rational_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Sign of an integer-valued rational, for reports.
pub fn sign_of(q: &BigRational) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
pub(crate) fn big(k: i64) -> BigInt {
    BigInt::from(k)
}

#[cfg(test)]
pub(crate) fn rat(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}
