//! Partitions, basic tableaux, multi-indices, semistandard tableaux, dominance
//! statistics, Garnir transversals and the row/column groups of a tableau.
//!
//! Cells of a basic tableau are labelled `0..r` row-major: row 1 holds
//! `0..λ_1`, row 2 the next `λ_2` labels and so on. A multi-index `i` fills the
//! tableau by putting `i[t]` into the cell labelled `t`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::superalgebra::{Signature, Symbol};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer `r` being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_k` with 1-based `k`, zero past the last part.
    pub fn part(&self, k: usize) -> usize {
        if k == 0 {
            return 0;
        }
        self.parts.get(k - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// `λ_{m+1} <= n`.
    pub fn is_hook(&self, m: usize, n: usize) -> bool {
        self.part(m + 1) <= n
    }

    /// All partitions of `r`, in reverse lexicographic order (`(r)` first).
    pub fn all(r: usize) -> Vec<Partition> {
        fn go(rem: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for k in (1..=rem.min(max)).rev() {
                prefix.push(k);
                go(rem - k, k, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(r, r, &mut Vec::new(), &mut out);
        out
    }

    /// All `(m|n)`-hook partitions of `r`.
    pub fn hooks(r: usize, m: usize, n: usize) -> Vec<Partition> {
        Partition::all(r)
            .into_iter()
            .filter(|l| l.is_hook(m, n))
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| t.trim())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.is_empty() {
            return Err(Error::InvalidPartition(s.to_string()));
        }
        Partition::new(parts)
    }
}

/// A permutation of `0..r`, stored as its image list: `self[t] = σ(t)`.
///
/// Products compose right to left, `(πσ)(t) = π(σ(t))`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(r: usize) -> Perm {
        Perm((0..r).collect())
    }

    /// Builds a permutation from its image list, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Perm> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || seen[x] {
                return Err(Error::Usage(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Perm(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, t: usize) -> usize {
        self.0[t]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree());
        Perm(other.0.iter().map(|&t| self.0[t]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (t, &x) in self.0.iter().enumerate() {
            inv[x] = t;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(t, &x)| t == x)
    }

    pub fn sign(&self) -> i8 {
        let mut inversions = 0usize;
        for a in 0..self.0.len() {
            for b in a + 1..self.0.len() {
                if self.0[a] > self.0[b] {
                    inversions += 1;
                }
            }
        }
        if inversions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// A word of length `r` over the (possibly coloured) alphabet.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(Vec<Symbol>);

impl MultiIndex {
    pub fn new(entries: Vec<Symbol>) -> Self {
        MultiIndex(entries)
    }

    /// A word of plain symbols given by their numbers.
    pub fn plain(entries: &[u16]) -> Self {
        MultiIndex(entries.iter().map(|&u| Symbol::Plain(u)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Symbol] {
        &self.0
    }

    pub fn get(&self, t: usize) -> Symbol {
        self.0[t]
    }

    pub fn set(&mut self, t: usize, s: Symbol) {
        self.0[t] = s;
    }

    pub fn is_plain(&self) -> bool {
        self.0.iter().all(|s| s.is_plain())
    }

    pub fn ensure_plain(&self) -> Result<()> {
        match self.0.iter().find(|s| !s.is_plain()) {
            Some(s) => Err(Error::ColoredSymbol(s.to_string())),
            None => Ok(()),
        }
    }

    /// The unsigned permuted word `jσ` with `(jσ)_t = j_{σ(t)}`.
    pub fn permuted(&self, sigma: &Perm) -> MultiIndex {
        MultiIndex(sigma.images().iter().map(|&s| self.0[s]).collect())
    }

    /// Number of occurrences of `s`.
    pub fn count(&self, s: Symbol) -> usize {
        self.0.iter().filter(|&&x| x == s).count()
    }

    /// Every word of length `r` over the plain alphabet of `sig`, lexicographically.
    pub fn all_plain(sig: &Signature, r: usize) -> Vec<MultiIndex> {
        let k = sig.alphabet_len() as u16;
        let mut out = Vec::new();
        let mut cur = vec![1u16; r];
        loop {
            out.push(MultiIndex::plain(&cur));
            let mut pos = r;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                if cur[pos] < k {
                    cur[pos] += 1;
                    for c in cur.iter_mut().skip(pos + 1) {
                        *c = 1;
                    }
                    break;
                }
            }
        }
    }

    /// Distinct rearrangements of the word, in lexicographic order.
    pub fn rearrangements(&self) -> Vec<MultiIndex> {
        let mut cur = self.0.clone();
        cur.sort();
        let mut out = vec![MultiIndex(cur.clone())];
        while next_permutation(&mut cur) {
            out.push(MultiIndex(cur.clone()));
        }
        out
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for MultiIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|t| t.trim())
            .filter(|t| !t.is_empty())
            .map(Symbol::from_str)
            .collect::<Result<Vec<_>>>()?;
        Ok(MultiIndex(entries))
    }
}

/// Lexicographic successor in place; false once the last permutation is reached.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    Row,
    Column,
}

/// A fixed row-major bijection of the diagram `[λ]` with `0..r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasicTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
    columns: Vec<Vec<usize>>,
    /// `(row, column)` of every label, 0-based.
    position: Vec<(usize, usize)>,
}

impl BasicTableau {
    pub fn new(shape: Partition) -> Self {
        let mut rows = Vec::with_capacity(shape.len());
        let mut position = Vec::with_capacity(shape.size());
        let mut label = 0;
        for (ri, &len) in shape.parts().iter().enumerate() {
            let row: Vec<usize> = (label..label + len).collect();
            position.extend((0..len).map(|c| (ri, c)));
            label += len;
            rows.push(row);
        }
        let width = shape.part(1);
        let columns = (0..width)
            .map(|c| {
                rows.iter()
                    .filter(|row| row.len() > c)
                    .map(|row| row[c])
                    .collect()
            })
            .collect();
        BasicTableau {
            shape,
            rows,
            columns,
            position,
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.position.len()
    }

    /// Labels of each row, top to bottom.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Labels of each column, left to right.
    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    pub fn lines(&self, axis: Axis) -> &[Vec<usize>] {
        match axis {
            Axis::Row => &self.rows,
            Axis::Column => &self.columns,
        }
    }

    pub fn position(&self, label: usize) -> (usize, usize) {
        self.position[label]
    }

    pub fn check_word(&self, w: &MultiIndex) -> Result<()> {
        if w.len() != self.size() {
            return Err(Error::LengthMismatch {
                expected: self.size(),
                actual: w.len(),
            });
        }
        Ok(())
    }

    /// The filled tableau `T_w` as rows of symbols.
    pub fn fill(&self, w: &MultiIndex) -> Vec<Vec<Symbol>> {
        self.rows
            .iter()
            .map(|row| row.iter().map(|&t| w.get(t)).collect())
            .collect()
    }

    /// The word whose filled tableau has the given rows.
    pub fn word_from_rows(&self, rows: &[Vec<Symbol>]) -> Result<MultiIndex> {
        let lens: Vec<usize> = rows.iter().map(|r| r.len()).collect();
        if lens != self.shape.parts() {
            return Err(Error::ShapeMismatch(format!(
                "rows of lengths {lens:?} do not fill {}",
                self.shape
            )));
        }
        Ok(MultiIndex(rows.concat()))
    }

    /// Multi-line text form: one row per line, entries separated by spaces.
    pub fn render(&self, w: &MultiIndex) -> String {
        self.fill(w)
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Order of `R(T)` (axis = row) or `C(T)` (axis = column).
    pub fn group_order(&self, axis: Axis) -> u128 {
        self.lines(axis)
            .iter()
            .map(|l| factorial(l.len()))
            .product()
    }

    /// Streams the row group `R(T)` or the column group `C(T)` with signs.
    pub fn iterate_group(&self, axis: Axis) -> GroupIter {
        GroupIter::new(self.size(), self.lines(axis).to_vec())
    }
}

pub(crate) fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

/// Iterates over the direct product of the symmetric groups on disjoint blocks.
pub struct GroupIter {
    degree: usize,
    blocks: Vec<Vec<usize>>,
    state: Vec<Vec<usize>>,
    done: bool,
}

impl GroupIter {
    fn new(degree: usize, blocks: Vec<Vec<usize>>) -> Self {
        let state = blocks.iter().map(|b| (0..b.len()).collect()).collect();
        GroupIter {
            degree,
            blocks,
            state,
            done: false,
        }
    }
}

impl Iterator for GroupIter {
    type Item = (Perm, i8);

    fn next(&mut self) -> Option<(Perm, i8)> {
        if self.done {
            return None;
        }
        let mut images: Vec<usize> = (0..self.degree).collect();
        for (block, st) in self.blocks.iter().zip(&self.state) {
            for (k, &label) in block.iter().enumerate() {
                images[label] = block[st[k]];
            }
        }
        let perm = Perm(images);
        let sign = perm.sign();
        // odometer over per-block lexicographic permutations
        let mut advanced = false;
        for st in self.state.iter_mut().rev() {
            if next_permutation(st) {
                advanced = true;
                break;
            }
            st.sort_unstable();
        }
        if !advanced {
            self.done = true;
        }
        Some((perm, sign))
    }
}

/// Coset representatives of `S_X × S_Y` in `S_{X∪Y}`, as permutations of `0..r`.
///
/// A representative is determined by the set `A = σ(X)`: it maps `X` onto `A`
/// and `Y` onto the complement, both order-preserving. The identity comes first,
/// the rest follow the lexicographic order of `A`.
pub fn garnir_transversal(x: &[usize], y: &[usize], r: usize) -> Result<Vec<Perm>> {
    if let Some(&t) = x.iter().find(|t| y.contains(t)) {
        return Err(Error::Overlap(t));
    }
    if let Some(&t) = x.iter().chain(y).find(|&&t| t >= r) {
        return Err(Error::Usage(format!(
            "label {t} out of range for degree {r}"
        )));
    }
    let mut xs = x.to_vec();
    xs.sort_unstable();
    let mut ys = y.to_vec();
    ys.sort_unstable();
    let mut union: Vec<usize> = xs.iter().chain(&ys).copied().collect();
    union.sort_unstable();

    let mut out = vec![Perm::identity(r)];
    for subset in combinations(union.len(), xs.len()) {
        let a: Vec<usize> = subset.iter().map(|&k| union[k]).collect();
        if a == xs {
            continue;
        }
        let rest: Vec<usize> = union.iter().copied().filter(|t| !a.contains(t)).collect();
        let mut images: Vec<usize> = (0..r).collect();
        for (&from, &to) in xs.iter().zip(&a) {
            images[from] = to;
        }
        for (&from, &to) in ys.iter().zip(&rest) {
            images[from] = to;
        }
        out.push(Perm(images));
    }
    Ok(out)
}

/// All `k`-subsets of `0..n` as sorted index lists, lexicographically.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - k + i {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Checks the four semistandard conditions on `T_i` for a plain word.
pub fn is_semistandard(t: &BasicTableau, i: &MultiIndex, sig: &Signature) -> bool {
    if i.len() != t.size() || !i.is_plain() {
        return false;
    }
    for row in t.rows() {
        for w in row.windows(2) {
            let (a, b) = (i.get(w[0]), i.get(w[1]));
            if a > b || (a == b && sig.is_odd(a)) {
                return false;
            }
        }
    }
    for col in t.columns() {
        for w in col.windows(2) {
            let (a, b) = (i.get(w[0]), i.get(w[1]));
            if a > b || (a == b && !sig.is_odd(a)) {
                return false;
            }
        }
    }
    true
}

/// All semistandard fillings of `λ`, lexicographic in the row-major reading word.
pub fn enumerate_semistandard(shape: &Partition, sig: &Signature) -> Vec<MultiIndex> {
    let t = BasicTableau::new(shape.clone());
    let r = t.size();
    let k = sig.alphabet_len() as u16;
    let mut out = Vec::new();
    let mut word = vec![Symbol::Plain(1); r];

    fn fits(t: &BasicTableau, sig: &Signature, word: &[Symbol], label: usize, s: Symbol) -> bool {
        let (row, col) = t.position(label);
        if col > 0 {
            let left = word[t.rows()[row][col - 1]];
            if left > s || (left == s && sig.is_odd(s)) {
                return false;
            }
        }
        if row > 0 {
            let up = word[t.rows()[row - 1][col]];
            if up > s || (up == s && !sig.is_odd(s)) {
                return false;
            }
        }
        true
    }

    fn go(
        t: &BasicTableau,
        sig: &Signature,
        k: u16,
        label: usize,
        word: &mut Vec<Symbol>,
        out: &mut Vec<MultiIndex>,
    ) {
        if label == word.len() {
            out.push(MultiIndex(word.clone()));
            return;
        }
        for u in 1..=k {
            let s = Symbol::Plain(u);
            if fits(t, sig, word, label, s) {
                word[label] = s;
                go(t, sig, k, label + 1, word, out);
            }
        }
    }

    go(&t, sig, k, 0, &mut word, &mut out);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StatKind {
    /// `c_{qp}`: symbols `<= p` in the first `q` columns.
    Column,
    /// `r_{qp}`: symbols `<= p` in the first `q` rows.
    Row,
}

/// Prefix-count statistics of a filled tableau, listed `q`-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DominanceStats {
    pub kind: StatKind,
    pub shape: Partition,
    pub stats: Vec<usize>,
}

impl DominanceStats {
    /// Statistics over the plain alphabet `1..=m+n`.
    pub fn compute(t: &BasicTableau, w: &MultiIndex, sig: &Signature, kind: StatKind) -> Self {
        let lines = match kind {
            StatKind::Column => t.columns(),
            StatKind::Row => t.rows(),
        };
        let k = sig.alphabet_len() as u16;
        let mut stats = Vec::with_capacity(lines.len() * k as usize);
        for q in 1..=lines.len() {
            for p in 1..=k {
                let bound = Symbol::Plain(p);
                let c = lines[..q]
                    .iter()
                    .flatten()
                    .filter(|&&t| w.get(t) <= bound)
                    .count();
                stats.push(c);
            }
        }
        DominanceStats {
            kind,
            shape: t.shape().clone(),
            stats,
        }
    }

    pub fn column(t: &BasicTableau, w: &MultiIndex, sig: &Signature) -> Self {
        Self::compute(t, w, sig, StatKind::Column)
    }

    pub fn row(t: &BasicTableau, w: &MultiIndex, sig: &Signature) -> Self {
        Self::compute(t, w, sig, StatKind::Row)
    }
}

/// `a ⊴ b` in the lexicographic order of the stat lists.
pub fn dominance_leq(a: &DominanceStats, b: &DominanceStats) -> Result<bool> {
    if a.shape != b.shape || a.kind != b.kind || a.stats.len() != b.stats.len() {
        return Err(Error::ShapeMismatch(format!(
            "cannot compare {:?} stats of {} with {:?} stats of {}",
            a.kind, a.shape, b.kind, b.shape
        )));
    }
    Ok(a.stats.cmp(&b.stats) != Ordering::Greater)
}
