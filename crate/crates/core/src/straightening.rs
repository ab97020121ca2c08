//! Straightening of symmetrizers to the semistandard basis.
//!
//! Each side is rewritten independently. On the right the columns of `T_j`
//! are sorted first (picking up `sgn(σ)` and the star sign), then the first
//! pair of adjacent columns that breaks the semistandard row condition is
//! resolved by a Garnir relation; the left side does the same with rows of
//! `T_i` and no permutation signs. The coefficients of one side never depend
//! on the other index, so the pair result is a product of two word maps.
//!
//! In integral mode the same recursion runs on modified symmetrizers: a step
//! `T[·:w] = Σ a_u T[·:u]` becomes `T{·:w} = Σ a_u c(T_u)/c(T_w) T{·:u}` (and
//! with `r` on the left), and every such quotient must be an integer.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{Map, Value};

use crate::combinatorics::{
    dominance_leq, garnir_transversal, is_semistandard, BasicTableau, DominanceStats, MultiIndex,
    Perm,
};
use crate::error::{Error, Result};
use crate::superalgebra::{star_sign, Coeff, FormalSum, Side, Signature};
use crate::symmetrizer::{column_factor, row_factor, Expander, Variant};

/// Coefficient rings the recursion can run over.
pub trait StraightenCoeff: Coeff + 'static {
    /// Whether the basis elements are modified symmetrizers.
    const MODIFIED: bool;

    fn from_i64(k: i64) -> Self;

    /// The exact quotient `num / den`, or an integrality error.
    fn ratio(num: BigInt, den: BigInt) -> Result<Self>;

    /// Expansion of the basis element indexed by `(k, l)`.
    fn basis_element(e: &Expander, k: &MultiIndex, l: &MultiIndex) -> Result<FormalSum<Self>>;
}

impl StraightenCoeff for BigRational {
    const MODIFIED: bool = false;

    fn from_i64(k: i64) -> Self {
        BigRational::from_integer(k.into())
    }

    fn ratio(num: BigInt, den: BigInt) -> Result<Self> {
        if Zero::is_zero(&den) {
            return Err(Error::Straightening("zero pivot".into()));
        }
        Ok(BigRational::new(num, den))
    }

    fn basis_element(e: &Expander, k: &MultiIndex, l: &MultiIndex) -> Result<FormalSum<Self>> {
        Ok(e.expand(k, l, Variant::default())?.to_rational())
    }
}

impl StraightenCoeff for BigInt {
    const MODIFIED: bool = true;

    fn from_i64(k: i64) -> Self {
        BigInt::from(k)
    }

    fn ratio(num: BigInt, den: BigInt) -> Result<Self> {
        if Zero::is_zero(&den) {
            return Err(Error::Straightening("zero pivot".into()));
        }
        let (q, r) = num.div_rem(&den);
        if !Zero::is_zero(&r) {
            return Err(Error::Integrality(format!(
                "straightening step {num}/{den}"
            )));
        }
        Ok(q)
    }

    fn basis_element(e: &Expander, k: &MultiIndex, l: &MultiIndex) -> Result<FormalSum<Self>> {
        e.modified(k, l)
    }
}

type WordMap<R> = BTreeMap<MultiIndex, R>;

/// Straightens symmetrizers of one shape; results are memoised per side and
/// word, so repeated calls are cheap. Safe to share across threads.
pub struct Straightener<R> {
    expander: Expander,
    memo: RwLock<HashMap<(Side, MultiIndex), Arc<WordMap<R>>>>,
}

impl<R: StraightenCoeff> Straightener<R> {
    pub fn new(tableau: BasicTableau, sig: Signature) -> Self {
        Straightener {
            expander: Expander::new(tableau, sig),
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn tableau(&self) -> &BasicTableau {
        self.expander.tableau()
    }

    pub fn signature(&self) -> &Signature {
        self.expander.signature()
    }

    pub fn expander(&self) -> &Expander {
        &self.expander
    }

    fn lines(&self, side: Side) -> &[Vec<usize>] {
        match side {
            Side::Left => self.tableau().rows(),
            Side::Right => self.tableau().columns(),
        }
    }

    fn check(&self, w: &MultiIndex) -> Result<()> {
        self.tableau().check_word(w)?;
        w.ensure_plain()?;
        self.signature().check_word(w)
    }

    /// Weight of a word in integral mode: `c(T_w)` on the right, `r(T_w)` on the left.
    fn weight(&self, side: Side, w: &MultiIndex) -> BigInt {
        if !R::MODIFIED {
            return BigInt::one();
        }
        match side {
            Side::Left => row_factor(self.tableau(), w, self.signature()),
            Side::Right => column_factor(self.tableau(), w, self.signature()),
        }
    }

    /// Sorts every line of `T_w`. Returns the sorted word and the sign `ε` with
    /// `T[·:w] = ε T[·:sorted]` (resp. on the left), or `None` when the
    /// symmetrizer vanishes because a line repeats a forbidden symbol.
    fn sort_lines(&self, side: Side, w: &MultiIndex) -> Option<(i8, MultiIndex)> {
        let sig = self.signature();
        let mut images: Vec<usize> = (0..w.len()).collect();
        for line in self.lines(side) {
            let mut order = line.clone();
            order.sort_by_key(|&t| (w.get(t), t));
            for (&pos, &src) in line.iter().zip(&order) {
                images[pos] = src;
            }
        }
        let sigma = Perm::from_images(images).expect("line sort is a permutation");
        let sorted = w.permuted(&sigma);
        for line in self.lines(side) {
            for pair in line.windows(2) {
                let (a, b) = (sorted.get(pair[0]), sorted.get(pair[1]));
                let forbidden = match side {
                    Side::Right => !sig.is_odd(a),
                    Side::Left => sig.is_odd(a),
                };
                if a == b && forbidden {
                    return None;
                }
            }
        }
        let mut sign = star_sign(&sorted, &sigma, sig);
        if side == Side::Right {
            sign *= sigma.sign();
        }
        Some((sign, sorted))
    }

    /// First `(d, q)` where line `d+1` fails against line `d` at position `q`.
    fn find_violation(&self, side: Side, w: &MultiIndex) -> Option<(usize, usize)> {
        let sig = self.signature();
        let lines = self.lines(side);
        for d in 0..lines.len().saturating_sub(1) {
            let (a, b) = (&lines[d], &lines[d + 1]);
            for q in 0..b.len() {
                let (x, y) = (w.get(a[q]), w.get(b[q]));
                let tie_breaks = match side {
                    Side::Right => sig.is_odd(x),
                    Side::Left => !sig.is_odd(x),
                };
                if x > y || (x == y && tie_breaks) {
                    return Some((d, q));
                }
            }
        }
        None
    }

    /// Key that strictly decreases along the recursion.
    fn order_key(&self, side: Side, w: &MultiIndex) -> Vec<crate::superalgebra::Symbol> {
        self.lines(side)
            .iter()
            .flatten()
            .map(|&t| w.get(t))
            .collect()
    }

    /// Rewrites `T[·:w]` (right) or `T[w:·]` (left) over semistandard words.
    pub fn straighten_word(&self, side: Side, w: &MultiIndex) -> Result<Arc<WordMap<R>>> {
        self.check(w)?;
        let key = (side, w.clone());
        if let Some(hit) = self.memo.read().expect("memo lock").get(&key) {
            return Ok(hit.clone());
        }
        let result = match self.sort_lines(side, w) {
            None => Arc::new(WordMap::new()),
            Some((sign, sorted)) if sorted == *w => {
                debug_assert_eq!(sign, 1);
                Arc::new(self.straighten_sorted(side, w)?)
            }
            Some((sign, sorted)) => {
                let inner = self.straighten_word(side, &sorted)?;
                let s = R::from_i64(sign as i64);
                Arc::new(inner.iter().map(|(k, c)| (k.clone(), c.mul(&s))).collect())
            }
        };
        self.memo
            .write()
            .expect("memo lock")
            .insert(key, result.clone());
        Ok(result)
    }

    fn straighten_sorted(&self, side: Side, w: &MultiIndex) -> Result<WordMap<R>> {
        let Some((d, q)) = self.find_violation(side, w) else {
            return Ok(WordMap::from([(w.clone(), R::from_i64(1))]));
        };
        let lines = self.lines(side);
        let (a, b) = (&lines[d], &lines[d + 1]);
        let x: Vec<usize> = a[q..].to_vec();
        let mut ylen = q + 1;
        while ylen < b.len() && w.get(b[ylen]) == w.get(b[q]) {
            ylen += 1;
        }
        let y: Vec<usize> = b[..ylen].to_vec();

        // Garnir relation Σ_σ (sgn σ) T[·:w*σ] = 0, each term brought to sorted form.
        let sig = self.signature();
        let mut relation: BTreeMap<MultiIndex, i64> = BTreeMap::new();
        for sigma in garnir_transversal(&x, &y, w.len())? {
            let moved = w.permuted(&sigma);
            let mut sign = star_sign(&moved, &sigma, sig) as i64;
            if side == Side::Right {
                sign *= sigma.sign() as i64;
            }
            if let Some((s, sorted)) = self.sort_lines(side, &moved) {
                *relation.entry(sorted).or_insert(0) += sign * s as i64;
            }
        }
        let pivot = relation.remove(w).unwrap_or(0);
        if pivot == 0 {
            return Err(Error::Straightening(format!(
                "Garnir relation at {w} does not involve {w}"
            )));
        }

        let own_key = self.order_key(side, w);
        let w_weight = self.weight(side, w);
        let mut out: WordMap<R> = WordMap::new();
        for (u, c) in relation {
            if c == 0 {
                continue;
            }
            if self.order_key(side, &u) >= own_key {
                return Err(Error::Straightening(format!("{u} does not precede {w}")));
            }
            // T[·:w] = −Σ c/pivot T[·:u]
            let step = R::ratio(
                BigInt::from(-c) * self.weight(side, &u),
                BigInt::from(pivot) * &w_weight,
            )?;
            for (k, v) in self.straighten_word(side, &u)?.iter() {
                let add = v.mul(&step);
                let slot = out.entry(k.clone()).or_insert_with(|| R::from_i64(0));
                *slot = slot.add(&add);
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    pub fn straighten_right(&self, j: &MultiIndex) -> Result<Arc<WordMap<R>>> {
        self.straighten_word(Side::Right, j)
    }

    pub fn straighten_left(&self, i: &MultiIndex) -> Result<Arc<WordMap<R>>> {
        self.straighten_word(Side::Left, i)
    }

    /// Both sides at once: `T[i:j] = Σ c_{k,l} T[k:l]` (or with `T{·:·}`).
    pub fn straighten_pair(
        &self,
        i: &MultiIndex,
        j: &MultiIndex,
    ) -> Result<StraighteningResult<R>> {
        let left = self.straighten_left(i)?;
        let right = self.straighten_right(j)?;
        let mut coeffs = BTreeMap::new();
        for (k, a) in left.iter() {
            for (l, b) in right.iter() {
                let c = a.mul(b);
                if !c.is_zero() {
                    coeffs.insert((k.clone(), l.clone()), c);
                }
            }
        }
        Ok(StraighteningResult { coeffs })
    }

    /// `Σ c_{k,l} · (basis element)` expanded in normal form.
    pub fn reexpand(&self, result: &StraighteningResult<R>) -> Result<FormalSum<R>> {
        let mut out = FormalSum::zero();
        for ((k, l), c) in &result.coeffs {
            out.add_scaled(&R::basis_element(&self.expander, k, l)?, c);
        }
        Ok(out)
    }

    /// Rows of `T_i` and columns of `T_j` sorted, with the induced sign; `None`
    /// if the symmetrizer vanishes by a repeated symbol in a line.
    pub fn canonical_pair(
        &self,
        i: &MultiIndex,
        j: &MultiIndex,
    ) -> Option<(i8, MultiIndex, MultiIndex)> {
        let (s, i2) = self.sort_lines(Side::Left, i)?;
        let (t, j2) = self.sort_lines(Side::Right, j)?;
        Some((s * t, i2, j2))
    }

    /// Checks `T_k ⊴_c T_ĩ` and `T_l ⊴_r T_j̃` for every term, where `ĩ`, `j̃`
    /// are the line-sorted inputs. Returns the offending pairs.
    pub fn triangularity_violations(
        &self,
        i: &MultiIndex,
        j: &MultiIndex,
        result: &StraighteningResult<R>,
    ) -> Result<Vec<(MultiIndex, MultiIndex)>> {
        let Some((_, i2, j2)) = self.canonical_pair(i, j) else {
            return Ok(result.coeffs.keys().cloned().collect());
        };
        let (t, sig) = (self.tableau(), self.signature());
        let ci = DominanceStats::column(t, &i2, sig);
        let rj = DominanceStats::row(t, &j2, sig);
        let mut bad = Vec::new();
        for (k, l) in result.coeffs.keys() {
            let ok = dominance_leq(&DominanceStats::column(t, k, sig), &ci)?
                && dominance_leq(&DominanceStats::row(t, l, sig), &rj)?;
            if !ok {
                bad.push((k.clone(), l.clone()));
            }
        }
        Ok(bad)
    }
}

/// Coefficients `c_{k,l}` over semistandard pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StraighteningResult<R> {
    pub coeffs: BTreeMap<(MultiIndex, MultiIndex), R>,
}

impl<R: Coeff> StraighteningResult<R> {
    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn get(&self, k: &MultiIndex, l: &MultiIndex) -> Option<&R> {
        self.coeffs.get(&(k.clone(), l.clone()))
    }

    pub fn all_semistandard(&self, t: &BasicTableau, sig: &Signature) -> bool {
        self.coeffs
            .keys()
            .all(|(k, l)| is_semistandard(t, k, sig) && is_semistandard(t, l, sig))
    }

    /// JSON object `{"k|l": "coeff"}` with sorted keys.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for ((k, l), c) in &self.coeffs {
            map.insert(format!("{k}|{l}"), Value::String(c.to_string()));
        }
        Value::Object(map)
    }
}

/// Rational straightening of `T[i:j]`.
pub fn straighten_pair(
    t: &BasicTableau,
    i: &MultiIndex,
    j: &MultiIndex,
    sig: &Signature,
) -> Result<StraighteningResult<BigRational>> {
    Straightener::<BigRational>::new(t.clone(), *sig).straighten_pair(i, j)
}

/// Integral straightening of `T{i:j}` over modified symmetrizers.
pub fn straighten_modified(
    t: &BasicTableau,
    i: &MultiIndex,
    j: &MultiIndex,
    sig: &Signature,
) -> Result<StraighteningResult<BigInt>> {
    Straightener::<BigInt>::new(t.clone(), *sig).straighten_pair(i, j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{Partition, StatKind};
    use crate::superalgebra::rat;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn w(v: &[u16]) -> MultiIndex {
        MultiIndex::plain(v)
    }

    fn s11() -> Signature {
        Signature::new(1, 1).unwrap()
    }

    fn q(sh: &str) -> Straightener<BigRational> {
        Straightener::new(BasicTableau::new(p(sh)), s11())
    }

    #[test]
    fn right_examples() {
        let s = q("1,1");
        assert_eq!(
            *s.straighten_right(&w(&[2, 1])).unwrap(),
            WordMap::from([(w(&[1, 2]), rat(-1))])
        );
        assert_eq!(
            *s.straighten_right(&w(&[1, 2])).unwrap(),
            WordMap::from([(w(&[1, 2]), rat(1))])
        );
        assert!(q("2").straighten_right(&w(&[2, 2])).unwrap().is_empty());
    }

    #[test]
    fn left_examples() {
        let s = q("2");
        assert_eq!(
            *s.straighten_left(&w(&[1, 2])).unwrap(),
            WordMap::from([(w(&[1, 2]), rat(1))])
        );
        let r = s.straighten_left(&w(&[2, 1])).unwrap();
        let res = StraighteningResult {
            coeffs: r
                .iter()
                .map(|(k, c)| ((k.clone(), w(&[1, 1])), c.clone()))
                .collect(),
        };
        let direct = s
            .expander()
            .expand(&w(&[2, 1]), &w(&[1, 1]), Variant::default())
            .unwrap()
            .to_rational();
        assert_eq!(s.reexpand(&res).unwrap(), direct);
        assert!(q("1,1").straighten_left(&w(&[1, 1])).unwrap().is_empty());
    }

    #[test]
    fn pair_examples() {
        let s = q("2,1");
        let r = s.straighten_pair(&w(&[1, 1, 2]), &w(&[1, 2, 2])).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r.get(&w(&[1, 1, 2]), &w(&[1, 2, 2])), Some(&rat(1)));
        let s = q("2,2");
        for i in MultiIndex::all_plain(&s11(), 4) {
            assert!(s.straighten_pair(&i, &w(&[1, 1, 2, 2])).unwrap().is_empty());
        }
    }

    #[test]
    fn modified_example() {
        let s: Straightener<BigInt> = Straightener::new(BasicTableau::new(p("1,1")), s11());
        let r = s.straighten_pair(&w(&[1, 2]), &w(&[2, 1])).unwrap();
        assert_eq!(
            r.coeffs,
            BTreeMap::from([((w(&[1, 2]), w(&[1, 2])), BigInt::from(-1))])
        );
    }

    #[test]
    fn enlarged_sets_keep_left_steps_integral() {
        // rows [2,2],[1,1] at (2|1): a repeated even symbol sits in the tail of
        // row two and must join the Garnir set
        let sig = Signature::new(2, 1).unwrap();
        let s: Straightener<BigInt> = Straightener::new(BasicTableau::new(p("2,2")), sig);
        let i = w(&[2, 2, 1, 1]);
        let r = s.straighten_pair(&i, &w(&[1, 1, 2, 2])).unwrap();
        let direct = s.expander().modified(&i, &w(&[1, 1, 2, 2])).unwrap();
        assert_eq!(s.reexpand(&r).unwrap(), direct);
    }

    #[test]
    fn sound_and_triangular_at_small_scale() {
        for (m, n, r) in [(1, 1, 3), (2, 1, 3), (1, 2, 3)] {
            let sig = Signature::new(m, n).unwrap();
            let words = MultiIndex::all_plain(&sig, r);
            for l in Partition::all(r) {
                let s: Straightener<BigRational> =
                    Straightener::new(BasicTableau::new(l.clone()), sig);
                for i in &words {
                    for j in &words {
                        let res = s.straighten_pair(i, j).unwrap();
                        let direct = s
                            .expander()
                            .expand(i, j, Variant::default())
                            .unwrap()
                            .to_rational();
                        assert_eq!(s.reexpand(&res).unwrap(), direct, "{l} {i} {j}");
                        assert!(res.all_semistandard(s.tableau(), &sig));
                        assert!(s.triangularity_violations(i, j, &res).unwrap().is_empty());
                    }
                }
            }
        }
    }

    /// Against the raw (unsorted) input the dominance condition can fail:
    /// `T[i:(2,1)] = −T[i:(1,2)]` in shape (1,1), yet `(1,2)` is r-above `(2,1)`.
    #[test]
    fn raw_triangularity_counterexample() {
        let s = q("1,1");
        let res = s.straighten_pair(&w(&[1, 2]), &w(&[2, 1])).unwrap();
        let (t, sig) = (s.tableau(), s11());
        let raw = DominanceStats::compute(t, &w(&[2, 1]), &sig, StatKind::Row);
        let got = DominanceStats::compute(t, &w(&[1, 2]), &sig, StatKind::Row);
        assert!(res.get(&w(&[1, 2]), &w(&[1, 2])).is_some());
        assert!(!dominance_leq(&got, &raw).unwrap());
        assert!(s
            .triangularity_violations(&w(&[1, 2]), &w(&[2, 1]), &res)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn idempotent_on_semistandard_support() {
        let sig = Signature::new(2, 1).unwrap();
        let s: Straightener<BigRational> = Straightener::new(BasicTableau::new(p("2,1")), sig);
        for i in MultiIndex::all_plain(&sig, 3) {
            let res = s.straighten_pair(&i, &w(&[3, 1, 2])).unwrap();
            for (k, l) in res.coeffs.keys() {
                let again = s.straighten_pair(k, l).unwrap();
                assert_eq!(
                    again.coeffs,
                    BTreeMap::from([((k.clone(), l.clone()), rat(1))])
                );
            }
        }
    }

    #[test]
    fn rejects_coloured_input() {
        let s = q("2");
        let c: MultiIndex = "1^,1".parse().unwrap();
        assert!(matches!(
            s.straighten_left(&c),
            Err(Error::ColoredSymbol(_))
        ));
        assert!(s.straighten_left(&w(&[1])).is_err());
    }

    #[test]
    fn json_keys() {
        let s = q("1,1");
        let r = s.straighten_pair(&w(&[1, 2]), &w(&[2, 1])).unwrap();
        assert_eq!(r.to_json().to_string(), r#"{"1,2|1,2":"-1"}"#);
    }
}
