//! Exact linear algebra on families of formal sums.
//!
//! Rows are formal sums and columns the monomials in their union. Ranks use
//! fraction-free Bareiss elimination over ℤ (ℚ rows are cleared of
//! denominators first) and plain Gaussian elimination over `𝔽_p`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::superalgebra::{Coeff, FormalSum, Fp, Monomial};

/// A dense view of a family of sums against their joint monomial support.
#[derive(Clone, Debug, PartialEq)]
pub struct MonomialMatrix<R> {
    pub columns: Vec<Monomial>,
    pub rows: Vec<Vec<Option<R>>>,
}

impl<R: Coeff> MonomialMatrix<R> {
    pub fn from_sums(sums: &[FormalSum<R>]) -> Self {
        let columns: Vec<Monomial> = sums
            .iter()
            .flat_map(|s| s.monomials().cloned())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let index: BTreeMap<&Monomial, usize> =
            columns.iter().enumerate().map(|(k, m)| (m, k)).collect();
        let rows = sums
            .iter()
            .map(|s| {
                let mut row = vec![None; columns.len()];
                for (m, c) in s.iter() {
                    row[index[m]] = Some(c.clone());
                }
                row
            })
            .collect();
        MonomialMatrix { columns, rows }
    }
}

/// Coefficient types with an exact rank procedure.
pub trait RankExact: Coeff {
    fn rank_of(rows: &[FormalSum<Self>]) -> usize;
}

/// Rank of the span of `rows`.
pub fn rank_exact<R: RankExact>(rows: &[FormalSum<R>]) -> usize {
    R::rank_of(rows)
}

impl RankExact for BigInt {
    fn rank_of(rows: &[FormalSum<BigInt>]) -> usize {
        bareiss_rank(primitive_rows(
            rows.iter()
                .map(|s| s.iter().map(|(m, c)| (m.clone(), c.clone())).collect())
                .collect(),
        ))
    }
}

impl RankExact for BigRational {
    fn rank_of(rows: &[FormalSum<BigRational>]) -> usize {
        let int_rows = rows
            .iter()
            .map(|s| {
                let den = s
                    .iter()
                    .fold(BigInt::from(1), |acc, (_, c)| acc.lcm(c.denom()));
                s.iter()
                    .map(|(m, c)| (m.clone(), c.numer() * (&den / c.denom())))
                    .collect()
            })
            .collect();
        bareiss_rank(primitive_rows(int_rows))
    }
}

impl RankExact for Fp {
    fn rank_of(rows: &[FormalSum<Fp>]) -> usize {
        let Some(p) = rows
            .iter()
            .flat_map(|s| s.iter())
            .map(|(_, c)| c.modulus())
            .next()
        else {
            return 0;
        };
        let matrix = MonomialMatrix::from_sums(rows);
        let mut a: Vec<Vec<u64>> = matrix
            .rows
            .iter()
            .map(|r| r.iter().map(|c| c.map_or(0, |x| x.value())).collect())
            .collect();
        let cols = matrix.columns.len();
        let mut rank = 0;
        for col in 0..cols {
            let Some(piv) = (rank..a.len()).find(|&r| a[r][col] != 0) else {
                continue;
            };
            a.swap(rank, piv);
            let inv = Fp::new(a[rank][col] as i64, p)
                .inverse()
                .expect("nonzero pivot")
                .value();
            for c in col..cols {
                a[rank][c] = (a[rank][c] as u128 * inv as u128 % p as u128) as u64;
            }
            for r in rank + 1..a.len() {
                let f = a[r][col];
                if f == 0 {
                    continue;
                }
                for c in col..cols {
                    let sub = (f as u128 * a[rank][c] as u128 % p as u128) as u64;
                    a[r][c] = (a[r][c] + p - sub) % p;
                }
            }
            rank += 1;
        }
        rank
    }
}

/// Drops zero rows, divides by content and sign, and removes duplicates.
fn primitive_rows(rows: Vec<Vec<(Monomial, BigInt)>>) -> Vec<Vec<(Monomial, BigInt)>> {
    let mut seen = BTreeSet::new();
    for row in rows {
        let Some(first) = row.first() else { continue };
        let g = row.iter().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c));
        let g = if first.1.is_negative() { -g } else { g };
        seen.insert(
            row.into_iter()
                .map(|(m, c)| (m, c / &g))
                .collect::<Vec<_>>(),
        );
    }
    seen.into_iter().collect()
}

fn bareiss_rank(rows: Vec<Vec<(Monomial, BigInt)>>) -> usize {
    let columns: Vec<&Monomial> = rows
        .iter()
        .flat_map(|r| r.iter().map(|(m, _)| m))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let index: BTreeMap<&Monomial, usize> =
        columns.iter().enumerate().map(|(k, m)| (*m, k)).collect();
    let cols = columns.len();
    let a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            let mut v = vec![BigInt::zero(); cols];
            for (m, c) in r {
                v[index[m]] = c.clone();
            }
            v
        })
        .collect();
    bareiss(a)
}

/// Rank of a dense integer matrix.
pub fn rank_integer_matrix(rows: &[Vec<BigInt>]) -> usize {
    bareiss(rows.to_vec())
}

fn bareiss(mut a: Vec<Vec<BigInt>>) -> usize {
    let cols = a.iter().map(|r| r.len()).max().unwrap_or(0);
    for r in a.iter_mut() {
        r.resize(cols, BigInt::zero());
    }
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..cols {
        let Some(piv) = (rank..a.len()).find(|&r| !Zero::is_zero(&a[r][col])) else {
            continue;
        };
        a.swap(rank, piv);
        let (head, tail) = a.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            let f = row[col].clone();
            for c in col + 1..cols {
                let v = &pivot_row[col] * &row[c] - &f * &pivot_row[c];
                debug_assert!(Zero::is_zero(&(&v % &prev)));
                row[c] = v / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Solves `target = Σ x_b basis_b` repeatedly against one fixed basis.
#[derive(Clone, Debug)]
pub struct BasisSolver {
    len: usize,
    /// Reduced echelon rows: pivot monomial, row, and its expression in the basis.
    echelon: Vec<(Monomial, FormalSum<BigRational>, Vec<BigRational>)>,
}

impl BasisSolver {
    /// Fails with `DependentBasis` if the basis is linearly dependent.
    pub fn new(basis: &[FormalSum<BigRational>]) -> Result<Self> {
        let len = basis.len();
        let mut echelon: Vec<(Monomial, FormalSum<BigRational>, Vec<BigRational>)> = Vec::new();
        for (b, row) in basis.iter().enumerate() {
            let mut row = row.clone();
            let mut combo = vec![BigRational::zero(); len];
            combo[b] = BigRational::from_integer(1.into());
            for (piv, erow, ecombo) in &echelon {
                if let Some(c) = row.get(piv).cloned() {
                    row.add_scaled(erow, &-c.clone());
                    for (x, y) in combo.iter_mut().zip(ecombo) {
                        *x -= &c * y;
                    }
                }
            }
            let Some((piv, lead)) = row.iter().next().map(|(m, c)| (m.clone(), c.clone())) else {
                return Err(Error::DependentBasis {
                    rank: echelon.len(),
                    len,
                });
            };
            let row = row.divide(&lead)?;
            for x in combo.iter_mut() {
                *x /= &lead;
            }
            // keep the echelon fully reduced in the new pivot column
            for (_, erow, ecombo) in echelon.iter_mut() {
                if let Some(c) = erow.get(&piv).cloned() {
                    erow.add_scaled(&row, &-c.clone());
                    for (x, y) in ecombo.iter_mut().zip(&combo) {
                        *x -= &c * y;
                    }
                }
            }
            echelon.push((piv, row, combo));
        }
        Ok(BasisSolver { len, echelon })
    }

    /// Coordinates of `target`, or `None` if it lies outside the span.
    pub fn solve(&self, target: &FormalSum<BigRational>) -> Option<Vec<BigRational>> {
        let mut residual = target.clone();
        let mut x = vec![BigRational::zero(); self.len];
        for (piv, row, combo) in &self.echelon {
            if let Some(c) = target.get(piv) {
                residual.add_scaled(row, &-c.clone());
                for (xi, y) in x.iter_mut().zip(combo) {
                    *xi += c * y;
                }
            }
        }
        residual.is_zero().then_some(x)
    }
}

/// Coordinates of `target` in a linearly independent `basis`.
pub fn express_in_basis(
    target: &FormalSum<BigRational>,
    basis: &[FormalSum<BigRational>],
) -> Result<Option<Vec<BigRational>>> {
    Ok(BasisSolver::new(basis)?.solve(target))
}

pub fn is_odd_prime(p: u64) -> bool {
    p > 2
        && p % 2 == 1
        && (3..)
            .step_by(2)
            .take_while(|d: &u64| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Coefficient-wise reduction modulo an odd prime.
pub fn reduce_mod_p(s: &FormalSum<BigInt>, p: u64) -> Result<FormalSum<Fp>> {
    if !is_odd_prime(p) {
        return Err(Error::BadCharacteristic(p));
    }
    Ok(s.map_coeffs(|c| Fp::from_bigint(c, p)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{BasicTableau, MultiIndex, Partition};
    use crate::superalgebra::{normalize_generators, rat, Signature, Symbol};
    use crate::symmetrizer::{Expander, Variant};

    fn mono(g: &[(u16, u16)]) -> Monomial {
        let sig = Signature::new(1, 1).unwrap();
        let word: Vec<_> = g
            .iter()
            .map(|&(u, v)| (Symbol::Plain(u), Symbol::Plain(v)))
            .collect();
        normalize_generators(&word, &sig).unwrap().1
    }

    fn s(terms: &[(&[(u16, u16)], i64)]) -> FormalSum<BigInt> {
        terms
            .iter()
            .map(|(g, c)| (mono(g), BigInt::from(*c)))
            .collect()
    }

    /// Reference rank over ℚ by rational Gauss–Jordan.
    fn naive_rank(rows: &[FormalSum<BigInt>]) -> usize {
        let m =
            MonomialMatrix::from_sums(&rows.iter().map(|r| r.to_rational()).collect::<Vec<_>>());
        let mut a: Vec<Vec<BigRational>> = m
            .rows
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|c| c.unwrap_or_else(BigRational::zero))
                    .collect()
            })
            .collect();
        let mut rank = 0;
        for col in 0..m.columns.len() {
            if let Some(p) = (rank..a.len()).find(|&r| !Zero::is_zero(&a[r][col])) {
                a.swap(rank, p);
                for r in 0..a.len() {
                    if r != rank && !Zero::is_zero(&a[r][col]) {
                        let f = &a[r][col] / &a[rank][col];
                        for c in 0..a[r].len() {
                            let v = &f * &a[rank][c];
                            a[r][c] -= v;
                        }
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    #[test]
    fn small_ranks() {
        let a = s(&[(&[(1, 1), (1, 1)], 2)]);
        let b = s(&[(&[(1, 1), (1, 1)], 4)]);
        assert_eq!(rank_exact(&[a.clone(), b]), 1);
        assert_eq!(rank_exact::<BigInt>(&[]), 0);
        let c = s(&[(&[(1, 2), (2, 1)], 1), (&[(1, 1), (2, 2)], -1)]);
        assert_eq!(rank_exact(&[a.clone(), c.clone(), a.add(&c)]), 2);
        assert_eq!(rank_exact(&[a.to_rational(), c.to_rational()]), 2);
    }

    #[test]
    fn symmetrizer_ranks_match_reference() {
        let sig = Signature::new(1, 1).unwrap();
        for (shape, want) in [("2", 4), ("1,1", 4), ("2,2", 0)] {
            let l: Partition = shape.parse().unwrap();
            let e = Expander::new(BasicTableau::new(l.clone()), sig);
            let words = MultiIndex::all_plain(&sig, l.size());
            let rows: Vec<_> = words
                .iter()
                .flat_map(|i| {
                    words
                        .iter()
                        .map(|j| e.expand(i, j, Variant::default()).unwrap())
                })
                .collect();
            assert_eq!(rank_exact(&rows), want);
            assert_eq!(naive_rank(&rows), want);
            let fp: Vec<_> = rows.iter().map(|r| reduce_mod_p(r, 5).unwrap()).collect();
            assert_eq!(rank_exact(&fp), want);
        }
    }

    #[test]
    fn rank_is_invariant_under_permutation_and_scaling() {
        let rows = vec![
            s(&[(&[(1, 1)], 1), (&[(2, 2)], 2)]),
            s(&[(&[(1, 2)], 3), (&[(2, 2)], 1)]),
            s(&[(&[(1, 1)], 2), (&[(1, 2)], -3), (&[(2, 2)], 3)]),
        ];
        let r = rank_exact(&rows);
        let mut rev = rows.clone();
        rev.reverse();
        assert_eq!(rank_exact(&rev), r);
        let scaled: Vec<_> = rows.iter().map(|x| x.scale(&BigInt::from(-7))).collect();
        assert_eq!(rank_exact(&scaled), r);
        assert_eq!(r, naive_rank(&rows));
    }

    #[test]
    fn coordinates() {
        let a = s(&[(&[(1, 1)], 1), (&[(2, 2)], 1)]).to_rational();
        let b = s(&[(&[(1, 2)], 1), (&[(2, 2)], 1)]).to_rational();
        let basis = vec![a.clone(), b.clone()];
        assert_eq!(
            express_in_basis(&a, &basis).unwrap(),
            Some(vec![rat(1), rat(0)])
        );
        let t = a.scale(&rat(3)).add(&b.scale(&(rat(-1) / rat(2))));
        assert_eq!(
            express_in_basis(&t, &basis).unwrap(),
            Some(vec![rat(3), rat(-1) / rat(2)])
        );
        let out = s(&[(&[(2, 1)], 1)]).to_rational();
        assert_eq!(express_in_basis(&out, &basis).unwrap(), None);
        let dep = vec![a.clone(), a.scale(&rat(2))];
        assert!(matches!(
            express_in_basis(&a, &dep),
            Err(Error::DependentBasis { rank: 1, len: 2 })
        ));
    }

    #[test]
    fn modular_reduction() {
        let a = s(&[(&[(1, 1), (1, 1)], 2)]);
        assert_eq!(
            reduce_mod_p(&a, 3)
                .unwrap()
                .get(&mono(&[(1, 1), (1, 1)]))
                .unwrap()
                .value(),
            2
        );
        assert!(reduce_mod_p(&s(&[(&[(1, 1), (1, 1)], 3)]), 3)
            .unwrap()
            .is_zero());
        assert!(matches!(
            reduce_mod_p(&a, 2),
            Err(Error::BadCharacteristic(2))
        ));
        assert!(reduce_mod_p(&a, 9).is_err());
        assert!(is_odd_prime(3) && is_odd_prime(5) && is_odd_prime(7919));
        assert!(!is_odd_prime(1) && !is_odd_prime(15));
    }
}
