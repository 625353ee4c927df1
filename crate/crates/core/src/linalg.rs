//! Exact rank and span over sparse coefficient vectors.

use std::collections::BTreeMap;
use std::ops::Bound::{Excluded, Unbounded};

use crate::scalar::Scalar;

/// Incrementally built echelon basis of a subspace.
///
/// Each stored row has a unit coefficient at its pivot, which is the row's
/// smallest key, and pivots are distinct.
#[derive(Debug, Clone)]
pub struct SpanBasis<T> {
    rows: BTreeMap<u64, BTreeMap<u64, T>>,
}

impl<T: Scalar> Default for SpanBasis<T> {
    fn default() -> Self {
        SpanBasis {
            rows: BTreeMap::new(),
        }
    }
}

impl<T: Scalar> SpanBasis<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: BTreeMap<u64, T>) -> BTreeMap<u64, T> {
        v.retain(|_, c| !c.is_negligible());
        let mut cursor = match v.keys().next() {
            Some(k) => *k,
            None => return v,
        };
        loop {
            if let Some(row) = self.rows.get(&cursor) {
                let factor = v.remove(&cursor).expect("cursor is a key of v");
                for (k, c) in row.range((Excluded(cursor), Unbounded)) {
                    let delta = factor.clone() * c.clone();
                    match v.get_mut(k) {
                        Some(x) => {
                            *x = x.clone() - delta;
                            if x.is_negligible() {
                                v.remove(k);
                            }
                        }
                        None => {
                            v.insert(*k, -delta);
                        }
                    }
                }
            }
            match v.range((Excluded(cursor), Unbounded)).next() {
                Some((k, _)) => cursor = *k,
                None => return v,
            }
        }
    }

    /// Adds `v` to the span; returns `true` when it was independent.
    pub fn insert(&mut self, v: BTreeMap<u64, T>) -> bool {
        let mut r = self.reduce(v);
        let Some((&pivot, lead)) = r.iter().next() else {
            return false;
        };
        let inv = T::one() / lead.clone();
        for c in r.values_mut() {
            *c = c.clone() * inv.clone();
        }
        self.rows.insert(pivot, r);
        true
    }

    pub fn contains(&self, v: BTreeMap<u64, T>) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Rank of a family of sparse vectors.
pub fn rank<T: Scalar>(vectors: impl IntoIterator<Item = BTreeMap<u64, T>>) -> usize {
    let mut basis = SpanBasis::new();
    for v in vectors {
        basis.insert(v);
    }
    basis.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{ratio, Rational};

    fn v(entries: &[(u64, i64)]) -> BTreeMap<u64, Rational> {
        entries.iter().map(|(k, c)| (*k, ratio(*c, 1))).collect()
    }

    /// Dense Gaussian elimination used as an independent reference.
    fn dense_rank(rows: &[Vec<i64>]) -> usize {
        let mut m: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| ratio(x, 1)).collect())
            .collect();
        let cols = m.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for c in 0..cols {
            let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != ratio(0, 1)) else {
                continue;
            };
            m.swap(rank, piv);
            for r in 0..m.len() {
                if r != rank && m[r][c] != ratio(0, 1) {
                    let f = m[r][c].clone() / m[rank][c].clone();
                    for k in 0..cols {
                        let d = f.clone() * m[rank][k].clone();
                        m[r][k] = m[r][k].clone() - d;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn dependent_vectors() {
        let vs = vec![
            v(&[(0, 1), (1, 2)]),
            v(&[(1, 1), (2, 1)]),
            v(&[(0, 1), (1, 4), (2, 2)]),
        ];
        assert_eq!(rank(vs), 2);
    }

    #[test]
    fn zero_vector_adds_nothing() {
        let mut b = SpanBasis::<Rational>::new();
        assert!(!b.insert(v(&[(3, 0)])));
        assert_eq!(b.rank(), 0);
    }

    #[test]
    fn contains_linear_combination() {
        let mut b = SpanBasis::new();
        b.insert(v(&[(0, 1), (5, 1)]));
        b.insert(v(&[(5, 1), (7, -1)]));
        assert!(b.contains(v(&[(0, 2), (5, 3), (7, -1)])));
        assert!(!b.contains(v(&[(7, 1)])));
    }

    proptest::proptest! {
        #[test]
        fn matches_dense_elimination(rows in proptest::collection::vec(
            proptest::collection::vec(-2i64..=2, 6), 1..8)) {
            let sparse: Vec<_> = rows
                .iter()
                .map(|r| r.iter().enumerate().map(|(k, c)| (k as u64, ratio(*c, 1))).collect())
                .collect();
            proptest::prop_assert_eq!(rank(sparse), dense_rank(&rows));
        }
    }
}
