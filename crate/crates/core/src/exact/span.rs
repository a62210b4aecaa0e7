use std::collections::BTreeMap;

use super::scalar::{Ring, Scalar};

/// Sparse rational vector: strictly increasing `(index, value)` pairs, no zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec::default()
    }

    /// Builds from unsorted pairs, summing duplicates.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (k, v) in pairs {
            *acc.entry(k).or_insert_with(<Scalar as Ring>::zero) += v;
        }
        SparseVec { entries: acc.into_iter().filter(|(_, v)| !Ring::is_zero(v)).collect() }
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        SparseVec {
            entries: values.iter().enumerate().filter(|(_, v)| !Ring::is_zero(*v)).map(|(k, v)| (k, v.clone())).collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Scalar> {
        let mut out = vec![<Scalar as Ring>::zero(); len];
        for (k, v) in &self.entries {
            out[*k] = v.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Scalar)> {
        self.entries.iter()
    }

    pub fn get(&self, k: usize) -> Option<&Scalar> {
        self.entries.binary_search_by_key(&k, |(i, _)| *i).ok().map(|p| &self.entries[p].1)
    }

    pub fn leading(&self) -> Option<&(usize, Scalar)> {
        self.entries.first()
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if Ring::is_zero(c) {
            return SparseVec::new();
        }
        SparseVec { entries: self.entries.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    /// `self + c·other`
    pub fn axpy(&self, c: &Scalar, other: &SparseVec) -> SparseVec {
        if Ring::is_zero(c) {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y * c));
                        b.next();
                    } else {
                        let s = x + y * c;
                        if !Ring::is_zero(&s) {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub fn dot(&self, other: &SparseVec) -> Scalar {
        let mut acc = <Scalar as Ring>::zero();
        for (k, v) in &self.entries {
            if let Some(w) = other.get(*k) {
                acc += v * w;
            }
        }
        acc
    }
}

/// A subspace held as the rows of its reduced row echelon form.
///
/// The basis is canonical: two spans are equal iff their bases in pivot order
/// are equal.
#[derive(Clone, Debug, Default)]
pub struct Span {
    rows: Vec<SparseVec>,
    pivots: BTreeMap<usize, usize>,
}

impl PartialEq for Span {
    fn eq(&self, other: &Self) -> bool {
        self.basis() == other.basis()
    }
}

impl Eq for Span {}

impl Span {
    pub fn new() -> Self {
        Span::default()
    }

    pub fn from_vectors<'a>(vs: impl IntoIterator<Item = &'a SparseVec>) -> Self {
        let mut s = Span::new();
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Basis rows sorted by pivot column.
    pub fn basis(&self) -> Vec<&SparseVec> {
        self.pivots.values().map(|&r| &self.rows[r]).collect()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let hits: Vec<(usize, Scalar)> = v
            .iter()
            .filter_map(|(k, val)| self.pivots.get(k).map(|&r| (r, val.clone())))
            .collect();
        let mut out = v.clone();
        for (r, c) in hits {
            out = out.axpy(&-c, &self.rows[r]);
        }
        out
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        let Some((lead, lv)) = r.leading().cloned() else {
            return false;
        };
        let r = r.scale(&(<Scalar as Ring>::one() / lv));
        for row in &mut self.rows {
            if let Some(c) = row.get(lead).cloned() {
                *row = row.axpy(&-c, &r);
            }
        }
        self.rows.push(r);
        self.pivots.insert(lead, self.rows.len() - 1);
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn contains_span(&self, other: &Span) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Coordinates of `v` in [`Span::basis`] order, if `v` lies in the span.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.keys().map(|p| v.get(*p).cloned().unwrap_or_else(<Scalar as Ring>::zero)).collect())
    }

    /// Intersection by the Zassenhaus trick on the doubled space.
    pub fn intersect(&self, other: &Span, ambient: usize) -> Span {
        let shift = |v: &SparseVec| v.iter().map(|(k, x)| (k + ambient, x.clone())).collect::<Vec<_>>();
        let mut big = Span::new();
        for r in &self.rows {
            let mut pairs = r.entries.clone();
            pairs.extend(shift(r));
            big.insert(&SparseVec { entries: pairs });
        }
        for r in &other.rows {
            big.insert(r);
        }
        let mut out = Span::new();
        for row in big.basis() {
            if row.leading().is_some_and(|(k, _)| *k >= ambient) {
                out.insert(&SparseVec::from_pairs(row.iter().map(|(k, x)| (k - ambient, x.clone()))));
            }
        }
        out
    }

    pub fn sum(&self, other: &Span) -> Span {
        let mut out = self.clone();
        for r in &other.rows {
            out.insert(r);
        }
        out
    }
}
