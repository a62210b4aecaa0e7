use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::SquareMatrix;
use crate::exec::{check_guard, Exec};

/// A partial map `T: Π₁ → Π₂` between sets of simple roots of `sl(n)`.
///
/// Simple root `j` is `α_j = ε_j − ε_{j+1}`, `1 ≤ j ≤ n − 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "TripleJson", into = "TripleJson")]
pub struct Triple {
    n: usize,
    map: BTreeMap<usize, usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct TripleJson {
    n: usize,
    pi1: Vec<usize>,
    pi2: Vec<usize>,
    #[serde(rename = "T")]
    t: Vec<[usize; 2]>,
}

impl TryFrom<TripleJson> for Triple {
    type Error = Error;

    fn try_from(j: TripleJson) -> Result<Self> {
        let triple = Triple::new(j.n, j.t.iter().map(|[a, b]| (*a, *b)))?;
        let pi1: BTreeSet<usize> = j.pi1.into_iter().collect();
        let pi2: BTreeSet<usize> = j.pi2.into_iter().collect();
        if pi1 != triple.pi1() || pi2 != triple.pi2() {
            return Err(Error::InvalidTriple("pi1/pi2 disagree with T".into()));
        }
        Ok(triple)
    }
}

impl From<Triple> for TripleJson {
    fn from(t: Triple) -> Self {
        TripleJson {
            n: t.n,
            pi1: t.pi1().into_iter().collect(),
            pi2: t.pi2().into_iter().collect(),
            t: t.map.iter().map(|(a, b)| [*a, *b]).collect(),
        }
    }
}

/// Outcome of [`validate_triple`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleReport {
    pub valid: bool,
    pub violations: Vec<String>,
}

impl Triple {
    /// Builds `T` from `(π, Tπ)` pairs. Rejects out-of-range roots, repeated
    /// sources and non-injective maps; validity is checked separately.
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n < 2 {
            return Err(Error::OutOfRange(format!("n = {n} (need n ≥ 2)")));
        }
        let mut map = BTreeMap::new();
        let mut seen = BTreeSet::new();
        for (a, b) in pairs {
            if !(1..n).contains(&a) || !(1..n).contains(&b) {
                return Err(Error::OutOfRange(format!("simple root pair ({a}, {b}) with n = {n}")));
            }
            if map.insert(a, b).is_some() {
                return Err(Error::InvalidTriple(format!("{a} mapped twice")));
            }
            if !seen.insert(b) {
                return Err(Error::InvalidTriple(format!("{b} hit twice")));
            }
        }
        Ok(Triple { n, map })
    }

    /// `Π₁ = Π₂ = ∅`.
    pub fn trivial(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pi1(&self) -> BTreeSet<usize> {
        self.map.keys().copied().collect()
    }

    pub fn pi2(&self) -> BTreeSet<usize> {
        self.map.values().copied().collect()
    }

    pub fn apply(&self, j: usize) -> Option<usize> {
        self.map.get(&j).copied()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.map.iter().map(|(a, b)| (*a, *b))
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Positive root `α_a + … + α_{b−1}` of `sl(n)`, `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PositiveRoot {
    pub a: usize,
    pub b: usize,
}

impl PositiveRoot {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == 0 || a >= b {
            return Err(Error::OutOfRange(format!("root [{a}, {b})")));
        }
        Ok(PositiveRoot { a, b })
    }

    pub fn simple(j: usize) -> Self {
        PositiveRoot { a: j, b: j + 1 }
    }

    /// All positive roots of `sl(n)`.
    pub fn all(n: usize) -> Vec<Self> {
        (1..=n).flat_map(|a| (a + 1..=n).map(move |b| PositiveRoot { a, b })).collect()
    }

    pub fn constituents(&self) -> std::ops::Range<usize> {
        self.a..self.b
    }

    pub fn is_simple(&self) -> bool {
        self.b == self.a + 1
    }

    /// `e_ab`
    pub fn x(&self, n: usize) -> SquareMatrix {
        SquareMatrix::unit(n, self.a, self.b)
    }

    /// `e_ba`
    pub fn x_neg(&self, n: usize) -> SquareMatrix {
        SquareMatrix::unit(n, self.b, self.a)
    }

    /// `e_aa − e_bb`
    pub fn coroot(&self, n: usize) -> SquareMatrix {
        SquareMatrix::unit(n, self.a, self.a).sub(&SquareMatrix::unit(n, self.b, self.b)).expect("same n")
    }

    /// Image under `T` applied to each simple constituent, if every
    /// constituent lies in `Π₁` and the images form a root again.
    pub fn image(&self, t: &Triple) -> Option<PositiveRoot> {
        let img: Option<BTreeSet<usize>> = self.constituents().map(|j| t.apply(j)).collect();
        let img = img?;
        let lo = *img.first()?;
        let hi = *img.last()?;
        (hi - lo + 1 == img.len()).then_some(PositiveRoot { a: lo, b: hi + 1 })
    }
}

/// Checks that `T` preserves the Cartan pairing (equivalently, adjacency of
/// simple roots, in both directions) and that every `π ∈ Π₁` eventually
/// leaves `Π₁` under iteration.
pub fn validate_triple(t: &Triple) -> TripleReport {
    let mut violations = Vec::new();
    let pairs: Vec<(usize, usize)> = t.pairs().collect();
    for (k, &(a, ta)) in pairs.iter().enumerate() {
        for &(b, tb) in &pairs[k + 1..] {
            let before = a.abs_diff(b) == 1;
            let after = ta.abs_diff(tb) == 1;
            if before != after {
                violations.push(format!(
                    "pairing not preserved: ({a}, {b}) {} adjacent but ({ta}, {tb}) {}",
                    if before { "are" } else { "are not" },
                    if after { "are" } else { "are not" }
                ));
            }
        }
    }
    let bound = pairs.len() + 1;
    for &(a, _) in &pairs {
        let mut cur = a;
        let mut steps = 0;
        while let Some(next) = t.apply(cur) {
            cur = next;
            steps += 1;
            if steps > bound {
                violations.push(format!("T^m({a}) stays in pi1 for every m"));
                break;
            }
        }
    }
    TripleReport { valid: violations.is_empty(), violations }
}

/// The triple with `Π₁ = Π − {n − i}`, `Π₂ = Π − {i}`, `T(j) = j + i mod n`.
pub fn cg_triple(n: usize, i: usize) -> Result<Triple> {
    if n < 2 || i == 0 || i >= n {
        return Err(Error::OutOfRange(format!("need 1 ≤ i ≤ n − 1 (n = {n}, i = {i})")));
    }
    if n.gcd(&i) != 1 {
        return Err(Error::NotCoprime { n, i });
    }
    let t = Triple::new(n, (1..n).filter(|&j| j != n - i).map(|j| (j, (j + i) % n)))?;
    let report = validate_triple(&t);
    if !report.valid {
        return Err(Error::CheckFailed(report.violations.join("; ")));
    }
    Ok(t)
}

/// Every valid triple with `|Π₁| = |Π₂| = n − 2`, by exhaustive search over
/// bijections that respect adjacency. Sorted.
pub fn enumerate_one_omitted(n: usize) -> Result<Vec<Triple>> {
    enumerate_one_omitted_with(n, Exec::default())
}

pub fn enumerate_one_omitted_with(n: usize, exec: Exec) -> Result<Vec<Triple>> {
    check_guard("enumerate_one_omitted n", n, 9)?;
    if n < 2 {
        return Err(Error::OutOfRange(format!("n = {n}")));
    }
    let omissions: Vec<(usize, usize)> = (1..n).flat_map(|a| (1..n).map(move |b| (a, b))).collect();
    let per_pair = exec.map(&omissions, |&(o1, o2)| {
        let src: Vec<usize> = (1..n).filter(|&j| j != o1).collect();
        let dst: Vec<usize> = (1..n).filter(|&j| j != o2).collect();
        let mut found = Vec::new();
        let mut assigned = Vec::with_capacity(src.len());
        let mut used = vec![false; dst.len()];
        search(n, &src, &dst, &mut assigned, &mut used, &mut found);
        found
    });
    let mut out: Vec<Triple> = per_pair.into_iter().flatten().collect();
    out.sort();
    Ok(out)
}

fn search(
    n: usize,
    src: &[usize],
    dst: &[usize],
    assigned: &mut Vec<(usize, usize)>,
    used: &mut [bool],
    found: &mut Vec<Triple>,
) {
    let k = assigned.len();
    if k == src.len() {
        let t = Triple::new(n, assigned.iter().copied()).expect("bijection");
        if validate_triple(&t).valid {
            found.push(t);
        }
        return;
    }
    let a = src[k];
    for (slot, &b) in dst.iter().enumerate() {
        if used[slot] {
            continue;
        }
        let consistent = assigned.iter().all(|&(x, tx)| (x.abs_diff(a) == 1) == (tx.abs_diff(b) == 1));
        if !consistent {
            continue;
        }
        used[slot] = true;
        assigned.push((a, b));
        search(n, src, dst, assigned, used, found);
        assigned.pop();
        used[slot] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_is_valid() {
        assert!(validate_triple(&Triple::trivial(4).unwrap()).valid);
    }

    #[test]
    fn n3_shift() {
        let t = cg_triple(3, 1).unwrap();
        assert_eq!(t, Triple::new(3, [(1, 2)]).unwrap());
    }

    #[test]
    fn n5_step_two() {
        let t = cg_triple(5, 2).unwrap();
        assert_eq!(t, Triple::new(5, [(1, 3), (2, 4), (4, 1)]).unwrap());
    }

    #[test]
    fn not_coprime() {
        assert_eq!(cg_triple(4, 2), Err(Error::NotCoprime { n: 4, i: 2 }));
        assert!(cg_triple(4, 0).is_err());
    }

    #[test]
    fn reversal_cycle_invalid() {
        let t = Triple::new(5, [(1, 4), (2, 3), (4, 1)]).unwrap();
        let r = validate_triple(&t);
        assert!(!r.valid);
        assert!(r.violations.iter().any(|v| v.contains("stays in pi1")));
    }

    #[test]
    fn adjacency_violation_reported() {
        let t = Triple::new(4, [(1, 1), (2, 3)]).unwrap();
        assert!(!validate_triple(&t).valid);
    }

    #[test]
    fn json_round_trip() {
        let t = cg_triple(5, 2).unwrap();
        let s = t.to_json_string();
        assert_eq!(Triple::from_json_str(&s).unwrap(), t);
        assert!(s.contains("\"T\""));
        let bad = r#"{"n":3,"pi1":[2],"pi2":[2],"T":[[1,2]]}"#;
        assert!(Triple::from_json_str(bad).is_err());
    }

    #[test]
    fn root_images() {
        let t = cg_triple(5, 2).unwrap();
        assert_eq!(PositiveRoot::new(1, 3).unwrap().image(&t), Some(PositiveRoot { a: 3, b: 5 }));
        assert_eq!(PositiveRoot::new(2, 4).unwrap().image(&t), None);
        assert_eq!(PositiveRoot::new(3, 4).unwrap().image(&t), None);
    }
}
