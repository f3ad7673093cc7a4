//! Dominant weights, partitions and Schubert indices.
//!
//! Text encodings are comma-separated integers without whitespace, e.g.
//! `1,1,0,0,-1,-1` for a weight or `1,3,5` for a 1-based index subset. The
//! empty string encodes the empty partition.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};

fn parse_list<T: FromStr>(s: &str) -> Result<Vec<T>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.parse::<T>()
                .map_err(|_| Error::Parse(format!("invalid integer {tok:?} in {s:?}")))
        })
        .collect()
}

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    write!(f, "{}", items.iter().join(","))
}

/// A `GL_n` dominant weight: a weakly decreasing integer vector whose length
/// is the rank. Trailing zeros are significant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    entries: Vec<i64>,
}

impl Weight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Parse("a weight needs rank at least 1".into()));
        }
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant(entries));
        }
        Ok(Weight { entries })
    }

    pub fn zero(rank: usize) -> Self {
        Weight {
            entries: vec![0; rank.max(1)],
        }
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn first(&self) -> i64 {
        self.entries[0]
    }

    pub fn last(&self) -> i64 {
        self.entries[self.entries.len() - 1]
    }

    /// Sum of the entries (the determinant character exponent).
    pub fn total(&self) -> i64 {
        self.entries.iter().sum()
    }

    /// Spread `first - last`; zero exactly for powers of the determinant.
    pub fn spread(&self) -> i64 {
        self.first() - self.last()
    }

    pub fn shifted(&self, by: i64) -> Weight {
        Weight {
            entries: self.entries.iter().map(|e| e + by).collect(),
        }
    }

    pub fn scaled(&self, by: i64) -> Weight {
        assert!(by >= 0, "negative scaling breaks dominance");
        Weight {
            entries: self.entries.iter().map(|e| e * by).collect(),
        }
    }

    /// Highest weight of the dual representation, `(-w_n, ..., -w_1)`.
    pub fn dual(&self) -> Weight {
        Weight {
            entries: self.entries.iter().rev().map(|e| -e).collect(),
        }
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        if self.rank() != rank {
            return Err(Error::RankMismatch {
                expected: rank,
                found: self.rank(),
            });
        }
        Ok(())
    }

    /// The subsequence `(w_{i_1}, ..., w_{i_r})` selected by `index`.
    pub fn restrict(&self, index: &SchubertIndex) -> Result<Weight> {
        self.check_rank(index.n())?;
        Ok(Weight {
            entries: index
                .elements()
                .iter()
                .map(|&i| self.entries[i - 1])
                .collect(),
        })
    }

    /// `Σ_{i ∈ index} w_i`.
    pub fn sum_over(&self, index: &SchubertIndex) -> Result<i64> {
        self.check_rank(index.n())?;
        Ok(index.elements().iter().map(|&i| self.entries[i - 1]).sum())
    }

    /// The weight as a partition, when every entry is nonnegative.
    pub fn to_partition(&self) -> Result<Partition> {
        Partition::from_signed(&self.entries)
    }

    /// All dominant weights of `rank` with entries in `[-bound, bound]`, in
    /// lexicographic order.
    pub fn all_bounded(rank: usize, bound: i64) -> Vec<Weight> {
        fn go(rank: usize, lo: i64, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
            if cur.len() == rank {
                out.push(Weight {
                    entries: cur.clone(),
                });
                return;
            }
            let top = cur.last().copied().unwrap_or(hi);
            for v in lo..=top {
                cur.push(v);
                go(rank, lo, hi, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if rank > 0 {
            go(rank, -bound, bound, &mut Vec::with_capacity(rank), &mut out);
        }
        out.sort();
        out
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.entries)
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Weight::new(parse_list(s)?)
    }
}

/// A partition: weakly decreasing positive parts. The empty partition has no
/// parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant(
                parts.iter().map(|&p| p as i64).collect(),
            ));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn from_signed(entries: &[i64]) -> Result<Self> {
        if entries.iter().any(|&e| e < 0) {
            return Err(Error::NegativePart(entries.to_vec()));
        }
        Partition::new(entries.iter().map(|&e| e as usize).collect())
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|α|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `l(α)`, the number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part, 0-based, with implicit trailing zeros.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Young-diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// `ᾱ = (α_2, α_3, ...)`.
    pub fn without_first_row(&self) -> Partition {
        Partition {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        Partition {
            parts: (0..cols)
                .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
                .collect(),
        }
    }

    /// Pads with zeros to a weight of the given rank.
    pub fn to_weight(&self, rank: usize) -> Result<Weight> {
        if self.length() > rank {
            return Err(Error::RankMismatch {
                expected: rank,
                found: self.length(),
            });
        }
        let mut entries: Vec<i64> = self.parts.iter().map(|&p| p as i64).collect();
        entries.resize(rank, 0);
        Weight::new(entries)
    }

    /// All partitions of `n`, in decreasing lexicographic order
    /// (`(n)`, `(n-1,1)`, ..., `(1^n)`).
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Partitions fitting inside the `rows × cols` rectangle.
    pub fn all_in_box(rows: usize, cols: usize) -> Vec<Partition> {
        fn go(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition { parts: cur.clone() });
            if cur.len() == rows {
                return;
            }
            for p in 1..=max {
                cur.push(p);
                go(rows, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(rows, cols, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.parts)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<i64> = parse_list(s)?;
        Partition::from_signed(&parts)
    }
}

/// A 1-based subset `I = {i_1 < ... < i_r}` of `{1..n}` with `1 ≤ r ≤ n-1`,
/// indexing the Schubert class `σ_I` of `Gr(r, n)`.
///
/// The class dictionary is `λ(I)_j = i_{r+1-j} - (r+1-j)`: `{1..r}` is the
/// fundamental class and `{n-r+1..n}` the point class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchubertIndex {
    elements: Vec<usize>,
    n: usize,
}

impl SchubertIndex {
    pub fn new(elements: Vec<usize>, n: usize) -> Result<Self> {
        let bad = |reason| Error::InvalidIndex {
            elements: elements.clone(),
            n,
            reason,
        };
        if elements.is_empty() || elements.len() >= n {
            return Err(bad("cardinality must lie in 1..n-1"));
        }
        if elements[0] < 1 || elements[elements.len() - 1] > n {
            return Err(bad("elements must lie in 1..n"));
        }
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(bad("elements must be strictly increasing"));
        }
        Ok(SchubertIndex { elements, n })
    }

    pub fn parse(s: &str, n: usize) -> Result<Self> {
        SchubertIndex::new(parse_list(s)?, n)
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn r(&self) -> usize {
        self.elements.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elements.binary_search(&i).is_ok()
    }

    /// `I^c = {1..n} \ I`, an index of `Gr(n-r, n)`.
    pub fn complement(&self) -> SchubertIndex {
        SchubertIndex {
            elements: (1..=self.n).filter(|i| !self.contains(*i)).collect(),
            n: self.n,
        }
    }

    /// The reversed subset `{n+1-i : i ∈ I}`; its class is the Poincaré dual
    /// of `σ_I`.
    pub fn reversed(&self) -> SchubertIndex {
        SchubertIndex {
            elements: self.elements.iter().rev().map(|i| self.n + 1 - i).collect(),
            n: self.n,
        }
    }

    /// The partition `λ(I)` inside the `r × (n-r)` box; `|λ(I)|` is the
    /// codimension of `σ_I`.
    pub fn to_partition(&self) -> Partition {
        let r = self.r();
        let parts = (1..=r)
            .map(|j| self.elements[r - j] - (r + 1 - j))
            .collect();
        Partition::new(parts).expect("index elements increase strictly")
    }

    /// Inverse of [`SchubertIndex::to_partition`].
    pub fn from_partition(p: &Partition, r: usize, n: usize) -> Result<Self> {
        if p.length() > r || p.part(0) > n.saturating_sub(r) {
            return Err(Error::InvalidIndex {
                elements: p.parts().to_vec(),
                n,
                reason: "partition does not fit in the r × (n-r) box",
            });
        }
        let elements = (1..=r).map(|k| p.part(r - k) + k).collect();
        SchubertIndex::new(elements, n)
    }

    /// `𝒫(r, n)` in lexicographic order.
    pub fn all(r: usize, n: usize) -> Vec<SchubertIndex> {
        if r == 0 || r >= n {
            return Vec::new();
        }
        (1..=n)
            .combinations(r)
            .map(|elements| SchubertIndex { elements, n })
            .collect()
    }
}

impl fmt::Display for SchubertIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.elements)
    }
}
