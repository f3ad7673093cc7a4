//! Schubert calculus on `Gr(r, n)` through the partition dictionary.
//!
//! `σ_I · σ_J = Σ_K c^{λ(K)}_{λ(I) λ(J)} σ_K` and the triple degree is
//! `σ_I · σ_J · σ_K = c^{λ(K)^∨}_{λ(I) λ(J)} [pt]`, where `λ(K)^∨` is the
//! complement of `λ(K)` in the `r × (n-r)` box.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lrcalc::lr_coefficient;
use crate::weights::{Partition, SchubertIndex};
use crate::Coefficient;

/// `σ_I · σ_J · σ_K = d [pt]` in `H^*(Gr(r, n))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionDegree {
    pub d: Coefficient,
    pub triple: (SchubertIndex, SchubertIndex, SchubertIndex),
    pub grassmannian: (usize, usize),
}

impl IntersectionDegree {
    /// `σ_I · σ_J · σ_K = [pt]`.
    pub fn is_point(&self) -> bool {
        self.d.is_one()
    }
}

/// Which triples an enumeration keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DegreeFilter {
    Exactly(u64),
    /// Every triple with `d ≥ 1`.
    Positive,
}

impl DegreeFilter {
    pub fn accepts(&self, d: &Coefficient) -> bool {
        match self {
            DegreeFilter::Exactly(k) => *d == Coefficient::from(*k),
            DegreeFilter::Positive => !d.is_zero(),
        }
    }
}

impl From<Option<u64>> for DegreeFilter {
    fn from(d: Option<u64>) -> Self {
        DegreeFilter::Exactly(d.unwrap_or(1))
    }
}

fn same_grassmannian(a: &SchubertIndex, b: &SchubertIndex) -> Result<()> {
    if a.r() != b.r() || a.n() != b.n() {
        return Err(Error::GrassmannianMismatch(a.r(), a.n(), b.r(), b.n()));
    }
    Ok(())
}

/// Complement of `p` inside the `rows × cols` box.
pub fn box_complement(p: &Partition, rows: usize, cols: usize) -> Partition {
    let parts = (0..rows).map(|j| cols - p.part(rows - 1 - j)).collect();
    Partition::new(parts).expect("box complement of a partition is a partition")
}

pub fn triple_degree(
    i: &SchubertIndex,
    j: &SchubertIndex,
    k: &SchubertIndex,
) -> Result<IntersectionDegree> {
    same_grassmannian(i, j)?;
    same_grassmannian(i, k)?;
    let (r, n) = (i.r(), i.n());
    let (li, lj, lk) = (i.to_partition(), j.to_partition(), k.to_partition());
    let d = if li.size() + lj.size() + lk.size() != r * (n - r) {
        Coefficient::zero()
    } else {
        lr_coefficient(&li, &lj, &box_complement(&lk, r, n - r))
    };
    Ok(IntersectionDegree {
        d,
        triple: (i.clone(), j.clone(), k.clone()),
        grassmannian: (r, n),
    })
}

/// Triples `(I, J, K)` in `𝒫(r, n)^3` whose triple degree passes `filter`,
/// each with its degree, in lexicographic order.
pub fn enumerate_triples(
    r: usize,
    n: usize,
    filter: DegreeFilter,
) -> Vec<(SchubertIndex, SchubertIndex, SchubertIndex, Coefficient)> {
    let all = SchubertIndex::all(r, n);
    let codims: Vec<usize> = all.iter().map(|i| i.to_partition().size()).collect();
    let top = r * n.saturating_sub(r);
    let mut out = Vec::new();
    for (a, i) in all.iter().enumerate() {
        for (b, j) in all.iter().enumerate() {
            if codims[a] + codims[b] > top {
                continue;
            }
            let need = top - codims[a] - codims[b];
            for (c, k) in all.iter().enumerate() {
                if codims[c] != need {
                    continue;
                }
                let d = triple_degree(i, j, k).expect("same Grassmannian").d;
                if filter.accepts(&d) {
                    out.push((i.clone(), j.clone(), k.clone(), d));
                }
            }
        }
    }
    out
}

/// Triples with `σ_I · σ_J · σ_K = d [pt]`, `d` defaulting to 1.
pub fn enumerate_pt_triples(
    r: usize,
    n: usize,
    d_filter: Option<u64>,
) -> Vec<(SchubertIndex, SchubertIndex, SchubertIndex)> {
    enumerate_triples(r, n, d_filter.into())
        .into_iter()
        .map(|(i, j, k, _)| (i, j, k))
        .collect()
}

/// `σ_I · σ_J` in the Schubert basis; zero coefficients are omitted.
pub fn product_expansion(
    i: &SchubertIndex,
    j: &SchubertIndex,
) -> Result<BTreeMap<SchubertIndex, Coefficient>> {
    same_grassmannian(i, j)?;
    let (li, lj) = (i.to_partition(), j.to_partition());
    let size = li.size() + lj.size();
    let mut out = BTreeMap::new();
    for k in SchubertIndex::all(i.r(), i.n()) {
        let lk = k.to_partition();
        if lk.size() != size {
            continue;
        }
        let c = lr_coefficient(&li, &lj, &lk);
        if !c.is_zero() {
            out.insert(k, c);
        }
    }
    Ok(out)
}
