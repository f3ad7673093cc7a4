//! Littlewood-Richardson numbers and `GL_n` triple invariants.
//!
//! `c^ν_{λμ}` is counted directly: skew tableaux of shape `ν/λ` and content
//! `μ` whose reverse reading word is a lattice word. The invariant dimension
//! `dim(V_λ ⊗ V_μ ⊗ V_ν)^{GL_n}` reduces to one such number after shifting
//! all three weights to polynomial ones.
//!
//! [`oracle`] recomputes the same invariant from torus characters without
//! touching the tableau counter.

pub mod oracle;

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::weights::{Partition, Weight};
use crate::Coefficient;

pub use oracle::{oracle_triple_coefficient, oracle_triple_coefficient_with, OracleBounds};

/// The skew diagram `outer / inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Violation(format!(
                "inner shape ({inner}) is not contained in outer shape ({outer})"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Number of LR tableaux of this shape with the given content.
    pub fn count_lr_tableaux(&self, content: &Partition) -> u64 {
        if content.size() != self.size() {
            return 0;
        }
        let rows = self.outer.length();
        let mut filler = LrFiller {
            outer: (0..rows).map(|i| self.outer.part(i)).collect(),
            inner: (0..rows).map(|i| self.inner.part(i)).collect(),
            content: content.parts().to_vec(),
            grid: (0..rows).map(|i| vec![0u8; self.outer.part(i)]).collect(),
            used: vec![0; content.length() + 1],
            found: 0,
        };
        filler.fill_from(0);
        filler.found
    }
}

struct LrFiller {
    outer: Vec<usize>,
    inner: Vec<usize>,
    content: Vec<usize>,
    grid: Vec<Vec<u8>>,
    // used[v] = number of v's placed so far (1-based values)
    used: Vec<usize>,
    found: u64,
}

impl LrFiller {
    fn fill_from(&mut self, mut row: usize) {
        while row < self.outer.len() && self.outer[row] == self.inner[row] {
            row += 1;
        }
        if row == self.outer.len() {
            self.found += 1;
            return;
        }
        let col = self.outer[row] - 1;
        self.fill_cell(row, col);
    }

    // Cells are visited in reverse reading order: rows top to bottom, each
    // row right to left. The lattice condition is checked on the fly.
    fn fill_cell(&mut self, row: usize, col: usize) {
        let m = self.content.len();
        let mut hi = m.min(row + 1);
        if col + 1 < self.outer[row] {
            hi = hi.min(self.grid[row][col + 1] as usize);
        }
        let mut lo = 1;
        if row > 0 && col >= self.inner[row - 1] {
            lo = self.grid[row - 1][col] as usize + 1;
        }
        for v in lo..=hi {
            if self.used[v] >= self.content[v - 1] {
                continue;
            }
            if v > 1 && self.used[v] >= self.used[v - 1] {
                continue;
            }
            self.used[v] += 1;
            self.grid[row][col] = v as u8;
            if col > self.inner[row] {
                self.fill_cell(row, col - 1);
            } else {
                self.fill_from(row + 1);
            }
            self.used[v] -= 1;
        }
        self.grid[row][col] = 0;
    }
}

type LrKey = (Partition, Partition, Partition);

fn lr_cache() -> &'static RwLock<HashMap<LrKey, Coefficient>> {
    static CACHE: OnceLock<RwLock<HashMap<LrKey, Coefficient>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `c^ν_{λμ}`: the multiplicity of `V_ν` in `V_λ ⊗ V_μ` (classical
/// normalization). Zero unless `|λ| + |μ| = |ν|` and `λ, μ ⊆ ν`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Coefficient {
    if lambda.size() + mu.size() != nu.size()
        || !nu.contains(lambda)
        || !nu.contains(mu)
        || nu.length() > lambda.length() + mu.length()
    {
        return Coefficient::default();
    }
    if lambda.is_empty() || mu.is_empty() {
        return 1u32.into();
    }
    // symmetric in (λ, μ); count with the larger partition as the inner shape
    let (inner, content) = if lambda >= mu {
        (lambda, mu)
    } else {
        (mu, lambda)
    };
    let key = (inner.clone(), content.clone(), nu.clone());
    if let Some(hit) = lr_cache().read().unwrap().get(&key) {
        return hit.clone();
    }
    let shape = SkewShape::new(nu.clone(), inner.clone()).expect("containment checked above");
    let value = Coefficient::from(shape.count_lr_tableaux(content));
    lr_cache().write().unwrap().insert(key, value.clone());
    value
}

/// `c^n_{λμν} = dim(V_λ ⊗ V_μ ⊗ V_ν)^{GL_n}` together with its inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleCoefficient {
    pub value: Coefficient,
    pub rank: usize,
    pub weights: (Weight, Weight, Weight),
}

/// Computes `dim(V_λ ⊗ V_μ ⊗ V_ν)^{GL_n}`.
///
/// With `a = -λ_n`, `b = -μ_n` the weights `λ + a`, `μ + b` are partitions,
/// and the invariant dimension is the multiplicity of `V_{ν* + (a+b)}` in
/// their product, i.e. `c^{ν*+(a+b)}_{λ+a, μ+b}`. That target must itself be
/// a partition for the product of two polynomial representations to contain
/// it, so a negative last entry gives zero.
pub fn triple_coefficient(
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
    rank: usize,
) -> Result<TripleCoefficient> {
    for w in [lambda, mu, nu] {
        w.check_rank(rank)?;
    }
    let weights = (lambda.clone(), mu.clone(), nu.clone());
    let zero = |weights| TripleCoefficient {
        value: Coefficient::default(),
        rank,
        weights,
    };
    if lambda.total() + mu.total() + nu.total() != 0 {
        return Ok(zero(weights));
    }
    let a = -lambda.last();
    let b = -mu.last();
    let target = nu.shifted(-(a + b)).dual();
    if target.last() < 0 {
        return Ok(zero(weights));
    }
    let value = lr_coefficient(
        &lambda.shifted(a).to_partition()?,
        &mu.shifted(b).to_partition()?,
        &target.to_partition()?,
    );
    Ok(TripleCoefficient {
        value,
        rank,
        weights,
    })
}
