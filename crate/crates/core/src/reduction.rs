//! Factorization of `c^n_{λμν}` along regular faces.
//!
//! For `σ_I · σ_J · σ_K = [pt]` in `Gr(r, n)` and a weight triple on the
//! hyperplane `Σ_I λ + Σ_J μ + Σ_K ν = 0`,
//!
//! `c^n_{λμν} = c^r_{λ_I μ_J ν_K} · c^{n-r}_{λ_{I^c} μ_{J^c} ν_{K^c}}`.
//!
//! When the triple degree is `d ≥ 2` only `≤` survives. Both sides are
//! recomputed from scratch for every report and a failure of either relation
//! is returned as [`Error::Violation`].

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::horncone::face_functional;
use crate::lrcalc::triple_coefficient;
use crate::schubert::{enumerate_triples, triple_degree, DegreeFilter};
use crate::weights::{SchubertIndex, Weight};
use crate::Coefficient;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    /// `d = 1`, on the face, and the factorization holds.
    Equal,
    /// `d ≥ 2`, on the face, and `lhs ≤ factor_small · factor_large`.
    LhsLeqProduct,
    NotApplicable,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Equal => "equal",
            Verdict::LhsLeqProduct => "lhs_leq_product",
            Verdict::NotApplicable => "not_applicable",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationReport {
    pub weights: (Weight, Weight, Weight),
    pub indices: (SchubertIndex, SchubertIndex, SchubertIndex),
    /// `c^n_{λμν}`.
    pub lhs: Coefficient,
    /// `c^r_{λ_I μ_J ν_K}`.
    pub factor_small: Coefficient,
    /// `c^{n-r}_{λ_{I^c} μ_{J^c} ν_{K^c}}`.
    pub factor_large: Coefficient,
    pub degree: Coefficient,
    pub on_face: bool,
    pub verdict: Verdict,
}

impl FactorizationReport {
    pub fn product(&self) -> Coefficient {
        &self.factor_small * &self.factor_large
    }

    fn dump(&self) -> String {
        let (l, m, v) = &self.weights;
        let (i, j, k) = &self.indices;
        format!(
            "lambda={l} mu={m} nu={v} I={i} J={j} K={k} degree={} lhs={} factors={}*{}",
            self.degree, self.lhs, self.factor_small, self.factor_large
        )
    }
}

pub fn factorize(
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
    i: &SchubertIndex,
    j: &SchubertIndex,
    k: &SchubertIndex,
) -> Result<FactorizationReport> {
    let n = i.n();
    let r = i.r();
    let degree = triple_degree(i, j, k)?.d;
    let on_face = face_functional(lambda, mu, nu, i, j, k)? == 0;
    let lhs = triple_coefficient(lambda, mu, nu, n)?.value;
    let factor_small =
        triple_coefficient(&lambda.restrict(i)?, &mu.restrict(j)?, &nu.restrict(k)?, r)?.value;
    let (ic, jc, kc) = (i.complement(), j.complement(), k.complement());
    let factor_large = triple_coefficient(
        &lambda.restrict(&ic)?,
        &mu.restrict(&jc)?,
        &nu.restrict(&kc)?,
        n - r,
    )?
    .value;

    let verdict = if on_face && degree.is_one() {
        Verdict::Equal
    } else if on_face && !degree.is_zero() {
        Verdict::LhsLeqProduct
    } else {
        Verdict::NotApplicable
    };
    let report = FactorizationReport {
        weights: (lambda.clone(), mu.clone(), nu.clone()),
        indices: (i.clone(), j.clone(), k.clone()),
        lhs,
        factor_small,
        factor_large,
        degree,
        on_face,
        verdict,
    };
    match verdict {
        Verdict::Equal if report.lhs != report.product() => Err(Error::Violation(format!(
            "factorization fails on a degree-1 face: {}",
            report.dump()
        ))),
        Verdict::LhsLeqProduct if report.lhs > report.product() => Err(Error::Violation(format!(
            "lhs exceeds the factor product: {}",
            report.dump()
        ))),
        _ => Ok(report),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub n: usize,
    /// Weight entries range over `[-entry_bound, entry_bound]`.
    pub entry_bound: i64,
    /// Restrict to a single Grassmannian `Gr(r, n)`.
    pub r: Option<usize>,
    pub degrees: DegreeFilter,
    pub max_rank: usize,
    pub max_entry_bound: i64,
}

impl SweepConfig {
    pub fn new(n: usize, entry_bound: i64) -> Self {
        SweepConfig {
            n,
            entry_bound,
            r: None,
            degrees: DegreeFilter::Exactly(1),
            max_rank: 5,
            max_entry_bound: 3,
        }
    }

    pub fn with_r(mut self, r: Option<usize>) -> Self {
        self.r = r;
        self
    }

    pub fn with_degrees(mut self, degrees: DegreeFilter) -> Self {
        self.degrees = degrees;
        self
    }
}

/// Sweep over degree-1 faces; see [`sweep_faces_with`].
pub fn sweep_faces(
    n: usize,
    entry_bound: i64,
    r: Option<usize>,
) -> Result<Vec<FactorizationReport>> {
    sweep_faces_with(&SweepConfig::new(n, entry_bound).with_r(r))
}

/// Reports for every face `(r, I, J, K)` admitted by the config and every
/// bounded weight triple on that face with vanishing trace.
///
/// On-face triples are found by bucketing `ν` on `(Σ_K ν, Σ ν)` and looking
/// up the values forced by `(λ, μ)`. Output is ordered by `r`, then
/// `(I, J, K)`, then `(λ, μ, ν)` lexicographically.
pub fn sweep_faces_with(config: &SweepConfig) -> Result<Vec<FactorizationReport>> {
    let n = config.n;
    if n > config.max_rank {
        return Err(Error::bound("sweep rank", n, config.max_rank));
    }
    if config.entry_bound > config.max_entry_bound || config.entry_bound < 0 {
        return Err(Error::bound(
            "sweep entry bound",
            config.entry_bound,
            config.max_entry_bound,
        ));
    }
    let ranks: Vec<usize> = match config.r {
        Some(r) if r == 0 || r >= n => {
            return Err(Error::InvalidIndex {
                elements: Vec::new(),
                n,
                reason: "r must lie in 1..n-1",
            })
        }
        Some(r) => vec![r],
        None => (1..n).collect(),
    };
    let faces: Vec<_> = ranks
        .iter()
        .flat_map(|&r| enumerate_triples(r, n, config.degrees))
        .map(|(i, j, k, _)| (i, j, k))
        .collect();
    let weights = Weight::all_bounded(n, config.entry_bound);

    let per_face: Vec<Vec<FactorizationReport>> = faces
        .par_iter()
        .map(|(i, j, k)| {
            let mut buckets: HashMap<(i64, i64), Vec<&Weight>> = HashMap::new();
            for nu in &weights {
                buckets
                    .entry((nu.sum_over(k)?, nu.total()))
                    .or_default()
                    .push(nu);
            }
            let mut out = Vec::new();
            for lambda in &weights {
                for mu in &weights {
                    let face = -(lambda.sum_over(i)? + mu.sum_over(j)?);
                    let trace = -(lambda.total() + mu.total());
                    if let Some(nus) = buckets.get(&(face, trace)) {
                        for nu in nus {
                            out.push(factorize(lambda, mu, nu, i, j, k)?);
                        }
                    }
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(per_face.into_iter().flatten().collect())
}
