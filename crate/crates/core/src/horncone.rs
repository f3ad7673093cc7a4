//! Horn/Belkale membership: `c^n_{λμν} ≠ 0` iff the trace vanishes and
//! `Σ_{i∈I} λ_i + Σ_{j∈J} μ_j + Σ_{k∈K} ν_k ≤ 0` for every `r < n` and every
//! triple with `σ_I · σ_J · σ_K = [pt]` (or, in the variant, `= d[pt]` with
//! `d ≥ 1`).
//!
//! The inequality is stated for the Schubert labelling in which `{1..r}` is
//! the point class. Under this crate's dictionary that labelling is the
//! reversal `I ↦ {n+1-i}`, so each enumerated triple contributes the
//! inequality over its reversed index sets. Certificates report the index
//! sets that actually enter the sums.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::schubert::{enumerate_triples, DegreeFilter};
use crate::weights::{SchubertIndex, Weight};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HornViolation {
    pub r: usize,
    pub i: SchubertIndex,
    pub j: SchubertIndex,
    pub k: SchubertIndex,
    /// The left-hand side, strictly positive.
    pub lhs: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HornCertificate {
    pub member: bool,
    pub violated: Option<HornViolation>,
    /// `Σλ + Σμ + Σν`.
    pub trace: i64,
}

type Inequalities = Arc<Vec<[SchubertIndex; 3]>>;
type InequalityCache = RwLock<HashMap<(usize, usize, DegreeFilter), Inequalities>>;

fn inequality_cache() -> &'static InequalityCache {
    static CACHE: OnceLock<InequalityCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Index sets of the inequalities for `Gr(r, n)`, in the scan order of the
/// underlying Schubert triples.
pub fn inequalities(r: usize, n: usize, filter: DegreeFilter) -> Inequalities {
    let key = (r, n, filter);
    if let Some(hit) = inequality_cache().read().unwrap().get(&key) {
        return Arc::clone(hit);
    }
    let system: Inequalities = Arc::new(
        enumerate_triples(r, n, filter)
            .into_iter()
            .map(|(i, j, k, _)| [i.reversed(), j.reversed(), k.reversed()])
            .collect(),
    );
    inequality_cache()
        .write()
        .unwrap()
        .entry(key)
        .or_insert(system)
        .clone()
}

fn check_triple_rank(lambda: &Weight, mu: &Weight, nu: &Weight, n: usize) -> Result<()> {
    for w in [lambda, mu, nu] {
        w.check_rank(n)?;
    }
    Ok(())
}

pub fn horn_member(
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
    n: usize,
    use_d_variant: bool,
) -> Result<HornCertificate> {
    check_triple_rank(lambda, mu, nu, n)?;
    let trace = lambda.total() + mu.total() + nu.total();
    if trace != 0 {
        return Ok(HornCertificate {
            member: false,
            violated: None,
            trace,
        });
    }
    let filter = if use_d_variant {
        DegreeFilter::Positive
    } else {
        DegreeFilter::Exactly(1)
    };
    for r in 1..n {
        for [i, j, k] in inequalities(r, n, filter).iter() {
            let lhs = lambda.sum_over(i)? + mu.sum_over(j)? + nu.sum_over(k)?;
            if lhs > 0 {
                return Ok(HornCertificate {
                    member: false,
                    violated: Some(HornViolation {
                        r,
                        i: i.clone(),
                        j: j.clone(),
                        k: k.clone(),
                        lhs,
                    }),
                    trace,
                });
            }
        }
    }
    Ok(HornCertificate {
        member: true,
        violated: None,
        trace,
    })
}

/// `Σ_{i∈I} λ_i + Σ_{j∈J} μ_j + Σ_{k∈K} ν_k`.
pub fn face_functional(
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
    i: &SchubertIndex,
    j: &SchubertIndex,
    k: &SchubertIndex,
) -> Result<i64> {
    for x in [j, k] {
        if x.r() != i.r() || x.n() != i.n() {
            return Err(Error::GrassmannianMismatch(i.r(), i.n(), x.r(), x.n()));
        }
    }
    Ok(lambda.sum_over(i)? + mu.sum_over(j)? + nu.sum_over(k)?)
}

/// Whether `(λ, μ, ν)` lies on the hyperplane of the face `𝓕_{IJK}`.
pub fn face_equality_test(
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
    i: &SchubertIndex,
    j: &SchubertIndex,
    k: &SchubertIndex,
) -> Result<bool> {
    Ok(face_functional(lambda, mu, nu, i, j, k)? == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    fn idx(s: &str, n: usize) -> SchubertIndex {
        SchubertIndex::parse(s, n).unwrap()
    }

    #[test]
    fn horn_examples() {
        let x = w("1,1,0,0,-1,-1");
        for variant in [false, true] {
            let cert = horn_member(&x, &x, &x, 6, variant).unwrap();
            assert!(cert.member);
            assert_eq!(cert.trace, 0);
        }
        let z = Weight::zero(4);
        assert!(horn_member(&z, &z, &z, 4, false).unwrap().member);
        let cert = horn_member(&w("1,0"), &w("0,0"), &w("0,0"), 2, false).unwrap();
        assert!(!cert.member);
        assert_eq!(cert.trace, 1);
        assert!(cert.violated.is_none());
    }

    #[test]
    fn standard_times_dual_is_a_member() {
        // V_(1,0) ⊗ V_(0,-1) contains the trivial representation
        let cert = horn_member(&w("1,0"), &w("0,0"), &w("0,-1"), 2, false).unwrap();
        assert!(cert.member);
        // λ_1 + μ_2 + ν_2 = 0 is tight but not violated
        let reversed_pt = [idx("1", 2), idx("2", 2), idx("2", 2)];
        assert!(inequalities(1, 2, DegreeFilter::Exactly(1)).contains(&reversed_pt));
    }

    #[test]
    fn violation_witness() {
        let cert = horn_member(&w("2,0"), &w("0,0"), &w("-1,-1"), 2, false).unwrap();
        assert!(!cert.member);
        let v = cert.violated.unwrap();
        assert_eq!((v.r, v.lhs), (1, 1));
        assert_eq!(
            face_functional(&w("2,0"), &w("0,0"), &w("-1,-1"), &v.i, &v.j, &v.k).unwrap(),
            1
        );
    }

    #[test]
    fn face_examples() {
        let x = w("1,1,0,0,-1,-1");
        let i = idx("1,3,5", 6);
        assert!(face_equality_test(&x, &x, &x, &i, &i, &i).unwrap());
        let z = Weight::zero(6);
        assert!(face_equality_test(&z, &z, &z, &i, &i, &idx("1,2", 6)).is_err());
        let j = idx("2,4,6", 6);
        assert!(face_equality_test(&z, &z, &z, &i, &j, &i).unwrap());
        let one = idx("1", 2);
        assert_eq!(
            face_functional(&w("1,-1"), &w("0,0"), &w("0,0"), &one, &one, &one).unwrap(),
            1
        );
        assert!(!face_equality_test(&w("1,-1"), &w("0,0"), &w("0,0"), &one, &one, &one).unwrap());
        assert!(face_equality_test(&w("1,0,-1"), &w("0,0"), &w("0,0"), &one, &one, &one).is_err());
    }
}
