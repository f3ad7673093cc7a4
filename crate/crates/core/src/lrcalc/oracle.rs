//! Character-theoretic recomputation of `dim(V_λ ⊗ V_μ ⊗ V_ν)^{GL_n}`.
//!
//! Torus characters are expanded from semistandard tableaux (Kostka
//! numbers), multiplied as Laurent polynomials, and the multiplicity of
//! `V_{ν*}` is read off by the alternating sum over `S_n`:
//!
//! `mult_κ(χ) = Σ_{w ∈ S_n} sgn(w) · [x^{κ + δ - w·δ}] χ`.
//!
//! Exponential in the rank and the weight spread; meant for small instances.

use std::collections::HashMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::weights::Weight;
use crate::Coefficient;

/// Environment variable overriding [`OracleBounds::max_rank`].
pub const ORACLE_BOUND_ENV: &str = "LR_REDUCE_ORACLE_BOUND";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBounds {
    pub max_rank: usize,
    /// Largest admissible `first - last` of any input weight.
    pub max_spread: i64,
}

impl Default for OracleBounds {
    fn default() -> Self {
        OracleBounds {
            max_rank: 4,
            max_spread: 8,
        }
    }
}

impl OracleBounds {
    /// Defaults, with the rank bound taken from `LR_REDUCE_ORACLE_BOUND` when
    /// it holds a positive integer.
    pub fn from_env() -> Self {
        let mut bounds = OracleBounds::default();
        if let Some(rank) = std::env::var(ORACLE_BOUND_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&r| r > 0)
        {
            bounds.max_rank = rank;
        }
        bounds
    }
}

type Character = HashMap<Vec<i64>, i64>;

/// Weight multiplicities of `V_w`, keyed by torus weight.
pub fn torus_character(w: &Weight) -> Character {
    let n = w.rank();
    let base = w.last();
    let shape: Vec<usize> = w.entries().iter().map(|&e| (e - base) as usize).collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut content = vec![0i64; n];
    let mut out = Character::new();
    ssyt(&shape, n, 0, 0, &mut grid, &mut content, &mut |content| {
        let weight = content.iter().map(|c| c + base).collect();
        *out.entry(weight).or_insert(0) += 1;
    });
    out
}

// Row-major enumeration of semistandard fillings with entries 1..=n.
fn ssyt(
    shape: &[usize],
    n: usize,
    row: usize,
    col: usize,
    grid: &mut [Vec<usize>],
    content: &mut [i64],
    emit: &mut impl FnMut(&[i64]),
) {
    if row == shape.len() || shape[row] == 0 {
        emit(content);
        return;
    }
    let (next_row, next_col) = if col + 1 == shape[row] {
        (row + 1, 0)
    } else {
        (row, col + 1)
    };
    let mut lo = 1;
    if col > 0 {
        lo = lo.max(grid[row][col - 1]);
    }
    if row > 0 {
        lo = lo.max(grid[row - 1][col] + 1);
    }
    for v in lo..=n {
        grid[row][col] = v;
        content[v - 1] += 1;
        ssyt(shape, n, next_row, next_col, grid, content, emit);
        content[v - 1] -= 1;
    }
}

fn multiply(a: &Character, b: &Character) -> Character {
    let mut out = Character::with_capacity(a.len() * 2);
    for (wa, ma) in a {
        for (wb, mb) in b {
            let w: Vec<i64> = wa.iter().zip(wb).map(|(x, y)| x + y).collect();
            *out.entry(w).or_insert(0) += ma * mb;
        }
    }
    out
}

fn permutation_sign(p: &[usize]) -> i64 {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Multiplicity of the irreducible `V_κ` in a `GL_n` character.
pub fn multiplicity(character: &Character, kappa: &Weight) -> i64 {
    let n = kappa.rank();
    let delta: Vec<i64> = (0..n).rev().map(|i| i as i64).collect();
    (0..n)
        .permutations(n)
        .map(|perm| {
            let key: Vec<i64> = (0..n)
                .map(|i| kappa.entries()[i] + delta[i] - delta[perm[i]])
                .collect();
            permutation_sign(&perm) * character.get(&key).copied().unwrap_or(0)
        })
        .sum()
}

/// [`oracle_triple_coefficient_with`] using [`OracleBounds::from_env`].
pub fn oracle_triple_coefficient(
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
    rank: usize,
) -> Result<Coefficient> {
    oracle_triple_coefficient_with(lambda, mu, nu, rank, &OracleBounds::from_env())
}

pub fn oracle_triple_coefficient_with(
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
    rank: usize,
    bounds: &OracleBounds,
) -> Result<Coefficient> {
    if rank > bounds.max_rank {
        return Err(Error::bound("oracle rank", rank, bounds.max_rank));
    }
    for w in [lambda, mu, nu] {
        w.check_rank(rank)?;
        if w.spread() > bounds.max_spread {
            return Err(Error::bound(
                "oracle weight spread",
                w.spread(),
                bounds.max_spread,
            ));
        }
    }
    let product = multiply(&torus_character(lambda), &torus_character(mu));
    let m = multiplicity(&product, &nu.dual());
    if m < 0 {
        return Err(Error::Violation(format!(
            "negative multiplicity {m} from the alternating sum"
        )));
    }
    Ok(Coefficient::from(m as u64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    fn oracle(a: &str, b: &str, c: &str, n: usize) -> Coefficient {
        oracle_triple_coefficient_with(&w(a), &w(b), &w(c), n, &OracleBounds::default()).unwrap()
    }

    #[test]
    fn character_dimensions() {
        let dim = |s: &str| torus_character(&w(s)).values().sum::<i64>();
        assert_eq!(dim("1,0,0"), 3);
        assert_eq!(dim("1,0,-1"), 8);
        assert_eq!(dim("2,1,0"), 8);
        assert_eq!(dim("2,0,0,0"), 10);
        assert_eq!(dim("-1,-1"), 1);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(oracle("1,0,-1", "1,0,-1", "1,0,-1", 3), 2u32.into());
        assert_eq!(oracle("1,0", "0,-1", "0,0", 2), 1u32.into());
        assert_eq!(oracle("1,0", "1,0", "0,0", 2), 0u32.into());
    }

    #[test]
    fn bounds_are_enforced() {
        let big = w("0,0,0,0,0");
        assert!(matches!(
            oracle_triple_coefficient_with(&big, &big, &big, 5, &OracleBounds::default()),
            Err(Error::BoundExceeded { .. })
        ));
        let wide = w("9,0");
        assert!(matches!(
            oracle_triple_coefficient_with(
                &wide,
                &w("0,0"),
                &w("0,-9"),
                2,
                &OracleBounds::default()
            ),
            Err(Error::BoundExceeded { .. })
        ));
    }
}
