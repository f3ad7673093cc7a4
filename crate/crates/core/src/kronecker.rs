//! Symmetric-group characters and Kronecker coefficients.
//!
//! Characters come from the Murnaghan-Nakayama rule on beta-sets (abacus
//! form): removing a rim hook of length `k` moves one bead from `b` to
//! `b - k`, with sign `(-1)^{beads strictly between}`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lrcalc::lr_coefficient;
use crate::weights::Partition;
use crate::Coefficient;

/// Largest `n` for which tables are built.
pub const MAX_DEGREE: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    n: usize,
    /// Row labels (irreducibles) and column labels (cycle types) alike, in
    /// decreasing lexicographic order.
    partitions: Vec<Partition>,
    values: Vec<Vec<i64>>,
    class_sizes: Vec<u64>,
    position: HashMap<Partition, usize>,
}

impl CharacterTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    /// `values()[a][c] = χ_a(class c)`.
    pub fn values(&self) -> &[Vec<i64>] {
        &self.values
    }

    pub fn class_sizes(&self) -> &[u64] {
        &self.class_sizes
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.position.get(p).copied()
    }

    pub fn character(&self, irrep: &Partition, cycle_type: &Partition) -> Option<i64> {
        Some(self.values[self.index_of(irrep)?][self.index_of(cycle_type)?])
    }

    /// `n!`.
    pub fn group_order(&self) -> u64 {
        (1..=self.n as u64).product()
    }
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// `z_ρ = Π_i i^{m_i} m_i!`, the centralizer order of the class `ρ`.
pub fn centralizer_order(cycle_type: &Partition) -> u64 {
    let mut z = 1u64;
    let parts = cycle_type.parts();
    let mut start = 0;
    while start < parts.len() {
        let len = parts[start];
        let mult = parts[start..].iter().take_while(|&&p| p == len).count();
        z *= (len as u64).pow(mult as u32) * factorial(mult);
        start += mult;
    }
    z
}

fn to_beta(p: &Partition) -> Vec<usize> {
    let l = p.length();
    (0..l).map(|i| p.part(i) + (l - 1 - i)).collect()
}

fn from_beta(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let l = beta.len();
    let parts = (0..l).map(|i| beta[i] - (l - 1 - i)).collect();
    Partition::new(parts).expect("beta-set decodes to a partition")
}

#[derive(Default)]
struct MurnaghanNakayama {
    memo: HashMap<(Partition, Vec<usize>), i64>,
}

impl MurnaghanNakayama {
    fn chi(&mut self, shape: &Partition, cycles: &[usize]) -> i64 {
        if cycles.is_empty() {
            return shape.is_empty() as i64;
        }
        let key = (shape.clone(), cycles.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let k = cycles[0];
        let beta = to_beta(shape);
        let mut total = 0;
        for (pos, &b) in beta.iter().enumerate() {
            if b < k || beta.contains(&(b - k)) {
                continue;
            }
            let between = beta.iter().filter(|&&x| x > b - k && x < b).count();
            let mut moved = beta.clone();
            moved[pos] = b - k;
            let sign = if between % 2 == 0 { 1 } else { -1 };
            total += sign * self.chi(&from_beta(moved), &cycles[1..]);
        }
        self.memo.insert(key, total);
        total
    }
}

fn build_table(n: usize) -> CharacterTable {
    let partitions = Partition::all_of_size(n);
    let mut mn = MurnaghanNakayama::default();
    let values = partitions
        .iter()
        .map(|irrep| {
            partitions
                .iter()
                .map(|c| mn.chi(irrep, c.parts()))
                .collect()
        })
        .collect();
    let order = factorial(n);
    let class_sizes = partitions
        .iter()
        .map(|c| order / centralizer_order(c))
        .collect();
    let position = partitions
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    CharacterTable {
        n,
        partitions,
        values,
        class_sizes,
        position,
    }
}

/// The full character table of `S_n`, cached per `n`.
pub fn character_table(n: usize) -> Result<Arc<CharacterTable>> {
    if n > MAX_DEGREE {
        return Err(Error::bound("symmetric group degree", n, MAX_DEGREE));
    }
    static TABLES: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = tables.lock().unwrap().get(&n) {
        return Ok(Arc::clone(t));
    }
    let table = Arc::new(build_table(n));
    Ok(Arc::clone(tables.lock().unwrap().entry(n).or_insert(table)))
}

/// `dim [α]` by the hook length formula.
pub fn hook_dimension(p: &Partition) -> BigUint {
    let conj = p.conjugate();
    let mut hooks = BigUint::one();
    for (i, &row) in p.parts().iter().enumerate() {
        for j in 0..row {
            hooks *= (row - j) + (conj.part(j) - i) - 1;
        }
    }
    let fact: BigUint = (1..=p.size()).fold(BigUint::one(), |acc, k| acc * k);
    fact / hooks
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KroneckerCoefficient {
    pub value: Coefficient,
    pub triple: (Partition, Partition, Partition),
}

fn common_size(parts: [&Partition; 3]) -> Result<usize> {
    let sizes: Vec<usize> = parts.iter().map(|p| p.size()).collect();
    if sizes.iter().any(|&s| s != sizes[0]) {
        return Err(Error::SizeMismatch(sizes));
    }
    Ok(sizes[0])
}

/// `k_{αβγ} = (1/n!) Σ_c |c| χ_α(c) χ_β(c) χ_γ(c)`.
pub fn kronecker_coefficient(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
) -> Result<KroneckerCoefficient> {
    let n = common_size([alpha, beta, gamma])?;
    let table = character_table(n)?;
    let rows =
        [alpha, beta, gamma].map(|p| &table.values[table.index_of(p).expect("size checked")]);
    let sum: i128 = table
        .class_sizes
        .iter()
        .enumerate()
        .map(|(c, &size)| size as i128 * (rows[0][c] * rows[1][c]) as i128 * rows[2][c] as i128)
        .sum();
    let order = table.group_order() as i128;
    if sum < 0 || sum % order != 0 {
        return Err(Error::Violation(format!(
            "character inner product {sum} is not a nonnegative multiple of {order}"
        )));
    }
    Ok(KroneckerCoefficient {
        value: Coefficient::from((sum / order) as u128),
        triple: (alpha.clone(), beta.clone(), gamma.clone()),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MurnaghanLittlewoodReport {
    pub k: Coefficient,
    /// `(n - α_1) + (n - β_1)`.
    pub depth_lhs: usize,
    /// `n - γ_1`.
    pub depth_rhs: usize,
    pub equality_case: bool,
    /// `c^{γ̄}_{ᾱ β̄}`, computed only in the equality case.
    pub lr: Option<Coefficient>,
}

/// Checks `k ≠ 0 ⇒ (n-α_1) + (n-β_1) ≥ n-γ_1`, and `k = c^{γ̄}_{ᾱβ̄}` whenever
/// the depths are equal. A failure is returned as [`Error::Violation`].
pub fn murnaghan_littlewood_check(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
) -> Result<MurnaghanLittlewoodReport> {
    let k = kronecker_coefficient(alpha, beta, gamma)?.value;
    let n = alpha.size();
    let depth_lhs = (n - alpha.part(0)) + (n - beta.part(0));
    let depth_rhs = n - gamma.part(0);
    let equality_case = depth_lhs == depth_rhs;
    let triple = || format!("alpha=({alpha}) beta=({beta}) gamma=({gamma})");
    if !k.is_zero() && depth_lhs < depth_rhs {
        return Err(Error::Violation(format!(
            "k={k} but depth {depth_lhs} < {depth_rhs} for {}",
            triple()
        )));
    }
    let lr = if equality_case {
        let lr = lr_coefficient(
            &alpha.without_first_row(),
            &beta.without_first_row(),
            &gamma.without_first_row(),
        );
        if lr != k {
            return Err(Error::Violation(format!(
                "k={k} differs from the LR coefficient {lr} for {}",
                triple()
            )));
        }
        Some(lr)
    } else {
        None
    };
    Ok(MurnaghanLittlewoodReport {
        k,
        depth_lhs,
        depth_rhs,
        equality_case,
        lr,
    })
}
