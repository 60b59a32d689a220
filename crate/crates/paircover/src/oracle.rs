//! Exact small-instance solvers.
//!
//! [`min_cover_exact`] finds the true minimum number of capacity-`k`
//! referees by branch and bound, certifying the bounds and constructions
//! at desk scale. The capacity here is strict: every block holds at most
//! `k` proposals, never `k + 1`, which is what separates the exact
//! covering number from the relaxed odd-capacity schemes.
//!
//! [`max_pairs_partition3`] and [`max_pairs_partition5`] brute-force the
//! two quadratic maximization kernels the strengthened lower bounds rest
//! on, over all non-negative integer partitions.

use crate::cover::{Assignment, Instance, Method, Referee};
use crate::error::{Error, Result};

/// Outcome of an exact search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    /// Size of the smallest cover found, if any fits under the limits.
    pub minimum: Option<u32>,
    /// The lexicographically first optimal family, as an assignment.
    pub witness: Option<Assignment>,
    /// Search nodes visited; identical across runs unless a wall-clock
    /// limit cut the search short.
    pub nodes_explored: u64,
    /// True when the search proved the minimum; false when a limit was
    /// hit first (the minimum then carries the best cover found, if any).
    pub exhausted: bool,
}

/// Effort caps for [`min_cover_with_limits`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchLimits {
    /// Stop exploring after this many nodes.
    pub max_nodes: Option<u64>,
    /// Stop exploring after this much wall-clock time. Truncation points
    /// become machine-dependent; node counts stay deterministic without it.
    pub max_time: Option<std::time::Duration>,
}

/// Largest `n` the bitmask search supports (`C(16,2) = 120` pair bits).
pub const MAX_ORACLE_N: u32 = 16;

struct Search {
    /// Per pair, the candidate blocks containing it, each as a pair mask,
    /// in the order they are generated (ascending complements).
    candidates: Vec<Vec<(u128, Vec<u32>)>>,
    pairs_per_block: u32,
    limit: u32,
    max_nodes: u64,
    deadline: Option<std::time::Instant>,
    truncated: bool,
    nodes: u64,
    best: Option<(u32, Vec<Vec<u32>>)>,
    stack: Vec<Vec<u32>>,
}

impl Search {
    fn out_of_budget(&mut self) -> bool {
        if self.truncated {
            return true;
        }
        if self.nodes >= self.max_nodes {
            self.truncated = true;
        } else if let Some(deadline) = self.deadline {
            if self.nodes.is_multiple_of(1024) && std::time::Instant::now() >= deadline {
                self.truncated = true;
            }
        }
        self.truncated
    }

    fn dfs(&mut self, uncovered: u128, depth: u32) {
        if self.out_of_budget() {
            return;
        }
        self.nodes += 1;
        if uncovered == 0 {
            if self.best.as_ref().is_none_or(|(b, _)| depth < *b) {
                self.best = Some((depth, self.stack.clone()));
            }
            return;
        }
        let needed = (uncovered.count_ones()).div_ceil(self.pairs_per_block);
        if depth + needed > self.limit {
            return;
        }
        if let Some((best, _)) = &self.best {
            if depth + needed >= *best {
                return;
            }
        }
        let first = uncovered.trailing_zeros() as usize;
        // move() keeps candidate lists immutable while the stack mutates
        let blocks = std::mem::take(&mut self.candidates[first]);
        for (mask, block) in &blocks {
            self.stack.push(block.clone());
            self.dfs(uncovered & !mask, depth + 1);
            self.stack.pop();
        }
        self.candidates[first] = blocks;
    }
}

/// Exact minimum number of strict-capacity-`k` referees covering all
/// pairs of `n` proposals, searched up to `referee_limit` referees.
///
/// Symmetry is broken by fixing the first block to `1..=k` (any optimal
/// family can be relabeled into that form) and always branching on the
/// lexicographically first uncovered pair. The witness is therefore the
/// first optimal family in generation order, stable across runs.
pub fn min_cover_exact(n: u32, k: u32, referee_limit: u32) -> Result<OracleResult> {
    min_cover_with_limits(n, k, referee_limit, SearchLimits::default())
}

/// [`min_cover_exact`] with additional node and wall-clock caps. Hitting
/// either cap yields `exhausted = false`; the minimum then only upper
/// bounds the true value.
pub fn min_cover_with_limits(
    n: u32,
    k: u32,
    referee_limit: u32,
    limits: SearchLimits,
) -> Result<OracleResult> {
    let instance = Instance::new(n, k)?;
    if n > MAX_ORACLE_N {
        return Err(Error::InvalidInstance(format!(
            "exact search supports n <= {MAX_ORACLE_N}, got n = {n}"
        )));
    }
    let k_eff = instance.effective_capacity();

    let pair_count = (n * (n - 1) / 2) as usize;
    let mut pair_index = vec![vec![0usize; n as usize + 1]; n as usize + 1];
    let mut next = 0usize;
    #[allow(clippy::needless_range_loop)]
    for i in 1..=n as usize {
        for j in i + 1..=n as usize {
            pair_index[i][j] = next;
            next += 1;
        }
    }
    let block_mask = |block: &[u32]| -> u128 {
        let mut mask = 0u128;
        for (a, &i) in block.iter().enumerate() {
            for &j in &block[a + 1..] {
                mask |= 1u128 << pair_index[i as usize][j as usize];
            }
        }
        mask
    };

    // for each pair, every size-k block containing it, by ascending complement
    let mut candidates: Vec<Vec<(u128, Vec<u32>)>> = vec![Vec::new(); pair_count];
    for i in 1..=n {
        for j in i + 1..=n {
            let others: Vec<u32> = (1..=n).filter(|&v| v != i && v != j).collect();
            let extra = (k_eff - 2) as usize;
            let slot = pair_index[i as usize][j as usize];
            for combo in combinations(&others, extra) {
                let mut block = vec![i, j];
                block.extend(combo);
                block.sort_unstable();
                candidates[slot].push((block_mask(&block), block));
            }
        }
    }

    let full: u128 = if pair_count == 128 {
        u128::MAX
    } else {
        (1u128 << pair_count) - 1
    };
    let first_block: Vec<u32> = (1..=k_eff).collect();
    let first_mask = block_mask(&first_block);

    let mut search = Search {
        candidates,
        pairs_per_block: k_eff * (k_eff - 1) / 2,
        limit: referee_limit,
        max_nodes: limits.max_nodes.unwrap_or(u64::MAX),
        deadline: limits.max_time.map(|t| std::time::Instant::now() + t),
        truncated: false,
        nodes: 0,
        best: None,
        stack: vec![first_block],
    };
    if referee_limit >= 1 {
        search.dfs(full & !first_mask, 1);
    }

    let (minimum, witness) = match search.best {
        Some((m, blocks)) => {
            let referees = blocks
                .into_iter()
                .enumerate()
                .map(|(idx, b)| Referee::new(idx as u32 + 1, b))
                .collect();
            let witness = Assignment {
                instance,
                method: Method::External,
                declared_capacity: k_eff,
                referees,
            };
            (Some(m), Some(witness))
        }
        None => (None, None),
    };
    Ok(OracleResult {
        exhausted: minimum.is_some() && !search.truncated,
        minimum,
        witness,
        nodes_explored: search.nodes,
    })
}

/// All `size`-subsets of `items` in lexicographic order.
fn combinations(items: &[u32], size: usize) -> Vec<Vec<u32>> {
    if size == 0 {
        return vec![Vec::new()];
    }
    if items.len() < size {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut indices: Vec<usize> = (0..size).collect();
    loop {
        out.push(indices.iter().map(|&i| items[i]).collect());
        let mut pos = size;
        while pos > 0 {
            pos -= 1;
            if indices[pos] != pos + items.len() - size {
                indices[pos] += 1;
                for later in pos + 1..size {
                    indices[later] = indices[later - 1] + 1;
                }
                break;
            }
            if pos == 0 {
                return out;
            }
        }
    }
}

/// Maximum of a quadratic form over integer partitions, with the
/// lexicographically smallest maximizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionMax {
    pub k: u32,
    pub best_value: u64,
    pub argmax: Vec<u32>,
}

/// Brute-force maximum of `wy + wz + xz + yz` over non-negative integers
/// with `w + x + y + z = k`. The maximum sits at `x = 0` with the rest
/// balanced in thirds.
pub fn max_pairs_partition3(k: u32) -> PartitionMax {
    let mut best = PartitionMax {
        k,
        best_value: 0,
        argmax: vec![0, 0, 0, k],
    };
    for w in 0..=k {
        for x in 0..=k - w {
            for y in 0..=k - w - x {
                let z = k - w - x - y;
                let (wf, xf, yf, zf) = (w as u64, x as u64, y as u64, z as u64);
                let value = wf * yf + wf * zf + xf * zf + yf * zf;
                if value > best.best_value {
                    best.best_value = value;
                    best.argmax = vec![w, x, y, z];
                }
            }
        }
    }
    best
}

/// Brute-force maximum of the pairwise form over six non-negative
/// integers summing to `k`, all products present except `wx` and `xy`.
/// The maximum sits at `x = 0` with the rest balanced in fifths.
pub fn max_pairs_partition5(k: u32) -> PartitionMax {
    let mut best = PartitionMax {
        k,
        best_value: 0,
        argmax: vec![0, 0, 0, 0, 0, k],
    };
    for w in 0..=k {
        for x in 0..=k - w {
            for y in 0..=k - w - x {
                for z in 0..=k - w - x - y {
                    for s in 0..=k - w - x - y - z {
                        let t = k - w - x - y - z - s;
                        let (wf, xf, yf, zf, sf, tf) =
                            (w as u64, x as u64, y as u64, z as u64, s as u64, t as u64);
                        let value = wf * yf
                            + wf * zf
                            + wf * sf
                            + wf * tf
                            + xf * zf
                            + xf * sf
                            + xf * tf
                            + yf * zf
                            + yf * sf
                            + yf * tf
                            + zf * sf
                            + zf * tf
                            + sf * tf;
                        if value > best.best_value {
                            best.best_value = value;
                            best.argmax = vec![w, x, y, z, s, t];
                        }
                    }
                }
            }
        }
    }
    best
}
