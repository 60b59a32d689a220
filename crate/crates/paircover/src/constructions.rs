//! Explicit assignment schemes, a dispatcher, and a deterministic greedy
//! fallback.
//!
//! Every generator returns an [`Assignment`] whose referees hold
//! contiguous index blocks, so the emitted grids line up with the layouts
//! the schemes are derived from. All generators are pure and
//! deterministic: equal arguments produce identical assignments.

use crate::cover::{Assignment, Instance, Method, Referee};
use crate::designs;
use crate::error::{Error, Result};

/// Splits `1..=n` into `parts` contiguous blocks of near-equal size,
/// larger blocks first.
fn contiguous_blocks(start: u32, len: u32, parts: u32) -> Vec<Vec<u32>> {
    let base = len / parts;
    let rem = len % parts;
    let mut blocks = Vec::with_capacity(parts as usize);
    let mut next = start;
    for i in 0..parts {
        let size = base + u32::from(i < rem);
        blocks.push((next..next + size).collect());
        next += size;
    }
    blocks
}

fn union(lists: &[&[u32]]) -> Vec<u32> {
    let mut out: Vec<u32> = lists.iter().flat_map(|l| l.iter().copied()).collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn finish(instance: Instance, method: Method, proposal_lists: Vec<Vec<u32>>) -> Assignment {
    let max_load = proposal_lists.iter().map(Vec::len).max().unwrap_or(0) as u32;
    let referees = proposal_lists
        .into_iter()
        .enumerate()
        .map(|(i, ps)| Referee::new(i as u32 + 1, ps))
        .collect();
    Assignment {
        instance,
        method,
        declared_capacity: instance.k.max(max_load),
        referees,
    }
}

/// One referee holding every proposal. The only option once `k >= n`.
pub fn assign_full(n: u32) -> Result<Assignment> {
    let instance = Instance::new(n, n)?;
    Ok(finish(instance, Method::Full, vec![(1..=n).collect()]))
}

/// Six referees for even `n = 2k` at capacity `k`: one per half, plus the
/// four cross blocks built from the halves of each half. For odd `k` one
/// referee ends up with `k + 1` proposals and another with `k - 1`.
pub fn assign_half_even(n: u32) -> Result<Assignment> {
    if !n.is_multiple_of(2) || n < 4 {
        return Err(Error::UnsupportedShape(format!(
            "the six-referee half-capacity scheme needs even n >= 4, got n = {n}"
        )));
    }
    let k = n / 2;
    let instance = Instance::new(n, k)?;
    let first: Vec<u32> = (1..=k).collect();
    let second: Vec<u32> = (k + 1..=n).collect();
    let split = k.div_ceil(2);
    let (a1, a2) = first.split_at(split as usize);
    let (b1, b2) = second.split_at(split as usize);
    let lists = vec![
        first.clone(),
        second.clone(),
        union(&[a1, b1]),
        union(&[a1, b2]),
        union(&[a2, b1]),
        union(&[a2, b2]),
    ];
    Ok(finish(instance, Method::HalfEven, lists))
}

/// Six referees for odd `n = 2k + 1`: three referees hold `ceil(n/2)`
/// proposals and three hold `floor(n/2)`. The first group takes `k + 1`
/// proposals, the second takes `k`, and the cross blocks pair their halves.
pub fn assign_half_odd(n: u32) -> Result<Assignment> {
    if n % 2 != 1 || n < 5 {
        return Err(Error::UnsupportedShape(format!(
            "the six-referee mixed-capacity scheme needs odd n >= 5, got n = {n}"
        )));
    }
    let k = n / 2;
    let instance = Instance::new(n, k)?;
    let first: Vec<u32> = (1..=k + 1).collect();
    let second: Vec<u32> = (k + 2..=n).collect();
    let (a1, a2) = first.split_at((k + 1).div_ceil(2) as usize);
    let (b1, b2) = second.split_at(k.div_ceil(2) as usize);
    let lists = vec![
        first.clone(),
        second.clone(),
        union(&[a1, b1]),
        union(&[a1, b2]),
        union(&[a2, b1]),
        union(&[a2, b2]),
    ];
    Ok(finish(instance, Method::HalfOdd, lists))
}

/// Twelve referees for `n = 3k`: one referee per group of `k`, plus nine
/// cross referees, each holding one subgroup from every group. The triple
/// system guarantees no two cross referees repeat a subgroup pair, so
/// every cross-group pair is covered exactly once.
pub fn assign_thirds(n: u32) -> Result<Assignment> {
    if !n.is_multiple_of(3) || n < 6 {
        return Err(Error::UnsupportedShape(format!(
            "the twelve-referee scheme needs n divisible by 3, n >= 6, got n = {n}"
        )));
    }
    let k = n / 3;
    let instance = Instance::new(n, k)?;
    let groups: Vec<Vec<u32>> = (0..3).map(|g| (g * k + 1..=(g + 1) * k).collect()).collect();
    let subgroups: Vec<Vec<Vec<u32>>> = (0..3)
        .map(|g| contiguous_blocks(g * k + 1, k, 3))
        .collect();

    let mut lists = groups.clone();
    let mut tuples = designs::triple_system().tuples;
    // grouping by the third coordinate spreads each subgroup of the last
    // group over consecutive referees, matching the reference layout
    tuples.sort_by_key(|t| (t[2], t[0]));
    for tuple in tuples {
        let picks: Vec<&[u32]> = tuple
            .iter()
            .enumerate()
            .map(|(g, &label)| subgroups[g][(label as usize - 1) % 3].as_slice())
            .collect();
        lists.push(union(&picks));
    }
    Ok(finish(instance, Method::Thirds, lists))
}

/// Twenty referees for `n = 4k`: one referee per group of `k`, plus
/// sixteen cross referees scheduled by the quadruple system.
pub fn assign_quarters(n: u32) -> Result<Assignment> {
    if !n.is_multiple_of(4) || n < 8 {
        return Err(Error::UnsupportedShape(format!(
            "the twenty-referee scheme needs n divisible by 4, n >= 8, got n = {n}"
        )));
    }
    let k = n / 4;
    let instance = Instance::new(n, k)?;
    let groups: Vec<Vec<u32>> = (0..4).map(|g| (g * k + 1..=(g + 1) * k).collect()).collect();
    let subgroups: Vec<Vec<Vec<u32>>> = (0..4)
        .map(|g| contiguous_blocks(g * k + 1, k, 4))
        .collect();

    let mut lists = groups.clone();
    for tuple in designs::quadruple_system().tuples {
        let picks: Vec<&[u32]> = tuple
            .iter()
            .enumerate()
            .map(|(g, &label)| subgroups[g][(label as usize - 1) % 4].as_slice())
            .collect();
        lists.push(union(&picks));
    }
    Ok(finish(instance, Method::Quarters, lists))
}

/// The capacity-`k` scheme for any `k` dividing `n`: one referee per
/// group of `k`, plus four referees per group pair, each holding one
/// half-block from both groups. Uses `n(2n-k)/k²` referees in total.
///
/// For even `k` the half-blocks partition each group, and every pair is
/// covered exactly once. For odd `k` the two blocks of `(k+1)/2` overlap
/// in the middle proposal, so cross referees hold `k + 1` proposals and
/// some pairs are covered more than once.
pub fn assign_general(n: u32, k: u32) -> Result<Assignment> {
    let instance = Instance::new(n, k)?;
    if k > n || !n.is_multiple_of(k) {
        return Err(Error::UnsupportedShape(format!(
            "the group-pair scheme needs k dividing n, got n = {n}, k = {k}"
        )));
    }
    let groups: u32 = n / k;
    let method = if k.is_multiple_of(2) {
        Method::GeneralEven
    } else {
        Method::GeneralOdd
    };

    // the two blocks of each group: disjoint halves for even k,
    // overlapping blocks of (k+1)/2 sharing the middle proposal for odd k
    let blocks_of = |g: u32| -> (Vec<u32>, Vec<u32>) {
        let start = g * k + 1;
        let h = k.div_ceil(2);
        let first: Vec<u32> = (start..start + h).collect();
        let second_start = if k.is_multiple_of(2) { start + h } else { start + h - 1 };
        let second: Vec<u32> = (second_start..start + k).collect();
        (first, second)
    };

    let mut lists: Vec<Vec<u32>> = (0..groups)
        .map(|g| (g * k + 1..=(g + 1) * k).collect())
        .collect();
    for i in 0..groups {
        for j in i + 1..groups {
            let (a1, a2) = blocks_of(i);
            let (b1, b2) = blocks_of(j);
            lists.push(union(&[&a1, &b1]));
            lists.push(union(&[&a1, &b2]));
            lists.push(union(&[&a2, &b1]));
            lists.push(union(&[&a2, &b2]));
        }
    }
    Ok(finish(instance, method, lists))
}

/// Referee count of [`assign_general`] in closed form: `n(2n-k)/k²`.
pub fn general_count(n: u32, k: u32) -> u64 {
    let (n, k) = (n as u64, k as u64);
    n * (2 * n - k) / (k * k)
}

/// Picks the best applicable scheme for `(n, k)` and falls back to the
/// greedy cover when none fits. The returned assignment records which
/// method fired and the capacity the caller asked for.
pub fn assign_auto(n: u32, k: u32) -> Result<Assignment> {
    let instance = Instance::new(n, k)?;
    let k_eff = instance.effective_capacity();
    let mut assignment = if k_eff == n {
        assign_full(n)?
    } else if n.is_multiple_of(2) && n >= 4 && k_eff == n / 2 {
        assign_half_even(n)?
    } else if n % 2 == 1 && n >= 5 && (k_eff == n / 2 || k_eff == n / 2 + 1) {
        assign_half_odd(n)?
    } else if n >= 6 && n == 3 * k_eff {
        assign_thirds(n)?
    } else if n >= 8 && n == 4 * k_eff {
        assign_quarters(n)?
    } else if n.is_multiple_of(k_eff) {
        assign_general(n, k_eff)?
    } else {
        assign_greedy(n, k)?
    };
    assignment.instance.k = k;
    Ok(assignment)
}

/// Deterministic greedy cover for shapes no scheme handles. Each referee
/// is grown one proposal at a time: the seed is the proposal touching the
/// most uncovered pairs, and every later pick adds the most new pairs
/// with the members so far. Ties always go to the smallest index, so the
/// result is reproducible.
pub fn assign_greedy(n: u32, k: u32) -> Result<Assignment> {
    let instance = Instance::new(n, k)?;
    let k_eff = instance.effective_capacity() as usize;
    let n = n as usize;

    let mut covered = vec![false; (n + 1) * (n + 1)];
    let idx = |a: usize, b: usize| a.min(b) * (n + 1) + a.max(b);
    let mut remaining = n * (n - 1) / 2;
    let mut lists: Vec<Vec<u32>> = Vec::new();

    while remaining > 0 {
        let mut seed = 0;
        let mut seed_degree = 0;
        for v in 1..=n {
            let degree = (1..=n)
                .filter(|&u| u != v && !covered[idx(v, u)])
                .count();
            if degree > seed_degree {
                seed_degree = degree;
                seed = v;
            }
        }
        debug_assert!(seed > 0);

        let mut members = vec![seed];
        while members.len() < k_eff {
            let mut best = 0;
            let mut best_gain = 0;
            for v in 1..=n {
                if members.contains(&v) {
                    continue;
                }
                let gain = members.iter().filter(|&&m| !covered[idx(v, m)]).count();
                if gain > best_gain {
                    best_gain = gain;
                    best = v;
                }
            }
            if best_gain == 0 {
                break;
            }
            members.push(best);
        }

        members.sort_unstable();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if !covered[idx(a, b)] {
                    covered[idx(a, b)] = true;
                    remaining -= 1;
                }
            }
        }
        lists.push(members.iter().map(|&v| v as u32).collect());
    }

    Ok(finish(instance, Method::Greedy, lists))
}
