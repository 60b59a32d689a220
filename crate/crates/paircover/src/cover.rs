//! Domain types, pair enumeration, and the assignment verifier.
//!
//! An [`Assignment`] hands each referee an ordered set of proposal indices.
//! A referee covers the pair `(i, j)` when it holds both proposals; the
//! assignment is complete when all `n(n-1)/2` pairs are covered. The
//! [`verify`] function produces a full [`CoverageReport`] over any
//! assignment, including ones loaded from external files.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An unordered pair of proposal indices, stored as `(i, j)` with `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Pair(pub u32, pub u32);

impl Pair {
    /// Normalizes the two endpoints into ascending order.
    ///
    /// Panics if `a == b`; a proposal does not pair with itself.
    pub fn new(a: u32, b: u32) -> Self {
        assert_ne!(a, b, "a pair needs two distinct proposals");
        if a < b {
            Pair(a, b)
        } else {
            Pair(b, a)
        }
    }
}

impl std::fmt::Display for Pair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// Problem parameters: `n` proposals, per-referee capacity `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    /// Number of proposals, at least 2.
    pub n: u32,
    /// Referee capacity, at least 2. A referee can never review more
    /// proposals than exist, so every computation clamps to `min(k, n)`.
    pub k: u32,
}

impl Instance {
    pub fn new(n: u32, k: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidInstance(format!("n = {n}, need n >= 2")));
        }
        if k < 2 {
            return Err(Error::InvalidInstance(format!("k = {k}, need k >= 2")));
        }
        Ok(Instance { n, k })
    }

    /// Capacity actually usable by one referee: `min(k, n)`.
    pub fn effective_capacity(&self) -> u32 {
        self.k.min(self.n)
    }

    /// Total number of pairs to cover, `n(n-1)/2`.
    pub fn total_pairs(&self) -> u64 {
        let n = self.n as u64;
        n * (n - 1) / 2
    }
}

/// One referee: a 1-based id, the proposals it reviews (ascending), and
/// optional specialty area labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Referee {
    pub id: u32,
    pub proposals: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub areas: Option<Vec<String>>,
}

impl Referee {
    pub fn new(id: u32, mut proposals: Vec<u32>) -> Self {
        proposals.sort_unstable();
        Referee {
            id,
            proposals,
            areas: None,
        }
    }

    pub fn with_areas(id: u32, proposals: Vec<u32>, areas: Vec<String>) -> Self {
        let mut r = Referee::new(id, proposals);
        r.areas = Some(areas);
        r
    }
}

/// Number of pairs one referee covers on its own: `C(|proposals|, 2)`.
pub fn pairs_of(referee: &Referee) -> u64 {
    let s = referee.proposals.len() as u64;
    s * s.saturating_sub(1) / 2
}

/// Which construction produced an assignment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Full,
    HalfEven,
    HalfOdd,
    Thirds,
    Quarters,
    GeneralEven,
    GeneralOdd,
    Greedy,
    /// Loaded from a file or built by hand rather than generated here.
    External,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Method::Full => "full",
            Method::HalfEven => "half_even",
            Method::HalfOdd => "half_odd",
            Method::Thirds => "thirds",
            Method::Quarters => "quarters",
            Method::GeneralEven => "general_even",
            Method::GeneralOdd => "general_odd",
            Method::Greedy => "greedy",
            Method::External => "external",
        };
        f.write_str(s)
    }
}

/// A full panel assignment: the instance, the referees, the construction
/// that produced it, and the largest load the construction may hand to a
/// single referee (`k + 1` for the odd-capacity schemes).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assignment {
    #[serde(flatten)]
    pub instance: Instance,
    pub method: Method,
    pub declared_capacity: u32,
    pub referees: Vec<Referee>,
}

impl Assignment {
    pub fn referee_count(&self) -> usize {
        self.referees.len()
    }
}

/// Outcome of verifying an assignment: pair accounting, the multiplicity
/// of every pair, and a capacity audit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageReport {
    /// `n(n-1)/2`.
    pub total_pairs: u64,
    /// Pairs covered by at least one referee.
    pub covered_count: u64,
    /// Pairs no referee covers, in lexicographic order.
    pub uncovered: Vec<Pair>,
    /// How many referees cover each pair (zero entries included).
    pub multiplicity: BTreeMap<Pair, u32>,
    /// Largest proposal list held by any referee.
    pub max_load: usize,
    pub referee_count: usize,
    /// Referees holding fewer than two proposals; they contribute no pairs.
    pub underloaded: Vec<u32>,
    /// Referees whose load exceeds the assignment's declared capacity.
    pub over_capacity: Vec<u32>,
}

impl CoverageReport {
    pub fn is_complete(&self) -> bool {
        self.uncovered.is_empty()
    }

    /// Histogram of multiplicities: how many pairs are covered exactly
    /// `m` times, for each observed `m`.
    pub fn multiplicity_histogram(&self) -> BTreeMap<u32, u64> {
        let mut hist = BTreeMap::new();
        for &m in self.multiplicity.values() {
            *hist.entry(m).or_insert(0) += 1;
        }
        hist
    }
}

/// All pairs of `1..=n` in lexicographic order.
pub fn all_pairs(n: u32) -> Result<Vec<Pair>> {
    if n < 2 {
        return Err(Error::InvalidInstance(format!(
            "n = {n}, need n >= 2 to form pairs"
        )));
    }
    let mut pairs = Vec::with_capacity((n as usize) * (n as usize - 1) / 2);
    for i in 1..=n {
        for j in (i + 1)..=n {
            pairs.push(Pair(i, j));
        }
    }
    Ok(pairs)
}

/// Checks which pairs an assignment covers and how often.
///
/// Order-insensitive: permuting referees or the proposal lists inside
/// them yields an identical report. Out-of-range or duplicate proposal
/// indices are errors, not silent skips.
pub fn verify(assignment: &Assignment) -> Result<CoverageReport> {
    let n = assignment.instance.n;
    let mut multiplicity: BTreeMap<Pair, u32> = all_pairs(n)?.into_iter().map(|p| (p, 0)).collect();

    let mut max_load = 0usize;
    let mut underloaded = Vec::new();
    let mut over_capacity = Vec::new();

    for referee in &assignment.referees {
        let mut sorted = referee.proposals.clone();
        sorted.sort_unstable();
        for window in sorted.windows(2) {
            if window[0] == window[1] {
                return Err(Error::InvalidAssignment(format!(
                    "referee {} lists proposal {} twice",
                    referee.id, window[0]
                )));
            }
        }
        for &p in &sorted {
            if p < 1 || p > n {
                return Err(Error::InvalidAssignment(format!(
                    "referee {} holds proposal {p}, outside 1..={n}",
                    referee.id
                )));
            }
        }

        max_load = max_load.max(sorted.len());
        if sorted.len() < 2 {
            underloaded.push(referee.id);
        }
        if sorted.len() as u32 > assignment.declared_capacity {
            over_capacity.push(referee.id);
        }

        for (idx, &a) in sorted.iter().enumerate() {
            for &b in &sorted[idx + 1..] {
                *multiplicity.get_mut(&Pair(a, b)).expect("pair in range") += 1;
            }
        }
    }

    let uncovered: Vec<Pair> = multiplicity
        .iter()
        .filter(|(_, &m)| m == 0)
        .map(|(&p, _)| p)
        .collect();
    let total_pairs = assignment.instance.total_pairs();
    let covered_count = total_pairs - uncovered.len() as u64;

    Ok(CoverageReport {
        total_pairs,
        covered_count,
        uncovered,
        multiplicity,
        max_load,
        referee_count: assignment.referees.len(),
        underloaded,
        over_capacity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assignment(n: u32, k: u32, referees: Vec<Vec<u32>>) -> Assignment {
        Assignment {
            instance: Instance::new(n, k).unwrap(),
            method: Method::External,
            declared_capacity: k,
            referees: referees
                .into_iter()
                .enumerate()
                .map(|(i, ps)| Referee::new(i as u32 + 1, ps))
                .collect(),
        }
    }

    #[test]
    fn all_pairs_counts() {
        assert_eq!(all_pairs(2).unwrap(), vec![Pair(1, 2)]);
        assert_eq!(all_pairs(6).unwrap().len(), 15);
        assert_eq!(all_pairs(18).unwrap().len(), 153);
        for n in 2..=30u32 {
            assert_eq!(
                all_pairs(n).unwrap().len() as u64,
                (n as u64) * (n as u64 - 1) / 2
            );
        }
        assert!(all_pairs(1).is_err());
    }

    #[test]
    fn all_pairs_lexicographic_no_duplicates() {
        let pairs = all_pairs(7).unwrap();
        for w in pairs.windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn pairs_of_small_referees() {
        assert_eq!(pairs_of(&Referee::new(1, vec![1, 2])), 1);
        assert_eq!(pairs_of(&Referee::new(1, (1..=6).collect())), 15);
        for k in 2..=12u32 {
            let r = Referee::new(1, (1..=k).collect());
            assert_eq!(pairs_of(&r), (k as u64) * (k as u64 - 1) / 2);
        }
        assert_eq!(pairs_of(&Referee::new(1, vec![3])), 0);
        assert_eq!(pairs_of(&Referee::new(1, vec![])), 0);
    }

    /// The 15 capacity-2 referees that pair up 6 proposals exhaustively.
    fn six_by_two() -> Assignment {
        let lists = vec![
            vec![1, 2],
            vec![3, 4],
            vec![5, 6],
            vec![1, 3],
            vec![1, 4],
            vec![2, 3],
            vec![2, 4],
            vec![1, 5],
            vec![1, 6],
            vec![2, 5],
            vec![2, 6],
            vec![3, 5],
            vec![3, 6],
            vec![4, 5],
            vec![4, 6],
        ];
        assignment(6, 2, lists)
    }

    #[test]
    fn verify_complete_cover() {
        let report = verify(&six_by_two()).unwrap();
        assert!(report.is_complete());
        assert_eq!(report.covered_count, 15);
        assert_eq!(report.total_pairs, 15);
        assert!(report.multiplicity.values().all(|&m| m == 1));
        assert_eq!(report.max_load, 2);
        assert_eq!(report.referee_count, 15);
        assert!(report.underloaded.is_empty());
        assert!(report.over_capacity.is_empty());
    }

    #[test]
    fn verify_reports_missing_pair_after_removal() {
        let mut a = six_by_two();
        // the removed referee is the only one holding {4, 6}
        a.referees.retain(|r| r.proposals != vec![4, 6]);
        let report = verify(&a).unwrap();
        assert!(!report.is_complete());
        assert_eq!(report.uncovered, vec![Pair(4, 6)]);
        assert_eq!(report.covered_count, 14);
    }

    #[test]
    fn verify_is_order_insensitive() {
        let base = six_by_two();
        let mut shuffled = base.clone();
        shuffled.referees.reverse();
        for r in &mut shuffled.referees {
            r.proposals.reverse();
        }
        let a = verify(&base).unwrap();
        let b = verify(&shuffled).unwrap();
        assert_eq!(a.multiplicity, b.multiplicity);
        assert_eq!(a.uncovered, b.uncovered);
        assert_eq!(a.covered_count, b.covered_count);
        assert_eq!(a.max_load, b.max_load);
    }

    #[test]
    fn verify_rejects_out_of_range_index() {
        let a = assignment(4, 2, vec![vec![1, 5]]);
        assert!(matches!(verify(&a), Err(Error::InvalidAssignment(_))));
        let a = assignment(4, 2, vec![vec![0, 1]]);
        assert!(matches!(verify(&a), Err(Error::InvalidAssignment(_))));
    }

    #[test]
    fn verify_rejects_duplicate_index() {
        let mut a = assignment(4, 2, vec![vec![1, 2]]);
        a.referees[0].proposals = vec![2, 2];
        assert!(matches!(verify(&a), Err(Error::InvalidAssignment(_))));
    }

    #[test]
    fn verify_flags_underloaded_and_over_capacity() {
        let mut a = assignment(5, 2, vec![vec![1], vec![1, 2, 3]]);
        a.declared_capacity = 2;
        let report = verify(&a).unwrap();
        assert_eq!(report.underloaded, vec![1]);
        assert_eq!(report.over_capacity, vec![2]);
    }

    #[test]
    fn covered_count_bounded_by_pair_sum() {
        let a = assignment(5, 3, vec![vec![1, 2, 3], vec![2, 3, 4], vec![3, 4, 5]]);
        let report = verify(&a).unwrap();
        let slot_sum: u64 = a.referees.iter().map(pairs_of).sum();
        assert!(report.covered_count <= slot_sum);
        // overlaps exist, so the inequality is strict here
        assert!(report.covered_count < slot_sum);
    }

    #[test]
    fn instance_validation() {
        assert!(Instance::new(1, 2).is_err());
        assert!(Instance::new(2, 1).is_err());
        let i = Instance::new(3, 10).unwrap();
        assert_eq!(i.effective_capacity(), 3);
    }

    #[test]
    fn assignment_json_round_trip() {
        let a = six_by_two();
        let json = serde_json::to_string(&a).unwrap();
        assert!(json.starts_with(r#"{"n":6,"k":2,"#));
        let back: Assignment = serde_json::from_str(&json).unwrap();
        assert_eq!(a, back);
    }
}
