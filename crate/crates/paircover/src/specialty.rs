//! Specialty-constrained assignments: every referee only reviews
//! proposals inside its declared subject areas, while the panel still
//! covers every pair.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::constructions;
use crate::cover::Assignment;
use crate::error::{Error, Result};

/// Subject-area labels for proposals and referees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialtyProfile {
    pub areas: Vec<String>,
    /// Each proposal belongs to exactly one area.
    pub proposal_area: BTreeMap<u32, String>,
    /// Each referee may span several areas.
    pub referee_areas: BTreeMap<u32, BTreeSet<String>>,
}

/// One compliance breach: a referee holding a proposal outside its areas.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecialtyViolation {
    pub referee: u32,
    pub proposal: u32,
    pub area: String,
}

fn area_label(index: usize) -> String {
    format!("S{}", index + 1)
}

/// Two subject areas of `n/2` proposals each, covered by six referees:
/// one per area plus four dual-area referees holding a quarter from each
/// side. Every proposal is reviewed by exactly three referees in its own
/// area. Needs `n` divisible by 4.
pub fn assign_two_specialties(n: u32) -> Result<(Assignment, SpecialtyProfile)> {
    if !n.is_multiple_of(4) || n < 4 {
        return Err(Error::UnsupportedShape(format!(
            "two-specialty panels split each half into quarters, need 4 | n, got n = {n}"
        )));
    }
    let mut assignment = constructions::assign_half_even(n)?;

    let areas = vec![area_label(0), area_label(1)];
    let proposal_area: BTreeMap<u32, String> = (1..=n)
        .map(|p| {
            let area = if p <= n / 2 { &areas[0] } else { &areas[1] };
            (p, area.clone())
        })
        .collect();
    let mut referee_areas = BTreeMap::new();
    for referee in &mut assignment.referees {
        let held: BTreeSet<String> = referee
            .proposals
            .iter()
            .map(|p| proposal_area[p].clone())
            .collect();
        referee.areas = Some(held.iter().cloned().collect());
        referee_areas.insert(referee.id, held);
    }

    let profile = SpecialtyProfile {
        areas,
        proposal_area,
        referee_areas,
    };
    Ok((assignment, profile))
}

/// `n/k` subject areas of `k` proposals each: one single-area referee per
/// area plus four dual-area referees per area pair, the group-pair scheme
/// with labels attached. Odd `k` inherits the `k + 1` capacity of the
/// overlapping blocks.
pub fn assign_block_specialties(n: u32, k: u32) -> Result<(Assignment, SpecialtyProfile)> {
    let mut assignment = constructions::assign_general(n, k)?;
    let group_count = (n / k) as usize;

    let areas: Vec<String> = (0..group_count).map(area_label).collect();
    let proposal_area: BTreeMap<u32, String> = (1..=n)
        .map(|p| (p, areas[((p - 1) / k) as usize].clone()))
        .collect();
    let mut referee_areas = BTreeMap::new();
    for referee in &mut assignment.referees {
        let held: BTreeSet<String> = referee
            .proposals
            .iter()
            .map(|p| proposal_area[p].clone())
            .collect();
        referee.areas = Some(held.iter().cloned().collect());
        referee_areas.insert(referee.id, held);
    }

    let profile = SpecialtyProfile {
        areas,
        proposal_area,
        referee_areas,
    };
    Ok((assignment, profile))
}

/// Checks that every referee's proposals fall inside its declared areas.
/// Returns all violations, empty when compliant. A proposal missing from
/// the profile is an error, not a violation.
pub fn check_specialty_compliance(
    assignment: &Assignment,
    profile: &SpecialtyProfile,
) -> Result<Vec<SpecialtyViolation>> {
    let empty = BTreeSet::new();
    let mut violations = Vec::new();
    for referee in &assignment.referees {
        let allowed = profile.referee_areas.get(&referee.id).unwrap_or(&empty);
        for &proposal in &referee.proposals {
            let area = profile.proposal_area.get(&proposal).ok_or_else(|| {
                Error::InvalidProfile(format!("proposal {proposal} has no subject area"))
            })?;
            if !allowed.contains(area) {
                violations.push(SpecialtyViolation {
                    referee: referee.id,
                    proposal,
                    area: area.clone(),
                });
            }
        }
    }
    Ok(violations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::verify;

    #[test]
    fn two_specialties_review_counts() {
        let (assignment, profile) = assign_two_specialties(8).unwrap();
        assert_eq!(assignment.referee_count(), 6);
        assert!(verify(&assignment).unwrap().is_complete());
        assert!(check_specialty_compliance(&assignment, &profile)
            .unwrap()
            .is_empty());

        // every proposal is reviewed exactly three times
        for p in 1..=8u32 {
            let reviewers: Vec<u32> = assignment
                .referees
                .iter()
                .filter(|r| r.proposals.contains(&p))
                .map(|r| r.id)
                .collect();
            assert_eq!(reviewers.len(), 3, "proposal {p}");
        }
        // the first proposal sits with the first-area referee and the two
        // dual referees holding the first quarter
        let reviewers: Vec<u32> = assignment
            .referees
            .iter()
            .filter(|r| r.proposals.contains(&1))
            .map(|r| r.id)
            .collect();
        assert_eq!(reviewers, vec![1, 3, 4]);
    }

    #[test]
    fn two_specialties_multiplicity_three_across_sizes() {
        for n in [4u32, 8, 12, 16, 20] {
            let (assignment, _) = assign_two_specialties(n).unwrap();
            assert!(verify(&assignment).unwrap().is_complete(), "n = {n}");
            for p in 1..=n {
                let count = assignment
                    .referees
                    .iter()
                    .filter(|r| r.proposals.contains(&p))
                    .count();
                assert_eq!(count, 3, "n = {n}, proposal {p}");
            }
        }
        assert!(assign_two_specialties(10).is_err());
    }

    #[test]
    fn block_specialties_counts_and_compliance() {
        let (assignment, profile) = assign_block_specialties(12, 4).unwrap();
        assert_eq!(assignment.referee_count(), 15);
        assert!(verify(&assignment).unwrap().is_complete());
        // four more referees than the floor for this shape
        let floor = crate::bounds::lower_bound_strengthened(12, 4).unwrap();
        assert_eq!(floor.strengthened, 11);
        assert!(check_specialty_compliance(&assignment, &profile)
            .unwrap()
            .is_empty());

        let single: Vec<&BTreeSet<String>> = profile
            .referee_areas
            .values()
            .filter(|a| a.len() == 1)
            .collect();
        let dual: Vec<&BTreeSet<String>> = profile
            .referee_areas
            .values()
            .filter(|a| a.len() == 2)
            .collect();
        assert_eq!(single.len(), 3);
        assert_eq!(dual.len(), 12);
    }

    #[test]
    fn block_specialties_two_areas_collapse_to_half_scheme_size() {
        let (assignment, profile) = assign_block_specialties(8, 4).unwrap();
        assert_eq!(assignment.referee_count(), 6);
        assert_eq!(profile.areas.len(), 2);
        assert!(verify(&assignment).unwrap().is_complete());
    }

    #[test]
    fn compliance_catches_stripped_area() {
        let (assignment, mut profile) = assign_block_specialties(12, 4).unwrap();
        // referee 4 is dual-area; drop one of its areas
        let areas = profile.referee_areas.get_mut(&4).unwrap();
        let dropped: String = areas.iter().next_back().unwrap().clone();
        areas.remove(&dropped);
        let violations = check_specialty_compliance(&assignment, &profile).unwrap();
        assert!(!violations.is_empty());
        assert!(violations.iter().all(|v| v.referee == 4));
    }

    #[test]
    fn compliance_requires_mapped_proposals() {
        let (assignment, mut profile) = assign_block_specialties(8, 4).unwrap();
        profile.proposal_area.remove(&3);
        assert!(matches!(
            check_specialty_compliance(&assignment, &profile),
            Err(Error::InvalidProfile(_))
        ));
    }

    #[test]
    fn labels_never_change_the_pair_set() {
        let unlabeled = constructions::assign_general(12, 4).unwrap();
        let (labeled, _) = assign_block_specialties(12, 4).unwrap();
        let a = verify(&unlabeled).unwrap();
        let b = verify(&labeled).unwrap();
        assert_eq!(a.multiplicity, b.multiplicity);
    }

    #[test]
    fn profile_serializes_with_string_keys() {
        let (_, profile) = assign_two_specialties(8).unwrap();
        let json = serde_json::to_value(&profile).unwrap();
        assert_eq!(json["proposal_area"]["1"], "S1");
        assert_eq!(json["referee_areas"]["3"], serde_json::json!(["S1", "S2"]));
    }
}
