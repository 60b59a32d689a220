//! Orthogonal tuple systems: g² tuples drawn from g groups, any two
//! sharing at most one element. They schedule the cross referees of the
//! third- and quarter-capacity constructions so that no two referees
//! repeat a subgroup pair.

use serde::Serialize;

/// A system of `group_size²` tuples. Coordinate `i` of every tuple ranges
/// over group `i`'s ground set, the contiguous block
/// `i*group_size + 1 ..= (i+1)*group_size`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TupleSystem {
    pub arity: usize,
    pub group_size: usize,
    pub tuples: Vec<Vec<u32>>,
}

/// The first invariant breach found by [`check_system`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SystemViolation {
    WrongTupleCount { expected: usize, found: usize },
    WrongArity { tuple: Vec<u32> },
    OutOfGroup { tuple: Vec<u32>, coordinate: usize },
    SharedPair { first: Vec<u32>, second: Vec<u32> },
    ProjectionNotBijective { coordinates: (usize, usize) },
}

impl std::fmt::Display for SystemViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SystemViolation::WrongTupleCount { expected, found } => {
                write!(f, "expected {expected} tuples, found {found}")
            }
            SystemViolation::WrongArity { tuple } => write!(f, "tuple {tuple:?} has wrong arity"),
            SystemViolation::OutOfGroup { tuple, coordinate } => {
                write!(f, "tuple {tuple:?} leaves its group at coordinate {coordinate}")
            }
            SystemViolation::SharedPair { first, second } => {
                write!(f, "tuples {first:?} and {second:?} share more than one element")
            }
            SystemViolation::ProjectionNotBijective { coordinates } => write!(
                f,
                "projection onto coordinates {coordinates:?} misses or repeats a combination"
            ),
        }
    }
}

/// Nine triples over {1..3} x {4..6} x {7..9}, pairwise sharing at most
/// one element.
pub fn triple_system() -> TupleSystem {
    let tuples = [
        [1, 4, 7],
        [1, 5, 8],
        [1, 6, 9],
        [2, 4, 9],
        [2, 5, 7],
        [2, 6, 8],
        [3, 4, 8],
        [3, 5, 9],
        [3, 6, 7],
    ];
    TupleSystem {
        arity: 3,
        group_size: 3,
        tuples: tuples.iter().map(|t| t.to_vec()).collect(),
    }
}

/// Sixteen quadruples over {1..4} x {5..8} x {9..12} x {13..16}, pairwise
/// sharing at most one element.
pub fn quadruple_system() -> TupleSystem {
    let tuples = [
        [1, 5, 9, 13],
        [1, 6, 11, 16],
        [1, 7, 12, 14],
        [1, 8, 10, 15],
        [2, 6, 10, 14],
        [2, 5, 12, 15],
        [2, 8, 11, 13],
        [2, 7, 9, 16],
        [3, 7, 11, 15],
        [3, 5, 10, 16],
        [3, 6, 12, 13],
        [3, 8, 9, 14],
        [4, 8, 12, 16],
        [4, 5, 11, 14],
        [4, 7, 10, 13],
        [4, 6, 9, 15],
    ];
    TupleSystem {
        arity: 4,
        group_size: 4,
        tuples: tuples.iter().map(|t| t.to_vec()).collect(),
    }
}

/// Exhaustively checks every invariant of a tuple system: tuple count,
/// coordinate ranges, pairwise intersections of at most one element, and
/// that each coordinate-pair projection enumerates all `group_size²`
/// combinations exactly once.
pub fn check_system(system: &TupleSystem) -> Result<(), SystemViolation> {
    let g = system.group_size;
    if system.tuples.len() != g * g {
        return Err(SystemViolation::WrongTupleCount {
            expected: g * g,
            found: system.tuples.len(),
        });
    }
    for tuple in &system.tuples {
        if tuple.len() != system.arity {
            return Err(SystemViolation::WrongArity { tuple: tuple.clone() });
        }
        for (i, &v) in tuple.iter().enumerate() {
            let lo = (i * g + 1) as u32;
            let hi = ((i + 1) * g) as u32;
            if v < lo || v > hi {
                return Err(SystemViolation::OutOfGroup {
                    tuple: tuple.clone(),
                    coordinate: i,
                });
            }
        }
    }
    for (a, first) in system.tuples.iter().enumerate() {
        for second in &system.tuples[a + 1..] {
            let shared = first.iter().filter(|v| second.contains(v)).count();
            if shared > 1 {
                return Err(SystemViolation::SharedPair {
                    first: first.clone(),
                    second: second.clone(),
                });
            }
        }
    }
    for i in 0..system.arity {
        for j in 0..system.arity {
            if i == j {
                continue;
            }
            let mut seen = vec![false; g * g];
            for tuple in &system.tuples {
                let a = (tuple[i] as usize - 1) % g;
                let b = (tuple[j] as usize - 1) % g;
                let slot = a * g + b;
                if seen[slot] {
                    return Err(SystemViolation::ProjectionNotBijective { coordinates: (i, j) });
                }
                seen[slot] = true;
            }
            if seen.iter().any(|s| !s) {
                return Err(SystemViolation::ProjectionNotBijective { coordinates: (i, j) });
            }
        }
    }
    Ok(())
}
