//! Build a small panel by hand and inspect its coverage report.
//!
//! ```bash
//! cargo run -p paircover --example pair_coverage_basics
//! ```

use paircover::cover::{verify, Assignment, Instance, Method, Referee};

fn main() {
    // Three referees, six proposals, capacity three: too few referees to
    // pair everything, no matter how the proposals are spread.
    let panel = Assignment {
        instance: Instance::new(6, 3).unwrap(),
        method: Method::External,
        declared_capacity: 3,
        referees: vec![
            Referee::new(1, vec![1, 2, 3]),
            Referee::new(2, vec![3, 4, 5]),
            Referee::new(3, vec![1, 5, 6]),
        ],
    };

    let report = verify(&panel).unwrap();
    println!(
        "{} referees cover {}/{} pairs",
        report.referee_count, report.covered_count, report.total_pairs
    );
    for pair in &report.uncovered {
        println!("  uncovered: {pair}");
    }

    // The counting bound says how many capacity-3 referees six proposals
    // really need.
    let floor = paircover::bounds::lower_bound_strengthened(6, 3).unwrap();
    println!(
        "lower bound for (n=6, k=3): {} (rule {})",
        floor.strengthened, floor.rule
    );

    // A built panel always verifies complete.
    let complete = paircover::constructions::assign_auto(6, 3).unwrap();
    let report = verify(&complete).unwrap();
    println!(
        "constructed via {}: {} referees, complete = {}",
        complete.method,
        complete.referee_count(),
        report.is_complete()
    );
}
