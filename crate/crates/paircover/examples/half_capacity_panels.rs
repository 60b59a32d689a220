//! Six referees always suffice when each can review half the proposals.
//!
//! ```bash
//! cargo run -p paircover --example half_capacity_panels
//! ```

use paircover::constructions::{assign_half_even, assign_half_odd};
use paircover::cover::verify;
use paircover::format::render_grid;

fn main() {
    for n in 5..=8u32 {
        let panel = if n % 2 == 0 {
            assign_half_even(n).unwrap()
        } else {
            assign_half_odd(n).unwrap()
        };
        let report = verify(&panel).unwrap();
        println!(
            "n = {n}: {} referees, {}/{} pairs",
            panel.referee_count(),
            report.covered_count,
            report.total_pairs
        );
        print!("{}", render_grid(&panel));
        println!();
    }

    // the scheme scales: still six referees at forty proposals
    let panel = assign_half_even(40).unwrap();
    let report = verify(&panel).unwrap();
    assert!(report.is_complete());
    println!(
        "n = 40: {} referees cover all {} pairs, max load {}",
        panel.referee_count(),
        report.total_pairs,
        report.max_load
    );
}
