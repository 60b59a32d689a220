//! The group-pair scheme works for any k dividing n and stays within a
//! factor of two of the counting lower bound.
//!
//! ```bash
//! cargo run -p paircover --example any_capacity
//! ```

use paircover::bounds::lower_bound_general;
use paircover::constructions::{assign_general, general_count};
use paircover::cover::verify;
use paircover::format::render_grid;

fn main() {
    // the extreme case k = 2: every referee is one pair
    let panel = assign_general(6, 2).unwrap();
    println!(
        "n = 6, k = 2: {} referees (the counting bound exactly)",
        panel.referee_count()
    );
    print!("{}", render_grid(&panel));

    // odd capacity: blocks overlap in the middle, loads reach k + 1
    let panel = assign_general(6, 3).unwrap();
    let report = verify(&panel).unwrap();
    println!(
        "\nn = 6, k = 3: {} referees, max load {}",
        panel.referee_count(),
        report.max_load
    );
    print!("{}", render_grid(&panel));

    println!("\ncount vs lower bound for k | n:");
    println!("{:>4} {:>4} {:>8} {:>8} {:>6}", "n", "k", "count", "bound", "ratio");
    for (n, k) in [(12u32, 4u32), (20, 10), (30, 5), (50, 10), (60, 6)] {
        let count = general_count(n, k);
        let bound = lower_bound_general(n, k).unwrap();
        let panel = assign_general(n, k).unwrap();
        assert!(verify(&panel).unwrap().is_complete());
        assert_eq!(panel.referee_count() as u64, count);
        println!(
            "{n:>4} {k:>4} {count:>8} {bound:>8} {:>6.3}",
            count as f64 / bound as f64
        );
    }
}
