//! Twelve referees at capacity n/3, twenty at n/4, scheduled by
//! orthogonal tuple systems so no cross referee repeats a subgroup pair.
//!
//! ```bash
//! cargo run -p paircover --example thirds_and_quarters
//! ```

use paircover::constructions::{assign_quarters, assign_thirds};
use paircover::cover::verify;
use paircover::designs::{check_system, quadruple_system, triple_system};
use paircover::format::render_grid;

fn main() {
    let triples = triple_system();
    check_system(&triples).unwrap();
    println!("triple system, any two sharing at most one element:");
    for t in &triples.tuples {
        println!("  {t:?}");
    }

    let panel = assign_thirds(18).unwrap();
    let report = verify(&panel).unwrap();
    println!(
        "\nn = 18, k = 6: {} referees, {}/{} pairs",
        panel.referee_count(),
        report.covered_count,
        report.total_pairs
    );
    print!("{}", render_grid(&panel));

    let quads = quadruple_system();
    check_system(&quads).unwrap();
    println!("\nquadruple system has {} tuples", quads.tuples.len());

    for n in [16u32, 32] {
        let panel = assign_quarters(n).unwrap();
        let report = verify(&panel).unwrap();
        println!(
            "n = {n}, k = {}: {} referees, complete = {}",
            n / 4,
            panel.referee_count(),
            report.is_complete()
        );
    }

    // group sizes that don't divide evenly still work; subgroups are
    // near-equal and some referees carry a little more
    let panel = assign_thirds(12).unwrap();
    let report = verify(&panel).unwrap();
    println!(
        "n = 12, k = 4: {} referees, complete = {}, max load {}",
        panel.referee_count(),
        report.is_complete(),
        report.max_load
    );
}
