//! Round-trip an assignment through its JSON document and verify an
//! externally edited panel.
//!
//! ```bash
//! cargo run -p paircover --example verify_document
//! ```

use paircover::cover::{verify, Assignment};
use paircover::format::{assignment_json, report_text};

fn main() {
    let panel = paircover::constructions::assign_auto(8, 4).unwrap();
    let document = assignment_json(&panel);
    println!("document:\n{document}");

    let mut reloaded: Assignment = serde_json::from_str(&document).unwrap();
    assert_eq!(reloaded, panel);

    // drop one referee, as an editing mistake would
    reloaded.referees.pop();
    let report = verify(&reloaded).unwrap();
    print!("{}", report_text(&report));
}
