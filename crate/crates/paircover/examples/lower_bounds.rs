//! Lower bounds and the reference tables.
//!
//! ```bash
//! cargo run -p paircover --example lower_bounds
//! ```

use paircover::bounds::{lower_bound_strengthened, table1, table12};
use paircover::format::{bounds_text, class_table_text, panel_table_text};

fn main() {
    for (n, k) in [(16u32, 8u32), (30, 10), (40, 10), (20, 15), (50, 10)] {
        print!("{}", bounds_text(&lower_bound_strengthened(n, k).unwrap()));
    }

    println!("\ncapacity classes:");
    print!("{}", class_table_text(&table1()));

    println!("\npanel sizes, upper(lower):");
    print!("{}", panel_table_text(&table12().unwrap()));
}
