//! Emit the lower/upper bound curves for one n as CSV, and locate the
//! capacity where the gap between them is widest.
//!
//! ```bash
//! cargo run -p paircover --example bound_curves > curves.csv
//! ```

use paircover::bounds::bounds_curve;
use paircover::format::curve_csv;

fn main() {
    let n = 50;
    let points = bounds_curve(n).unwrap();
    print!("{}", curve_csv(&points));

    let widest = points
        .iter()
        .max_by(|a, b| (a.ub / a.lb).partial_cmp(&(b.ub / b.lb)).unwrap())
        .unwrap();
    eprintln!(
        "ratio ub/lb peaks at k = {} (sqrt(2n) = {:.2}), ratio {:.3}",
        widest.k,
        (2.0 * n as f64).sqrt(),
        widest.ub / widest.lb
    );
}
