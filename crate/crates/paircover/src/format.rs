//! Rendering: referee-by-proposal grids, CSV, and JSON views.
//!
//! All output is byte-deterministic for fixed inputs, so grids and tables
//! can be pinned by golden files.

use serde_json::json;

use crate::bounds::{
    BoundsReport, CapacityClassRow, CurvePoint, PanelTableCell, UpperCell, CLASS_TABLE_NS,
    PANEL_TABLE_KS, PANEL_TABLE_NS,
};
use crate::cover::{Assignment, CoverageReport};
use crate::specialty::SpecialtyViolation;

fn digits(mut v: u32) -> usize {
    let mut d = 1;
    while v >= 10 {
        v /= 10;
        d += 1;
    }
    d
}

/// Renders an assignment as a grid: one row per referee, one column per
/// proposal, the proposal id in each held cell. Trailing blanks trimmed.
pub fn render_grid(assignment: &Assignment) -> String {
    let n = assignment.instance.n;
    let label_width = 1 + digits(assignment.referee_count().max(1) as u32);
    let cell_width = 1 + digits(n);
    let mut out = String::new();
    for referee in &assignment.referees {
        let mut line = format!("{:<label_width$}", format!("r{}", referee.id));
        for p in 1..=n {
            let cell = if referee.proposals.binary_search(&p).is_ok() {
                format!("p{p}")
            } else {
                String::new()
            };
            line.push_str("  ");
            line.push_str(&format!("{cell:<cell_width$}"));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// One referee per row: `id,p1;p2;p3`.
pub fn assignment_csv(assignment: &Assignment) -> String {
    let mut out = String::from("id,proposals\n");
    for referee in &assignment.referees {
        let proposals: Vec<String> = referee.proposals.iter().map(u32::to_string).collect();
        out.push_str(&format!("{},{}\n", referee.id, proposals.join(";")));
    }
    out
}

pub fn assignment_json(assignment: &Assignment) -> String {
    let mut s = serde_json::to_string_pretty(assignment).expect("assignment serializes");
    s.push('\n');
    s
}

/// Coverage report as text: one summary block, uncovered pairs listed
/// when present.
pub fn report_text(report: &CoverageReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "pairs: {}/{} covered\n",
        report.covered_count, report.total_pairs
    ));
    out.push_str(&format!(
        "referees: {}  max load: {}\n",
        report.referee_count, report.max_load
    ));
    let hist = report.multiplicity_histogram();
    let parts: Vec<String> = hist
        .iter()
        .filter(|(&m, _)| m > 0)
        .map(|(m, c)| format!("{c} pairs x{m}"))
        .collect();
    out.push_str(&format!("multiplicity: {}\n", parts.join(", ")));
    if !report.underloaded.is_empty() {
        let ids: Vec<String> = report.underloaded.iter().map(u32::to_string).collect();
        out.push_str(&format!(
            "warning: referees with fewer than 2 proposals: {}\n",
            ids.join(", ")
        ));
    }
    if !report.over_capacity.is_empty() {
        let ids: Vec<String> = report.over_capacity.iter().map(u32::to_string).collect();
        out.push_str(&format!(
            "warning: referees over declared capacity: {}\n",
            ids.join(", ")
        ));
    }
    if report.is_complete() {
        out.push_str("complete\n");
    } else {
        let pairs: Vec<String> = report.uncovered.iter().map(ToString::to_string).collect();
        out.push_str(&format!("incomplete, uncovered: {}\n", pairs.join(" ")));
    }
    out
}

pub fn report_json(report: &CoverageReport) -> String {
    let hist: serde_json::Map<String, serde_json::Value> = report
        .multiplicity_histogram()
        .into_iter()
        .map(|(m, c)| (m.to_string(), json!(c)))
        .collect();
    let value = json!({
        "total_pairs": report.total_pairs,
        "covered_count": report.covered_count,
        "complete": report.is_complete(),
        "uncovered": report.uncovered.iter().map(|p| json!([p.0, p.1])).collect::<Vec<_>>(),
        "multiplicity_histogram": hist,
        "max_load": report.max_load,
        "referee_count": report.referee_count,
        "underloaded": report.underloaded,
        "over_capacity": report.over_capacity,
    });
    let mut s = serde_json::to_string_pretty(&value).expect("report serializes");
    s.push('\n');
    s
}

pub fn bounds_text(report: &BoundsReport) -> String {
    let mut out = format!(
        "n={} k={} general={} strengthened={} rule={}\n",
        report.n, report.k, report.general, report.strengthened, report.rule
    );
    if let Some(note) = &report.note {
        out.push_str(&format!("note: {note}\n"));
    }
    out
}

/// Aligned text table of the capacity classes.
pub fn class_table_text(rows: &[CapacityClassRow]) -> String {
    let mut table: Vec<Vec<String>> = Vec::new();
    let mut header = vec!["capacity".to_string(), "bound".to_string()];
    header.extend(CLASS_TABLE_NS.iter().map(|n| format!("n={n}")));
    header.push("limit".to_string());
    table.push(header);
    for row in rows {
        let mut cells = vec![row.capacity.to_string(), row.bound.to_string()];
        for cell in &row.cells {
            cells.push(match cell {
                Some((k, m)) => format!("k={k}, m>={m}"),
                None => "-".to_string(),
            });
        }
        cells.push(format!("m->{}", row.limit));
        table.push(cells);
    }
    align(&table)
}

pub fn class_table_csv(rows: &[CapacityClassRow]) -> String {
    let mut out = String::from("capacity,bound");
    for n in CLASS_TABLE_NS {
        out.push_str(&format!(",k(n={n}),m(n={n})"));
    }
    out.push_str(",limit\n");
    for row in rows {
        out.push_str(&format!("\"{}\",\"{}\"", row.capacity, row.bound));
        for cell in &row.cells {
            match cell {
                Some((k, m)) => out.push_str(&format!(",{k},{m}")),
                None => out.push_str(",,"),
            }
        }
        out.push_str(&format!(",{}\n", row.limit));
    }
    out
}

/// Aligned text table of panel sizes, cells as `upper(lower)`. Cells whose
/// upper bound no construction here produces are marked with `*`.
pub fn panel_table_text(cells: &[PanelTableCell]) -> String {
    let mut table: Vec<Vec<String>> = Vec::new();
    let mut header = vec!["n\\k".to_string()];
    header.extend(PANEL_TABLE_KS.iter().map(|k| k.to_string()));
    table.push(header);
    let mut any_unreproduced = false;
    for &n in &PANEL_TABLE_NS {
        let mut row = vec![n.to_string()];
        for &k in &PANEL_TABLE_KS {
            let cell = cells
                .iter()
                .find(|c| c.n == n && c.k == k)
                .expect("cell present");
            let mark = match cell.upper {
                UpperCell::Constructed { .. } => "",
                UpperCell::Unreproduced { .. } => {
                    any_unreproduced = true;
                    "*"
                }
            };
            row.push(format!("{}({}){}", cell.upper.value(), cell.lower, mark));
        }
        table.push(row);
    }
    let mut out = align(&table);
    if any_unreproduced {
        out.push_str("* upper bound not produced by any construction in this crate\n");
    }
    out
}

pub fn panel_table_csv(cells: &[PanelTableCell]) -> String {
    let mut out = String::from("n,k,upper,lower,method\n");
    for cell in cells {
        let method = match &cell.upper {
            UpperCell::Constructed { method, .. } => method.to_string(),
            UpperCell::Unreproduced { .. } => "unreproduced".to_string(),
        };
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            cell.n,
            cell.k,
            cell.upper.value(),
            cell.lower,
            method
        ));
    }
    out
}

/// Curve samples as CSV columns `k,lb,ub`.
pub fn curve_csv(points: &[CurvePoint]) -> String {
    let mut out = String::from("k,lb,ub\n");
    for p in points {
        out.push_str(&format!("{},{:.6},{:.6}\n", p.k, p.lb, p.ub));
    }
    out
}

/// Compliance violations as CSV rows `referee,proposal,area`.
pub fn violations_csv(violations: &[SpecialtyViolation]) -> String {
    let mut out = String::from("referee,proposal,area\n");
    for v in violations {
        out.push_str(&format!("{},{},{}\n", v.referee, v.proposal, v.area));
    }
    out
}

/// Left-aligns a ragged table with two-space separators.
fn align(table: &[Vec<String>]) -> String {
    let columns = table.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; columns];
    for row in table {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in table {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(&format!("{cell:<width$}", width = widths[i]));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds;
    use crate::constructions;
    use crate::cover::verify;

    #[test]
    fn grid_lines_up_per_referee() {
        let a = constructions::assign_half_even(6).unwrap();
        let grid = render_grid(&a);
        let expected = "\
r1  p1  p2  p3
r2              p4  p5  p6
r3  p1  p2      p4  p5
r4  p1  p2              p6
r5          p3  p4  p5
r6          p3          p6
";
        assert_eq!(grid, expected);
    }

    #[test]
    fn grid_handles_two_digit_proposals() {
        let a = constructions::assign_thirds(18).unwrap();
        let grid = render_grid(&a);
        assert_eq!(grid.lines().count(), 12);
        assert!(grid.starts_with("r1   p1   p2   p3   p4   p5   p6\n"));
        assert!(grid.lines().nth(3).unwrap().contains("p13  p14"));
    }

    #[test]
    fn csv_rows() {
        let a = constructions::assign_general(6, 2).unwrap();
        let csv = assignment_csv(&a);
        assert!(csv.starts_with("id,proposals\n1,1;2\n"));
        assert!(csv.ends_with("15,4;6\n"));
    }

    #[test]
    fn report_text_mentions_uncovered_pairs() {
        let mut a = constructions::assign_general(6, 2).unwrap();
        a.referees.pop();
        let report = verify(&a).unwrap();
        let text = report_text(&report);
        assert!(text.contains("incomplete"));
        assert!(text.contains("(4,6)"));
    }

    #[test]
    fn report_json_shape() {
        let a = constructions::assign_half_even(8).unwrap();
        let report = verify(&a).unwrap();
        let value: serde_json::Value = serde_json::from_str(&report_json(&report)).unwrap();
        assert_eq!(value["complete"], true);
        assert_eq!(value["total_pairs"], 28);
        assert_eq!(value["multiplicity_histogram"]["1"], 24);
        assert_eq!(value["multiplicity_histogram"]["3"], 4);
    }

    #[test]
    fn panel_table_marks_unreproduced_cells() {
        let cells = bounds::table12().unwrap();
        let text = panel_table_text(&cells);
        assert!(text.contains("10(8)*"));
        assert!(text.contains("45(28)"));
        let csv = panel_table_csv(&cells);
        assert!(csv.contains("40,15,10,8,unreproduced"));
        assert!(csv.contains("30,10,12,11,thirds"));
    }

    #[test]
    fn curve_csv_format() {
        let points = bounds::bounds_curve(50).unwrap();
        let csv = curve_csv(&points);
        assert!(csv.starts_with("k,lb,ub\n2,1225.000000,"));
        assert!(csv.trim_end().ends_with("50,1.000000,1.000000"));
    }
}
