//! Panels where referees only review proposals inside their subject areas.
//!
//! ```bash
//! cargo run -p paircover --example specialty_panels
//! ```

use paircover::cover::verify;
use paircover::format::{render_grid, violations_csv};
use paircover::specialty::{
    assign_block_specialties, assign_two_specialties, check_specialty_compliance,
};

fn main() {
    // two areas: one dedicated referee per area, four dual-area referees;
    // every proposal is reviewed by exactly three referees in its area
    let (panel, profile) = assign_two_specialties(8).unwrap();
    println!("two areas over 8 proposals:");
    print!("{}", render_grid(&panel));
    for referee in &panel.referees {
        println!("  r{} reviews {:?}", referee.id, referee.areas.as_ref().unwrap());
    }
    assert!(verify(&panel).unwrap().is_complete());
    assert!(check_specialty_compliance(&panel, &profile).unwrap().is_empty());

    // n/k areas: 3 single-area + 12 dual-area referees at (12, 4)
    let (panel, profile) = assign_block_specialties(12, 4).unwrap();
    println!(
        "\nblock areas over 12 proposals: {} referees, areas {:?}",
        panel.referee_count(),
        profile.areas
    );
    assert!(verify(&panel).unwrap().is_complete());
    assert!(check_specialty_compliance(&panel, &profile).unwrap().is_empty());

    // break the profile on purpose and let the checker complain
    let mut broken = profile.clone();
    broken.referee_areas.get_mut(&4).unwrap().remove("S2");
    let violations = check_specialty_compliance(&panel, &broken).unwrap();
    println!("\nafter stripping r4's second area:");
    print!("{}", violations_csv(&violations));
}
