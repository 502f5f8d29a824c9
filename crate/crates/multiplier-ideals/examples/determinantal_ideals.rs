//! Multiplier ideals of generic determinantal ideals: log canonical
//! thresholds, formal intersections of symbolic powers, and jumping-number
//! candidates for the minors of a 4 x 5 matrix of variables.
//!
//! ```bash
//! cargo run --example determinantal_ideals
//! ```

use multiplier_ideals::rational::rational_int;
use multiplier_ideals::{DeterminantalShape, Interval};

fn main() -> multiplier_ideals::Result<()> {
    for r in [2usize, 3] {
        let shape = DeterminantalShape::new(4, 5, r)?;
        println!("I = ideal of {0} x {0} minors of a 4 x 5 generic matrix", r);
        println!("  lct = {}", shape.lct());

        let lct_floor = shape.lct().floor().to_integer();
        for k in 0..=2 {
            let c = rational_int(i64::try_from(&lct_floor).unwrap() + k);
            let j = shape.multiplier_ideal(&c)?;
            print!("  J(I^{}) = {}", c, j);
            if let Some(note) = j.containment_annotation() {
                print!("   ({})", note);
            }
            println!();
        }

        let interval = Interval::open_closed(rational_int(0), shape.lct() + rational_int(1))?;
        println!("  jumping-number candidates in {}:", interval);
        for candidate in shape.jumping_candidates(&interval) {
            let increments: Vec<String> =
                candidate.increments.iter().map(|i| i.to_string()).collect();
            println!(
                "    {} (exponent of I_{} increments)",
                candidate.value,
                increments.join(", I_")
            );
        }
        println!();
    }
    Ok(())
}
