//! Jumping numbers of a monomial ideal over an interval, with the
//! multiplier ideal at each jump.
//!
//! ```bash
//! cargo run --example jumping_numbers
//! ```

use multiplier_ideals::rational::rational_int;
use multiplier_ideals::{jumping_numbers, lct, Interval, MonomialIdeal};

fn main() -> multiplier_ideals::Result<()> {
    let ideal = MonomialIdeal::parse(
        &["x", "y", "z", "w"],
        &["x*y", "x*z", "y*z", "y*w", "z*w^2"],
    )?;
    println!("I = ({})", ideal);
    println!("lct(I) = {}", lct(&ideal)?);

    let interval = Interval::open_closed(rational_int(0), rational_int(4))?;
    let report = jumping_numbers(&ideal, &interval)?;
    println!("jumping numbers in {}:", interval);
    for (number, j) in report.numbers.iter().zip(&report.ideals) {
        println!("  {:>4}  J = ({})", number.to_string(), j);
    }

    // The first jumping number is always the log canonical threshold.
    assert_eq!(report.numbers[0], lct(&ideal)?);
    Ok(())
}
