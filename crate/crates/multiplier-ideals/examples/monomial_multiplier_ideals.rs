//! Multiplier ideals of a monomial ideal at several exponents.
//!
//! ```bash
//! cargo run --example monomial_multiplier_ideals
//! ```

use multiplier_ideals::rational::{rational, rational_int};
use multiplier_ideals::{in_multiplier_ideal, multiplier_ideal, parse_monomial, MonomialIdeal};

fn main() -> multiplier_ideals::Result<()> {
    let ideal = MonomialIdeal::parse(
        &["x", "y", "z", "w"],
        &["x*y", "x*z", "y*z", "y*w", "z*w^2"],
    )?;
    println!("I = ({})", ideal);

    for c in [
        rational_int(0),
        rational_int(1),
        rational_int(2),
        rational(7, 3),
        rational_int(3),
    ] {
        let j = multiplier_ideal(&ideal, &c)?;
        println!("J(I^{}) = ({})", c, j);
    }

    // Membership can also be tested directly, without computing generators:
    // x^v lies in J(I^c) iff v + (1,...,1) is interior to c * Newt(I).
    let v = parse_monomial("z^2*w", ideal.variables())?;
    for c in [rational(29, 10), rational_int(3)] {
        println!(
            "z^2*w in J(I^{}): {}",
            c,
            in_multiplier_ideal(&ideal, &v, &c)?
        );
    }
    Ok(())
}
