//! Skoda periodicity: for c at least the number of variables,
//! J(I^c) = I * J(I^(c-1)), so large exponents reduce to small ones.
//!
//! ```bash
//! cargo run --example skoda_periodicity
//! ```

use multiplier_ideals::rational::rational_int;
use multiplier_ideals::{multiplier_ideal, skoda_extend, MonomialIdeal};

fn main() -> multiplier_ideals::Result<()> {
    let ideal = MonomialIdeal::parse(&["x", "y"], &["x^2", "y^3"])?;
    println!("I = ({})", ideal);

    for k in 2..=6 {
        let c = rational_int(k);
        let direct = multiplier_ideal(&ideal, &c)?;
        let stepped = ideal.product(&multiplier_ideal(&ideal, &rational_int(k - 1))?)?;
        println!(
            "J(I^{}) = ({})   [I * J(I^{}) = ({})]",
            k,
            direct,
            k - 1,
            stepped
        );
        assert_eq!(direct, stepped);
    }

    // skoda_extend walks a large exponent down into a base window and must
    // agree with the direct computation.
    let extended = skoda_extend(&ideal, &rational_int(6), &rational_int(2))?;
    assert_eq!(extended, multiplier_ideal(&ideal, &rational_int(6))?);
    println!("skoda_extend(I, 6, base 2) = ({})", extended);
    Ok(())
}
