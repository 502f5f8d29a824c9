//! Thresholds of monomials: the least exponent c at which a given monomial
//! leaves J(I^c), together with the facets of the Newton polyhedron that
//! impose the exit.
//!
//! ```bash
//! cargo run --example monomial_thresholds
//! ```

use multiplier_ideals::{parse_monomial, threshold_of_monomial, MonomialIdeal, Threshold};

fn main() -> multiplier_ideals::Result<()> {
    let ideal = MonomialIdeal::parse(
        &["x", "y", "z", "w"],
        &["x*y", "x*z", "y*z", "y*w", "z*w^2"],
    )?;
    println!("I = ({})", ideal);

    for text in ["1", "x", "z^2*w", "x*y*z*w"] {
        let v = parse_monomial(text, ideal.variables())?;
        match threshold_of_monomial(&ideal, &v)? {
            Threshold::Finite(result) => {
                println!("threshold({}) = {}", text, result.value);
                for facet in &result.witnesses {
                    println!("    imposed by  {}", facet.render(ideal.variables()));
                }
            }
            Threshold::Infinite => println!("threshold({}) is infinite", text),
        }
    }

    // The threshold of 1 = x^0 is the log canonical threshold; against the
    // unit ideal every threshold is infinite.
    let unit = MonomialIdeal::parse(&["x", "y"], &["1"])?;
    let v = parse_monomial("x", unit.variables())?;
    assert_eq!(threshold_of_monomial(&unit, &v)?, Threshold::Infinite);
    Ok(())
}
