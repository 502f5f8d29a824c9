//! The polyhedral engine on its own: facet systems of Newton polyhedra,
//! scaled interior systems for rational exponents, and their minimal
//! lattice generators.
//!
//! ```bash
//! cargo run --example newton_polyhedron
//! ```

use multiplier_ideals::rational::{rational, rational_int};
use multiplier_ideals::{MonomialIdeal, NewtonPolyhedron};

fn main() -> multiplier_ideals::Result<()> {
    let ideal = MonomialIdeal::parse(&["x", "y"], &["x^2", "y^3"])?;
    let poly = NewtonPolyhedron::from_generators(ideal.generators())?;

    println!("Newt(x^2, y^3) is cut out by:");
    for facet in poly.facets() {
        println!("  {}", facet.render(ideal.variables()));
    }

    // For c = p/q the lattice points interior to c * Newt(I) are the
    // solutions of q A v >= b', where b' adds one to the nonzero entries of
    // p b.
    for c in [rational_int(1), rational(7, 3)] {
        let system = poly.scale(&c)?;
        println!("interior system at c = {}:", c);
        for (row, offset) in system.rows().iter().zip(system.offsets()) {
            let entries: Vec<String> = row.iter().map(|a| a.to_string()).collect();
            println!("  ({}) . v >= {}", entries.join(", "), offset);
        }
        let minimal = system.minimal_generators();
        let rendered: Vec<String> = minimal.iter().map(|v| ideal.monomial_string(v)).collect();
        println!("  minimal solutions: {}", rendered.join(", "));
    }
    Ok(())
}
