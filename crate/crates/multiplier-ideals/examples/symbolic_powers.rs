//! Symbolic powers of determinantal ideals expand as sums over partitions,
//! and the minors themselves expand as signed monomial lists.
//!
//! ```bash
//! cargo run --example symbolic_powers
//! ```

use multiplier_ideals::DeterminantalShape;

fn main() -> multiplier_ideals::Result<()> {
    let shape = DeterminantalShape::new(4, 5, 3)?;

    // I_i^((a)) = sum over partitions k_1 + ... + k_s = a of
    // prod_j I_(i-1+k_j); terms with minors larger than min(m, n) vanish.
    for (i, a) in [(1, 2), (2, 3), (3, 2)] {
        let expansion = shape.symbolic_power_expansion(i, a)?;
        println!("I_{}^(({})) = {}", i, a, expansion);
    }

    // Explicit generators: one signed term list per (row set, column set).
    let small = DeterminantalShape::new(3, 3, 2)?;
    let names = small.variable_names();
    let minors = small.minor_generators();
    println!(
        "\nthe {} minors of size 2 of a 3 x 3 generic matrix:",
        minors.len()
    );
    for minor in &minors {
        let rows: Vec<String> = minor.row_indices.iter().map(|i| i.to_string()).collect();
        let cols: Vec<String> = minor.col_indices.iter().map(|j| j.to_string()).collect();
        println!(
            "  rows {{{}}} cols {{{}}}: {}",
            rows.join(","),
            cols.join(","),
            minor.render(&names)
        );
    }
    Ok(())
}
