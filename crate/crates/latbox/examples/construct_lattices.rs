//! Build the stock lattices and inspect their certificates.
//!
//! Run with: cargo run --release -p latbox --example construct_lattices

use latbox::Lattice;

fn describe(lat: &Lattice, window: f64) {
    println!("{:?}", lat.provenance());
    println!("  dim            {}", lat.dim());
    println!("  |det|          {:.12}", lat.det_abs());
    println!("  certified  Nm  {:.12}", lat.nm_certified());
    match lat.nm_empirical(window) {
        Ok(nm) => println!("  empirical  Nm  {nm:.12}  (window [-{window}, {window}]^d)"),
        Err(e) => println!("  empirical  Nm  unavailable: {e}"),
    }
    for i in 0..lat.dim() {
        let row: Vec<String> = (0..lat.dim())
            .map(|j| format!("{:>10.6}", lat.generator_entry(i, j)))
            .collect();
        println!("    [{}]", row.join(", "));
    }
    println!();
}

fn main() {
    // The golden-ratio lattice: nonzero points satisfy |x * y| >= 1
    // because the coordinate product is the norm form a^2 + ab - b^2.
    describe(&Lattice::golden(), 10.0);

    // Vandermonde lattices on the roots of (x-1)(x-3)...(x-(2d-1)) - 1.
    // Irreducibility over the rationals certifies |prod x_j| >= 1.
    for d in 2..=4 {
        describe(&Lattice::frolov(d).unwrap(), 6.0);
    }

    // The integer lattice is the negative control: points with zero
    // coordinates make the product infimum zero in dimension >= 2, and
    // nothing is certified.
    describe(&Lattice::integer(2).unwrap(), 6.0);

    // Duality flips the determinant; certificates do not transfer.
    let dual = Lattice::golden().dual().unwrap();
    println!(
        "golden dual: |det| = {:.12} (reciprocal of {:.12})",
        dual.det_abs(),
        Lattice::golden().det_abs()
    );
}
