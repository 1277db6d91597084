//! Compute the exact dispersion (volume of the largest empty axis-parallel
//! box) of calibrated point sets in the unit cube.
//!
//! Run with: cargo run --release -p latbox --example compute_dispersion

use latbox::{dispersion, find_t_for_n, Lattice};

fn main() {
    // 64 points of a dilated golden lattice in [0,1]^2.
    let ps = find_t_for_n(&Lattice::golden(), 64).unwrap();
    let result = dispersion(&ps).unwrap();

    println!("golden, N = {}:", ps.points.len());
    println!("{}", serde_json::to_string_pretty(&result).unwrap());
    println!();

    // The same pipeline accepts any admissible lattice; compare against a
    // degree-2 Vandermonde lattice at the same cardinality.
    let frolov = Lattice::frolov(2).unwrap();
    let ps2 = find_t_for_n(&frolov, 64).unwrap();
    let r2 = dispersion(&ps2).unwrap();

    println!(
        "{:>10}  {:>22}  {:>12}",
        "lattice", "dispersion", "N * disp"
    );
    for (name, n, d) in [
        ("golden", ps.points.len(), result.volume),
        ("frolov2", ps2.points.len(), r2.volume),
    ] {
        println!("{name:>10}  {d:>22.16}  {:>12.4}", n as f64 * d);
    }
}
