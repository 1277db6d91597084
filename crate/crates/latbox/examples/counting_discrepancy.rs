//! Counting discrepancy study: for randomly placed boxes of fixed volume,
//! |count - vol/det| grows at most logarithmically in the volume.
//!
//! Run with: cargo run --release -p latbox --example counting_discrepancy

use latbox::studies::discrepancy_csv;
use latbox::{discrepancy_study, Lattice};

fn main() {
    let golden = Lattice::golden();
    let volumes = [10.0, 100.0, 1000.0];

    // 30 random axis-parallel boxes per volume, all with corners in
    // [-32, 32]^2; the seed makes the run reproducible.
    let rows = discrepancy_study(&golden, &volumes, 30, 42).unwrap();
    print!("{}", discrepancy_csv(&rows));

    println!();
    println!("max_log_bound_ratio = max |count - vol/det| / ln(2 + vol)^(d-1).");
    println!("It stays of the same order across three decades of volume,");
    println!("matching the logarithmic counting bound for admissible lattices.");
}
