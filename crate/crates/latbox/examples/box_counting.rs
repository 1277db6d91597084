//! Enumerate lattice points in axis-parallel boxes and compare the count
//! with the volume/determinant prediction.
//!
//! Run with: cargo run --release -p latbox --example box_counting

use latbox::{counting_discrepancy, points_in_box, AxisBox, Lattice};

fn main() {
    let golden = Lattice::golden();

    // Every golden-lattice point in [0, 3]^2, exactly.
    let square = AxisBox::new(vec![0.0, 0.0], vec![3.0, 3.0]).unwrap();
    let pts = points_in_box(&golden, &square).unwrap();
    println!("golden points in [0,3]^2 ({} total):", pts.len());
    for p in &pts {
        println!("  ({:>18.15}, {:>18.15})", p[0], p[1]);
    }
    println!();

    // Counts track vol(B)/|det| as the box grows: the discrepancy stays
    // tiny relative to the count itself.
    println!(
        "{:>12}  {:>10}  {:>14}  {:>12}",
        "window", "count", "expected", "discrepancy"
    );
    for k in 1..=8 {
        let half = f64::from(1u32 << k);
        let cube = AxisBox::centered_cube(half, 2).unwrap();
        let report = counting_discrepancy(&golden, &cube).unwrap();
        let window = format!("[-{half}, {half}]^2");
        println!(
            "{window:>12}  {:>10}  {:>14.4}  {:>12.4}",
            report.count, report.expected, report.discrepancy
        );
    }
}
