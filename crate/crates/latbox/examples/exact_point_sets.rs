//! Calibrate a dilation so the unit cube holds an exact number of points,
//! and show the text format used to exchange point sets.
//!
//! Run with: cargo run --release -p latbox --example exact_point_sets

use latbox::{find_t_for_n, Lattice};

fn main() {
    let golden = Lattice::golden();

    // Ask for exactly 32 points of a dilated golden lattice in [0,1]^2.
    let ps = find_t_for_n(&golden, 32).unwrap();
    assert_eq!(ps.points.len(), 32);

    println!("dilation vector t = {:?}", ps.provenance.t);
    println!(
        "n(t) = prod t_j = {:.6}  (point count {} is at most 2 n(t))",
        ps.provenance.t.iter().product::<f64>(),
        ps.points.len()
    );
    println!();

    // The serialized form is deterministic: header line, then one point per
    // line, lexicographically sorted, 17 significant digits.
    let text = ps.to_text();
    println!("--- text format (first 6 lines) ---");
    for line in text.lines().take(6) {
        println!("{line}");
    }
    println!("...");

    // Round trip through the text format is byte-exact.
    let back = latbox::PointSet::from_text(&text).unwrap();
    assert_eq!(back.to_text(), text);
    println!("\nround trip: byte-identical");
}
