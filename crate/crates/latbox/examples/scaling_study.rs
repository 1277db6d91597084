//! Dispersion scaling study: N * disp(N) stays bounded as N grows, i.e. the
//! calibrated lattice sets achieve the optimal O(1/N) dispersion rate.
//!
//! Run with: cargo run --release -p latbox --example scaling_study

use latbox::studies::scaling_csv;
use latbox::{scaling_study, Lattice};

fn main() {
    let ns: Vec<usize> = (4..=8).map(|k| 1usize << k).collect(); // 16, 32, ..., 256

    for (name, lat) in [
        ("golden", Lattice::golden()),
        ("frolov2", Lattice::frolov(2).unwrap()),
    ] {
        let rows = scaling_study(&lat, &ns).unwrap();
        println!("# {name}");
        print!("{}", scaling_csv(&rows));

        let products: Vec<f64> = rows.iter().map(|r| r.n_times_disp).collect();
        let lo = products.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = products.iter().cloned().fold(0.0_f64, f64::max);
        println!(
            "# N*disp stays in [{lo:.4}, {hi:.4}] — spread {:.3}x",
            hi / lo
        );
        println!();
    }
}
