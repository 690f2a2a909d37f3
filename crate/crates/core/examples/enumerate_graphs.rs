//! Stable decorated graphs for the rank-one lattice, with the derived bounds.

use multicurve::graph::{enumerate, ChargeLattice};
use multicurve::rational::qf;

fn main() -> multicurve::Result<()> {
    let lattice = ChargeLattice::rank_one();
    for beta in 0..=3 {
        for chi in beta - 2..=beta + 1 {
            let e = enumerate(&lattice, &[beta], chi, &qf(1, 1))?;
            println!(
                "β={beta} χ={chi}: {:4} graphs  (≤{} charged, ≤{} neutral vertices, ≤{} edges)",
                e.graphs.len(),
                e.bounds.max_charged_vertices,
                e.bounds.max_neutral_vertices,
                e.bounds.max_edges
            );
        }
    }
    Ok(())
}
