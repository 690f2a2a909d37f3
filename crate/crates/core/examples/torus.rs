//! Curves in the flat three-torus: homology classes and linking of small loops.

use multicurve::fixtures::{small_hopf_euclidean, torus_small_hopf, torus_winding_loop};
use multicurve::geometry::{homology_class, linking_number};
use multicurve::rational::format_q;

fn main() -> multicurve::Result<()> {
    let (ea, eb) = small_hopf_euclidean();
    let (ta, tb) = torus_small_hopf();
    println!("small Hopf pair: R³ lk = {}, T³ lk = {}", linking_number(&ea, &eb)?, linking_number(&ta, &tb)?);
    for w in [[1, 0, 0], [0, 2, -1], [3, 1, 1]] {
        let class = homology_class(&torus_winding_loop(w));
        println!("winding {w:?} → class [{}]", class.iter().map(format_q).collect::<Vec<_>>().join(", "));
    }
    Ok(())
}
