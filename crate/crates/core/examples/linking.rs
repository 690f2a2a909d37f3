//! Exact projection-count linking numbers against the Gauss integral.

use multicurve::fixtures::{doubled_clasp_pair, hopf_pair, split_pair};
use multicurve::geometry::{gauss_linking_estimate, linking_number};

fn main() -> multicurve::Result<()> {
    for (name, (a, b)) in [("hopf", hopf_pair()), ("split", split_pair()), ("doubled clasp", doubled_clasp_pair())] {
        let exact = linking_number(&a, &b)?;
        let gauss = gauss_linking_estimate(&a, &b, 1e-4)?;
        let reversed = linking_number(&a.reversed(), &b)?;
        println!("{name:14} lk = {exact:>2}  gauss ≈ {gauss:+.5}  reversed = {reversed}");
    }
    Ok(())
}
