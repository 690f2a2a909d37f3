//! MultiLink(end) − MultiLink(start) equals the signed sum over crossings of
//! the MultiLink with the crossed pair removed; the relation element has
//! MultiLink zero.

use multicurve::fixtures::random_block_isotopy;
use multicurve::nmch::{hnul_element, verify_chain_map};

fn main() -> multicurve::Result<()> {
    for seed in 0..5 {
        let k = 1 + seed as usize % 3;
        let iso = random_block_isotopy(seed, k, 5)?;
        let pairing: Vec<usize> = (0..2 * k).map(|h| h ^ 1).collect();
        let r = verify_chain_map(&iso, &pairing)?;
        let rel = hnul_element(&iso, &pairing)?;
        println!(
            "seed {seed}, k={k}: {} − {} = {} vs Σ crossings {} over {} events; relation MultiLink {}",
            r.multilink_end,
            r.multilink_start,
            r.lhs,
            r.rhs,
            r.terms.len(),
            rel.multilink()?
        );
    }
    Ok(())
}
