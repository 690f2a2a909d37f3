//! The comparison map from graph-indexed chains to signature-indexed chains
//! commutes with the total differential.

use multicurve::complex::first_to_second;
use multicurve::complex::synthetic::random_first_chain;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> multicurve::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for case in 0..5 {
        let c = random_first_chain(&mut rng, case % 3, 3, 2);
        let lhs = first_to_second(&c.hat()?)?;
        let rhs = first_to_second(&c)?.hat()?;
        println!("case {case}: {} graph entries, f∂̂ = ∂̂f: {}", c.entries.len(), lhs.minus(&rhs)?.is_zero());
    }
    Ok(())
}
