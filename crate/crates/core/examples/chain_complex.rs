//! The four operators on random second-version chains and the identities
//! that make ∂̂ = ∂ − δ − ∂̃ a differential.

use multicurve::complex::synthetic::random_second_chain;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> multicurve::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for degree in 0..=3 {
        let c = random_second_chain(&mut rng, degree, 4, 3);
        let (b, d, t) = (c.boundary()?, c.delta()?, c.tilde());
        println!(
            "degree {degree}: {} entries; ∂ {} δ {} ∂̃ {} nonzero entries; ∂²=0 {} δ²=0 {} ∂̃²=0 {} ∂̂²=0 {}",
            c.entries.len(),
            b.entries.len(),
            d.entries.len(),
            t.entries.len(),
            b.boundary()?.is_zero(),
            d.delta()?.is_zero(),
            t.tilde().is_zero(),
            c.hat()?.hat()?.is_zero()
        );
    }
    Ok(())
}
