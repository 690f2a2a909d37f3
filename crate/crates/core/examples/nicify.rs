//! Pushes a cycle with higher filtration entries back to a nice cycle.

use multicurve::complex::nicify;
use multicurve::fixtures::witness_cycle;
use multicurve::nmch::multilink_chain;
use multicurve::rational::qf;

fn main() -> multicurve::Result<()> {
    for (seed, k) in [(0, 1), (4, 2)] {
        let (nice, z) = witness_cycle(seed, k)?;
        let out = nicify(&z, &qf(1, 100))?;
        println!(
            "k={k}: input {} entries (nice: {}), output {} entries (nice: {}, cycle: {}), MultiLink {} → {}",
            z.entries.len(),
            z.is_nice(),
            out.z_nice.entries.len(),
            out.z_nice.is_nice(),
            out.z_nice.hat()?.is_zero(),
            multilink_chain(&nice)?,
            multilink_chain(&out.z_nice)?
        );
    }
    Ok(())
}
