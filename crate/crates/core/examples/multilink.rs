//! MultiLink of nice generators, of the corresponding chains, and along an isotopy.

use multicurve::fixtures::{hopf_blocks, hopf_pass_isotopy};
use multicurve::nmch::{multilink, multilink_chain, multilink_track, NiceGenerator};

fn main() -> multicurve::Result<()> {
    for k in 1..=3 {
        let g = NiceGenerator::standard(hopf_blocks(k))?;
        println!("{k} Hopf blocks: MultiLink {} (chain level {})", multilink(&g)?, multilink_chain(&g.to_chain()?)?);
    }
    // flipping one curve of a block negates its factor
    let mut curves = hopf_blocks(2);
    curves[3] = curves[3].reversed();
    println!("one block reversed: {}", multilink(&NiceGenerator::standard(curves)?)?);
    let track = multilink_track(&hopf_pass_isotopy(), &[1, 0])?;
    println!("along the one-pass isotopy: {track:?}");
    Ok(())
}
