//! Forgetful compatibility: loops on forgotten half-edges must carry the fixed class γ.

use multicurve::complex::{check_forgetful, factorize, LinComb, PlCell, SecondChain, SecondIndex};
use multicurve::fixtures::torus_winding_loop;
use multicurve::geometry::homology_class;
use multicurve::Q;

fn chain(windings: [[i64; 3]; 4]) -> multicurve::Result<SecondChain<PlCell>> {
    let loops = windings.iter().map(|&w| torus_winding_loop(w)).collect();
    let mut c = SecondChain::zero(0);
    let one = Q::from_integer(1.into());
    c.add_entry(SecondIndex::new(2, vec![1])?, &LinComb::from([(PlCell::Product(loops), one.clone())]), &one);
    Ok(c)
}

fn main() -> multicurve::Result<()> {
    let gamma = homology_class(&torus_winding_loop([1, 0, 0]));
    for (name, w) in [
        ("forgotten pair winds once", [[1, 0, 0], [1, 0, 0], [0, 1, 0], [0, 1, 0]]),
        ("second loop winds twice", [[1, 0, 0], [2, 0, 0], [0, 1, 0], [0, 1, 0]]),
    ] {
        let c = chain(w)?;
        let r = check_forgetful(&c, &factorize(&c), &gamma)?;
        println!("{name}: passed {}, offending {:?}", r.passed, r.offending);
    }
    Ok(())
}
