//! Times at which two moving curves pass through each other, and the rejection
//! of a tangential contact.

use multicurve::fixtures::{hopf_pass_isotopy, strand_crossing_isotopy, tangent_isotopy};
use multicurve::geometry::crossing_events;
use multicurve::rational::to_f64;

fn main() -> multicurve::Result<()> {
    for (name, iso) in [("hopf pass", hopf_pass_isotopy()), ("strands", strand_crossing_isotopy())] {
        for e in crossing_events(&iso, (0, 1))? {
            println!("{name}: t* ≈ {:.6}, jump {}, near {:?}", to_f64(&e.t_star), e.jump, e.location);
        }
    }
    match crossing_events(&tangent_isotopy(), (0, 1)) {
        Err(e) => println!("tangency: {e}"),
        Ok(ev) => println!("tangency unexpectedly gave {} events", ev.len()),
    }
    Ok(())
}
