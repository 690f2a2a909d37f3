//! Regenerates the JSON fixture files used by the `mch` examples in the README.
//!
//!     cargo run --example write_fixtures -- fixtures

use std::path::PathBuf;

use multicurve::fixtures::{doubled_clasp_pair, hopf_pair, hopf_pass_isotopy, split_pair, tangent_isotopy};
use multicurve::geometry::io::isotopy_to_json;
use multicurve::geometry::point::point;
use multicurve::graph::ChargeLattice;
use multicurve::nmch::{generator_to_json, multilink, NiceGenerator};

fn main() -> multicurve::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "fixtures".into()));
    std::fs::create_dir_all(&dir)?;

    let (a, b) = hopf_pair();
    let hopf = NiceGenerator::standard(vec![a.clone(), b.clone()])?;
    let (sa, sb) = split_pair();
    let split = NiceGenerator::standard(vec![sa, sb])?;
    let (ca, cb) = doubled_clasp_pair();
    let far = point(20, 0, 0);
    let clasp_hopf = NiceGenerator::standard(vec![ca, cb, a.translated(&far), b.translated(&far)])?;

    for (name, g) in [("hopf", &hopf), ("split", &split), ("clasp_hopf", &clasp_hopf)] {
        std::fs::write(dir.join(format!("{name}.json")), generator_to_json(g)? + "\n")?;
        println!("{name}.json  multilink {}", multilink(g)?);
    }
    std::fs::write(dir.join("one_pass.json"), isotopy_to_json(&hopf_pass_isotopy())? + "\n")?;
    std::fs::write(dir.join("tangency.json"), isotopy_to_json(&tangent_isotopy())? + "\n")?;
    std::fs::write(
        dir.join("rank_one_lattice.json"),
        serde_json::to_string_pretty(&ChargeLattice::rank_one())? + "\n",
    )?;
    println!("wrote isotopies and lattice to {}", dir.display());
    Ok(())
}
