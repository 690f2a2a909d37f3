//! Automorphism groups, orientation signs and canonical labels of marked graphs.

use std::collections::BTreeSet;

use multicurve::graph::{automorphism_group, canonical_form, DecoratedGraph, MarkedGraph, Vertex};

fn main() -> multicurve::Result<()> {
    // two identical vertices joined by a double edge, the first edge marked
    let vertices = vec![Vertex::new(0, vec![1], 1, 0), Vertex::new(1, vec![1], 1, 0)];
    let g = DecoratedGraph::from_edges(vertices, &[(0, 1), (0, 1)]);
    for filtration in [vec![], vec![BTreeSet::from([0])]] {
        let m = MarkedGraph::new(g.clone(), filtration.clone())?;
        let group = automorphism_group(&m)?;
        let odd = group.iter().filter(|a| a.sign < 0).count();
        println!("filtration {filtration:?}: |Aut| = {}, {odd} orientation-reversing", group.len());
    }
    let loop_graph = DecoratedGraph::from_edges(vec![Vertex::new(0, vec![1], 1, 0)], &[(0, 0)]);
    let signs: Vec<i32> = automorphism_group(&MarkedGraph::bare(loop_graph))?.iter().map(|a| a.sign).collect();
    println!("one vertex with a loop: signs {signs:?}");
    let label = canonical_form(&MarkedGraph::bare(g))?.label;
    println!("canonical label: vertices {:?}, edges {:?}", label.vertices, label.edges);
    Ok(())
}
