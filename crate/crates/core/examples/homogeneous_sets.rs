use forkfree::decomposition::{closure, find_homogeneous_set, mixed_vertices};
use forkfree::{Graph, VertexSet};

fn main() -> forkfree::Result<()> {
    let c4 = Graph::cycle(4)?;
    println!("C4: smallest homogeneous set {:?}", find_homogeneous_set(&c4));

    let p4 = Graph::path(4)?;
    let pair: VertexSet = [0, 1].into_iter().collect();
    println!("P4: vertices mixed on {{0, 1}}: {:?}", mixed_vertices(&p4, pair));
    println!("P4: closure of {{0, 1}} = {:?} (prime: {})", closure(&p4, pair), find_homogeneous_set(&p4).is_none());

    // substituting K2 for one vertex of C5 creates a module
    let blown = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 4), (5, 1), (5, 0)])?;
    println!("C5 with vertex 0 doubled: {:?}", find_homogeneous_set(&blown));
    Ok(())
}
