use forkfree::divisibility::{line_graph_division, line_graph_division_using};
use forkfree::Graph;

fn main() -> forkfree::Result<()> {
    let k4 = Graph::complete(4)?;
    let d = line_graph_division(&k4)?;
    println!("K4 depth-first tree {:?}", d.tree_edges);
    println!("  L(K4) split {:?} / {:?}, omega {} -> {}",
        d.division.a, d.division.b, d.division.certificate.omega, d.division.certificate.omega_b);

    let bfs = k4.bfs_tree();
    println!("K4 breadth-first tree {bfs:?} gives a division: {}", line_graph_division_using(&k4, &bfs)?.is_some());

    let petersen = Graph::petersen();
    let d = line_graph_division(&petersen)?;
    println!("L(Petersen): |A| = {}, |B| = {}, certificate {:?}", d.division.a.len(), d.division.b.len(), d.division.certificate);
    Ok(())
}
