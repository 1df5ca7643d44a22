use forkfree::canon::{are_isomorphic, canonical_form};
use forkfree::Graph;

fn main() -> forkfree::Result<()> {
    let c5 = Graph::cycle(5)?;
    println!("C5: N(0) = {:?}, N[0] = {:?}, M(0) = {:?}",
        c5.neighborhood(0)?, c5.closed_neighborhood(0)?, c5.non_neighborhood(0)?);

    let (p3, map) = c5.induced([0, 1, 2].into_iter().collect())?;
    println!("C5[0,1,2] has {} edges, index map {map:?}", p3.edge_count());

    let co_c5 = c5.complement();
    println!("C5 self-complementary: {}", are_isomorphic(&c5, &co_c5)?);
    println!("canonical form of C5: {}", canonical_form(&c5)?.as_graph6());

    let p4 = Graph::path(4)?;
    println!("P4 self-complementary: {}", are_isomorphic(&p4, &p4.complement())?);

    let (l, edges) = Graph::complete(4)?.line_graph()?;
    println!("L(K4): {} vertices, {} edges, first vertex is edge {:?}", l.n(), l.edge_count(), edges[0]);

    let co_dart = forkfree::patterns::pattern("co-dart")?;
    println!("co-dart components: {:?}", co_dart.components());
    Ok(())
}
