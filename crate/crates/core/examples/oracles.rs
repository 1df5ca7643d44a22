use forkfree::oracles::{
    chromatic_number, clique_number, exact_coloring, find_odd_antihole, find_odd_hole,
    independence_number, is_perfect, max_clique, max_weight_clique, WeightFn,
};
use forkfree::Graph;

fn main() -> forkfree::Result<()> {
    let petersen = Graph::petersen();
    println!("Petersen: omega = {}, alpha = {}, chi = {}",
        clique_number(&petersen), independence_number(&petersen), chromatic_number(&petersen)?);
    println!("a maximum clique: {:?}", max_clique(&petersen));
    println!("an optimal colouring: {:?}", exact_coloring(&petersen)?.colors);

    for (name, g) in [("C5", Graph::cycle(5)?), ("C6", Graph::cycle(6)?), ("co-C7", Graph::cycle(7)?.complement())] {
        println!("{name}: odd hole {:?}, odd antihole {:?}, perfect {}",
            find_odd_hole(&g)?, find_odd_antihole(&g)?, is_perfect(&g)?);
    }

    // paw: triangle 0,1,2 with pendant 3 hanging off 2
    let paw = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)])?;
    let w = WeightFn::new(&paw, vec![1, 1, 1, 5])?;
    let (weight, clique) = max_weight_clique(&paw, &w);
    println!("paw with pendant weight 5: best clique {clique:?} of weight {weight}");
    Ok(())
}
