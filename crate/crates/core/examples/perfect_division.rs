use forkfree::divisibility::{divide_weighted, divisibility_exact, perfect_division};
use forkfree::oracles::WeightFn;
use forkfree::Graph;

fn show(name: &str, g: &Graph) -> forkfree::Result<()> {
    match perfect_division(g)? {
        Some(d) => println!("{name}: A = {:?}, B = {:?} via {:?}, certificate {:?}", d.a, d.b, d.strategy, d.certificate),
        None => println!("{name}: no perfect division"),
    }
    Ok(())
}

fn main() -> forkfree::Result<()> {
    show("C5", &Graph::cycle(5)?)?;
    show("C7", &Graph::cycle(7)?)?;
    show("P6", &Graph::path(6)?)?;
    show("Petersen", &Graph::petersen())?;

    let c5 = Graph::cycle(5)?;
    let w = WeightFn::new(&c5, vec![3, 0, 2, 2, 1])?;
    let d = divide_weighted(&c5, &w)?.expect("C5 is weight divisible");
    println!("weighted C5: S = {:?}, T = {:?}, clique weight {} -> {}", d.a, d.b, d.certificate.omega, d.certificate.omega_b);

    let verdict = divisibility_exact(&Graph::cycle(7)?.complement())?;
    println!("co-C7 perfectly divisible: {} (obstruction {:?})", verdict.divisible, verdict.obstruction);
    Ok(())
}
