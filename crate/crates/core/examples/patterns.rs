use forkfree::patterns::{catalog, claw_center, classify, find_pattern, is_free};
use forkfree::Graph;

fn main() -> forkfree::Result<()> {
    println!("catalog: {}", catalog().iter().map(|p| p.name).collect::<Vec<_>>().join(", "));

    let petersen = Graph::petersen();
    println!("claw in Petersen: {:?}", find_pattern(&petersen, "claw")?);
    println!("fork in Petersen: {:?}", find_pattern(&petersen, "fork")?);
    println!("claw center of the fork: {:?}", claw_center(forkfree::patterns::pattern("fork")?));

    let c5 = Graph::cycle(5)?;
    let six = ["fork", "P6", "dart", "banner", "bull", "co-dart", "co-cricket"];
    println!("C5 free of {six:?}: {}", is_free(&c5, &six)?);

    let report = classify(&c5);
    println!("C5: omega = {}, tightest bound {:?}", report.omega, report.tightest);
    for class in report.classes.iter().filter(|c| c.member && c.bound_value.is_some()) {
        println!("  (fork, {}): chi <= {}", class.forbidden, class.bound_value.unwrap());
    }
    Ok(())
}
