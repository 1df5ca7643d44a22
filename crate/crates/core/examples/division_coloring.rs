use forkfree::divisibility::color_by_division;
use forkfree::oracles::chromatic_number;
use forkfree::Graph;

fn main() -> forkfree::Result<()> {
    for (name, g) in [("C5", Graph::cycle(5)?), ("K4", Graph::complete(4)?), ("Petersen", Graph::petersen())] {
        let c = color_by_division(&g)?;
        println!("{name}: omega = {}, chi = {}, palette = {}, bound C(omega+1, 2) = {}",
            c.omega, chromatic_number(&g)?, c.palette, c.bound_value);
        for layer in &c.layers {
            println!("  layer omega {} -> perfect part {:?} with {} colours ({:?})",
                layer.omega, layer.perfect_part, layer.colors_used, layer.strategy);
        }
        println!("  colours {:?}", c.colors);
    }
    Ok(())
}
