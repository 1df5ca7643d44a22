use forkfree::formats::{emit_graph6, parse_dimacs, parse_edgelist, parse_graph6};
use forkfree::Graph;

fn main() -> forkfree::Result<()> {
    for (name, g) in [("K1", Graph::empty(1)?), ("C5", Graph::cycle(5)?), ("Petersen", Graph::petersen())] {
        let s = emit_graph6(&g)?;
        println!("{name}: {s} (round trip ok: {})", parse_graph6(s.as_bytes())? == g);
    }
    let k3 = parse_dimacs("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")?;
    println!("DIMACS triangle -> {}", emit_graph6(&k3)?);
    let p3 = parse_edgelist("0 1\n1 2\n")?;
    println!("edge list path -> {}", emit_graph6(&p3)?);
    match parse_graph6(b"D?{x") {
        Ok(_) => println!("unexpected success"),
        Err(e) => println!("bad input: {e}"),
    }
    Ok(())
}
