use forkfree::formats::emit_graph6;
use forkfree::harness::{enumerate_nonisomorphic, random_gnp, Probability, GNP_GENERATOR};

fn main() -> forkfree::Result<()> {
    let max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(7);
    for n in 1..=max {
        println!("n = {n}: {} graphs", enumerate_nonisomorphic(n)?.len());
    }
    for g in enumerate_nonisomorphic(4)? {
        print!("{} ", emit_graph6(&g)?);
    }
    println!();
    let g = random_gnp(10, Probability::new(1, 2)?, 42)?;
    println!("{GNP_GENERATOR} G(10, 1/2) seed 42: {}", emit_graph6(&g)?);
    Ok(())
}
