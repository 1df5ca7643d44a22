use forkfree::harness::{checks, run_check, Corpus};

fn main() -> forkfree::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    let corpus = Corpus::all_up_to(n)?;
    println!("{} ({} graphs)", corpus.description, corpus.graphs.len());
    for check in checks() {
        let r = run_check(check, &corpus);
        println!("{:<10} {:>5} matching  {:>2} counterexamples  {}  [{} => {}]",
            r.check, r.matching, r.counterexamples.len(), if r.passed { "pass" } else { "FAIL" },
            check.hypothesis, check.assertion);
        for c in &r.counterexamples {
            println!("    {} {}", c.graph6, c.detail);
        }
    }
    Ok(())
}
