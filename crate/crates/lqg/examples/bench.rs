use std::time::Instant;
fn main() {
    for (d, n) in [(0u32, 2u32), (1, 2), (0, 3)] {
        let t0 = Instant::now();
        let report = lqg::straightening::verify_asl(d, n, 17, 100_000).unwrap();
        println!("verify_asl({d},{n}): {:?} passed={}", t0.elapsed(), report.passed());
    }
    let t0 = Instant::now();
    let ideal = lqg::straightening::ideal_quadrics(0, 3, 17, 100_000).unwrap();
    println!("ideal(0,3): {:?} ({} relations, {} comparable)", t0.elapsed(), ideal.relations.len(), ideal.comparable_pairs);
    let t0 = Instant::now();
    let count = ideal.relations.iter().filter(|r| lqg::straightening::verify_relation_symbolically(0, 3, r)).count();
    println!("symbolic(0,3): {:?} ({count} verified)", t0.elapsed());
}
