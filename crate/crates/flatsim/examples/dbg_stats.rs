use flatsim::*;
use std::time::Instant;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let n: usize = args.get(1).map(|s| s.parse().unwrap()).unwrap_or(5);
    let l: f64 = args.get(2).map(|s| s.parse().unwrap()).unwrap_or(12.0);
    let trials: usize = args.get(3).map(|s| s.parse().unwrap()).unwrap_or(4);
    let pi = IrreduciblePermutation::symmetric(n);
    for class in [CountingClass::Between, CountingClass::Closed, CountingClass::Cylinders] {
        let t0 = Instant::now();
        let est = empirical_constant(&pi, class, l, trials, 42).unwrap();
        println!(
            "n={n} L={l} trials={trials} class={class:?}: mean={:.5} stderr={:.5} min_count={} time={:?}",
            est.mean,
            est.stderr,
            est.counts.iter().min().unwrap(),
            t0.elapsed()
        );
    }
}
