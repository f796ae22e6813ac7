//! Which subsets of the half-line are infimizers of
//! x -> conv{(0,x), (x,0)} + R^2_+? Over all duals only sets containing 0
//! pass the variational test; over the two extreme duals every set does.

use setlat::optimality::check_infimizer;
use setlat::problem::Problem;
use setlat::report::render_text;

fn main() -> Result<(), setlat::error::Error> {
    let p = Problem::parse(setlat::corpus::bundled_problem("example_extreme_direction.json").unwrap())?;
    let f = p.function()?;
    let grid = p.grid("x")?;
    for (label, refine) in [("all duals", 2), ("extreme duals", 0)] {
        let duals = p.duals(refine)?;
        for m in [vec![vec![0.0]], vec![vec![0.0], vec![1.0]], vec![vec![1.0]], vec![vec![0.5]]] {
            let r = check_infimizer(f, &m, grid, &duals, &p.dini, &p.assertions)?;
            let vi = r.subcheck("STRONG_VI").unwrap();
            println!("{label:>13} M={m:?}: {} (STRONG_VI {})", r.verdict, vi.verdict);
        }
    }

    let duals = p.duals(2)?;
    let r = check_infimizer(f, &[vec![1.0]], grid, &duals, &p.dini, &p.assertions)?;
    println!();
    for line in render_text(&r).lines().take_while(|l| *l != "rows:") {
        println!("{line}");
    }
    Ok(())
}
