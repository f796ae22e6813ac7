//! The hypotenuse of the triangle {x1 + x2 >= 1, 0 <= x1 <= 1} is a solution
//! of the identity objective; an interior point is not a minimizer.

use setlat::funcmodel::SetEval;
use setlat::optimality::{check_solution, CheckMode};
use setlat::polytope::lattice_inf;
use setlat::problem::Problem;
use setlat::report::render_text;

fn main() -> Result<(), setlat::error::Error> {
    let p = Problem::parse(setlat::corpus::bundled_problem("example_triangle.json").unwrap())?;
    let f = p.function()?;
    let grid = p.grid("x")?;
    let duals = p.duals(p.dual_refinement)?;

    let values = grid.points().iter().map(|x| f.eval(x)).collect::<Result<Vec<_>, _>>()?;
    println!("inf over grid: {}\n", lattice_inf(&values)?);

    let r = check_solution(f, &p.m, &p.mstar, grid, &duals, &p.dini, CheckMode::Sufficient, &p.assertions)?;
    for line in render_text(&r).lines().take_while(|l| *l != "rows:") {
        println!("{line}");
    }

    let r = check_solution(f, &[vec![0.8, 0.8]], &p.mstar, grid, &duals, &p.dini, CheckMode::Sufficient, &p.assertions)?;
    println!("\nM = {{(0.8,0.8)}}: {}", r.verdict);
    for s in &r.subchecks {
        println!("  {} {}", s.name, s.verdict);
    }
    Ok(())
}
