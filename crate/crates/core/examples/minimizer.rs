//! A point that is not minimal although no finite family of dual directions
//! certifies it: each z*_0..z*_k leaves a gap near x0 = 0.

use setlat::optimality::{check_minimizer, domination_set, CheckMode};
use setlat::problem::Problem;

fn main() -> Result<(), setlat::error::Error> {
    let p = Problem::parse(setlat::corpus::bundled_problem("example_countable.json").unwrap())?;
    let f = p.function()?;
    let grid = p.grid("x")?;
    let x0 = [0.0];

    let dom = domination_set(f, &x0, grid, &p.duals(1)?)?;
    let first = dom.members.first().unwrap()[0];
    let last = dom.members.last().unwrap()[0];
    println!("{} grid points strictly below f(0), from {first} to {last}", dom.members.len());

    for k in 0..p.mstar.len() {
        let r = check_minimizer(f, &x0, &p.mstar[..=k], grid, &p.dini, CheckMode::Sufficient, &p.assertions)?;
        let w = r.witness.as_ref().map(|w| w[0]);
        println!("k = {k}: {} witness {:?} (bound 1/(k+1) = {:.4})", r.verdict, w, 1.0 / (k + 1) as f64);
    }
    Ok(())
}
