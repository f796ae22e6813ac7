//! Scalarizing a set-valued function and rebuilding its values from the
//! scalarizations over a dual sample.

use setlat::funcmodel::{reconstruct, scalarize, ScalarEval, SetEval};
use setlat::polytope::TAU_H;
use setlat::problem::Problem;

fn main() -> Result<(), setlat::error::Error> {
    let p = Problem::parse(setlat::corpus::bundled_problem("example_triangle.json").unwrap())?;
    let f = p.function()?;
    let duals = p.duals(2)?;

    for x in [[0.5, 0.5], [1.0, 1.0], [0.0, 0.0]] {
        let value = f.eval(&x)?;
        let rebuilt = reconstruct(f, &x, &duals)?;
        println!("f({:?}) = {value}", x);
        println!("  rebuilt from {} duals: {}", duals.len(), if value.approx_eq(&rebuilt, TAU_H) { "equal" } else { "differs" });
        for z in &duals[..3] {
            println!("  phi_{z}(x) = {}", scalarize(f, z)?.value(&x)?);
        }
    }
    Ok(())
}
