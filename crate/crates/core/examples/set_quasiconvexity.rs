//! Set quasiconvexity f(a) inf f(b) <= f(t) is weaker than quasiconvexity of
//! every scalarization: the staircase passes the former, not the latter.

use setlat::dini::DiniConfig;
use setlat::funcmodel::scalarize;
use setlat::gencvx::{classify_radial, set_quasiconvex, Property};
use setlat::polytope::DualVector;
use setlat::problem::Problem;

fn main() -> Result<(), setlat::error::Error> {
    let cfg = DiniConfig::default();
    for name in ["example_staircase.json", "example_split_values.json"] {
        let p = Problem::parse(setlat::corpus::bundled_problem(name).unwrap())?;
        let v = set_quasiconvex(p.function()?, p.grid("x")?, p.grid("t")?)?;
        println!("{}: {v}", p.name);
    }

    let p = Problem::parse(setlat::corpus::bundled_problem("example_staircase.json").unwrap())?;
    let f = p.function()?;
    for z in [[0.0, -1.0], [-1.0, -1.0], [1.0, -1.0]] {
        let z = DualVector::new(z.to_vec(), &p.cone)?;
        let v = classify_radial(&scalarize(f, &z)?, &[0.0], &[2.0], Property::Quasi, p.grid("t")?, &cfg)?;
        println!("scalarization {z} on [0,2]: {v}");
    }
    Ok(())
}
