//! Scalar, z* and residual Dini derivatives of [x^2 - 1, 1 - x^2] x R_+ at
//! the origin: every scalarization is flat there, yet the full residual
//! quotient is empty for each step.

use setlat::dini::{interior_contains_zero, residual_dini, scalar_dini, zstar_dini, DiniConfig};
use setlat::funcmodel::{scalarize, ScalarFn};
use setlat::polytope::lattice_sup;
use setlat::problem::Problem;

fn main() -> Result<(), setlat::error::Error> {
    let cfg = DiniConfig::default();

    let kink = ScalarFn::parse(1, &[("true", "abs(x1) + x1^2")])?;
    println!("scalar: d+ |x|+x^2 at 0 along  1 = {}", scalar_dini(&kink, &[0.0], &[1.0], &cfg)?);
    println!("scalar: d+ |x|+x^2 at 0 along -1 = {}", scalar_dini(&kink, &[0.0], &[-1.0], &cfg)?);

    let p = Problem::parse(setlat::corpus::bundled_problem("example_strict_domination.json").unwrap())?;
    let f = p.function()?;
    let mut halfspaces = Vec::new();
    for z in p.duals(2)? {
        let h = zstar_dini(f, &z, &[0.0], &[1.0], &cfg)?;
        let direct = scalar_dini(&scalarize(f, &z)?, &[0.0], &[1.0], &cfg)?;
        println!("z* = {z}: {} (scalar {direct}, 0 interior: {})", h.scalar_value, interior_contains_zero(&h)?);
        halfspaces.push(h.set_value);
    }
    println!("intersection of halfspaces = {}", lattice_sup(&halfspaces)?);

    let r = residual_dini(f, &[0.0], &[1.0], &cfg)?;
    println!("residual derivative = {} (low confidence: {})", r.set_value, r.low_confidence);
    Ok(())
}
