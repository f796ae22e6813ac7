//! Mean-value witnesses: for l.s.c. phi and a < b there is a t in [0,1)
//! whose Dini derivative toward b bounds phi(b) - phi(t).

use setlat::dini::DiniConfig;
use setlat::funcmodel::{SampleGrid, ScalarFn};
use setlat::gencvx::diewert_witness;

fn main() -> Result<(), setlat::error::Error> {
    let grid = SampleGrid::unit_interval(257);
    let cfg = DiniConfig::default();
    let funcs = [
        ("x^2", vec![("true", "x1^2")]),
        ("step", vec![("x1 <= 0.5", "0"), ("true", "1")]),
        ("tent", vec![("true", "min(x1, 1 - x1)")]),
        ("wave", vec![("x1 < 0.3", "(x1 - 0.1)^2"), ("true", "2 - 4*x1^2")]),
    ];
    for (name, pieces) in funcs {
        let phi = ScalarFn::parse(1, &pieces)?;
        match diewert_witness(&phi, &[0.0], &[1.0], &grid, &cfg) {
            Ok(w) => println!("{name:>5}: t = {:<8} phi(b) -. phi(a) = {}, derivative {}", w.t, w.lhs, w.rhs),
            Err(e) => println!("{name:>5}: {e}"),
        }
    }
    Ok(())
}
