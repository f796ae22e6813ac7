//! Radial quasiconvexity, semistrict quasiconvexity and pseudoconvexity of
//! the one-dimensional test functions in the bundled corpus.

use setlat::dini::DiniConfig;
use setlat::funcmodel::{restrict_segment, SampleGrid};
use setlat::gencvx::{classify_radial, classify_segment, qconvex_at_point, radial_lsc_check, Property};
use setlat::problem::Problem;

fn main() -> Result<(), setlat::error::Error> {
    let p = Problem::parse(setlat::corpus::bundled_problem("example_scalar_classes.json").unwrap())?;
    let tgrid = SampleGrid::unit_interval(129);
    let cfg = DiniConfig::default();

    let cases = [("bump", -1.0, 1.0), ("dip", -1.0, 1.0), ("gap", -1.0, 2.0), ("concave_half", -1.0, 1.0)];
    for (name, a, b) in cases {
        let phi = p.scalar_function(name)?;
        print!("{name:>13}:");
        for prop in [Property::Quasi, Property::SemistrictQuasi, Property::Pseudo] {
            let v = classify_radial(phi, &[a], &[b], prop, &tgrid, &cfg)?;
            print!(" {prop}={}", v.holds);
        }
        println!(" lsc={}", radial_lsc_check(phi, &[a], &[b], &tgrid)?.holds);
    }

    let twin = p.scalar_function("twin_parabola")?;
    let grid = p.grid("x")?;
    println!("twin_parabola at -2: {}", qconvex_at_point(twin, &[-2.0], grid, &tgrid)?);
    println!("twin_parabola on [-2,2]: {}", classify_radial(twin, &[-2.0], &[2.0], Property::Quasi, &tgrid, &cfg)?);

    let sq = p.scalar_function("square")?;
    let prof = classify_segment(&restrict_segment(sq, &[-1.0], &[1.0])?, &tgrid)?;
    println!("x^2 on [-1,1]: {} with minimum {} at t in [{}, {}]", prof.shape, prof.inf_value, prof.s0, prof.t0);
    Ok(())
}
