//! Upper sets over the nonnegative orthant: sums, infima, suprema and the
//! inf-residual, plus the extended-real arithmetic underneath.

use setlat::polytope::{inf_residual_set, lattice_inf, lattice_sup, oplus, support_scalar, ConvexCone, DualVector, UpperSet};
use setlat::xreals::{inf_add, inf_residual, XReal};

fn main() -> Result<(), setlat::error::Error> {
    let c = ConvexCone::orthant(2);
    let a = UpperSet::point(&[1.0, 0.0], &c)?;
    let b = UpperSet::point(&[0.0, 1.0], &c)?;

    println!("A        = {a}");
    println!("B        = {b}");
    println!("A + B    = {}", oplus(&a, &b)?);
    println!("A inf B  = {}", lattice_inf(&[a.clone(), b.clone()])?);
    println!("A sup B  = {}", lattice_sup(&[a.clone(), b.clone()])?);
    // shifted cones: A -. B = z_A - z_B + C
    println!("A -. B   = {}", inf_residual_set(&a, &b)?);

    let z = DualVector::new(vec![-1.0, -1.0], &c)?;
    println!("phi_z(A inf B) = {}", support_scalar(&lattice_inf(&[a, b])?, &z)?);

    let (p, m) = (XReal::PosInf, XReal::NegInf);
    println!("+inf (+) -inf = {}", inf_add(p, m));
    println!("-inf -. -inf  = {}", inf_residual(m, m));
    println!("2 -. 5        = {}", inf_residual(XReal::from_f64(2.0), XReal::from_f64(5.0)));
    Ok(())
}
