//! Evaluates the degree-3 obstruction class for one algebra that lifts and one
//! that does not, then checks that the class ignores the choice of lift.

use lieobstruct::catalog::catalog;
use lieobstruct::complex::{form_space_dim, is_coboundary, AdForm, Coefficients};
use lieobstruct::lifting::{jacobiator, make_bracket_lift, obstruction, perturb_lift};
use lieobstruct::{RingFamily, RingSpec};

fn main() -> lieobstruct::Result<()> {
    let ring = RingSpec::new(RingFamily::PadicQuotient, 3, 1)?;

    let sl3 = catalog("sl", Some(3), ring)?;
    let report = obstruction(&sl3)?;
    println!("sl(3) over {}:", ring);
    println!("  jacobiator closed: {}", report.closed());
    println!("  class vanishes:    {}", report.witness().is_some());
    if let Some(lifted) = report.lifted_algebra() {
        println!("  lifted to {} with the witness correction", lifted.ring());
    }

    let psl3 = catalog("psl", Some(3), ring)?;
    let report = obstruction(&psl3)?;
    let nonzero = report.j().coords().iter().filter(|&&c| c != 0).count();
    println!("\npsl(3) over {}:", ring);
    println!("  jacobiator closed: {}", report.closed());
    println!("  class vanishes:    {}", report.witness().is_some());
    println!("  lifts one level:   {}", report.lifts());
    println!("  jacobiator has {nonzero} nonzero coordinates out of {}", report.j().coords().len());

    // The class in H^3 does not depend on which lift of the brackets we
    // started from: perturbing by any 2-form shifts the jacobiator by a
    // coboundary.
    let base_lift = make_bracket_lift(&psl3)?;
    let j_zero = jacobiator(&base_lift)?;
    let dim = form_space_dim(psl3.rank(), 2, Coefficients::Adjoint);
    for tweak in 1..=3_u64 {
        let mut coords = vec![0; dim];
        coords[7 * tweak as usize % dim] = tweak % 3;
        coords[11 * tweak as usize % dim] = (tweak + 1) % 3;
        let t = AdForm::from_coords(&psl3, Coefficients::Adjoint, 2, coords)?;
        let perturbed = perturb_lift(&base_lift, &t)?;
        let j = jacobiator(&perturbed)?;
        let shift_is_coboundary = is_coboundary(&psl3, &j.sub(&j_zero)?)?.is_some();
        let still_obstructed = is_coboundary(&psl3, &j)?.is_none();
        println!(
            "  lift choice {tweak}: shift is a coboundary: {shift_is_coboundary}, class still nonzero: {still_obstructed}"
        );
    }
    Ok(())
}
