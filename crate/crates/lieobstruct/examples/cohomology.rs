//! Computes the full cohomology profile of a few catalog algebras and prints
//! one table per coefficient choice, with representatives for the low degrees.

use lieobstruct::catalog::catalog;
use lieobstruct::complex::{cohomology, Coefficients};
use lieobstruct::report::FormPayload;
use lieobstruct::{RingFamily, RingSpec};

fn main() -> lieobstruct::Result<()> {
    let cases = [
        ("psl", Some(3), 3_u64),
        ("heisenberg", None, 2),
        ("sl", Some(2), 5),
    ];
    for (name, rank, p) in cases {
        let ring = RingSpec::new(RingFamily::PadicQuotient, p, 1)?;
        let algebra = catalog(name, rank, ring)?;
        println!("== {name}{} over {} ==", rank.map(|r| format!("({r})")).unwrap_or_default(), ring);
        for kind in [Coefficients::Trivial, Coefficients::Adjoint] {
            let report = cohomology(&algebra, kind)?;
            println!("{kind} coefficients: dims {:?}", report.dims());
            println!("degree  space  cocycles  coboundaries  H");
            for degree in &report.degrees {
                println!(
                    "{:<7} {:<6} {:<9} {:<13} {}",
                    degree.degree,
                    degree.dim_space,
                    degree.dim_cocycles,
                    degree.dim_coboundaries,
                    degree.dim_cohomology
                );
            }
            // The first nonzero degree above 0 gets its classes spelled out.
            if let Some(first) = report
                .degrees
                .iter()
                .find(|d| d.degree > 0 && d.dim_cohomology > 0)
            {
                println!("representatives of H^{}:", first.degree);
                for coords in &first.representatives {
                    let form = FormPayload::new(algebra.rank(), kind, first.degree, coords.clone());
                    println!("  {}", form.display);
                }
            }
            println!();
        }
    }
    Ok(())
}
