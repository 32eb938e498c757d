//! Cross-checks the linear-algebra engine against the exhaustive oracle:
//! raw lift counts, equivalence class counts, cohomology dimensions, and the
//! budget guard that keeps the oracle away from infeasible sweeps.

use lieobstruct::catalog::catalog;
use lieobstruct::complex::{cohomology, Coefficients};
use lieobstruct::lifting::lift_family;
use lieobstruct::oracle::{
    cohomology_bruteforce, enumerate_lifts_bruteforce, partition_by_psi_equivalence, OracleBudget,
};
use lieobstruct::{RingFamily, RingSpec};

fn main() -> lieobstruct::Result<()> {
    let budget = OracleBudget::default();

    for (name, rank, p) in [("abelian", Some(2), 3_u64), ("heisenberg", None, 2)] {
        let ring = RingSpec::new(RingFamily::PadicQuotient, p, 1)?;
        let algebra = catalog(name, rank, ring)?;
        let lifts = enumerate_lifts_bruteforce(&algebra, &budget)?;
        let classes = partition_by_psi_equivalence(&lifts, &budget)?;
        let family = lift_family(&algebra)?.expect("these catalog entries lift");
        println!("{name} over {}:", ring);
        println!("  raw one-level lifts by exhaustion: {}", lifts.len());
        println!(
            "  equivalence classes by exhaustive basis sweep: {} (sizes all {})",
            classes.len(),
            classes[0].len()
        );
        println!(
            "  engine prediction p^dim(H^2) = {}^{} = {:?}",
            p,
            family.dim_h2(),
            family.member_count()
        );

        let report = cohomology(&algebra, Coefficients::Adjoint)?;
        let brute: Vec<usize> = (0..=algebra.rank())
            .map(|s| cohomology_bruteforce(&algebra, s, Coefficients::Adjoint, &budget))
            .collect::<lieobstruct::Result<_>>()?;
        println!("  engine adjoint dims {:?}, oracle dims {:?}", report.dims(), brute);
        println!();
    }

    // The oracle refuses sweeps it cannot finish instead of running forever.
    let ring = RingSpec::new(RingFamily::PadicQuotient, 3, 1)?;
    let psl3 = catalog("psl", Some(3), ring)?;
    match enumerate_lifts_bruteforce(&psl3, &budget) {
        Err(e) => println!("psl(3) enumeration is refused: {e}"),
        Ok(_) => unreachable!("3^147 candidates cannot fit any budget"),
    }

    // LIEOBSTRUCT_BUDGET tightens both ceilings without code changes.
    std::env::set_var("LIEOBSTRUCT_BUDGET", "100");
    let tight = OracleBudget::from_env();
    let heis = catalog("heisenberg", None, RingSpec::new(RingFamily::PadicQuotient, 2, 1)?)?;
    match enumerate_lifts_bruteforce(&heis, &tight) {
        Err(e) => println!("with LIEOBSTRUCT_BUDGET=100: {e}"),
        Ok(_) => unreachable!("2^9 candidates exceed a budget of 100"),
    }
    Ok(())
}
