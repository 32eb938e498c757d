//! Prints the structural invariants the suite tracks for a handful of
//! algebras: center, perfectness, simplicity, Killing form, unimodularity,
//! and the two flavors of invariant 3-forms.

use lieobstruct::catalog::catalog;
use lieobstruct::structure::{
    center, invariant_alternating_3forms, invariant_symmetric_3forms, is_killing_zero, is_perfect,
    is_simple, is_unimodular, killing_form, quotient_by_center,
};
use lieobstruct::{RingFamily, RingSpec};

fn main() -> lieobstruct::Result<()> {
    let cases = [
        ("psl", Some(3), 3_u64),
        ("sl", Some(3), 3),
        ("sl", Some(2), 5),
        ("heisenberg", None, 2),
        ("nilpotent-triangular", Some(4), 3),
    ];
    for (name, rank, p) in cases {
        let ring = RingSpec::new(RingFamily::PadicQuotient, p, 1)?;
        let algebra = catalog(name, rank, ring)?;
        let killing = killing_form(&algebra)?;
        println!(
            "{name}{} over {}:",
            rank.map(|r| format!("({r})")).unwrap_or_default(),
            ring
        );
        println!("  rank {}, center dim {}", algebra.rank(), center(&algebra)?.len());
        println!(
            "  perfect: {}, simple: {}, unimodular: {}",
            is_perfect(&algebra)?,
            is_simple(&algebra)?,
            is_unimodular(&algebra)?
        );
        println!(
            "  killing rank {} (identically zero: {})",
            killing.rank(),
            is_killing_zero(&algebra)?
        );
        println!(
            "  invariant symmetric 3-forms: dim {}, alternating: dim {}",
            invariant_symmetric_3forms(&algebra)?.len(),
            invariant_alternating_3forms(&algebra)?.len()
        );
        println!();
    }

    // The projective algebra is the quotient of the special one by its center.
    let ring = RingSpec::new(RingFamily::PadicQuotient, 3, 1)?;
    let sl3 = catalog("sl", Some(3), ring)?;
    let quotient = quotient_by_center(&sl3)?;
    let psl3 = catalog("psl", Some(3), ring)?;
    println!(
        "sl(3)/center has rank {} and matches the psl(3) catalog entry: {}",
        quotient.rank(),
        quotient == psl3
    );
    Ok(())
}
