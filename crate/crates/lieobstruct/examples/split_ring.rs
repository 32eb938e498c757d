//! Compares lifting over the two ring families. Constant structure constants
//! lift level by level in both; a bracket that genuinely uses the nilpotent
//! variable can refuse the next step, and the integer mirror refuses too.

use lieobstruct::algebra::{BracketAlgebra, LieAlgebra};
use lieobstruct::catalog::catalog;
use lieobstruct::lifting::{lift_tower, obstruction};
use lieobstruct::ring::psi;
use lieobstruct::{RingElem, RingFamily, RingSpec};

fn main() -> lieobstruct::Result<()> {
    for p in [2_u64, 3] {
        let series = RingSpec::new(RingFamily::PowerSeriesQuotient, p, 1)?;
        for name in ["abelian", "heisenberg", "sl"] {
            let rank = if name == "heisenberg" { None } else { Some(2) };
            let algebra = catalog(name, rank, series)?;
            let tower = lift_tower(&algebra, 4)?;
            println!(
                "{name} over {} lifts to {}: {}",
                series,
                tower.top().ring(),
                tower.reached()
            );
        }
    }

    // [e0,e1] = e2, [e0,e2] = pi e1, [e1,e2] = pi e2 with pi^2 = 0. The level-2
    // relation holds only because pi squares away, and no correction of the
    // brackets survives to level 3.
    println!();
    for family in [RingFamily::PowerSeriesQuotient, RingFamily::PadicQuotient] {
        let level2 = RingSpec::new(family, 2, 2)?;
        let one = RingElem::one(level2.residue());
        let pi = psi(&one, level2);
        let zero = RingElem::zero(level2);
        let entries = vec![
            (0, 1, vec![zero.clone(), zero.clone(), RingElem::one(level2)]),
            (0, 2, vec![zero.clone(), pi.clone(), zero.clone()]),
            (1, 2, vec![zero.clone(), zero.clone(), pi.clone()]),
        ];
        let algebra = LieAlgebra::new(BracketAlgebra::from_upper_entries(level2, 3, &entries)?)?;
        let report = obstruction(&algebra)?;
        println!(
            "pi-dependent bracket over {}: jacobiator closed: {}, lifts to level 3: {}",
            level2,
            report.closed(),
            report.lifts()
        );
    }
    Ok(())
}
