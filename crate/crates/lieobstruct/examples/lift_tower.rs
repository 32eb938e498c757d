//! Climbs the tower of quotient rings level by level, printing each step's
//! witness, and shows a tower that stops at the first floor.

use lieobstruct::catalog::catalog;
use lieobstruct::lifting::lift_tower;
use lieobstruct::{RingFamily, RingSpec};

fn main() -> lieobstruct::Result<()> {
    let ring = RingSpec::new(RingFamily::PadicQuotient, 3, 1)?;

    let sl2 = catalog("sl", Some(2), ring)?;
    let tower = lift_tower(&sl2, 4)?;
    println!("sl(2) over {}, target level 4:", ring);
    for step in tower.steps() {
        let nonzero = step.witness().coords().iter().filter(|&&c| c != 0).count();
        println!(
            "  level {} -> {}: witness has {nonzero} nonzero coordinates, now over {}",
            step.from_level(),
            step.from_level() + 1,
            step.algebra().ring()
        );
    }
    println!("  reached {} (level {})", tower.top().ring(), tower.reached_level());

    let series = RingSpec::new(RingFamily::PowerSeriesQuotient, 2, 1)?;
    let heis = catalog("heisenberg", None, series)?;
    let tower = lift_tower(&heis, 3)?;
    println!("\nheisenberg over {}, target level 3:", series);
    println!(
        "  reached: {} at {} after {} steps",
        tower.reached(),
        tower.top().ring(),
        tower.steps().len()
    );

    let psl3 = catalog("psl", Some(3), ring)?;
    let tower = lift_tower(&psl3, 3)?;
    println!("\npsl(3) over {}, target level 3:", ring);
    println!("  reached: {}", tower.reached());
    if let Some(block) = tower.obstruction() {
        let nonzero = block.class().coords().iter().filter(|&&c| c != 0).count();
        println!(
            "  blocked at level {} -> {}: obstruction class has {nonzero} nonzero coordinates",
            block.at_level(),
            block.at_level() + 1
        );
    }
    Ok(())
}
