//! Round-trips algebras through the JSON document format and shows the
//! diagnostics a malformed document produces.

use lieobstruct::catalog::catalog;
use lieobstruct::document::{from_document, parse_document, render_document, to_document};
use lieobstruct::{RingFamily, RingSpec};

fn main() -> lieobstruct::Result<()> {
    let ring = RingSpec::new(RingFamily::PadicQuotient, 3, 2)?;
    let heis = catalog("heisenberg", None, ring)?;
    let doc = to_document(&heis);
    let text = render_document(&doc);
    println!("heisenberg over {} as a document:\n{text}", ring);

    let reparsed = from_document(&parse_document(&text)?)?;
    println!("parse(render(algebra)) == algebra: {}\n", reparsed == heis);

    // Series coefficients are written as digit lists, one digit per power of x.
    let series = RingSpec::new(RingFamily::PowerSeriesQuotient, 2, 2)?;
    let sl2 = catalog("sl", Some(2), series)?;
    println!("sl(2) over {}:\n{}", series, render_document(&to_document(&sl2)));

    let complaints = [
        // Coefficient out of range for Z/9.
        r#"{"family":"padic","p":3,"k":2,"n":2,"brackets":[{"i":0,"j":1,"coeffs":[9,0]}]}"#,
        // Pair listed twice.
        r#"{"family":"padic","p":3,"k":1,"n":2,"brackets":[{"i":0,"j":1,"coeffs":[1,0]},{"i":0,"j":1,"coeffs":[2,0]}]}"#,
        // Lower-triangular index.
        r#"{"family":"padic","p":3,"k":1,"n":2,"brackets":[{"i":1,"j":0,"coeffs":[1,0]}]}"#,
        // Digit list handed to the integer family.
        r#"{"family":"padic","p":3,"k":2,"n":2,"brackets":[{"i":0,"j":1,"coeffs":[[1,1],0]}]}"#,
        // Structure constants that fail the Jacobi identity.
        r#"{"family":"padic","p":5,"k":1,"n":3,"brackets":[{"i":0,"j":1,"coeffs":[0,0,1]},{"i":0,"j":2,"coeffs":[1,0,0]},{"i":1,"j":2,"coeffs":[0,1,0]}]}"#,
    ];
    println!("diagnostics:");
    for text in complaints {
        let outcome = parse_document(text).and_then(|doc| from_document(&doc).map(|_| ()));
        match outcome {
            Err(e) => println!("  {e}"),
            Ok(()) => println!("  unexpectedly accepted: {text}"),
        }
    }
    Ok(())
}
