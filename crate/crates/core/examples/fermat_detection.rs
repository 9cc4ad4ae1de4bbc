//! Decide Fermat-equivalence of a few forms, with the witness substitution
//! when it is rational.

use macaulay::apolar::{is_fermat_equivalent, FermatOptions};
use macaulay::mpoly::parse_polynomial;

fn main() -> macaulay::Result<()> {
    let forms = [
        "x0^3 + x1^3 + x2^3",
        "8*x0^3 + 12*x0^2*x1 + 6*x0*x1^2 + 2*x1^3 + x2^3",
        "x0^3 + 6*x0*x1^2",
        "x0^2*x1 + x2^3",
        "x0^4 + x0^2*x1^2 + x1^4",
    ];
    for text in forms {
        let f = parse_polynomial(text)?;
        let v = is_fermat_equivalent(&f, FermatOptions::default())?;
        println!("{text}\n  {}: {}", v.status, v.certificate);
        if let Some(u) = &v.witness {
            println!("  F(Ux) = {}", f.substitute_linear(u)?);
        }
    }
    Ok(())
}
