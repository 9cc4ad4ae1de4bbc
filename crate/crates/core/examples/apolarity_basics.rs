//! Contraction, the apolar pairing, and Waring decompositions checked
//! against point sets.

use macaulay::apolar::verify_apolarity;
use macaulay::mpoly::{contract, pair, parse_polynomial, LinearForm};

fn main() -> macaulay::Result<()> {
    let op = parse_polynomial("d0*d1")?;
    let f = parse_polynomial("x0^2*x1 + x1^3")?;
    println!("{op} . ({f}) = {}", contract(&op, &f)?);

    let g = parse_polynomial("x0*x1")?;
    let dg = parse_polynomial("d0*d1")?;
    println!("<d0*d1, x0*x1> = {}", pair(&dg, &g)?);

    // x0^3 + x1^3 + (x0 + x1)^3 is apolar to the three points below
    let h = parse_polynomial("2*x0^3 + 3*x0^2*x1 + 3*x0*x1^2 + 2*x1^3")?;
    let points = [LinearForm::from_ints(&[1, 0]), LinearForm::from_ints(&[0, 1]), LinearForm::from_ints(&[1, 1])];
    let check = verify_apolarity(&points, &h)?;
    let coefficients: Vec<String> = check.coefficients.unwrap_or_default().iter().map(|x| x.to_string()).collect();
    println!("apolar: {}, coefficients: {}", check.apolar, coefficients.join(", "));
    Ok(())
}
