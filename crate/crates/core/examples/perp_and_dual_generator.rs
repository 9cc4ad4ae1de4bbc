//! F^perp, the Hilbert function of the apolar algebra, and recovery of F
//! from its annihilator.

use macaulay::apolar::{catalecticant, dual_generator, perp_ideal};
use macaulay::mpoly::parse_polynomial;

fn main() -> macaulay::Result<()> {
    let f = parse_polynomial("x0^3 + x1^3 + x2^3 + 6*x0*x1*x2")?;
    let d = 3;
    for j in 0..=d {
        println!("rank Cat_{j} = {}", catalecticant(&f, j)?.rank);
    }
    let perp = perp_ideal(&f, d + 1)?;
    println!("HF(T/F^perp) = {:?}", perp.hilbert_values());
    println!("quadrics in F^perp:");
    for q in &perp.graded_piece(2)?.basis {
        println!("  {q}");
    }
    let g = dual_generator(&perp, d)?;
    println!("dual generator: {g}");
    println!("proportional to F: {}", g.is_proportional_to(&f));
    Ok(())
}
