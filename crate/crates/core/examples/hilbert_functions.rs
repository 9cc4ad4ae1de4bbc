//! Hilbert functions of ideals read from text, Artinian quotients by linear
//! forms, and ideals of points.

use macaulay::apolar::points_ideal;
use macaulay::gradedideal::parse_ideal_text;
use macaulay::mpoly::LinearForm;

fn main() -> macaulay::Result<()> {
    let cubic = parse_ideal_text("x0*x2 - x1^2\nx0*x3 - x1*x2\nx1*x3 - x2^2\n", None, 5)?;
    println!("twisted cubic: {:?}", cubic.hilbert_values());
    let forms = [LinearForm::from_ints(&[1, 2, 0, -1]), LinearForm::from_ints(&[0, 1, 3, 1])];
    let artinian = cubic.quotient_by_linear_forms(&forms)?;
    println!("after cutting by two forms: {:?}", artinian.hilbert_values());
    println!("{}", serde_json::to_string(&artinian.hilbert_record()).expect("serializable"));

    let pts = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]].map(|p| LinearForm::from_ints(&p));
    let ideal = points_ideal(&pts, 4)?;
    println!("four general points in P^2: {:?}", ideal.hilbert_values());
    for g in ideal.generators() {
        println!("  {g}");
    }
    Ok(())
}
