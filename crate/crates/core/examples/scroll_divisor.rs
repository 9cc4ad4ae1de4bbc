//! A general member of |3H - F| on S_{1,1,1} ⊂ P^5: image ideal, quadric
//! count, and the Main Theorem check over several general reductions.

use macaulay::cli::run_maintheorem_check;
use macaulay::geomzoo::{scroll_divisor_image, scroll_ideal, ScrollType};
use macaulay::scrollcalc::{divisor_degree, ScrollClass};

fn main() -> macaulay::Result<()> {
    let t = ScrollType::new(vec![1, 1, 1])?;
    let scroll = scroll_ideal(&t, 3)?;
    println!("{t}: {} quadrics", scroll.ideal.generators().len());

    let class = ScrollClass::new(3, -1);
    let x = scroll_divisor_image(&t, class, None, 3, 5, None)?;
    println!("{}: s = {:?}, degree {}", x.label, x.s, divisor_degree(&[1, 1, 1], class)?);
    println!("dim (I_X)_2 = {}", x.ideal.graded_piece(2)?.dim());
    for g in x.ideal.generators() {
        println!("  {g}");
    }

    let summary = run_maintheorem_check(&x, 0, 5)?;
    for t in &summary.trials {
        println!("trial {}: h = {:?}, {}", t.trial, t.h_vector, t.verdict);
    }
    println!("consensus: {:?}", summary.consensus);
    Ok(())
}
