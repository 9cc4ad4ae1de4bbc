//! The canonical genus-6 curve v_2(V(x^5 + y^5 + z^5)) ⊂ P^5: Artinian
//! reduction, h-vector 1, 4, 4, 1, and its Macaulay cubic.

use macaulay::artinian::artinian_reduction;
use macaulay::geomzoo::veronese_hypersurface_image;
use macaulay::mpoly::parse_polynomial;

fn main() -> macaulay::Result<()> {
    let f = parse_polynomial("x0^5 + x1^5 + x2^5")?;
    let x = veronese_hypersurface_image(&f, 2, 1, 5)?;
    println!("{}: {} generators, HF = {:?}", x.label, x.ideal.generators().len(), x.ideal.hilbert_values());
    for seed in 0..3 {
        let r = artinian_reduction(&x, seed)?;
        println!(
            "seed {seed}: h = {:?}, socle degree {} (s + n + 1 = {:?})",
            r.h_vector, r.socle_degree, r.predicted_socle_degree
        );
        println!("  F = {}", r.macaulay_polynomial);
    }
    Ok(())
}
