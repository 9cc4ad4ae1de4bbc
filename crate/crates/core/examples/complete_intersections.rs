//! Complete intersections: s = -N - 1 + sum d_i, the socle degree s + n + 1,
//! and the Fermat test on their Macaulay polynomials.

use macaulay::apolar::{is_fermat_equivalent, FermatOptions};
use macaulay::artinian::artinian_reduction;
use macaulay::geomzoo::complete_intersection;

fn main() -> macaulay::Result<()> {
    for (degrees, n_ambient) in [(vec![2, 3], 4), (vec![3, 3], 4), (vec![2, 2, 2], 5), (vec![5], 3)] {
        let s = -(n_ambient as i64) - 1 + degrees.iter().sum::<u32>() as i64;
        let dim = n_ambient - degrees.len();
        let x = complete_intersection(&degrees, n_ambient, 1, (s + dim as i64 + 3) as u32)?;
        let r = artinian_reduction(&x, 0)?;
        let v = is_fermat_equivalent(&r.macaulay_polynomial, FermatOptions::default())?;
        println!(
            "{}: s = {s}, h = {:?}, socle {} , F in {} variables: {}",
            x.label,
            r.h_vector,
            r.socle_degree,
            r.macaulay_polynomial.nvars(),
            v.status
        );
    }
    Ok(())
}
