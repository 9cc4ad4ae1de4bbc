//! Divisor classes on P(E) over P^1: canonical class, crepant classes and
//! integral total transforms on a scroll whose vertex has codimension 2.

use macaulay::scrollcalc::{
    canonical_class, crepant_divisor_class, integral_total_transform, scroll_invariants, CrepantClass,
};

fn main() -> macaulay::Result<()> {
    for exps in [vec![1, 1, 1], vec![1, 1, 2], vec![0, 0, 3], vec![0, 0, 1, 1]] {
        let inv = scroll_invariants(&exps)?;
        let k = canonical_class(inv.k, inv.n_ambient)?;
        println!("S{exps:?}: k = {}, f = {}, N = {}, K = {k}", inv.k, inv.f, inv.n_ambient);
        for s in -1..=2 {
            match crepant_divisor_class(s, inv.k, inv.n_ambient) {
                Ok(r) => match r.class {
                    CrepantClass::Divisor { class } => println!("  s = {s}: Y ~ {class}"),
                    CrepantClass::Hypersurface { degree } => println!("  s = {s}: hypersurface of degree {degree}"),
                },
                Err(e) => println!("  s = {s}: {e}"),
            }
        }
        if inv.exceptional_regime() {
            for d in [1, 4, 7, -2] {
                let t = integral_total_transform(d, inv.f)?;
                print!("  d = {d}: X* ~ {}", t.class);
                if let Some(alt) = t.alternative {
                    print!(" ~ {alt}");
                }
                println!(", Y + {} E ~ {}", t.n_q, t.via_exceptional);
            }
        }
    }
    Ok(())
}
