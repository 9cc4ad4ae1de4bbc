use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use macaulay::apolar::{catalecticant, dual_generator, fermat_form, is_fermat_equivalent, perp_ideal, FermatOptions, FermatStatus};
use macaulay::linalg;
use macaulay::mpoly::{contract, monomials, parse_polynomial, Polynomial, Ring};

fn form(ring: Ring, nvars: usize, d: u32, coeffs: &[i64]) -> Polynomial {
    Polynomial::from_terms(
        ring,
        nvars,
        monomials(nvars, d)
            .into_iter()
            .zip(coeffs.iter().cycle())
            .map(|(e, &c)| (e, BigRational::from_integer(BigInt::from(c)))),
    )
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-5i64..=5, 1..40)
}

fn matrix(n: usize) -> impl Strategy<Value = Vec<Vec<BigRational>>> {
    prop::collection::vec(prop::collection::vec((-3i64..=3, 1i64..=2), n), n).prop_map(|rows| {
        rows.into_iter()
            .map(|r| r.into_iter().map(|(a, b)| BigRational::new(a.into(), b.into())).collect())
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn contraction_composes(n in 1usize..=3, d in 0u32..=5, a in 0u32..=2, b in 0u32..=2,
                            cf in coeffs(), cg in coeffs(), ch in coeffs()) {
        let f = form(Ring::S, n, d, &cf);
        let g = form(Ring::T, n, a, &cg);
        let h = form(Ring::T, n, b, &ch);
        let gh = g.try_mul(&h).unwrap();
        let lhs = contract(&gh, &f).unwrap();
        let rhs = contract(&g, &contract(&h, &f).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_round_trips(n in 1usize..=3, d in 1u32..=4, cf in coeffs(), m in matrix(3)) {
        let m: Vec<Vec<BigRational>> = m.into_iter().take(n).map(|r| r.into_iter().take(n).collect()).collect();
        prop_assume!(linalg::rank(&m) == n);
        let f = form(Ring::S, n, d, &cf);
        let g = f.substitute_linear(&m).unwrap();
        let back = g.substitute_linear(&linalg::inverse(&m).unwrap()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn catalecticant_ranks_are_symmetric(n in 1usize..=3, d in 1u32..=5, cf in coeffs()) {
        let f = form(Ring::S, n, d, &cf);
        prop_assume!(!f.is_zero());
        for j in 0..=d {
            prop_assert_eq!(catalecticant(&f, j).unwrap().rank, catalecticant(&f, d - j).unwrap().rank);
        }
    }

    #[test]
    fn perp_quotient_is_gorenstein(n in 1usize..=3, d in 1u32..=4, cf in coeffs()) {
        let f = form(Ring::S, n, d, &cf);
        prop_assume!(!f.is_zero());
        let perp = perp_ideal(&f, d + 1).unwrap();
        let h = perp.hilbert_values();
        prop_assert_eq!(h[d as usize + 1], 0);
        let top = &h[..=d as usize];
        prop_assert!(top.iter().eq(top.iter().rev()));
        prop_assert!(dual_generator(&perp, d).unwrap().is_proportional_to(&f));
    }

    #[test]
    fn fermat_verdict_is_invariant(m in matrix(3), d in 3u32..=4) {
        prop_assume!(linalg::rank(&m) == 3);
        let g = fermat_form(3, d).substitute_linear(&m).unwrap();
        let v = is_fermat_equivalent(&g, FermatOptions::default()).unwrap();
        prop_assert_eq!(v.status, FermatStatus::Fermat);
        let c = parse_polynomial("x0^2*x1 + x2^3").unwrap().substitute_linear(&m).unwrap();
        prop_assert_eq!(is_fermat_equivalent(&c, FermatOptions::default()).unwrap().status, FermatStatus::NotFermat);
    }

    #[test]
    fn display_parses_back(n in 1usize..=4, d in 0u32..=4, cf in coeffs(), den in 1i64..=6) {
        let f = form(Ring::S, n, d, &cf).scale(&BigRational::new(1.into(), den.into()));
        let text = f.to_string();
        let g = macaulay::mpoly::parse_polynomial_in(&text, Ring::S, n).unwrap();
        prop_assert_eq!(g, f);
    }
}
