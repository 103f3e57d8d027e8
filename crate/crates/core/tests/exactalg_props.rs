mod common;

use common::*;
use mcarma_core::exactalg::*;
use proptest::prelude::*;

fn poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(-9i64..=9, 0..=max_deg + 1).prop_map(|c| Poly::from_ints(&c))
}

fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=50).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn divides(d: &Poly, p: &Poly) -> bool {
    p.divrem(d).unwrap().1.is_zero()
}

proptest! {
    #[test]
    fn rational_field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if let Some(inv) = b.recip() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
            prop_assert!((&b * &inv).is_one());
        }
        let text = a.to_string();
        prop_assert_eq!(text.parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn poly_ring_laws(a in poly(5), b in poly(5), c in poly(5)) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b), &(&b * &a));
        let z = Rational::new(7, 3).unwrap();
        prop_assert_eq!((&a * &b).eval(&z), &a.eval(&z) * &b.eval(&z));
    }

    #[test]
    fn divrem_reconstructs(a in poly(7), b in nonzero_poly(4)) {
        let (q, r) = a.divrem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_and_lcm(a in nonzero_poly(5), b in nonzero_poly(5), common in nonzero_poly(2)) {
        let a = &a * &common;
        let b = &b * &common;
        let g = gcd(&a, &b).unwrap();
        prop_assert!(g.is_monic());
        prop_assert!(divides(&g, &a) && divides(&g, &b));
        prop_assert!(divides(&common.monic(), &g));
        let l = lcm(&a, &b).unwrap();
        prop_assert!(divides(&a, &l) && divides(&b, &l));
        prop_assert_eq!(&g * &l, (&a * &b).monic());
    }

    #[test]
    fn rational_matrix_reduce_is_idempotent(
        entries in prop::collection::vec(poly(3), 4),
        den in nonzero_poly(3),
        factor in nonzero_poly(2),
    ) {
        let num = PolyMatrix::from_vec(2, 2, entries).unwrap();
        let h = ratmat_reduce(&num, &den).unwrap();
        let again = ratmat_reduce(h.common_num(), h.common_den()).unwrap();
        prop_assert!(ratmat_equal(&h, &again));
        prop_assert!(h.common_den().is_monic());
        // a shared factor cancels
        let scaled = ratmat_reduce(&num.scale_poly(&factor), &(&den * &factor)).unwrap();
        prop_assert!(ratmat_equal(&h, &scaled));
        for e in h.entries() {
            prop_assert!(e.den().is_monic());
            if !e.num().is_zero() {
                prop_assert!(gcd(e.num(), e.den()).unwrap().degree() == Some(0));
            }
        }
    }
}

#[test]
fn resolvent_adjugate_identity() {
    let mut rng = rng(31);
    for _ in 0..200 {
        let n = rand::Rng::random_range(&mut rng, 1..=6);
        let a = rand_matrix(&mut rng, n, n);
        let res = Resolvent::new(&a).unwrap();
        let z_minus_a =
            PolyMatrix::from_coeff_matrices(&[a.neg(), RatMatrix::identity(n)]).unwrap();
        assert_eq!(
            z_minus_a.mul(&res.adjugate()).unwrap(),
            PolyMatrix::scalar(n, &res.charpoly)
        );
        assert!(res.charpoly.is_monic());
        assert_eq!(res.charpoly.degree(), Some(n));
        let sign = if n % 2 == 0 {
            Rational::one()
        } else {
            -Rational::one()
        };
        assert_eq!(res.charpoly.coeff(0), sign * bareiss_det(&a));
        // trace identity: c_{N-1} = −tr A
        assert_eq!(res.charpoly.coeff(n - 1), -a.trace());
    }
}
