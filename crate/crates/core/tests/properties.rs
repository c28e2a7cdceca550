use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use weilmin::exact_number::modular::{legendre, mod_inv};
use weilmin::exact_number::{gauss_sum, to_quadratic};
use weilmin::heisenberg::{heis_inv, heis_mul, psi_s, psi_t, HeisElt};
use weilmin::sl2::{word_decompose, Sl2Elt};
use weilmin::{CycElt, ExactMatrix, GaloisElt, Matrix, QuadCoord, QuadForm};

fn prime() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![3u32, 5, 7, 11, 13])
}

fn elt_for(p: u32) -> impl Strategy<Value = CycElt> {
    prop::collection::vec((-6i64..=6, 1i64..=4), (p - 1) as usize).prop_map(move |cs| {
        let coeffs: Vec<BigRational> =
            cs.into_iter().map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d))).collect();
        CycElt::from_coeffs(p, &coeffs).unwrap()
    })
}

fn triple() -> impl Strategy<Value = (CycElt, CycElt, CycElt)> {
    prime().prop_flat_map(|p| (elt_for(p), elt_for(p), elt_for(p)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms((x, y, w) in triple()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &w, &x * &(&y * &w));
        prop_assert_eq!(&x * &(&y + &w), &(&x * &y) + &(&x * &w));
        prop_assert!((&x - &x).is_zero());
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn galois_action_is_a_ring_homomorphism((x, y, _w) in triple(), j in 1i64..40) {
        let p = x.p();
        prop_assume!(j % p as i64 != 0);
        let g = GaloisElt::new(p, j).unwrap();
        prop_assert_eq!(g.apply(&(&x * &y)).unwrap(), &g.apply(&x).unwrap() * &g.apply(&y).unwrap());
        prop_assert_eq!(g.apply(&(&x + &y)).unwrap(), &g.apply(&x).unwrap() + &g.apply(&y).unwrap());
    }

    #[test]
    fn cyclotomic_json_round_trip(x in prime().prop_flat_map(elt_for)) {
        let text = serde_json::to_string(&x).unwrap();
        let back: CycElt = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn quadratic_coordinates_round_trip(p in prime(), a in -50i64..50, b in -50i64..50, a2 in -50i64..50, b2 in -50i64..50) {
        let x = QuadCoord::new(p, a, b).unwrap();
        let y = QuadCoord::new(p, a2, b2).unwrap();
        prop_assert_eq!(to_quadratic(&x.to_cyc()).unwrap(), x);
        prop_assert_eq!(x.mul(&y).to_cyc(), &x.to_cyc() * &y.to_cyc());
        prop_assert_eq!(x.add(&y).to_cyc(), &x.to_cyc() + &y.to_cyc());
        prop_assert_eq!(x.conjugate().to_cyc(), GaloisElt::generator(p).apply(&x.to_cyc()).unwrap());
        let text = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<QuadCoord>(&text).unwrap(), x);
    }

    #[test]
    fn gauss_sum_square_and_sign(p in prime(), c in 1i64..200) {
        prop_assume!(c % p as i64 != 0);
        let g = gauss_sum(p, c).unwrap();
        let eps_p = weilmin::exact_number::eps_p(p);
        prop_assert_eq!(&g * &g, CycElt::from_int(p, eps_p));
        let g1 = gauss_sum(p, 1).unwrap();
        prop_assert_eq!(g, g1.scale_int(legendre(c, p) as i64));
    }

    #[test]
    fn legendre_is_multiplicative(p in prime(), a in 1i64..500, b in 1i64..500) {
        prop_assert_eq!(legendre(a * b, p), legendre(a, p) * legendre(b, p));
    }

    #[test]
    fn matrix_inverse(p in prop::sample::select(vec![3u32, 5]), n in 1usize..4, seed in prop::collection::vec(-3i64..=3, 48)) {
        let entries: Vec<CycElt> = (0..n * n)
            .map(|i| {
                let counts: Vec<i64> = (0..p as usize).map(|k| seed[(i * p as usize + k) % seed.len()]).collect();
                CycElt::from_exponent_counts(p, &counts)
            })
            .collect();
        let a = ExactMatrix::new(p, n, n, entries).unwrap();
        match a.inverse() {
            Ok(inv) => {
                prop_assert!(a.mul(&inv).unwrap().is_identity());
                prop_assert!(inv.mul(&a).unwrap().is_identity());
            }
            Err(weilmin::Error::Singular) => {
                let poly = a.char_poly().unwrap();
                prop_assert!(poly.coeffs()[0].is_zero());
            }
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn heisenberg_automorphisms(p in prop::sample::select(vec![5u64, 7, 11]), c in 1i64..5,
                                l1 in 0i64..11, x1 in 0i64..11, y1 in 0i64..11,
                                l2 in 0i64..11, x2 in 0i64..11, y2 in 0i64..11) {
        prop_assume!(c % p as i64 != 0);
        let q = QuadForm::new(p, c).unwrap();
        let h1 = HeisElt::new(&q, l1, x1, y1);
        let h2 = HeisElt::new(&q, l2, x2, y2);
        let prod = heis_mul(&q, &h1, &h2);
        prop_assert_eq!(heis_mul(&q, &h1, &heis_inv(&q, &h1)), HeisElt::identity(&q));
        for psi in [psi_s, psi_t] {
            prop_assert_eq!(psi(&q, &prod), heis_mul(&q, &psi(&q, &h1), &psi(&q, &h2)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn word_round_trip_large_primes(p in prop::sample::select(vec![11u32, 13]), a in 0u32..13, c in 0u32..13, free in 0u32..13) {
        let (a, c, free) = (a % p, c % p, free % p);
        prop_assume!(a != 0 || c != 0);
        // Complete (a, c) to a determinant-one matrix using the free entry.
        let (b, d) = if a != 0 {
            (free, (1 + free * c) % p * mod_inv(a, p).unwrap() % p)
        } else {
            (p - mod_inv(c, p).unwrap(), free)
        };
        let g = Sl2Elt::new(p as u64, a as i64, b as i64, c as i64, d as i64).unwrap();
        let w = word_decompose(&g);
        prop_assert_eq!(w.eval(), g);
        prop_assert_eq!(g.mul(&g.inv()), Sl2Elt::identity(g.p));
    }
}

#[test]
fn identity_matrix_is_its_own_inverse() {
    let i = Matrix::<CycElt>::identity(7, 4);
    assert_eq!(i.inverse().unwrap(), i);
}
