//! Floating-point rebuild of every model through the complex embedding
//! ζ_p ↦ exp(2πi/p), for comparison against the exact matrices.

use nalgebra::DMatrix;
use num_complex::Complex64;
use weilmin::descent::conjugated_model;
use weilmin::weil::{restrict_odd, weil_full};
use weilmin::{ExactMatrix, QuadForm};

type CMat = DMatrix<Complex64>;

fn zeta(p: u32, k: i64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / p as f64)
}

pub fn embed(m: &ExactMatrix) -> CMat {
    CMat::from_fn(m.rows(), m.cols(), |i, j| {
        let (re, im) = m.get(i, j).to_complex();
        Complex64::new(re, im)
    })
}

pub fn max_error(exact: &ExactMatrix, float: &CMat) -> f64 {
    assert_eq!((exact.rows(), exact.cols()), float.shape());
    (embed(exact) - float).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Restriction to the ±-symmetric subspace via explicit basis matrices.
fn restrict(full: &CMat, p: usize, odd: bool) -> CMat {
    let (start, dim) = if odd { (1, (p - 1) / 2) } else { (0, p.div_ceil(2)) };
    let sign = if odd { -1.0 } else { 1.0 };
    let basis = CMat::from_fn(p, dim, |row, col| {
        let j = col + start;
        if j == 0 {
            Complex64::new((row == 0) as u8 as f64, 0.0)
        } else if row == j {
            Complex64::new(1.0, 0.0)
        } else if row == p - j {
            Complex64::new(sign, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let pick = CMat::from_fn(dim, p, |row, col| Complex64::new((col == row + start) as u8 as f64, 0.0));
    pick * full * basis
}

/// Largest entrywise deviation over the full, even, odd and conjugated
/// models and the Vandermonde matrix, with the name of the worst matrix.
pub fn worst_deviation(q: &QuadForm) -> (f64, &'static str) {
    let p = q.p();
    let n = p as usize;
    let c = q.c() as i64;
    let g: Complex64 = (0..n as i64).map(|x| zeta(p, c * x * x)).sum();
    let s_full = CMat::from_fn(n, n, |j, k| zeta(p, -2 * c * (j * k) as i64) / g);
    let t_full =
        CMat::from_fn(n, n, |j, k| if j == k { zeta(p, c * (j * j) as i64) } else { Complex64::new(0.0, 0.0) });
    let s_even = restrict(&s_full, n, false);
    let t_even = restrict(&t_full, n, false);
    let s_odd = restrict(&s_full, n, true);
    let t_odd = restrict(&t_full, n, true);
    let r1 = n.div_ceil(2);
    let v = CMat::from_fn(r1, r1, |j, k| zeta(p, c * (j * j * k) as i64));
    let v_inv = v.clone().try_inverse().expect("Vandermonde on distinct nodes");
    let s_prime = &v_inv * &s_even * &v;
    let t_prime = &v_inv * &t_even * &v;

    let full = weil_full(q);
    let odd = restrict_odd(&full).unwrap();
    let w = conjugated_model(q).unwrap();
    let v_exact_inv = w.v.inverse().unwrap();
    let pairs: [(&'static str, &ExactMatrix, &CMat); 11] = [
        ("S", &full.s, &s_full),
        ("T", &full.t, &t_full),
        ("S_even", &w.even.s, &s_even),
        ("T_even", &w.even.t, &t_even),
        ("S_odd", &odd.s, &s_odd),
        ("T_odd", &odd.t, &t_odd),
        ("V", &w.v, &v),
        ("V^-1", &v_exact_inv, &v_inv),
        ("S'", &w.s_prime, &s_prime),
        ("T'", &w.t_prime, &t_prime),
        ("g", &ExactMatrix::diagonal(p, vec![q.gauss_sum()]), &CMat::from_element(1, 1, g)),
    ];
    pairs
        .iter()
        .map(|(name, e, f)| (max_error(e, f), *name))
        .fold((0.0, "none"), |acc, x| if x.0 > acc.0 { x } else { acc })
}
