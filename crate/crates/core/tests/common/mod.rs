#![allow(dead_code)]

pub mod float;

use weilmin::{Matrix, QuadCoord};

/// `(m + n·√εp)/2`.
pub fn h(p: u32, m: i64, n: i64) -> QuadCoord {
    QuadCoord::from_halves(p, m, n)
}

fn from_halves(p: u32, rows: &[&[(i64, i64)]]) -> Matrix<QuadCoord> {
    Matrix::from_rows(p, rows.iter().map(|r| r.iter().map(|&(m, n)| h(p, m, n)).collect()).collect()).unwrap()
}

/// Companion matrix with the given last column.
pub fn companion(p: u32, last: &[(i64, i64)]) -> Matrix<QuadCoord> {
    let n = last.len();
    Matrix::from_fn(p, n, n, |i, j| {
        if j == n - 1 {
            h(p, last[i].0, last[i].1)
        } else if i == j + 1 {
            QuadCoord::from_int(p, 1)
        } else {
            QuadCoord::from_int(p, 0)
        }
    })
}

/// Flips the sign of √εp in every `(m, n)` pair.
fn conj(rows: &[&[(i64, i64)]]) -> Vec<Vec<(i64, i64)>> {
    rows.iter().map(|r| r.iter().map(|&(m, n)| (m, -n)).collect()).collect()
}

type Halves = (i64, i64);

const Z: (i64, i64) = (0, 0);
const ONE: (i64, i64) = (2, 0);
const M1: (i64, i64) = (-2, 0);

const S7: [&[(i64, i64)]; 4] =
    [&[M1, (1, -1), Z, Z], &[(-1, -1), ONE, Z, Z], &[(1, -1), (1, 1), Z, M1], &[ONE, M1, ONE, Z]];
const T7: [(i64, i64); 4] = [M1, (1, -1), ONE, (1, 1)];

const S13: [&[(i64, i64)]; 7] = [
    &[(3, 1), (1, 1), Z, Z, Z, Z, Z],
    &[(-5, -1), (-3, -1), Z, Z, Z, Z, Z],
    &[(6, 2), (5, 1), Z, Z, Z, Z, M1],
    &[(-8, -2), (-5, -1), Z, Z, ONE, Z, Z],
    &[(6, 2), (3, 1), Z, ONE, Z, Z, Z],
    &[(-5, -1), (-1, -1), Z, Z, Z, M1, Z],
    &[(3, 1), ONE, M1, Z, Z, Z, Z],
];
const T13: [(i64, i64); 7] = [ONE, (-1, -1), (3, 1), (-5, -1), (5, 1), (-3, -1), (1, 1)];

/// Published minimal model `(S', T')` for `(p, c)` in
/// {(7, 1), (7, 3), (13, 1), (13, 2)}.
pub fn golden(p: u32, c: u32) -> (Matrix<QuadCoord>, Matrix<QuadCoord>) {
    let (s_rows, t_col): (&[&[Halves]], &[Halves]) = match p {
        7 => (&S7, &T7),
        13 => (&S13, &T13),
        _ => panic!("no golden model for p = {p}"),
    };
    let twisted = matches!((p, c), (7, 3) | (13, 2));
    if !twisted {
        return (from_halves(p, s_rows), companion(p, t_col));
    }
    let s = conj(s_rows);
    let s_refs: Vec<&[(i64, i64)]> = s.iter().map(|r| r.as_slice()).collect();
    let t: Vec<(i64, i64)> = t_col.iter().map(|&(m, n)| (m, -n)).collect();
    (from_halves(p, &s_refs), companion(p, &t))
}

pub const PRIMES_TO_23: [u64; 8] = [3, 5, 7, 11, 13, 17, 19, 23];
pub const PRIMES_5_TO_23: [u64; 7] = [5, 7, 11, 13, 17, 19, 23];
