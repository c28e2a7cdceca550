//! Quadratic Gauss sums g(p, c) = Σ ζ^{c·x²} and their quadratic coordinates.

use weilmin::exact_number::modular::legendre;
use weilmin::exact_number::{eps_p, gauss_sum, to_quadratic};

fn main() -> weilmin::Result<()> {
    for p in [3u32, 5, 7, 11, 13] {
        for c in [1, 2, 3] {
            if c % p as i64 == 0 {
                continue;
            }
            let g = gauss_sum(p, c)?;
            let value = to_quadratic(&g).expect("Gauss sums lie in Z[ω]");
            println!("p={p:>2} c={c} ({:+}) g = {g}", legendre(c, p));
            println!("          = {value}, g^2 = {}", eps_p(p));
        }
    }
    Ok(())
}
