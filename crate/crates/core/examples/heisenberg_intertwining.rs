//! The Schrödinger representation σ of the Heisenberg group and the
//! intertwining identities S·σ(h) = σ(ψ_s h)·S, T·σ(h) = σ(ψ_t h)·T.

use weilmin::heisenberg::{psi_s, psi_t, sigma_matrix, verify_intertwining, HeisElt};
use weilmin::weil::weil_full;
use weilmin::QuadForm;

fn main() -> weilmin::Result<()> {
    let q = QuadForm::q1(5)?;
    for h in HeisElt::generators(&q) {
        println!("h = {h:?}\n  psi_s(h) = {:?}\n  psi_t(h) = {:?}", psi_s(&q, &h), psi_t(&q, &h));
    }
    let h = HeisElt::new(&q, 1, 2, 3);
    println!("sigma{:?} =\n{}", (h.lam, h.x, h.y), sigma_matrix(&q, &h).to_latex());
    for p in [5u64, 7, 13] {
        for q in [QuadForm::q1(p)?, QuadForm::q2(p)?] {
            let full = weil_full(&q);
            let report = verify_intertwining(&q, &full.s, &full.t)?;
            println!("p={p:>2} c={} intertwining {}", q.c(), if report.all_passed() { "holds" } else { "FAILS" });
        }
    }
    Ok(())
}
