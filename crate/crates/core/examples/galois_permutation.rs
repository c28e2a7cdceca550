//! The permutation P with τ(V) = P·V, and the resulting relation
//! τ(ξ(g)) = P·ξ(g)·P⁻¹ on the principal-series model.

use weilmin::descent::{conjugated_model, galois_perm, verify_galois_conjugation, verify_theorem2};
use weilmin::{ExactMatrix, QuadForm};

fn main() -> weilmin::Result<()> {
    for p in [5u64, 7, 11, 13, 17, 19, 23] {
        let q = QuadForm::q1(p)?;
        let cert = galois_perm(&q)?;
        let w = conjugated_model(&q)?;
        let report = verify_theorem2(&w.even, &cert)?;
        println!(
            "p={p:>2} perm={:?} order={} cycles={:?} conjugation {}",
            cert.perm,
            cert.order,
            cert.cycle_type,
            if report.all_passed() { "holds" } else { "FAILS" }
        );
    }
    // The identity is not a valid replacement for P.
    let q = QuadForm::q1(7)?;
    let w = conjugated_model(&q)?;
    print!("with P = I:\n{}", verify_galois_conjugation(&w.even, &ExactMatrix::identity(7, 4))?);
    Ok(())
}
