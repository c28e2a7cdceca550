//! Conjugates the cuspidal model by the Vandermonde matrix of its own
//! T-eigenvalues and reports the ring the entries land in.

use weilmin::descent::explore_cuspidal;
use weilmin::QuadForm;

fn main() -> weilmin::Result<()> {
    for p in [5u64, 7, 11, 13] {
        for q in [QuadForm::q1(p)?, QuadForm::q2(p)?] {
            let (s, t) = explore_cuspidal(&q)?;
            println!("p={p:>2} c={}: S' over {}, T' over {}", q.c(), s.ring.describe(q.p()), t.ring.describe(q.p()));
            if let Some(w) = s.witness {
                println!("        e.g. {}({}, {}) = {}", w.matrix, w.row, w.col, w.value);
            }
        }
    }
    Ok(())
}
