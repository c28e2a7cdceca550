//! Exact ⟨χ, χ⟩ over SL₂(F_p) for the minimal models, plus a few character
//! values and word decompositions.

use weilmin::descent::minimal_model;
use weilmin::sl2::{character_inner_product, enumerate, word_decompose, Evaluator};
use weilmin::QuadForm;

fn main() -> weilmin::Result<()> {
    for p in [5u64, 7, 11, 13] {
        for q in [QuadForm::q1(p)?, QuadForm::q2(p)?] {
            let m = minimal_model(&q)?;
            let ip = character_inner_product(&m.s, &m.t, 10_000)?;
            println!("p={p:>2} c={} <chi,chi> = {ip}", q.c());
        }
    }
    let m = minimal_model(&QuadForm::q1(7)?)?;
    let ev = Evaluator::new(&m.s, &m.t)?;
    for g in enumerate(7).into_iter().step_by(50) {
        println!("chi({g}) = {}   via {}", ev.character(&g)?, word_decompose(&g));
    }
    Ok(())
}
