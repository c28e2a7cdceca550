//! Builds the full, even and odd Weil models and checks the SL₂ relations.

use std::env;

use weilmin::weil::{restrict_even, restrict_odd, weil_full};
use weilmin::QuadForm;

fn main() -> weilmin::Result<()> {
    let p: u64 = env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    let q = QuadForm::q1(p)?;
    let full = weil_full(&q);
    let even = restrict_even(&full)?;
    let odd = restrict_odd(&full)?;
    for m in [&full, &even, &odd] {
        println!("{} model, dimension {}", m.series, m.dim());
        print!("{}", m.check_relations()?);
    }
    println!("even S =\n{}", even.s.to_latex());
    Ok(())
}
