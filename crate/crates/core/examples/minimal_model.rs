//! The minimal integral model over Z[(1 + √εp)/2] for both principal-series
//! characters, as text, LaTeX and JSON.

use std::env;

use weilmin::descent::minimal_model;
use weilmin::format::{minimal_latex, minimal_text, ModelDoc};
use weilmin::QuadForm;

fn main() -> weilmin::Result<()> {
    let p: u64 = env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    for q in [QuadForm::q1(p)?, QuadForm::q2(p)?] {
        let m = minimal_model(&q)?;
        println!("{}", minimal_text(&m));
        println!("{}", minimal_latex(&m));
    }
    let doc = ModelDoc::from_minimal(&minimal_model(&QuadForm::q1(p)?)?);
    println!("{}", doc.to_json());
    Ok(())
}
