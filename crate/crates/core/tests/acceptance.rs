//! End-to-end acceptance run: one PASS/FAIL line per criterion.
//! Built with `harness = false`; exits nonzero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use common::float::worst_deviation;
use common::{golden, PRIMES_5_TO_23, PRIMES_TO_23};
use num_bigint::BigInt;
use num_rational::BigRational;
use weilmin::descent::{
    conjugated_model, galois_perm, minimal_model, ring_of_definition, verify_charpoly_factorization,
    verify_galois_conjugation, verify_integrality, verify_minimality, verify_theorem2, RingTag,
};
use weilmin::exact_number::modular::legendre;
use weilmin::exact_number::{eps_p, gauss_sum, to_quadratic};
use weilmin::format::ModelDoc;
use weilmin::heisenberg::verify_intertwining;
use weilmin::report::Report;
use weilmin::sl2::{character_table, inner_product_of_table};
use weilmin::weil::{check_relations, restrict_odd, weil_full};
use weilmin::{CycElt, ExactMatrix, QuadForm};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn both_forms(p: u64) -> [QuadForm; 2] {
    [QuadForm::q1(p).unwrap(), QuadForm::q2(p).unwrap()]
}

fn require(report: &Report, context: &str) -> Result<(), String> {
    match report.failures().next() {
        None => Ok(()),
        Some(c) => Err(format!("{context}: {} failed {:?} {:?}", c.name, c.detail, c.witness)),
    }
}

fn generate_json(args: &[&str]) -> Result<ModelDoc, String> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = ["weilmin", "generate"].into_iter().chain(args.iter().copied()).chain(["--format", "json"]);
    let code = weilmin::cli::run(argv, &mut out, &mut err);
    if code != 0 {
        return Err(format!("exit {code}: {}", String::from_utf8_lossy(&err)));
    }
    ModelDoc::from_json(&String::from_utf8(out).unwrap()).map_err(|e| e.to_string())
}

fn golden_case(p: u32, args: &[&str]) -> Result<(), String> {
    let doc = generate_json(args)?;
    let got = doc.quadratic().ok_or("entries are not quadratic")?;
    let want = golden(p, doc.c);
    if got != want {
        let (i, j) = got.0.first_difference(&want.0).or(got.1.first_difference(&want.1)).unwrap_or((0, 0));
        return Err(format!("{args:?} differs at ({i}, {j})"));
    }
    Ok(())
}

fn c1_golden_seven() -> Outcome {
    golden_case(7, &["-p", "7", "--form", "1"])?;
    golden_case(7, &["-p", "7", "--form", "2", "--c", "3"])?;
    Ok("S', T' exact for c = 1 and c = 3".into())
}

fn c2_golden_thirteen() -> Outcome {
    golden_case(13, &["-p", "13", "--form", "1"])?;
    golden_case(13, &["-p", "13", "--form", "2", "--c", "2"])?;
    Ok("S', T' exact for c = 1 and c = 2".into())
}

fn c3_integrality() -> Outcome {
    for p in PRIMES_5_TO_23 {
        for q in both_forms(p) {
            let w = conjugated_model(&q).map_err(|e| e.to_string())?;
            require(&verify_integrality(&[("S'", &w.s_prime), ("T'", &w.t_prime)]), &format!("p={p} c={}", q.c()))?;
        }
    }
    Ok("V^-1 S V and V^-1 T V integral for 5 <= p <= 23, both forms".into())
}

fn c4_minimality() -> Outcome {
    for p in PRIMES_5_TO_23 {
        for q in both_forms(p) {
            let w = conjugated_model(&q).map_err(|e| e.to_string())?;
            let rs = ring_of_definition(&w.s_prime).ring;
            let rt = ring_of_definition(&w.t_prime).ring;
            if rs != RingTag::QuadraticIntegers || rt != RingTag::QuadraticIntegers {
                return Err(format!("p={p} c={}: rings {rs} / {rt}", q.c()));
            }
            let named = [("S'", &w.s_prime), ("T'", &w.t_prime)];
            require(&verify_minimality(&named).map_err(|e| e.to_string())?, &format!("p={p} c={}", q.c()))?;
        }
    }
    Ok("ring = Z[(1+sqrt(eps p))/2] and tau-fixed for 5 <= p <= 23, both forms".into())
}

fn c5_theorem2() -> Outcome {
    let mut cycles = Vec::new();
    for p in PRIMES_5_TO_23 {
        for q in both_forms(p) {
            let cert = galois_perm(&q).map_err(|e| format!("p={p}: {e}"))?;
            if cert.perm[0] != 0 || q.r() % cert.order != 0 {
                return Err(format!("p={p} c={}: perm {:?} order {}", q.c(), cert.perm, cert.order));
            }
            let w = conjugated_model(&q).map_err(|e| e.to_string())?;
            require(&verify_theorem2(&w.even, &cert).map_err(|e| e.to_string())?, &format!("p={p} c={}", q.c()))?;
            if q.c() == 1 {
                cycles.push(format!("p={p}:{:?}", cert.cycle_type));
            }
        }
    }
    Ok(format!("P fixes 0, ord(P) | r, conjugation exact; cycle types {}", cycles.join(" ")))
}

fn c6_relations() -> Outcome {
    for p in PRIMES_TO_23 {
        for q in both_forms(p) {
            let ctx = format!("p={p} c={}", q.c());
            let full = weil_full(&q);
            let odd = restrict_odd(&full).map_err(|e| e.to_string())?;
            let w = conjugated_model(&q).map_err(|e| e.to_string())?;
            for (name, s, t) in [
                ("full", &full.s, &full.t),
                ("even", &w.even.s, &w.even.t),
                ("odd", &odd.s, &odd.t),
                ("conjugated", &w.s_prime, &w.t_prime),
            ] {
                require(&check_relations(s, t).map_err(|e| e.to_string())?, &format!("{ctx} {name}"))?;
            }
        }
    }
    Ok("S^4 = I, S^2 = (ST)^3, T^p = I on full, even, odd, conjugated for p <= 23".into())
}

fn c7_charpoly() -> Outcome {
    for p in PRIMES_TO_23 {
        for q in both_forms(p) {
            let w = conjugated_model(&q).map_err(|e| e.to_string())?;
            let report = verify_charpoly_factorization(&q, &w.t_prime).map_err(|e| e.to_string())?;
            require(&report, &format!("p={p} c={}", q.c()))?;
        }
    }
    Ok("char_poly(T') = prod (x - theta_j), companion column matches, p <= 23".into())
}

fn c8_gauss() -> Outcome {
    for p in PRIMES_TO_23 {
        let p = p as u32;
        let g1 = gauss_sum(p, 1).map_err(|e| e.to_string())?;
        for c in 1..p as i64 {
            let g = gauss_sum(p, c).map_err(|e| e.to_string())?;
            if &g * &g != CycElt::from_int(p, eps_p(p)) {
                return Err(format!("g({p},{c})^2 != eps p"));
            }
            if g != g1.scale_int(legendre(c, p) as i64) {
                return Err(format!("g({p},{c}) != ({c}|{p}) g({p},1)"));
            }
        }
    }
    let pos7 = r"2 \zeta_{7}^{4} + 2 \zeta_{7}^{2} + 2 \zeta_{7} + 1";
    let neg7 = r"-2 \zeta_{7}^{4} - 2 \zeta_{7}^{2} - 2 \zeta_{7} - 1";
    let neg13 = r"-2 \zeta_{13}^{11} - 2 \zeta_{13}^{8} - 2 \zeta_{13}^{7} - 2 \zeta_{13}^{6} - 2 \zeta_{13}^{5} - 2 \zeta_{13}^{2} - 1";
    let pos13 = r"2 \zeta_{13}^{11} + 2 \zeta_{13}^{8} + 2 \zeta_{13}^{7} + 2 \zeta_{13}^{6} + 2 \zeta_{13}^{5} + 2 \zeta_{13}^{2} + 1";
    for (p, c, latex, value) in
        [(7, 1, pos7, "sqrt(-7)"), (7, 3, neg7, "-sqrt(-7)"), (13, 1, neg13, "sqrt(13)"), (13, 2, pos13, "-sqrt(13)")]
    {
        let g = gauss_sum(p, c).unwrap();
        let quad = to_quadratic(&g).map_err(|e| e.to_string())?.to_string();
        if g.to_latex() != latex || quad != value {
            return Err(format!("g({p},{c}) = {} = {quad}", g.to_latex()));
        }
    }
    Ok("g^2 = eps p and g(p,c) = (c|p) g(p,1) for all p <= 23, all c; four worked values verbatim".into())
}

fn c9_characters() -> Outcome {
    let one = BigRational::from_integer(BigInt::from(1));
    for p in [5u64, 7, 11, 13] {
        for q in both_forms(p) {
            let ctx = format!("p={p} c={}", q.c());
            let m = minimal_model(&q).map_err(|e| e.to_string())?;
            let table = character_table(&m.s, &m.t, 10_000).map_err(|e| e.to_string())?;
            let ip = inner_product_of_table(&table).map_err(|e| e.to_string())?;
            if ip != one {
                return Err(format!("{ctx}: <chi,chi> = {ip}"));
            }
            let degree = table.iter().find(|(g, _)| g.is_identity()).unwrap().1;
            if degree.b != 0 || degree.a != (p as i64 + 1) / 2 {
                return Err(format!("{ctx}: chi(1) = {degree}"));
            }
            // Character values from the cyclotomic even model, recognized in Z[ω].
            let w = conjugated_model(&q).map_err(|e| e.to_string())?;
            let even = character_table(&w.even.s, &w.even.t, 10_000).map_err(|e| e.to_string())?;
            for ((g, x), (_, y)) in even.iter().zip(&table) {
                match to_quadratic(x) {
                    Ok(v) if v == *y => {}
                    Ok(v) => return Err(format!("{ctx}: chi({g}) = {v} vs {y}")),
                    Err(why) => return Err(format!("{ctx}: chi({g}) = {x} is {why}")),
                }
            }
        }
    }
    Ok("<chi,chi> = 1, chi(1) = (p+1)/2, values in Z[omega] for p in {5, 7, 11, 13}, both forms".into())
}

fn c10_intertwining() -> Outcome {
    for p in [5u64, 7, 13] {
        for q in both_forms(p) {
            let full = weil_full(&q);
            let report = verify_intertwining(&q, &full.s, &full.t).map_err(|e| e.to_string())?;
            require(&report, &format!("p={p} c={}", q.c()))?;
        }
    }
    Ok("S sigma(h) = sigma(psi_s h) S and T sigma(h) = sigma(psi_t h) T on generators, p in {5, 7, 13}".into())
}

fn c11_float_oracle() -> Outcome {
    let mut worst = (0.0f64, "none", 0u64);
    for p in PRIMES_TO_23 {
        for q in both_forms(p) {
            let (err, name) = worst_deviation(&q);
            if err > worst.0 {
                worst = (err, name, p);
            }
        }
    }
    if worst.0 < 1e-9 {
        Ok(format!("max deviation {:.2e} ({} at p={})", worst.0, worst.1, worst.2))
    } else {
        Err(format!("deviation {:e} in {} at p={}", worst.0, worst.1, worst.2))
    }
}

fn c12_negative_controls() -> Outcome {
    let q = QuadForm::q1(7).unwrap();
    let w = conjugated_model(&q).unwrap();
    let t2 = w.even.t.mul(&w.even.t).unwrap();
    let rel = check_relations(&w.even.s, &t2).unwrap();
    if rel.get("S^2=(ST)^3").is_none_or(|c| c.passed()) {
        return Err("T -> T^2 did not break S^2 = (ST)^3".into());
    }
    let ident = verify_galois_conjugation(&w.even, &ExactMatrix::identity(7, 4)).unwrap();
    if ident.all_passed() {
        return Err("P -> I did not break the Galois conjugation check".into());
    }
    let mut bad = w.t_prime.clone();
    bad.set(2, 3, CycElt::from_rational(7, &BigRational::new(BigInt::from(1), BigInt::from(3))));
    let verdict = ring_of_definition(&bad);
    match verdict.witness {
        Some(wt) if verdict.ring == RingTag::Other && (wt.row, wt.col) == (2, 3) => {}
        other => return Err(format!("non-integral entry misreported: {:?} {other:?}", verdict.ring)),
    }
    if ring_of_definition(&w.even.s).ring != RingTag::CyclotomicIntegersInvP {
        return Err("unconjugated S not reported over Z[1/p, zeta_p]".into());
    }
    Ok("T^2 breaks relations, P = I breaks conjugation, 1/3 entry reported with witness (2, 3)".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("golden matrices p=7", c1_golden_seven),
        ("golden matrices p=13", c2_golden_thirteen),
        ("integrality over Z[zeta_p]", c3_integrality),
        ("minimality over Z[omega]", c4_minimality),
        ("Galois permutation conjugation", c5_theorem2),
        ("presentation relations", c6_relations),
        ("char-poly factorization", c7_charpoly),
        ("Gauss sums", c8_gauss),
        ("irreducibility and character field", c9_characters),
        ("Heisenberg intertwining", c10_intertwining),
        ("float oracle", c11_float_oracle),
        ("negative controls", c12_negative_controls),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {:>2} {name} [{secs:.2}s]: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {:>2} {name} [{secs:.2}s]: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
