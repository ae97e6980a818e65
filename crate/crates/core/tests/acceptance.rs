//! The acceptance gate: one line per criterion, nonzero exit if any fails.

mod common;

use std::collections::HashSet;
use std::time::{Duration, Instant};

use polyldc::algebra::{enumerate_monoids, verify_linear_bialgebra};
use polyldc::closure::{close, coclose};
use polyldc::cores::{in_core, star_map, star_obj, verify_core_membership, Side};
use polyldc::duality::{
    canonical_dual, cyclic_pairs, phi, psi, search_duals, verify_dual_pair, verify_mix_eta_epsilon,
    verify_retract_section,
};
use polyldc::monoidal::{substitute, tensor};
use polyldc::polycore::{enumerate_homs, hom_count, polynomials_within};
use polyldc::suites::{run_suite, SuiteOptions};
use polyldc::{FiniteSet, Polynomial, Result};

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn hom_count_reproduction() -> Outcome {
    let p = Polynomial::new(vec![3, 2]);
    let q = Polynomial::new(vec![1, 2]);
    let n = lib(hom_count(&p, &q))?;
    ensure(n == 72, || format!("homCount is {n}"))?;
    let maps = lib(enumerate_homs(&p, &q))?;
    let distinct: HashSet<_> = maps.iter().collect();
    ensure(maps.len() == 72 && distinct.len() == 72, || {
        format!("{} maps, {} distinct", maps.len(), distinct.len())
    })?;
    Ok("72 counted, 72 distinct maps enumerated".into())
}

fn closure_identities() -> Outcome {
    let y = Polynomial::y();
    for a in 0..=5 {
        let lin = Polynomial::linear(a);
        let rep = Polynomial::representable(a);
        ensure(lib(close(&lin, &y))? == rep, || format!("[{lin}, y] is not {rep}"))?;
        ensure(lib(close(&rep, &y))? == lin, || format!("[{rep}, y] is not {lin}"))?;
    }
    let fam = polynomials_within(3, 3);
    for p in &fam {
        let c = lib(coclose(&y, p))?;
        let expected = Polynomial::representable(p.num_positions());
        ensure(c == expected, || format!("coclose(y, {p}) is {c}"))?;
    }
    Ok(format!("|A| <= 5 both ways; coclosure over {} polynomials", fam.len()))
}

fn adjunction_cardinalities() -> Outcome {
    let fam = polynomials_within(2, 2);
    let mut n = 0;
    for p in &fam {
        for q in &fam {
            let hom_pq = lib(close(p, q))?;
            let co_pq = lib(coclose(p, q))?;
            for r in &fam {
                let a = lib(hom_count(&lib(tensor(p, r))?, q))?;
                let b = lib(hom_count(r, &hom_pq))?;
                ensure(a == b, || format!("closure at ({p}, {q}, {r}): {a} vs {b}"))?;
                let c = lib(hom_count(&co_pq, r))?;
                let d = lib(hom_count(p, &lib(substitute(r, q))?))?;
                ensure(c == d, || format!("coclosure at ({p}, {q}, {r}): {c} vs {d}"))?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} triples, both adjunctions"))
}

fn canonical_dualities() -> Outcome {
    for a in 0..=4 {
        let w = lib(canonical_dual(&FiniteSet::new(a)))?;
        for rep in [
            lib(verify_dual_pair(&w))?,
            lib(verify_mix_eta_epsilon(&w))?,
            lib(verify_retract_section(&w))?,
        ] {
            ensure(rep.pass, || format!("|A| = {a}: {}", rep.summary()))?;
        }
    }
    Ok("|A| = 0..4: snakes, mix squares, retract and section composites".into())
}

fn dual_search() -> Outcome {
    let found = lib(search_duals(3, 3))?;
    let legs: Vec<(Polynomial, Polynomial)> = found.iter().map(|d| (d.left.clone(), d.right.clone())).collect();
    let expected: Vec<(Polynomial, Polynomial)> = (0..=3)
        .map(|n| (Polynomial::linear(n), Polynomial::representable(n)))
        .collect();
    let (mut got, mut want) = (legs.clone(), expected);
    got.sort();
    want.sort();
    ensure(got == want, || format!("found {legs:?}"))?;
    let cyclic = cyclic_pairs(&found);
    ensure(cyclic == vec![(Polynomial::y(), Polynomial::y())], || {
        format!("cyclic pairs {cyclic:?}")
    })?;
    let witnesses: usize = found.iter().map(|d| d.witnesses.len()).sum();
    Ok(format!(
        "exactly (Ay, y^A) for |A| <= 3, {witnesses} witnesses, cyclic only (y, y)"
    ))
}

fn double_duals() -> Outcome {
    let fam = polynomials_within(3, 3);
    for p in &fam {
        let id = lib(phi(p))?.is_identity();
        ensure(id == p.is_representable(), || format!("phi({p}) identity: {id}"))?;
        let iso = lib(psi(p))?.is_iso();
        ensure(iso == p.is_linear(), || format!("psi({p}) iso: {iso}"))?;
    }
    Ok(format!("{} polynomials", fam.len()))
}

fn cores_agree() -> Outcome {
    let fam = polynomials_within(3, 3);
    for p in &fam {
        for side in [Side::Left, Side::Right] {
            let probed = lib(verify_core_membership(p, side, 3, 3))?;
            ensure(probed.pass == in_core(p, side), || {
                format!(
                    "{side} core of {p}: shape {} vs {}",
                    in_core(p, side),
                    probed.note.clone().unwrap_or_default()
                )
            })?;
        }
    }
    let reps: Vec<Polynomial> = (0..=3).map(Polynomial::representable).collect();
    for a in &reps {
        for b in &reps {
            let (sa, sb) = (lib(star_obj(a))?, lib(star_obj(b))?);
            ensure(lib(hom_count(a, b))? == lib(hom_count(&sb, &sa))?, || {
                format!("hom counts at ({a}, {b})")
            })?;
            for c in &reps {
                for f in lib(enumerate_homs(a, b))? {
                    for g in lib(enumerate_homs(b, c))? {
                        let lhs = lib(star_map(&lib(f.then(&g))?))?;
                        let rhs = lib(lib(star_map(&g))?.then(&lib(star_map(&f))?))?;
                        ensure(lhs == rhs, || format!("star reverses {f:?} ; {g:?} incorrectly"))?;
                    }
                }
            }
            ensure(lib(star_map(&polyldc::PolyMap::identity(a)))?.is_identity(), || {
                format!("star of id {a}")
            })?;
        }
    }
    Ok(format!(
        "{} polynomials on both sides; star on |A|, |B| <= 3",
        fam.len()
    ))
}

fn bialgebras() -> Outcome {
    let mut n = 0;
    for order in 1..=3 {
        for mon in lib(enumerate_monoids(order))? {
            for side in [Side::Left, Side::Right] {
                let rep = lib(verify_linear_bialgebra(&mon, side))?;
                ensure(rep.pass, || format!("{}: {}", mon.to_json(), rep.summary()))?;
            }
            n += 1;
        }
    }
    Ok(format!("{n} monoids, left and right"))
}

fn coherence_battery() -> Outcome {
    let opts = SuiteOptions::default();
    let mut compared = 0;
    for suite in ["coherence", "naturality", "mix", "day"] {
        let rep = lib(run_suite(suite, &opts))?;
        ensure(rep.pass, || rep.summary())?;
        compared += rep.stats.directions;
    }
    Ok(format!(
        "coherence, naturality, mix and day at (2, 2); {compared} directions compared"
    ))
}

fn cli_determinism() -> Outcome {
    let n = common::check_script()?;
    Ok(format!("{n} scripted commands, text and JSON, two runs each"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("hom-count reproduction", Duration::from_secs(1), hom_count_reproduction),
        ("closure identities", Duration::from_secs(1), closure_identities),
        (
            "adjunction cardinalities",
            Duration::from_secs(120),
            adjunction_cardinalities,
        ),
        ("canonical dualities", Duration::from_secs(10), canonical_dualities),
        ("brute-force dual search", Duration::from_secs(600), dual_search),
        ("double-dual characterizations", Duration::from_secs(60), double_duals),
        ("cores", Duration::from_secs(120), cores_agree),
        ("bialgebras", Duration::from_secs(120), bialgebras),
        (
            "structural coherence battery",
            Duration::from_secs(300),
            coherence_battery,
        ),
        ("CLI determinism", Duration::from_secs(120), cli_determinism),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let verdict = match outcome {
            Ok(detail) if took <= *limit => format!("PASS ({detail})"),
            Ok(detail) => format!("FAIL (over the {limit:?} limit; {detail})"),
            Err(why) => format!("FAIL ({why})"),
        };
        if verdict.starts_with("FAIL") {
            failed += 1;
        }
        println!("criterion {:>2} {name}: {verdict} in {:.2}s", i + 1, took.as_secs_f64());
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
