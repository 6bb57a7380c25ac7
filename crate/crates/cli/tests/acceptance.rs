//! End-to-end checks, one line of output per criterion.
//!
//! Runs without the libtest harness so that the report is always printed;
//! the process fails if any criterion fails.

use std::collections::HashSet;
use std::path::PathBuf;
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use ncfactor::commalg::{normal_form, reduced_groebner_basis, s_polynomial, Monomial};
use ncfactor::homog::{factor_homogeneous, refine};
use ncfactor::oracle::{brute_force_factor, mora_family, random_factorable, random_homogeneous_factorable, SearchMode};
use ncfactor::{
    factor_all, factor_bidegree, knapsack_splits, Alphabet, CPoly, CRing, ConstraintSystem, DegreeSplit,
    FactorOptions, Field, NcPoly,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    check(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

fn xy() -> Arc<Alphabet> {
    Arc::new(Alphabet::new(["x", "y"]).unwrap())
}

fn monic_pair(g: &NcPoly, h: &NcPoly) -> (NcPoly, NcPoly) {
    let (g, lc) = g.monic().unwrap();
    (g, h.scale_const(&lc))
}

fn worked_example() -> Outcome {
    let start = Instant::now();
    for p in [5u32, 7] {
        let field = Field::Prime(p);
        let f = NcPoly::from_int_terms(&xy(), field, &[(1, "yxyxy"), (-1, "y")]).unwrap();
        let found = factor_bidegree(&f, DegreeSplit::new(2, 3), &FactorOptions::default()).map_err(|e| e.to_string())?;
        let got: HashSet<_> = found.iter().map(|e| e.factors.clone().unwrap()).collect();
        let expected: HashSet<_> = [
            (&[(1, "yx"), (-1, "")][..], &[(1, "yxy"), (1, "y")][..]),
            (&[(1, "yx"), (1, "")][..], &[(1, "yxy"), (-1, "y")][..]),
        ]
        .iter()
        .map(|(g, h)| {
            let g = NcPoly::from_int_terms(&xy(), field, g).unwrap();
            let h = NcPoly::from_int_terms(&xy(), field, h).unwrap();
            monic_pair(&g, &h)
        })
        .collect();
        check(got == expected, || format!("F_{p}: unexpected factorizations"))?;
        let system = &found[0].system;
        let ring = system.ring().clone();
        let target = &ring.var(0).pow(2) - &ring.one();
        let basis = system.reduced_basis().map_err(|e| e.to_string())?;
        check(basis == vec![target], || format!("F_{p}: reduced system is not a1^2 - 1"))?;
    }
    within(start, Duration::from_secs(1))?;
    Ok("two factorizations over F_5 and F_7, system a1^2 - 1".into())
}

fn mora() -> Outcome {
    let start = Instant::now();
    let mut cuts = 0;
    for (p, roots) in [(5u32, vec![1, -1]), (7, vec![1, 2, 3])] {
        let field = Field::Prime(p);
        let roots: Vec<_> = roots.iter().map(|&r| field.from_i64(r)).collect();
        let (f, chains) = mora_family(field, &roots).map_err(|e| e.to_string())?;
        let all = factor_all(&f, &FactorOptions::default()).map_err(|e| e.to_string())?;
        for chain in &chains {
            let product = chain[1..].iter().fold(chain[0].clone(), |a, b| &a * b);
            check(product == f, || "a predicted chain does not multiply back".into())?;
            for cut in 1..chain.len() {
                let g = chain[1..cut].iter().fold(chain[0].clone(), |a, b| &a * b);
                let h = chain[cut + 1..].iter().fold(chain[cut].clone(), |a, b| &a * b);
                let split = DegreeSplit::new(g.degree().unwrap(), h.degree().unwrap());
                let pair = monic_pair(&g, &h);
                let found = all
                    .get(&split)
                    .is_some_and(|es| es.iter().any(|e| e.factors.as_ref() == Some(&pair)));
                check(found, || format!("F_{p}: missing split {split}"))?;
                cuts += 1;
            }
        }
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!("{cuts} predicted chain boundaries found"))
}

/// Criterion 3 corpus, shared with criterion 4.
fn homogeneous_corpus() -> Vec<(NcPoly, NcPoly, NcPoly)> {
    (0..200u64)
        .map(|seed| {
            let dg = 1 + (seed as usize) % 3;
            let dh = 1 + (seed as usize / 3) % 3;
            random_homogeneous_factorable(seed, Field::Prime(3), dg, dh, 4)
        })
        .collect()
}

fn homogeneous() -> Outcome {
    let start = Instant::now();
    let corpus = homogeneous_corpus();
    let mut recovered = 0;
    for (f, g, h) in &corpus {
        let (dg, dh) = (g.degree().unwrap(), h.degree().unwrap());
        if let Ok(Some(pair)) = factor_homogeneous(f, dg, dh) {
            if pair == monic_pair(g, h) {
                recovered += 1;
            }
        }
    }
    let f3 = Field::Prime(3);
    let squares = NcPoly::from_int_terms(&xy(), f3, &[(1, "xx"), (-1, "yy")]).unwrap();
    let irreducible = factor_homogeneous(&squares, 1, 1).map_err(|e| e.to_string())?.is_none();
    check(recovered == corpus.len(), || format!("recovered {recovered}/{}", corpus.len()))?;
    check(irreducible, || "x^2 - y^2 factored at (1,1)".into())?;
    within(start, Duration::from_secs(10))?;
    Ok(format!("{recovered}/{} recovered, x^2 - y^2 irreducible at (1,1)", corpus.len()))
}

fn refinement() -> Outcome {
    let mut instances: Vec<NcPoly> = homogeneous_corpus().into_iter().map(|(f, _, _)| f).collect();
    instances.push(NcPoly::from_int_terms(&xy(), Field::Prime(5), &[(1, "yxyxy")]).unwrap());
    let mut multiply_factorable = 0;
    let mut refined = 0;
    for f in &instances {
        let n = f.degree().unwrap();
        let pairs: Vec<(NcPoly, NcPoly)> = (1..n)
            .filter_map(|h| factor_homogeneous(f, h, n - h).unwrap())
            .collect();
        if pairs.len() < 2 {
            continue;
        }
        multiply_factorable += 1;
        for i in 0..pairs.len() {
            for j in i + 1..pairs.len() {
                let ((g1, h1), (g2, h2)) = (&pairs[i], &pairs[j]);
                let jj = refine(g1, h1, g2, h2).map_err(|e| format!("{f}: {e}"))?;
                check(&(g1 * &jj) == g2 && &(&jj * h2) == h1, || format!("{f}: refinement does not multiply back"))?;
                refined += 1;
            }
        }
    }
    check(multiply_factorable > 0, || "no multiply-factorable instance".into())?;
    Ok(format!("{refined} refinements over {multiply_factorable} instances verified"))
}

/// Criterion 5 corpus, shared with criterion 6.
fn f2_corpus() -> Vec<(NcPoly, DegreeSplit)> {
    (0..100u64)
        .map(|seed| {
            let dg = 1 + (seed as usize) % 2;
            let dh = 1 + (seed as usize / 2) % 2;
            let (f, _, _) = random_factorable(1000 + seed, Field::Prime(2), dg, dh, 3);
            (f, DegreeSplit::new(dg, dh))
        })
        .collect()
}

fn oracle_set(f: &NcPoly, s: DegreeSplit) -> Result<HashSet<(NcPoly, NcPoly)>, String> {
    Ok(brute_force_factor(f, s, 64, SearchMode::Exhaustive, 1 << 24)
        .map_err(|e| e.to_string())?
        .into_iter()
        .collect())
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let corpus = f2_corpus();
    let mut agree = 0;
    for (f, s) in &corpus {
        let ours: HashSet<_> = factor_bidegree(f, *s, &FactorOptions::default())
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|e| e.factors.unwrap())
            .collect();
        if ours == oracle_set(f, *s)? {
            agree += 1;
        }
    }
    check(agree == corpus.len(), || format!("{agree}/{} agree", corpus.len()))?;
    within(start, Duration::from_secs(600))?;
    Ok(format!("{agree}/{} agree with the exhaustive oracle", corpus.len()))
}

fn knapsack() -> Outcome {
    let f2 = Field::Prime(2);
    let mut corpus: Vec<NcPoly> = f2_corpus().into_iter().map(|(f, _)| f).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut perturbed = 0;
    let mut attempts = 0;
    while perturbed < 50 {
        attempts += 1;
        check(attempts < 10_000, || "could not find 50 unfactorable perturbations".into())?;
        let f = &corpus[rng.gen_range(0..100)];
        let n = f.degree().unwrap();
        let len = rng.gen_range(0..n);
        let word: String = (0..len).map(|_| if rng.gen_bool(0.5) { 'x' } else { 'y' }).collect();
        let g = f + &NcPoly::from_int_terms(&xy(), f2, &[(1, word.as_str())]).unwrap();
        let mut factors = false;
        for h in 1..n {
            factors |= !oracle_set(&g, DegreeSplit::new(h, n - h))?.is_empty();
        }
        if !factors {
            corpus.push(g);
            perturbed += 1;
        }
    }
    let (mut with_filter, mut without_filter) = (0usize, 0usize);
    for f in &corpus {
        let n = f.degree().unwrap();
        let allowed = knapsack_splits(f).map_err(|e| e.to_string())?;
        with_filter += allowed.len();
        without_filter += n - 1;
        for h in 1..n {
            let s = DegreeSplit::new(h, n - h);
            if !oracle_set(f, s)?.is_empty() {
                check(allowed.contains(&s), || format!("{f} factors at {s} but the filter drops it"))?;
            }
        }
    }
    let count = corpus.len() as f64;
    Ok(format!(
        "sound on {} polynomials; splits per polynomial {:.2} -> {:.2} (factor {:.2})",
        corpus.len(),
        without_filter as f64 / count,
        with_filter as f64 / count,
        without_filter as f64 / with_filter.max(1) as f64
    ))
}

fn random_ideal(rng: &mut ChaCha8Rng, ring: &CRing) -> Vec<CPoly> {
    let field = ring.field;
    let ngens = rng.gen_range(1..=3);
    (0..ngens)
        .map(|_| {
            let nterms = rng.gen_range(1..=3);
            (0..nterms).fold(ring.zero(), |acc, _| {
                let exps: Vec<u32> = (0..ring.nvars()).map(|_| rng.gen_range(0..=2)).collect();
                let c = field.from_i64(rng.gen_range(1..5));
                &acc + &ring.term(Monomial(exps), c)
            })
        })
        .collect()
}

fn groebner() -> Outcome {
    let start = Instant::now();
    let f5 = Field::Prime(5);
    let ring = CRing::new(f5, ["a1"]);
    let system = ConstraintSystem::new(ring.clone(), vec![&ring.var(0).pow(2) - &ring.one()]).map_err(|e| e.to_string())?;
    let basis = system.reduced_basis().map_err(|e| e.to_string())?;
    let rendered: Vec<String> = basis.iter().map(|b| b.to_string()).collect();
    check(rendered == ["a1^2 + 4"], || format!("basis {rendered:?}"))?;
    let sols = system.enumerate_solutions(1000).map_err(|e| e.to_string())?;
    check(sols == vec![vec![f5.one()], vec![f5.from_i64(4)]], || format!("solutions {sols:?}"))?;

    let ring = CRing::new(f5, ["a", "b", "c"]);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut pairs = 0;
    for _ in 0..50 {
        let gens = random_ideal(&mut rng, &ring);
        let gb = reduced_groebner_basis(&gens).map_err(|e| e.to_string())?;
        for i in 0..gb.len() {
            for j in i + 1..gb.len() {
                let r = normal_form(&s_polynomial(&gb[i], &gb[j]), &gb).map_err(|e| e.to_string())?;
                check(r.is_zero(), || "an S-polynomial does not reduce to zero".into())?;
                pairs += 1;
            }
        }
        for g in &gens {
            check(normal_form(g, &gb).map_err(|e| e.to_string())?.is_zero(), || "generator not in ideal".into())?;
        }
    }
    within(start, Duration::from_secs(5))?;
    Ok(format!("{{a1^2 + 4}} with solutions 1, 4; {pairs} S-pairs reduce to zero over 50 ideals"))
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

fn run_cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_ncfactor"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    check(out.status.success(), || format!("exit status {}", out.status))?;
    Ok(out.stdout)
}

fn cli_golden() -> Outcome {
    let mut files = 0;
    for p in ["5", "7"] {
        for (json, ext) in [(false, "txt"), (true, "json")] {
            let mut args = vec!["--field", p, "--degrees", "2,3"];
            if json {
                args.extend(["--groebner", "--json"]);
            }
            args.push("y*x*y*x*y - y");
            let first = run_cli(&args)?;
            let second = run_cli(&args)?;
            check(first == second, || format!("F_{p} {ext}: runs differ"))?;
            let path = golden_dir().join(format!("worked_example_f{p}.{ext}"));
            let golden = std::fs::read(&path).map_err(|e| format!("{}: {e}", path.display()))?;
            check(first == golden, || format!("{} differs from output", path.display()))?;
            files += 1;
        }
    }
    Ok(format!("{files} golden files reproduced byte for byte, twice each"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("worked example", worked_example),
        ("Mora family", mora),
        ("homogeneous factorization", homogeneous),
        ("refinement", refinement),
        ("oracle equivalence", oracle_equivalence),
        ("degree filter", knapsack),
        ("Groebner layer", groebner),
        ("CLI golden files", cli_golden),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail} [{ms} ms]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why} [{ms} ms]", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
