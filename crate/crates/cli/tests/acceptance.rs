//! Acceptance gate. Prints one line per criterion and exits non-zero if any
//! criterion fails. Set comparisons are exact; runtime bounds are pinned per
//! criterion below.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use triring::corpus::standard_corpus;
use triring::{
    verify_axioms, CoverTarget, Limits, Provenance, TriElement, Triideal, Triring, TriringHom,
    Trispectrum,
};

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Option<Duration>,
    run: fn(&[Triring]) -> Outcome,
}

const fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

fn spectrum(r: &Triring) -> Trispectrum<'_> {
    Trispectrum::new(r, &Limits::default()).expect("spectrum within caps")
}

fn pair(t: &Triideal) -> (Vec<usize>, Vec<usize>) {
    (t.even().members().to_vec(), t.odd().members().to_vec())
}

fn corpus_construction(corpus: &[Triring]) -> Outcome {
    let failing: Vec<&str> = corpus
        .iter()
        .filter(|r| !verify_axioms(&r.to_candidate()).all_pass())
        .map(|r| r.name())
        .collect();
    if !failing.is_empty() {
        return Err(format!("axioms fail on {failing:?}"));
    }
    let names: BTreeSet<&str> = corpus.iter().map(|r| r.name()).collect();
    let commutative = corpus.iter().filter(|r| r.has_zero_odd_part()).count();
    let product_even = corpus
        .iter()
        .filter(|r| matches!(r.even().provenance(), Provenance::Product(_)))
        .count();
    let required = ["z4z2", "tq2", "tq3"].iter().all(|n| names.contains(n));
    if corpus.len() >= 10 && required && commutative >= 2 && product_even >= 1 {
        Ok(format!(
            "{} trirings, {commutative} commutative, {product_even} with product even part",
            corpus.len()
        ))
    } else {
        Err(format!(
            "{} trirings, required present: {required}, commutative {commutative}, product {product_even}",
            corpus.len()
        ))
    }
}

fn nilradical_is_prime_intersection(corpus: &[Triring]) -> Outcome {
    for r in corpus {
        let s = spectrum(r);
        if r.intersect_all(s.points()) != r.trinilradical() {
            return Err(format!("{}: [{}]", r.name(), r.trinilradical()));
        }
    }
    let z4z2 = corpus.iter().find(|r| r.name() == "z4z2").unwrap();
    let s = spectrum(z4z2);
    if s.len() != 2 || pair(&z4z2.trinilradical()) != (vec![0, 2], vec![0]) {
        return Err(format!("z4z2: {} primes, trinilradical [{}]", s.len(), z4z2.trinilradical()));
    }
    let tq3 = corpus.iter().find(|r| r.name() == "tq3").unwrap();
    let s = spectrum(tq3);
    if s.len() != 2 || !tq3.trinilradical().is_zero() {
        return Err(format!("tq3: {} primes, trinilradical [{}]", s.len(), tq3.trinilradical()));
    }
    Ok("z4z2: 2 primes, ({0,2},{0}); tq3: 2 primes, zero".into())
}

fn radical_is_prime_intersection(corpus: &[Triring]) -> Outcome {
    let mut checked = 0;
    for r in corpus {
        let s = spectrum(r);
        for i in s.lattice().iter().filter(|i| !i.is_whole()) {
            if s.intersection_above(i) != r.radical(i) {
                return Err(format!("{}: [{i}]", r.name()));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} proper triideals"))
}

fn closed_set_axioms(corpus: &[Triring]) -> Outcome {
    let mut families = 0usize;
    for r in corpus {
        let s = spectrum(r);
        let lattice = s.lattice();
        let all: Vec<usize> = (0..s.len()).collect();
        if s.vsharp(&r.zero_triideal()).members != all || !s.vsharp(&r.whole_triideal()).is_empty() {
            return Err(format!("{}: V(0) or V(R)", r.name()));
        }
        for i in lattice {
            for j in lattice {
                let mut union = s.vsharp(i).members;
                union.extend(s.vsharp(j).members);
                union.sort();
                union.dedup();
                if union != s.vsharp(&r.intersect(i, j)).members || union != s.vsharp(&r.mixed_product(i, j)).members {
                    return Err(format!("{}: union at [{i}], [{j}]", r.name()));
                }
            }
        }
        let meet_of = |family: &[&Triideal]| -> Vec<usize> {
            (0..s.len())
                .filter(|&p| family.iter().all(|i| i.is_subset(&s.points()[p])))
                .collect()
        };
        let n = lattice.len();
        let mut subfamilies: Vec<Vec<&Triideal>> = Vec::new();
        for a in 0..n {
            subfamilies.push(vec![&lattice[a]]);
            for b in a + 1..n {
                subfamilies.push(vec![&lattice[a], &lattice[b]]);
                for c in b + 1..n {
                    subfamilies.push(vec![&lattice[a], &lattice[b], &lattice[c]]);
                }
            }
        }
        subfamilies.push(lattice.iter().collect());
        for family in &subfamilies {
            if meet_of(family) != s.vsharp(&r.sum_all(family.iter().copied())).members {
                return Err(format!("{}: intersection over {} ideals", r.name(), family.len()));
            }
        }
        families += subfamilies.len();
    }
    Ok(format!("{families} sub-families"))
}

fn irreducibility(corpus: &[Triring]) -> Outcome {
    let mut agreements = 0;
    for r in corpus {
        let s = spectrum(r);
        for i in s.lattice() {
            let closed = s.vsharp(i);
            if closed.is_empty() {
                continue;
            }
            let brute = !s.is_reducible_brute_force(&closed.members);
            if brute != r.is_prime_triideal(&r.radical(i)) {
                return Err(format!("{}: [{i}]", r.name()));
            }
            agreements += 1;
        }
    }
    Ok(format!("{agreements} nonempty closed sets, 0 disagreements"))
}

fn principal_cover(r: &Triring) -> Vec<Triideal> {
    r.even()
        .elements()
        .map(|x0| r.principal_even(x0))
        .chain(r.odd().elements().map(|x1| r.principal_odd(x1)))
        .collect()
}

fn quasicompactness(corpus: &[Triring]) -> Outcome {
    let mut covers = 0;
    for r in corpus {
        let s = spectrum(r);
        let cover = principal_cover(r);
        let mut targets = vec![(CoverTarget::Full, r.one())];
        if !r.has_zero_odd_part() {
            targets.push((CoverTarget::Odd, r.local_one()));
        }
        for (target, goal) in targets {
            let sub = s
                .quasicompact_subcover(&cover, target)
                .map_err(|e| format!("{} {target:?}: {e}", r.name()))?;
            let total = sub.witness.iter().fold(TriElement::ZERO, |acc, &(_, x)| r.add(acc, x));
            if total != goal || !sub.witness.iter().all(|&(k, x)| cover[k].contains(x)) {
                return Err(format!("{} {target:?}: witness sums to {total}", r.name()));
            }
            covers += 1;
        }
    }
    Ok(format!("{covers} covers reduced with valid witnesses"))
}

fn odd_prime_extension(corpus: &[Triring]) -> Outcome {
    let limits = Limits::default();
    let mut extended = 0;
    for r in corpus.iter().filter(|r| !r.has_zero_odd_part()) {
        let even_ideals = r.even().enumerate_ideals(&limits).unwrap();
        for p1 in r.odd().prime_ideals(&limits).unwrap() {
            let p = r
                .extend_odd_prime(&p1, &limits)
                .map_err(|e| format!("{}: {e}", r.name()))?;
            if !r.is_prime_triideal(&p) {
                return Err(format!("{}: [{p}] not prime", r.name()));
            }
            for i0 in &even_ideals {
                let absorbed = i0.members().iter().all(|&x0| {
                    r.odd_elements().all(|a| p1.contains(r.mul(a, TriElement::even(x0)).odd))
                });
                if absorbed && !i0.is_subset(p.even()) {
                    return Err(format!("{}: {:?} not inside [{p}]", r.name(), i0.members()));
                }
            }
            extended += 1;
        }
    }
    Ok(format!("{extended} odd primes"))
}

fn correspondence(corpus: &[Triring]) -> Outcome {
    let limits = Limits::default();
    let mut maps = 0;
    for r in corpus {
        for i in spectrum(r).lattice() {
            let q = r.quotient(i).map_err(|e| format!("{}: {e}", r.name()))?;
            let a = TriringHom::analyze(r, &q.ring, q.natural.table().to_vec())
                .map_err(|e| format!("{} [{i}]: {e}", r.name()))?;
            if a.kernel != *i {
                return Err(format!("{} [{i}]: kernel [{}]", r.name(), a.kernel));
            }
            let report = q
                .natural
                .correspondence_check(&limits)
                .map_err(|e| format!("{} [{i}]: {e}", r.name()))?;
            if !report.is_bijection() {
                return Err(format!("{} [{i}]: {:?}", r.name(), report.failures));
            }
            maps += 1;
        }
    }
    Ok(format!("{maps} natural maps"))
}

fn local_identities(corpus: &[Triring]) -> Outcome {
    let mut tuples = 0u64;
    for r in corpus {
        let all: Vec<TriElement> = r.elements().collect();
        let odds: Vec<TriElement> = r.odd_elements().collect();
        let sharp = |a: TriElement, b: TriElement| r.sharp(a, b).unwrap();
        for &x in &all {
            for &y in &all {
                let xy = r.mul(x, y);
                for &a in &odds {
                    let (xa, ax) = (r.mul(x, a), r.mul(a, x));
                    for &b in &odds {
                        let ab = sharp(a, b);
                        if sharp(xa, r.mul(y, b)) != r.mul(xy, ab) || sharp(ax, r.mul(b, y)) != r.mul(r.mul(ab, x), y) {
                            return Err(format!("{}: x={x} y={y} a={a} b={b}", r.name()));
                        }
                        tuples += 1;
                    }
                }
            }
        }
        for &x in &all {
            for &a in &odds {
                for m in 1..=6 {
                    let am = r.local_power(a, m).unwrap();
                    let xm = r.pow(x, m);
                    if r.local_power(r.mul(x, a), m).unwrap() != r.mul(xm, am)
                        || r.local_power(r.mul(a, x), m).unwrap() != r.mul(am, xm)
                    {
                        return Err(format!("{}: x={x} a={a} m={m}", r.name()));
                    }
                    tuples += 1;
                }
            }
        }
    }
    Ok(format!("{tuples} tuples"))
}

fn determinism(_: &[Triring]) -> Outcome {
    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let invocations: Vec<Vec<String>> = ["z4z2.triring", "tq3.triring", "z6_crt.triring"]
        .iter()
        .flat_map(|f| {
            let path = fixtures.join(f).display().to_string();
            [
                vec!["verify".to_string(), "--suite".into(), "all".into(), path.clone()],
                vec!["topology".to_string(), "--format".into(), "dot".into(), path.clone()],
                vec!["topology".to_string(), "--format".into(), "json".into(), path],
            ]
        })
        .collect();
    let mut runs = 0;
    for args in &invocations {
        let mut outputs = BTreeSet::new();
        for workers in ["1", "4"] {
            for _ in 0..3 {
                let out = Command::new(env!("CARGO_BIN_EXE_triring"))
                    .args(args)
                    .args(["--workers", workers])
                    .output()
                    .map_err(|e| e.to_string())?;
                if !out.status.success() {
                    return Err(format!("{args:?} exited with {:?}", out.status.code()));
                }
                outputs.insert(out.stdout);
                runs += 1;
            }
        }
        if outputs.len() != 1 {
            return Err(format!("{args:?}: {} distinct outputs", outputs.len()));
        }
    }
    Ok(format!("{runs} runs, {} invocations byte-identical", invocations.len()))
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, title: "corpus construction", budget: secs(10), run: corpus_construction },
    Criterion { id: 2, title: "trinilradical = intersection of prime triideals", budget: secs(30), run: nilradical_is_prime_intersection },
    Criterion { id: 3, title: "radical = intersection of primes above", budget: secs(30), run: radical_is_prime_intersection },
    Criterion { id: 4, title: "closed-set axioms", budget: None, run: closed_set_axioms },
    Criterion { id: 5, title: "irreducible iff radical is prime", budget: None, run: irreducibility },
    Criterion { id: 6, title: "quasicompact subcovers", budget: None, run: quasicompactness },
    Criterion { id: 7, title: "odd prime extension", budget: None, run: odd_prime_extension },
    Criterion { id: 8, title: "natural maps and correspondence", budget: None, run: correspondence },
    Criterion { id: 9, title: "local product and power identities", budget: None, run: local_identities },
    Criterion { id: 10, title: "determinism across runs and workers", budget: None, run: determinism },
];

fn main() {
    let start = Instant::now();
    let corpus = standard_corpus(&Limits::default()).expect("corpus builds");
    let build_time = start.elapsed();
    let mut failures = 0;
    for c in CRITERIA {
        let t = Instant::now();
        let mut outcome = (c.run)(&corpus);
        // Corpus construction is charged to the first criterion.
        let elapsed = t.elapsed() + if c.id == 1 { build_time } else { Duration::ZERO };
        if let (Some(budget), Ok(_)) = (c.budget, &outcome) {
            if elapsed > budget {
                outcome = Err(format!("took {elapsed:.2?}, budget {budget:?}"));
            }
        }
        let budget = c.budget.map(|b| format!(" (budget {b:?})")).unwrap_or_default();
        match outcome {
            Ok(detail) => println!("PASS criterion {:>2} {}: {detail} [{elapsed:.2?}{budget}]", c.id, c.title),
            Err(why) => {
                failures += 1;
                println!("FAIL criterion {:>2} {}: {why} [{elapsed:.2?}{budget}]", c.id, c.title);
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", CRITERIA.len() - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
