//! Exhaustive verification of the triring theory on a single finite instance.
//!
//! Every check is a pure function of the ring and its trispectrum, so checks
//! fan out over a rayon pool and are reassembled in declaration order.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use triring::{
    verify_axioms, Axiom, CoverTarget, Error, FiniteCommRing, Ideal, Limits, Parity, Triideal,
    TriElement, Triring, TriringHom, Trispectrum, Witness,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Axioms,
    Ideals,
    Nilradical,
    Spectrum,
    Topology,
    All,
}

impl Suite {
    pub fn parse(name: &str) -> Option<Suite> {
        Some(match name {
            "axioms" => Suite::Axioms,
            "ideals" => Suite::Ideals,
            "nilradical" => Suite::Nilradical,
            "spectrum" => Suite::Spectrum,
            "topology" => Suite::Topology,
            "all" => Suite::All,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Ideals => "ideals",
            Suite::Nilradical => "nilradical",
            Suite::Spectrum => "spectrum",
            Suite::Topology => "topology",
            Suite::All => "all",
        }
    }

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Passed with an optional detail, or failed with a witness.
pub type Outcome = Result<Option<String>, String>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub suite: Suite,
    pub name: &'static str,
    pub outcome: Outcome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub header: String,
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.outcome.is_ok())
    }

    pub fn render(&self) -> String {
        let mut out = format!("{}\n", self.header);
        for r in &self.results {
            match &r.outcome {
                Ok(None) => out += &format!("PASS {}/{}\n", r.suite, r.name),
                Ok(Some(detail)) => out += &format!("PASS {}/{}: {detail}\n", r.suite, r.name),
                Err(witness) => out += &format!("FAIL {}/{}: {witness}\n", r.suite, r.name),
            }
        }
        let failed = self.results.iter().filter(|r| r.outcome.is_err()).count();
        out += &format!("{} passed, {failed} failed\n", self.results.len() - failed);
        out
    }
}

struct Ctx<'r> {
    ring: &'r Triring,
    limits: Limits,
    spectrum: Option<Trispectrum<'r>>,
}

impl<'r> Ctx<'r> {
    fn spec(&self) -> &Trispectrum<'r> {
        self.spectrum.as_ref().expect("spectrum computed for this suite")
    }

    fn lattice(&self) -> &[Triideal] {
        self.spec().lattice()
    }
}

type Check = fn(&Ctx) -> Outcome;

const CHECKS: &[(Suite, &str, Check)] = &[
    (Suite::Axioms, "even-commutative-subring", |c| axiom(c, Axiom::EvenSubring)),
    (Suite::Axioms, "grading", |c| axiom(c, Axiom::Grading)),
    (Suite::Axioms, "distributivity", |c| axiom(c, Axiom::Distributivity)),
    (Suite::Axioms, "associativity", |c| axiom(c, Axiom::Associativity)),
    (Suite::Axioms, "left-triassociative-law", |c| axiom(c, Axiom::LeftTriassociativity)),
    (Suite::Axioms, "right-triassociative-law", |c| axiom(c, Axiom::RightTriassociativity)),
    (Suite::Axioms, "odd-commutation", |c| axiom(c, Axiom::OddCommutation)),
    (Suite::Axioms, "structure-map-representation", structure_map_representation),
    (Suite::Axioms, "odd-multiples-as-sets", odd_multiples_as_sets),
    (Suite::Axioms, "odd-products-vanish", odd_products_vanish),
    (Suite::Axioms, "local-product-of-multiples", local_product_of_multiples),
    (Suite::Axioms, "local-power-of-multiples", local_power_of_multiples),
    (Suite::Ideals, "triideal-lattice", triideal_lattice),
    (Suite::Ideals, "triideal-pair-characterization", pair_characterization),
    (Suite::Ideals, "component-ideal-closure", component_ideal_closure),
    (Suite::Ideals, "component-prime-ideals", component_prime_ideals),
    (Suite::Ideals, "component-nilradicals", component_nilradicals),
    (Suite::Ideals, "quotient-correspondence", quotient_correspondence),
    (Suite::Nilradical, "trinilradical-elementwise", trinilradical_elementwise),
    (Suite::Nilradical, "ordinary-nilradical-decomposition", ordinary_nilradical_decomposition),
    (Suite::Nilradical, "trinilradical-within-ordinary", trinilradical_within_ordinary),
    (Suite::Nilradical, "reduced-quotient", reduced_quotient),
    (Suite::Nilradical, "radical-idempotent", radical_idempotent),
    (Suite::Nilradical, "radical-via-quotient", radical_via_quotient),
    (Suite::Spectrum, "prime-triideals", prime_triideals),
    (Suite::Spectrum, "even-point-characterization", even_point_characterization),
    (Suite::Spectrum, "odd-prime-extension", odd_prime_extension),
    (Suite::Spectrum, "mixed-product-primality", mixed_product_primality),
    (Suite::Spectrum, "trinilradical-is-prime-intersection", trinilradical_is_prime_intersection),
    (Suite::Spectrum, "radical-is-prime-intersection", radical_is_prime_intersection),
    (Suite::Topology, "closed-set-extremes", closed_set_extremes),
    (Suite::Topology, "finite-unions", finite_unions),
    (Suite::Topology, "arbitrary-intersections", arbitrary_intersections),
    (Suite::Topology, "closed-sets-and-radicals", closed_sets_and_radicals),
    (Suite::Topology, "basic-opens-form-a-base", basic_opens_form_a_base),
    (Suite::Topology, "irreducible-iff-prime-radical", irreducible_iff_prime_radical),
    (Suite::Topology, "quasicompact-spectrum", |c| quasicompact(c, CoverTarget::Full)),
    (Suite::Topology, "quasicompact-odd-spectrum", |c| quasicompact(c, CoverTarget::Odd)),
    (Suite::Topology, "specialization-closure", specialization_closure),
];

/// The names of the checks a suite runs, in report order.
pub fn check_names(suite: Suite) -> Vec<String> {
    CHECKS
        .iter()
        .filter(|(s, _, _)| suite.includes(*s))
        .map(|(s, n, _)| format!("{s}/{n}"))
        .collect()
}

/// Runs `suite` on `ring` with `workers` threads (`None` picks the rayon
/// default). The report is identical for every worker count.
pub fn run_suite(ring: &Triring, suite: Suite, limits: &Limits, workers: Option<usize>) -> Result<Report, Error> {
    let spectrum = if suite == Suite::Axioms {
        None
    } else {
        Some(Trispectrum::new(ring, limits)?)
    };
    let ctx = Ctx {
        ring,
        limits: *limits,
        spectrum,
    };
    let selected: Vec<&(Suite, &str, Check)> = CHECKS.iter().filter(|(s, _, _)| suite.includes(*s)).collect();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = workers {
        builder = builder.num_threads(n.max(1));
    }
    let pool = builder
        .build()
        .map_err(|e| Error::Invariant(format!("thread pool: {e}")))?;
    let results = pool.install(|| {
        selected
            .par_iter()
            .map(|&&(s, name, check)| CheckResult {
                suite: s,
                name,
                outcome: check(&ctx),
            })
            .collect()
    });
    Ok(Report {
        header: format!(
            "triring {}: |R0| = {}, |R1| = {}",
            ring.name(),
            ring.even().size(),
            ring.odd().size()
        ),
        results,
    })
}

fn show(xs: &[TriElement]) -> String {
    Witness(xs.to_vec()).to_string()
}

fn pass() -> Outcome {
    Ok(None)
}

fn first_failure<T>(items: impl IntoIterator<Item = T>, holds: impl Fn(&T) -> bool, describe: impl Fn(T) -> String) -> Outcome {
    match items.into_iter().find(|x| !holds(x)) {
        Some(x) => Err(describe(x)),
        None => pass(),
    }
}

fn pairs<T: Copy>(xs: &[T], ys: &[T]) -> Vec<(T, T)> {
    xs.iter().flat_map(|&x| ys.iter().map(move |&y| (x, y))).collect()
}

fn odd_elements(r: &Triring) -> Vec<TriElement> {
    r.odd_elements().collect()
}

fn axiom(c: &Ctx, axiom: Axiom) -> Outcome {
    let report = verify_axioms(&c.ring.to_candidate());
    match report.get(axiom).and_then(|check| check.witness.clone()) {
        Some(w) => Err(w.to_string()),
        None => pass(),
    }
}

fn sharp(r: &Triring, a: TriElement, b: TriElement) -> TriElement {
    r.sharp(a, b).expect("odd operands")
}

fn structure_map_representation(c: &Ctx) -> Outcome {
    let r = c.ring;
    let evens: Vec<TriElement> = r.even_elements().collect();
    first_failure(
        pairs(&evens, &odd_elements(r)),
        |&(x, a)| {
            r.mul(x, a) == sharp(r, TriElement::odd(r.lambda(x.even)), a)
                && r.mul(a, x) == sharp(r, a, TriElement::odd(r.rho(x.even)))
        },
        |(x, a)| show(&[x, a]),
    )
}

fn odd_multiples_as_sets(c: &Ctx) -> Outcome {
    let r = c.ring;
    let odds = odd_elements(r);
    first_failure(
        r.even_elements(),
        |&x| {
            let left: BTreeSet<TriElement> = odds.iter().map(|&a| r.mul(a, x)).collect();
            let right: BTreeSet<TriElement> = odds.iter().map(|&a| r.mul(x, a)).collect();
            left == right
        },
        |x| show(&[x]),
    )
}

fn odd_products_vanish(c: &Ctx) -> Outcome {
    let r = c.ring;
    let odds = odd_elements(r);
    first_failure(pairs(&odds, &odds), |&(a, b)| r.mul(a, b).is_zero(), |(a, b)| show(&[a, b]))
}

fn local_product_of_multiples(c: &Ctx) -> Outcome {
    let r = c.ring;
    let all: Vec<TriElement> = r.elements().collect();
    let odds = odd_elements(r);
    for &(x, y) in &pairs(&all, &all) {
        let xy = r.mul(x, y);
        for &(a, b) in &pairs(&odds, &odds) {
            let ab = sharp(r, a, b);
            let left = sharp(r, r.mul(x, a), r.mul(y, b)) == r.mul(xy, ab);
            let right = sharp(r, r.mul(a, x), r.mul(b, y)) == r.mul(r.mul(ab, x), y);
            if !(left && right) {
                return Err(show(&[x, y, a, b]));
            }
        }
    }
    pass()
}

fn local_power_of_multiples(c: &Ctx) -> Outcome {
    let r = c.ring;
    let odds = odd_elements(r);
    for x in r.elements() {
        for &a in &odds {
            for m in 1..=6 {
                let am = r.local_power(a, m).expect("odd operand");
                let left = r.local_power(r.mul(x, a), m).expect("odd operand") == r.mul(r.pow(x, m), am);
                let right = r.local_power(r.mul(a, x), m).expect("odd operand") == r.mul(am, r.pow(x, m));
                if !(left && right) {
                    return Err(format!("{} at power {m}", show(&[x, a])));
                }
            }
        }
    }
    pass()
}

fn triideal_lattice(c: &Ctx) -> Outcome {
    Ok(Some(format!("{} triideals", c.lattice().len())))
}

fn pair_characterization(c: &Ctx) -> Outcome {
    let r = c.ring;
    let evens = r.even().enumerate_ideals(&c.limits).map_err(|e| e.to_string())?;
    let odds = r.odd().enumerate_ideals(&c.limits).map_err(|e| e.to_string())?;
    for i0 in &evens {
        for i1 in &odds {
            if r.is_triideal(i0, i1) != r.satisfies_pair_condition(i0, i1) {
                return Err(format!("even {:?} | odd {:?}", i0.members(), i1.members()));
            }
        }
    }
    pass()
}

fn component_rings(r: &Triring) -> [(&'static str, &FiniteCommRing); 2] {
    [("even", r.even()), ("odd", r.odd())]
}

fn component_ideal_closure(c: &Ctx) -> Outcome {
    for (tag, ring) in component_rings(c.ring) {
        let ideals = ring.enumerate_ideals(&c.limits).map_err(|e| e.to_string())?;
        if let Some(i) = ideals.iter().find(|i| ring.ideal_generated(i.members()) != **i) {
            return Err(format!("{tag} ideal {:?}", i.members()));
        }
    }
    pass()
}

fn has_no_zero_divisors(ring: &FiniteCommRing, ideal: &Ideal) -> bool {
    let outside: Vec<usize> = ring.elements().filter(|&x| !ideal.contains(x)).collect();
    !outside.is_empty()
        && outside
            .iter()
            .all(|&a| outside.iter().all(|&b| !ideal.contains(ring.mul(a, b))))
}

fn component_prime_ideals(c: &Ctx) -> Outcome {
    for (tag, ring) in component_rings(c.ring) {
        let ideals = ring.enumerate_ideals(&c.limits).map_err(|e| e.to_string())?;
        if let Some(i) = ideals
            .iter()
            .find(|i| ring.is_prime_ideal(i) != has_no_zero_divisors(ring, i))
        {
            return Err(format!("{tag} ideal {:?}", i.members()));
        }
    }
    pass()
}

fn component_nilradicals(c: &Ctx) -> Outcome {
    for (tag, ring) in component_rings(c.ring) {
        let primes = ring.prime_ideals(&c.limits).map_err(|e| e.to_string())?;
        let meet = primes
            .iter()
            .fold(ring.whole_ideal(), |acc, p| ring.ideal_intersection(&acc, p));
        if meet != ring.nilradical() {
            return Err(format!("{tag} nilradical {:?} vs {:?}", ring.nilradical().members(), meet.members()));
        }
    }
    pass()
}

fn quotient_correspondence(c: &Ctx) -> Outcome {
    let r = c.ring;
    for i in c.lattice() {
        let q = r.quotient(i).map_err(|e| format!("[{i}]: {e}"))?;
        let analysis = TriringHom::analyze(r, &q.ring, q.natural.table().to_vec()).map_err(|e| format!("[{i}]: {e}"))?;
        if analysis.kernel != *i {
            return Err(format!("[{i}] has kernel [{}]", analysis.kernel));
        }
        let report = q.natural.correspondence_check(&c.limits).map_err(|e| format!("[{i}]: {e}"))?;
        if !report.is_bijection() {
            return Err(format!("[{i}]: {:?}", report.failures));
        }
    }
    pass()
}

fn trinilradical_elementwise(c: &Ctx) -> Outcome {
    let r = c.ring;
    let nil = r.trinilradical();
    if !r.is_triideal(nil.even(), nil.odd()) {
        return Err(format!("[{nil}] is not a triideal"));
    }
    first_failure(r.elements(), |&x| nil.contains(x) == r.is_trinilpotent(x), |x| show(&[x]))
}

fn ordinary_nilradical_decomposition(c: &Ctx) -> Outcome {
    let r = c.ring;
    let ordinary: BTreeSet<TriElement> = r.ordinary_nilradical().into_iter().collect();
    let nil0 = r.even().nilradical();
    first_failure(
        r.elements(),
        |&x| ordinary.contains(&x) == nil0.contains(x.even),
        |x| show(&[x]),
    )
}

fn trinilradical_within_ordinary(c: &Ctx) -> Outcome {
    let r = c.ring;
    let ordinary: BTreeSet<TriElement> = r.ordinary_nilradical().into_iter().collect();
    first_failure(r.trinilradical().members(), |x| ordinary.contains(x), |x| show(&[x]))
}

fn reduced_quotient(c: &Ctx) -> Outcome {
    let r = c.ring;
    let q = r.quotient(&r.trinilradical()).map_err(|e| e.to_string())?;
    let nil = q.ring.trinilradical();
    if nil.is_zero() {
        pass()
    } else {
        Err(format!("quotient has trinilradical [{nil}]"))
    }
}

fn radical_idempotent(c: &Ctx) -> Outcome {
    let r = c.ring;
    first_failure(
        c.lattice(),
        |i| {
            let rad = r.radical(i);
            r.is_triideal(rad.even(), rad.odd()) && i.is_subset(&rad) && r.radical(&rad) == rad
        },
        |i| format!("[{i}]"),
    )
}

fn radical_via_quotient(c: &Ctx) -> Outcome {
    let r = c.ring;
    first_failure(
        c.lattice(),
        |i| r.radical_via_quotient(i).as_ref() == Ok(&r.radical(i)),
        |i| format!("[{i}]"),
    )
}

fn prime_triideals(c: &Ctx) -> Outcome {
    let s = c.spec();
    Ok(Some(format!(
        "{} prime triideals, {} even + {} odd",
        s.len(),
        s.even_points().len(),
        s.odd_points().len()
    )))
}

fn even_point_characterization(c: &Ctx) -> Outcome {
    let r = c.ring;
    let s = c.spec();
    first_failure(
        c.lattice(),
        |i| {
            let even_point = s
                .points()
                .iter()
                .position(|p| p == *i)
                .is_some_and(|k| s.parity(k) == Parity::Even);
            even_point == (i.contains_odd_part() && r.even().is_prime_ideal(i.even()))
        },
        |i| format!("[{i}]"),
    )
}

fn odd_prime_extension(c: &Ctx) -> Outcome {
    let r = c.ring;
    if r.has_zero_odd_part() {
        return Ok(Some("odd part is zero".into()));
    }
    let s = c.spec();
    let primes = r.odd().prime_ideals(&c.limits).map_err(|e| e.to_string())?;
    for p1 in &primes {
        let p = r
            .extend_odd_prime(p1, &c.limits)
            .map_err(|e| format!("odd prime {:?}: {e}", p1.members()))?;
        if !s.points().contains(&p) {
            return Err(format!("odd prime {:?} extends to non-point [{p}]", p1.members()));
        }
    }
    Ok(Some(format!("{} odd primes extended", primes.len())))
}

fn mixed_product_primality(c: &Ctx) -> Outcome {
    let r = c.ring;
    let lattice = c.lattice();
    for p in c.spec().points() {
        for i in lattice {
            for j in lattice {
                let inside = r.mixed_product(i, j).is_subset(p);
                if inside != (i.is_subset(p) || j.is_subset(p)) {
                    return Err(format!("P = [{p}], I = [{i}], J = [{j}]"));
                }
            }
        }
    }
    pass()
}

fn trinilradical_is_prime_intersection(c: &Ctx) -> Outcome {
    let r = c.ring;
    let meet = r.intersect_all(c.spec().points());
    let nil = r.trinilradical();
    if meet == nil {
        Ok(Some(format!("[{nil}]")))
    } else {
        Err(format!("trinilradical [{nil}] vs intersection [{meet}]"))
    }
}

fn radical_is_prime_intersection(c: &Ctx) -> Outcome {
    let r = c.ring;
    let s = c.spec();
    first_failure(
        c.lattice().iter().filter(|i| !i.is_whole()),
        |i| s.intersection_above(i) == r.radical(i),
        |i| format!("[{i}]"),
    )
}

fn closed_set_extremes(c: &Ctx) -> Outcome {
    let r = c.ring;
    let s = c.spec();
    let all: Vec<usize> = (0..s.len()).collect();
    if s.vsharp(&r.zero_triideal()).members != all {
        return Err("V(0) is not the whole spectrum".into());
    }
    if !s.vsharp(&r.whole_triideal()).is_empty() {
        return Err("V(R) is not empty".into());
    }
    pass()
}

fn union(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().chain(b).copied().collect::<BTreeSet<_>>().into_iter().collect()
}

fn finite_unions(c: &Ctx) -> Outcome {
    let r = c.ring;
    let s = c.spec();
    let lattice = c.lattice();
    for i in lattice {
        for j in lattice {
            let joined = union(&s.vsharp(i).members, &s.vsharp(j).members);
            if joined != s.vsharp(&r.intersect(i, j)).members || joined != s.vsharp(&r.mixed_product(i, j)).members {
                return Err(format!("I = [{i}], J = [{j}]"));
            }
        }
    }
    pass()
}

fn arbitrary_intersections(c: &Ctx) -> Outcome {
    let r = c.ring;
    let s = c.spec();
    let lattice = c.lattice();
    let n = lattice.len();
    let check = |family: &[&Triideal]| -> bool {
        let meet: BTreeSet<usize> = (0..s.len())
            .filter(|&p| family.iter().all(|i| i.is_subset(&s.points()[p])))
            .collect();
        let sum = r.sum_all(family.iter().copied());
        meet.into_iter().collect::<Vec<_>>() == s.vsharp(&sum).members
    };
    let describe = |family: &[&Triideal]| {
        family
            .iter()
            .map(|i| format!("[{i}]"))
            .collect::<Vec<_>>()
            .join(", ")
    };
    for a in 0..n {
        for b in a..n {
            for c3 in b..n {
                let family = [&lattice[a], &lattice[b], &lattice[c3]];
                if !check(&family) {
                    return Err(describe(&family));
                }
            }
        }
    }
    let everything: Vec<&Triideal> = lattice.iter().collect();
    if !check(&everything) {
        return Err("the full lattice".into());
    }
    pass()
}

fn closed_sets_and_radicals(c: &Ctx) -> Outcome {
    let r = c.ring;
    let s = c.spec();
    let lattice = c.lattice();
    for i in lattice {
        let vi = s.vsharp(i).members;
        if vi != s.vsharp(&r.radical(i)).members {
            return Err(format!("V([{i}]) differs from V of its radical"));
        }
        for j in lattice {
            let vj = s.vsharp(j).members;
            let included = vi.iter().all(|p| vj.contains(p));
            if included != r.radical(j).is_subset(&r.radical(i)) {
                return Err(format!("I = [{i}], J = [{j}]"));
            }
        }
    }
    pass()
}

fn basic_opens_form_a_base(c: &Ctx) -> Outcome {
    let s = c.spec();
    first_failure(
        c.lattice(),
        |i| {
            let mut basic = BTreeSet::new();
            for &x0 in i.even().members() {
                basic.extend(s.dsharp_even(x0));
            }
            for &x1 in i.odd().members() {
                basic.extend(s.dsharp_odd(x1));
            }
            basic.into_iter().collect::<Vec<_>>() == s.dsharp(i)
        },
        |i| format!("[{i}]"),
    )
}

fn irreducible_iff_prime_radical(c: &Ctx) -> Outcome {
    let s = c.spec();
    let mut irreducible = 0;
    for i in c.lattice() {
        let closed = s.vsharp(i);
        if closed.is_empty() {
            continue;
        }
        if s.is_irreducible(&closed).map_err(|e| format!("[{i}]: {e}"))? {
            irreducible += 1;
        }
    }
    Ok(Some(format!("{irreducible} triideals with irreducible closed set")))
}

/// Every principal basic open: `D(x0)` for each even `x0`, `D(x1)` for each
/// odd `x1`.
pub fn principal_cover(r: &Triring) -> Vec<Triideal> {
    r.even()
        .elements()
        .map(|x0| r.principal_even(x0))
        .chain(r.odd().elements().map(|x1| r.principal_odd(x1)))
        .collect()
}

fn quasicompact(c: &Ctx, target: CoverTarget) -> Outcome {
    let r = c.ring;
    if target == CoverTarget::Odd && r.has_zero_odd_part() {
        return Ok(Some("odd part is zero".into()));
    }
    let cover = principal_cover(r);
    let sub = c.spec().quasicompact_subcover(&cover, target).map_err(|e| e.to_string())?;
    let (total, goal) = match target {
        CoverTarget::Full => (
            sub.witness.iter().fold(r.zero(), |acc, &(_, x)| r.add(acc, x)),
            r.one(),
        ),
        CoverTarget::Odd => (
            sub.witness.iter().fold(r.zero(), |acc, &(_, x)| r.add(acc, x)),
            r.local_one(),
        ),
    };
    if total != goal || !sub.witness.iter().all(|&(k, x)| cover[k].contains(x)) {
        return Err(format!("witness {:?} sums to {total}", sub.witness));
    }
    let terms: Vec<TriElement> = sub.witness.iter().map(|&(_, x)| x).collect();
    Ok(Some(format!("{} of {} opens, witness {}", sub.indices.len(), cover.len(), show(&terms))))
}

fn specialization_closure(c: &Ctx) -> Outcome {
    let s = c.spec();
    let order = s.specialization_order();
    first_failure(
        0..s.len(),
        |&p| {
            let above: Vec<usize> = (0..s.len()).filter(|&q| order.specializes(p, q)).collect();
            s.closure(&[p]) == above
        },
        |p| format!("point {p}"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use triring::corpus::standard_corpus;

    #[test]
    fn z4z2_passes_everything() {
        let ring = standard_corpus(&Limits::default()).unwrap().remove(0);
        let report = run_suite(&ring, Suite::All, &Limits::default(), Some(2)).unwrap();
        assert!(report.all_pass(), "{}", report.render());
        assert_eq!(report.results.len(), CHECKS.len());
    }

    #[test]
    fn suites_partition_the_checks() {
        let total: usize = [Suite::Axioms, Suite::Ideals, Suite::Nilradical, Suite::Spectrum, Suite::Topology]
            .iter()
            .map(|&s| check_names(s).len())
            .sum();
        assert_eq!(total, check_names(Suite::All).len());
    }
}
