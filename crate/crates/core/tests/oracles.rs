//! Independent brute-force oracles, written without the library's
//! enumeration or primality code, compared against the library on the
//! standard corpus. Counts frozen below were produced by these oracles.

use std::collections::BTreeSet;

use triring::corpus::standard_corpus;
use triring::{FiniteCommRing, Limits, TriElement, Triring, Trispectrum};

/// Every subset of the carrier that is an additive subgroup closed under
/// multiplication by the ring, as sorted member lists.
fn oracle_ideals(ring: &FiniteCommRing) -> BTreeSet<Vec<usize>> {
    let n = ring.size();
    assert!(n <= 16, "subset oracle is exponential");
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        if mask & 1 == 0 {
            continue;
        }
        let has = |x: usize| mask >> x & 1 == 1;
        let members: Vec<usize> = (0..n).filter(|&x| has(x)).collect();
        let closed = members.iter().all(|&a| {
            members.iter().all(|&b| has(ring.sub(a, b))) && (0..n).all(|r| has(ring.mul(r, a)))
        });
        if closed {
            out.insert(members);
        }
    }
    out
}

fn product(r: &Triring, x: TriElement, y: TriElement) -> TriElement {
    // Written out from the structure maps rather than through `Triring::mul`.
    let e = r.even();
    let o = r.odd();
    TriElement::new(
        e.mul(x.even, y.even),
        o.add(o.mul(r.lambda(x.even), y.odd), o.mul(x.odd, r.rho(y.even))),
    )
}

type Pair = (Vec<usize>, Vec<usize>);

/// Triideals as pairs of component subgroups `(I0, I1)` such that `I0 + I1`
/// absorbs products from both sides and `I1` absorbs `#`.
fn oracle_triideals(r: &Triring) -> BTreeSet<Pair> {
    let evens = oracle_ideals(r.even());
    let odds = oracle_ideals(r.odd());
    let mut out = BTreeSet::new();
    for i0 in &evens {
        for i1 in &odds {
            let contains = |x: TriElement| i0.binary_search(&x.even).is_ok() && i1.binary_search(&x.odd).is_ok();
            let members: Vec<TriElement> = i0
                .iter()
                .flat_map(|&a| i1.iter().map(move |&b| TriElement::new(a, b)))
                .collect();
            let absorbs = members.iter().all(|&m| {
                r.elements()
                    .all(|x| contains(product(r, x, m)) && contains(product(r, m, x)))
            });
            if absorbs {
                out.insert((i0.clone(), i1.clone()));
            }
        }
    }
    out
}

/// The graded primality implications, quantified over all of `R0` and `R1`.
fn oracle_is_prime(r: &Triring, (p0, p1): &Pair) -> bool {
    if p0.len() == r.even().size() && p1.len() == r.odd().size() {
        return false;
    }
    let in0 = |x: usize| p0.binary_search(&x).is_ok();
    let in1 = |x: usize| p1.binary_search(&x).is_ok();
    let (n0, n1) = (r.even().size(), r.odd().size());
    for x in 0..n0 {
        for y in 0..n0 {
            if in0(r.even().mul(x, y)) && !in0(x) && !in0(y) {
                return false;
            }
        }
        for a in 0..n1 {
            let xa = product(r, TriElement::even(x), TriElement::odd(a)).odd;
            let ax = product(r, TriElement::odd(a), TriElement::even(x)).odd;
            if in1(xa) && !in0(x) && !in1(a) {
                return false;
            }
            if in1(ax) && !in0(x) && !in1(a) {
                return false;
            }
        }
    }
    for a in 0..n1 {
        for b in 0..n1 {
            if in1(r.odd().mul(a, b)) && !in1(a) && !in1(b) {
                return false;
            }
        }
    }
    true
}

fn nilpotent(ring: &FiniteCommRing, x: usize) -> bool {
    let mut p = x;
    for _ in 0..=ring.size() {
        if p == 0 {
            return true;
        }
        p = ring.mul(p, x);
    }
    false
}

fn small_corpus() -> Vec<Triring> {
    standard_corpus(&Limits::default())
        .unwrap()
        .into_iter()
        .filter(|r| r.even().size() <= 16 && r.odd().size() <= 16)
        .collect()
}

fn as_pair(t: &triring::Triideal) -> Pair {
    (t.even().members().to_vec(), t.odd().members().to_vec())
}

#[test]
fn component_ideals_match_subset_search() {
    let limits = Limits::default();
    for r in small_corpus() {
        for ring in [r.even(), r.odd()] {
            let got: BTreeSet<Vec<usize>> = ring
                .enumerate_ideals(&limits)
                .unwrap()
                .iter()
                .map(|i| i.members().to_vec())
                .collect();
            assert_eq!(got, oracle_ideals(ring), "{}", r.name());
        }
    }
    for n in 1..=16 {
        let ring = FiniteCommRing::integers_mod(n).unwrap();
        let divisors = (1..=n).filter(|d| n % d == 0).count();
        assert_eq!(oracle_ideals(&ring).len(), divisors);
        assert_eq!(ring.enumerate_ideals(&limits).unwrap().len(), divisors);
    }
}

// (name, triideals, prime triideals, even points, odd points), frozen from
// the oracles in this file.
const FROZEN: &[(&str, usize, usize, usize, usize)] = &[
    ("z4z2", 5, 2, 1, 1),
    ("tq2", 6, 2, 1, 1),
    ("tq3", 3, 2, 1, 1),
    ("tq4", 15, 2, 1, 1),
    ("z6", 4, 2, 2, 0),
    ("z8", 4, 1, 1, 0),
    ("z2xz2", 4, 2, 2, 0),
    ("z2z2_z2", 6, 3, 2, 1),
    ("z6_z3", 6, 3, 2, 1),
    ("z6_z2xz3", 9, 4, 2, 2),
    ("dual_z2", 5, 2, 1, 1),
    ("z9_z3", 5, 2, 1, 1),
    ("z4_z4", 6, 2, 1, 1),
    ("f4_frob", 3, 2, 1, 1),
];

#[test]
fn triideals_and_primes_match_oracle() {
    let limits = Limits::default();
    for r in small_corpus() {
        let lattice = r.enumerate_triideals(&limits).unwrap();
        let got: BTreeSet<Pair> = lattice.iter().map(as_pair).collect();
        let want = oracle_triideals(&r);
        assert_eq!(got, want, "{}", r.name());

        let spectrum = Trispectrum::new(&r, &limits).unwrap();
        let points: BTreeSet<Pair> = spectrum.points().iter().map(as_pair).collect();
        let oracle_points: BTreeSet<Pair> = want.iter().filter(|p| oracle_is_prime(&r, p)).cloned().collect();
        assert_eq!(points, oracle_points, "{}", r.name());

        let frozen = FROZEN.iter().find(|f| f.0 == r.name()).expect("frozen entry");
        let odd_full = |p: &Pair| p.1.len() == r.odd().size();
        assert_eq!(
            (
                want.len(),
                oracle_points.len(),
                oracle_points.iter().filter(|p| odd_full(p)).count(),
                oracle_points.iter().filter(|p| !odd_full(p)).count(),
            ),
            (frozen.1, frozen.2, frozen.3, frozen.4),
            "{}",
            r.name()
        );
    }
}

#[test]
fn large_members_match_frozen_counts() {
    let limits = Limits::default();
    for r in standard_corpus(&limits).unwrap() {
        let s = Trispectrum::new(&r, &limits).unwrap();
        let frozen = FROZEN.iter().find(|f| f.0 == r.name()).expect("frozen entry");
        assert_eq!(
            (s.lattice().len(), s.len(), s.even_points().len(), s.odd_points().len()),
            (frozen.1, frozen.2, frozen.3, frozen.4),
            "{}",
            r.name()
        );
    }
}

#[test]
fn trinilradical_matches_power_iteration() {
    for r in standard_corpus(&Limits::default()).unwrap() {
        let nil = r.trinilradical();
        for x in r.elements() {
            let expected = nilpotent(r.even(), x.even) && nilpotent(r.odd(), x.odd);
            assert_eq!(nil.contains(x), expected, "{} at {x}", r.name());
        }
    }
}

#[test]
fn known_trinilradicals() {
    let corpus = standard_corpus(&Limits::default()).unwrap();
    let z4z2 = &corpus[0];
    assert_eq!(as_pair(&z4z2.trinilradical()), (vec![0, 2], vec![0]));
    let tq3 = &corpus[2];
    assert!(tq3.trinilradical().is_zero());
}

#[test]
fn axioms_hold_on_all_element_triples() {
    for r in standard_corpus(&Limits::default()).unwrap() {
        if r.size() > 81 {
            continue;
        }
        let all: Vec<TriElement> = r.elements().collect();
        for &x in &all {
            for &y in &all {
                let xy = product(&r, x, y);
                assert_eq!(r.mul(x, y), xy);
                for &z in &all {
                    assert_eq!(product(&r, xy, z), product(&r, x, product(&r, y, z)), "{} {x} {y} {z}", r.name());
                }
            }
        }
        let odds: Vec<TriElement> = r.odd_elements().collect();
        for &x in &all {
            for &a in &odds {
                for &b in &odds {
                    let ab = TriElement::odd(r.odd().mul(a.odd, b.odd));
                    let xa = product(&r, x, a);
                    let bx = product(&r, b, x);
                    assert_eq!(product(&r, x, ab).odd, r.odd().mul(xa.odd, b.odd));
                    assert_eq!(product(&r, ab, x).odd, r.odd().mul(a.odd, bx.odd));
                    assert!(product(&r, a, b).is_zero());
                }
            }
        }
    }
}
