//! Prime triideals, the trispectrum and its extended Zariski topology.
//!
//! Closed sets are `V(I) = { P : P contains I }`; open sets are their
//! complements `D(I)`. The basic opens are `D(x0) = D(R x0)` and
//! `D(x1) = D(R1 # x1)`. Everything here is finite, so topological
//! questions are decided by scanning the closed-set lattice.
//!
//! Primality follows the four graded implications literally. The odd-odd
//! implication is about `x1 # y1` and `P1`, not the product `x1 y1`, which
//! is always zero.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::commring::Ideal;
use crate::error::{Error, Result};
use crate::triideal::Triideal;
use crate::triring::{TriElement, Triring};
use crate::Limits;

impl Triring {
    /// Proper, and for all homogeneous `x`, `y` with `xy` (or `x # y`) in
    /// `P`, one of the factors lies in `P`.
    pub fn is_prime_triideal(&self, p: &Triideal) -> bool {
        if p.is_whole() {
            return false;
        }
        let (p0, p1) = (p.even(), p.odd());
        let evens: Vec<TriElement> = self.even_elements().collect();
        let odds: Vec<TriElement> = self.odd_elements().collect();
        let even_even = evens.iter().all(|&x| {
            evens.iter().all(|&y| {
                !p0.contains(self.mul(x, y).even) || p0.contains(x.even) || p0.contains(y.even)
            })
        });
        let even_odd = evens.iter().all(|&x| {
            odds.iter().all(|&y| {
                !p1.contains(self.mul(x, y).odd) || p0.contains(x.even) || p1.contains(y.odd)
            })
        });
        let odd_even = odds.iter().all(|&x| {
            evens.iter().all(|&y| {
                !p1.contains(self.mul(x, y).odd) || p1.contains(x.odd) || p0.contains(y.even)
            })
        });
        let odd_odd = odds.iter().all(|&x| {
            odds.iter().all(|&y| {
                !p1.contains(self.odd().mul(x.odd, y.odd)) || p1.contains(x.odd) || p1.contains(y.odd)
            })
        });
        even_even && even_odd && odd_even && odd_odd
    }

    /// Every triideal, as the pairs of component ideals that pass
    /// [`Triring::is_triideal`], in ascending [`Triideal`] order.
    pub fn enumerate_triideals(&self, limits: &Limits) -> Result<Vec<Triideal>> {
        let evens = self.even().enumerate_ideals(limits)?;
        let odds = self.odd().enumerate_ideals(limits)?;
        let mut out = Vec::new();
        for i0 in &evens {
            for i1 in &odds {
                if self.is_triideal(i0, i1) {
                    if out.len() >= limits.max_ideals {
                        return Err(Error::SizeLimit {
                            what: "triideal count",
                            count: out.len() + 1,
                            cap: limits.max_ideals,
                        });
                    }
                    out.push(Triideal::from_parts(i0.clone(), i1.clone()));
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// Extends a prime `P1` of `(R1, +, #)` to the prime triideal `P0 + P1`
    /// with `P0 = { x0 : R1 x0 in P1 }`, the largest ideal `I0` of `R0` with
    /// `R1 I0` inside `P1`.
    pub fn extend_odd_prime(&self, p1: &Ideal, limits: &Limits) -> Result<Triideal> {
        if p1.ring_size() != self.odd().size() || !self.odd().is_prime_ideal(p1) {
            return Err(Error::NotPrimeInput);
        }
        let annihilates = |x0: usize| {
            self.odd_elements()
                .all(|a| p1.contains(self.mul(a, TriElement::even(x0)).odd))
        };
        let p0 = self
            .even()
            .ideal_from_members(self.even().elements().filter(|&x0| annihilates(x0)));
        if !self.even().is_ideal(p0.members()) || !self.even().is_prime_ideal(&p0) {
            return Err(Error::Invariant(format!("extension {p0:?} is not a prime ideal")));
        }
        let p = self
            .triideal(p0, p1.clone())
            .map_err(|_| Error::Invariant("extension is not a triideal".into()))?;
        if !self.is_prime_triideal(&p) {
            return Err(Error::Invariant(format!("extension [{p}] is not prime")));
        }
        for i0 in self.even().enumerate_ideals(limits)? {
            let in_omega = i0.members().iter().all(|&x0| annihilates(x0));
            if in_omega && !i0.is_subset(p.even()) {
                return Err(Error::Invariant(format!(
                    "extension misses ideal {:?}",
                    i0.members()
                )));
            }
        }
        Ok(p)
    }

    /// Reports whether `R / P` is faithful as a left and as a right module
    /// over `R0 / P0`, i.e. both annihilators in `R0` equal `P0`. Diagnostic
    /// only: the characterization of odd primes through this property is not
    /// relied upon anywhere.
    pub fn odd_faithfulness_diagnostic(&self, p: &Triideal) -> bool {
        let left = self
            .even_elements()
            .filter(|&x| self.elements().all(|y| p.contains(self.mul(x, y))));
        let right = self
            .even_elements()
            .filter(|&x| self.elements().all(|y| p.contains(self.mul(y, x))));
        let left: Vec<usize> = left.map(|x| x.even).collect();
        let right: Vec<usize> = right.map(|x| x.even).collect();
        self.even().is_prime_ideal(p.even())
            && self.odd().is_prime_ideal(p.odd())
            && left == p.even().members()
            && right == p.even().members()
    }
}

/// Whether a point of the trispectrum contains the odd part.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => f.write_str("even"),
            Parity::Odd => f.write_str("odd"),
        }
    }
}

/// A closed set `V(I)`, identified by its member points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedSet {
    pub defining: Triideal,
    /// Sorted point indices.
    pub members: Vec<usize>,
}

impl ClosedSet {
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Which part of the spectrum a cover must reach.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverTarget {
    /// The whole trispectrum.
    Full,
    /// The odd trispectrum.
    Odd,
}

/// A finite subcover and the partition of unity that proves it covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subcover {
    /// Sorted indices into the original cover.
    pub indices: Vec<usize>,
    /// `(cover index, element)` pairs whose elements sum to `1` (full
    /// target) or `1#` (odd target), each element drawn from the matching
    /// component of its cover ideal.
    pub witness: Vec<(usize, TriElement)>,
}

/// The specialization preorder: `p -> q` when point `q` contains point `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecializationOrder {
    pub point_count: usize,
    /// Strict relations `(p, q)` with `p` properly contained in `q`.
    pub edges: Vec<(usize, usize)>,
}

impl SpecializationOrder {
    pub fn specializes(&self, p: usize, q: usize) -> bool {
        p == q || self.edges.binary_search(&(p, q)).is_ok()
    }
}

/// The prime triideals of a triring with their even/odd split.
#[derive(Debug, Clone)]
pub struct Trispectrum<'r> {
    ring: &'r Triring,
    lattice: Vec<Triideal>,
    points: Vec<Triideal>,
    parity: Vec<Parity>,
    closed_sets: Vec<Vec<usize>>,
}

impl<'r> Trispectrum<'r> {
    pub fn new(ring: &'r Triring, limits: &Limits) -> Result<Self> {
        let lattice = ring.enumerate_triideals(limits)?;
        let points: Vec<Triideal> = lattice
            .iter()
            .filter(|p| ring.is_prime_triideal(p))
            .cloned()
            .collect();
        let parity: Vec<Parity> = points
            .iter()
            .map(|p| if p.contains_odd_part() { Parity::Even } else { Parity::Odd })
            .collect();
        if !ring.is_zero() && !parity.contains(&Parity::Even) {
            return Err(Error::Invariant("even trispectrum is empty".into()));
        }
        if !ring.has_zero_odd_part() && !parity.contains(&Parity::Odd) {
            return Err(Error::Invariant("odd trispectrum is empty for a nonzero odd part".into()));
        }
        let mut spectrum = Trispectrum {
            ring,
            lattice,
            points,
            parity,
            closed_sets: Vec::new(),
        };
        let closed: BTreeSet<Vec<usize>> = spectrum
            .lattice
            .iter()
            .map(|i| spectrum.containing(i))
            .collect();
        spectrum.closed_sets = closed.into_iter().collect();
        spectrum.closed_sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(spectrum)
    }

    pub fn ring(&self) -> &'r Triring {
        self.ring
    }

    /// Every triideal of the ring.
    pub fn lattice(&self) -> &[Triideal] {
        &self.lattice
    }

    pub fn points(&self) -> &[Triideal] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn parity(&self, point: usize) -> Parity {
        self.parity[point]
    }

    pub fn even_points(&self) -> Vec<usize> {
        self.with_parity(Parity::Even)
    }

    pub fn odd_points(&self) -> Vec<usize> {
        self.with_parity(Parity::Odd)
    }

    fn with_parity(&self, parity: Parity) -> Vec<usize> {
        (0..self.points.len()).filter(|&i| self.parity[i] == parity).collect()
    }

    fn containing(&self, ideal: &Triideal) -> Vec<usize> {
        (0..self.points.len())
            .filter(|&i| ideal.is_subset(&self.points[i]))
            .collect()
    }

    /// `V(I)`.
    pub fn vsharp(&self, ideal: &Triideal) -> ClosedSet {
        ClosedSet {
            defining: ideal.clone(),
            members: self.containing(ideal),
        }
    }

    /// `D(I)`, the complement of `V(I)`.
    pub fn dsharp(&self, ideal: &Triideal) -> Vec<usize> {
        (0..self.points.len())
            .filter(|&i| !ideal.is_subset(&self.points[i]))
            .collect()
    }

    /// `D(x0) = D(R x0)`.
    pub fn dsharp_even(&self, x0: usize) -> Vec<usize> {
        self.dsharp(&self.ring.principal_even(x0))
    }

    /// `D(x1) = D(R1 # x1)`.
    pub fn dsharp_odd(&self, x1: usize) -> Vec<usize> {
        self.dsharp(&self.ring.principal_odd(x1))
    }

    /// The distinct closed sets, each as a sorted member list, ordered by
    /// size and then lexicographically.
    pub fn closed_sets(&self) -> &[Vec<usize>] {
        &self.closed_sets
    }

    /// Whether `members` is a union of two closed sets each strictly
    /// smaller than it. Decided by scanning the closed-set lattice.
    pub fn is_reducible_brute_force(&self, members: &[usize]) -> bool {
        let target: BTreeSet<usize> = members.iter().copied().collect();
        let proper: Vec<BTreeSet<usize>> = self
            .closed_sets
            .iter()
            .map(|c| c.iter().copied().collect::<BTreeSet<usize>>())
            .filter(|c| c.is_subset(&target) && c.len() < target.len())
            .collect();
        proper.iter().any(|a| {
            proper
                .iter()
                .any(|b| a.union(b).count() == target.len())
        })
    }

    /// Irreducibility of a nonempty closed set, decided by brute force and
    /// cross-checked against primality of the radical of its defining
    /// triideal. A disagreement is reported as an error.
    pub fn is_irreducible(&self, closed: &ClosedSet) -> Result<bool> {
        if closed.is_empty() {
            return Err(Error::EmptySet);
        }
        let brute = !self.is_reducible_brute_force(&closed.members);
        let radical_prime = self
            .ring
            .is_prime_triideal(&self.ring.radical(&closed.defining));
        if brute != radical_prime {
            return Err(Error::Invariant(format!(
                "irreducibility of V([{}]) is {brute} by search but radical primality is {radical_prime}",
                closed.defining
            )));
        }
        Ok(brute)
    }

    /// Finds a finite subcover of `target` inside the basic-open family
    /// `{ D(I) : I in cover }` by searching for a shortest sum of even (full
    /// target) or odd (odd target) components equal to `1` or `1#`.
    /// Breadth-first over partial sums; earlier cover entries and smaller
    /// elements win ties.
    pub fn quasicompact_subcover(&self, cover: &[Triideal], target: CoverTarget) -> Result<Subcover> {
        let targets = match target {
            CoverTarget::Full => (0..self.points.len()).collect(),
            CoverTarget::Odd => self.odd_points(),
        };
        for &p in &targets {
            if cover.iter().all(|i| i.is_subset(&self.points[p])) {
                return Err(Error::NotACover { point: p });
            }
        }
        let (ring, component): (_, fn(&Triideal) -> &Ideal) = match target {
            CoverTarget::Full => (self.ring.even(), Triideal::even),
            CoverTarget::Odd => (self.ring.odd(), Triideal::odd),
        };
        let lift = |x: usize| match target {
            CoverTarget::Full => TriElement::even(x),
            CoverTarget::Odd => TriElement::odd(x),
        };
        let goal = ring.one();

        // parent[v] = (previous partial sum, cover index, summand)
        let mut parent: Vec<Option<(usize, usize, usize)>> = vec![None; ring.size()];
        let mut seen = vec![false; ring.size()];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(v) = queue.pop_front() {
            if v == goal {
                break;
            }
            for (ci, ideal) in cover.iter().enumerate() {
                for &x in component(ideal).members().iter().filter(|&&x| x != 0) {
                    let w = ring.add(v, x);
                    if !seen[w] {
                        seen[w] = true;
                        parent[w] = Some((v, ci, x));
                        queue.push_back(w);
                    }
                }
            }
        }
        if !seen[goal] {
            return Err(Error::Invariant(
                "cover reaches every point but its components do not sum to the identity".into(),
            ));
        }
        let mut witness = Vec::new();
        let mut v = goal;
        while let Some((prev, ci, x)) = parent[v] {
            witness.push((ci, lift(x)));
            v = prev;
        }
        witness.reverse();
        let indices: Vec<usize> = witness
            .iter()
            .map(|&(ci, _)| ci)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();

        let covered: BTreeSet<usize> = indices.iter().flat_map(|&ci| self.dsharp(&cover[ci])).collect();
        let basic_covered: BTreeSet<usize> = witness
            .iter()
            .flat_map(|&(_, x)| match target {
                CoverTarget::Full => self.dsharp_even(x.even),
                CoverTarget::Odd => self.dsharp_odd(x.odd),
            })
            .collect();
        if targets.iter().any(|p| !covered.contains(p) || !basic_covered.contains(p)) {
            return Err(Error::Invariant("subcover does not cover the target".into()));
        }
        Ok(Subcover { indices, witness })
    }

    pub fn specialization_order(&self) -> SpecializationOrder {
        let n = self.points.len();
        let edges = (0..n)
            .flat_map(|p| (0..n).map(move |q| (p, q)))
            .filter(|&(p, q)| p != q && self.points[p].is_subset(&self.points[q]))
            .collect();
        SpecializationOrder {
            point_count: n,
            edges,
        }
    }

    /// Closure of a point set: `V` of the intersection of its points.
    pub fn closure(&self, points: &[usize]) -> Vec<usize> {
        let meet = self
            .ring
            .intersect_all(points.iter().map(|&p| &self.points[p]));
        self.containing(&meet)
    }

    /// Intersection of all points, or of all points containing `ideal`.
    pub fn intersection_above(&self, ideal: &Triideal) -> Triideal {
        self.ring.intersect_all(
            self.points
                .iter()
                .filter(|p| ideal.is_subset(p)),
        )
    }
}
