//! Triideals and the algebra built on them: generation, sums, intersections,
//! mixed products, quotient trirings, homomorphisms, trinilradicals and
//! radicals.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::commring::Ideal;
use crate::error::{Error, Result, Witness};
use crate::triring::{build_triring, TriElement, Triring};
use crate::Limits;

/// A triideal `I = I0 + I1`, stored as its two component ideals.
///
/// The pair representation makes the splitting `I = (I n R0) + (I n R1)`
/// hold by construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Triideal {
    even: Ideal,
    odd: Ideal,
}

impl Triideal {
    pub(crate) fn from_parts(even: Ideal, odd: Ideal) -> Self {
        Triideal { even, odd }
    }

    pub fn even(&self) -> &Ideal {
        &self.even
    }

    pub fn odd(&self) -> &Ideal {
        &self.odd
    }

    pub fn contains(&self, x: TriElement) -> bool {
        self.even.contains(x.even) && self.odd.contains(x.odd)
    }

    pub fn is_subset(&self, other: &Triideal) -> bool {
        self.even.is_subset(&other.even) && self.odd.is_subset(&other.odd)
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    pub fn is_whole(&self) -> bool {
        self.even.is_whole() && self.odd.is_whole()
    }

    /// Whether the odd part of the ring is contained in this triideal.
    pub fn contains_odd_part(&self) -> bool {
        self.odd.is_whole()
    }

    pub fn cardinality(&self) -> usize {
        self.even.len() * self.odd.len()
    }

    pub fn members(&self) -> impl Iterator<Item = TriElement> + '_ {
        self.even
            .members()
            .iter()
            .flat_map(move |&a| self.odd.members().iter().map(move |&b| TriElement::new(a, b)))
    }
}

impl PartialOrd for Triideal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Triideal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cardinality()
            .cmp(&other.cardinality())
            .then_with(|| self.even.cmp(&other.even))
            .then_with(|| self.odd.cmp(&other.odd))
    }
}

impl fmt::Display for Triideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |i: &Ideal| {
            i.members()
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "even {{{}}} | odd {{{}}}", list(&self.even), list(&self.odd))
    }
}

/// A quotient triring with its natural surjection and coset representatives
/// (the least index of each coset, per component).
#[derive(Debug, Clone)]
pub struct QuotientTriring {
    pub ring: Triring,
    pub natural: TriringHom,
    pub even_reps: Vec<usize>,
    pub odd_reps: Vec<usize>,
}

impl QuotientTriring {
    pub fn representative(&self, coset: TriElement) -> TriElement {
        TriElement::new(self.even_reps[coset.even], self.odd_reps[coset.odd])
    }
}

/// A validated triring homomorphism, stored as a table over flat indices of
/// the source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriringHom {
    source: Triring,
    target: Triring,
    map: Vec<TriElement>,
}

/// Result of [`TriringHom::analyze`].
#[derive(Debug, Clone)]
pub struct HomAnalysis {
    pub hom: TriringHom,
    pub kernel: Triideal,
    /// Sorted image set.
    pub image: Vec<TriElement>,
}

impl TriringHom {
    /// Validates a candidate map and returns it as a homomorphism.
    pub fn new(source: &Triring, target: &Triring, map: Vec<TriElement>) -> Result<Self> {
        check_hom_conditions(source, target, &map)?;
        Ok(TriringHom {
            source: source.clone(),
            target: target.clone(),
            map,
        })
    }

    pub fn source(&self) -> &Triring {
        &self.source
    }

    pub fn target(&self) -> &Triring {
        &self.target
    }

    pub fn apply(&self, x: TriElement) -> TriElement {
        self.map[self.source.index_of(x)]
    }

    pub fn table(&self) -> &[TriElement] {
        &self.map
    }

    /// Validates the candidate, computes kernel and image, and checks that
    /// the induced map `R / ker -> im` is a well-defined injective
    /// homomorphism onto the image.
    pub fn analyze(source: &Triring, target: &Triring, map: Vec<TriElement>) -> Result<HomAnalysis> {
        let hom = TriringHom::new(source, target, map)?;
        let kernel_set: BTreeSet<TriElement> =
            source.elements().filter(|&x| hom.apply(x).is_zero()).collect();
        let kernel = source
            .triideal_from_set(&kernel_set)
            .ok_or_else(|| Error::Invariant("kernel is not a triideal".into()))?;
        let image: Vec<TriElement> = source
            .elements()
            .map(|x| hom.apply(x))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if !target.is_subtriring(&image) {
            return Err(Error::Invariant("image is not a subtriring".into()));
        }

        let quotient = source.quotient(&kernel)?;
        let induced: Vec<TriElement> = quotient
            .ring
            .elements()
            .map(|q| hom.apply(quotient.representative(q)))
            .collect();
        for x in source.elements() {
            let q = quotient.natural.apply(x);
            if induced[quotient.ring.index_of(q)] != hom.apply(x) {
                return Err(Error::Invariant(format!("induced map is not well defined at {x}")));
            }
        }
        let induced_image: BTreeSet<TriElement> = induced.iter().copied().collect();
        if induced_image.len() != induced.len() {
            return Err(Error::Invariant("induced map on the quotient is not injective".into()));
        }
        if induced_image.into_iter().collect::<Vec<_>>() != image {
            return Err(Error::Invariant("induced map does not land onto the image".into()));
        }
        check_hom_conditions(&quotient.ring, target, &induced)?;
        Ok(HomAnalysis { hom, kernel, image })
    }

    pub fn is_surjective(&self) -> bool {
        self.first_missing().is_none()
    }

    fn first_missing(&self) -> Option<TriElement> {
        let hit: BTreeSet<TriElement> = self.map.iter().copied().collect();
        self.target.elements().find(|y| !hit.contains(y))
    }

    /// `phi(I)` as a set, returned as a triideal of the target when it is one.
    pub fn image_of(&self, ideal: &Triideal) -> Option<Triideal> {
        let set: BTreeSet<TriElement> = ideal.members().map(|x| self.apply(x)).collect();
        self.target.triideal_from_set(&set)
    }

    /// `phi^{-1}(J)`, returned as a triideal of the source when it is one.
    pub fn preimage_of(&self, ideal: &Triideal) -> Option<Triideal> {
        let set: BTreeSet<TriElement> =
            self.source.elements().filter(|&x| ideal.contains(self.apply(x))).collect();
        self.source.triideal_from_set(&set)
    }

    /// Checks the lattice correspondence for a surjective homomorphism:
    /// `I -> phi(I)` is a bijection from triideals containing the kernel onto
    /// triideals of the target, inverted by `phi^{-1}`, components map onto
    /// components, and `R / I ~ target / phi(I)` for every such `I`.
    pub fn correspondence_check(&self, limits: &Limits) -> Result<CorrespondenceReport> {
        if let Some(missing) = self.first_missing() {
            return Err(Error::NotSurjective(missing));
        }
        let mut report = CorrespondenceReport::default();
        let even_hit: BTreeSet<usize> = self.source.even_elements().map(|x| self.apply(x).even).collect();
        let odd_hit: BTreeSet<usize> = self.source.odd_elements().map(|x| self.apply(x).odd).collect();
        report.components_onto = even_hit.len() == self.target.even().size()
            && odd_hit.len() == self.target.odd().size()
            && self.source.even_elements().all(|x| self.apply(x).is_even())
            && self.source.odd_elements().all(|x| self.apply(x).is_odd());

        let kernel_set: BTreeSet<TriElement> =
            self.source.elements().filter(|&x| self.apply(x).is_zero()).collect();
        let kernel = self
            .source
            .triideal_from_set(&kernel_set)
            .ok_or_else(|| Error::Invariant("kernel is not a triideal".into()))?;
        let above: Vec<Triideal> = self
            .source
            .enumerate_triideals(limits)?
            .into_iter()
            .filter(|i| kernel.is_subset(i))
            .collect();
        let below = self.target.enumerate_triideals(limits)?;
        report.source_count = above.len();
        report.target_count = below.len();

        let mut images = BTreeSet::new();
        for i in &above {
            match self.image_of(i) {
                Some(img) => {
                    if self.preimage_of(&img).as_ref() != Some(i) {
                        report.failures.push(format!("preimage of image of [{i}] differs"));
                    }
                    if !self.quotients_isomorphic(i, &img)? {
                        report.failures.push(format!("quotients by [{i}] and [{img}] not isomorphic"));
                    }
                    images.insert(img);
                }
                None => report.failures.push(format!("image of [{i}] is not a triideal")),
            }
        }
        if images.len() != above.len() {
            report.failures.push("image map is not injective".into());
        }
        for j in &below {
            match self.preimage_of(j) {
                Some(pre) if kernel.is_subset(&pre) => {
                    if self.image_of(&pre).as_ref() != Some(j) {
                        report.failures.push(format!("image of preimage of [{j}] differs"));
                    }
                }
                _ => report.failures.push(format!("preimage of [{j}] is not a triideal above the kernel")),
            }
        }
        if images != below.iter().cloned().collect() {
            report.failures.push("image map is not onto the target lattice".into());
        }
        if !report.components_onto {
            report.failures.push("components do not map onto components".into());
        }
        Ok(report)
    }

    fn quotients_isomorphic(&self, ideal: &Triideal, image: &Triideal) -> Result<bool> {
        let qa = self.source.quotient(ideal)?;
        let qb = self.target.quotient(image)?;
        let map: Vec<TriElement> = qa
            .ring
            .elements()
            .map(|c| qb.natural.apply(self.apply(qa.representative(c))))
            .collect();
        let distinct: BTreeSet<TriElement> = map.iter().copied().collect();
        if distinct.len() != map.len() || map.len() != qb.ring.size() {
            return Ok(false);
        }
        Ok(check_hom_conditions(&qa.ring, &qb.ring, &map).is_ok())
    }
}

/// Outcome of [`TriringHom::correspondence_check`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CorrespondenceReport {
    /// Triideals of the source containing the kernel.
    pub source_count: usize,
    /// Triideals of the target.
    pub target_count: usize,
    pub components_onto: bool,
    pub failures: Vec<String>,
}

impl CorrespondenceReport {
    pub fn is_bijection(&self) -> bool {
        self.failures.is_empty() && self.source_count == self.target_count
    }
}

fn check_hom_conditions(source: &Triring, target: &Triring, map: &[TriElement]) -> Result<()> {
    if map.len() != source.size() {
        return Err(Error::Malformed(format!(
            "map has {} entries, source has {} elements",
            map.len(),
            source.size()
        )));
    }
    if let Some(bad) = map.iter().find(|y| !target.contains(**y)) {
        return Err(Error::Malformed(format!("map value {bad} outside the target")));
    }
    let phi = |x: TriElement| map[source.index_of(x)];
    let fail = |condition: &'static str, witness: Vec<TriElement>| {
        Err(Error::NotAHom {
            condition,
            witness: Witness(witness),
        })
    };
    if let Some(x) = source.even_elements().find(|&x| !phi(x).is_even()) {
        return fail("even-grade", vec![x]);
    }
    if let Some(x) = source.odd_elements().find(|&x| !phi(x).is_odd()) {
        return fail("odd-grade", vec![x]);
    }
    if phi(source.one()) != target.one() {
        return fail("unital", vec![source.one()]);
    }
    if phi(source.local_one()) != target.local_one() {
        return fail("local-unital", vec![source.local_one()]);
    }
    // With the grading preserved, additivity on all of R reduces to
    // additivity on each component plus phi(x0 + x1) = phi(x0) + phi(x1).
    if let Some(x) = source
        .elements()
        .find(|&x| phi(x) != target.add(phi(x.even_part()), phi(x.odd_part())))
    {
        return fail("additive", vec![x.even_part(), x.odd_part()]);
    }
    let homog: Vec<TriElement> = source.even_elements().chain(source.odd_elements().skip(1)).collect();
    for &x in &homog {
        for &y in &homog {
            if x.is_even() == y.is_even() && phi(source.add(x, y)) != target.add(phi(x), phi(y)) {
                return fail("additive", vec![x, y]);
            }
        }
    }
    for &x in &homog {
        for &y in &homog {
            if phi(source.mul(x, y)) != target.mul(phi(x), phi(y)) {
                return fail("multiplicative", vec![x, y]);
            }
        }
    }
    for a in source.odd_elements() {
        for b in source.odd_elements() {
            let lhs = phi(TriElement::odd(source.odd().mul(a.odd, b.odd)));
            let rhs = TriElement::odd(target.odd().mul(phi(a).odd, phi(b).odd));
            if lhs != rhs {
                return fail("local-product", vec![a, b]);
            }
        }
    }
    Ok(())
}

impl Triring {
    pub fn zero_triideal(&self) -> Triideal {
        Triideal::from_parts(self.even().zero_ideal(), self.odd().zero_ideal())
    }

    pub fn whole_triideal(&self) -> Triideal {
        Triideal::from_parts(self.even().whole_ideal(), self.odd().whole_ideal())
    }

    /// `0 + R1`.
    pub fn odd_part_triideal(&self) -> Triideal {
        Triideal::from_parts(self.even().zero_ideal(), self.odd().whole_ideal())
    }

    /// Whether `(I0, I1)` is a triideal: `I0` an ideal of `R0`, `I1` an ideal
    /// of `(R1, +, #)`, and `IR + RI` inside `I` for the assembled product.
    pub fn is_triideal(&self, even: &Ideal, odd: &Ideal) -> bool {
        if even.ring_size() != self.even().size() || odd.ring_size() != self.odd().size() {
            return false;
        }
        if !self.even().is_ideal(even.members()) || !self.odd().is_ideal(odd.members()) {
            return false;
        }
        let candidate = Triideal::from_parts(even.clone(), odd.clone());
        let generators = even
            .members()
            .iter()
            .map(|&a| TriElement::even(a))
            .chain(odd.members().iter().map(|&b| TriElement::odd(b)));
        let homog: Vec<TriElement> = self.even_elements().chain(self.odd_elements()).collect();
        generators.into_iter().collect::<Vec<_>>().iter().all(|&a| {
            homog
                .iter()
                .all(|&r| candidate.contains(self.mul(a, r)) && candidate.contains(self.mul(r, a)))
        })
    }

    /// The same test through the structure maps:
    /// `lambda(I0) # R1 + R1 # rho(I0)` inside `I1`.
    pub fn satisfies_pair_condition(&self, even: &Ideal, odd: &Ideal) -> bool {
        even.members().iter().all(|&a| {
            self.odd().elements().all(|alpha| {
                odd.contains(self.odd().mul(self.lambda(a), alpha))
                    && odd.contains(self.odd().mul(alpha, self.rho(a)))
            })
        })
    }

    /// Checked constructor.
    pub fn triideal(&self, even: Ideal, odd: Ideal) -> Result<Triideal> {
        if self.is_triideal(&even, &odd) {
            Ok(Triideal::from_parts(even, odd))
        } else {
            Err(Error::Malformed("pair of ideals is not a triideal".into()))
        }
    }

    /// Interprets an element set as a triideal, if it is one.
    pub fn triideal_from_set(&self, set: &BTreeSet<TriElement>) -> Option<Triideal> {
        let evens: BTreeSet<usize> = set.iter().map(|x| x.even).collect();
        let odds: BTreeSet<usize> = set.iter().map(|x| x.odd).collect();
        if evens.len() * odds.len() != set.len() {
            return None;
        }
        let even = self.even().ideal_from_members(evens);
        let odd = self.odd().ideal_from_members(odds);
        self.is_triideal(&even, &odd)
            .then(|| Triideal::from_parts(even, odd))
    }

    /// Smallest triideal containing the given even and odd generators.
    pub fn make_triideal(&self, even_gens: &[usize], odd_gens: &[usize]) -> Result<Triideal> {
        if let Some(g) = even_gens.iter().find(|&&g| g >= self.even().size()) {
            return Err(Error::Malformed(format!("even generator {g} out of range")));
        }
        if let Some(g) = odd_gens.iter().find(|&&g| g >= self.odd().size()) {
            return Err(Error::Malformed(format!("odd generator {g} out of range")));
        }
        let even = self.even().ideal_generated(even_gens);
        let mut odd_seed: Vec<usize> = odd_gens.to_vec();
        for &a in even.members() {
            odd_seed.push(self.lambda(a));
            odd_seed.push(self.rho(a));
        }
        let odd = self.odd().ideal_generated(&odd_seed);
        Ok(Triideal::from_parts(even, odd))
    }

    /// `R x0 = R0 x0 + R1 x0`, computed from the assembled product.
    pub fn principal_even(&self, x0: usize) -> Triideal {
        let x = TriElement::even(x0);
        let even = self.even().ideal_from_members(self.even_elements().map(|r| self.mul(r, x).even));
        let odd = self.odd().ideal_from_members(self.odd_elements().map(|a| self.mul(a, x).odd));
        Triideal::from_parts(even, odd)
    }

    /// `R1 # x1`.
    pub fn principal_odd(&self, x1: usize) -> Triideal {
        Triideal::from_parts(self.even().zero_ideal(), self.odd().principal_ideal(x1))
    }

    /// Whether `set` is a subtriring: contains `1`, splits by grade, is
    /// additively closed and closed under `*`, and its odd part is a unital
    /// subring of `(R1, +, #)` (so it contains `1#`).
    pub fn is_subtriring(&self, set: &[TriElement]) -> bool {
        let mut mask = vec![false; self.size()];
        for &x in set {
            if !self.contains(x) {
                return false;
            }
            mask[self.index_of(x)] = true;
        }
        let has = |x: TriElement| mask[self.index_of(x)];
        has(self.one())
            && has(self.local_one())
            && set.iter().all(|&x| has(x.even_part()) && has(x.odd_part()))
            && set.iter().all(|&x| {
                set.iter().all(|&y| has(self.add(x, y)) && has(self.mul(x, y)))
            })
            && set.iter().filter(|x| x.is_odd()).all(|&a| {
                set.iter()
                    .filter(|y| y.is_odd())
                    .all(|&b| has(TriElement::odd(self.odd().mul(a.odd, b.odd))))
            })
    }

    pub fn sum(&self, i: &Triideal, j: &Triideal) -> Triideal {
        Triideal::from_parts(
            self.even().ideal_sum(&i.even, &j.even),
            self.odd().ideal_sum(&i.odd, &j.odd),
        )
    }

    pub fn sum_all<'a>(&self, ideals: impl IntoIterator<Item = &'a Triideal>) -> Triideal {
        ideals
            .into_iter()
            .fold(self.zero_triideal(), |acc, i| self.sum(&acc, i))
    }

    pub fn intersect(&self, i: &Triideal, j: &Triideal) -> Triideal {
        Triideal::from_parts(
            self.even().ideal_intersection(&i.even, &j.even),
            self.odd().ideal_intersection(&i.odd, &j.odd),
        )
    }

    pub fn intersect_all<'a>(&self, ideals: impl IntoIterator<Item = &'a Triideal>) -> Triideal {
        ideals
            .into_iter()
            .fold(self.whole_triideal(), |acc, i| self.intersect(&acc, i))
    }

    /// `I0 J0 + I1 # J1`, each component closed into an ideal.
    pub fn mixed_product(&self, i: &Triideal, j: &Triideal) -> Triideal {
        Triideal::from_parts(
            self.even().ideal_product(&i.even, &j.even),
            self.odd().ideal_product(&i.odd, &j.odd),
        )
    }

    /// The quotient triring `R / I` with the natural surjection.
    pub fn quotient(&self, ideal: &Triideal) -> Result<QuotientTriring> {
        let q0 = self.even().quotient(&ideal.even)?;
        let q1 = self.odd().quotient(&ideal.odd)?;
        let lambda = q0
            .representatives
            .iter()
            .map(|&r| q1.projection[self.lambda(r)])
            .collect();
        let rho = q0
            .representatives
            .iter()
            .map(|&r| q1.projection[self.rho(r)])
            .collect();
        let ring = build_triring(format!("{}/I", self.name()), q0.ring, q1.ring, lambda, rho)?;
        let map = self
            .elements()
            .map(|x| TriElement::new(q0.projection[x.even], q1.projection[x.odd]))
            .collect();
        let natural = TriringHom::new(self, &ring, map)?;
        Ok(QuotientTriring {
            ring,
            natural,
            even_reps: q0.representatives,
            odd_reps: q1.representatives,
        })
    }

    /// `x0` nilpotent in `(R0, *)` and `x1` nilpotent in `(R1, #)`.
    pub fn is_trinilpotent(&self, x: TriElement) -> bool {
        self.even().is_nilpotent(x.even) && self.odd().is_nilpotent(x.odd)
    }

    /// `nilrad(R0) + nilrad(R1, #)`.
    pub fn trinilradical(&self) -> Triideal {
        Triideal::from_parts(self.even().nilradical(), self.odd().nilradical())
    }

    /// Elements `x` with `x0^m in I0` and `x1^{#n} in I1` for some positive
    /// `m`, `n`.
    pub fn radical(&self, ideal: &Triideal) -> Triideal {
        Triideal::from_parts(
            self.even().radical_of(&ideal.even),
            self.odd().radical_of(&ideal.odd),
        )
    }

    /// The radical recovered as the preimage of the trinilradical of `R / I`.
    pub fn radical_via_quotient(&self, ideal: &Triideal) -> Result<Triideal> {
        let q = self.quotient(ideal)?;
        let nil = q.ring.trinilradical();
        Ok(Triideal::from_parts(
            self.even()
                .preimage(self.even().size(), |x| q.natural.apply(TriElement::even(x)).even, &nil.even),
            self.odd()
                .preimage(self.odd().size(), |x| q.natural.apply(TriElement::odd(x)).odd, &nil.odd),
        ))
    }

    /// Nilpotent elements of the ordinary ring `(R, +, *)`.
    pub fn ordinary_nilradical(&self) -> Vec<TriElement> {
        let bound = self.size();
        self.elements()
            .filter(|&x| {
                let mut p = x;
                for _ in 0..bound {
                    if p.is_zero() {
                        return true;
                    }
                    p = self.mul(p, x);
                }
                false
            })
            .collect()
    }
}
