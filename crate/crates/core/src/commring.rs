//! Finite commutative unital rings given by operation tables, and their ideals.
//!
//! Elements are the indices `0..size`. Index 0 is always the additive
//! identity; the multiplicative identity may sit at any index. Every table is
//! validated exhaustively when a ring is built, so downstream code can assume
//! the ring laws without re-checking them.

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::Limits;

/// How a ring was described before its tables were materialised.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingDescriptor {
    /// The integers modulo `n`, `n >= 1`.
    Zn(usize),
    /// The direct product of the factors, indexed in mixed radix with the
    /// first factor most significant.
    Product(Vec<RingDescriptor>),
    /// Explicit addition and multiplication tables.
    Table {
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        one: usize,
    },
}

impl RingDescriptor {
    /// Carrier size implied by the descriptor, without building tables.
    /// Returns `None` on overflow.
    pub fn carrier_size(&self) -> Option<usize> {
        match self {
            RingDescriptor::Zn(n) => Some(*n),
            RingDescriptor::Product(factors) => factors
                .iter()
                .try_fold(1usize, |acc, f| acc.checked_mul(f.carrier_size()?)),
            RingDescriptor::Table { add, .. } => Some(add.len()),
        }
    }
}

/// Provenance tag kept on a built ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Table,
    Zn(usize),
    Product(Vec<Provenance>),
}

/// A validated finite commutative ring with identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCommRing {
    size: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    one: usize,
    provenance: Provenance,
}

/// Builds and validates a ring from a descriptor.
pub fn make_ring(descriptor: &RingDescriptor, limits: &Limits) -> Result<FiniteCommRing> {
    let size = descriptor.carrier_size().ok_or(Error::SizeLimit {
        what: "ring size",
        count: usize::MAX,
        cap: limits.max_size,
    })?;
    if size > limits.max_size {
        return Err(Error::SizeLimit {
            what: "ring size",
            count: size,
            cap: limits.max_size,
        });
    }
    match descriptor {
        RingDescriptor::Zn(n) => FiniteCommRing::integers_mod(*n),
        RingDescriptor::Product(factors) => {
            let rings = factors
                .iter()
                .map(|f| make_ring(f, limits))
                .collect::<Result<Vec<_>>>()?;
            FiniteCommRing::product(&rings)
        }
        RingDescriptor::Table { add, mul, one } => {
            let flat = |t: &Vec<Vec<usize>>, name: &str| -> Result<Vec<usize>> {
                if t.len() != size || t.iter().any(|row| row.len() != size) {
                    return Err(Error::Malformed(format!("{name} table is not {size}x{size}")));
                }
                Ok(t.iter().flatten().copied().collect())
            };
            FiniteCommRing::from_tables(size, flat(add, "add")?, flat(mul, "mul")?, *one, Provenance::Table)
        }
    }
}

impl FiniteCommRing {
    /// The integers modulo `n`.
    pub fn integers_mod(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Malformed("Z_n requires n >= 1".into()));
        }
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                add.push((a + b) % n);
                mul.push((a * b) % n);
            }
        }
        Self::from_tables(n, add, mul, 1 % n, Provenance::Zn(n))
    }

    /// Componentwise product ring. The empty product is the zero ring.
    pub fn product(factors: &[FiniteCommRing]) -> Result<Self> {
        let size: usize = factors.iter().map(|r| r.size).product();
        let decode = |mut idx: usize| -> Vec<usize> {
            let mut coords = vec![0; factors.len()];
            for (slot, r) in coords.iter_mut().zip(factors).rev() {
                *slot = idx % r.size;
                idx /= r.size;
            }
            coords
        };
        let encode = |coords: &[usize]| -> usize {
            coords
                .iter()
                .zip(factors)
                .fold(0, |acc, (&c, r)| acc * r.size + c)
        };
        let coords: Vec<Vec<usize>> = (0..size).map(decode).collect();
        let mut add = Vec::with_capacity(size * size);
        let mut mul = Vec::with_capacity(size * size);
        let mut scratch = vec![0; factors.len()];
        for a in &coords {
            for b in &coords {
                for (k, r) in factors.iter().enumerate() {
                    scratch[k] = r.add(a[k], b[k]);
                }
                add.push(encode(&scratch));
                for (k, r) in factors.iter().enumerate() {
                    scratch[k] = r.mul(a[k], b[k]);
                }
                mul.push(encode(&scratch));
            }
        }
        let one_coords: Vec<usize> = factors.iter().map(|r| r.one).collect();
        let provenance = Provenance::Product(factors.iter().map(|r| r.provenance.clone()).collect());
        Self::from_tables(size, add, mul, encode(&one_coords), provenance)
    }

    /// Validates row-major `size x size` tables against every ring law.
    pub fn from_tables(
        size: usize,
        add: Vec<usize>,
        mul: Vec<usize>,
        one: usize,
        provenance: Provenance,
    ) -> Result<Self> {
        if size == 0 || size * size != add.len() || mul.len() != add.len() {
            return Err(Error::Malformed("tables must be square and equally sized".into()));
        }
        if one >= size {
            return Err(Error::Malformed(format!("identity index {one} out of range")));
        }
        if let Some(&bad) = add.iter().chain(&mul).find(|&&v| v >= size) {
            return Err(Error::Malformed(format!("table entry {bad} out of range")));
        }
        let mut neg = vec![usize::MAX; size];
        for a in 0..size {
            if let Some(b) = (0..size).find(|&b| add[a * size + b] == 0) {
                neg[a] = b;
            }
        }
        let ring = FiniteCommRing {
            size,
            add,
            mul,
            neg,
            one,
            provenance,
        };
        ring.validate()?;
        Ok(ring)
    }

    fn validate(&self) -> Result<()> {
        let n = self.size;
        let fail = |law: &str, witness: Vec<usize>| {
            Err(Error::AxiomViolation {
                law: law.to_string(),
                witness,
            })
        };
        for a in 0..n {
            if self.add(0, a) != a {
                return fail("additive identity", vec![a]);
            }
            if self.neg[a] == usize::MAX {
                return fail("additive inverse", vec![a]);
            }
            if self.mul(self.one, a) != a {
                return fail("multiplicative identity", vec![a]);
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail("additive commutativity", vec![a, b]);
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return fail("multiplicative commutativity", vec![a, b]);
                }
            }
        }
        let triples = || (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))));
        if let Some((a, b, c)) =
            triples().find(|&(a, b, c)| self.add(self.add(a, b), c) != self.add(a, self.add(b, c)))
        {
            return fail("additive associativity", vec![a, b, c]);
        }
        if let Some((a, b, c)) =
            triples().find(|&(a, b, c)| self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)))
        {
            return fail("multiplicative associativity", vec![a, b, c]);
        }
        if let Some((a, b, c)) = triples()
            .find(|&(a, b, c)| self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)))
        {
            return fail("distributivity", vec![a, b, c]);
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn is_zero_ring(&self) -> bool {
        self.size == 1
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// `a^n` with `a^0 = 1`.
    pub fn pow(&self, a: usize, n: usize) -> usize {
        (0..n).fold(self.one, |acc, _| self.mul(acc, a))
    }

    /// Row-major tables, for serialisation.
    pub fn add_table(&self) -> Vec<Vec<usize>> {
        self.add.chunks(self.size).map(<[usize]>::to_vec).collect()
    }

    pub fn mul_table(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.size).map(<[usize]>::to_vec).collect()
    }

    /// Smallest exponent `m` in `1..=size` with `a^m = 0`.
    pub fn nilpotency_index(&self, a: usize) -> Option<usize> {
        let mut p = a;
        for m in 1..=self.size {
            if p == 0 {
                return Some(m);
            }
            p = self.mul(p, a);
        }
        None
    }

    pub fn is_nilpotent(&self, a: usize) -> bool {
        self.nilpotency_index(a).is_some()
    }

    pub fn is_unit(&self, a: usize) -> bool {
        (0..self.size).any(|b| self.mul(a, b) == self.one)
    }

    /// Builds an ideal from a member set that is already known to be one.
    pub(crate) fn ideal_from_members(&self, members: impl IntoIterator<Item = usize>) -> Ideal {
        Ideal::from_members(self.size, members)
    }

    pub fn zero_ideal(&self) -> Ideal {
        Ideal::from_members(self.size, [0])
    }

    pub fn whole_ideal(&self) -> Ideal {
        Ideal::from_members(self.size, self.elements())
    }

    /// `R a = { r a : r in R }`.
    pub fn principal_ideal(&self, a: usize) -> Ideal {
        Ideal::from_members(self.size, self.elements().map(|r| self.mul(r, a)))
    }

    /// Smallest ideal containing `gens`, by closure under addition and
    /// multiplication by ring elements.
    pub fn ideal_generated(&self, gens: &[usize]) -> Ideal {
        let mut seen = vec![false; self.size];
        let mut members = Vec::new();
        let mut queue = VecDeque::new();
        for &g in std::iter::once(&0).chain(gens) {
            if !seen[g] {
                seen[g] = true;
                queue.push_back(g);
            }
        }
        while let Some(x) = queue.pop_front() {
            members.push(x);
            let products = self.elements().map(|r| self.mul(r, x));
            let sums = members.iter().map(|&y| self.add(x, y)).collect::<Vec<_>>();
            for z in products.chain(sums) {
                if !seen[z] {
                    seen[z] = true;
                    queue.push_back(z);
                }
            }
        }
        Ideal::from_members(self.size, members)
    }

    /// `I + J = { a + b }`.
    pub fn ideal_sum(&self, i: &Ideal, j: &Ideal) -> Ideal {
        let mut out = vec![false; self.size];
        for &a in i.members() {
            for &b in j.members() {
                out[self.add(a, b)] = true;
            }
        }
        Ideal::from_mask(out)
    }

    pub fn ideal_intersection(&self, i: &Ideal, j: &Ideal) -> Ideal {
        Ideal::from_members(self.size, i.members().iter().copied().filter(|&a| j.contains(a)))
    }

    /// The ideal generated by all products `ab`, `a in I`, `b in J`.
    pub fn ideal_product(&self, i: &Ideal, j: &Ideal) -> Ideal {
        let gens: BTreeSet<usize> = i
            .members()
            .iter()
            .flat_map(|&a| j.members().iter().map(move |&b| (a, b)))
            .map(|(a, b)| self.mul(a, b))
            .collect();
        self.ideal_generated(&gens.into_iter().collect::<Vec<_>>())
    }

    /// True when `members` is an additive subgroup closed under ring
    /// multiplication.
    pub fn is_ideal(&self, members: &[usize]) -> bool {
        let mut mask = vec![false; self.size];
        for &m in members {
            if m >= self.size {
                return false;
            }
            mask[m] = true;
        }
        if !mask[0] {
            return false;
        }
        members.iter().all(|&a| {
            members.iter().all(|&b| mask[self.add(a, b)])
                && self.elements().all(|r| mask[self.mul(r, a)])
        })
    }

    /// Every ideal exactly once, ordered by size and then member list.
    ///
    /// Starts from the principal ideals and closes the family under ideal
    /// sums; every ideal of a finite ring is a finite sum of principal ones.
    pub fn enumerate_ideals(&self, limits: &Limits) -> Result<Vec<Ideal>> {
        let mut principal: Vec<Ideal> = self.elements().map(|a| self.principal_ideal(a)).collect();
        principal.sort();
        principal.dedup();
        let mut found: BTreeSet<Ideal> = principal.iter().cloned().collect();
        let mut frontier: Vec<Ideal> = principal.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for i in &frontier {
                for p in &principal {
                    if p.is_subset(i) {
                        continue;
                    }
                    let s = self.ideal_sum(i, p);
                    if !found.contains(&s) {
                        if found.len() >= limits.max_ideals {
                            return Err(Error::SizeLimit {
                                what: "ideal count",
                                count: found.len() + 1,
                                cap: limits.max_ideals,
                            });
                        }
                        found.insert(s.clone());
                        next.push(s);
                    }
                }
            }
            frontier = next;
        }
        if found.len() > limits.max_ideals {
            return Err(Error::SizeLimit {
                what: "ideal count",
                count: found.len(),
                cap: limits.max_ideals,
            });
        }
        Ok(found.into_iter().collect())
    }

    /// `I` is proper and `ab in I` forces `a in I` or `b in I`.
    pub fn is_prime_ideal(&self, ideal: &Ideal) -> bool {
        if ideal.len() == self.size {
            return false;
        }
        self.elements().all(|a| {
            ideal.contains(a)
                || self
                    .elements()
                    .all(|b| ideal.contains(b) || !ideal.contains(self.mul(a, b)))
        })
    }

    pub fn prime_ideals(&self, limits: &Limits) -> Result<Vec<Ideal>> {
        Ok(self
            .enumerate_ideals(limits)?
            .into_iter()
            .filter(|i| self.is_prime_ideal(i))
            .collect())
    }

    /// All nilpotent elements.
    pub fn nilradical(&self) -> Ideal {
        self.radical_of(&self.zero_ideal())
    }

    /// `{ x : x^m in I for some 1 <= m <= size }`.
    pub fn radical_of(&self, ideal: &Ideal) -> Ideal {
        let members = self.elements().filter(|&x| {
            let mut p = x;
            for _ in 0..self.size {
                if ideal.contains(p) {
                    return true;
                }
                p = self.mul(p, x);
            }
            false
        });
        Ideal::from_members(self.size, members)
    }

    /// `{ x : f(x) in I }` for a map `f` into this ring.
    pub fn preimage(&self, domain_size: usize, map: impl Fn(usize) -> usize, ideal: &Ideal) -> Ideal {
        Ideal::from_members(domain_size, (0..domain_size).filter(|&x| ideal.contains(map(x))))
    }

    /// The quotient ring `R / I` with cosets represented by their least
    /// element, together with the projection `R -> R / I` and the
    /// representative of each coset.
    pub fn quotient(&self, ideal: &Ideal) -> Result<QuotientRing> {
        let mut projection = vec![usize::MAX; self.size];
        let mut reps = Vec::new();
        for x in self.elements() {
            if projection[x] != usize::MAX {
                continue;
            }
            let class = reps.len();
            reps.push(x);
            for &m in ideal.members() {
                projection[self.add(x, m)] = class;
            }
        }
        let k = reps.len();
        let mut add = Vec::with_capacity(k * k);
        let mut mul = Vec::with_capacity(k * k);
        for &a in &reps {
            for &b in &reps {
                add.push(projection[self.add(a, b)]);
                mul.push(projection[self.mul(a, b)]);
            }
        }
        let ring = FiniteCommRing::from_tables(k, add, mul, projection[self.one], Provenance::Table)?;
        Ok(QuotientRing {
            ring,
            projection,
            representatives: reps,
        })
    }
}

/// A quotient ring together with its canonical projection.
#[derive(Debug, Clone)]
pub struct QuotientRing {
    pub ring: FiniteCommRing,
    pub projection: Vec<usize>,
    pub representatives: Vec<usize>,
}

/// An ideal of a finite commutative ring, stored as an explicit member set.
///
/// Ideals do not hold a reference to their ring; callers pass the ring to
/// every operation that needs its tables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ideal {
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl Ideal {
    pub(crate) fn from_members(ring_size: usize, members: impl IntoIterator<Item = usize>) -> Self {
        let mut mask = vec![false; ring_size];
        for m in members {
            mask[m] = true;
        }
        Self::from_mask(mask)
    }

    pub(crate) fn from_mask(mask: Vec<bool>) -> Self {
        let members = mask
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
            .collect();
        Ideal { members, mask }
    }

    /// Sorted member list.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.members == [0]
    }

    /// Size of the ambient ring.
    pub fn ring_size(&self) -> usize {
        self.mask.len()
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.mask.len()
    }

    #[inline]
    pub fn contains(&self, a: usize) -> bool {
        self.mask.get(a).copied().unwrap_or(false)
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.iter().all(|&a| other.contains(a))
    }
}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ideal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.members
            .len()
            .cmp(&other.members.len())
            .then_with(|| self.members.cmp(&other.members))
            .then_with(|| self.mask.len().cmp(&other.mask.len()))
    }
}
