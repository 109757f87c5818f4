//! Finite trirings: a commutative even part `R0`, an odd part `R1` carrying a
//! second commutative product (the local product), and mixed products
//! between them.
//!
//! A triring is stored compactly as `(R0, R1, lambda, rho)` where
//! `lambda(x0) = x0 * 1#` and `rho(x0) = 1# * x0`. The triassociative law
//! forces `x0 * a = lambda(x0) # a` and `a * x0 = a # rho(x0)`, so the whole
//! multiplication is recovered as
//!
//! ```text
//! (x0 + x1)(y0 + y1) = x0 y0 + (lambda(x0) # y1 + x1 # rho(y0))
//! ```
//!
//! The compact form is never trusted on its own: construction assembles the
//! full product and checks the triring axioms against it.
//!
//! Note: the axioms ask for `R0` and `R1` to be commutative subrings of the
//! ambient ring `(R, +, *)`. That is the reading validated here.

use std::collections::BTreeSet;
use std::fmt;

use crate::commring::{FiniteCommRing, Provenance};
use crate::error::{Error, Result, Witness};
use crate::Limits;

/// An element `x0 + x1` of a triring, as a pair of component indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct TriElement {
    pub even: usize,
    pub odd: usize,
}

impl TriElement {
    pub const ZERO: TriElement = TriElement { even: 0, odd: 0 };

    pub fn new(even: usize, odd: usize) -> Self {
        TriElement { even, odd }
    }

    /// The homogeneous even element `x0`.
    pub fn even(x0: usize) -> Self {
        TriElement { even: x0, odd: 0 }
    }

    /// The homogeneous odd element `x1`.
    pub fn odd(x1: usize) -> Self {
        TriElement { even: 0, odd: x1 }
    }

    pub fn is_zero(&self) -> bool {
        self.even == 0 && self.odd == 0
    }

    pub fn is_odd(&self) -> bool {
        self.even == 0
    }

    pub fn is_even(&self) -> bool {
        self.odd == 0
    }

    pub fn even_part(&self) -> TriElement {
        TriElement::even(self.even)
    }

    pub fn odd_part(&self) -> TriElement {
        TriElement::odd(self.odd)
    }
}

impl fmt::Display for TriElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.even, self.odd)
    }
}

/// The two structure maps `R0 -> R1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureMap {
    /// `x0 -> x0 * 1#`
    Lambda,
    /// `x0 -> 1# * x0`
    Rho,
}

impl fmt::Display for StructureMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureMap::Lambda => f.write_str("lambda"),
            StructureMap::Rho => f.write_str("rho"),
        }
    }
}

/// The bilinear multiplication of a candidate triring, split by grade.
///
/// `even_even[x0 * n0 + y0]` is `x0 * y0`, `even_odd[x0 * n1 + y1]` is
/// `x0 * y1`, and so on. Entries are full elements so that a candidate can
/// violate the grading.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductBlocks {
    n0: usize,
    n1: usize,
    even_even: Vec<TriElement>,
    even_odd: Vec<TriElement>,
    odd_even: Vec<TriElement>,
    odd_odd: Vec<TriElement>,
}

impl ProductBlocks {
    /// Tabulates an arbitrary product on homogeneous elements.
    pub fn from_fn(n0: usize, n1: usize, f: impl Fn(TriElement, TriElement) -> TriElement) -> Self {
        let table = |na: usize, nb: usize, mk_a: fn(usize) -> TriElement, mk_b: fn(usize) -> TriElement| {
            (0..na)
                .flat_map(|a| (0..nb).map(move |b| (a, b)))
                .map(|(a, b)| f(mk_a(a), mk_b(b)))
                .collect::<Vec<_>>()
        };
        ProductBlocks {
            n0,
            n1,
            even_even: table(n0, n0, TriElement::even, TriElement::even),
            even_odd: table(n0, n1, TriElement::even, TriElement::odd),
            odd_even: table(n1, n0, TriElement::odd, TriElement::even),
            odd_odd: table(n1, n1, TriElement::odd, TriElement::odd),
        }
    }

    /// The product determined by the structure maps.
    pub fn from_structure_maps(
        even: &FiniteCommRing,
        odd: &FiniteCommRing,
        lambda: &[usize],
        rho: &[usize],
    ) -> Self {
        Self::from_fn(even.size(), odd.size(), |x, y| {
            TriElement::new(
                even.mul(x.even, y.even),
                odd.add(odd.mul(lambda[x.even], y.odd), odd.mul(x.odd, rho[y.even])),
            )
        })
    }

    /// Overwrites a single homogeneous product; used to build negative cases.
    pub fn set(&mut self, x: TriElement, y: TriElement, value: TriElement) {
        match (x.is_even(), y.is_even()) {
            (true, true) => self.even_even[x.even * self.n0 + y.even] = value,
            (true, false) => self.even_odd[x.even * self.n1 + y.odd] = value,
            (false, true) => self.odd_even[x.odd * self.n0 + y.even] = value,
            (false, false) => self.odd_odd[x.odd * self.n1 + y.odd] = value,
        }
    }

    fn homogeneous(&self, x: TriElement, y: TriElement) -> TriElement {
        debug_assert!(x.is_even() || x.is_odd());
        debug_assert!(y.is_even() || y.is_odd());
        if x.is_even() {
            if y.is_even() {
                self.even_even[x.even * self.n0 + y.even]
            } else {
                self.even_odd[x.even * self.n1 + y.odd]
            }
        } else if y.is_even() {
            self.odd_even[x.odd * self.n0 + y.even]
        } else {
            self.odd_odd[x.odd * self.n1 + y.odd]
        }
    }
}

/// Components plus a multiplication that has not been validated yet.
#[derive(Debug, Clone)]
pub struct TriringCandidate {
    pub even: FiniteCommRing,
    pub odd: FiniteCommRing,
    pub blocks: ProductBlocks,
}

impl TriringCandidate {
    pub fn add(&self, x: TriElement, y: TriElement) -> TriElement {
        TriElement::new(self.even.add(x.even, y.even), self.odd.add(x.odd, y.odd))
    }

    /// The assembled product, extended bi-additively from the blocks.
    pub fn mul(&self, x: TriElement, y: TriElement) -> TriElement {
        let terms = [
            self.blocks.homogeneous(x.even_part(), y.even_part()),
            self.blocks.homogeneous(x.even_part(), y.odd_part()),
            self.blocks.homogeneous(x.odd_part(), y.even_part()),
            self.blocks.homogeneous(x.odd_part(), y.odd_part()),
        ];
        terms.into_iter().fold(TriElement::ZERO, |acc, t| self.add(acc, t))
    }

    fn homogeneous_elements(&self) -> Vec<TriElement> {
        self.even
            .elements()
            .map(TriElement::even)
            .chain(self.odd.elements().skip(1).map(TriElement::odd))
            .collect()
    }
}

/// One axiom of the triring definition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// `R0` is a commutative subring of `(R, +, *)` containing `1`.
    EvenSubring,
    /// `R0 R0 in R0`, `R0 R1 + R1 R0 in R1`, `R1 R1 = 0`.
    Grading,
    /// `x (y + z) = xy + xz` and `(x + y) z = xz + yz`.
    Distributivity,
    /// `(xy)z = x(yz)`.
    Associativity,
    /// `x (a # b) = (x a) # b`.
    LeftTriassociativity,
    /// `(a # b) x = a # (b x)`.
    RightTriassociativity,
    /// `R1 x0 = x0 R1` for every even `x0`.
    OddCommutation,
}

impl Axiom {
    pub const ALL: [Axiom; 7] = [
        Axiom::EvenSubring,
        Axiom::Grading,
        Axiom::Distributivity,
        Axiom::Associativity,
        Axiom::LeftTriassociativity,
        Axiom::RightTriassociativity,
        Axiom::OddCommutation,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Axiom::EvenSubring => "even-commutative-subring",
            Axiom::Grading => "grading",
            Axiom::Distributivity => "distributivity",
            Axiom::Associativity => "associativity",
            Axiom::LeftTriassociativity => "left-triassociative-law",
            Axiom::RightTriassociativity => "right-triassociative-law",
            Axiom::OddCommutation => "odd-commutation",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    /// `None` when the axiom holds.
    pub witness: Option<Witness>,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(AxiomCheck::passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed())
    }

    pub fn get(&self, axiom: Axiom) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }
}

/// Checks every triring axiom against the assembled multiplication.
///
/// Distributivity is checked on homogeneous elements first. Once it holds the
/// product is bi-additive, so every other law quantified over homogeneous
/// elements covers all element tuples.
pub fn verify_axioms(c: &TriringCandidate) -> AxiomReport {
    let homog = c.homogeneous_elements();
    let odds: Vec<TriElement> = c.odd.elements().map(TriElement::odd).collect();
    let one = TriElement::even(c.even.one());
    let sharp = |a: TriElement, b: TriElement| TriElement::odd(c.odd.mul(a.odd, b.odd));

    let even_subring = || -> Option<Witness> {
        for &h in &homog {
            if c.mul(one, h) != h || c.mul(h, one) != h {
                return Some(vec![one, h].into());
            }
        }
        for x0 in c.even.elements() {
            for y0 in c.even.elements() {
                let (x, y) = (TriElement::even(x0), TriElement::even(y0));
                let xy = c.mul(x, y);
                if xy != c.mul(y, x) || xy.even != c.even.mul(x0, y0) {
                    return Some(vec![x, y].into());
                }
            }
        }
        None
    };

    let grading = || -> Option<Witness> {
        for &x in &homog {
            for &y in &homog {
                let p = c.mul(x, y);
                let ok = match (x.is_odd() && !x.is_zero(), y.is_odd() && !y.is_zero()) {
                    (false, false) => p.is_even(),
                    (true, true) => p.is_zero(),
                    _ => p.is_odd(),
                };
                if !ok {
                    return Some(vec![x, y].into());
                }
            }
        }
        None
    };

    // Bi-additivity of the blocks; the assembled product is additive across
    // the grading by construction, so same-grade sums are all that remain.
    let distributivity = || -> Option<Witness> {
        for &x in &homog {
            for &y in &homog {
                for &z in &homog {
                    if y.is_even() != z.is_even() {
                        continue;
                    }
                    let yz = c.add(y, z);
                    if c.mul(x, yz) != c.add(c.mul(x, y), c.mul(x, z))
                        || c.mul(yz, x) != c.add(c.mul(y, x), c.mul(z, x))
                    {
                        return Some(vec![x, y, z].into());
                    }
                }
            }
        }
        None
    };

    let associativity = || -> Option<Witness> {
        for &x in &homog {
            for &y in &homog {
                let xy = c.mul(x, y);
                for &z in &homog {
                    if c.mul(xy, z) != c.mul(x, c.mul(y, z)) {
                        return Some(vec![x, y, z].into());
                    }
                }
            }
        }
        None
    };

    let left_triassoc = || -> Option<Witness> {
        for &x in &homog {
            for &a in &odds {
                let xa = c.mul(x, a);
                for &b in &odds {
                    if c.mul(x, sharp(a, b)) != sharp(xa, b) || !xa.is_odd() {
                        return Some(vec![x, a, b].into());
                    }
                }
            }
        }
        None
    };

    let right_triassoc = || -> Option<Witness> {
        for &x in &homog {
            for &b in &odds {
                let bx = c.mul(b, x);
                for &a in &odds {
                    if c.mul(sharp(a, b), x) != sharp(a, bx) || !bx.is_odd() {
                        return Some(vec![a, b, x].into());
                    }
                }
            }
        }
        None
    };

    let odd_commutation = || -> Option<Witness> {
        for x0 in c.even.elements() {
            let x = TriElement::even(x0);
            let left: BTreeSet<TriElement> = odds.iter().map(|&a| c.mul(a, x)).collect();
            let right: BTreeSet<TriElement> = odds.iter().map(|&a| c.mul(x, a)).collect();
            if left != right {
                let differing = left.symmetric_difference(&right).next().copied().unwrap_or_default();
                return Some(vec![x, differing].into());
            }
        }
        None
    };

    let checks = Axiom::ALL
        .iter()
        .map(|&axiom| AxiomCheck {
            axiom,
            witness: match axiom {
                Axiom::EvenSubring => even_subring(),
                Axiom::Grading => grading(),
                Axiom::Distributivity => distributivity(),
                Axiom::Associativity => associativity(),
                Axiom::LeftTriassociativity => left_triassoc(),
                Axiom::RightTriassociativity => right_triassoc(),
                Axiom::OddCommutation => odd_commutation(),
            },
        })
        .collect();
    AxiomReport { checks }
}

/// A validated finite triring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triring {
    name: String,
    even: FiniteCommRing,
    odd: FiniteCommRing,
    lambda: Vec<usize>,
    rho: Vec<usize>,
}

/// Builds a triring from its components and structure maps, validating every
/// axiom on the assembled multiplication.
pub fn build_triring(
    name: impl Into<String>,
    even: FiniteCommRing,
    odd: FiniteCommRing,
    lambda: Vec<usize>,
    rho: Vec<usize>,
) -> Result<Triring> {
    for (map, table) in [(StructureMap::Lambda, &lambda), (StructureMap::Rho, &rho)] {
        if table.len() != even.size() {
            return Err(Error::Malformed(format!(
                "{map} has {} entries, even part has {}",
                table.len(),
                even.size()
            )));
        }
        if let Some(&v) = table.iter().find(|&&v| v >= odd.size()) {
            return Err(Error::Malformed(format!("{map} value {v} outside the odd part")));
        }
        check_structure_map(&even, &odd, map, table)?;
    }
    for (map, table) in [(StructureMap::Lambda, &lambda), (StructureMap::Rho, &rho)] {
        let value = table[even.one()];
        if value != odd.one() {
            return Err(Error::LocalIdentityMismatch {
                map,
                value,
                local_one: odd.one(),
            });
        }
    }
    for x0 in even.elements() {
        if odd.principal_ideal(lambda[x0]) != odd.principal_ideal(rho[x0]) {
            return Err(Error::Axiom3Violation { x0 });
        }
    }
    let triring = Triring {
        name: name.into(),
        even,
        odd,
        lambda,
        rho,
    };
    let report = verify_axioms(&triring.to_candidate());
    if let Some(failure) = report.first_failure() {
        return Err(Error::TriassocViolation {
            axiom: failure.axiom.name().to_string(),
            witness: failure.witness.clone().unwrap_or_default(),
        });
    }
    Ok(triring)
}

fn check_structure_map(
    even: &FiniteCommRing,
    odd: &FiniteCommRing,
    map: StructureMap,
    table: &[usize],
) -> Result<()> {
    for a in even.elements() {
        for b in even.elements() {
            if table[even.add(a, b)] != odd.add(table[a], table[b]) {
                return Err(Error::NotAHomomorphism {
                    map,
                    law: "additivity",
                    a,
                    b,
                });
            }
            if table[even.mul(a, b)] != odd.mul(table[a], table[b]) {
                return Err(Error::NotAHomomorphism {
                    map,
                    law: "multiplicativity",
                    a,
                    b,
                });
            }
        }
    }
    Ok(())
}

/// Elementary operations exposed through [`Triring::element_op`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementOp {
    Add,
    Neg,
    Mul,
    Sharp,
}

impl Triring {
    /// A commutative ring viewed as a triring with zero odd part.
    pub fn commutative(name: impl Into<String>, ring: FiniteCommRing) -> Result<Self> {
        let zero = FiniteCommRing::integers_mod(1)?;
        let n = ring.size();
        build_triring(name, ring, zero, vec![0; n], vec![0; n])
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn even(&self) -> &FiniteCommRing {
        &self.even
    }

    pub fn odd(&self) -> &FiniteCommRing {
        &self.odd
    }

    pub fn lambda(&self, x0: usize) -> usize {
        self.lambda[x0]
    }

    pub fn rho(&self, x0: usize) -> usize {
        self.rho[x0]
    }

    pub fn lambda_table(&self) -> &[usize] {
        &self.lambda
    }

    pub fn rho_table(&self) -> &[usize] {
        &self.rho
    }

    /// Number of elements, `|R0| * |R1|`.
    pub fn size(&self) -> usize {
        self.even.size() * self.odd.size()
    }

    pub fn has_zero_odd_part(&self) -> bool {
        self.odd.is_zero_ring()
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero_ring() && self.odd.is_zero_ring()
    }

    pub fn contains(&self, x: TriElement) -> bool {
        x.even < self.even.size() && x.odd < self.odd.size()
    }

    /// Flat index `even * |R1| + odd`.
    pub fn index_of(&self, x: TriElement) -> usize {
        x.even * self.odd.size() + x.odd
    }

    pub fn element_at(&self, index: usize) -> TriElement {
        TriElement::new(index / self.odd.size(), index % self.odd.size())
    }

    /// All elements in flat-index order.
    pub fn elements(&self) -> impl Iterator<Item = TriElement> + '_ {
        (0..self.size()).map(move |i| self.element_at(i))
    }

    pub fn even_elements(&self) -> impl Iterator<Item = TriElement> {
        (0..self.even.size()).map(TriElement::even)
    }

    pub fn odd_elements(&self) -> impl Iterator<Item = TriElement> {
        (0..self.odd.size()).map(TriElement::odd)
    }

    pub fn zero(&self) -> TriElement {
        TriElement::ZERO
    }

    pub fn one(&self) -> TriElement {
        TriElement::even(self.even.one())
    }

    /// The local identity `1#`.
    pub fn local_one(&self) -> TriElement {
        TriElement::odd(self.odd.one())
    }

    pub fn add(&self, x: TriElement, y: TriElement) -> TriElement {
        TriElement::new(self.even.add(x.even, y.even), self.odd.add(x.odd, y.odd))
    }

    pub fn neg(&self, x: TriElement) -> TriElement {
        TriElement::new(self.even.neg(x.even), self.odd.neg(x.odd))
    }

    pub fn sub(&self, x: TriElement, y: TriElement) -> TriElement {
        self.add(x, self.neg(y))
    }

    /// The graded product.
    pub fn mul(&self, x: TriElement, y: TriElement) -> TriElement {
        let odd = self.odd.add(
            self.odd.mul(self.lambda[x.even], y.odd),
            self.odd.mul(x.odd, self.rho[y.even]),
        );
        TriElement::new(self.even.mul(x.even, y.even), odd)
    }

    /// `x^m` in `(R, *)`, with `x^0 = 1`.
    pub fn pow(&self, x: TriElement, m: usize) -> TriElement {
        (0..m).fold(self.one(), |acc, _| self.mul(acc, x))
    }

    /// The local product of two odd elements.
    pub fn sharp(&self, x: TriElement, y: TriElement) -> Result<TriElement> {
        for z in [x, y] {
            if !z.is_odd() {
                return Err(Error::OddOnly(z));
            }
        }
        Ok(TriElement::odd(self.odd.mul(x.odd, y.odd)))
    }

    /// `alpha^{#n}`, equal to `1#` for `n = 0`.
    pub fn local_power(&self, alpha: TriElement, n: usize) -> Result<TriElement> {
        if !alpha.is_odd() {
            return Err(Error::OddOnly(alpha));
        }
        Ok(TriElement::odd(self.odd.pow(alpha.odd, n)))
    }

    /// `Neg` ignores `y`.
    pub fn element_op(&self, op: ElementOp, x: TriElement, y: TriElement) -> Result<TriElement> {
        Ok(match op {
            ElementOp::Add => self.add(x, y),
            ElementOp::Neg => self.neg(x),
            ElementOp::Mul => self.mul(x, y),
            ElementOp::Sharp => self.sharp(x, y)?,
        })
    }

    /// The unvalidated view of this triring, for [`verify_axioms`].
    pub fn to_candidate(&self) -> TriringCandidate {
        TriringCandidate {
            even: self.even.clone(),
            odd: self.odd.clone(),
            blocks: ProductBlocks::from_structure_maps(&self.even, &self.odd, &self.lambda, &self.rho),
        }
    }
}

// Coefficients of basis products: TABLE[s][t][r] is the coefficient of the
// r-th target basis vector in (s-th basis vector) * (t-th basis vector).
type BasisTable = [[[i8; 2]; 2]; 2];

// even basis (1, i), odd basis (j, k)
const EVEN_EVEN: BasisTable = [[[1, 0], [0, 1]], [[0, 1], [-1, 0]]];
const EVEN_ODD: BasisTable = [[[1, 0], [0, 1]], [[0, 1], [-1, 0]]];
const ODD_EVEN: BasisTable = [[[1, 0], [0, -1]], [[0, 1], [1, 0]]];
const LOCAL: BasisTable = [[[1, 0], [0, 1]], [[0, 1], [-1, 0]]];

fn bilinear(base: &FiniteCommRing, x: [usize; 2], y: [usize; 2], table: &BasisTable) -> [usize; 2] {
    let mut out = [0, 0];
    for s in 0..2 {
        for t in 0..2 {
            let xy = base.mul(x[s], y[t]);
            for (r, slot) in out.iter_mut().enumerate() {
                let term = match table[s][t][r] {
                    1 => xy,
                    -1 => base.neg(xy),
                    _ => 0,
                };
                *slot = base.add(*slot, term);
            }
        }
    }
    out
}

/// The triquaternion element `a + b i + c j + d k` over `base`.
pub fn triquaternion_element(base: &FiniteCommRing, [a, b, c, d]: [usize; 4]) -> TriElement {
    let n = base.size();
    TriElement::new(a + b * n, c + d * n)
}

/// Triquaternions over a finite commutative ring `A`: even part `A 1 + A i`,
/// odd part `A j + A k`, with the basis multiplication tables extended
/// `A`-bilinearly. The element `a + b i` has index `a + b |A|`, likewise
/// `c j + d k` has odd index `c + d |A|`.
pub fn triquaternions_over(base: &FiniteCommRing, limits: &Limits) -> Result<Triring> {
    let n = base.size();
    let size = n.saturating_mul(n);
    if size > limits.max_size {
        return Err(Error::SizeLimit {
            what: "ring size",
            count: size,
            cap: limits.max_size,
        });
    }
    let split = |x: usize| [x % n, x / n];
    let join = |[a, b]: [usize; 2]| a + b * n;
    let component = |table: &BasisTable| -> Result<FiniteCommRing> {
        let mut add = Vec::with_capacity(size * size);
        let mut mul = Vec::with_capacity(size * size);
        for x in 0..size {
            for y in 0..size {
                let (xs, ys) = (split(x), split(y));
                add.push(join([base.add(xs[0], ys[0]), base.add(xs[1], ys[1])]));
                mul.push(join(bilinear(base, xs, ys, table)));
            }
        }
        FiniteCommRing::from_tables(size, add, mul, base.one(), Provenance::Table)
    };
    let even = component(&EVEN_EVEN)?;
    let odd = component(&LOCAL)?;

    let table_product = |x: TriElement, y: TriElement| -> TriElement {
        match (x.odd != 0, y.odd != 0) {
            (false, false) => TriElement::even(join(bilinear(base, split(x.even), split(y.even), &EVEN_EVEN))),
            (false, true) => TriElement::odd(join(bilinear(base, split(x.even), split(y.odd), &EVEN_ODD))),
            (true, false) => TriElement::odd(join(bilinear(base, split(x.odd), split(y.even), &ODD_EVEN))),
            (true, true) => TriElement::ZERO,
        }
    };
    let blocks = ProductBlocks::from_fn(size, size, table_product);
    let candidate = TriringCandidate {
        even: even.clone(),
        odd: odd.clone(),
        blocks,
    };
    if let Some(failure) = verify_axioms(&candidate).first_failure() {
        return Err(Error::AxiomViolation {
            law: failure.axiom.name().to_string(),
            witness: failure
                .witness
                .iter()
                .flat_map(|w| w.0.iter().flat_map(|x| [x.even, x.odd]))
                .collect(),
        });
    }

    let j = TriElement::odd(base.one());
    let lambda = (0..size).map(|x0| table_product(TriElement::even(x0), j).odd).collect();
    let rho = (0..size).map(|x0| table_product(j, TriElement::even(x0)).odd).collect();
    let triring = build_triring("triquaternions", even, odd, lambda, rho)?;

    // The compact representation must reproduce the basis tables exactly.
    if triring.to_candidate().blocks != candidate.blocks {
        return Err(Error::Invariant(
            "structure maps do not reproduce the triquaternion tables".into(),
        ));
    }
    Ok(triring)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn(n: usize) -> FiniteCommRing {
        FiniteCommRing::integers_mod(n).unwrap()
    }

    fn z4z2() -> Triring {
        build_triring("z4z2", zn(4), zn(2), vec![0, 1, 0, 1], vec![0, 1, 0, 1]).unwrap()
    }

    fn tq(n: usize) -> Triring {
        triquaternions_over(&zn(n), &Limits::default()).unwrap()
    }

    #[test]
    fn z4z2_builds_with_eight_elements() {
        let r = z4z2();
        assert_eq!(r.size(), 8);
        assert_eq!(r.local_one(), TriElement::odd(1));
    }

    #[test]
    fn zero_odd_part_is_a_triring() {
        let r = Triring::commutative("z6", zn(6)).unwrap();
        assert!(r.has_zero_odd_part());
        assert_eq!(r.size(), 6);
    }

    #[test]
    fn non_unital_rho_is_rejected() {
        let err = build_triring("bad", zn(4), zn(2), vec![0, 1, 0, 1], vec![0; 4]).unwrap_err();
        assert_eq!(
            err,
            Error::LocalIdentityMismatch {
                map: StructureMap::Rho,
                value: 0,
                local_one: 1
            }
        );
    }

    #[test]
    fn non_additive_lambda_is_rejected() {
        // 1 + 1 = 2 must map to 1 + 1 = 0 in Z_2.
        let err = build_triring("bad", zn(4), zn(2), vec![0, 1, 1, 1], vec![0, 1, 0, 1]).unwrap_err();
        assert!(matches!(
            err,
            Error::NotAHomomorphism {
                map: StructureMap::Lambda,
                ..
            }
        ));
    }

    #[test]
    fn mismatched_principal_ideals_are_rejected() {
        // Z_2 x Z_2 both sides; lambda = id, rho = swap of the coordinates.
        let k = FiniteCommRing::product(&[zn(2), zn(2)]).unwrap();
        let err = build_triring("swap", k.clone(), k, vec![0, 1, 2, 3], vec![0, 2, 1, 3]).unwrap_err();
        assert_eq!(err, Error::Axiom3Violation { x0: 1 });
    }

    #[test]
    fn injected_odd_square_breaks_grading() {
        let mut c = z4z2().to_candidate();
        c.blocks.set(TriElement::odd(1), TriElement::odd(1), TriElement::odd(1));
        let report = verify_axioms(&c);
        let grading = report.get(Axiom::Grading).unwrap();
        assert_eq!(
            grading.witness,
            Some(Witness(vec![TriElement::odd(1), TriElement::odd(1)]))
        );
    }

    #[test]
    fn triquaternion_tables() {
        let base = zn(3);
        let r = tq(3);
        let e = |c| triquaternion_element(&base, c);
        let (one, i, j, k) = (e([1, 0, 0, 0]), e([0, 1, 0, 0]), e([0, 0, 1, 0]), e([0, 0, 0, 1]));
        let neg = |x| r.neg(x);
        assert_eq!(r.mul(i, j), k);
        assert_eq!(r.mul(j, i), neg(k));
        assert_eq!(r.mul(i, i), neg(one));
        assert_eq!(r.mul(i, k), neg(j));
        assert_eq!(r.mul(k, i), j);
        assert_eq!(r.mul(j, k), TriElement::ZERO);
        assert_eq!(r.sharp(k, k).unwrap(), neg(j));
        assert_eq!(r.sharp(j, j).unwrap(), j);
        assert_eq!(r.local_power(k, 2).unwrap(), neg(j));
        assert_eq!(r.local_one(), j);
        assert_eq!(r.mul(one, j), j);
    }

    #[test]
    fn triquaternion_sizes() {
        let r3 = tq(3);
        assert_eq!((r3.even().size(), r3.odd().size()), (9, 9));
        let r2 = tq(2);
        assert_eq!(r2.even().size(), 4);
        let i = triquaternion_element(&zn(2), [0, 1, 0, 0]);
        // i^2 = -1 = 1 over Z_2
        assert_eq!(r2.mul(i, i), r2.one());
    }

    #[test]
    fn triquaternions_need_a_base_without_square_root_of_minus_one() {
        // 2^2 = -1 in Z_5, so x0 = 2 + i has x0 j = 4j + k generating a
        // different local ideal from j x0 = 4j - k.
        let err = triquaternions_over(&zn(5), &Limits::default()).unwrap_err();
        assert!(matches!(err, Error::AxiomViolation { ref law, .. } if law == "odd-commutation"), "{err:?}");
        for n in [2, 3, 4, 6, 7, 8] {
            assert!(triquaternions_over(&zn(n), &Limits::default()).is_ok(), "Z_{n}");
        }
    }

    #[test]
    fn non_distributive_blocks_are_rejected() {
        let r = z4z2();
        let mut c = r.to_candidate();
        c.blocks.set(TriElement::even(1), TriElement::even(1), TriElement::even(3));
        let report = verify_axioms(&c);
        assert!(report.get(Axiom::Distributivity).unwrap().witness.is_some());
    }

    #[test]
    fn sharp_rejects_even_input() {
        let r = z4z2();
        assert_eq!(
            r.sharp(TriElement::new(1, 0), TriElement::odd(1)),
            Err(Error::OddOnly(TriElement::new(1, 0)))
        );
        assert!(r.local_power(TriElement::new(2, 1), 3).is_err());
        assert_eq!(r.element_op(ElementOp::Sharp, TriElement::odd(1), TriElement::odd(1)), Ok(TriElement::odd(1)));
    }

    #[test]
    fn local_powers() {
        let r = z4z2();
        assert_eq!(r.local_power(TriElement::odd(1), 0).unwrap(), r.local_one());
        for m in 1..8 {
            assert_eq!(r.local_power(TriElement::odd(1), m).unwrap(), TriElement::odd(1));
        }
        let t = tq(3);
        assert_eq!(t.local_power(TriElement::ZERO, 0).unwrap(), t.local_one());
    }

    #[test]
    fn identity_is_neutral() {
        for r in [z4z2(), tq(2), tq(3)] {
            for x in r.elements() {
                assert_eq!(r.mul(r.one(), x), x);
                assert_eq!(r.mul(x, r.one()), x);
            }
        }
    }

    #[test]
    fn triquaternion_lambda_and_rho_differ_over_z3() {
        let r = tq(3);
        assert_ne!(r.lambda_table(), r.rho_table());
        let r2 = tq(2);
        assert_eq!(r2.lambda_table(), r2.rho_table());
    }
}
