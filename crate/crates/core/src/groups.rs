//! Groups as Cayley tables, abelian groups in invariant-factor form, and the
//! classical structures they induce.
//!
//! Every abelian group `(X, ·, e)` induces a classical structure on `X` with
//! `x∇y = {x·y}` and `⊥ = {e}`; disjoint unions of such structures (with
//! products across blocks undefined) are again classical. Non-abelian groups
//! give special Frobenius algebras that fail only commutativity.
//!
//! The Kleinian four-group is written `Z2xZ2` throughout; `D4` names the
//! dihedral group of order 8.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::classify::partitions;
use crate::error::{Error, Result};
use crate::rel::{pair_index, Rel, Vector};
use crate::structures::FrobeniusCandidate;

/// The group axiom a table violates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupAxiom {
    /// Wrong number of entries, or an entry outside the carrier.
    Totality {
        detail: String,
    },
    Associativity {
        a: usize,
        b: usize,
        c: usize,
    },
    /// No two-sided identity element.
    Unit,
    Inverse {
        element: usize,
    },
}

impl fmt::Display for GroupAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupAxiom::Totality { detail } => write!(f, "totality ({detail})"),
            GroupAxiom::Associativity { a, b, c } => {
                write!(f, "associativity fails at ({a}, {b}, {c})")
            }
            GroupAxiom::Unit => write!(f, "no identity element"),
            GroupAxiom::Inverse { element } => write!(f, "element {element} has no inverse"),
        }
    }
}

/// A validated finite group given by its multiplication table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CayleyTable {
    order: usize,
    unit: usize,
    table: Vec<usize>,
}

impl CayleyTable {
    /// Validates a row-major table `table[a * order + b] = a·b`.
    pub fn new(order: usize, table: Vec<usize>) -> Result<Self> {
        let bad = |axiom| Err(Error::InvalidGroup(axiom));
        if order == 0 {
            return bad(GroupAxiom::Totality {
                detail: "a group needs at least one element".into(),
            });
        }
        if table.len() != order * order {
            return bad(GroupAxiom::Totality {
                detail: format!("expected {} entries, got {}", order * order, table.len()),
            });
        }
        if let Some(pos) = table.iter().position(|&v| v >= order) {
            return bad(GroupAxiom::Totality {
                detail: format!(
                    "entry ({}, {}) = {} is outside 0..{order}",
                    pos / order,
                    pos % order,
                    table[pos]
                ),
            });
        }
        let op = |a: usize, b: usize| table[a * order + b];
        for (a, b, c) in itertools::iproduct!(0..order, 0..order, 0..order) {
            if op(op(a, b), c) != op(a, op(b, c)) {
                return bad(GroupAxiom::Associativity { a, b, c });
            }
        }
        let Some(unit) = (0..order).find(|&e| (0..order).all(|x| op(e, x) == x && op(x, e) == x))
        else {
            return bad(GroupAxiom::Unit);
        };
        for x in 0..order {
            if !(0..order).any(|y| op(x, y) == unit && op(y, x) == unit) {
                return bad(GroupAxiom::Inverse { element: x });
            }
        }
        Ok(CayleyTable { order, unit, table })
    }

    pub fn from_fn(order: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let table = itertools::iproduct!(0..order, 0..order)
            .map(|(a, b)| op(a, b))
            .collect();
        Self::new(order, table)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order)
            .find(|&b| self.op(a, b) == self.unit)
            .expect("validated group has inverses")
    }

    pub fn is_abelian(&self) -> bool {
        itertools::iproduct!(0..self.order, 0..self.order)
            .all(|(a, b)| self.op(a, b) == self.op(b, a))
    }

    /// Order of the element `a`.
    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.unit {
            x = self.op(x, a);
            k += 1;
        }
        k
    }

    /// Sorted multiset of element orders, an isomorphism invariant.
    pub fn order_profile(&self) -> Vec<usize> {
        (0..self.order)
            .map(|a| self.element_order(a))
            .sorted()
            .collect()
    }

    /// Element labels with the unit first and the rest in increasing order.
    fn unit_first_layout(&self) -> Vec<usize> {
        std::iter::once(self.unit)
            .chain((0..self.order).filter(|&x| x != self.unit))
            .collect()
    }
}

impl fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CayleyTable(order {}, unit {})", self.order, self.unit)?;
        for row in self.table.chunks(self.order.max(1)) {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

/// A finite abelian group `Z_{d1} × … × Z_{dk}` with `d1 | d2 | … | dk`
/// and every `di ≥ 2`. The empty list is the trivial group.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct AbelianGroupSpec {
    factors: Vec<usize>,
}

impl AbelianGroupSpec {
    pub fn new(factors: Vec<usize>) -> Result<Self> {
        if let Some(&d) = factors.iter().find(|&&d| d < 2) {
            return Err(Error::InvalidSpec(format!(
                "invariant factor {d} is smaller than 2"
            )));
        }
        if let Some((a, b)) = factors.iter().tuple_windows().find(|(a, b)| *b % *a != 0) {
            return Err(Error::InvalidSpec(format!(
                "invariant factors {a} and {b} violate the divisibility chain"
            )));
        }
        Ok(AbelianGroupSpec { factors })
    }

    pub fn trivial() -> Self {
        AbelianGroupSpec::default()
    }

    pub fn cyclic(m: usize) -> Result<Self> {
        normalize_invariant_factors(&[m])
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.factors.iter().product()
    }

    /// The group `Z_{d1} × … × Z_{dk}`; the element `(a1, …, ak)` has the
    /// mixed-radix index `a1·d2·…·dk + … + ak`, so the unit is 0.
    pub fn cayley(&self) -> CayleyTable {
        let digits = |mut x: usize| {
            let mut out = vec![0; self.factors.len()];
            for (slot, &d) in out.iter_mut().zip(&self.factors).rev() {
                *slot = x % d;
                x /= d;
            }
            out
        };
        let undigits = |ds: &[usize]| {
            ds.iter()
                .zip(&self.factors)
                .fold(0, |acc, (&a, &d)| acc * d + a)
        };
        CayleyTable::from_fn(self.order(), |a, b| {
            let sum: Vec<usize> = digits(a)
                .iter()
                .zip(digits(b))
                .zip(&self.factors)
                .map(|((x, y), d)| (x + y) % d)
                .collect();
            undigits(&sum)
        })
        .expect("direct products of cyclic groups are groups")
    }
}

impl fmt::Display for AbelianGroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "Z1");
        }
        let parts: Vec<_> = self.factors.iter().map(|d| format!("Z{d}")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

/// Non-abelian groups with a built-in table. Together with the abelian
/// groups these cover every group of order at most 8.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum NamedGroup {
    /// Symmetric group on three letters.
    S3,
    /// Dihedral group of order 8.
    D4,
    /// Quaternion group.
    Q8,
}

impl NamedGroup {
    pub const ALL: [NamedGroup; 3] = [NamedGroup::S3, NamedGroup::D4, NamedGroup::Q8];

    pub fn name(self) -> &'static str {
        match self {
            NamedGroup::S3 => "S3",
            NamedGroup::D4 => "D4",
            NamedGroup::Q8 => "Q8",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|g| g.name() == name)
    }

    pub fn order(self) -> usize {
        match self {
            NamedGroup::S3 => 6,
            NamedGroup::D4 | NamedGroup::Q8 => 8,
        }
    }

    pub fn cayley(self) -> CayleyTable {
        let t = match self {
            NamedGroup::S3 => {
                let perms: Vec<Vec<usize>> = (0..3).permutations(3).collect();
                CayleyTable::from_fn(6, |a, b| {
                    // (a·b)(k) = a(b(k))
                    let prod: Vec<usize> = (0..3).map(|k| perms[a][perms[b][k]]).collect();
                    perms.iter().position(|p| *p == prod).unwrap()
                })
            }
            NamedGroup::D4 => {
                // r^i s^j ↦ 2i + j, with s r = r^{-1} s
                CayleyTable::from_fn(8, |a, b| {
                    let (i1, j1) = (a / 2, a % 2);
                    let (i2, j2) = (b / 2, b % 2);
                    let i = (if j1 == 0 { i1 + i2 } else { i1 + 4 - i2 }) % 4;
                    2 * i + (j1 ^ j2)
                })
            }
            NamedGroup::Q8 => {
                // ±1, ±i, ±j, ±k as 2u + sign with u ∈ {1, i, j, k}
                const UNIT_PRODUCTS: [[(usize, bool); 4]; 4] = [
                    [(0, false), (1, false), (2, false), (3, false)],
                    [(1, false), (0, true), (3, false), (2, true)],
                    [(2, false), (3, true), (0, true), (1, false)],
                    [(3, false), (2, false), (1, true), (0, true)],
                ];
                CayleyTable::from_fn(8, |a, b| {
                    let (u, v) = (a / 2, b / 2);
                    let (w, neg) = UNIT_PRODUCTS[u][v];
                    let sign = (a % 2) ^ (b % 2) ^ usize::from(neg);
                    2 * w + sign
                })
            }
        };
        t.expect("built-in tables are groups")
    }

    /// Identifies a non-abelian table with a library group of the same
    /// order. Element-order profiles separate S3, D4 and Q8, and these are
    /// the only non-abelian groups of order at most 8.
    pub fn identify(table: &CayleyTable) -> Option<NamedGroup> {
        if table.is_abelian() {
            return None;
        }
        let profile = table.order_profile();
        Self::ALL
            .into_iter()
            .find(|g| g.order() == table.order() && g.cayley().order_profile() == profile)
    }
}

/// One block of a structure: a group up to isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupSpec {
    Abelian(AbelianGroupSpec),
    Named(NamedGroup),
    /// A non-abelian group outside the built-in library.
    Unidentified(CayleyTable),
}

impl GroupSpec {
    pub fn order(&self) -> usize {
        match self {
            GroupSpec::Abelian(a) => a.order(),
            GroupSpec::Named(g) => g.order(),
            GroupSpec::Unidentified(t) => t.order(),
        }
    }

    pub fn is_abelian(&self) -> bool {
        matches!(self, GroupSpec::Abelian(_))
    }

    pub fn cayley(&self) -> CayleyTable {
        match self {
            GroupSpec::Abelian(a) => a.cayley(),
            GroupSpec::Named(g) => g.cayley(),
            GroupSpec::Unidentified(t) => t.clone(),
        }
    }

    /// Classifies a validated table: invariant factors when abelian, a
    /// library name when one matches, otherwise the table itself.
    pub fn from_table(table: CayleyTable) -> Self {
        if table.is_abelian() {
            GroupSpec::Abelian(abelian_invariants(&table))
        } else if let Some(g) = NamedGroup::identify(&table) {
            GroupSpec::Named(g)
        } else {
            GroupSpec::Unidentified(table)
        }
    }

    fn sort_key(&self) -> (usize, u8) {
        let rank = match self {
            GroupSpec::Abelian(_) => 0,
            GroupSpec::Named(_) => 1,
            GroupSpec::Unidentified(_) => 2,
        };
        (self.order(), rank)
    }
}

impl Ord for GroupSpec {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key()
            .cmp(&other.sort_key())
            .then_with(|| match (self, other) {
                (GroupSpec::Abelian(a), GroupSpec::Abelian(b)) => a.cmp(b),
                (GroupSpec::Named(a), GroupSpec::Named(b)) => a.cmp(b),
                (GroupSpec::Unidentified(a), GroupSpec::Unidentified(b)) => a.cmp(b),
                _ => Ordering::Equal,
            })
    }
}

impl PartialOrd for GroupSpec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Abelian(a) => a.fmt(f),
            GroupSpec::Named(g) => f.write_str(g.name()),
            GroupSpec::Unidentified(t) => {
                write!(f, "unidentified group of order {}", t.order())
            }
        }
    }
}

impl From<AbelianGroupSpec> for GroupSpec {
    fn from(a: AbelianGroupSpec) -> Self {
        GroupSpec::Abelian(a)
    }
}

impl From<NamedGroup> for GroupSpec {
    fn from(g: NamedGroup) -> Self {
        GroupSpec::Named(g)
    }
}

/// An isomorphism class of special Frobenius algebras in `Rel`: a multiset
/// of groups, kept sorted by (order, kind, invariant factors).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct StructureSpec {
    blocks: Vec<GroupSpec>,
}

impl StructureSpec {
    pub fn new(mut blocks: Vec<GroupSpec>) -> Self {
        blocks.sort();
        StructureSpec { blocks }
    }

    pub fn blocks(&self) -> &[GroupSpec] {
        &self.blocks
    }

    /// Carrier size: the sum of the block orders.
    pub fn n(&self) -> usize {
        self.blocks.iter().map(GroupSpec::order).sum()
    }

    pub fn is_abelian(&self) -> bool {
        self.blocks.iter().all(GroupSpec::is_abelian)
    }
}

impl FromIterator<GroupSpec> for StructureSpec {
    fn from_iter<T: IntoIterator<Item = GroupSpec>>(iter: T) -> Self {
        StructureSpec::new(iter.into_iter().collect())
    }
}

impl fmt::Display for StructureSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return write!(f, "(empty)");
        }
        let parts: Vec<_> = self.blocks.iter().map(|b| b.to_string()).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The structure `x∇y = {x·y}`, `⊥ = {unit}` on the group's own labels.
pub fn build_group_structure(g: &CayleyTable) -> FrobeniusCandidate {
    let n = g.order();
    let triples = itertools::iproduct!(0..n, 0..n).map(|(x, y)| (x, y, g.op(x, y)));
    FrobeniusCandidate::from_triples(n, triples, Vector::singleton(g.unit()))
        .expect("group tables stay within the carrier")
}

/// Disjoint union of the blocks of `spec`, laid out contiguously in
/// canonical order, each block starting with its unit. Products across
/// blocks are undefined and `⊥` is the set of block units.
pub fn build_biproduct(spec: &StructureSpec) -> FrobeniusCandidate {
    let n = spec.n();
    let mut nabla = Rel::empty(n * n, n);
    let mut bot = Vector::new();
    let mut offset = 0;
    for block in spec.blocks() {
        let table = block.cayley();
        let layout = table.unit_first_layout();
        let mut position = vec![0; layout.len()];
        for (pos, &label) in layout.iter().enumerate() {
            position[label] = offset + pos;
        }
        for (x, y) in itertools::iproduct!(0..table.order(), 0..table.order()) {
            nabla.insert(
                pair_index(position[x], position[y], n),
                position[table.op(x, y)],
            );
        }
        bot.insert(offset);
        offset += table.order();
    }
    FrobeniusCandidate::new(n, nabla, bot).expect("blocks tile the carrier")
}

/// Prime factorization as `(p, e)` pairs in increasing order of `p`.
pub fn factorize(mut m: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// Combines prime-power cyclic orders into invariant factors: per prime,
/// sort the powers in decreasing order; the `k`-th largest invariant factor
/// is the product of every prime's `k`-th largest power.
fn combine_prime_powers(by_prime: &BTreeMap<usize, Vec<usize>>) -> AbelianGroupSpec {
    let depth = by_prime.values().map(Vec::len).max().unwrap_or(0);
    let mut factors: Vec<usize> = (0..depth)
        .map(|k| {
            by_prime
                .values()
                .filter_map(|powers| {
                    let mut sorted = powers.clone();
                    sorted.sort_unstable_by(|a, b| b.cmp(a));
                    sorted.get(k).copied()
                })
                .product()
        })
        .collect();
    factors.reverse();
    AbelianGroupSpec::new(factors).expect("prime-power recombination yields a divisor chain")
}

/// Invariant factors of `Z_{m1} × … × Z_{mk}`.
pub fn normalize_invariant_factors(cyclic_orders: &[usize]) -> Result<AbelianGroupSpec> {
    if cyclic_orders.contains(&0) {
        return Err(Error::InvalidSpec("cyclic order 0".into()));
    }
    let mut by_prime: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &m in cyclic_orders {
        for (p, e) in factorize(m) {
            by_prime.entry(p).or_default().push(p.pow(e));
        }
    }
    Ok(combine_prime_powers(&by_prime))
}

/// All abelian groups of order `m` up to isomorphism, ordered by number of
/// invariant factors and then lexicographically.
pub fn enumerate_abelian_groups(m: usize) -> Result<Vec<AbelianGroupSpec>> {
    if m == 0 {
        return Err(Error::InvalidSpec("a group has order at least 1".into()));
    }
    let per_prime: Vec<Vec<Vec<usize>>> = factorize(m)
        .into_iter()
        .map(|(p, e)| {
            partitions(e as usize)
                .into_iter()
                .map(|part| part.parts().iter().map(|&k| p.pow(k as u32)).collect())
                .collect()
        })
        .collect();
    let primes: Vec<usize> = factorize(m).into_iter().map(|(p, _)| p).collect();
    let mut out: Vec<AbelianGroupSpec> = per_prime
        .into_iter()
        .multi_cartesian_product()
        .map(|choice| {
            let by_prime = primes.iter().copied().zip(choice).collect();
            combine_prime_powers(&by_prime)
        })
        .collect();
    if out.is_empty() {
        // m = 1: no primes, one empty choice
        out.push(AbelianGroupSpec::trivial());
    }
    out.sort_by(|a, b| {
        a.factors
            .len()
            .cmp(&b.factors.len())
            .then_with(|| a.factors.cmp(&b.factors))
    });
    out.dedup();
    Ok(out)
}

/// Every group of order `m` up to isomorphism, abelian ones first, for
/// `m ≤ 8`.
pub fn groups_of_order(m: usize) -> Result<Vec<GroupSpec>> {
    if m > 8 {
        return Err(Error::TooLarge {
            what: "group order for the built-in table library",
            limit: 8,
            got: m,
        });
    }
    let mut out: Vec<GroupSpec> = enumerate_abelian_groups(m)?
        .into_iter()
        .map(GroupSpec::Abelian)
        .collect();
    out.extend(
        NamedGroup::ALL
            .into_iter()
            .filter(|g| g.order() == m)
            .map(GroupSpec::Named),
    );
    Ok(out)
}

/// Invariant factors of an abelian table by repeatedly splitting off the
/// cyclic subgroup of an element of maximal order, which is always a direct
/// summand, and recursing on the quotient.
pub fn abelian_invariants(table: &CayleyTable) -> AbelianGroupSpec {
    let mut factors = Vec::new();
    let mut current = table.clone();
    while current.order() > 1 {
        let g = (0..current.order())
            .max_by_key(|&a| (current.element_order(a), std::cmp::Reverse(a)))
            .unwrap();
        factors.push(current.element_order(g));
        current = quotient_by_cyclic(&current, g);
    }
    factors.reverse();
    AbelianGroupSpec::new(factors).expect("maximal-order splitting yields a divisor chain")
}

/// `G / <g>` for an abelian `G`, cosets labelled by their least element.
fn quotient_by_cyclic(table: &CayleyTable, g: usize) -> CayleyTable {
    let mut subgroup = vec![table.unit()];
    let mut x = g;
    while x != table.unit() {
        subgroup.push(x);
        x = table.op(x, g);
    }
    let mut coset_of = vec![usize::MAX; table.order()];
    let mut reps = Vec::new();
    for a in 0..table.order() {
        if coset_of[a] == usize::MAX {
            for &h in &subgroup {
                coset_of[table.op(a, h)] = reps.len();
            }
            reps.push(a);
        }
    }
    CayleyTable::from_fn(reps.len(), |i, j| coset_of[table.op(reps[i], reps[j])])
        .expect("quotients of abelian groups are groups")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::verify_structure;

    fn ab(f: &[usize]) -> AbelianGroupSpec {
        AbelianGroupSpec::new(f.to_vec()).unwrap()
    }

    #[test]
    fn z2_gives_the_nonstandard_two_element_structure() {
        let c = build_group_structure(&ab(&[2]).cayley());
        let fibre = |z| -> Vec<(usize, usize)> {
            c.triples()
                .into_iter()
                .filter(|t| t.2 == z)
                .map(|t| (t.0, t.1))
                .collect()
        };
        assert_eq!(fibre(0), vec![(0, 0), (1, 1)]);
        assert_eq!(fibre(1), vec![(0, 1), (1, 0)]);
        assert_eq!(c.bot(), &Vector::singleton(0));
    }

    #[test]
    fn z3_fibres() {
        let c = build_group_structure(&ab(&[3]).cayley());
        let fibre = |z| -> Vec<(usize, usize)> {
            c.triples()
                .into_iter()
                .filter(|t| t.2 == z)
                .map(|t| (t.0, t.1))
                .collect()
        };
        assert_eq!(fibre(0), vec![(0, 0), (1, 2), (2, 1)]);
        assert_eq!(fibre(1), vec![(0, 1), (1, 0), (2, 2)]);
        assert_eq!(fibre(2), vec![(0, 2), (1, 1), (2, 0)]);
    }

    #[test]
    fn trivial_group_structure() {
        let c = build_group_structure(&AbelianGroupSpec::trivial().cayley());
        assert_eq!(c.n(), 1);
        assert_eq!(c.triples(), vec![(0, 0, 0)]);
        assert_eq!(c.bot(), &Vector::singleton(0));
    }

    #[test]
    fn invalid_tables_name_the_axiom() {
        // not associative: a·b = a - b mod 3
        let err = CayleyTable::from_fn(3, |a, b| (a + 3 - b) % 3).unwrap_err();
        assert!(matches!(
            err,
            Error::InvalidGroup(GroupAxiom::Associativity { .. })
        ));
        // max on {0,1}: monoid without inverse for 1
        let err = CayleyTable::from_fn(2, |a, b| a.max(b)).unwrap_err();
        assert!(matches!(
            err,
            Error::InvalidGroup(GroupAxiom::Inverse { element: 1 })
        ));
        // constant 0: associative, no unit
        let err = CayleyTable::from_fn(2, |_, _| 0).unwrap_err();
        assert!(matches!(err, Error::InvalidGroup(GroupAxiom::Unit)));
        let err = CayleyTable::new(2, vec![0, 1, 1]).unwrap_err();
        assert!(matches!(
            err,
            Error::InvalidGroup(GroupAxiom::Totality { .. })
        ));
        let err = CayleyTable::new(2, vec![0, 1, 1, 2]).unwrap_err();
        assert!(matches!(
            err,
            Error::InvalidGroup(GroupAxiom::Totality { .. })
        ));
    }

    #[test]
    fn tables_with_a_nonzero_unit() {
        // Z2 with unit 1
        let t = CayleyTable::new(2, vec![1, 0, 0, 1]).unwrap();
        assert_eq!(t.unit(), 1);
        let c = build_group_structure(&t);
        assert_eq!(c.bot(), &Vector::singleton(1));
        assert!(verify_structure(&c).is_classical());
        let spec = StructureSpec::new(vec![GroupSpec::from_table(t)]);
        assert_eq!(spec.to_string(), "Z2");
    }

    #[test]
    fn abelian_group_counts() {
        assert_eq!(enumerate_abelian_groups(1).unwrap(), vec![ab(&[])]);
        assert_eq!(
            enumerate_abelian_groups(4).unwrap(),
            vec![ab(&[4]), ab(&[2, 2])]
        );
        assert_eq!(enumerate_abelian_groups(6).unwrap(), vec![ab(&[6])]);
        assert_eq!(
            enumerate_abelian_groups(8).unwrap(),
            vec![ab(&[8]), ab(&[2, 4]), ab(&[2, 2, 2])]
        );
        assert_eq!(
            enumerate_abelian_groups(12).unwrap(),
            vec![ab(&[12]), ab(&[2, 6])]
        );
        assert_eq!(enumerate_abelian_groups(16).unwrap().len(), 5);
        assert!(enumerate_abelian_groups(0).is_err());
    }

    #[test]
    fn normalization_examples() {
        assert_eq!(normalize_invariant_factors(&[2, 3]).unwrap(), ab(&[6]));
        assert_eq!(normalize_invariant_factors(&[2, 2]).unwrap(), ab(&[2, 2]));
        assert_eq!(normalize_invariant_factors(&[4, 6]).unwrap(), ab(&[2, 12]));
        assert_eq!(normalize_invariant_factors(&[1, 1]).unwrap(), ab(&[]));
        assert_eq!(normalize_invariant_factors(&[]).unwrap(), ab(&[]));
        assert!(normalize_invariant_factors(&[0]).is_err());
    }

    #[test]
    fn four_six_matches_by_element_orders() {
        let direct = CayleyTable::from_fn(24, |a, b| {
            let (a1, a2) = (a / 6, a % 6);
            let (b1, b2) = (b / 6, b % 6);
            ((a1 + b1) % 4) * 6 + (a2 + b2) % 6
        })
        .unwrap();
        assert_eq!(
            direct.order_profile(),
            ab(&[2, 12]).cayley().order_profile()
        );
        assert_ne!(direct.order_profile(), ab(&[24]).cayley().order_profile());
    }

    #[test]
    fn spec_validation() {
        assert!(AbelianGroupSpec::new(vec![1]).is_err());
        assert!(AbelianGroupSpec::new(vec![4, 2]).is_err());
        assert!(AbelianGroupSpec::new(vec![2, 3]).is_err());
        assert_eq!(ab(&[2, 2]).to_string(), "Z2xZ2");
        assert_eq!(ab(&[]).to_string(), "Z1");
    }

    #[test]
    fn library_tables() {
        for g in NamedGroup::ALL {
            let t = g.cayley();
            assert_eq!(t.order(), g.order());
            assert!(!t.is_abelian(), "{g:?}");
            assert_eq!(t.unit(), 0);
            assert_eq!(NamedGroup::identify(&t), Some(g));
        }
        assert_eq!(
            NamedGroup::D4.cayley().order_profile(),
            vec![1, 2, 2, 2, 2, 2, 4, 4]
        );
        assert_eq!(
            NamedGroup::Q8.cayley().order_profile(),
            vec![1, 2, 4, 4, 4, 4, 4, 4]
        );
    }

    #[test]
    fn non_abelian_structure_fails_only_commutativity() {
        for g in NamedGroup::ALL {
            let r = verify_structure(&build_group_structure(&g.cayley()));
            assert!(r.is_special_frobenius(), "{g:?}: {r:?}");
            assert!(!r.commutativity.passed());
        }
    }

    #[test]
    fn biproduct_layout() {
        let spec = StructureSpec::new(vec![ab(&[3]).into(), ab(&[2]).into()]);
        assert_eq!(spec.to_string(), "Z2 + Z3");
        let c = build_biproduct(&spec);
        assert_eq!(c.n(), 5);
        assert_eq!(c.bot(), &[0, 2].into_iter().collect());
        assert_eq!(c.product(0, 1), Some(1));
        assert_eq!(c.product(1, 2), None);
        assert_eq!(c.product(3, 4), Some(2));
        assert!(verify_structure(&c).is_classical());
    }

    #[test]
    fn standard_structure_is_a_biproduct_of_trivial_groups() {
        let spec: StructureSpec = (0..4).map(|_| ab(&[]).into()).collect();
        let c = build_biproduct(&spec);
        assert_eq!(c.triples(), (0..4).map(|i| (i, i, i)).collect::<Vec<_>>());
        assert_eq!(c.bot(), &Vector::full(4));
    }

    #[test]
    fn invariants_of_tables() {
        for f in [
            &[][..],
            &[2],
            &[4],
            &[2, 2],
            &[2, 4],
            &[2, 2, 2],
            &[3, 3],
            &[2, 6],
            &[12],
        ] {
            assert_eq!(abelian_invariants(&ab(f).cayley()), ab(f));
        }
    }

    #[test]
    fn canonical_block_order() {
        let spec = StructureSpec::new(vec![
            NamedGroup::S3.into(),
            ab(&[6]).into(),
            ab(&[2, 2]).into(),
            ab(&[4]).into(),
            ab(&[]).into(),
        ]);
        assert_eq!(spec.to_string(), "Z1 + Z2xZ2 + Z4 + Z6 + S3");
        assert_eq!(spec.n(), 21);
    }
}
