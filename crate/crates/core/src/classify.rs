//! Enumeration of classical structures by partitions and group choices, and
//! an independent exhaustive search over raw relational candidates.
//!
//! Counts are up to isomorphism: two structures on `{0..n}` are the same
//! when a carrier permutation carries one onto the other.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::analysis::decompose;
use crate::error::{Error, Result};
use crate::groups::{enumerate_abelian_groups, groups_of_order, GroupSpec, StructureSpec};
use crate::rel::{unpair, Rel, Vector};
use crate::structures::{is_special_frobenius_with, verify_structure, FrobeniusCandidate};

/// Largest carrier accepted by the exhaustive search.
pub const SEARCH_LIMIT: usize = 4;
/// Largest carrier accepted by [`quotient_by_iso`] (all `n!` relabelings).
pub const ISO_LIMIT: usize = 6;
/// Largest carrier accepted by the unpruned filter.
pub const UNPRUNED_LIMIT: usize = 2;
/// Largest carrier accepted by [`comonoid_completions`].
pub const COMPLETION_LIMIT: usize = 3;

/// A non-increasing list of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", self.0.iter().join("+"))
    }
}

/// All partitions of `n` in reverse-lexicographic order, starting with `[n]`.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for k in (1..=rest.min(max)).rev() {
            prefix.push(k);
            go(rest - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Cartesian product that yields one empty tuple for an empty input.
fn cartesian<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    lists.iter().fold(vec![Vec::new()], |acc, list| {
        acc.iter()
            .flat_map(|prefix| {
                list.iter().map(move |item| {
                    let mut next = prefix.clone();
                    next.push(item.clone());
                    next
                })
            })
            .collect()
    })
}

fn enumerate_with(
    n: usize,
    groups: impl Fn(usize) -> Result<Vec<GroupSpec>>,
) -> Result<Vec<StructureSpec>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for partition in partitions(n) {
        let choices = partition
            .parts()
            .iter()
            .map(|&m| groups(m))
            .collect::<Result<Vec<_>>>()?;
        for blocks in cartesian(&choices) {
            let spec = StructureSpec::new(blocks);
            if seen.insert(spec.clone()) {
                out.push(spec);
            }
        }
    }
    Ok(out)
}

/// Every classical structure on `n` elements up to isomorphism: one
/// abelian group per part of each partition of `n`.
pub fn enumerate_classical_structures(n: usize) -> Vec<StructureSpec> {
    enumerate_with(n, |m| {
        Ok(enumerate_abelian_groups(m)?
            .into_iter()
            .map(GroupSpec::Abelian)
            .collect())
    })
    .expect("parts are positive")
}

/// Every special Frobenius algebra on `n ≤ 8` elements up to isomorphism,
/// admitting the non-abelian library groups as blocks.
pub fn enumerate_special_frobenius(n: usize) -> Result<Vec<StructureSpec>> {
    if n > 8 {
        return Err(Error::TooLarge {
            what: "carrier size for special Frobenius enumeration",
            limit: 8,
            got: n,
        });
    }
    enumerate_with(n, groups_of_order)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub n: usize,
    pub require_commutative: bool,
    /// Cap on explored search nodes; `None` means unbounded.
    pub node_budget: Option<u64>,
}

impl SearchConfig {
    pub fn commutative(n: usize) -> Self {
        SearchConfig {
            n,
            require_commutative: true,
            node_budget: None,
        }
    }
}

const UNSET: u8 = u8::MAX;
const UNDEF: u8 = u8::MAX - 1;

struct Search {
    n: usize,
    commutative: bool,
    cells: Vec<(usize, usize)>,
    table: Vec<u8>,
    budget: Option<u64>,
    nodes: u64,
    found: Vec<FrobeniusCandidate>,
}

impl Search {
    fn get(&self, x: usize, y: usize) -> u8 {
        self.table[x * self.n + y]
    }

    fn set(&mut self, x: usize, y: usize, v: u8) {
        self.table[x * self.n + y] = v;
        if self.commutative {
            self.table[y * self.n + x] = v;
        }
    }

    /// Elements whose assigned products never contradict being a unit.
    fn unit_candidates(&self) -> Vec<usize> {
        let n = self.n;
        (0..n)
            .filter(|&e| {
                (0..n).all(|y| {
                    let ok = |v: u8| v == UNSET || v == UNDEF || v as usize == y;
                    ok(self.get(e, y)) && ok(self.get(y, e))
                })
            })
            .collect()
    }

    fn associative_so_far(&self) -> bool {
        let n = self.n;
        let after = |v: u8, z: usize, left: bool| -> Option<u8> {
            match v {
                UNSET => None,
                UNDEF => Some(UNDEF),
                w => {
                    let r = if left {
                        self.get(w as usize, z)
                    } else {
                        self.get(z, w as usize)
                    };
                    (r != UNSET).then_some(r)
                }
            }
        };
        for (a, b, c) in itertools::iproduct!(0..n, 0..n, 0..n) {
            let Some(lhs) = after(self.get(a, b), c, true) else {
                continue;
            };
            let Some(rhs) = after(self.get(b, c), a, false) else {
                continue;
            };
            if lhs != rhs {
                return false;
            }
        }
        true
    }

    fn units_feasible(&self) -> bool {
        let units = self.unit_candidates();
        (0..self.n).all(|x| {
            let hits = |v: u8| v == UNSET || v as usize == x;
            units.iter().any(|&e| hits(self.get(e, x)))
                && units.iter().any(|&e| hits(self.get(x, e)))
        })
    }

    fn surjection_feasible(&self, free_cells: usize) -> bool {
        let mut hit = vec![false; self.n];
        for &v in &self.table {
            if v != UNSET && v != UNDEF {
                hit[v as usize] = true;
            }
        }
        hit.iter().filter(|&&h| !h).count() <= free_cells
    }

    fn consistent(&self, free_cells: usize) -> bool {
        self.surjection_feasible(free_cells) && self.units_feasible() && self.associative_so_far()
    }

    fn leaf(&mut self) {
        let n = self.n;
        let bot: Vector = self.unit_candidates().into_iter().collect();
        let table: Vec<Option<usize>> = self
            .table
            .iter()
            .map(|&v| (v != UNDEF).then_some(v as usize))
            .collect();
        let c = FrobeniusCandidate::from_partial_table(n, &table, bot)
            .expect("search tables stay within the carrier");
        let report = verify_structure(&c);
        let accepted = if self.commutative {
            report.is_classical()
        } else {
            report.is_special_frobenius()
        };
        if accepted {
            self.found.push(c);
        }
    }

    fn run(&mut self, depth: usize) -> std::result::Result<(), ()> {
        if depth == self.cells.len() {
            self.leaf();
            return Ok(());
        }
        let (x, y) = self.cells[depth];
        let values = (0..self.n as u8).chain(std::iter::once(UNDEF));
        for v in values {
            self.nodes += 1;
            if self.budget.is_some_and(|b| self.nodes > b) {
                return Err(());
            }
            self.set(x, y, v);
            if self.consistent(self.cells.len() - depth - 1) {
                self.run(depth + 1)?;
            }
        }
        self.set(x, y, UNSET);
        Ok(())
    }
}

/// All candidates `(∇, ⊥)` on the labeled set `{0..n}` that pass every
/// axiom (commutativity only when required), sorted.
///
/// By the special law `∇` is a partial operation, so the search fills its
/// table cell by cell in row-major order (unordered pairs when commutativity
/// is required) and prunes on associativity of the filled part, on the
/// existence of unit elements, and on whether every element can still be
/// reached. The unit of a monoid in `Rel` is unique, so `⊥` is not guessed:
/// it is the set of all elements acting as partial units.
pub fn brute_force_search(cfg: SearchConfig) -> Result<Vec<FrobeniusCandidate>> {
    let n = cfg.n;
    if n > SEARCH_LIMIT {
        return Err(Error::TooLarge {
            what: "carrier size for exhaustive search",
            limit: SEARCH_LIMIT,
            got: n,
        });
    }
    let cells: Vec<(usize, usize)> = if cfg.require_commutative {
        (0..n).flat_map(|x| (x..n).map(move |y| (x, y))).collect()
    } else {
        itertools::iproduct!(0..n, 0..n).collect()
    };
    let mut search = Search {
        n,
        commutative: cfg.require_commutative,
        cells,
        table: vec![UNSET; n * n],
        budget: cfg.node_budget,
        nodes: 0,
        found: Vec::new(),
    };
    let outcome = search.run(0);
    let mut found = search.found;
    found.sort();
    match outcome {
        Ok(()) => Ok(found),
        Err(()) => Err(Error::BudgetExhausted {
            explored: search.nodes,
            partial: found,
        }),
    }
}

/// The search without pruning: every relation `∇ : n·n ⇸ n` (multi-valued
/// ones included) and every unit subset, filtered through
/// [`verify_structure`].
pub fn unpruned_search(n: usize, require_commutative: bool) -> Result<Vec<FrobeniusCandidate>> {
    if n > UNPRUNED_LIMIT {
        return Err(Error::TooLarge {
            what: "carrier size for the unpruned filter",
            limit: UNPRUNED_LIMIT,
            got: n,
        });
    }
    let bits = n * n * n;
    let mut found = Vec::new();
    for mask in 0u64..(1 << bits) {
        let mut nabla = Rel::empty(n * n, n);
        for b in 0..bits {
            if mask >> b & 1 == 1 {
                nabla.insert(b / n, b % n);
            }
        }
        for unit_mask in 0usize..(1 << n) {
            let bot = (0..n).filter(|i| unit_mask >> i & 1 == 1).collect();
            let c = FrobeniusCandidate::new(n, nabla.clone(), bot)?;
            let report = verify_structure(&c);
            let ok = if require_commutative {
                report.is_classical()
            } else {
                report.is_special_frobenius()
            };
            if ok {
                found.push(c);
            }
        }
    }
    found.sort();
    Ok(found)
}

type CanonicalKey = (Vec<(usize, usize, usize)>, Vector);

fn key(c: &FrobeniusCandidate) -> CanonicalKey {
    (c.triples(), c.bot().clone())
}

/// The lexicographically least relabeling of `c` over all carrier
/// permutations.
pub fn canonical_form(c: &FrobeniusCandidate) -> Result<FrobeniusCandidate> {
    let n = c.n();
    if n > ISO_LIMIT {
        return Err(Error::TooLarge {
            what: "carrier size for isomorphism canonicalization",
            limit: ISO_LIMIT,
            got: n,
        });
    }
    Ok((0..n)
        .permutations(n)
        .map(|sigma| c.relabel(&sigma))
        .min_by_key(key)
        .unwrap_or_else(|| c.clone()))
}

/// Partitions candidates into isomorphism classes; returns each class's
/// canonical representative with the class size, sorted by representative.
pub fn quotient_by_iso(cands: &[FrobeniusCandidate]) -> Result<Vec<(FrobeniusCandidate, usize)>> {
    let mut classes: BTreeMap<CanonicalKey, (FrobeniusCandidate, usize)> = BTreeMap::new();
    for c in cands {
        let rep = canonical_form(c)?;
        classes.entry(key(&rep)).or_insert_with(|| (rep, 0)).1 += 1;
    }
    Ok(classes.into_values().collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassRow {
    pub representative: Vec<(usize, usize, usize)>,
    pub unit: Vector,
    pub class_size: usize,
    pub spec: StructureSpec,
}

/// The brute-force classes beside the enumerated structures.
#[derive(Clone, Debug, Serialize)]
pub struct CrossValidation {
    pub n: usize,
    pub candidates: usize,
    pub classes: Vec<ClassRow>,
    pub enumerated: Vec<StructureSpec>,
    /// Problems found; empty iff the two sides match bijectively.
    pub mismatches: Vec<String>,
}

impl CrossValidation {
    pub fn matches(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares the exhaustive search (up to isomorphism) with the enumeration
/// by partitions and abelian groups.
pub fn cross_validate(n: usize, node_budget: Option<u64>) -> Result<CrossValidation> {
    let candidates = brute_force_search(SearchConfig {
        n,
        require_commutative: true,
        node_budget,
    })?;
    let enumerated = enumerate_classical_structures(n);
    let mut mismatches = Vec::new();
    let mut classes = Vec::new();
    let mut hit = BTreeSet::new();
    for (rep, class_size) in quotient_by_iso(&candidates)? {
        let spec = decompose(&rep)?.spec;
        if !spec.is_abelian() {
            mismatches.push(format!("class {rep:?} decomposes into non-abelian {spec}"));
        }
        if !enumerated.contains(&spec) {
            mismatches.push(format!("class {rep:?} decomposes into unlisted {spec}"));
        }
        if !hit.insert(spec.clone()) {
            mismatches.push(format!("two classes decompose into {spec}"));
        }
        classes.push(ClassRow {
            representative: rep.triples(),
            unit: rep.bot().clone(),
            class_size,
            spec,
        });
    }
    for spec in &enumerated {
        if !hit.contains(spec) {
            mismatches.push(format!("enumerated {spec} has no brute-force class"));
        }
    }
    Ok(CrossValidation {
        n,
        candidates: candidates.len(),
        classes,
        enumerated,
        mismatches,
    })
}

/// Every comonoid `(Δ', ⊤')` that completes the monoid of `c` to a special
/// Frobenius algebra, found by exhausting `Δ' : n ⇸ n·n` and `⊤' : n ⇸ 1`.
///
/// Rows of `Δ'` are first restricted to those satisfying the special law and
/// both counit laws at that row (each of these equations holds iff it holds
/// row by row); every surviving combination is then checked in full.
pub fn comonoid_completions(c: &FrobeniusCandidate) -> Result<Vec<(Rel, Rel)>> {
    let n = c.n();
    if n > COMPLETION_LIMIT {
        return Err(Error::TooLarge {
            what: "carrier size for comonoid completion search",
            limit: COMPLETION_LIMIT,
            got: n,
        });
    }
    let pairs = n * n;
    let products: Vec<BTreeSet<usize>> = (0..pairs).map(|p| c.nabla().row(p).collect()).collect();
    let mut out = Vec::new();
    for top_mask in 0usize..(1 << n) {
        let in_top = |t: usize| top_mask >> t & 1 == 1;
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|x| {
                let only_x = BTreeSet::from([x]);
                (0usize..(1 << pairs))
                    .filter(|&row| {
                        let members = (0..pairs).filter(|p| row >> p & 1 == 1);
                        let reached: BTreeSet<usize> = members
                            .clone()
                            .flat_map(|p| products[p].iter().copied())
                            .collect();
                        let left: BTreeSet<usize> = members
                            .clone()
                            .map(|p| unpair(p, n))
                            .filter(|&(s, _)| in_top(s))
                            .map(|(_, y)| y)
                            .collect();
                        let right: BTreeSet<usize> = members
                            .map(|p| unpair(p, n))
                            .filter(|&(_, t)| in_top(t))
                            .map(|(s, _)| s)
                            .collect();
                        reached == only_x && left == only_x && right == only_x
                    })
                    .collect()
            })
            .collect();
        let top = Rel::from_pairs(n, 1, (0..n).filter(|&t| in_top(t)).map(|t| (t, 0)))?;
        for choice in cartesian(&rows) {
            let mut delta = Rel::empty(n, pairs);
            for (x, row) in choice.iter().enumerate() {
                for p in (0..pairs).filter(|p| row >> p & 1 == 1) {
                    delta.insert(x, p);
                }
            }
            if is_special_frobenius_with(c, &delta, &top) {
                out.push((delta, top.clone()));
            }
        }
    }
    Ok(out)
}
