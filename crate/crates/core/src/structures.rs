//! Frobenius-algebra candidates over `Rel` and their axiom checks.
//!
//! A candidate is given by its monoid part: a multiplication relation
//! `∇ : X ⊗ X ⇸ X` and a unit vector `⊥ ⊆ X`. The comonoid part is always
//! the converse (`Δ = ∇‡`, `⊤ = ⊥‡`), so adjointness holds by construction.
//!
//! Every axiom is evaluated as an equality of composite relations. The
//! Frobenius law is additionally evaluated pointwise on the multiplication
//! table by [`frobenius_pointwise`]; the two verdicts must coincide.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rel::{pair_index, unpair, Rel, Vector};

/// Monoid part `(X, ∇, ⊥)` of a would-be classical structure.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FrobeniusCandidate {
    n: usize,
    nabla: Rel,
    bot: Vector,
}

impl FrobeniusCandidate {
    pub fn new(n: usize, nabla: Rel, bot: Vector) -> Result<Self> {
        if nabla.shape() != (n * n, n) {
            return Err(Error::ShapeMismatch {
                left: nabla.shape(),
                right: (n * n, n),
            });
        }
        if let Some(x) = bot.iter().find(|&x| x >= n) {
            return Err(Error::ElementOutOfRange { element: x, n });
        }
        Ok(FrobeniusCandidate { n, nabla, bot })
    }

    /// Builds `∇` from triples `(x, y, z)` meaning `z ∈ x∇y`.
    pub fn from_triples<I>(n: usize, triples: I, bot: Vector) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize)>,
    {
        let mut nabla = Rel::empty(n * n, n);
        for (x, y, z) in triples {
            if let Some(&bad) = [x, y, z].iter().find(|&&e| e >= n) {
                return Err(Error::ElementOutOfRange { element: bad, n });
            }
            nabla.insert(pair_index(x, y, n), z);
        }
        Self::new(n, nabla, bot)
    }

    /// Builds `∇` from a row-major partial operation table, `None` marking
    /// an undefined product.
    pub fn from_partial_table(n: usize, table: &[Option<usize>], bot: Vector) -> Result<Self> {
        if table.len() != n * n {
            return Err(Error::ShapeMismatch {
                left: (table.len(), 1),
                right: (n * n, 1),
            });
        }
        let triples = table.iter().enumerate().filter_map(|(cell, v)| {
            v.map(|z| {
                let (x, y) = unpair(cell, n);
                (x, y, z)
            })
        });
        Self::from_triples(n, triples, bot)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nabla(&self) -> &Rel {
        &self.nabla
    }

    pub fn bot(&self) -> &Vector {
        &self.bot
    }

    /// The unit as a relation `1 ⇸ X`.
    pub fn bot_rel(&self) -> Rel {
        self.bot
            .to_rel(self.n)
            .expect("unit checked at construction")
    }

    /// `Δ = ∇‡ : X ⇸ X ⊗ X`.
    pub fn delta(&self) -> Rel {
        self.nabla.converse()
    }

    /// `⊤ = ⊥‡ : X ⇸ 1`.
    pub fn top(&self) -> Rel {
        self.bot_rel().converse()
    }

    /// The set `x∇y`.
    pub fn products(&self, x: usize, y: usize) -> impl Iterator<Item = usize> + '_ {
        self.nabla.row(pair_index(x, y, self.n))
    }

    /// `x∇y` when it is a single element.
    pub fn product(&self, x: usize, y: usize) -> Option<usize> {
        let mut it = self.products(x, y);
        match (it.next(), it.next()) {
            (Some(z), None) => Some(z),
            _ => None,
        }
    }

    /// All `(x, y, z)` with `z ∈ x∇y`, sorted.
    pub fn triples(&self) -> Vec<(usize, usize, usize)> {
        self.nabla
            .pairs()
            .map(|(p, z)| {
                let (x, y) = unpair(p, self.n);
                (x, y, z)
            })
            .collect()
    }

    /// The candidate transported along the carrier permutation `sigma`.
    pub fn relabel(&self, sigma: &[usize]) -> FrobeniusCandidate {
        assert_eq!(sigma.len(), self.n);
        let mut nabla = Rel::empty(self.n * self.n, self.n);
        for (x, y, z) in self.triples() {
            nabla.insert(pair_index(sigma[x], sigma[y], self.n), sigma[z]);
        }
        let bot = self.bot.iter().map(|x| sigma[x]).collect();
        FrobeniusCandidate {
            n: self.n,
            nabla,
            bot,
        }
    }
}

impl fmt::Debug for FrobeniusCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FrobeniusCandidate")
            .field("n", &self.n)
            .field("nabla", &self.triples())
            .field("bot", &self.bot)
            .finish()
    }
}

/// Where and how the two sides of an axiom disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Two element sets differ at the indices `at` (an element, a pair or a
    /// triple, depending on the axiom).
    Elements {
        at: Vec<usize>,
        left: Vec<usize>,
        right: Vec<usize>,
    },
    /// Two sets of pairs differ at `(i, j)`.
    Pairs {
        at: (usize, usize),
        left: Vec<(usize, usize)>,
        right: Vec<(usize, usize)>,
    },
}

impl Witness {
    /// The indices the witness refers to.
    pub fn location(&self) -> Vec<usize> {
        match self {
            Witness::Elements { at, .. } => at.clone(),
            Witness::Pairs { at, .. } => vec![at.0, at.1],
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn pairs(ps: &[(usize, usize)]) -> String {
            let items: Vec<_> = ps.iter().map(|(a, b)| format!("{a}{b}")).collect();
            format!("{{{}}}", items.join(","))
        }
        match self {
            Witness::Elements { at, left, right } => {
                let at: Vec<_> = at.iter().map(|x| x.to_string()).collect();
                write!(f, "at ({}): {:?} vs {:?}", at.join(","), left, right)
            }
            Witness::Pairs { at, left, right } => write!(
                f,
                "at ({},{}): {} vs {}",
                at.0,
                at.1,
                pairs(left),
                pairs(right)
            ),
        }
    }
}

/// Outcome of one axiom. Failures list every violating location in
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "witnesses", rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail(Vec<Witness>),
}

impl Verdict {
    fn from_witnesses(w: Vec<Witness>) -> Self {
        if w.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail(w)
        }
    }

    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn witnesses(&self) -> &[Witness] {
        match self {
            Verdict::Pass => &[],
            Verdict::Fail(w) => w,
        }
    }

    /// The lexicographically first witness.
    pub fn first_witness(&self) -> Option<&Witness> {
        self.witnesses().first()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub n: usize,
    /// The empty carrier satisfies every axiom vacuously.
    pub empty_carrier: bool,
    pub associativity: Verdict,
    pub left_unit: Verdict,
    pub right_unit: Verdict,
    pub commutativity: Verdict,
    pub special: Verdict,
    pub frobenius: Verdict,
    pub frobenius_pointwise: Verdict,
}

impl AxiomReport {
    pub fn entries(&self) -> [(&'static str, &Verdict); 7] {
        [
            ("associativity", &self.associativity),
            ("left_unit", &self.left_unit),
            ("right_unit", &self.right_unit),
            ("commutativity", &self.commutativity),
            ("special", &self.special),
            ("frobenius", &self.frobenius),
            ("frobenius_pointwise", &self.frobenius_pointwise),
        ]
    }

    pub fn is_monoid(&self) -> bool {
        self.associativity.passed() && self.left_unit.passed() && self.right_unit.passed()
    }

    /// Every axiom except possibly commutativity.
    pub fn is_special_frobenius(&self) -> bool {
        self.is_monoid()
            && self.special.passed()
            && self.frobenius.passed()
            && self.frobenius_pointwise.passed()
    }

    pub fn is_classical(&self) -> bool {
        self.is_special_frobenius() && self.commutativity.passed()
    }

    pub fn failed_axioms(&self) -> Vec<&'static str> {
        self.entries()
            .into_iter()
            .filter(|(_, v)| !v.passed())
            .map(|(name, _)| name)
            .collect()
    }
}

fn row_set(r: &Rel, a: usize) -> Vec<usize> {
    r.row(a).collect()
}

fn row_pairs(r: &Rel, a: usize, width: usize) -> Vec<(usize, usize)> {
    r.row(a).map(|p| unpair(p, width)).collect()
}

/// Compares two relations row by row, reporting each differing row as an
/// element witness located at the unflattened row index.
fn compare_rows(left: &Rel, right: &Rel, locate: impl Fn(usize) -> Vec<usize>) -> Verdict {
    Verdict::from_witnesses(
        left.row_differences(right)
            .map(|a| Witness::Elements {
                at: locate(a),
                left: row_set(left, a),
                right: row_set(right, a),
            })
            .collect(),
    )
}

fn compose(a: &Rel, b: &Rel) -> Rel {
    a.compose(b).expect("axiom composites are well-typed")
}

/// `∇∘(∇⊗id) = ∇∘(id⊗∇)` as relations `X⊗X⊗X ⇸ X`.
pub fn associativity(n: usize, nabla: &Rel) -> Verdict {
    let id = Rel::identity(n);
    let left = compose(&nabla.tensor(&id), nabla);
    let right = compose(&id.tensor(nabla), nabla);
    compare_rows(&left, &right, |a| vec![a / (n * n), (a / n) % n, a % n])
}

/// `∇∘(⊥⊗id) = id` and `∇∘(id⊗⊥) = id`.
pub fn unit_laws(n: usize, nabla: &Rel, bot: &Rel) -> (Verdict, Verdict) {
    let id = Rel::identity(n);
    let left = compose(&bot.tensor(&id), nabla);
    let right = compose(&id.tensor(bot), nabla);
    (
        compare_rows(&left, &id, |x| vec![x]),
        compare_rows(&right, &id, |x| vec![x]),
    )
}

/// Coassociativity and both counit laws for an arbitrary comonoid
/// `(Δ, ⊤)` on a carrier of size `n`.
pub fn comonoid_laws(n: usize, delta: &Rel, top: &Rel) -> bool {
    let id = Rel::identity(n);
    let coassoc = compose(delta, &delta.tensor(&id)) == compose(delta, &id.tensor(delta));
    let left = compose(delta, &top.tensor(&id)) == id;
    let right = compose(delta, &id.tensor(top)) == id;
    coassoc && left && right
}

/// `∇∘swap = ∇`.
pub fn commutativity(n: usize, nabla: &Rel) -> Verdict {
    let swapped = compose(&Rel::swap(n, n), nabla);
    compare_rows(&swapped, nabla, |p| {
        let (i, j) = unpair(p, n);
        vec![i, j]
    })
}

/// `∇∘Δ = id`.
pub fn special_law(n: usize, nabla: &Rel, delta: &Rel) -> Verdict {
    compare_rows(&compose(delta, nabla), &Rel::identity(n), |x| vec![x])
}

/// `(∇⊗id)∘(id⊗Δ) = Δ∘∇ = (id⊗∇)∘(Δ⊗id)`, for an arbitrary comultiplication.
///
/// At row `(i, j)` the middle composite is the set of pairs whose product
/// meets `i∇j`; the outer composites are the two rewirings. The witness
/// reports the middle set on the left and the first disagreeing rewiring
/// (the `(id⊗∇)∘(Δ⊗id)` side is compared first) on the right.
pub fn frobenius_law(n: usize, nabla: &Rel, delta: &Rel) -> Verdict {
    let id = Rel::identity(n);
    let middle = compose(nabla, delta);
    let via_left = compose(&delta.tensor(&id), &id.tensor(nabla));
    let via_right = compose(&id.tensor(delta), &nabla.tensor(&id));
    let mut witnesses = Vec::new();
    for p in 0..n * n {
        let m = row_pairs(&middle, p, n);
        let l = row_pairs(&via_left, p, n);
        let r = row_pairs(&via_right, p, n);
        let other = if l != m {
            l
        } else if r != m {
            r
        } else {
            continue;
        };
        witnesses.push(Witness::Pairs {
            at: unpair(p, n),
            left: m,
            right: other,
        });
    }
    Verdict::from_witnesses(witnesses)
}

/// Pointwise Frobenius check on the multiplication table.
///
/// For every `i, j` compares
/// `{(x,y) | x∇y meets i∇j}`,
/// `{(x, z) | i ∈ x∇y', z ∈ y'∇j}` and
/// `{(z, y) | j ∈ x'∇y, z ∈ i∇x'}`.
/// When `∇` is single-valued these are the three sets
/// `{(x,y) | x∇y = i∇j}`, `{(x, y'∇j) | i = x∇y'}`, `{(i∇x', y) | j = x'∇y}`,
/// with undefined products contributing nothing.
pub fn frobenius_pointwise(c: &FrobeniusCandidate) -> Verdict {
    let n = c.n;
    let table: Vec<Vec<usize>> = (0..n * n).map(|p| c.nabla.row(p).collect()).collect();
    let prod = |x: usize, y: usize| &table[pair_index(x, y, n)];
    let mut witnesses = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let ij = prod(i, j);
            let mut middle = Vec::new();
            for x in 0..n {
                for y in 0..n {
                    if prod(x, y).iter().any(|z| ij.contains(z)) {
                        middle.push((x, y));
                    }
                }
            }
            let mut second = Vec::new();
            for x in 0..n {
                for yp in 0..n {
                    if prod(x, yp).contains(&i) {
                        second.extend(prod(yp, j).iter().map(|&z| (x, z)));
                    }
                }
            }
            let mut third = Vec::new();
            for xp in 0..n {
                for y in 0..n {
                    if prod(xp, y).contains(&j) {
                        third.extend(prod(i, xp).iter().map(|&z| (z, y)));
                    }
                }
            }
            for s in [&mut second, &mut third] {
                s.sort_unstable();
                s.dedup();
            }
            let other = if second != middle {
                second
            } else if third != middle {
                third
            } else {
                continue;
            };
            witnesses.push(Witness::Pairs {
                at: (i, j),
                left: middle,
                right: other,
            });
        }
    }
    Verdict::from_witnesses(witnesses)
}

/// Pointwise Frobenius check for candidates whose multiplication is a
/// partial operation, as required by the special law.
pub fn check_fro_pointwise(c: &FrobeniusCandidate) -> Result<Verdict> {
    let n = c.n;
    let mut reached = vec![false; n];
    for u in 0..n {
        for v in 0..n {
            let mut it = c.products(u, v);
            if let Some(z) = it.next() {
                if it.next().is_some() {
                    return Err(Error::NotSingleValued { u, v });
                }
                reached[z] = true;
            }
        }
    }
    if let Some(x) = reached.iter().position(|&r| !r) {
        return Err(Error::NotSurjective { x });
    }
    Ok(frobenius_pointwise(c))
}

/// Evaluates every axiom of a classical structure on the candidate.
pub fn verify_structure(c: &FrobeniusCandidate) -> AxiomReport {
    let n = c.n;
    let delta = c.delta();
    let (left_unit, right_unit) = unit_laws(n, &c.nabla, &c.bot_rel());
    AxiomReport {
        n,
        empty_carrier: n == 0,
        associativity: associativity(n, &c.nabla),
        left_unit,
        right_unit,
        commutativity: commutativity(n, &c.nabla),
        special: special_law(n, &c.nabla, &delta),
        frobenius: frobenius_law(n, &c.nabla, &delta),
        frobenius_pointwise: frobenius_pointwise(c),
    }
}

/// Whether `(X, ∇, Δ, ⊥, ⊤)` is a special Frobenius algebra for an
/// arbitrary comonoid `(Δ, ⊤)`, not necessarily the converse of the monoid.
pub fn is_special_frobenius_with(c: &FrobeniusCandidate, delta: &Rel, top: &Rel) -> bool {
    let n = c.n;
    if delta.shape() != (n, n * n) || top.shape() != (n, 1) {
        return false;
    }
    let (l, r) = unit_laws(n, &c.nabla, &c.bot_rel());
    associativity(n, &c.nabla).passed()
        && l.passed()
        && r.passed()
        && comonoid_laws(n, delta, top)
        && special_law(n, &c.nabla, delta).passed()
        && frobenius_law(n, &c.nabla, delta).passed()
}
