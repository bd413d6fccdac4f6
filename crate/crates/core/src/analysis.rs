//! Derived structure of a classical structure: classical elements, the
//! induced quantum structure, the Cayley-style representation `Υ` with its
//! involution, decomposition into groups, and comonoid subobjects.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::{CayleyTable, GroupSpec, StructureSpec};
use crate::rel::{pair_index, unpair, Rel, Vector};
use crate::structures::{verify_structure, FrobeniusCandidate, Verdict, Witness};

/// Largest carrier for the brute-force subset search in
/// [`classical_elements`].
pub const ELEMENTS_LIMIT: usize = 20;
/// Largest `m·n` for which [`comonoid_subobjects`] enumerates relations.
pub const SUBOBJECT_BITS_LIMIT: usize = 24;

/// A self-duality `(η, η‡) : X ⊣ X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumStructure {
    n: usize,
    eta: Rel,
}

impl QuantumStructure {
    pub fn new(n: usize, eta: Rel) -> Result<Self> {
        if eta.shape() != (1, n * n) {
            return Err(Error::ShapeMismatch {
                left: eta.shape(),
                right: (1, n * n),
            });
        }
        Ok(QuantumStructure { n, eta })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The copairing `η : I ⇸ X ⊗ X`.
    pub fn eta(&self) -> &Rel {
        &self.eta
    }

    /// The pairing `ε = η‡ : X ⊗ X ⇸ I`.
    pub fn epsilon(&self) -> Rel {
        self.eta.converse()
    }

    /// The pairs `(a, b)` related to the point of `I`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.eta.row(0).map(|p| unpair(p, self.n)).collect()
    }
}

/// `η = Δ∘⊥`: relates the point to `(a, b)` iff `a∇b ∈ ⊥`.
pub fn quantum_structure(c: &FrobeniusCandidate) -> QuantumStructure {
    let eta = c
        .bot_rel()
        .compose(&c.delta())
        .expect("unit and comultiplication compose");
    QuantumStructure { n: c.n(), eta }
}

/// Both snake equations `(ε⊗X)(X⊗η) = X` and `(X⊗ε)(η⊗X) = X`.
///
/// Witnesses are located at `[0, x]` for the first equation and `[1, x]`
/// for the second.
pub fn check_duality(q: &QuantumStructure) -> Verdict {
    let n = q.n;
    let id = Rel::identity(n);
    let eps = q.epsilon();
    // X ≅ X ⊗ I and I ⊗ X ≅ X are identities on flattened indices
    let first = id.tensor(&q.eta).compose(&eps.tensor(&id)).expect("snake");
    let second = q.eta.tensor(&id).compose(&id.tensor(&eps)).expect("snake");
    let mut witnesses = Vec::new();
    for (tag, snake) in [(0, &first), (1, &second)] {
        for x in snake.row_differences(&id) {
            witnesses.push(Witness::Elements {
                at: vec![tag, x],
                left: snake.row(x).collect(),
                right: vec![x],
            });
        }
    }
    if witnesses.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail(witnesses)
    }
}

/// All vectors `φ` with `Δφ = φ⊗φ` and `⊤φ = id_I`, by exhausting subsets.
pub fn classical_elements(c: &FrobeniusCandidate) -> Result<Vec<Vector>> {
    let n = c.n();
    if n > ELEMENTS_LIMIT {
        return Err(Error::TooLarge {
            what: "carrier size for classical element search",
            limit: ELEMENTS_LIMIT,
            got: n,
        });
    }
    let delta = c.delta();
    let top = c.top();
    let point = Rel::identity(1);
    let mut out = Vec::new();
    for mask in 0usize..(1 << n) {
        let phi: Vector = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let v = phi.to_rel(n)?;
        if v.compose(&delta)? == v.tensor(&v) && v.compose(&top)? == point {
            out.push(phi);
        }
    }
    out.sort();
    Ok(out)
}

/// `Υφ = ∇∘(φ⊗id)`: `(x, z) ∈ Υφ` iff `z ∈ a∇x` for some `a ∈ φ`.
pub fn represent(c: &FrobeniusCandidate, phi: &Vector) -> Result<Rel> {
    let n = c.n();
    phi.to_rel(n)?.tensor(&Rel::identity(n)).compose(c.nabla())
}

/// Both `r` and its converse are single-valued.
pub fn is_partial_bijection(r: &Rel) -> bool {
    r.is_single_valued() && r.converse().is_single_valued()
}

/// The involution `φ⋆ = (φ‡⊗X)∘η`.
pub fn star(c: &FrobeniusCandidate, phi: &Vector) -> Result<Vector> {
    let n = c.n();
    let eta = quantum_structure(c).eta;
    let along = phi.to_rel(n)?.converse().tensor(&Rel::identity(n));
    Vector::from_rel(&eta.compose(&along)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub elements: Vector,
    pub unit: usize,
    pub group: GroupSpec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionResult {
    pub blocks: Vec<Block>,
    pub spec: StructureSpec,
}

/// Splits a special Frobenius algebra into its groups.
///
/// Each unit element `u ∈ ⊥` acts by `Υ{u}` as the identity on its block;
/// the blocks must partition the carrier and `∇` restricted to each block
/// must be a total group operation. A failure of either is a violation of
/// the classification theorem and is reported as such.
pub fn decompose(c: &FrobeniusCandidate) -> Result<DecompositionResult> {
    let report = verify_structure(c);
    if !report.is_special_frobenius() {
        return Err(Error::NotSpecialFrobenius {
            failed: report.failed_axioms().join(", "),
        });
    }
    let n = c.n();
    let mut owner = vec![None; n];
    let mut blocks = Vec::new();
    for u in c.bot().iter() {
        let action = represent(c, &Vector::singleton(u))?;
        let elements: Vector = (0..n).filter(|&x| action.row_len(x) > 0).collect();
        if let Some(x) = elements
            .iter()
            .find(|&x| !action.contains(x, x) || action.row_len(x) != 1)
        {
            return Err(Error::TheoremViolation(format!(
                "unit {u} does not act as the identity at {x}"
            )));
        }
        for x in elements.iter() {
            if let Some(v) = owner[x].replace(u) {
                return Err(Error::TheoremViolation(format!(
                    "element {x} lies in the blocks of units {v} and {u}"
                )));
            }
        }
        let local: Vec<usize> = elements.iter().collect();
        let index_of = |z: usize| local.iter().position(|&e| e == z);
        let mut table = Vec::with_capacity(local.len() * local.len());
        for &x in &local {
            for &y in &local {
                let z = c.product(x, y).and_then(index_of).ok_or_else(|| {
                    Error::TheoremViolation(format!(
                        "product {x}·{y} is not a single element of the block of {u}"
                    ))
                })?;
                table.push(z);
            }
        }
        let table = CayleyTable::new(local.len(), table).map_err(|e| {
            Error::TheoremViolation(format!("block of unit {u} is not a group: {e}"))
        })?;
        blocks.push(Block {
            elements,
            unit: u,
            group: GroupSpec::from_table(table),
        });
    }
    if let Some(x) = owner.iter().position(Option::is_none) {
        return Err(Error::TheoremViolation(format!(
            "element {x} lies in no block"
        )));
    }
    let spec = StructureSpec::new(blocks.iter().map(|b| b.group.clone()).collect());
    Ok(DecompositionResult { blocks, spec })
}

/// The standard comonoid on `m`: `Δ(i) = {ii}`, `⊤(i) = 0`.
fn standard_comonoid(m: usize) -> (Rel, Rel) {
    let mut delta = Rel::empty(m, m * m);
    for i in 0..m {
        delta.insert(i, pair_index(i, i, m));
    }
    (delta, Rel::full(m, 1))
}

/// All monomorphisms `R : m ⇸ X` that are comonoid homomorphisms from the
/// standard comonoid on `m`: `Δ_X∘R = (R⊗R)∘Δ_m` and `⊤_X∘R = ⊤_m`.
pub fn comonoid_subobjects(c: &FrobeniusCandidate, m: usize) -> Result<Vec<Rel>> {
    let n = c.n();
    if m > 2 {
        return Err(Error::TooLarge {
            what: "subobject domain size",
            limit: 2,
            got: m,
        });
    }
    let bits = m * n;
    if bits > SUBOBJECT_BITS_LIMIT {
        return Err(Error::TooLarge {
            what: "relation bits for subobject search",
            limit: SUBOBJECT_BITS_LIMIT,
            got: bits,
        });
    }
    let delta = c.delta();
    let top = c.top();
    let (delta_m, top_m) = standard_comonoid(m);
    let mut out = Vec::new();
    for mask in 0u64..(1 << bits) {
        let r = Rel::from_pairs(
            m,
            n,
            (0..bits)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| (b / n.max(1), b % n.max(1))),
        )?;
        if r.compose(&delta)? == delta_m.compose(&r.tensor(&r))?
            && r.compose(&top)? == top_m
            && r.is_mono()?
        {
            out.push(r);
        }
    }
    Ok(out)
}
