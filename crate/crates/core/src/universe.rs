//! Q-valued universe elements of bounded rank: atomic truth values by
//! rank recursion, check-embedding of hereditarily finite sets, support,
//! restriction, commutators of elements, and the transfer/restriction
//! principle checks.
//!
//! A [`QSet`] is a finite map from lower-rank elements to projections.
//! Identity is object identity (shared handles), which is what the memo
//! tables key on; two structurally equal elements built separately are
//! distinct domain points.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::formula::{evaluate, Formula};
use crate::lattice::{
    commutator_takeuti, commutes, conditional, join, leq, meet, subspace_equal, ConditionalKind,
    Projection,
};
use crate::linalg::Tolerance;

/// Maximum rank of a constructible element.
pub const RANK_BUDGET: u32 = 12;
/// Maximum number of entries of a single element.
pub const ENTRY_BUDGET: usize = 64;

struct QSetInner {
    dim: usize,
    rank: u32,
    entries: Vec<(QSet, Projection)>,
}

/// An element of the Q-valued universe: children with projection weights.
#[derive(Clone)]
pub struct QSet {
    inner: Arc<QSetInner>,
}

impl std::fmt::Debug for QSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "QSet(dim={}, rank={}, entries={})",
            self.dim(),
            self.rank(),
            self.entries().len()
        )
    }
}

impl QSet {
    /// Build an element from `(child, weight)` entries.
    ///
    /// Enforces the ambient dimension, the rank and entry budgets, and
    /// pairwise-distinct children (by identity).
    pub fn new(dim: usize, entries: Vec<(QSet, Projection)>) -> Result<Self> {
        if entries.len() > ENTRY_BUDGET {
            return Err(Error::EntryBudgetExceeded {
                len: entries.len(),
                max: ENTRY_BUDGET,
            });
        }
        let mut rank = 0u32;
        let mut seen = BTreeSet::new();
        for (child, weight) in &entries {
            if child.dim() != dim {
                return Err(Error::DimMismatch {
                    left: child.dim(),
                    right: dim,
                });
            }
            if weight.dim() != dim {
                return Err(Error::DimMismatch {
                    left: weight.dim(),
                    right: dim,
                });
            }
            if !seen.insert(child.id()) {
                return Err(Error::InvalidInput(
                    "duplicate child in QSet entries".to_string(),
                ));
            }
            rank = rank.max(child.rank() + 1);
        }
        if rank > RANK_BUDGET {
            return Err(Error::RankBudgetExceeded {
                rank,
                max: RANK_BUDGET,
            });
        }
        Ok(QSet {
            inner: Arc::new(QSetInner { dim, rank, entries }),
        })
    }

    /// The empty element (rank 0).
    pub fn empty(dim: usize) -> Self {
        QSet {
            inner: Arc::new(QSetInner {
                dim,
                rank: 0,
                entries: Vec::new(),
            }),
        }
    }

    pub fn dim(&self) -> usize {
        self.inner.dim
    }

    pub fn rank(&self) -> u32 {
        self.inner.rank
    }

    pub fn entries(&self) -> &[(QSet, Projection)] {
        &self.inner.entries
    }

    /// Stable identity of the underlying allocation.
    pub fn id(&self) -> usize {
        Arc::as_ptr(&self.inner) as usize
    }

    pub fn same_object(&self, other: &QSet) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }

    /// Support: weights of this element and, recursively, of every
    /// reachable child, deduplicated by subspace equality.
    pub fn support(&self, tol: &Tolerance) -> Vec<Projection> {
        let mut out: Vec<Projection> = Vec::new();
        let mut visited = BTreeSet::new();
        let mut stack = vec![self.clone()];
        while let Some(u) = stack.pop() {
            if !visited.insert(u.id()) {
                continue;
            }
            for (child, weight) in u.entries() {
                let dup = out
                    .iter()
                    .any(|p| subspace_equal(p, weight, tol).unwrap_or(false));
                if !dup {
                    out.push(weight.clone());
                }
                stack.push(child.clone());
            }
        }
        out
    }

    /// Restriction `u|_p`: weights are met with `p`, children restricted
    /// recursively. Shared children stay shared.
    pub fn restrict(&self, p: &Projection, tol: &Tolerance) -> Result<QSet> {
        if p.dim() != self.dim() {
            return Err(Error::DimMismatch {
                left: p.dim(),
                right: self.dim(),
            });
        }
        let mut memo: HashMap<usize, QSet> = HashMap::new();
        self.restrict_memo(p, tol, &mut memo)
    }

    fn restrict_memo(
        &self,
        p: &Projection,
        tol: &Tolerance,
        memo: &mut HashMap<usize, QSet>,
    ) -> Result<QSet> {
        if let Some(done) = memo.get(&self.id()) {
            return Ok(done.clone());
        }
        let mut entries = Vec::with_capacity(self.entries().len());
        for (child, weight) in self.entries() {
            let rchild = child.restrict_memo(p, tol, memo)?;
            let rweight = meet(weight, p, tol)?;
            entries.push((rchild, rweight));
        }
        let out = QSet::new(self.dim(), entries)?;
        memo.insert(self.id(), out.clone());
        Ok(out)
    }
}

/// A hereditarily finite set literal, the input shape of check-embedding.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HfSet(BTreeSet<HfSet>);

impl HfSet {
    pub fn empty() -> Self {
        HfSet(BTreeSet::new())
    }

    pub fn from_elements(elements: impl IntoIterator<Item = HfSet>) -> Self {
        HfSet(elements.into_iter().collect())
    }

    /// The von Neumann natural `n = {0, 1, ..., n−1}`.
    pub fn nat(n: usize) -> Self {
        let mut acc = HfSet::empty();
        let mut elems = BTreeSet::new();
        for _ in 0..n {
            elems.insert(acc.clone());
            acc = HfSet(elems.clone());
        }
        acc
    }

    /// The `n`-th set in the Ackermann coding: element `i` is present
    /// exactly when bit `i` of `n` is set. Injective, and the rank grows
    /// like the iterated logarithm (rank ≤ 4 covers indices below
    /// 2^16), so large index families stay far inside the rank budget.
    pub fn ackermann(n: usize) -> Self {
        let mut elements = BTreeSet::new();
        let mut bits = n;
        let mut i = 0;
        while bits != 0 {
            if bits & 1 == 1 {
                elements.insert(HfSet::ackermann(i));
            }
            bits >>= 1;
            i += 1;
        }
        HfSet(elements)
    }

    pub fn elements(&self) -> impl Iterator<Item = &HfSet> {
        self.0.iter()
    }

    pub fn contains(&self, other: &HfSet) -> bool {
        self.0.contains(other)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }
}

/// Shared-structure check-embedding builder. Repeated embeddings of the
/// same literal return the same object, which keeps memo tables warm.
pub struct CheckEmbedder {
    dim: usize,
    cache: BTreeMap<HfSet, QSet>,
}

impl CheckEmbedder {
    pub fn new(dim: usize) -> Self {
        CheckEmbedder {
            dim,
            cache: BTreeMap::new(),
        }
    }

    pub fn embed(&mut self, v: &HfSet) -> Result<QSet> {
        if let Some(done) = self.cache.get(v) {
            return Ok(done.clone());
        }
        let mut entries = Vec::with_capacity(v.len());
        for child in v.elements() {
            let embedded = self.embed(child)?;
            entries.push((embedded, Projection::identity(self.dim)));
        }
        let out = QSet::new(self.dim, entries)?;
        self.cache.insert(v.clone(), out.clone());
        Ok(out)
    }
}

/// Check-embedding `v̌`: the copy of an ordinary set with all weights 1.
pub fn check_embed(v: &HfSet, dim: usize) -> Result<QSet> {
    CheckEmbedder::new(dim).embed(v)
}

/// Rank-recursive evaluator for the atomic truth values, with a memo
/// table keyed on (identity, identity, conditional kind).
pub struct TruthEvaluator {
    tol: Tolerance,
    memo_equal: HashMap<(usize, usize, u8), Projection>,
    memo_member: HashMap<(usize, usize, u8), Projection>,
}

fn kind_tag(j: ConditionalKind) -> u8 {
    match j {
        ConditionalKind::Sasaki => 0,
        ConditionalKind::Contrapositive => 1,
        ConditionalKind::Relevance => 2,
    }
}

impl TruthEvaluator {
    pub fn new(tol: Tolerance) -> Self {
        TruthEvaluator {
            tol,
            memo_equal: HashMap::new(),
            memo_member: HashMap::new(),
        }
    }

    pub fn tolerance(&self) -> &Tolerance {
        &self.tol
    }

    /// `[[u = v]]_j`: the meet over both domains of
    /// `weight →_j [[child ∈ other]]`.
    pub fn equal(&mut self, u: &QSet, v: &QSet, j: ConditionalKind) -> Result<Projection> {
        if u.dim() != v.dim() {
            return Err(Error::DimMismatch {
                left: u.dim(),
                right: v.dim(),
            });
        }
        // The rule is symmetric in (u, v); normalize the key.
        let key = (u.id().min(v.id()), u.id().max(v.id()), kind_tag(j));
        if let Some(p) = self.memo_equal.get(&key) {
            return Ok(p.clone());
        }
        let tol = self.tol;
        let mut acc = Projection::identity(u.dim());
        for (child, weight) in u.entries() {
            let member = self.member(child, v, j)?;
            let cond = conditional(j, weight, &member, &tol)?;
            acc = meet(&acc, &cond, &tol)?;
        }
        for (child, weight) in v.entries() {
            let member = self.member(child, u, j)?;
            let cond = conditional(j, weight, &member, &tol)?;
            acc = meet(&acc, &cond, &tol)?;
        }
        self.memo_equal.insert(key, acc.clone());
        Ok(acc)
    }

    /// `[[u ∈ v]]_j`: the join over the domain of `v` of
    /// `weight ∧ [[u = child]]`.
    pub fn member(&mut self, u: &QSet, v: &QSet, j: ConditionalKind) -> Result<Projection> {
        if u.dim() != v.dim() {
            return Err(Error::DimMismatch {
                left: u.dim(),
                right: v.dim(),
            });
        }
        let key = (u.id(), v.id(), kind_tag(j));
        if let Some(p) = self.memo_member.get(&key) {
            return Ok(p.clone());
        }
        let tol = self.tol;
        let mut acc = Projection::zero(u.dim());
        for (child, weight) in v.entries() {
            let eq = self.equal(u, child, j)?;
            let term = meet(weight, &eq, &tol)?;
            acc = join(&acc, &term, &tol)?;
        }
        self.memo_member.insert(key, acc.clone());
        Ok(acc)
    }
}

/// One-shot `[[u = v]]_j`.
pub fn truth_equal(u: &QSet, v: &QSet, j: ConditionalKind, tol: &Tolerance) -> Result<Projection> {
    TruthEvaluator::new(*tol).equal(u, v, j)
}

/// One-shot `[[u ∈ v]]_j`.
pub fn truth_member(u: &QSet, v: &QSet, j: ConditionalKind, tol: &Tolerance) -> Result<Projection> {
    TruthEvaluator::new(*tol).member(u, v, j)
}

/// Commutator of a family of elements: the triple-product commutator of
/// the union of their supports. A family with empty support commutes
/// trivially and yields the identity.
pub fn commutator_universe(elements: &[QSet], tol: &Tolerance) -> Result<Projection> {
    let first = elements.first().ok_or(Error::EmptyFamily)?;
    let dim = first.dim();
    let mut family: Vec<Projection> = Vec::new();
    for u in elements {
        if u.dim() != dim {
            return Err(Error::DimMismatch {
                left: u.dim(),
                right: dim,
            });
        }
        for p in u.support(tol) {
            let dup = family
                .iter()
                .any(|q| subspace_equal(&p, q, tol).unwrap_or(false));
            if !dup {
                family.push(p);
            }
        }
    }
    if family.is_empty() {
        return Ok(Projection::identity(dim));
    }
    commutator_takeuti(&family, tol)
}

/// Named bindings used both as a parser registry and an evaluation
/// environment.
pub type Registry = BTreeMap<String, QSet>;

/// Result of a transfer-principle check: the commutator of the bound
/// elements, the truth value of the formula, and whether the commutator
/// lies below the truth value.
#[derive(Debug, Clone)]
pub struct TransferOutcome {
    pub commutator: Projection,
    pub truth_value: Projection,
    pub holds: bool,
}

/// Evaluate `⌣(u1,…,un) ≤ [[φ(u1,…,un)]]_j` for the bound elements.
pub fn transfer_check(
    phi: &Formula,
    bindings: &Registry,
    j: ConditionalKind,
    tol: &Tolerance,
) -> Result<TransferOutcome> {
    let elements: Vec<QSet> = bindings.values().cloned().collect();
    let commutator = commutator_universe(&elements, tol)?;
    let truth_value = evaluate(phi, j, bindings, tol)?.value;
    let holds = leq(&commutator, &truth_value, tol)?;
    Ok(TransferOutcome {
        commutator,
        truth_value,
        holds,
    })
}

/// Check the restriction identity
/// `[[φ(u1,…,un)]] ∧ p = [[φ(u1|_p,…,un|_p)]] ∧ p`.
///
/// Requires `p` to commute with every element of every support.
pub fn restriction_check(
    phi: &Formula,
    bindings: &Registry,
    p: &Projection,
    j: ConditionalKind,
    tol: &Tolerance,
) -> Result<bool> {
    for (name, u) in bindings {
        for s in u.support(tol) {
            if !commutes(p, &s, tol)? {
                return Err(Error::PreconditionViolated(format!(
                    "restriction projection does not commute with the support of `{name}`"
                )));
            }
        }
    }
    let lhs = {
        let tv = evaluate(phi, j, bindings, tol)?.value;
        meet(&tv, p, tol)?
    };
    let rhs = {
        let mut restricted = Registry::new();
        for (name, u) in bindings {
            restricted.insert(name.clone(), u.restrict(p, tol)?);
        }
        let tv = evaluate(phi, j, &restricted, tol)?.value;
        meet(&tv, p, tol)?
    };
    subspace_equal(&lhs, &rhs, tol)
}

/// A named, provable bounded formula with its parameter list.
#[derive(Debug, Clone, Copy)]
pub struct CorpusFormula {
    pub name: &'static str,
    pub text: &'static str,
    pub params: &'static [&'static str],
}

/// Curated bounded formulas provable in classical set theory, used to
/// exercise the transfer principle. Parameters are free names bound at
/// evaluation time.
pub const ZFC_DELTA0_CORPUS: &[CorpusFormula] = &[
    CorpusFormula {
        name: "refl_eq",
        text: "u = u",
        params: &["u"],
    },
    CorpusFormula {
        name: "symm_eq",
        text: "u = v -> v = u",
        params: &["u", "v"],
    },
    CorpusFormula {
        name: "subset_refl",
        text: "u subseteq u",
        params: &["u"],
    },
    CorpusFormula {
        name: "subset_trans",
        text: "(u subseteq v /\\ v subseteq w) -> u subseteq w",
        params: &["u", "v", "w"],
    },
    CorpusFormula {
        name: "member_split",
        text: "z in x <-> ((z in x /\\ z in y) \\/ (z in x /\\ ~(z in y)))",
        params: &["z", "x", "y"],
    },
    CorpusFormula {
        name: "eq_gives_mutual_subset",
        text: "u = v -> (u subseteq v /\\ v subseteq u)",
        params: &["u", "v"],
    },
    CorpusFormula {
        name: "member_or_intro",
        text: "z in x -> (z in x \\/ z in y)",
        params: &["z", "x", "y"],
    },
    CorpusFormula {
        name: "member_and_elim",
        text: "(z in x /\\ z in y) -> z in x",
        params: &["z", "x", "y"],
    },
    CorpusFormula {
        name: "excluded_middle",
        text: "z in x \\/ ~(z in x)",
        params: &["z", "x"],
    },
    CorpusFormula {
        name: "exists_witness",
        text: "z in u -> exists x in u (x = z)",
        params: &["z", "u"],
    },
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;
    use crate::lattice::{ortho, subspace_equal};
    use crate::linalg::{Complex64, StateVector};

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn plus(dim: usize) -> Projection {
        let mut amps = vec![Complex64::new(0.0, 0.0); dim];
        amps[0] = Complex64::new(1.0, 0.0);
        amps[1] = Complex64::new(1.0, 0.0);
        Projection::onto_state(&StateVector::normalized(amps).unwrap())
    }

    #[test]
    fn ackermann_coding_is_injective_and_flat() {
        let mut seen = std::collections::BTreeSet::new();
        for n in 0..64usize {
            assert!(seen.insert(HfSet::ackermann(n)), "collision at {n}");
        }
        assert_eq!(HfSet::ackermann(0), HfSet::nat(0));
        assert_eq!(HfSet::ackermann(1), HfSet::nat(1));
        assert_eq!(HfSet::ackermann(3), HfSet::nat(2));
        // Rank stays tiny: embedding the code of a large index succeeds
        // where a same-length chain of naturals would not.
        let big = check_embed(&HfSet::ackermann(40_000), 2).unwrap();
        assert!(big.rank() <= 4);
    }

    #[test]
    fn check_embed_shapes() {
        let zero = check_embed(&HfSet::empty(), 2).unwrap();
        assert_eq!(zero.rank(), 0);
        assert!(zero.entries().is_empty());

        let one = check_embed(&HfSet::nat(1), 2).unwrap();
        assert_eq!(one.rank(), 1);
        assert_eq!(one.entries().len(), 1);
        assert!(one.entries()[0].1.is_identity(&tol()));
    }

    #[test]
    fn check_embed_atomic_truth() {
        let t = tol();
        for dim in [2usize, 3] {
            let mut emb = CheckEmbedder::new(dim);
            let zero = emb.embed(&HfSet::nat(0)).unwrap();
            let one = emb.embed(&HfSet::nat(1)).unwrap();
            for j in ConditionalKind::ALL {
                assert!(truth_member(&zero, &one, j, &t).unwrap().is_identity(&t));
                assert!(truth_equal(&zero, &one, j, &t).unwrap().is_zero(&t));
            }
        }
    }

    #[test]
    fn truth_equal_reflexive_and_symmetric() {
        let t = tol();
        let p = Projection::from_bits(&[true, false]);
        let child = QSet::empty(2);
        let u = QSet::new(2, vec![(child.clone(), p)]).unwrap();
        let v = QSet::new(2, vec![(child, plus(2))]).unwrap();
        for j in ConditionalKind::ALL {
            assert!(truth_equal(&u, &u, j, &t).unwrap().is_identity(&t));
            let uv = truth_equal(&u, &v, j, &t).unwrap();
            let vu = truth_equal(&v, &u, j, &t).unwrap();
            assert!(subspace_equal(&uv, &vu, &t).unwrap());
        }
    }

    #[test]
    fn truth_member_edges() {
        let t = tol();
        let empty = QSet::empty(2);
        let zero_check = check_embed(&HfSet::nat(0), 2).unwrap();
        for j in ConditionalKind::ALL {
            // Nothing is a member of the empty element.
            assert!(truth_member(&zero_check, &empty, j, &t)
                .unwrap()
                .is_zero(&t));
        }
        // Weight shaping: v = {(0̌, P)} gives [[0̌ ∈ v]] = P.
        let p = plus(2);
        let v = QSet::new(2, vec![(zero_check.clone(), p.clone())]).unwrap();
        for j in ConditionalKind::ALL {
            let m = truth_member(&zero_check, &v, j, &t).unwrap();
            assert!(subspace_equal(&m, &p, &t).unwrap());
        }
    }

    #[test]
    fn support_and_restrict() {
        let t = tol();
        let zero = check_embed(&HfSet::nat(0), 2).unwrap();
        assert!(zero.support(&t).is_empty());

        let two = check_embed(&HfSet::nat(2), 2).unwrap();
        let sup = two.support(&t);
        assert_eq!(sup.len(), 1);
        assert!(sup[0].is_identity(&t));

        let p = Projection::from_bits(&[true, false]);
        let u = QSet::new(2, vec![(zero.clone(), plus(2))]).unwrap();
        let restricted = u.restrict(&p, &t).unwrap();
        // Support of the restriction is the support met with p.
        let rsup = restricted.support(&t);
        assert_eq!(rsup.len(), 1);
        let expect = meet(&plus(2), &p, &t).unwrap();
        assert!(subspace_equal(&rsup[0], &expect, &t).unwrap());

        // Restricting by the identity keeps weights; by zero kills them.
        let full = u.restrict(&Projection::identity(2), &t).unwrap();
        assert!(subspace_equal(&full.entries()[0].1, &plus(2), &t).unwrap());
        let dead = u.restrict(&Projection::zero(2), &t).unwrap();
        assert!(dead.entries()[0].1.is_zero(&t));
    }

    #[test]
    fn restrict_composes_as_meet() {
        let t = tol();
        let zero = check_embed(&HfSet::nat(0), 2).unwrap();
        let u = QSet::new(2, vec![(zero, plus(2))]).unwrap();
        let p = Projection::from_bits(&[true, false]);
        let q = plus(2);
        let twice = u.restrict(&p, &t).unwrap().restrict(&q, &t).unwrap();
        let once = u.restrict(&meet(&p, &q, &t).unwrap(), &t).unwrap();
        fn weights_match(a: &QSet, b: &QSet, t: &Tolerance) -> bool {
            a.entries().len() == b.entries().len()
                && a.entries().iter().zip(b.entries().iter()).all(|(x, y)| {
                    subspace_equal(&x.1, &y.1, t).unwrap() && weights_match(&x.0, &y.0, t)
                })
        }
        assert!(weights_match(&twice, &once, &t));
    }

    #[test]
    fn commutator_universe_cases() {
        let t = tol();
        let checks: Vec<QSet> = (0..3)
            .map(|n| check_embed(&HfSet::nat(n), 2).unwrap())
            .collect();
        assert!(commutator_universe(&checks, &t).unwrap().is_identity(&t));

        let zero = check_embed(&HfSet::nat(0), 2).unwrap();
        let u = QSet::new(
            2,
            vec![(zero.clone(), Projection::from_bits(&[true, false]))],
        )
        .unwrap();
        let v = QSet::new(2, vec![(zero, plus(2))]).unwrap();
        assert!(commutator_universe(&[u, v], &t).unwrap().is_zero(&t));
    }

    #[test]
    fn budgets_enforced() {
        let deep = (0..=RANK_BUDGET).try_fold(QSet::empty(1), |acc, _| {
            QSet::new(1, vec![(acc, Projection::identity(1))])
        });
        assert!(matches!(deep, Err(Error::RankBudgetExceeded { .. })));

        let children: Vec<(QSet, Projection)> = (0..=ENTRY_BUDGET)
            .map(|_| (QSet::empty(1), Projection::identity(1)))
            .collect();
        assert!(matches!(
            QSet::new(1, children),
            Err(Error::EntryBudgetExceeded { .. })
        ));
    }

    #[test]
    fn transfer_and_restriction_on_reflexivity() {
        let t = tol();
        let zero = check_embed(&HfSet::nat(0), 2).unwrap();
        let u = QSet::new(2, vec![(zero, plus(2))]).unwrap();
        let mut env = Registry::new();
        env.insert("u".to_string(), u);
        let phi = parse("u = u", &env).unwrap();
        for j in ConditionalKind::ALL {
            let out = transfer_check(&phi, &env, j, &t).unwrap();
            assert!(out.holds);
            assert!(out.truth_value.is_identity(&t));
        }
        // p = I and p = 0 trivially satisfy the restriction identity.
        for p in [Projection::identity(2), Projection::zero(2)] {
            for j in ConditionalKind::ALL {
                assert!(restriction_check(&phi, &env, &p, j, &t).unwrap());
            }
        }
    }

    #[test]
    fn restriction_precondition_enforced() {
        let t = tol();
        let zero = check_embed(&HfSet::nat(0), 2).unwrap();
        let u = QSet::new(2, vec![(zero, plus(2))]).unwrap();
        let mut env = Registry::new();
        env.insert("u".to_string(), u);
        let phi = parse("u = u", &env).unwrap();
        let p = Projection::from_bits(&[true, false]);
        assert!(matches!(
            restriction_check(&phi, &env, &p, ConditionalKind::Sasaki, &t),
            Err(Error::PreconditionViolated(_))
        ));
        let _ = ortho(&p);
    }

    #[test]
    fn corpus_is_well_formed() {
        assert_eq!(ZFC_DELTA0_CORPUS.len(), 10);
        let mut env = Registry::new();
        for name in ["u", "v", "w", "x", "y", "z"] {
            env.insert(name.to_string(), QSet::empty(2));
        }
        for item in ZFC_DELTA0_CORPUS {
            let parsed = parse(item.text, &env);
            assert!(parsed.is_ok(), "corpus formula `{}` must parse", item.name);
        }
    }
}
