//! Seeded property suites over randomized instances.
//!
//! Each suite draws its instances from a deterministic generator, so a
//! run is reproducible from (dims, trials, seed, tolerance). The suites
//! are shared between the test batteries and the command-line self test.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::formula::{evaluate, parse, Formula};
use crate::lattice::{
    biconditional, commutator_set, commutator_takeuti, commutes, conditional, conditional_range,
    equalizer, join, leq, leq_residual, meet, meet_by_iteration, ortho, subspace_equal,
    ConditionalKind, Projection,
};
use crate::linalg::{hermitian_eig, Complex64, ComplexMatrix, StateVector, Tolerance};
use crate::measurement::{order_measurement_check, successive_distribution};
use crate::reals::{
    borel_apply, equality_equivalents, equality_truth_value, merged_grid, observable_to_real,
    order_truth_value, perfect_correlation, qborel_identities, real_to_observable,
    reality_truth_value, spectral_order_leq, BorelFunctionSpec, Observable, QuantumReal, StepChain,
};
use crate::universe::{
    commutator_universe, restriction_check, transfer_check, truth_equal, CheckEmbedder, HfSet,
    QSet, Registry, ZFC_DELTA0_CORPUS,
};

/// Configuration shared by all suites.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub dims: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    pub tol: Tolerance,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            dims: vec![2, 3, 4],
            trials: 50,
            seed: 2024,
            tol: Tolerance::default(),
        }
    }
}

/// Outcome of one suite: number of checks, failures, and the largest
/// residual observed where a residual is meaningful.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub checks: usize,
    pub failures: usize,
    pub max_residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckResult {
    fn new(name: &str) -> Self {
        CheckResult {
            name: name.to_string(),
            passed: true,
            checks: 0,
            failures: 0,
            max_residual: 0.0,
            detail: None,
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            self.passed = false;
            if self.detail.is_none() {
                self.detail = Some(detail());
            }
        }
    }

    fn bound(&mut self, residual: f64, limit: f64, detail: impl FnOnce() -> String) {
        self.max_residual = self.max_residual.max(residual);
        self.check(residual <= limit, detail);
    }
}

/// Stable per-suite random stream derived from the master seed.
pub fn rng_for(seed: u64, suite: &str) -> ChaCha8Rng {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in suite.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x1000_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

/// Deterministic random instance builders.
pub mod sample {
    use super::*;

    pub fn complex(rng: &mut ChaCha8Rng) -> Complex64 {
        Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    }

    pub fn hermitian(dim: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(dim, dim);
        for r in 0..dim {
            for c in 0..dim {
                m.set(r, c, complex(rng));
            }
        }
        m.hermitian_part()
    }

    pub fn state(dim: usize, rng: &mut ChaCha8Rng) -> StateVector {
        loop {
            let amps: Vec<Complex64> = (0..dim).map(|_| complex(rng)).collect();
            if let Ok(s) = StateVector::normalized(amps) {
                return s;
            }
        }
    }

    /// Random projection of the given rank via Gram–Schmidt.
    pub fn projection_of_rank(
        dim: usize,
        rank: usize,
        rng: &mut ChaCha8Rng,
        _tol: &Tolerance,
    ) -> Projection {
        let mut basis: Vec<Vec<Complex64>> = Vec::with_capacity(rank);
        while basis.len() < rank {
            let mut v: Vec<Complex64> = (0..dim).map(|_| complex(rng)).collect();
            for b in &basis {
                let coeff = crate::linalg::inner(b, &v);
                for i in 0..dim {
                    v[i] -= coeff * b[i];
                }
            }
            let norm = crate::linalg::vec_norm(&v);
            if norm > 1e-6 {
                for x in v.iter_mut() {
                    *x /= norm;
                }
                basis.push(v);
            }
        }
        let mut m = ComplexMatrix::zeros(dim, dim);
        for b in &basis {
            for r in 0..dim {
                for c in 0..dim {
                    let v = m.get(r, c) + b[r] * b[c].conj();
                    m.set(r, c, v);
                }
            }
        }
        Projection::trusted(m)
    }

    /// Random projection with rank uniform in `0..=dim`.
    pub fn projection(dim: usize, rng: &mut ChaCha8Rng, tol: &Tolerance) -> Projection {
        let rank = rng.gen_range(0..=dim);
        projection_of_rank(dim, rank, rng, tol)
    }

    /// Random unitary: the eigenvector matrix of a random Hermitian.
    pub fn unitary(dim: usize, rng: &mut ChaCha8Rng, tol: &Tolerance) -> ComplexMatrix {
        let h = hermitian(dim, rng);
        hermitian_eig(&h, tol)
            .expect("random Hermitian")
            .eigenvectors
    }

    /// Pair of projections diagonal in a shared random basis.
    pub fn commuting_pair(
        dim: usize,
        rng: &mut ChaCha8Rng,
        tol: &Tolerance,
    ) -> (Projection, Projection) {
        let u = unitary(dim, rng, tol);
        let mut bits_a = vec![false; dim];
        let mut bits_b = vec![false; dim];
        for i in 0..dim {
            bits_a[i] = rng.gen_bool(0.5);
            bits_b[i] = rng.gen_bool(0.5);
        }
        let conjugate = |bits: &[bool]| {
            let d = Projection::from_bits(bits);
            let m = &(&u * d.matrix()) * &u.adjoint();
            Projection::trusted(m.hermitian_part())
        };
        (conjugate(&bits_a), conjugate(&bits_b))
    }

    /// Pair `(P, Q)` with `P ≤ Q` (`Q = P ∨ R` for a random `R`).
    pub fn ordered_pair(
        dim: usize,
        rng: &mut ChaCha8Rng,
        tol: &Tolerance,
    ) -> (Projection, Projection) {
        let p = projection(dim, rng, tol);
        let r = projection(dim, rng, tol);
        let q = join(&p, &r, tol).expect("same dim");
        (p, q)
    }

    /// Random observable; `degenerate` forces at least one eigenvalue of
    /// multiplicity two (when the dimension allows).
    pub fn observable(
        dim: usize,
        degenerate: bool,
        rng: &mut ChaCha8Rng,
        tol: &Tolerance,
    ) -> Observable {
        let u = unitary(dim, rng, tol);
        let mut values: Vec<f64> = (0..dim).map(|_| rng.gen_range(-2.0..2.0)).collect();
        if degenerate && dim >= 2 {
            let v = values[0];
            values[1] = v;
        }
        let mut d = ComplexMatrix::zeros(dim, dim);
        for (i, &v) in values.iter().enumerate() {
            d.set(i, i, Complex64::new(v, 0.0));
        }
        let m = &(&u * &d) * &u.adjoint();
        Observable::from_matrix(m.hermitian_part(), tol).expect("Hermitian by construction")
    }

    /// Spectrally ordered pair `X ≼ Y` built from nested level chains on
    /// a shared jump grid; generically non-commuting.
    pub fn spectrally_ordered_pair(
        dim: usize,
        rng: &mut ChaCha8Rng,
        tol: &Tolerance,
    ) -> (Observable, Observable) {
        let steps = rng.gen_range(2..=3.min(dim));
        let mut jumps: Vec<f64> = Vec::new();
        let mut at = rng.gen_range(-2.0..-1.0);
        for _ in 0..steps {
            jumps.push(at);
            at += rng.gen_range(0.5..1.5);
        }
        // Build chains G_k ≤ F_k with both chains increasing.
        let mut f_levels: Vec<Projection> = Vec::new();
        let mut g_levels: Vec<Projection> = Vec::new();
        let mut g_prev = Projection::zero(dim);
        let mut f_prev = Projection::zero(dim);
        for k in 0..steps {
            let grow_g = projection_of_rank(dim, rng.gen_range(0..=1), rng, tol);
            let g = join(&g_prev, &grow_g, tol).expect("dim");
            let grow_f = projection_of_rank(dim, rng.gen_range(0..=1), rng, tol);
            let f = join(&join(&f_prev, &g, tol).expect("dim"), &grow_f, tol).expect("dim");
            let (g, f) = if k + 1 == steps {
                (Projection::identity(dim), Projection::identity(dim))
            } else {
                (g, f)
            };
            g_levels.push(g.clone());
            f_levels.push(f.clone());
            g_prev = g;
            f_prev = f;
        }
        let x = real_to_observable(
            &QuantumReal::new(jumps.clone(), f_levels, tol).expect("monotone by construction"),
        );
        let y = real_to_observable(
            &QuantumReal::new(jumps, g_levels, tol).expect("monotone by construction"),
        );
        (x, y)
    }

    /// Random element of the universe with bounded rank and width.
    pub fn qset(dim: usize, max_rank: u32, rng: &mut ChaCha8Rng, tol: &Tolerance) -> QSet {
        if max_rank == 0 {
            return QSet::empty(dim);
        }
        let width = rng.gen_range(0..=3usize);
        let mut entries: Vec<(QSet, Projection)> = Vec::with_capacity(width);
        for _ in 0..width {
            let child_rank = rng.gen_range(0..max_rank);
            let child = qset(dim, child_rank, rng, tol);
            entries.push((child, projection(dim, rng, tol)));
        }
        QSet::new(dim, entries).expect("within budgets")
    }

    /// Random element whose weights are all diagonal in the standard
    /// basis, so any diagonal projection commutes with its support.
    pub fn diagonal_qset(dim: usize, max_rank: u32, rng: &mut ChaCha8Rng) -> QSet {
        if max_rank == 0 {
            return QSet::empty(dim);
        }
        let width = rng.gen_range(0..=3usize);
        let mut entries = Vec::with_capacity(width);
        for _ in 0..width {
            let child_rank = rng.gen_range(0..max_rank);
            let child = diagonal_qset(dim, child_rank, rng);
            let bits: Vec<bool> = (0..dim).map(|_| rng.gen_bool(0.5)).collect();
            entries.push((child, Projection::from_bits(&bits)));
        }
        QSet::new(dim, entries).expect("within budgets")
    }

    /// Random hereditarily finite set of bounded depth and width.
    pub fn hf_set(depth: u32, rng: &mut ChaCha8Rng) -> HfSet {
        if depth == 0 {
            return HfSet::empty();
        }
        let width = rng.gen_range(0..=3usize);
        HfSet::from_elements((0..width).map(|_| {
            let d = rng.gen_range(0..depth);
            hf_set(d, rng)
        }))
    }
}

/// Residual between two projections.
fn distance(p: &Projection, q: &Projection) -> f64 {
    p.matrix().distance(q.matrix())
}

// ---------------------------------------------------------------------
// linalg suites
// ---------------------------------------------------------------------

/// Eigendecomposition reconstruction on random Hermitian matrices.
pub fn eig_reconstruction_suite(cfg: &SuiteConfig) -> CheckResult {
    let mut out = CheckResult::new("linalg/eig_reconstruction");
    let mut rng = rng_for(cfg.seed, &out.name);
    for _ in 0..cfg.trials {
        for &dim in &cfg.dims {
            let m = sample::hermitian(dim, &mut rng);
            let eig = hermitian_eig(&m, &cfg.tol).expect("Hermitian");
            let mut recon = ComplexMatrix::zeros(dim, dim);
            for k in 0..dim {
                let v = eig.eigenvector(k);
                for r in 0..dim {
                    for c in 0..dim {
                        let x = recon.get(r, c) + v[r] * v[c].conj() * eig.eigenvalues[k];
                        recon.set(r, c, x);
                    }
                }
            }
            out.bound(m.distance(&recon), cfg.tol.eps_compare, || {
                format!("reconstruction failed at dim {dim}")
            });
            let unitary_residual = (&eig.eigenvectors.adjoint() * &eig.eigenvectors)
                .distance(&ComplexMatrix::identity(dim));
            out.bound(unitary_residual, cfg.tol.eps_compare, || {
                format!("eigenvector matrix not unitary at dim {dim}")
            });
        }
    }
    out
}

/// Null-space projections are projections and annihilate their matrix.
pub fn nullspace_suite(cfg: &SuiteConfig) -> CheckResult {
    let mut out = CheckResult::new("linalg/nullspace");
    let mut rng = rng_for(cfg.seed, &out.name);
    for _ in 0..cfg.trials {
        for &dim in &cfg.dims {
            // PSD matrix from a complement sum, the shape meets use.
            let p = sample::projection(dim, &mut rng, &cfg.tol);
            let q = sample::projection(dim, &mut rng, &cfg.tol);
            let m = &ortho(&p).matrix().clone() + ortho(&q).matrix();
            let r = crate::linalg::nullspace_projection(&m, &cfg.tol).expect("Hermitian PSD");
            out.bound((&r * &r).distance(&r), cfg.tol.eps_compare, || {
                format!("not idempotent at dim {dim}")
            });
            out.bound(r.hermitian_residual(), cfg.tol.eps_compare, || {
                format!("not Hermitian at dim {dim}")
            });
            let eig = hermitian_eig(&m, &cfg.tol).expect("Hermitian");
            let lambda_max = eig.eigenvalues.iter().fold(0.0f64, |a, &x| a.max(x.abs()));
            let annihilation = (&m * &r).frobenius_norm();
            out.bound(
                annihilation,
                cfg.tol.eps_compare * lambda_max.max(1.0),
                || format!("null space not annihilated at dim {dim}"),
            );
        }
    }
    out
}

/// Subspace equality behaves as an equivalence at fixed tolerance.
pub fn subspace_equivalence_suite(cfg: &SuiteConfig) -> CheckResult {
    let mut out = CheckResult::new("linalg/subspace_equivalence");
    let mut rng = rng_for(cfg.seed, &out.name);
    for _ in 0..cfg.trials {
        for &dim in &cfg.dims {
            let p = sample::projection(dim, &mut rng, &cfg.tol);
            let q = sample::projection(dim, &mut rng, &cfg.tol);
            out.check(subspace_equal(&p, &p, &cfg.tol).unwrap(), || {
                "reflexivity failed".to_string()
            });
            let pq = subspace_equal(&p, &q, &cfg.tol).unwrap();
            let qp = subspace_equal(&q, &p, &cfg.tol).unwrap();
            out.check(pq == qp, || "symmetry failed".to_string());
            // Transitivity on a chain of half-tolerance perturbations:
            // identical projections compared through an intermediate.
            let meet_pq = meet(&p, &q, &cfg.tol).unwrap();
            if distance(&meet_pq, &p) <= cfg.tol.eps_compare / 2.0
                && distance(&p, &q) <= cfg.tol.eps_compare / 2.0
            {
                out.check(subspace_equal(&meet_pq, &q, &cfg.tol).unwrap(), || {
                    "transitivity failed".to_string()
                });
            }
        }
    }
    out
}

/// The exact meet agrees with the alternating-projection iteration.
pub fn meet_iteration_suite(cfg: &SuiteConfig) -> CheckResult {
    let mut out = CheckResult::new("lattice/meet_iteration_oracle");
    let mut rng = rng_for(cfg.seed, &out.name);
    for _ in 0..cfg.trials {
        for &dim in &cfg.dims {
            let p = sample::projection(dim, &mut rng, &cfg.tol);
            let q = sample::projection(dim, &mut rng, &cfg.tol);
            let exact = meet(&p, &q, &cfg.tol).unwrap();
            let iterated = meet_by_iteration(&p, &q, &cfg.tol).unwrap();
            out.bound(distance(&exact, &iterated), cfg.tol.eps_compare, || {
                format!("meet routes disagree at dim {dim}")
            });
        }
    }
    out
}

// ---------------------------------------------------------------------
// lattice suites
// ---------------------------------------------------------------------

/// Orthomodular law: `P ≤ Q` implies `P ∨ (P⊥ ∧ Q) = Q`.
pub fn orthomodular_suite(cfg: &SuiteConfig) -> CheckResult {
    let mut out = CheckResult::new("lattice/orthomodular");
    let mut rng = rng_for(cfg.seed, &out.name);
    for _ in 0..cfg.trials {
        for &dim in &cfg.dims {
            let (p, q) = sample::ordered_pair(dim, &mut rng, &cfg.tol);
            let rebuilt = join(&p, &meet(&ortho(&p), &q, &cfg.tol).unwrap(), &cfg.tol).unwrap();
            out.bound(distance(&rebuilt, &q), cfg.tol.eps_compare, || {
                format!("orthomodular law failed at dim {dim}")
            });
        }
    }
    out
}

/// The four minimum implicative conditions for each conditional kind.
pub fn hardegree_suite(cfg: &SuiteConfig) -> CheckResult {
    let mut out = CheckResult::new("lattice/hardegree_conditions");
    let mut rng = rng_for(cfg.seed, &out.name);
    for _ in 0..cfg.trials {
        for &dim in &cfg.dims {
            let random_pair = (
                sample::projection(dim, &mut rng, &cfg.tol),
                sample::projection(dim, &mut rng, &cfg.tol),
            );
            let commuting = sample::commuting_pair(dim, &mut rng, &cfg.tol);
            let ordered = sample::ordered_pair(dim, &mut rng, &cfg.tol);
            for (p, q) in [&random_pair, &commuting, &ordered] {
                let below = leq(p, q, &cfg.tol).unwrap();
                for kind in ConditionalKind::ALL {
                    let c = conditional(kind, p, q, &cfg.tol).unwrap();
                    // (E): value is 1 exactly when P ≤ Q.
                    out.check(c.is_identity(&cfg.tol) == below, || {
                        format!("(E) failed for {kind} at dim {dim}")
                    });
                    // (MP): P ∧ (P → Q) ≤ Q.
                    let mp = meet(p, &c, &cfg.tol).unwrap();
                    out.bound(leq_residual(&mp, q).unwrap(), cfg.tol.eps_compare, || {
                        format!("(MP) failed for {kind} at dim {dim}")
                    });
                    // (MT): Q⊥ ∧ (P → Q) ≤ P⊥.
                    let mt = meet(&ortho(q), &c, &cfg.tol).unwrap();
                    out.bound(
                        leq_residual(&mt, &ortho(p)).unwrap(),
                        cfg.tol.eps_compare,
                        || format!("(MT) failed for {kind} at dim {dim}"),
                    );
                    // (LB): classical value on commuting pairs.
                    if commutes(p, q, &cfg.tol).unwrap() {
                        let classical = join(&ortho(p), q, &cfg.tol).unwrap();
                        out.bound(distance(&c, &classical), cfg.tol.eps_compare, || {
                            format!("(LB) failed for {kind} at dim {dim}")
                        });
                    }
                }
            }
        }
    }
    out
}

/// Lattice-polynomial conditionals match their range characterizations,
/// and the biconditional matches the equalizer subspace.
pub fn conditional_oracle_suite(cfg: &SuiteConfig) -> CheckResult {
    let mut out = CheckResult::new("lattice/conditional_range_oracle");
    let mut rng = rng_for(cfg.seed, &out.name);
    for _ in 0..cfg.trials {
        for &dim in &cfg.dims {
            let p = sample::projection(dim, &mut rng, &cfg.tol);
            let q = sample::projection(dim, &mut rng, &cfg.tol);
            for kind in ConditionalKind::ALL {
                let poly = conditional(kind, &p, &q, &cfg.tol).unwrap();
                let range = conditional_range(kind, &p, &q, &cfg.tol).unwrap();
                out.bound(distance(&poly, &range), cfg.tol.eps_compare, || {
                    format!("range oracle failed for {kind} at dim {dim}")
                });
            }
            let bic = biconditional(ConditionalKind::Sasaki, &p, &q, &cfg.tol).unwrap();
            for kind in [ConditionalKind::Contrapositive, ConditionalKind::Relevance] {
                let other = biconditional(kind, &p, &q, &cfg.tol).unwrap();
                out.bound(distance(&bic, &other), cfg.tol.eps_compare, || {
                    format!("biconditional depends on the kind at dim {dim}")
                });
            }
            let eq = equalizer(&p, &q, &cfg.tol).unwrap();
            out.bound(distance(&bic, &eq), cfg.tol.eps_compare, || {
                format!("biconditional is not the equalizer at dim {dim}")
            });
            // (P∧Q) ∨ (P⊥∧Q⊥) form.
            let direct = join(
                &meet(&p, &q, &cfg.tol).unwrap(),
                &meet(&ortho(&p), &ortho(&q), &cfg.tol).unwrap(),
                &cfg.tol,
            )
            .unwrap();
            out.bound(distance(&bic, &direct), cfg.tol.eps_compare, || {
                format!("biconditional normal form failed at dim {dim}")
            });
        }
    }
    out
}

/// Both commutator routes agree on random families.
pub fn commutator_equivalence_suite(cfg: &SuiteConfig) -> CheckResult {
    let mut out = CheckResult::new("lattice/commutator_equivalence");
    let mut rng = rng_for(cfg.seed, &out.name);
    for _ in 0..cfg.trials {
        for &dim in &cfg.dims {
            for size in [2usize, 3] {
                let family: Vec<Projection> = (0..size)
                    .map(|_| sample::projection(dim, &mut rng, &cfg.tol))
                    .collect();
                let by_set = commutator_set(&family, &cfg.tol).unwrap();
                let by_triples = commutator_takeuti(&family, &cfg.tol).unwrap();
                out.bound(distance(&by_set, &by_triples), cfg.tol.eps_compare, || {
                    format!("commutator routes disagree at dim {dim}, size {size}")
                });
                // Commuting families have commutator 1.
                let (a, b) = sample::commuting_pair(dim, &mut rng, &cfg.tol);
                let com = commutator_set(&[a, b], &cfg.tol).unwrap();
                out.check(com.is_identity(&cfg.tol), || {
                    format!("commuting family commutator below 1 at dim {dim}")
                });
            }
        }
    }
    out
}

/// Distributivity over a commuting family:
/// `Q ∧ ⋁ P_k = ⋁ (Q ∧ P_k)` when every `P_k` commutes with `Q`.
pub fn distributivity_suite(cfg: &SuiteConfig) -> CheckResult {
    let mut out = CheckResult::new("lattice/commuting_distributivity");
    let mut rng = rng_for(cfg.seed, &out.name);
    for _ in 0..cfg.trials {
        for &dim in &cfg.dims {
            let u = sample::unitary(dim, &mut rng, &cfg.tol);
            let conjugate = |bits: &[bool]| {
                let d = Projection::from_bits(bits);
                Projection::trusted((&(&u * d.matrix()) * &u.adjoint()).hermitian_part())
            };
            let q_bits: Vec<bool> = (0..dim).map(|_| rng.gen_bool(0.5)).collect();
            let q = conjugate(&q_bits);
            let family: Vec<Projection> = (0..3)
                .map(|_| {
                    let bits: Vec<bool> = (0..dim).map(|_| rng.gen_bool(0.5)).collect();
                    conjugate(&bits)
                })
                .collect();
            let mut big_join = Projection::zero(dim);
            let mut joined_meets = Projection::zero(dim);
            for p in &family {
                big_join = join(&big_join, p, &cfg.tol).unwrap();
                joined_meets =
                    join(&joined_meets, &meet(&q, p, &cfg.tol).unwrap(), &cfg.tol).unwrap();
            }
            let lhs = meet(&q, &big_join, &cfg.tol).unwrap();
            out.bound(distance(&lhs, &joined_meets), cfg.tol.eps_compare, || {
                format!("distributivity failed at dim {dim}")
            });
            // Dual form over the meet of the family.
            let mut big_meet = Projection::identity(dim);
            let mut met_joins = Projection::identity(dim);
            for p in &family {
                big_meet = meet(&big_meet, p, &cfg.tol).unwrap();
                met_joins = meet(&met_joins, &join(&q, p, &cfg.tol).unwrap(), &cfg.tol).unwrap();
            }
            let lhs = join(&q, &big_meet, &cfg.tol).unwrap();
            out.bound(distance(&lhs, &met_joins), cfg.tol.eps_compare, || {
                format!("dual distributivity failed at dim {dim}")
            });
        }
    }
    out
}

/// Restriction property of conditionals:
/// `(P →_j Q) ∧ E = [(P∧E) →_j (Q∧E)] ∧ E` when `P, Q` commute with `E`.
pub fn conditional_restriction_suite(cfg: &SuiteConfig) -> CheckResult {
    let mut out = CheckResult::new("lattice/conditional_restriction");
    let mut rng = rng_for(cfg.seed, &out.name);
    for _ in 0..cfg.trials {
        for &dim in &cfg.dims {
            // E is a conjugated diagonal; P and Q are block-diagonal
            // with respect to E's eigenspaces, so both commute with E
            // while remaining generic (and non-commuting) inside each
            // block.
            let u = sample::unitary(dim, &mut rng, &cfg.tol);
            let bits: Vec<bool> = (0..dim).map(|_| rng.gen_bool(0.5)).collect();
            let e = {
                let d = Projection::from_bits(&bits);
                Projection::trusted((&(&u * d.matrix()) * &u.adjoint()).hermitian_part())
            };
            let n1 = bits.iter().filter(|&&b| b).count();
            let n2 = dim - n1;
            let block_pair = |rng: &mut ChaCha8Rng| {
                let inside = if n1 > 0 {
                    sample::projection(n1, rng, &cfg.tol)
                } else {
                    Projection::zero(0)
                };
                let outside = if n2 > 0 {
                    sample::projection(n2, rng, &cfg.tol)
                } else {
                    Projection::zero(0)
                };
                // Scatter the two blocks back to the positions selected
                // by `bits`, then conjugate into the shared basis.
                let mut m = ComplexMatrix::zeros(dim, dim);
                let inside_index: Vec<usize> = (0..dim).filter(|&i| bits[i]).collect();
                let outside_index: Vec<usize> = (0..dim).filter(|&i| !bits[i]).collect();
                for (a, &ia) in inside_index.iter().enumerate() {
                    for (b, &ib) in inside_index.iter().enumerate() {
                        m.set(ia, ib, inside.matrix().get(a, b));
                    }
                }
                for (a, &ia) in outside_index.iter().enumerate() {
                    for (b, &ib) in outside_index.iter().enumerate() {
                        m.set(ia, ib, outside.matrix().get(a, b));
                    }
                }
                Projection::trusted((&(&u * &m) * &u.adjoint()).hermitian_part())
            };
            let p = block_pair(&mut rng);
            let q = block_pair(&mut rng);
            debug_assert!(commutes(&p, &e, &cfg.tol).unwrap());
            debug_assert!(commutes(&q, &e, &cfg.tol).unwrap());
            for kind in ConditionalKind::ALL {
                let lhs =
                    meet(&conditional(kind, &p, &q, &cfg.tol).unwrap(), &e, &cfg.tol).unwrap();
                let inner = conditional(
                    kind,
                    &meet(&p, &e, &cfg.tol).unwrap(),
                    &meet(&q, &e, &cfg.tol).unwrap(),
                    &cfg.tol,
                )
                .unwrap();
                let rhs = meet(&inner, &e, &cfg.tol).unwrap();
                out.bound(distance(&lhs, &rhs), cfg.tol.eps_compare, || {
                    format!("conditional restriction failed for {kind} at dim {dim}")
                });
            }
        }
    }
    out
}

// ---------------------------------------------------------------------
// universe / formula suites
// ---------------------------------------------------------------------

fn corpus_bindings(
    item: &crate::universe::CorpusFormula,
    dim: usize,
    max_rank: u32,
    rng: &mut ChaCha8Rng,
    tol: &Tolerance,
) -> Registry {
    item.params
        .iter()
        .map(|name| (name.to_string(), sample::qset(dim, max_rank, rng, tol)))
        .collect()
}

fn parse_corpus(item: &crate::universe::CorpusFormula, bindings: &Registry) -> Formula {
    parse(item.text, bindings).expect("corpus formulas parse against their parameters")
}

/// Transfer principle: the commutator of the bound elements lies below
/// the truth value of every corpus formula, for every conditional kind.
pub fn transfer_suite(cfg: &SuiteConfig) -> CheckResult {
    let mut out = CheckResult::new("universe/transfer_principle");
    let mut rng = rng_for(cfg.seed, &out.name);
    for _ in 0..cfg.trials {
        for &dim in &cfg.dims {
            for item in ZFC_DELTA0_CORPUS {
                let bindings = corpus_bindings(item, dim, 3, &mut rng, &cfg.tol);
                let formula = parse_corpus(item, &bindings);
                // The commutator does not depend on the conditional.
                let elements: Vec<QSet> = bindings.values().cloned().collect();
                let com = commutator_universe(&elements, &cfg.tol).unwrap();
                for kind in ConditionalKind::ALL {
                    let tv = evaluate(&formula, kind, &bindings, &cfg.tol).unwrap().value;
                    out.bound(
                        leq_residual(&com, &tv).unwrap(),
                        cfg.tol.eps_compare,
                        || format!("transfer failed for `{}` ({kind}) at dim {dim}", item.name),
                    );
                }
            }
        }
    }
    out
}

/// Restriction principle on elements with commuting (diagonal) supports.
pub fn restriction_suite(cfg: &SuiteConfig) -> CheckResult {
    let mut out = CheckResult::new("universe/restriction_principle");
    let mut rng = rng_for(cfg.seed, &out.name);
    for _ in 0..cfg.trials {
        for &dim in &cfg.dims {
            for item in ZFC_DELTA0_CORPUS {
                let bindings: Registry = item
                    .params
                    .iter()
                    .map(|name| (name.to_string(), sample::diagonal_qset(dim, 3, &mut rng)))
                    .collect();
                let formula = parse_corpus(item, &bindings);
                let bits: Vec<bool> = (0..dim).map(|_| rng.gen_bool(0.5)).collect();
                let p = Projection::from_bits(&bits);
                for kind in ConditionalKind::ALL {
                    let ok = restriction_check(&formula, &bindings, &p, kind, &cfg.tol).unwrap();
                    out.check(ok, || {
                        format!(
                            "restriction identity failed for `{}` ({kind}) at dim {dim}",
                            item.name
                        )
                    });
                }
            }
        }
    }
    out
}

/// Check-embedded formulas take classical truth values: the evaluation
/// lands on 0 or 1 and matches a direct set-theoretic oracle.
pub fn elementary_equivalence_suite(cfg: &SuiteConfig) -> CheckResult {
    let mut out = CheckResult::new("universe/elementary_equivalence");
    let mut rng = rng_for(cfg.seed, &out.name);
    for _ in 0..cfg.trials {
        for &dim in &cfg.dims {
            for item in ZFC_DELTA0_CORPUS {
                let literals: Vec<HfSet> = item
                    .params
                    .iter()
                    .map(|_| sample::hf_set(3, &mut rng))
                    .collect();
                let mut embedder = CheckEmbedder::new(dim);
                let bindings: Registry = item
                    .params
                    .iter()
                    .zip(literals.iter())
                    .map(|(name, v)| (name.to_string(), embedder.embed(v).unwrap()))
                    .collect();
                let classical_env: std::collections::HashMap<String, HfSet> = item
                    .params
                    .iter()
                    .zip(literals.iter())
                    .map(|(name, v)| (name.to_string(), v.clone()))
                    .collect();
                let formula = parse_corpus(item, &bindings);
                let classical = crate::formula::classical_eval(&formula, &classical_env).unwrap();
                for kind in ConditionalKind::ALL {
                    let tv = evaluate(&formula, kind, &bindings, &cfg.tol).unwrap().value;
                    let zero = tv.is_zero(&cfg.tol);
                    let one = tv.is_identity(&cfg.tol);
                    out.check(zero || one, || {
                        format!("non-classical value for `{}` at dim {dim}", item.name)
                    });
                    out.check(one == classical, || {
                        format!("oracle mismatch for `{}` at dim {dim}", item.name)
                    });
                }
            }
        }
    }
    out
}

/// Also check non-theorem formulas against the classical oracle, so the
/// suite is sensitive to always-1 bugs.
pub fn elementary_equivalence_negative_suite(cfg: &SuiteConfig) -> CheckResult {
    let mut out = CheckResult::new("universe/elementary_equivalence_negative");
    let mut rng = rng_for(cfg.seed, &out.name);
    let texts = [
        ("a in b", vec!["a", "b"]),
        ("a = b", vec!["a", "b"]),
        ("a subseteq b", vec!["a", "b"]),
        ("exists x in a (x in b)", vec!["a", "b"]),
        ("forall x in a (exists y in b (x = y))", vec!["a", "b"]),
    ];
    for _ in 0..cfg.trials {
        for &dim in &cfg.dims {
            for (text, params) in &texts {
                let literals: Vec<HfSet> =
                    params.iter().map(|_| sample::hf_set(3, &mut rng)).collect();
                let mut embedder = CheckEmbedder::new(dim);
                let bindings: Registry = params
                    .iter()
                    .zip(literals.iter())
                    .map(|(name, v)| (name.to_string(), embedder.embed(v).unwrap()))
                    .collect();
                let classical_env: std::collections::HashMap<String, HfSet> = params
                    .iter()
                    .zip(literals.iter())
                    .map(|(name, v)| (name.to_string(), v.clone()))
                    .collect();
                let formula = parse(text, &bindings).unwrap();
                let classical = crate::formula::classical_eval(&formula, &classical_env).unwrap();
                for kind in ConditionalKind::ALL {
                    let tv = evaluate(&formula, kind, &bindings, &cfg.tol).unwrap().value;
                    out.check(tv.is_identity(&cfg.tol) == classical, || {
                        format!("oracle mismatch for `{text}` at dim {dim}")
                    });
                    out.check(tv.is_zero(&cfg.tol) == !classical, || {
                        format!("value off the classical pair for `{text}` at dim {dim}")
                    });
                }
            }
        }
    }
    out
}

/// Truth values are invariant under a block embedding of the ambient
/// space, compared on the embedded block.
pub fn absoluteness_suite(cfg: &SuiteConfig) -> CheckResult {
    let mut out = CheckResult::new("universe/block_absoluteness");
    let mut rng = rng_for(cfg.seed, &out.name);

    fn embed_qset(u: &QSet, dim: usize, memo: &mut std::collections::HashMap<usize, QSet>) -> QSet {
        if let Some(done) = memo.get(&u.id()) {
            return done.clone();
        }
        let entries: Vec<(QSet, Projection)> = u
            .entries()
            .iter()
            .map(|(child, weight)| {
                (
                    embed_qset(child, dim, memo),
                    Projection::trusted(weight.matrix().embed_top_left(dim)),
                )
            })
            .collect();
        let out = QSet::new(dim, entries).expect("budgets preserved");
        memo.insert(u.id(), out.clone());
        out
    }

    for _ in 0..cfg.trials {
        for &dim in &cfg.dims {
            let big = dim + 2;
            for item in ZFC_DELTA0_CORPUS.iter().take(5) {
                let bindings = corpus_bindings(item, dim, 2, &mut rng, &cfg.tol);
                let formula = parse_corpus(item, &bindings);
                let mut memo = std::collections::HashMap::new();
                let embedded: Registry = bindings
                    .iter()
                    .map(|(name, u)| (name.clone(), embed_qset(u, big, &mut memo)))
                    .collect();
                for kind in ConditionalKind::ALL {
                    let small = evaluate(&formula, kind, &bindings, &cfg.tol).unwrap().value;
                    let large = evaluate(&formula, kind, &embedded, &cfg.tol).unwrap().value;
                    let block = large.matrix().top_left(dim);
                    out.bound(block.distance(small.matrix()), cfg.tol.eps_compare, || {
                        format!("block embedding changed `{}` at dim {dim}", item.name)
                    });
                }
            }
        }
    }
    out
}

/// Converse witness: with a non-commuting weight pair the distribution
/// tautology takes a truth value strictly below the identity.
pub fn converse_witness_suite(cfg: &SuiteConfig) -> CheckResult {
    let mut out = CheckResult::new("universe/converse_witness");
    let mut rng = rng_for(cfg.seed, &out.name);
    let item = ZFC_DELTA0_CORPUS
        .iter()
        .find(|i| i.name == "member_split")
        .expect("corpus has the distribution witness");
    for _ in 0..cfg.trials.max(1) {
        let dim = 2;
        // Non-commuting rank-1 pair.
        let p = sample::projection_of_rank(dim, 1, &mut rng, &cfg.tol);
        let q = sample::projection_of_rank(dim, 1, &mut rng, &cfg.tol);
        if commutes(&p, &q, &cfg.tol).unwrap() {
            continue;
        }
        let mut embedder = CheckEmbedder::new(dim);
        let zero = embedder.embed(&HfSet::nat(0)).unwrap();
        let one = embedder.embed(&HfSet::nat(1)).unwrap();
        // Cut-style elements: value jumps to the weight at 0, then to 1.
        let x = QSet::new(
            dim,
            vec![
                (zero.clone(), p.clone()),
                (one.clone(), Projection::identity(dim)),
            ],
        )
        .unwrap();
        let y = QSet::new(
            dim,
            vec![(zero.clone(), q.clone()), (one, Projection::identity(dim))],
        )
        .unwrap();
        let bindings: Registry = [
            ("z".to_string(), zero),
            ("x".to_string(), x),
            ("y".to_string(), y),
        ]
        .into_iter()
        .collect();
        let formula = parse_corpus(item, &bindings);
        for kind in ConditionalKind::ALL {
            let tv = evaluate(&formula, kind, &bindings, &cfg.tol).unwrap().value;
            out.check(tv.rank() < dim, || {
                format!("witness value not strictly below 1 for {kind}")
            });
            // Transfer still holds: the commutator is below the value.
            let outcome = transfer_check(&formula, &bindings, kind, &cfg.tol).unwrap();
            out.check(outcome.holds, || {
                format!("transfer violated on the witness for {kind}")
            });
        }
    }
    out
}

// ---------------------------------------------------------------------
// reals suites
// ---------------------------------------------------------------------

/// Round trip between observables and quantum reals.
pub fn takeuti_roundtrip_suite(cfg: &SuiteConfig) -> CheckResult {
    let mut out = CheckResult::new("reals/takeuti_roundtrip");
    let mut rng = rng_for(cfg.seed, &out.name);
    for trial in 0..cfg.trials {
        for &dim in &cfg.dims {
            let a = sample::observable(dim, trial % 3 == 0, &mut rng, &cfg.tol);
            let back = real_to_observable(&observable_to_real(&a));
            out.bound(
                back.matrix().distance(a.matrix()),
                cfg.tol.eps_compare,
                || format!("round trip failed at dim {dim}"),
            );
            // And the reverse direction from a random chain.
            let (x, _) = sample::spectrally_ordered_pair(dim, &mut rng, &cfg.tol);
            let u = observable_to_real(&x);
            let again = observable_to_real(&real_to_observable(&u));
            out.check(again.jumps().len() == u.jumps().len(), || {
                format!("jump count changed at dim {dim}")
            });
            for (a, b) in u.levels().iter().zip(again.levels().iter()) {
                out.bound(distance(a, b), cfg.tol.eps_compare, || {
                    format!("levels changed on round trip at dim {dim}")
                });
            }
        }
    }
    out
}

/// Reality predicate: 1 on valid chains, strictly below 1 on broken ones.
pub fn reality_predicate_suite(cfg: &SuiteConfig) -> CheckResult {
    let mut out = CheckResult::new("reals/reality_predicate");
    let mut rng = rng_for(cfg.seed, &out.name);
    for _ in 0..cfg.trials {
        for &dim in &cfg.dims {
            let a = sample::observable(dim, false, &mut rng, &cfg.tol);
            let u = observable_to_real(&a);
            for kind in ConditionalKind::ALL {
                let v = reality_truth_value(&StepChain::from_real(&u), kind, &cfg.tol).unwrap();
                out.check(v.is_identity(&cfg.tol), || {
                    format!("valid chain rejected at dim {dim}")
                });
            }
            // Chain that never reaches the identity.
            let p = sample::projection_of_rank(dim, dim - 1, &mut rng, &cfg.tol);
            let stuck = StepChain {
                base: Projection::zero(dim),
                jumps: vec![0.0],
                levels: vec![p],
            };
            let v = reality_truth_value(&stuck, ConditionalKind::Sasaki, &cfg.tol).unwrap();
            out.check(!v.is_identity(&cfg.tol), || {
                format!("truncated chain accepted at dim {dim}")
            });
            // Non-monotone candidate.
            let a = sample::projection_of_rank(dim, 1, &mut rng, &cfg.tol);
            let b = sample::projection_of_rank(dim, 1, &mut rng, &cfg.tol);
            if !leq(&a, &b, &cfg.tol).unwrap() {
                let wobble = StepChain {
                    base: Projection::zero(dim),
                    jumps: vec![0.0, 1.0, 2.0],
                    levels: vec![a, b, Projection::identity(dim)],
                };
                let v = reality_truth_value(&wobble, ConditionalKind::Sasaki, &cfg.tol).unwrap();
                out.check(!v.is_identity(&cfg.tol), || {
                    format!("non-monotone chain accepted at dim {dim}")
                });
            }
        }
    }
    out
}

/// Equality truth value between quantum reals: closed form vs the rank
/// recursion on induced elements, and level = membership truth value.
pub fn real_equality_suite(cfg: &SuiteConfig) -> CheckResult {
    let mut out = CheckResult::new("reals/equality_vs_rank_recursion");
    let mut rng = rng_for(cfg.seed, &out.name);
    for _ in 0..cfg.trials {
        for &dim in &cfg.dims {
            let a = sample::observable(dim, false, &mut rng, &cfg.tol);
            let b = sample::observable(dim, false, &mut rng, &cfg.tol);
            let u = observable_to_real(&a);
            let v = observable_to_real(&b);
            let grid = merged_grid(&u, &v);
            let closed = equality_truth_value(&u, &v, &cfg.tol).unwrap();
            let qu = u.induced_qset(&grid).unwrap();
            let qv = v.induced_qset(&grid).unwrap();
            for kind in ConditionalKind::ALL {
                let recursive = truth_equal(&qu, &qv, kind, &cfg.tol).unwrap();
                out.bound(distance(&closed, &recursive), cfg.tol.eps_compare, || {
                    format!("equality routes disagree at dim {dim} ({kind})")
                });
            }
            // Membership truth value reproduces the level, and the
            // induced element has commutator 1.
            let mut embedder = CheckEmbedder::new(dim);
            for (k, &r) in grid.iter().enumerate() {
                let code = embedder.embed(&HfSet::ackermann(k)).unwrap();
                for kind in ConditionalKind::ALL {
                    let member = crate::universe::truth_member(&code, &qu, kind, &cfg.tol).unwrap();
                    out.bound(
                        distance(&member, &u.level_at(r)),
                        cfg.tol.eps_compare,
                        || format!("membership differs from the level at dim {dim}"),
                    );
                }
            }
            let com = commutator_universe(&[qu], &cfg.tol).unwrap();
            out.check(com.is_identity(&cfg.tol), || {
                format!("induced element has commutator below 1 at dim {dim}")
            });
        }
    }
    out
}

/// Four-way equality equivalences on random and constructed triples.
pub fn equality_equivalents_suite(cfg: &SuiteConfig) -> CheckResult {
    let mut out = CheckResult::new("reals/equality_equivalents");
    let mut rng = rng_for(cfg.seed, &out.name);
    for trial in 0..cfg.trials {
        for &dim in &cfg.dims {
            let a = sample::observable(dim, false, &mut rng, &cfg.tol);
            let b = if trial % 3 == 0 {
                a.clone()
            } else {
                sample::observable(dim, false, &mut rng, &cfg.tol)
            };
            let u = observable_to_real(&a);
            let v = observable_to_real(&b);
            let psi = if trial % 2 == 0 {
                sample::state(dim, &mut rng)
            } else {
                // Project into the equality subspace when possible, so
                // the all-true arm is exercised.
                let e = equality_truth_value(&u, &v, &cfg.tol).unwrap();
                let raw = sample::state(dim, &mut rng);
                match StateVector::normalized(e.apply(raw.amplitudes())) {
                    Ok(s) => s,
                    Err(_) => raw,
                }
            };
            let report = equality_equivalents(&u, &v, &psi, &cfg.tol).unwrap();
            out.check(report.all_agree(), || {
                format!(
                    "equality conditions disagree at dim {dim}: {:?}",
                    (
                        report.in_truth_range,
                        report.levels_agree,
                        report.product_rule,
                        report.inner_product_rule
                    )
                )
            });
        }
    }
    out
}

/// Five-way perfect-correlation equivalences, including constructed
/// perfectly correlated pairs on a doubled system.
pub fn perfect_correlation_suite(cfg: &SuiteConfig) -> CheckResult {
    let mut out = CheckResult::new("reals/perfect_correlation");
    let mut rng = rng_for(cfg.seed, &out.name);
    for trial in 0..cfg.trials {
        for &dim in &cfg.dims {
            let a = sample::observable(dim, false, &mut rng, &cfg.tol);
            let b = if trial % 4 == 0 {
                a.clone()
            } else {
                sample::observable(dim, false, &mut rng, &cfg.tol)
            };
            let psi = if trial % 4 == 0 {
                let e = equality_truth_value(
                    &observable_to_real(&a),
                    &observable_to_real(&b),
                    &cfg.tol,
                )
                .unwrap();
                let raw = sample::state(dim, &mut rng);
                StateVector::normalized(e.apply(raw.amplitudes()))
                    .unwrap_or_else(|_| sample::state(dim, &mut rng))
            } else {
                sample::state(dim, &mut rng)
            };
            let report = perfect_correlation(&a, &b, &psi, &cfg.tol).unwrap();
            out.check(report.all_agree(), || {
                format!(
                    "correlation conditions disagree at dim {dim}: {:?}",
                    (
                        report.in_truth_range,
                        report.cumulative_agree,
                        report.indicators_agree,
                        report.disjoint_orthogonal,
                        report.joint_diagonal
                    )
                )
            });
        }
    }
    // Constructed perfectly correlated pairs: A⊗I and I⊗A on the
    // maximally correlated state of the doubled system, with A real
    // symmetric so both sides act identically on it.
    for k in [2usize, 3] {
        let mut m = ComplexMatrix::zeros(k, k);
        for r in 0..k {
            for c in r..k {
                let x = rng.gen_range(-1.0..1.0);
                m.set(r, c, Complex64::new(x, 0.0));
                m.set(c, r, Complex64::new(x, 0.0));
            }
        }
        let eye = ComplexMatrix::identity(k);
        let left = Observable::from_matrix(m.kron(&eye), &cfg.tol).unwrap();
        let right = Observable::from_matrix(eye.kron(&m), &cfg.tol).unwrap();
        let mut amps = vec![Complex64::new(0.0, 0.0); k * k];
        for i in 0..k {
            amps[i * k + i] = Complex64::new(1.0, 0.0);
        }
        let psi = StateVector::normalized(amps).unwrap();
        let report = perfect_correlation(&left, &right, &psi, &cfg.tol).unwrap();
        out.check(report.all_agree() && report.holds(), || {
            format!("constructed correlated pair rejected at local dim {k}")
        });
    }
    out
}

/// Threshold identities against spectral projections.
pub fn qborel_suite(cfg: &SuiteConfig) -> CheckResult {
    let mut out = CheckResult::new("reals/qborel_identities");
    let mut rng = rng_for(cfg.seed, &out.name);
    for trial in 0..cfg.trials {
        for &dim in &cfg.dims {
            let x = sample::observable(dim, trial % 3 == 0, &mut rng, &cfg.tol);
            // Sometimes pin t to an actual eigenvalue so the atom item
            // is non-trivial.
            let (s, t) = if trial % 2 == 0 {
                let t = x.spectrum()[rng.gen_range(0..x.spectrum().len())];
                (t - rng.gen_range(0.1..1.0), t)
            } else {
                let a = rng.gen_range(-2.5..2.5);
                (a, a + rng.gen_range(0.1..1.5))
            };
            let report = qborel_identities(&x, s, t, &cfg.tol).unwrap();
            for (i, residual) in report.residuals.iter().enumerate() {
                out.bound(*residual, cfg.tol.eps_compare, || {
                    format!("identity {} failed at dim {dim}", i + 1)
                });
            }
            // Indicator calculus matches the cumulative projection.
            let ind = borel_apply(&BorelFunctionSpec::indicator_le(t), &x, &cfg.tol).unwrap();
            out.bound(
                ind.matrix().distance(x.spectral_le(t).matrix()),
                cfg.tol.eps_compare,
                || format!("indicator calculus failed at dim {dim}"),
            );
        }
    }
    out
}

/// Order truth value is 1 exactly when the spectral order holds, for
/// every conditional kind; includes constructed comparable pairs.
pub fn order_suite(cfg: &SuiteConfig) -> CheckResult {
    let mut out = CheckResult::new("reals/order_vs_spectral_order");
    let mut rng = rng_for(cfg.seed, &out.name);
    for trial in 0..cfg.trials {
        for &dim in &cfg.dims {
            let (x, y) = if trial % 2 == 0 {
                let x = sample::observable(dim, false, &mut rng, &cfg.tol);
                let y = sample::observable(dim, false, &mut rng, &cfg.tol);
                (x, y)
            } else {
                sample::spectrally_ordered_pair(dim, &mut rng, &cfg.tol)
            };
            let ordered = spectral_order_leq(&x, &y, &cfg.tol).unwrap();
            for kind in ConditionalKind::ALL {
                let tv = order_truth_value(&x, &y, kind, &cfg.tol).unwrap();
                out.check(tv.is_identity(&cfg.tol) == ordered, || {
                    format!(
                        "order truth value disagrees with the spectral order ({kind}, dim {dim})"
                    )
                });
            }
        }
    }
    // Commuting pairs with entrywise ordered eigenvalues are comparable.
    for &dim in &cfg.dims {
        let u = sample::unitary(dim, &mut rng, &cfg.tol);
        let base: Vec<f64> = (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let above: Vec<f64> = base.iter().map(|&v| v + rng.gen_range(0.0..1.0)).collect();
        let make = |values: &[f64]| {
            let mut d = ComplexMatrix::zeros(dim, dim);
            for (i, &v) in values.iter().enumerate() {
                d.set(i, i, Complex64::new(v, 0.0));
            }
            Observable::from_matrix((&(&u * &d) * &u.adjoint()).hermitian_part(), &cfg.tol).unwrap()
        };
        let x = make(&base);
        let y = make(&above);
        out.check(spectral_order_leq(&x, &y, &cfg.tol).unwrap(), || {
            format!("commuting entrywise-ordered pair not comparable at dim {dim}")
        });
        for kind in ConditionalKind::ALL {
            out.check(
                order_truth_value(&x, &y, kind, &cfg.tol)
                    .unwrap()
                    .is_identity(&cfg.tol),
                || format!("comparable pair has truth value below 1 at dim {dim}"),
            );
        }
    }
    out
}

/// Positive spectrally ordered pairs satisfy the power inequality
/// `X^n ≤ Y^n` in the operator order, for small `n`.
pub fn spectral_order_powers_suite(cfg: &SuiteConfig) -> CheckResult {
    let mut out = CheckResult::new("reals/spectral_order_powers");
    let mut rng = rng_for(cfg.seed, &out.name);
    for _ in 0..cfg.trials {
        for &dim in &cfg.dims {
            let (x, y) = sample::spectrally_ordered_pair(dim, &mut rng, &cfg.tol);
            // Shift both to be positive: X ≼ Y is shift-invariant along
            // the constructed shared grid.
            let shift = x
                .spectrum()
                .iter()
                .chain(y.spectrum().iter())
                .fold(f64::INFINITY, |a, &b| a.min(b));
            let lift = |o: &Observable| {
                let m = o.matrix()
                    + &ComplexMatrix::identity(dim).scale(Complex64::new(1.0 - shift, 0.0));
                Observable::from_matrix(m, &cfg.tol).unwrap()
            };
            let xp = lift(&x);
            let yp = lift(&y);
            if !spectral_order_leq(&xp, &yp, &cfg.tol).unwrap() {
                continue;
            }
            let mut xn = ComplexMatrix::identity(dim);
            let mut yn = ComplexMatrix::identity(dim);
            for _ in 0..4 {
                xn = &xn * xp.matrix();
                yn = &yn * yp.matrix();
                let diff = (&yn - &xn).hermitian_part();
                let eig = hermitian_eig(&diff, &cfg.tol).unwrap();
                let min = eig.eigenvalues.first().copied().unwrap_or(0.0);
                out.check(min >= -1e-7, || {
                    format!("power inequality failed at dim {dim} (min eigenvalue {min})")
                });
            }
        }
    }
    out
}

// ---------------------------------------------------------------------
// measurement suites
// ---------------------------------------------------------------------

/// Distribution sanity: normalization and the first-measurement marginal.
pub fn distribution_suite(cfg: &SuiteConfig) -> CheckResult {
    let mut out = CheckResult::new("measurement/distribution");
    let mut rng = rng_for(cfg.seed, &out.name);
    for trial in 0..cfg.trials {
        for &dim in &cfg.dims {
            let first = sample::observable(dim, trial % 3 == 0, &mut rng, &cfg.tol);
            let second = sample::observable(dim, trial % 5 == 0, &mut rng, &cfg.tol);
            let psi = sample::state(dim, &mut rng);
            let dist = successive_distribution(&first, &second, &psi).unwrap();
            out.bound((dist.total_mass() - 1.0).abs(), 1e-9, || {
                format!("mass not normalized at dim {dim}")
            });
            for (value, mass) in dist.first_marginal() {
                let proj = first.spectral_atom(value, &cfg.tol);
                let born = crate::linalg::vec_norm(&proj.apply(psi.amplitudes())).powi(2);
                out.bound((mass - born).abs(), 1e-9, || {
                    format!("marginal is not the Born rule at dim {dim}")
                });
            }
            // Commuting pair: the two orders transpose into each other.
            let (p, q) = sample::commuting_pair(dim, &mut rng, &cfg.tol);
            let a = Observable::from_matrix(p.matrix().clone(), &cfg.tol).unwrap();
            let b = Observable::from_matrix(q.matrix().clone(), &cfg.tol).unwrap();
            let ab = successive_distribution(&a, &b, &psi).unwrap();
            let ba = successive_distribution(&b, &a, &psi).unwrap();
            for ((x_out, y_out), mass) in ab.outcomes().iter().zip(ab.probabilities()) {
                let twin = ba
                    .outcomes()
                    .iter()
                    .zip(ba.probabilities())
                    .find(|((bx, by), _)| (bx - y_out).abs() < 1e-12 && (by - x_out).abs() < 1e-12)
                    .map(|(_, p)| *p)
                    .unwrap_or(0.0);
                out.bound((mass - twin).abs(), 1e-9, || {
                    format!("commuting pair not order-symmetric at dim {dim}")
                });
            }
            // And the three conditional verdicts coincide on a
            // commuting pair.
            let report = order_measurement_check(&a, &b, &psi, &cfg.tol).unwrap();
            let first = &report.verdicts[0];
            for v in &report.verdicts[1..] {
                out.check(
                    v.membership == first.membership && v.tail_zero == first.tail_zero,
                    || format!("conditional verdicts split on a commuting pair at dim {dim}"),
                );
            }
        }
    }
    out
}

/// The order/measurement equivalence for each conditional kind, on
/// random triples, comparable pairs, and range-projected states.
pub fn measurement_theorem_suite(cfg: &SuiteConfig) -> CheckResult {
    let mut out = CheckResult::new("measurement/order_theorem");
    let mut rng = rng_for(cfg.seed, &out.name);
    for trial in 0..cfg.trials {
        for &dim in &cfg.dims {
            let (x, y) = if trial % 3 == 1 {
                sample::spectrally_ordered_pair(dim, &mut rng, &cfg.tol)
            } else {
                (
                    sample::observable(dim, trial % 2 == 0, &mut rng, &cfg.tol),
                    sample::observable(dim, trial % 4 == 0, &mut rng, &cfg.tol),
                )
            };
            let psi = if trial % 3 == 2 {
                // Project into the Sasaki order range when non-trivial,
                // exercising the membership-true arm with value < 1.
                let tv = order_truth_value(&x, &y, ConditionalKind::Sasaki, &cfg.tol).unwrap();
                let raw = sample::state(dim, &mut rng);
                StateVector::normalized(tv.apply(raw.amplitudes()))
                    .unwrap_or_else(|_| sample::state(dim, &mut rng))
            } else {
                sample::state(dim, &mut rng)
            };
            let report = order_measurement_check(&x, &y, &psi, &cfg.tol).unwrap();
            for v in &report.verdicts {
                out.check(v.agrees, || {
                    format!(
                        "order/measurement equivalence failed ({}, dim {dim}): membership {} vs tail {:.3e}",
                        v.kind, v.membership, v.tail_mass
                    )
                });
            }
        }
    }
    out
}

/// Every suite, in a fixed order.
pub fn run_all(cfg: &SuiteConfig) -> Vec<CheckResult> {
    vec![
        eig_reconstruction_suite(cfg),
        nullspace_suite(cfg),
        subspace_equivalence_suite(cfg),
        meet_iteration_suite(cfg),
        orthomodular_suite(cfg),
        hardegree_suite(cfg),
        conditional_oracle_suite(cfg),
        commutator_equivalence_suite(cfg),
        distributivity_suite(cfg),
        conditional_restriction_suite(cfg),
        transfer_suite(cfg),
        restriction_suite(cfg),
        elementary_equivalence_suite(cfg),
        elementary_equivalence_negative_suite(cfg),
        absoluteness_suite(cfg),
        converse_witness_suite(cfg),
        takeuti_roundtrip_suite(cfg),
        reality_predicate_suite(cfg),
        real_equality_suite(cfg),
        equality_equivalents_suite(cfg),
        perfect_correlation_suite(cfg),
        qborel_suite(cfg),
        order_suite(cfg),
        spectral_order_powers_suite(cfg),
        distribution_suite(cfg),
        measurement_theorem_suite(cfg),
    ]
}
