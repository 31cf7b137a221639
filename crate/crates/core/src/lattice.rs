//! The projection lattice of `C^d`: order, meet/join/orthocomplement,
//! commutators, and the three material conditionals with their range
//! characterizations.
//!
//! Meets are computed exactly through the null-space method
//! (`v ∈ R(P)∩R(Q)` iff both PSD summands `(I−P)` and `(I−Q)` annihilate
//! `v`); the alternating-projection iteration is kept as an independent
//! cross-check oracle.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{
    nullspace_projection, subspace_equal as matrix_subspace_equal, Complex64, ComplexMatrix,
    StateVector, Tolerance,
};

/// Cap on the family size accepted by [`commutator_set`]; the join runs
/// over `2^|F|` sign assignments.
pub const COMMUTATOR_SET_CAP: usize = 16;

const WEAK_LIMIT_SQUARINGS: usize = 50;

/// An orthogonal projection on `C^d`.
///
/// Validation (Hermitian and idempotent at tolerance) happens at
/// construction; lattice operations assume validated inputs.
#[derive(Debug, Clone)]
pub struct Projection {
    dim: usize,
    matrix: ComplexMatrix,
}

impl Projection {
    /// Validate an arbitrary matrix as a projection.
    pub fn new(matrix: ComplexMatrix, tol: &Tolerance) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NonSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        let herm = matrix.hermitian_residual();
        if herm > tol.eps_compare {
            return Err(Error::NotHermitian { residual: herm });
        }
        let idem = (&matrix * &matrix).distance(&matrix);
        if idem > tol.eps_compare {
            return Err(Error::NotProjection { residual: idem });
        }
        Ok(Projection {
            dim: matrix.rows(),
            matrix,
        })
    }

    pub fn zero(dim: usize) -> Self {
        Projection {
            dim,
            matrix: ComplexMatrix::zeros(dim, dim),
        }
    }

    pub fn identity(dim: usize) -> Self {
        Projection {
            dim,
            matrix: ComplexMatrix::identity(dim),
        }
    }

    /// Diagonal 0/1 projection, e.g. `from_bits(&[true, false])` = diag(1,0).
    pub fn from_bits(bits: &[bool]) -> Self {
        let values: Vec<f64> = bits.iter().map(|&b| if b { 1.0 } else { 0.0 }).collect();
        Projection {
            dim: bits.len(),
            matrix: ComplexMatrix::diagonal(&values),
        }
    }

    /// Rank-one projection `|v⟩⟨v|` onto a unit vector.
    pub fn onto_state(v: &StateVector) -> Self {
        let d = v.dim();
        let amps = v.amplitudes();
        let mut m = ComplexMatrix::zeros(d, d);
        for r in 0..d {
            for c in 0..d {
                m.set(r, c, amps[r] * amps[c].conj());
            }
        }
        Projection { dim: d, matrix: m }
    }

    /// Projection onto the span of the given vectors (Gram–Schmidt;
    /// near-dependent vectors are dropped).
    pub fn onto_span(vectors: &[Vec<Complex64>], dim: usize) -> Result<Self> {
        let mut basis: Vec<Vec<Complex64>> = Vec::new();
        for v in vectors {
            if v.len() != dim {
                return Err(Error::DimMismatch {
                    left: v.len(),
                    right: dim,
                });
            }
            let mut w = v.clone();
            for b in &basis {
                let coeff = crate::linalg::inner(b, &w);
                for i in 0..dim {
                    w[i] -= coeff * b[i];
                }
            }
            let norm = crate::linalg::vec_norm(&w);
            if norm > 1e-9 {
                for x in w.iter_mut() {
                    *x /= norm;
                }
                basis.push(w);
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
        Ok(Projection { dim, matrix: m })
    }

    /// Internal constructor for matrices that are projections by
    /// construction (sums of orthonormal dyads, complements, ...).
    pub(crate) fn trusted(matrix: ComplexMatrix) -> Self {
        debug_assert!(matrix.is_square());
        debug_assert!((&matrix * &matrix).distance(&matrix) < 1e-6);
        Projection {
            dim: matrix.rows(),
            matrix,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// Dimension of the range, read off the trace.
    pub fn rank(&self) -> usize {
        self.matrix.trace().re.round().max(0.0) as usize
    }

    pub fn is_zero(&self, tol: &Tolerance) -> bool {
        self.matrix.frobenius_norm() <= tol.eps_compare
    }

    pub fn is_identity(&self, tol: &Tolerance) -> bool {
        self.matrix.distance(&ComplexMatrix::identity(self.dim)) <= tol.eps_compare
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        self.matrix.apply(v)
    }

    /// Whether a state lies in the range: `‖Pψ − ψ‖ ≤ eps_compare`.
    pub fn contains_state(&self, psi: &StateVector, tol: &Tolerance) -> Result<bool> {
        Ok(self.membership_residual(psi)? <= tol.eps_compare)
    }

    /// `‖Pψ − ψ‖`.
    pub fn membership_residual(&self, psi: &StateVector) -> Result<f64> {
        if psi.dim() != self.dim {
            return Err(Error::DimMismatch {
                left: psi.dim(),
                right: self.dim,
            });
        }
        let image = self.apply(psi.amplitudes());
        let diff: Vec<Complex64> = image
            .iter()
            .zip(psi.amplitudes().iter())
            .map(|(a, b)| a - b)
            .collect();
        Ok(crate::linalg::vec_norm(&diff))
    }
}

fn check_dims(p: &Projection, q: &Projection) -> Result<()> {
    if p.dim() != q.dim() {
        return Err(Error::DimMismatch {
            left: p.dim(),
            right: q.dim(),
        });
    }
    Ok(())
}

/// Orthocomplement `P⊥ = I − P`.
pub fn ortho(p: &Projection) -> Projection {
    let m = &ComplexMatrix::identity(p.dim()) - p.matrix();
    Projection::trusted(m)
}

/// Residual of the range-inclusion test, `‖P − QP‖_F`.
pub fn leq_residual(p: &Projection, q: &Projection) -> Result<f64> {
    check_dims(p, q)?;
    let qp = q.matrix() * p.matrix();
    Ok(p.matrix().distance(&qp))
}

/// Lattice order `P ≤ Q`, i.e. range inclusion.
pub fn leq(p: &Projection, q: &Projection, tol: &Tolerance) -> Result<bool> {
    Ok(leq_residual(p, q)? <= tol.eps_compare)
}

/// Subspace equality at tolerance.
pub fn subspace_equal(p: &Projection, q: &Projection, tol: &Tolerance) -> Result<bool> {
    matrix_subspace_equal(p.matrix(), q.matrix(), tol)
}

/// Meet `P ∧ Q`, the projection onto `R(P) ∩ R(Q)`.
pub fn meet(p: &Projection, q: &Projection, tol: &Tolerance) -> Result<Projection> {
    check_dims(p, q)?;
    let sum = &ortho(p).matrix + &ortho(q).matrix;
    let ns = nullspace_projection(&sum, tol)?;
    Ok(Projection::trusted(ns))
}

/// Join `P ∨ Q = (P⊥ ∧ Q⊥)⊥`.
pub fn join(p: &Projection, q: &Projection, tol: &Tolerance) -> Result<Projection> {
    Ok(ortho(&meet(&ortho(p), &ortho(q), tol)?))
}

/// Meet by the alternating-projection iteration: repeated squaring of
/// `PQP` converges to the projection onto `R(P) ∩ R(Q)`. Independent of
/// the null-space route; used as a cross-check oracle.
pub fn meet_by_iteration(p: &Projection, q: &Projection, tol: &Tolerance) -> Result<Projection> {
    check_dims(p, q)?;
    let mut m = &(p.matrix() * q.matrix()) * p.matrix();
    for _ in 0..WEAK_LIMIT_SQUARINGS {
        let next = &m * &m;
        let delta = next.distance(&m);
        m = next;
        if delta <= tol.eps_compare * 0.01 {
            break;
        }
    }
    Projection::new(m.hermitian_part(), tol)
}

/// Meet of a family; the empty meet is the identity.
pub fn meet_all<'a, I>(items: I, dim: usize, tol: &Tolerance) -> Result<Projection>
where
    I: IntoIterator<Item = &'a Projection>,
{
    let mut acc = Projection::identity(dim);
    for p in items {
        acc = meet(&acc, p, tol)?;
    }
    Ok(acc)
}

/// Join of a family; the empty join is zero.
pub fn join_all<'a, I>(items: I, dim: usize, tol: &Tolerance) -> Result<Projection>
where
    I: IntoIterator<Item = &'a Projection>,
{
    let mut acc = Projection::zero(dim);
    for p in items {
        acc = join(&acc, p, tol)?;
    }
    Ok(acc)
}

/// Commutation test `[P,Q] = 0` at tolerance.
pub fn commutes(p: &Projection, q: &Projection, tol: &Tolerance) -> Result<bool> {
    check_dims(p, q)?;
    let pq = p.matrix() * q.matrix();
    let qp = q.matrix() * p.matrix();
    Ok(pq.distance(&qp) <= tol.eps_compare)
}

/// Two-element commutator
/// `(P∧Q) ∨ (P∧Q⊥) ∨ (P⊥∧Q) ∨ (P⊥∧Q⊥)`.
pub fn commutator_pair(p: &Projection, q: &Projection, tol: &Tolerance) -> Result<Projection> {
    check_dims(p, q)?;
    let pc = ortho(p);
    let qc = ortho(q);
    let mut acc = meet(p, q, tol)?;
    for term in [meet(p, &qc, tol)?, meet(&pc, q, tol)?, meet(&pc, &qc, tol)?] {
        acc = join(&acc, &term, tol)?;
    }
    Ok(acc)
}

fn dedup_family(family: &[Projection], tol: &Tolerance) -> Result<Vec<Projection>> {
    let mut out: Vec<Projection> = Vec::new();
    for p in family {
        if let Some(first) = out.first() {
            if first.dim() != p.dim() {
                return Err(Error::DimMismatch {
                    left: first.dim(),
                    right: p.dim(),
                });
            }
        }
        let mut seen = false;
        for q in &out {
            if subspace_equal(p, q, tol)? {
                seen = true;
                break;
            }
        }
        if !seen {
            out.push(p.clone());
        }
    }
    Ok(out)
}

/// Finite-family commutator as the join over all `2^|F|` sign
/// assignments of the meets of signed projections.
pub fn commutator_set(family: &[Projection], tol: &Tolerance) -> Result<Projection> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let family = dedup_family(family, tol)?;
    if family.len() > COMMUTATOR_SET_CAP {
        return Err(Error::SetTooLarge {
            len: family.len(),
            max: COMMUTATOR_SET_CAP,
        });
    }
    let dim = family[0].dim();
    let n = family.len();
    let mut acc = Projection::zero(dim);
    for mask in 0u32..(1u32 << n) {
        let mut term = Projection::identity(dim);
        for (i, p) in family.iter().enumerate() {
            let signed = if mask & (1 << i) != 0 {
                ortho(p)
            } else {
                p.clone()
            };
            term = meet(&term, &signed, tol)?;
            if term.is_zero(tol) {
                break;
            }
        }
        acc = join(&acc, &term, tol)?;
    }
    Ok(acc)
}

/// Finite-family commutator as the projection onto
/// `{ψ : [P1,P2] P3 ψ = 0 for all P1,P2,P3 in the family}`,
/// realized as the null space of the sum of `C†C` over all triple
/// products `C = [P1,P2] P3`.
pub fn commutator_takeuti(family: &[Projection], tol: &Tolerance) -> Result<Projection> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let family = dedup_family(family, tol)?;
    let dim = family[0].dim();
    let mut sum = ComplexMatrix::zeros(dim, dim);
    for (i, p1) in family.iter().enumerate() {
        for (j, p2) in family.iter().enumerate() {
            if i == j {
                continue;
            }
            let comm = &(p1.matrix() * p2.matrix()) - &(p2.matrix() * p1.matrix());
            for p3 in family.iter() {
                let prod = &comm * p3.matrix();
                sum = &sum + &(&prod.adjoint() * &prod);
            }
        }
    }
    let ns = nullspace_projection(&sum, tol)?;
    Ok(Projection::trusted(ns))
}

/// The three material conditionals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConditionalKind {
    Sasaki,
    Contrapositive,
    Relevance,
}

impl ConditionalKind {
    pub const ALL: [ConditionalKind; 3] = [
        ConditionalKind::Sasaki,
        ConditionalKind::Contrapositive,
        ConditionalKind::Relevance,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ConditionalKind::Sasaki => "sasaki",
            ConditionalKind::Contrapositive => "contrapositive",
            ConditionalKind::Relevance => "relevance",
        }
    }
}

impl fmt::Display for ConditionalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ConditionalKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sasaki" | "s" => Ok(ConditionalKind::Sasaki),
            "contrapositive" | "c" => Ok(ConditionalKind::Contrapositive),
            "relevance" | "r" => Ok(ConditionalKind::Relevance),
            other => Err(Error::InvalidInput(format!(
                "unknown conditional kind `{other}`"
            ))),
        }
    }
}

/// Material conditional `P →_j Q` as a lattice polynomial:
///
/// * Sasaki: `P⊥ ∨ (P ∧ Q)`
/// * contrapositive Sasaki: `(P ∨ Q)⊥ ∨ Q`
/// * relevance: `(P∧Q) ∨ (P⊥∧Q) ∨ (P⊥∧Q⊥)`
pub fn conditional(
    kind: ConditionalKind,
    p: &Projection,
    q: &Projection,
    tol: &Tolerance,
) -> Result<Projection> {
    check_dims(p, q)?;
    match kind {
        ConditionalKind::Sasaki => join(&ortho(p), &meet(p, q, tol)?, tol),
        ConditionalKind::Contrapositive => join(&ortho(&join(p, q, tol)?), q, tol),
        ConditionalKind::Relevance => {
            let pc = ortho(p);
            let a = meet(p, q, tol)?;
            let b = meet(&pc, q, tol)?;
            let c = meet(&pc, &ortho(q), tol)?;
            join(&join(&a, &b, tol)?, &c, tol)
        }
    }
}

/// Range characterization of the conditionals, independent of the
/// lattice-polynomial route:
///
/// * Sasaki: projection onto `{ψ : Q⊥ P ψ = 0}`
/// * contrapositive Sasaki: onto `{ψ : P Q⊥ ψ = 0}`
/// * relevance: onto `{ψ : Q⊥ P ψ = P Q⊥ ψ = 0}`
pub fn conditional_range(
    kind: ConditionalKind,
    p: &Projection,
    q: &Projection,
    tol: &Tolerance,
) -> Result<Projection> {
    check_dims(p, q)?;
    let qc = ortho(q);
    let sasaki_op = qc.matrix() * p.matrix();
    let contra_op = p.matrix() * qc.matrix();
    let gram = |m: &ComplexMatrix| &m.adjoint() * m;
    let sum = match kind {
        ConditionalKind::Sasaki => gram(&sasaki_op),
        ConditionalKind::Contrapositive => gram(&contra_op),
        ConditionalKind::Relevance => &gram(&sasaki_op) + &gram(&contra_op),
    };
    Ok(Projection::trusted(nullspace_projection(&sum, tol)?))
}

/// Biconditional `(P →_j Q) ∧ (Q →_j P)`; the value does not depend on
/// `j` and coincides with `(P∧Q) ∨ (P⊥∧Q⊥)`.
pub fn biconditional(
    kind: ConditionalKind,
    p: &Projection,
    q: &Projection,
    tol: &Tolerance,
) -> Result<Projection> {
    let forward = conditional(kind, p, q, tol)?;
    let backward = conditional(kind, q, p, tol)?;
    meet(&forward, &backward, tol)
}

/// Projection onto `{ψ : Pψ = Qψ}`, the state-space characterization of
/// the biconditional.
pub fn equalizer(p: &Projection, q: &Projection, tol: &Tolerance) -> Result<Projection> {
    check_dims(p, q)?;
    let diff = p.matrix() - q.matrix();
    let gram = &diff.adjoint() * &diff;
    Ok(Projection::trusted(nullspace_projection(&gram, tol)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn plus_projection() -> Projection {
        let s = StateVector::normalized(vec![Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)])
            .unwrap();
        Projection::onto_state(&s)
    }

    #[test]
    fn ortho_basics() {
        let p = Projection::from_bits(&[true, false]);
        assert!(
            subspace_equal(&ortho(&p), &Projection::from_bits(&[false, true]), &tol()).unwrap()
        );
        let z = Projection::zero(3);
        assert!(ortho(&z).is_identity(&tol()));
        // Involution.
        assert!(subspace_equal(&ortho(&ortho(&p)), &p, &tol()).unwrap());
    }

    #[test]
    fn leq_examples() {
        let t = tol();
        let p = Projection::from_bits(&[true, false]);
        assert!(leq(&Projection::zero(2), &p, &t).unwrap());
        assert!(leq(&p, &Projection::identity(2), &t).unwrap());
        // rank-1 |+⟩⟨+| is not below diag(1,0).
        assert!(!leq(&plus_projection(), &p, &t).unwrap());
    }

    #[test]
    fn meet_examples() {
        let t = tol();
        let p = Projection::from_bits(&[true, false]);
        let q = Projection::from_bits(&[false, true]);
        assert!(subspace_equal(&meet(&p, &p, &t).unwrap(), &p, &t).unwrap());
        assert!(meet(&p, &q, &t).unwrap().is_zero(&t));
        // Distinct one-dimensional subspaces of C^2 intersect trivially.
        let m = meet(&p, &plus_projection(), &t).unwrap();
        assert!(m.is_zero(&t));
        // Cross-check against the iteration oracle.
        let it = meet_by_iteration(&p, &plus_projection(), &t).unwrap();
        assert!(subspace_equal(&m, &it, &t).unwrap());
    }

    #[test]
    fn join_examples() {
        let t = tol();
        let p = Projection::from_bits(&[true, false]);
        let q = Projection::from_bits(&[false, true]);
        assert!(subspace_equal(&join(&p, &Projection::zero(2), &t).unwrap(), &p, &t).unwrap());
        assert!(join(&p, &q, &t).unwrap().is_identity(&t));

        // span{e1} ∨ span{(e2+e3)/√2} in C^3 is rank 2.
        let e1 = Projection::from_bits(&[true, false, false]);
        let v = StateVector::normalized(vec![
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(1.0, 0.0),
        ])
        .unwrap();
        let w = Projection::onto_state(&v);
        let j = join(&e1, &w, &t).unwrap();
        assert_eq!(j.rank(), 2);
        let expect = Projection::onto_span(
            &[
                vec![
                    Complex64::new(1.0, 0.0),
                    Complex64::new(0.0, 0.0),
                    Complex64::new(0.0, 0.0),
                ],
                v.amplitudes().to_vec(),
            ],
            3,
        )
        .unwrap();
        assert!(subspace_equal(&j, &expect, &t).unwrap());
    }

    #[test]
    fn commutes_examples() {
        let t = tol();
        let p = Projection::from_bits(&[true, false]);
        assert!(commutes(&p, &ortho(&p), &t).unwrap());
        assert!(!commutes(&p, &plus_projection(), &t).unwrap());
        let a = Projection::from_bits(&[true, true, false]);
        let b = Projection::from_bits(&[true, false, false]);
        assert!(commutes(&a, &b, &t).unwrap());
    }

    #[test]
    fn commutator_pair_examples() {
        let t = tol();
        let a = Projection::from_bits(&[true, true, false]);
        let b = Projection::from_bits(&[true, false, false]);
        assert!(commutator_pair(&a, &b, &t).unwrap().is_identity(&t));

        let p = Projection::from_bits(&[true, false]);
        let q = plus_projection();
        assert!(commutator_pair(&p, &q, &t).unwrap().is_zero(&t));
    }

    #[test]
    fn commutator_pair_blockwise() {
        // dim 4: commuting on the first 2x2 block, non-commuting rank-1
        // pair on the second; the commutator is the first block.
        let t = tol();
        let p_block = ComplexMatrix::diagonal(&[1.0, 0.0]);
        let plus = plus_projection();
        let p = Projection::trusted(block_diag(&p_block, &p_block));
        let q = Projection::trusted(block_diag(&p_block, plus.matrix()));
        let com = commutator_pair(&p, &q, &t).unwrap();
        let expect = Projection::from_bits(&[true, true, false, false]);
        assert!(subspace_equal(&com, &expect, &t).unwrap());
    }

    fn block_diag(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
        let d = a.rows() + b.rows();
        let mut m = ComplexMatrix::zeros(d, d);
        for r in 0..a.rows() {
            for c in 0..a.cols() {
                m.set(r, c, a.get(r, c));
            }
        }
        for r in 0..b.rows() {
            for c in 0..b.cols() {
                m.set(a.rows() + r, a.cols() + c, b.get(r, c));
            }
        }
        m
    }

    #[test]
    fn commutator_set_examples() {
        let t = tol();
        let p = Projection::from_bits(&[true, false]);
        // Singleton: P ∨ P⊥ = 1.
        assert!(commutator_set(std::slice::from_ref(&p), &t)
            .unwrap()
            .is_identity(&t));
        // Two elements coincide with the pair commutator.
        let q = plus_projection();
        let set = commutator_set(&[p.clone(), q.clone()], &t).unwrap();
        let pair = commutator_pair(&p, &q, &t).unwrap();
        assert!(subspace_equal(&set, &pair, &t).unwrap());
        // Three commuting diagonals give 1.
        let a = Projection::from_bits(&[true, false, true]);
        let b = Projection::from_bits(&[true, true, false]);
        let c = Projection::from_bits(&[false, true, true]);
        assert!(commutator_set(&[a, b, c], &t).unwrap().is_identity(&t));
        assert!(matches!(commutator_set(&[], &t), Err(Error::EmptyFamily)));
    }

    #[test]
    fn commutator_set_cap() {
        // Seventeen pairwise distinct rank-1 projections exceed the
        // sign-assignment cap; the triple-product route has no cap.
        let t = tol();
        let family: Vec<Projection> = (0..17)
            .map(|k| {
                let angle = k as f64 * 0.13;
                let v = StateVector::normalized(vec![
                    Complex64::new(angle.cos(), 0.0),
                    Complex64::new(angle.sin(), 0.0),
                ])
                .unwrap();
                Projection::onto_state(&v)
            })
            .collect();
        assert!(matches!(
            commutator_set(&family, &t),
            Err(Error::SetTooLarge { len: 17, max: 16 })
        ));
        assert!(commutator_takeuti(&family, &t).unwrap().is_zero(&t));
    }

    #[test]
    fn commutator_takeuti_examples() {
        let t = tol();
        let a = Projection::from_bits(&[true, false, true]);
        let b = Projection::from_bits(&[true, true, false]);
        assert!(commutator_takeuti(&[a.clone(), b.clone()], &t)
            .unwrap()
            .is_identity(&t));

        let p = Projection::from_bits(&[true, false]);
        let q = plus_projection();
        assert!(commutator_takeuti(&[p.clone(), q.clone()], &t)
            .unwrap()
            .is_zero(&t));

        // Agreement with the sign-assignment route.
        let fam = [p, q];
        let lhs = commutator_takeuti(&fam, &t).unwrap();
        let rhs = commutator_set(&fam, &t).unwrap();
        assert!(subspace_equal(&lhs, &rhs, &t).unwrap());
    }

    #[test]
    fn conditional_examples() {
        let t = tol();
        let p = Projection::from_bits(&[true, false]);
        let q = plus_projection();
        // P ≤ Q gives 1 for every kind.
        for kind in ConditionalKind::ALL {
            let c = conditional(kind, &p, &Projection::identity(2), &t).unwrap();
            assert!(c.is_identity(&t));
        }
        // Commuting pair reduces to P⊥ ∨ Q.
        let a = Projection::from_bits(&[true, true, false]);
        let b = Projection::from_bits(&[true, false, false]);
        let classical = join(&ortho(&a), &b, &t).unwrap();
        for kind in ConditionalKind::ALL {
            let c = conditional(kind, &a, &b, &t).unwrap();
            assert!(subspace_equal(&c, &classical, &t).unwrap());
        }
        // Sasaki on the non-commuting C^2 pair: P∧Q = 0, so P⊥.
        let c = conditional(ConditionalKind::Sasaki, &p, &q, &t).unwrap();
        assert!(subspace_equal(&c, &Projection::from_bits(&[false, true]), &t).unwrap());
        let via_range = conditional_range(ConditionalKind::Sasaki, &p, &q, &t).unwrap();
        assert!(subspace_equal(&c, &via_range, &t).unwrap());
    }

    #[test]
    fn conditional_range_relevance_is_two_sided_meet() {
        let t = tol();
        let p = Projection::from_bits(&[true, false]);
        let q = plus_projection();
        let s = conditional_range(ConditionalKind::Sasaki, &p, &q, &t).unwrap();
        let c = conditional_range(ConditionalKind::Contrapositive, &p, &q, &t).unwrap();
        let r = conditional_range(ConditionalKind::Relevance, &p, &q, &t).unwrap();
        let both = meet(&s, &c, &t).unwrap();
        assert!(subspace_equal(&r, &both, &t).unwrap());
        // P ≤ Q gives 1.
        let top = conditional_range(ConditionalKind::Relevance, &p, &Projection::identity(2), &t)
            .unwrap();
        assert!(top.is_identity(&t));
    }

    #[test]
    fn biconditional_examples() {
        let t = tol();
        let p = Projection::from_bits(&[true, false]);
        let q = Projection::from_bits(&[false, true]);
        for kind in ConditionalKind::ALL {
            assert!(biconditional(kind, &p, &p, &t).unwrap().is_identity(&t));
            assert!(biconditional(kind, &p, &q, &t).unwrap().is_zero(&t));
        }
        // Kind-independence and the equalizer characterization.
        let r = plus_projection();
        let s0 = biconditional(ConditionalKind::Sasaki, &p, &r, &t).unwrap();
        for kind in [ConditionalKind::Contrapositive, ConditionalKind::Relevance] {
            let sk = biconditional(kind, &p, &r, &t).unwrap();
            assert!(subspace_equal(&s0, &sk, &t).unwrap());
        }
        let eq = equalizer(&p, &r, &t).unwrap();
        assert!(subspace_equal(&s0, &eq, &t).unwrap());
    }

    #[test]
    fn conditional_kind_parsing() {
        assert_eq!(
            "sasaki".parse::<ConditionalKind>().unwrap(),
            ConditionalKind::Sasaki
        );
        assert_eq!(
            "Contrapositive".parse::<ConditionalKind>().unwrap(),
            ConditionalKind::Contrapositive
        );
        assert!("boolean".parse::<ConditionalKind>().is_err());
    }
}
