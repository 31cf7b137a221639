//! Quantum reals: observables with finite spectral resolutions, the
//! correspondence between step resolutions of identity and Hermitian
//! operators, equality and order truth values, Borel function calculus,
//! and perfect-correlation checks.
//!
//! In finite dimension the cumulative spectral function `r ↦ E(r)` is a
//! right-continuous step function with at most `d` jumps, so a quantum
//! real stores just its jump points and level projections. Meets over
//! all rationals reduce to one representative per constancy interval.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::lattice::{
    conditional, join_all, leq, meet, meet_all, ortho, ConditionalKind, Projection,
};
use crate::linalg::{
    hermitian_eig, inner, nullspace_projection, vec_norm, Complex64, ComplexMatrix, StateVector,
    Tolerance,
};
use crate::universe::{CheckEmbedder, HfSet, QSet};

/// A Hermitian operator with its finite spectral resolution: ascending
/// distinct eigenvalues and the eigenprojections summing to the identity.
#[derive(Debug, Clone)]
pub struct Observable {
    dim: usize,
    matrix: ComplexMatrix,
    spectrum: Vec<f64>,
    eigenprojections: Vec<Projection>,
}

impl Observable {
    /// Diagonalize a Hermitian matrix. Eigenvalues closer than
    /// `eps_compare × scale` are merged into one spectral atom, because
    /// near-degenerate eigenprojections are only stable as a cluster.
    pub fn from_matrix(matrix: ComplexMatrix, tol: &Tolerance) -> Result<Self> {
        let eig = hermitian_eig(&matrix, tol)?;
        let d = matrix.rows();
        let scale = eig
            .eigenvalues
            .iter()
            .fold(1.0f64, |acc, &x| acc.max(x.abs()));
        let gap = tol.eps_compare * scale;

        let mut spectrum = Vec::new();
        let mut eigenprojections = Vec::new();
        let mut k = 0;
        while k < d {
            let mut end = k + 1;
            while end < d && eig.eigenvalues[end] - eig.eigenvalues[end - 1] <= gap {
                end += 1;
            }
            let cluster = &eig.eigenvalues[k..end];
            let value = cluster.iter().sum::<f64>() / cluster.len() as f64;
            let mut proj = ComplexMatrix::zeros(d, d);
            for col in k..end {
                let v = eig.eigenvector(col);
                for r in 0..d {
                    for c in 0..d {
                        let x = proj.get(r, c) + v[r] * v[c].conj();
                        proj.set(r, c, x);
                    }
                }
            }
            spectrum.push(value);
            eigenprojections.push(Projection::trusted(proj));
            k = end;
        }
        Ok(Observable {
            dim: d,
            matrix,
            spectrum,
            eigenprojections,
        })
    }

    /// The scalar operator `r·I`.
    pub fn scalar(r: f64, dim: usize) -> Self {
        Observable {
            dim,
            matrix: ComplexMatrix::identity(dim).scale(Complex::new(r, 0.0)),
            spectrum: vec![r],
            eigenprojections: vec![Projection::identity(dim)],
        }
    }

    /// Assemble from a known resolution: `Σ λ_k Π_k`.
    fn from_resolution(spectrum: Vec<f64>, eigenprojections: Vec<Projection>) -> Self {
        let dim = eigenprojections[0].dim();
        let mut matrix = ComplexMatrix::zeros(dim, dim);
        for (value, proj) in spectrum.iter().zip(eigenprojections.iter()) {
            matrix = &matrix + &proj.matrix().scale(Complex::new(*value, 0.0));
        }
        Observable {
            dim,
            matrix,
            spectrum,
            eigenprojections,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn spectrum(&self) -> &[f64] {
        &self.spectrum
    }

    pub fn eigenprojections(&self) -> &[Projection] {
        &self.eigenprojections
    }

    /// Cumulative spectral projection `E(t)` onto eigenvalues `≤ t`.
    pub fn spectral_le(&self, t: f64) -> Projection {
        let mut m = ComplexMatrix::zeros(self.dim, self.dim);
        for (value, proj) in self.spectrum.iter().zip(self.eigenprojections.iter()) {
            if *value <= t {
                m = &m + proj.matrix();
            }
        }
        Projection::trusted(m)
    }

    /// Spectral atom at `t` (zero if `t` lies off the spectrum).
    pub fn spectral_atom(&self, t: f64, tol: &Tolerance) -> Projection {
        let scale = self
            .spectrum
            .iter()
            .fold(1.0f64, |acc, &x| acc.max(x.abs()));
        for (value, proj) in self.spectrum.iter().zip(self.eigenprojections.iter()) {
            if (value - t).abs() <= tol.eps_compare * scale {
                return proj.clone();
            }
        }
        Projection::zero(self.dim)
    }

    /// Spectral projection of the half-open interval `(s, t]`.
    pub fn spectral_interval(&self, s: f64, t: f64) -> Projection {
        let mut m = ComplexMatrix::zeros(self.dim, self.dim);
        for (value, proj) in self.spectrum.iter().zip(self.eigenprojections.iter()) {
            if *value > s && *value <= t {
                m = &m + proj.matrix();
            }
        }
        Projection::trusted(m)
    }
}

/// A pointwise Borel function evaluated on a finite spectrum.
pub struct BorelFunctionSpec {
    f: Box<dyn Fn(f64) -> Complex64 + Send + Sync>,
}

impl BorelFunctionSpec {
    pub fn real(f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        BorelFunctionSpec {
            f: Box::new(move |x| Complex::new(f(x), 0.0)),
        }
    }

    pub fn complex(f: impl Fn(f64) -> Complex64 + Send + Sync + 'static) -> Self {
        BorelFunctionSpec { f: Box::new(f) }
    }

    /// Indicator of `(−∞, t]`.
    pub fn indicator_le(t: f64) -> Self {
        Self::real(move |x| if x <= t { 1.0 } else { 0.0 })
    }

    /// Indicator of the single point `{t}` (matched at tolerance `eps`).
    pub fn indicator_point(t: f64, eps: f64) -> Self {
        Self::real(move |x| if (x - t).abs() <= eps { 1.0 } else { 0.0 })
    }

    pub fn eval(&self, x: f64) -> Complex64 {
        (self.f)(x)
    }
}

/// Functional calculus `f(A) = Σ f(λ_k) Π_k` for real-valued `f`.
///
/// Atoms whose images collide (within `eps_compare` on the value scale)
/// are merged, so the result is again a valid resolution.
pub fn borel_apply(f: &BorelFunctionSpec, a: &Observable, tol: &Tolerance) -> Result<Observable> {
    let mut images: Vec<(f64, usize)> = Vec::with_capacity(a.spectrum().len());
    for (k, &x) in a.spectrum().iter().enumerate() {
        let y = f.eval(x);
        if y.im.abs() > tol.eps_compare {
            return Err(Error::NonRealOutput {
                point: x,
                imag: y.im,
            });
        }
        images.push((y.re, k));
    }
    images.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let scale = images.iter().fold(1.0f64, |acc, &(y, _)| acc.max(y.abs()));
    let gap = tol.eps_compare * scale;

    let mut spectrum = Vec::new();
    let mut projections = Vec::new();
    let mut i = 0;
    while i < images.len() {
        let mut end = i + 1;
        while end < images.len() && images[end].0 - images[end - 1].0 <= gap {
            end += 1;
        }
        let value = images[i..end].iter().map(|&(y, _)| y).sum::<f64>() / (end - i) as f64;
        let mut m = ComplexMatrix::zeros(a.dim(), a.dim());
        for &(_, k) in &images[i..end] {
            m = &m + a.eigenprojections()[k].matrix();
        }
        spectrum.push(value);
        projections.push(Projection::trusted(m));
        i = end;
    }
    Ok(Observable::from_resolution(spectrum, projections))
}

/// A quantum real: ascending jump points with an increasing chain of
/// level projections ending at the identity. `level_at(r)` is the value
/// of the associated cut at `r`; below the first jump it is zero.
#[derive(Debug, Clone)]
pub struct QuantumReal {
    dim: usize,
    jumps: Vec<f64>,
    levels: Vec<Projection>,
}

impl QuantumReal {
    pub fn new(jumps: Vec<f64>, levels: Vec<Projection>, tol: &Tolerance) -> Result<Self> {
        if jumps.is_empty() || jumps.len() != levels.len() {
            return Err(Error::InvalidInput(
                "a quantum real needs matching, non-empty jumps and levels".to_string(),
            ));
        }
        if jumps.iter().any(|j| !j.is_finite()) {
            return Err(Error::InvalidInput(
                "jump points must be finite".to_string(),
            ));
        }
        for k in 1..jumps.len() {
            if jumps[k] <= jumps[k - 1] {
                return Err(Error::InvalidInput(format!(
                    "jump points must be strictly ascending (index {k})"
                )));
            }
        }
        let dim = levels[0].dim();
        for (k, level) in levels.iter().enumerate() {
            if level.dim() != dim {
                return Err(Error::DimMismatch {
                    left: level.dim(),
                    right: dim,
                });
            }
            if k > 0 && !leq(&levels[k - 1], level, tol)? {
                return Err(Error::ChainNotMonotone { index: k });
            }
        }
        let top = levels.last().expect("non-empty");
        let residual = top.matrix().distance(&ComplexMatrix::identity(dim));
        if residual > tol.eps_compare {
            return Err(Error::ChainTopNotIdentity { residual });
        }
        Ok(QuantumReal { dim, jumps, levels })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn jumps(&self) -> &[f64] {
        &self.jumps
    }

    pub fn levels(&self) -> &[Projection] {
        &self.levels
    }

    /// The cut value at `r`: the level of the last jump `≤ r`.
    pub fn level_at(&self, r: f64) -> Projection {
        let mut out = Projection::zero(self.dim);
        for (jump, level) in self.jumps.iter().zip(self.levels.iter()) {
            if *jump <= r {
                out = level.clone();
            } else {
                break;
            }
        }
        out
    }

    /// The induced universe element on a finite grid: grid point `k` is
    /// coded by the check-embedding of the `k`-th Ackermann set (rank
    /// stays tiny however long the grid), weighted by the level at that
    /// point.
    pub fn induced_qset(&self, grid: &[f64]) -> Result<QSet> {
        let mut embedder = CheckEmbedder::new(self.dim);
        let mut entries = Vec::with_capacity(grid.len());
        for (k, &r) in grid.iter().enumerate() {
            let code = embedder.embed(&HfSet::ackermann(k))?;
            entries.push((code, self.level_at(r)));
        }
        QSet::new(self.dim, entries)
    }
}

/// Merged jump grid of two quantum reals: one representative per
/// constancy interval of the pair.
pub fn merged_grid(u: &QuantumReal, v: &QuantumReal) -> Vec<f64> {
    let mut grid: Vec<f64> = u.jumps().iter().chain(v.jumps().iter()).copied().collect();
    grid.sort_by(|a, b| a.partial_cmp(b).unwrap());
    grid.dedup();
    grid
}

/// Observable → quantum real: jumps at the spectrum, cumulative levels.
pub fn observable_to_real(a: &Observable) -> QuantumReal {
    let mut levels = Vec::with_capacity(a.spectrum().len());
    let mut acc = ComplexMatrix::zeros(a.dim(), a.dim());
    for proj in a.eigenprojections() {
        acc = &acc + proj.matrix();
        levels.push(Projection::trusted(acc.clone()));
    }
    QuantumReal {
        dim: a.dim(),
        jumps: a.spectrum().to_vec(),
        levels,
    }
}

/// Quantum real → observable: atoms are consecutive level differences.
pub fn real_to_observable(u: &QuantumReal) -> Observable {
    let dim = u.dim();
    let mut projections = Vec::with_capacity(u.levels().len());
    let mut previous = ComplexMatrix::zeros(dim, dim);
    for level in u.levels() {
        let atom = level.matrix() - &previous;
        previous = level.matrix().clone();
        projections.push(Projection::trusted(atom));
    }
    Observable::from_resolution(u.jumps().to_vec(), projections)
}

/// An unvalidated step chain: a candidate cut that may fail to be a
/// quantum real. `base` is the constant value below the first jump.
#[derive(Debug, Clone)]
pub struct StepChain {
    pub base: Projection,
    pub jumps: Vec<f64>,
    pub levels: Vec<Projection>,
}

impl StepChain {
    pub fn from_real(u: &QuantumReal) -> Self {
        StepChain {
            base: Projection::zero(u.dim()),
            jumps: u.jumps().to_vec(),
            levels: u.levels().to_vec(),
        }
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }
}

/// Truth value of the reality predicate for a candidate step chain:
///
/// `⋁_y u(y̌) ∧ (⋀_y u(y̌))⊥ ∧ ⋀_y (u(y̌) ⇔ ⋀_{y<z} u(ž))`
///
/// evaluated over one representative per constancy interval. The value
/// is the identity exactly when the chain is a quantum real, and does
/// not depend on the conditional kind (the biconditional is common to
/// all three).
pub fn reality_truth_value(
    chain: &StepChain,
    _j: ConditionalKind,
    tol: &Tolerance,
) -> Result<Projection> {
    let dim = chain.dim();
    let mut values = vec![chain.base.clone()];
    values.extend(chain.levels.iter().cloned());

    let reaches_top = join_all(values.iter(), dim, tol)?;
    let drains = ortho(&meet_all(values.iter(), dim, tol)?);

    // Right continuity: at each interval, the value equals the meet of
    // all later values (the kind-independent biconditional).
    let mut continuity = Projection::identity(dim);
    for k in 0..values.len() {
        let tail = if k == 0 {
            // Below the first jump the strict upper tail includes the
            // base interval itself.
            meet_all(values.iter(), dim, tol)?
        } else {
            meet_all(values.iter().skip(k), dim, tol)?
        };
        let same = crate::lattice::biconditional(ConditionalKind::Sasaki, &values[k], &tail, tol)?;
        continuity = meet(&continuity, &same, tol)?;
    }

    meet(&meet(&reaches_top, &drains, tol)?, &continuity, tol)
}

/// `[[u = v]]`: projection onto the states on which every level of `u`
/// and `v` acts identically; independent of the conditional kind.
pub fn equality_truth_value(
    u: &QuantumReal,
    v: &QuantumReal,
    tol: &Tolerance,
) -> Result<Projection> {
    if u.dim() != v.dim() {
        return Err(Error::DimMismatch {
            left: u.dim(),
            right: v.dim(),
        });
    }
    let dim = u.dim();
    let mut sum = ComplexMatrix::zeros(dim, dim);
    for r in merged_grid(u, v) {
        let diff = u.level_at(r).matrix() - v.level_at(r).matrix();
        sum = &sum + &(&diff.adjoint() * &diff);
    }
    Ok(Projection::trusted(nullspace_projection(&sum, tol)?))
}

/// The four equivalent formulations of equality at a state.
#[derive(Debug, Clone)]
pub struct EqualityEquivalents {
    /// ψ lies in the range of `[[u = v]]`.
    pub in_truth_range: bool,
    /// `u(x̌)ψ = v(x̌)ψ` for all grid points.
    pub levels_agree: bool,
    /// `u(x̌) v(y̌) ψ = v(min(x,y)̌) ψ` for all grid pairs.
    pub product_rule: bool,
    /// `⟨u(x̌)ψ, v(y̌)ψ⟩ = ‖v(min(x,y)̌)ψ‖²` for all grid pairs.
    pub inner_product_rule: bool,
}

impl EqualityEquivalents {
    pub fn all_agree(&self) -> bool {
        let first = self.in_truth_range;
        self.levels_agree == first && self.product_rule == first && self.inner_product_rule == first
    }
}

/// Evaluate the four equality conditions for `(u, v, ψ)`.
pub fn equality_equivalents(
    u: &QuantumReal,
    v: &QuantumReal,
    psi: &StateVector,
    tol: &Tolerance,
) -> Result<EqualityEquivalents> {
    if u.dim() != v.dim() || psi.dim() != u.dim() {
        return Err(Error::DimMismatch {
            left: u.dim(),
            right: psi.dim(),
        });
    }
    let eps = tol.eps_compare;
    let mut grid = merged_grid(u, v);
    // One representative below every jump, where both cuts vanish.
    grid.insert(0, grid[0] - 1.0);

    let truth = equality_truth_value(u, v, tol)?;
    let in_truth_range = truth.membership_residual(psi)? <= eps;

    let amps = psi.amplitudes();
    let mut levels_agree = true;
    for &r in &grid {
        let du = u.level_at(r).apply(amps);
        let dv = v.level_at(r).apply(amps);
        let diff: Vec<Complex64> = du.iter().zip(dv.iter()).map(|(a, b)| a - b).collect();
        if vec_norm(&diff) > eps {
            levels_agree = false;
            break;
        }
    }

    let mut product_rule = true;
    let mut inner_product_rule = true;
    for &x in &grid {
        for &y in &grid {
            let min = x.min(y);
            let vy_psi = v.level_at(y).apply(amps);
            let ux_vy_psi = u.level_at(x).apply(&vy_psi);
            let vmin_psi = v.level_at(min).apply(amps);
            let diff: Vec<Complex64> = ux_vy_psi
                .iter()
                .zip(vmin_psi.iter())
                .map(|(a, b)| a - b)
                .collect();
            if vec_norm(&diff) > eps {
                product_rule = false;
            }
            let ux_psi = u.level_at(x).apply(amps);
            let lhs = inner(&ux_psi, &vy_psi);
            let rhs = vec_norm(&vmin_psi).powi(2);
            if (lhs - Complex::new(rhs, 0.0)).norm() > eps {
                inner_product_rule = false;
            }
        }
    }

    Ok(EqualityEquivalents {
        in_truth_range,
        levels_agree,
        product_rule,
        inner_product_rule,
    })
}

/// The five equivalent formulations of perfect correlation at a state.
#[derive(Debug, Clone)]
pub struct PerfectCorrelation {
    /// ψ lies in the range of `[[Ã = B̃]]`.
    pub in_truth_range: bool,
    /// Cumulative spectral actions agree on ψ over the merged grid.
    pub cumulative_agree: bool,
    /// `f(A)ψ = f(B)ψ` for the generating family of atom indicators.
    pub indicators_agree: bool,
    /// Disjoint spectral atoms are orthogonal on ψ.
    pub disjoint_orthogonal: bool,
    /// The joint distribution exists (atomwise commutators kill ψ) and
    /// puts mass 1 on the diagonal.
    pub joint_diagonal: bool,
}

impl PerfectCorrelation {
    pub fn all_agree(&self) -> bool {
        let first = self.in_truth_range;
        self.cumulative_agree == first
            && self.indicators_agree == first
            && self.disjoint_orthogonal == first
            && self.joint_diagonal == first
    }

    pub fn holds(&self) -> bool {
        self.in_truth_range
    }
}

/// Merge the spectra of two observables into disjoint atom values.
fn merged_atoms(a: &Observable, b: &Observable, tol: &Tolerance) -> Vec<f64> {
    let mut points: Vec<f64> = a
        .spectrum()
        .iter()
        .chain(b.spectrum().iter())
        .copied()
        .collect();
    points.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let scale = points.iter().fold(1.0f64, |acc, &x| acc.max(x.abs()));
    let mut out: Vec<f64> = Vec::new();
    for p in points {
        if out
            .last()
            .is_none_or(|&last| p - last > tol.eps_compare * scale)
        {
            out.push(p);
        }
    }
    out
}

/// Evaluate the five perfect-correlation conditions for `(A, B, ψ)`.
pub fn perfect_correlation(
    a: &Observable,
    b: &Observable,
    psi: &StateVector,
    tol: &Tolerance,
) -> Result<PerfectCorrelation> {
    if a.dim() != b.dim() || psi.dim() != a.dim() {
        return Err(Error::DimMismatch {
            left: a.dim(),
            right: psi.dim(),
        });
    }
    let eps = tol.eps_compare;
    let amps = psi.amplitudes();
    let ua = observable_to_real(a);
    let ub = observable_to_real(b);

    let truth = equality_truth_value(&ua, &ub, tol)?;
    let in_truth_range = truth.membership_residual(psi)? <= eps;

    let mut cumulative_agree = true;
    for r in merged_grid(&ua, &ub) {
        let da = a.spectral_le(r).apply(amps);
        let db = b.spectral_le(r).apply(amps);
        let diff: Vec<Complex64> = da.iter().zip(db.iter()).map(|(x, y)| x - y).collect();
        if vec_norm(&diff) > eps {
            cumulative_agree = false;
            break;
        }
    }

    let atoms = merged_atoms(a, b, tol);
    let atom_a: Vec<Projection> = atoms.iter().map(|&x| a.spectral_atom(x, tol)).collect();
    let atom_b: Vec<Projection> = atoms.iter().map(|&x| b.spectral_atom(x, tol)).collect();

    let mut indicators_agree = true;
    for (pa, pb) in atom_a.iter().zip(atom_b.iter()) {
        let da = pa.apply(amps);
        let db = pb.apply(amps);
        let diff: Vec<Complex64> = da.iter().zip(db.iter()).map(|(x, y)| x - y).collect();
        if vec_norm(&diff) > eps {
            indicators_agree = false;
            break;
        }
    }

    let mut disjoint_orthogonal = true;
    for (i, pa) in atom_a.iter().enumerate() {
        for (j, pb) in atom_b.iter().enumerate() {
            if i == j {
                continue;
            }
            let overlap = inner(&pa.apply(amps), &pb.apply(amps)).norm();
            if overlap > eps {
                disjoint_orthogonal = false;
            }
        }
    }

    // Joint distribution: Gudder's condition atom by atom, then mass 1
    // on the diagonal of μ(Δ×Γ) = ⟨ψ, (E^A(Δ) ∧ E^B(Γ)) ψ⟩.
    let mut joint_exists = true;
    for pa in &atom_a {
        for pb in &atom_b {
            let comm = &(pa.matrix() * pb.matrix()) - &(pb.matrix() * pa.matrix());
            if vec_norm(&comm.apply(amps)) > eps {
                joint_exists = false;
            }
        }
    }
    let joint_diagonal = if joint_exists {
        let mut diagonal_mass = 0.0;
        for (pa, pb) in atom_a.iter().zip(atom_b.iter()) {
            let both = meet(pa, pb, tol)?;
            diagonal_mass += inner(amps, &both.apply(amps)).re;
        }
        (diagonal_mass - 1.0).abs() <= 1e-9
    } else {
        false
    };

    Ok(PerfectCorrelation {
        in_truth_range,
        cumulative_agree,
        indicators_agree,
        disjoint_orthogonal,
        joint_diagonal,
    })
}

/// Spectral order `X ≼ Y`: `E^Y(λ) ≤ E^X(λ)` at every grid point.
pub fn spectral_order_leq(x: &Observable, y: &Observable, tol: &Tolerance) -> Result<bool> {
    if x.dim() != y.dim() {
        return Err(Error::DimMismatch {
            left: x.dim(),
            right: y.dim(),
        });
    }
    let mut grid: Vec<f64> = x
        .spectrum()
        .iter()
        .chain(y.spectrum().iter())
        .copied()
        .collect();
    grid.sort_by(|a, b| a.partial_cmp(b).unwrap());
    grid.dedup();
    for r in grid {
        if !leq(&y.spectral_le(r), &x.spectral_le(r), tol)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Order truth value `[[X̃ ≤ Ỹ]]_j`: the meet over the merged grid of
/// `E^Y(r) →_j E^X(r)`.
pub fn order_truth_value(
    x: &Observable,
    y: &Observable,
    j: ConditionalKind,
    tol: &Tolerance,
) -> Result<Projection> {
    if x.dim() != y.dim() {
        return Err(Error::DimMismatch {
            left: x.dim(),
            right: y.dim(),
        });
    }
    let mut grid: Vec<f64> = x
        .spectrum()
        .iter()
        .chain(y.spectrum().iter())
        .copied()
        .collect();
    grid.sort_by(|a, b| a.partial_cmp(b).unwrap());
    grid.dedup();
    let mut acc = Projection::identity(x.dim());
    for r in grid {
        let step = conditional(j, &y.spectral_le(r), &x.spectral_le(r), tol)?;
        acc = meet(&acc, &step, tol)?;
    }
    Ok(acc)
}

/// Report of the six spectral-calculus identities for `(X, s, t)`, each
/// checked for all three conditionals where a conditional enters.
#[derive(Debug, Clone)]
pub struct QBorelReport {
    pub items: [bool; 6],
    pub residuals: [f64; 6],
}

impl QBorelReport {
    pub fn all_hold(&self) -> bool {
        self.items.iter().all(|&b| b)
    }
}

/// Verify the scalar/threshold identities relating truth values to
/// spectral projections, for `s < t`:
///
/// 1. `[[ť ∈ s̃]] = E^{s·I}(t)`
/// 2. `[[s̃ ≤ t̃]]_j = E^{s·I}(t)`
/// 3. `[[X̃ ≤ t̃]]_j = E^X(t)`
/// 4. `[[t̃ < X̃]]_j = I − E^X(t)`
/// 5. `[[s̃ < X̃ ≤ t̃]]_j = E^X(t) − E^X(s)`
/// 6. `[[X̃ = t̃]] = E^X({t})`
pub fn qborel_identities(x: &Observable, s: f64, t: f64, tol: &Tolerance) -> Result<QBorelReport> {
    if s.partial_cmp(&t) != Some(std::cmp::Ordering::Less) {
        return Err(Error::PreconditionViolated(format!(
            "thresholds must satisfy s < t (got s={s}, t={t})"
        )));
    }
    let dim = x.dim();
    let scalar_s = Observable::scalar(s, dim);
    let scalar_t = Observable::scalar(t, dim);
    let mut items = [true; 6];
    let mut residuals = [0.0f64; 6];
    let track = |slot: usize,
                 lhs: &Projection,
                 rhs: &Projection,
                 items: &mut [bool; 6],
                 residuals: &mut [f64; 6]| {
        let d = lhs.matrix().distance(rhs.matrix());
        residuals[slot] = residuals[slot].max(d);
        if d > tol.eps_compare {
            items[slot] = false;
        }
    };

    // (1) Membership of a check-rational in a scalar cut, through the
    // induced universe element.
    let us = observable_to_real(&scalar_s);
    let grid = [s, t];
    let qset_s = us.induced_qset(&grid)?;
    let mut embedder = CheckEmbedder::new(dim);
    let code_t = embedder.embed(&HfSet::ackermann(1))?;
    // The induced element codes grid point k by the k-th Ackermann set,
    // so ť is code 1; use a structurally equal copy to exercise the
    // rank recursion.
    for j in ConditionalKind::ALL {
        let membership = crate::universe::truth_member(&code_t, &qset_s, j, tol)?;
        let expect = scalar_s.spectral_le(t);
        track(0, &membership, &expect, &mut items, &mut residuals);
    }

    // (2)–(5): order truth values against spectral projections.
    for j in ConditionalKind::ALL {
        let scalars = order_truth_value(&scalar_s, &scalar_t, j, tol)?;
        track(
            1,
            &scalars,
            &scalar_s.spectral_le(t),
            &mut items,
            &mut residuals,
        );

        let le_t = order_truth_value(x, &scalar_t, j, tol)?;
        track(2, &le_t, &x.spectral_le(t), &mut items, &mut residuals);

        let gt_t = ortho(&le_t);
        track(
            3,
            &gt_t,
            &ortho(&x.spectral_le(t)),
            &mut items,
            &mut residuals,
        );

        let le_s = order_truth_value(x, &scalar_s, j, tol)?;
        let between = meet(&ortho(&le_s), &le_t, tol)?;
        track(
            4,
            &between,
            &x.spectral_interval(s, t),
            &mut items,
            &mut residuals,
        );
    }

    // (6) Equality with a scalar picks out the spectral atom.
    let ux = observable_to_real(x);
    let ut = observable_to_real(&scalar_t);
    let eq = equality_truth_value(&ux, &ut, tol)?;
    track(5, &eq, &x.spectral_atom(t, tol), &mut items, &mut residuals);

    Ok(QBorelReport { items, residuals })
}
