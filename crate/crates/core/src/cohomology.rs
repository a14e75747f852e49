//! 1-cocycles of `G = SL(n+1, K)` with values in `A*`, the central
//! extensions they define, complements and their cocycles, and the
//! derivation cocycles `f_d(g)(a) = Tr(g^-1 d(g) a)`.
//!
//! `G` acts on `A*` by `(alpha . g)(a) = alpha(g a g^-1)`. A cocycle
//! satisfies `f(g1 g2) = f(g1) . g2 + f(g2)`; the extension it defines is
//! `K x A` with `(t, a) . g = (t + phi(a, g), a . g)` where
//! `phi(a, g) = f(g^-1)(a)`.

use rand::Rng;
use serde::Serialize;
use serde_json::json;

use crate::embeddings::{adjoint_dim, TracelessMatrix};
use crate::error::{Error, Result};
use crate::exec;
use crate::field::{Derivation, FieldElem, FieldSpec};
use crate::group::{adjoint, apply_derivation, sample_element, GroupElem};
use crate::linalg::{dot, InconsistencyCertificate, Matrix, Solution, Vector};
use crate::report::{Report, RunConfig};

/// An element of `A*`, held as its values on the basis of
/// [`TracelessMatrix::basis`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DualVector {
    field: FieldSpec,
    n: usize,
    values: Vector,
}

impl DualVector {
    pub fn zero(field: FieldSpec, n: usize) -> Self {
        DualVector {
            field,
            n,
            values: vec![field.zero(); adjoint_dim(n)],
        }
    }

    pub fn from_values(field: FieldSpec, n: usize, values: Vector) -> Result<Self> {
        if values.len() != adjoint_dim(n) {
            return Err(Error::DimensionMismatch(format!(
                "{} values for a space of dimension {}",
                values.len(),
                adjoint_dim(n)
            )));
        }
        Ok(DualVector { field, n, values })
    }

    /// The functional `a -> Tr(b a)`. Depends on `b` only modulo scalar
    /// matrices.
    pub fn from_matrix(b: &Matrix) -> Result<Self> {
        if b.rows() != b.cols() {
            return Err(Error::DimensionMismatch("pairing needs a square matrix".into()));
        }
        let field = b.field();
        let n = b.rows() - 1;
        let size = n + 1;
        let mut values = Vec::with_capacity(adjoint_dim(n));
        for i in 0..size {
            for j in 0..size {
                if i != j {
                    values.push(b[(j, i)].clone());
                }
            }
        }
        for i in 0..n {
            values.push(&b[(i, i)] - &b[(n, n)]);
        }
        Ok(DualVector { field, n, values })
    }

    /// A matrix `b` with `Tr(b a) = self(a)`, zero in the last diagonal
    /// slot.
    pub fn to_matrix(&self) -> Matrix {
        let size = self.n + 1;
        let mut m = Matrix::zeros(self.field, size, size);
        let mut it = self.values.iter();
        for i in 0..size {
            for j in 0..size {
                if i != j {
                    m[(j, i)] = it.next().expect("length invariant").clone();
                }
            }
        }
        for i in 0..self.n {
            m[(i, i)] = it.next().expect("length invariant").clone();
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[FieldElem] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(FieldElem::is_zero)
    }

    pub fn eval(&self, a: &TracelessMatrix) -> FieldElem {
        dot(&self.values, &a.coords())
    }

    pub fn add(&self, other: &DualVector) -> DualVector {
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        DualVector { values, ..*self }
    }

    pub fn sub(&self, other: &DualVector) -> DualVector {
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect();
        DualVector { values, ..*self }
    }

    pub fn scale(&self, k: &FieldElem) -> DualVector {
        let values = self.values.iter().map(|a| a * k).collect();
        DualVector { values, ..*self }
    }

    pub fn neg(&self) -> DualVector {
        self.scale(&-self.field.one())
    }

    /// `(alpha . g)(a) = alpha(g a g^-1)`.
    pub fn act(&self, g: &GroupElem) -> Result<DualVector> {
        let b = g.inverse_matrix().mul(&self.to_matrix())?.mul(g.matrix())?;
        DualVector::from_matrix(&b)
    }

    pub fn sample<R: Rng + ?Sized>(
        field: FieldSpec,
        n: usize,
        rng: &mut R,
        degree_bound: usize,
    ) -> Self {
        let values = (0..adjoint_dim(n)).map(|_| field.sample(rng, degree_bound)).collect();
        DualVector { field, n, values }
    }
}

impl Serialize for DualVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.values.serialize(s)
    }
}

/// A 1-cochain `G -> A*`.
#[derive(Clone, Debug, PartialEq)]
pub enum Cocycle1 {
    FromDerivation(Derivation),
    Coboundary(DualVector),
    /// Values on finitely many elements; evaluating elsewhere is an error.
    TableBacked(Vec<(GroupElem, DualVector)>),
    Sum(Box<Cocycle1>, Box<Cocycle1>),
    Scaled(FieldElem, Box<Cocycle1>),
    /// `f_X` for the complement `X = {(mu(a), a)}` of an extension.
    FromComplement {
        extension: Box<CentralExtension>,
        mu: DualVector,
    },
}

impl Cocycle1 {
    pub fn zero(field: FieldSpec, n: usize) -> Self {
        Cocycle1::Coboundary(DualVector::zero(field, n))
    }

    pub fn evaluate(&self, g: &GroupElem) -> Result<DualVector> {
        match self {
            Cocycle1::FromDerivation(d) => {
                let b = g.inverse_matrix().mul(&apply_derivation(g.matrix(), d))?;
                DualVector::from_matrix(&b)
            }
            Cocycle1::Coboundary(alpha) => Ok(alpha.act(g)?.sub(alpha)),
            Cocycle1::TableBacked(table) => table
                .iter()
                .find(|(h, _)| h == g)
                .map(|(_, v)| v.clone())
                .ok_or(Error::NotInTable),
            Cocycle1::Sum(a, b) => Ok(a.evaluate(g)?.add(&b.evaluate(g)?)),
            Cocycle1::Scaled(k, f) => Ok(f.evaluate(g)?.scale(k)),
            Cocycle1::FromComplement { extension, mu } => {
                let ginv = g.inverse();
                let values = TracelessMatrix::basis(g.field(), g.n())
                    .iter()
                    .map(|e| complement_defect(extension, mu, e, &ginv))
                    .collect::<Result<_>>()?;
                DualVector::from_values(g.field(), g.n(), values)
            }
        }
    }

    /// Whether a non-null derivation enters the cocycle, in which case the
    /// diagonal witness pair separates it from coboundaries.
    pub fn involves_derivation(&self) -> bool {
        match self {
            Cocycle1::FromDerivation(d) => !d.is_null(),
            Cocycle1::Coboundary(_) | Cocycle1::TableBacked(_) => false,
            Cocycle1::Sum(a, b) => a.involves_derivation() || b.involves_derivation(),
            Cocycle1::Scaled(k, f) => !k.is_zero() && f.involves_derivation(),
            Cocycle1::FromComplement { extension, .. } => extension.cocycle.involves_derivation(),
        }
    }

    pub fn add(&self, other: &Cocycle1) -> Cocycle1 {
        Cocycle1::Sum(Box::new(self.clone()), Box::new(other.clone()))
    }

    pub fn scale(&self, k: &FieldElem) -> Cocycle1 {
        Cocycle1::Scaled(k.clone(), Box::new(self.clone()))
    }

    pub fn describe(&self) -> serde_json::Value {
        match self {
            Cocycle1::FromDerivation(d) => json!({"kind": "from_derivation", "derivation": d.coeffs()}),
            Cocycle1::Coboundary(a) => json!({"kind": "coboundary", "alpha": a}),
            Cocycle1::TableBacked(t) => json!({"kind": "table_backed", "entries": t.len()}),
            Cocycle1::Sum(a, b) => json!({"kind": "sum", "terms": [a.describe(), b.describe()]}),
            Cocycle1::Scaled(k, f) => json!({"kind": "scaled", "factor": k, "cocycle": f.describe()}),
            Cocycle1::FromComplement { extension, mu } => json!({
                "kind": "from_complement",
                "extension": extension.cocycle.describe(),
                "mu": mu,
            }),
        }
    }
}

/// `f_d` for an arbitrary derivation of `K`.
pub fn cocycle_from_derivation(d: &Derivation) -> Result<Cocycle1> {
    if d.field().derivation_rank() == 0 {
        return Err(Error::NoDerivations(d.field().to_string()));
    }
    Ok(Cocycle1::FromDerivation(d.clone()))
}

/// `f_{d_omega}` for a basis derivation.
pub fn cocycle_from_basis(field: FieldSpec, omega: usize) -> Result<Cocycle1> {
    cocycle_from_derivation(&Derivation::basis(field, omega)?)
}

/// `g -> alpha . g - alpha`.
pub fn coboundary(alpha: &DualVector) -> Cocycle1 {
    Cocycle1::Coboundary(alpha.clone())
}

/// The extension `K x A` defined by a cocycle.
#[derive(Clone, Debug, PartialEq)]
pub struct CentralExtension {
    pub cocycle: Cocycle1,
}

/// An element `(t, a)` of the extension's carrier.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtElem {
    pub t: FieldElem,
    pub a: TracelessMatrix,
}

impl CentralExtension {
    /// `phi(a, g) = f(g^-1)(a)`.
    pub fn phi(&self, a: &TracelessMatrix, g: &GroupElem) -> Result<FieldElem> {
        Ok(self.cocycle.evaluate(&g.inverse())?.eval(a))
    }

    pub fn act(&self, x: &ExtElem, g: &GroupElem) -> Result<ExtElem> {
        Ok(ExtElem {
            t: &x.t + &self.phi(&x.a, g)?,
            a: adjoint(g, &x.a)?,
        })
    }
}

pub fn build_extension(f: &Cocycle1) -> CentralExtension {
    CentralExtension { cocycle: f.clone() }
}

/// A linear complement to the kernel line `K x {0}`, always a graph
/// `{(mu(a), a)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complement {
    pub mu: DualVector,
}

impl Complement {
    /// `{0} x A`.
    pub fn standard(field: FieldSpec, n: usize) -> Self {
        Complement {
            mu: DualVector::zero(field, n),
        }
    }

    pub fn graph(mu: DualVector) -> Self {
        Complement { mu }
    }

    /// The complement spanned by the given elements; they must project
    /// onto a basis of `A`.
    pub fn from_vectors(field: FieldSpec, n: usize, span: &[ExtElem]) -> Result<Self> {
        if span.len() != adjoint_dim(n) {
            return Err(Error::NotAComplement);
        }
        let p = Matrix::from_rows(field, span.iter().map(|x| x.a.coords()).collect())?;
        if p.rank() != adjoint_dim(n) {
            return Err(Error::NotAComplement);
        }
        // mu(a_k) = t_k, so the values on the basis are P^-1 t
        let t: Vector = span.iter().map(|x| x.t.clone()).collect();
        let values = p.inverse()?.mul_vec(&t)?;
        Ok(Complement {
            mu: DualVector::from_values(field, n, values)?,
        })
    }

    pub fn contains(&self, x: &ExtElem) -> bool {
        self.mu.eval(&x.a) == x.t
    }
}

/// `w_X(v, g) = phi(v, g) + mu(v) - mu(v . g)`.
fn complement_defect(
    ext: &CentralExtension,
    mu: &DualVector,
    v: &TracelessMatrix,
    g: &GroupElem,
) -> Result<FieldElem> {
    let vg = adjoint(g, v)?;
    Ok(&(&ext.phi(v, g)? + &mu.eval(v)) - &mu.eval(&vg))
}

pub fn complement_cocycle_value(
    ext: &CentralExtension,
    x: &Complement,
    v: &TracelessMatrix,
    g: &GroupElem,
) -> Result<FieldElem> {
    complement_defect(ext, &x.mu, v, g)
}

/// `f_X(g)(v) = w_X(v, g^-1)`.
pub fn extract_cocycle(ext: &CentralExtension, x: &Complement) -> Cocycle1 {
    Cocycle1::FromComplement {
        extension: Box::new(ext.clone()),
        mu: x.mu.clone(),
    }
}

/// The pair `g = diag(t, t^-1, 1, ...)`, `g' = diag(1, t, t^-1, 1, ...)`.
pub fn witness_pair(field: FieldSpec, n: usize, t: &FieldElem) -> Result<(GroupElem, GroupElem)> {
    if n < 2 {
        return Err(Error::RequiresN3(n));
    }
    let tinv = t.inv()?;
    let mut d = vec![field.one(); n + 1];
    d[0] = t.clone();
    d[1] = tinv.clone();
    let g = GroupElem::new(Matrix::diagonal(field, &d))?;
    let mut d = vec![field.one(); n + 1];
    d[1] = t.clone();
    d[2] = tinv;
    let gp = GroupElem::new(Matrix::diagonal(field, &d))?;
    Ok((g, gp))
}

/// The element the claim is stated for: the first derivation-basis
/// element, or `2` when there is none.
pub fn witness_parameter(field: FieldSpec) -> FieldElem {
    field
        .derivation_basis()
        .elements
        .first()
        .cloned()
        .unwrap_or_else(|| field.from_i64(2))
}

/// `(a, g)` with `a . g = a` but `phi(a, g) = f(g^-1)(a) != 0` for any
/// cocycle involving a non-null derivation: `a = g - g'`.
pub fn witness_equation(field: FieldSpec, n: usize) -> Result<(TracelessMatrix, GroupElem)> {
    let t = witness_parameter(field);
    let (g, gp) = witness_pair(field, n, &t)?;
    let a = TracelessMatrix::new(g.matrix().sub(gp.matrix())?)?;
    Ok((a, g))
}

/// Exact values behind the non-coboundary argument.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimWitness {
    pub t: FieldElem,
    pub d_t: FieldElem,
    pub commute: bool,
    pub equal_traces: bool,
    /// `Tr(g^-1 d(g) g)`
    pub left: FieldElem,
    /// `Tr(g^-1 d(g) g')`
    pub right: FieldElem,
    pub expected_left: FieldElem,
    pub expected_right: FieldElem,
    pub difference: FieldElem,
    pub pass: bool,
}

pub fn claim_witness(field: FieldSpec, n: usize, d: &Derivation) -> Result<ClaimWitness> {
    if d.field() != field {
        return Err(Error::FieldMismatch(field.to_string(), d.field().to_string()));
    }
    let t = witness_parameter(field);
    let (g, gp) = witness_pair(field, n, &t)?;
    let commute = g.mul(&gp)? == gp.mul(&g)?;
    let equal_traces = g.matrix().trace()? == gp.matrix().trace()?;
    let b = g.inverse_matrix().mul(&apply_derivation(g.matrix(), d))?;
    let left = b.trace_of_product(g.matrix())?;
    let right = b.trace_of_product(gp.matrix())?;
    let d_t = d.apply(&t);
    let one = field.one();
    let tinv = t.inv()?;
    let expected_left = &(&one - &(&tinv * &tinv)) * &d_t;
    let expected_right = &(&tinv - &one) * &d_t;
    let difference = &left - &right;
    let separates = d_t.is_zero() || !difference.is_zero();
    let pass = commute && equal_traces && left == expected_left && right == expected_right && separates;
    Ok(ClaimWitness {
        t,
        d_t,
        commute,
        equal_traces,
        left,
        right,
        expected_left,
        expected_right,
        difference,
        pass,
    })
}

/// How [`split_test`] samples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitSchedule {
    pub seed: u64,
    pub degree_bound: usize,
    pub word_length: usize,
    /// Group elements per round; each contributes one equation per basis
    /// element of `A`.
    pub elements_per_round: usize,
    pub rounds: usize,
    /// Fresh `(a, g)` pairs a solution must satisfy.
    pub validation_samples: usize,
}

impl SplitSchedule {
    pub fn new(seed: u64) -> Self {
        SplitSchedule {
            seed,
            degree_bound: 2,
            word_length: 3,
            elements_per_round: 3,
            rounds: 4,
            validation_samples: 20,
        }
    }

    pub fn from_config(cfg: &RunConfig) -> Self {
        SplitSchedule {
            seed: cfg.seed,
            degree_bound: cfg.degree_bound,
            word_length: cfg.word_length,
            validation_samples: cfg.samples,
            ..SplitSchedule::new(cfg.seed)
        }
    }
}

/// One equation `lambda(a . g) - lambda(a) = phi(a, g)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitEquation {
    pub a: TracelessMatrix,
    pub g: GroupElem,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonSplitCertificate {
    pub equations: Vec<SplitEquation>,
    pub certificate: InconsistencyCertificate,
}

impl NonSplitCertificate {
    /// Rebuilds the system from the stored equations and re-checks the
    /// contradiction.
    pub fn verify(&self, ext: &CentralExtension) -> Result<bool> {
        let (m, b) = assemble(ext, &self.equations)?;
        Ok(self.certificate.verify(&m, &b))
    }

    /// Equations entering the contradiction with nonzero weight.
    pub fn contradiction_rows(&self) -> Vec<usize> {
        (0..self.certificate.combination.len())
            .filter(|&i| !self.certificate.combination[i].is_zero())
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum SplitVerdict {
    SplitWitness {
        lambda: DualVector,
        equations: usize,
        validated: usize,
    },
    NonSplitCertificate(NonSplitCertificate),
    Undetermined {
        equations: usize,
    },
}

impl SplitVerdict {
    pub fn name(&self) -> &'static str {
        match self {
            SplitVerdict::SplitWitness { .. } => "split_witness",
            SplitVerdict::NonSplitCertificate(_) => "non_split_certificate",
            SplitVerdict::Undetermined { .. } => "undetermined",
        }
    }
}

fn assemble(ext: &CentralExtension, eqs: &[SplitEquation]) -> Result<(Matrix, Vector)> {
    let Some(first) = eqs.first() else {
        return Err(Error::Config("no equations".into()));
    };
    let field = first.a.field();
    let rows_rhs = exec::map_indices(eqs.len(), |i| -> Result<(Vector, FieldElem)> {
        let e = &eqs[i];
        let ag = adjoint(&e.g, &e.a)?.coords();
        let row = ag.iter().zip(e.a.coords()).map(|(x, y)| x - &y).collect();
        Ok((row, ext.phi(&e.a, &e.g)?))
    });
    let mut rows = Vec::with_capacity(eqs.len());
    let mut rhs = Vec::with_capacity(eqs.len());
    for r in rows_rhs {
        let (row, b) = r?;
        rows.push(row);
        rhs.push(b);
    }
    Ok((Matrix::from_rows(field, rows)?, rhs))
}

fn holds(ext: &CentralExtension, lambda: &DualVector, e: &SplitEquation) -> Result<bool> {
    let ag = adjoint(&e.g, &e.a)?;
    Ok(&lambda.eval(&ag) - &lambda.eval(&e.a) == ext.phi(&e.a, &e.g)?)
}

/// Searches for `lambda` with `lambda(a . g) - lambda(a) = phi(a, g)`.
/// An inconsistent system proves the extension does not split; a solution
/// is only reported once it survives fresh samples.
pub fn split_test(
    ext: &CentralExtension,
    field: FieldSpec,
    n: usize,
    schedule: &SplitSchedule,
) -> Result<SplitVerdict> {
    let basis = TracelessMatrix::basis(field, n);
    let mut eqs = Vec::new();
    if ext.cocycle.involves_derivation() {
        let (a, g) = witness_equation(field, n)?;
        eqs.push(SplitEquation { a, g });
    }
    let mut stream = 0u64;
    for _ in 0..schedule.rounds {
        for _ in 0..schedule.elements_per_round {
            let mut rng = crate::report::sample_rng(schedule.seed, stream);
            stream += 1;
            let g = sample_element(field, n, &mut rng, schedule.word_length, schedule.degree_bound)?;
            eqs.extend(basis.iter().map(|a| SplitEquation { a: a.clone(), g: g.clone() }));
        }
        let (m, b) = assemble(ext, &eqs)?;
        match m.solve(&b)? {
            Solution::Inconsistent(certificate) => {
                return Ok(SplitVerdict::NonSplitCertificate(NonSplitCertificate {
                    equations: eqs,
                    certificate,
                }))
            }
            Solution::Solved(x) => {
                let lambda = DualVector::from_values(field, n, x)?;
                let fresh: Vec<SplitEquation> = (0..schedule.validation_samples)
                    .map(|_| {
                        let mut rng = crate::report::sample_rng(schedule.seed, stream);
                        stream += 1;
                        let a = TracelessMatrix::sample(field, n, &mut rng, schedule.degree_bound);
                        let g = sample_element(
                            field,
                            n,
                            &mut rng,
                            schedule.word_length,
                            schedule.degree_bound,
                        )?;
                        Ok(SplitEquation { a, g })
                    })
                    .collect::<Result<_>>()?;
                let verdicts = exec::map_indices(fresh.len(), |i| holds(ext, &lambda, &fresh[i]));
                let mut failed = Vec::new();
                for (e, ok) in fresh.into_iter().zip(verdicts) {
                    if !ok? {
                        failed.push(e);
                    }
                }
                if failed.is_empty() {
                    return Ok(SplitVerdict::SplitWitness {
                        lambda,
                        equations: eqs.len(),
                        validated: schedule.validation_samples,
                    });
                }
                eqs.extend(failed);
            }
        }
    }
    Ok(SplitVerdict::Undetermined { equations: eqs.len() })
}

/// Checks `phi(v, g) + lambda(v . g) = lambda(v) + phi'(v, g)`, the
/// condition for `(t, v) -> (t + lambda(v), v)` to be a rigid
/// isomorphism from `u` to `u2`. Returns the first failing pair.
pub fn rigid_isomorphism_check(
    u: &CentralExtension,
    u2: &CentralExtension,
    lambda: &DualVector,
    cfg: &RunConfig,
) -> Result<Option<SplitEquation>> {
    let (field, n) = (cfg.field, cfg.n);
    let mut eqs = Vec::new();
    if u.cocycle.involves_derivation() || u2.cocycle.involves_derivation() {
        let (a, g) = witness_equation(field, n)?;
        eqs.push(SplitEquation { a, g });
    }
    for i in 0..cfg.samples {
        let mut rng = cfg.rng(i as u64);
        let a = TracelessMatrix::sample(field, n, &mut rng, cfg.degree_bound);
        let g = sample_element(field, n, &mut rng, cfg.word_length, cfg.degree_bound)?;
        eqs.push(SplitEquation { a, g });
    }
    let ok = exec::map_indices(eqs.len(), |i| -> Result<bool> {
        let e = &eqs[i];
        let ag = adjoint(&e.g, &e.a)?;
        let lhs = &u.phi(&e.a, &e.g)? + &lambda.eval(&ag);
        let rhs = &lambda.eval(&e.a) + &u2.phi(&e.a, &e.g)?;
        Ok(lhs == rhs)
    });
    for (e, r) in eqs.into_iter().zip(ok) {
        if !r? {
            return Ok(Some(e));
        }
    }
    Ok(None)
}

/// `f(g1 g2) = f(g1) . g2 + f(g2)` and `f(I) = 0` on sampled pairs.
pub fn check_cocycle_law(f: &Cocycle1, cfg: &RunConfig) -> Result<Report> {
    cfg.validate()?;
    let id = GroupElem::identity(cfg.field, cfg.n);
    let normalized = f.evaluate(&id)?.is_zero();
    let outcomes = exec::map_indices(cfg.samples, |i| -> Result<Option<serde_json::Value>> {
        let mut rng = cfg.rng(i as u64);
        let g1 = sample_element(cfg.field, cfg.n, &mut rng, cfg.word_length, cfg.degree_bound)?;
        let g2 = sample_element(cfg.field, cfg.n, &mut rng, cfg.word_length, cfg.degree_bound)?;
        let lhs = f.evaluate(&g1.mul(&g2)?)?;
        let rhs = f.evaluate(&g1)?.act(&g2)?.add(&f.evaluate(&g2)?);
        Ok((lhs != rhs).then(|| json!({"g1": g1, "g2": g2, "lhs": lhs, "rhs": rhs, "sample_index": i})))
    });
    let mut counterexample = None;
    for o in outcomes {
        if let Some(c) = o? {
            counterexample = Some(c);
            break;
        }
    }
    let pass = normalized && counterexample.is_none();
    Ok(Report::new("cocycle-law", cfg, pass)
        .with_counterexample(counterexample)
        .with_details(json!({"cocycle": f.describe(), "normalized": normalized})))
}

/// The right-action law of the extension on sampled `(x, g1, g2)`.
pub fn check_extension_law(ext: &CentralExtension, cfg: &RunConfig) -> Result<Report> {
    cfg.validate()?;
    let outcomes = exec::map_indices(cfg.samples, |i| -> Result<Option<serde_json::Value>> {
        let mut rng = cfg.rng(i as u64);
        let x = ExtElem {
            t: cfg.field.sample(&mut rng, cfg.degree_bound),
            a: TracelessMatrix::sample(cfg.field, cfg.n, &mut rng, cfg.degree_bound),
        };
        let g1 = sample_element(cfg.field, cfg.n, &mut rng, cfg.word_length, cfg.degree_bound)?;
        let g2 = sample_element(cfg.field, cfg.n, &mut rng, cfg.word_length, cfg.degree_bound)?;
        let lhs = ext.act(&ext.act(&x, &g1)?, &g2)?;
        let rhs = ext.act(&x, &g1.mul(&g2)?)?;
        Ok((lhs != rhs).then(|| json!({"x": x, "g1": g1, "g2": g2, "sample_index": i})))
    });
    let mut counterexample = None;
    for o in outcomes {
        if let Some(c) = o? {
            counterexample = Some(c);
            break;
        }
    }
    let pass = counterexample.is_none();
    Ok(Report::new("extension-law", cfg, pass).with_counterexample(counterexample))
}
