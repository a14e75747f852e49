//! The natural embedding into the adjoint module `A` (traceless
//! matrices) and its relatively universal cover on `M x A`, where
//! `M = Der_Omega(K)` has basis `{d_omega}`.
//!
//! `g` acts on `M x A` by
//!
//! ```text
//! (m, a) . g = (m + sum_omega Tr(g d_omega(g^-1) a) d_omega,  g^-1 a g)
//! ```
//!
//! and the cover sends the flag `(v, lambda)` to
//! `(sum_omega (v . d_omega(lambda)) d_omega,  lambda v)`. With the
//! representatives `(v g, g^-1 lambda)` used by [`act_on_flag`] the two
//! are compatible on the nose, not only projectively.

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::exec;
use crate::field::{FieldElem, FieldSpec};
use crate::geometry::{
    act_on_flag, enumerate_flags, enumerate_lines, sample_flag, sample_line, Flag, GeomLine,
    LineFamily,
};
use crate::group::{adjoint, derive_matrix, sample_element, GroupElem};
use crate::linalg::{dot, Matrix, Subspace, Vector};
use crate::report::{Report, RunConfig};

/// `n^2 + 2n`, the dimension of `A` for `SL(n+1)`.
pub fn adjoint_dim(n: usize) -> usize {
    n * n + 2 * n
}

/// A traceless `(n+1) x (n+1)` matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct TracelessMatrix(Matrix);

impl TracelessMatrix {
    pub fn new(m: Matrix) -> Result<Self> {
        if !m.trace()?.is_zero() {
            return Err(Error::DimensionMismatch("matrix has nonzero trace".into()));
        }
        Ok(TracelessMatrix(m))
    }

    pub(crate) fn new_unchecked(m: Matrix) -> Self {
        debug_assert!(m.trace().map(|t| t.is_zero()).unwrap_or(false));
        TracelessMatrix(m)
    }

    pub fn zero(field: FieldSpec, n: usize) -> Self {
        TracelessMatrix(Matrix::zeros(field, n + 1, n + 1))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    pub fn field(&self) -> FieldSpec {
        self.0.field()
    }

    pub fn n(&self) -> usize {
        self.0.rows() - 1
    }

    /// Coordinates in the basis of [`TracelessMatrix::basis`]: the
    /// off-diagonal entries in row-major order, then `a_{ii}` for
    /// `i < n`.
    pub fn coords(&self) -> Vector {
        let size = self.0.rows();
        let mut out = Vec::with_capacity(size * size - 1);
        for i in 0..size {
            for j in 0..size {
                if i != j {
                    out.push(self.0[(i, j)].clone());
                }
            }
        }
        for i in 0..size - 1 {
            out.push(self.0[(i, i)].clone());
        }
        out
    }

    pub fn from_coords(field: FieldSpec, n: usize, coords: &[FieldElem]) -> Result<Self> {
        if coords.len() != adjoint_dim(n) {
            return Err(Error::DimensionMismatch(format!(
                "{} coordinates for a space of dimension {}",
                coords.len(),
                adjoint_dim(n)
            )));
        }
        let size = n + 1;
        let mut m = Matrix::zeros(field, size, size);
        let mut it = coords.iter();
        for i in 0..size {
            for j in 0..size {
                if i != j {
                    m[(i, j)] = it.next().expect("length checked").clone();
                }
            }
        }
        let mut last = field.zero();
        for i in 0..n {
            let d = it.next().expect("length checked").clone();
            last = last - &d;
            m[(i, i)] = d;
        }
        m[(n, n)] = last;
        Ok(TracelessMatrix(m))
    }

    /// `e_{i,j}` for `i != j`, then `e_{i,i} - e_{n+1,n+1}`.
    pub fn basis(field: FieldSpec, n: usize) -> Vec<TracelessMatrix> {
        let dim = adjoint_dim(n);
        (0..dim)
            .map(|k| {
                let mut c = vec![field.zero(); dim];
                c[k] = field.one();
                Self::from_coords(field, n, &c).expect("dimension matches")
            })
            .collect()
    }

    pub fn sample<R: rand::Rng + ?Sized>(
        field: FieldSpec,
        n: usize,
        rng: &mut R,
        degree_bound: usize,
    ) -> Self {
        let c: Vector = (0..adjoint_dim(n))
            .map(|_| field.sample(rng, degree_bound))
            .collect();
        Self::from_coords(field, n, &c).expect("dimension matches")
    }

    pub fn add(&self, other: &TracelessMatrix) -> Result<TracelessMatrix> {
        Ok(TracelessMatrix(self.0.add(&other.0)?))
    }

    pub fn scale(&self, k: &FieldElem) -> TracelessMatrix {
        TracelessMatrix(self.0.scale(k))
    }
}

/// An element `(m, a)` of `M x A`; `m` holds the coordinates on the
/// basis `{d_omega}` of `M`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtendedVector {
    pub m: Vector,
    pub a: TracelessMatrix,
}

impl ExtendedVector {
    pub fn new(m: Vector, a: TracelessMatrix) -> Result<Self> {
        let rank = a.field().derivation_rank();
        if m.len() != rank {
            return Err(Error::DimensionMismatch(format!(
                "{} derivation coordinates for a basis of size {rank}",
                m.len()
            )));
        }
        Ok(ExtendedVector { m, a })
    }

    /// Coordinates in `K^(d + n^2 + 2n)`: `m` followed by `a`'s.
    pub fn flatten(&self) -> Vector {
        let mut out = self.m.clone();
        out.extend(self.a.coords());
        out
    }

    /// The projection onto `A`.
    pub fn project(&self) -> &TracelessMatrix {
        &self.a
    }

    pub fn sample<R: rand::Rng + ?Sized>(
        field: FieldSpec,
        n: usize,
        rng: &mut R,
        degree_bound: usize,
    ) -> Self {
        let m = (0..field.derivation_rank())
            .map(|_| field.sample(rng, degree_bound))
            .collect();
        ExtendedVector {
            m,
            a: TracelessMatrix::sample(field, n, rng, degree_bound),
        }
    }
}

/// Dimension of `M x A`.
pub fn extended_dim(field: FieldSpec, n: usize) -> usize {
    field.derivation_rank() + adjoint_dim(n)
}

/// `lambda v`, the rank-one traceless matrix of a flag.
pub fn natural_embed(f: &Flag) -> TracelessMatrix {
    let field = f.field();
    let size = f.v.len();
    let mut m = Matrix::zeros(field, size, size);
    for (i, l) in f.lambda.iter().enumerate() {
        if l.is_zero() {
            continue;
        }
        for (j, x) in f.v.iter().enumerate() {
            m[(i, j)] = l * x;
        }
    }
    TracelessMatrix::new_unchecked(m)
}

/// `Tr(g d_omega(g^-1) a)` for each `omega`.
fn derivation_shift(g: &GroupElem, a: &TracelessMatrix) -> Result<Vector> {
    let field = g.field();
    (0..field.derivation_rank())
        .map(|w| {
            let dinv = derive_matrix(g.inverse_matrix(), w)?;
            if dinv.is_zero() {
                return Ok(field.zero());
            }
            g.matrix().mul(&dinv)?.trace_of_product(a.matrix())
        })
        .collect()
}

/// The action of `g` on `M x A`.
pub fn extended_act(x: &ExtendedVector, g: &GroupElem) -> Result<ExtendedVector> {
    let shift = derivation_shift(g, &x.a)?;
    let m = x.m.iter().zip(&shift).map(|(a, b)| a + b).collect();
    Ok(ExtendedVector {
        m,
        a: adjoint(g, &x.a)?,
    })
}

/// The cover of the natural embedding:
/// `(v, lambda) -> (sum_omega (v . d_omega(lambda)) d_omega, lambda v)`.
pub fn universal_embed(f: &Flag) -> ExtendedVector {
    let field = f.field();
    let m = (0..field.derivation_rank())
        .map(|w| {
            let dl: Vector = f
                .lambda
                .iter()
                .map(|x| x.derive(w).expect("index in range"))
                .collect();
            dot(&f.v, &dl)
        })
        .collect();
    ExtendedVector {
        m,
        a: natural_embed(f),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EmbeddingKind {
    Natural,
    Universal,
}

impl EmbeddingKind {
    pub fn embed(&self, f: &Flag) -> Vector {
        match self {
            EmbeddingKind::Natural => natural_embed(f).coords(),
            EmbeddingKind::Universal => universal_embed(f).flatten(),
        }
    }

    pub fn ambient_dim(&self, field: FieldSpec, n: usize) -> usize {
        match self {
            EmbeddingKind::Natural => adjoint_dim(n),
            EmbeddingKind::Universal => extended_dim(field, n),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            EmbeddingKind::Natural => "natural",
            EmbeddingKind::Universal => "universal",
        }
    }
}

impl std::str::FromStr for EmbeddingKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "natural" => Ok(EmbeddingKind::Natural),
            "universal" => Ok(EmbeddingKind::Universal),
            _ => Err(Error::Parse(format!("unknown embedding {s:?}"))),
        }
    }
}

fn vec_strings(v: &[FieldElem]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// Evaluates `check(i)` for every sample, returning the first failure by
/// index (deterministic regardless of scheduling).
fn first_failure<F>(samples: usize, check: F) -> Result<Option<(usize, serde_json::Value)>>
where
    F: Fn(usize) -> Result<Option<serde_json::Value>> + Sync + Send,
{
    let outcomes = exec::map_indices(samples, check);
    for (i, o) in outcomes.into_iter().enumerate() {
        if let Some(c) = o? {
            return Ok(Some((i, c)));
        }
    }
    Ok(None)
}

fn finish(check: &str, cfg: &RunConfig, failure: Option<(usize, serde_json::Value)>) -> Report {
    let pass = failure.is_none();
    Report::new(check, cfg, pass).with_counterexample(failure.map(|(i, mut c)| {
        c["sample_index"] = json!(i);
        c
    }))
}

/// Right-action law `(x.g1).g2 = x.(g1 g2)` on random triples.
pub fn check_action_law(cfg: &RunConfig) -> Result<Report> {
    cfg.validate()?;
    let failure = first_failure(cfg.samples, |i| {
        let mut rng = cfg.rng(i as u64);
        let x = ExtendedVector::sample(cfg.field, cfg.n, &mut rng, cfg.degree_bound);
        let g1 = sample_element(cfg.field, cfg.n, &mut rng, cfg.word_length, cfg.degree_bound)?;
        let g2 = sample_element(cfg.field, cfg.n, &mut rng, cfg.word_length, cfg.degree_bound)?;
        let lhs = extended_act(&extended_act(&x, &g1)?, &g2)?;
        let rhs = extended_act(&x, &g1.mul(&g2)?)?;
        Ok((lhs != rhs).then(|| {
            json!({
                "x": {"m": vec_strings(&x.m), "a": x.a},
                "g1": g1, "g2": g2,
                "lhs": vec_strings(&lhs.flatten()),
                "rhs": vec_strings(&rhs.flatten()),
            })
        }))
    })?;
    Ok(finish("action-law", cfg, failure))
}

/// `universal_embed(f.g) = universal_embed(f).g` exactly, plus the
/// projection identity and natural-embedding equivariance on each sample.
pub fn check_equivariance(cfg: &RunConfig) -> Result<Report> {
    cfg.validate()?;
    let failure = first_failure(cfg.samples, |i| {
        let mut rng = cfg.rng(i as u64);
        let f = sample_flag(cfg.field, cfg.n, &mut rng, cfg.degree_bound);
        let g = sample_element(cfg.field, cfg.n, &mut rng, cfg.word_length, cfg.degree_bound)?;
        let fg = act_on_flag(&f, &g)?;
        let lhs = universal_embed(&fg);
        let rhs = extended_act(&universal_embed(&f), &g)?;
        let natural_ok = natural_embed(&fg) == adjoint(&g, &natural_embed(&f))?;
        let projection_ok = lhs.project() == &natural_embed(&fg);
        Ok((lhs != rhs || !natural_ok || !projection_ok).then(|| {
            json!({
                "flag": {"v": vec_strings(&f.v), "lambda": vec_strings(&f.lambda)},
                "g": g,
                "lhs": vec_strings(&lhs.flatten()),
                "rhs": vec_strings(&rhs.flatten()),
                "natural_ok": natural_ok,
                "projection_ok": projection_ok,
            })
        }))
    })?;
    Ok(finish("equivariance", cfg, failure))
}

/// Rank of the embedded images of a list of flags.
pub fn embedded_rank(kind: EmbeddingKind, flags: &[Flag]) -> usize {
    let Some(first) = flags.first() else {
        return 0;
    };
    let field = first.field();
    let rows = flags.iter().map(|f| kind.embed(f)).collect();
    Matrix::from_rows(field, rows).expect("equal lengths").rank()
}

/// Every flag triple on a line spans a plane, and images of distinct
/// flags are not proportional.
fn line_is_embedded(kind: EmbeddingKind, flags: &[Flag]) -> bool {
    if embedded_rank(kind, flags) != 2 {
        return false;
    }
    for i in 0..flags.len() {
        for j in i + 1..flags.len() {
            if embedded_rank(kind, &[flags[i].clone(), flags[j].clone()]) != 2 {
                return false;
            }
        }
    }
    true
}

fn line_json(line: &GeomLine) -> serde_json::Value {
    json!({
        "family": line.family,
        "base": vec_strings(&line.base),
        "span": [vec_strings(&line.span[0]), vec_strings(&line.span[1])],
    })
}

/// Samples lines of both families (alternating), takes three distinct
/// flags on each, and checks their images span exactly two dimensions.
pub fn check_collinearity(cfg: &RunConfig, kind: EmbeddingKind) -> Result<Report> {
    cfg.validate()?;
    let failure = first_failure(cfg.samples, |i| {
        let mut rng = cfg.rng(i as u64);
        let family = if i % 2 == 0 {
            LineFamily::PointPencil
        } else {
            LineFamily::HyperplanePencil
        };
        let line = sample_line(cfg.field, cfg.n, family, &mut rng, cfg.degree_bound);
        let c = cfg.field.sample_nonzero(&mut rng, cfg.degree_bound);
        let one = cfg.field.one();
        let zero = cfg.field.zero();
        let flags = vec![
            line.flag_at(&one, &zero)?,
            line.flag_at(&zero, &one)?,
            line.flag_at(&one, &c)?,
        ];
        Ok((!line_is_embedded(kind, &flags)).then(|| line_json(&line)))
    })?;
    Ok(finish("collinearity", cfg, failure).with_details(json!({"embedding": kind})))
}

/// Exhaustive collinearity over `F_q`: every line, all `q + 1` flags.
pub fn check_collinearity_exhaustive(n: usize, q: u64, kind: EmbeddingKind) -> Result<Report> {
    let lines = enumerate_lines(n, q)?;
    let field = FieldSpec::prime(q)?;
    let elems = field.elements()?;
    let failure = first_failure(lines.len(), |i| {
        let line = &lines[i];
        let mut flags = vec![line.flag_at(&field.zero(), &field.one())?];
        for b in &elems {
            flags.push(line.flag_at(&field.one(), b)?);
        }
        Ok((!line_is_embedded(kind, &flags)).then(|| line_json(line)))
    })?;
    let cfg = RunConfig {
        field,
        n,
        samples: lines.len(),
        seed: 0,
        degree_bound: 0,
        word_length: 1,
    };
    Ok(finish("collinearity", &cfg, failure)
        .with_details(json!({"embedding": kind, "exhaustive": true, "lines": lines.len()})))
}

/// Saturation schedule for [`dimension_report`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Saturation {
    pub round_size: usize,
    pub stable_rounds: usize,
    pub max_flags: usize,
}

impl Default for Saturation {
    fn default() -> Self {
        Saturation {
            round_size: 50,
            stable_rounds: 3,
            max_flags: 2000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionOutcome {
    /// Dimension of the span found; never exceeds the true dimension.
    pub dimension: usize,
    /// `d + n^2 + 2n`.
    pub ceiling: usize,
    pub flags_used: usize,
    pub exhaustive: bool,
}

/// `t = 1009/13` for `Q(t)`; no specialization elsewhere.
pub fn specialization_point(field: FieldSpec) -> Option<FieldElem> {
    match field {
        FieldSpec::RationalFunction => Some(FieldSpec::Rationals.parse_elem("1009/13").expect("literal")),
        _ => None,
    }
}

/// Grows the span of embedded flags until it reaches the ambient
/// dimension, stops growing for `stable_rounds` rounds, or the flag budget
/// runs out. Over a prime field every flag is used.
pub fn dimension_report(
    cfg: &RunConfig,
    kind: EmbeddingKind,
    schedule: &Saturation,
) -> Result<DimensionOutcome> {
    cfg.validate()?;
    let ceiling = kind.ambient_dim(cfg.field, cfg.n);
    if let FieldSpec::Prime(q) = cfg.field {
        let mut span = Subspace::zero(cfg.field, ceiling);
        let flags = enumerate_flags(cfg.n, q)?;
        let images = exec::map_indices(flags.len(), |i| kind.embed(&flags[i]));
        for v in &images {
            span.insert(v);
        }
        return Ok(DimensionOutcome {
            dimension: span.dim(),
            ceiling,
            flags_used: flags.len(),
            exhaustive: true,
        });
    }
    // Over Q(t) images are specialized at a fixed rational point: vectors
    // independent after substituting t = c are independent over K, so the
    // count is still a certified lower bound. Over F_p(t) ranks are exact.
    let point = specialization_point(cfg.field);
    let mut special = Subspace::zero(cfg.field.constants(), ceiling);
    let mut independent: Vec<Vector> = Vec::new();
    let found = |special: &Subspace, independent: &Vec<Vector>| match point {
        Some(_) => special.dim(),
        None => independent.len(),
    };
    let mut used = 0;
    let mut stable = 0;
    while found(&special, &independent) < ceiling
        && stable < schedule.stable_rounds
        && used < schedule.max_flags
    {
        let count = schedule.round_size.min(schedule.max_flags - used);
        let images = exec::map_indices(count, |k| {
            let mut rng = cfg.rng((used + k) as u64);
            kind.embed(&sample_flag(cfg.field, cfg.n, &mut rng, cfg.degree_bound))
        });
        let mut grew = false;
        for v in images {
            if let Some(c) = &point {
                let s: Option<Vector> = v.iter().map(|x| x.specialize(c)).collect();
                if let Some(s) = s {
                    grew |= special.insert(&s);
                }
            } else {
                let mut rows = independent.clone();
                rows.push(v);
                let rank = Matrix::from_rows(cfg.field, rows.clone()).expect("equal lengths").rank();
                if rank > independent.len() {
                    independent = rows;
                    grew = true;
                }
            }
            if found(&special, &independent) == ceiling {
                break;
            }
        }
        used += count;
        stable = if grew { 0 } else { stable + 1 };
    }
    Ok(DimensionOutcome {
        dimension: found(&special, &independent),
        ceiling,
        flags_used: used,
        exhaustive: false,
    })
}

pub fn dimension_report_json(
    cfg: &RunConfig,
    kind: EmbeddingKind,
    schedule: &Saturation,
) -> Result<Report> {
    let out = dimension_report(cfg, kind, schedule)?;
    let mut r = Report::new("dimension-report", cfg, out.dimension == out.ceiling);
    r.dimension = Some(out.dimension);
    Ok(r.with_details(json!({
        "ceiling": out.ceiling,
        "derivation_rank": cfg.field.derivation_rank(),
        "flags_used": out.flags_used,
        "exhaustive": out.exhaustive,
        "specialized_at": specialization_point(cfg.field),
        "embedding": kind,
    })))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Geometry;
    use crate::group::transvection;
    use crate::report::sample_rng;

    fn f5t() -> FieldSpec {
        FieldSpec::PrimeFunction(5)
    }

    fn vecs(field: FieldSpec, s: &str) -> Vector {
        s.split(',').map(|x| field.parse_elem(x).unwrap()).collect()
    }

    #[test]
    fn base_flag_images() {
        for field in [FieldSpec::Prime(2), f5t(), FieldSpec::RationalFunction] {
            for n in [2, 3] {
                let base = Flag::base(field, n);
                let e = Matrix::unit(field, n + 1, n, 0);
                assert_eq!(natural_embed(&base).matrix(), &e);
                let u = universal_embed(&base);
                assert!(u.m.iter().all(FieldElem::is_zero));
                assert_eq!(u.a.matrix(), &e);
            }
        }
    }

    #[test]
    fn hand_evaluated_cover_coordinate() {
        // lambda = (0, t, -1)^T, d_t(lambda) = (0, 1, 0)^T
        let field = f5t();
        let lambda = vecs(field, "0,t,-1");
        let f = Flag::new(vecs(field, "1,0,0"), lambda.clone()).unwrap();
        assert!(universal_embed(&f).m[0].is_zero());
        // v = (1, 1, t) lies in the hyperplane: t - t = 0
        let f = Flag::new(vecs(field, "1,1,t"), lambda).unwrap();
        assert!(universal_embed(&f).m[0].is_one());
    }

    #[test]
    fn coords_round_trip() {
        let field = FieldSpec::Prime(3);
        let mut rng = sample_rng(1, 0);
        for n in [2, 3] {
            let a = TracelessMatrix::sample(field, n, &mut rng, 1);
            let b = TracelessMatrix::from_coords(field, n, &a.coords()).unwrap();
            assert_eq!(a, b);
            assert_eq!(TracelessMatrix::basis(field, n).len(), adjoint_dim(n));
        }
    }

    #[test]
    fn identity_acts_trivially() {
        let field = f5t();
        let mut rng = sample_rng(5, 0);
        let x = ExtendedVector::sample(field, 2, &mut rng, 2);
        let id = GroupElem::identity(field, 2);
        assert_eq!(extended_act(&x, &id).unwrap(), x);
    }

    #[test]
    fn m_is_fixed_when_a_vanishes() {
        let field = FieldSpec::RationalFunction;
        let mut rng = sample_rng(6, 0);
        for _ in 0..20 {
            let m = vec![field.sample(&mut rng, 2)];
            let x = ExtendedVector::new(m, TracelessMatrix::zero(field, 2)).unwrap();
            let g = sample_element(field, 2, &mut rng, 3, 2).unwrap();
            assert_eq!(extended_act(&x, &g).unwrap(), x);
        }
    }

    #[test]
    fn trivial_derivations_reduce_to_adjoint() {
        let field = FieldSpec::Rationals;
        let mut rng = sample_rng(8, 0);
        for _ in 0..20 {
            let x = ExtendedVector::sample(field, 2, &mut rng, 1);
            let g = sample_element(field, 2, &mut rng, 3, 1).unwrap();
            let y = extended_act(&x, &g).unwrap();
            assert!(y.m.is_empty());
            assert_eq!(y.a, adjoint(&g, &x.a).unwrap());
            let f = sample_flag(field, 2, &mut rng, 1);
            assert_eq!(universal_embed(&f).flatten(), natural_embed(&f).coords());
        }
    }

    #[test]
    fn natural_images_are_rank_one() {
        let g = Geometry::enumerate(2, 3).unwrap();
        for f in &g.flags {
            assert_eq!(natural_embed(f).matrix().rank(), 1);
        }
    }

    #[test]
    fn natural_span_over_f2() {
        let g = Geometry::enumerate(2, 2).unwrap();
        assert_eq!(embedded_rank(EmbeddingKind::Natural, &g.flags), 8);
    }

    #[test]
    fn equal_flags_span_a_line() {
        let field = f5t();
        let mut rng = sample_rng(2, 0);
        let f = sample_flag(field, 2, &mut rng, 2);
        assert_eq!(embedded_rank(EmbeddingKind::Universal, &[f.clone(), f]), 1);
    }

    #[test]
    fn rescaling_rescales_natural_image() {
        let field = f5t();
        let mut rng = sample_rng(3, 0);
        let f = sample_flag(field, 2, &mut rng, 2);
        let c = field.sample_nonzero(&mut rng, 2);
        let scaled = Flag::new(f.v.iter().map(|x| x * &c).collect(), f.lambda.clone()).unwrap();
        assert_eq!(natural_embed(&scaled), natural_embed(&f).scale(&c));
    }

    #[test]
    fn transvection_equivariance_small() {
        let field = f5t();
        let t = field.variable().unwrap();
        let g = transvection(2, 2, 0, &t).unwrap();
        let f = Flag::new(vecs(field, "1,1,t"), vecs(field, "0,t,-1")).unwrap();
        let lhs = universal_embed(&act_on_flag(&f, &g).unwrap());
        let rhs = extended_act(&universal_embed(&f), &g).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn wrong_sign_action_is_not_equivariant() {
        // Using g^-1 d(g) in place of g d(g^-1) breaks compatibility.
        let field = f5t();
        let mut rng = sample_rng(11, 0);
        let mut broke = false;
        for _ in 0..20 {
            let f = sample_flag(field, 2, &mut rng, 2);
            let g = sample_element(field, 2, &mut rng, 3, 2).unwrap();
            let x = universal_embed(&f);
            let dg = derive_matrix(g.matrix(), 0).unwrap();
            let wrong = g.inverse_matrix().mul(&dg).unwrap().trace_of_product(x.a.matrix());
            let m_wrong = &x.m[0] + &wrong.unwrap();
            let lhs = universal_embed(&act_on_flag(&f, &g).unwrap());
            broke |= lhs.m[0] != m_wrong;
        }
        assert!(broke);
    }

    #[test]
    fn extended_vector_shape_is_checked() {
        let field = f5t();
        assert!(ExtendedVector::new(vec![], TracelessMatrix::zero(field, 2)).is_err());
        let bad = Matrix::identity(FieldSpec::Rationals, 3);
        assert!(TracelessMatrix::new(bad).is_err());
    }
}
