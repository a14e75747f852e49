//! The point-hyperplane geometry of `PG(n, K)`.
//!
//! Points of the geometry are flags `(p, H)` with `p` a projective point
//! inside the hyperplane `H`. Points are row vectors `v`, hyperplanes are
//! column functionals `lambda`, and incidence is `v . lambda = 0`. There
//! are two families of lines:
//!
//! * point pencils `l_{p,S}`: the flags `(p, X)` with `X` containing a
//!   fixed sub-hyperplane `S` through `p`;
//! * hyperplane pencils `l_{L,H}`: the flags `(x, H)` with `x` on a fixed
//!   projective line `L` inside `H`.
//!
//! `S` is stored through its annihilator, a 2-dimensional space of
//! functionals, so "X contains S" is a rank condition.

use std::collections::HashMap;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldElem, FieldSpec};
use crate::group::GroupElem;
use crate::linalg::{dot, Matrix, Subspace, Vector};

/// A point-hyperplane flag `(v, lambda)` with `v . lambda = 0`.
///
/// The representatives are kept as given; [`Flag::normalized`] rescales
/// both so their first nonzero coordinate is one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Flag {
    pub v: Vector,
    pub lambda: Vector,
}

fn scale_first_nonzero_to_one(x: &[FieldElem]) -> Vector {
    match x.iter().find(|c| !c.is_zero()) {
        None => x.to_vec(),
        Some(lead) => {
            let inv = lead.inv().expect("nonzero");
            x.iter().map(|c| c * &inv).collect()
        }
    }
}

fn proportional(a: &[FieldElem], b: &[FieldElem]) -> bool {
    scale_first_nonzero_to_one(a) == scale_first_nonzero_to_one(b)
}

fn rank_of(field: FieldSpec, vectors: &[&[FieldElem]]) -> usize {
    let rows = vectors.iter().map(|v| v.to_vec()).collect();
    Matrix::from_rows(field, rows).expect("equal lengths").rank()
}

impl Flag {
    pub fn new(v: Vector, lambda: Vector) -> Result<Flag> {
        if v.len() != lambda.len() || v.len() < 2 {
            return Err(Error::DimensionMismatch(format!(
                "point of length {} and hyperplane of length {}",
                v.len(),
                lambda.len()
            )));
        }
        if v.iter().all(FieldElem::is_zero) || lambda.iter().all(FieldElem::is_zero) {
            return Err(Error::InvalidFlag("zero representative".into()));
        }
        if !dot(&v, &lambda).is_zero() {
            return Err(Error::InvalidFlag("point does not lie in the hyperplane".into()));
        }
        Ok(Flag { v, lambda })
    }

    /// `(e_1, eta_{n+1})`: the point `<e_1>` in the hyperplane `x_{n+1} = 0`.
    pub fn base(field: FieldSpec, n: usize) -> Flag {
        let mut v = vec![field.zero(); n + 1];
        let mut lambda = v.clone();
        v[0] = field.one();
        lambda[n] = field.one();
        Flag { v, lambda }
    }

    pub fn field(&self) -> FieldSpec {
        self.v[0].field()
    }

    pub fn n(&self) -> usize {
        self.v.len() - 1
    }

    pub fn normalized(&self) -> Flag {
        Flag {
            v: scale_first_nonzero_to_one(&self.v),
            lambda: scale_first_nonzero_to_one(&self.lambda),
        }
    }

    /// Same point and same hyperplane, up to rescaling representatives.
    pub fn projectively_eq(&self, other: &Flag) -> bool {
        self.normalized() == other.normalized()
    }
}

/// `(v g, g^-1 lambda)`; preserves incidence since
/// `(v g)(g^-1 lambda) = v lambda`.
pub fn act_on_flag(f: &Flag, g: &GroupElem) -> Result<Flag> {
    let v = g.matrix().vec_mul(&f.v)?;
    let lambda = g.inverse_matrix().mul_vec(&f.lambda)?;
    Ok(Flag { v, lambda })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LineFamily {
    PointPencil,
    HyperplanePencil,
}

/// A line of the geometry.
///
/// For a point pencil, `base` is the point `v` and `span` spans the
/// annihilator of `S` (functionals). For a hyperplane pencil, `base` is
/// `lambda` and `span` spans `L` (points).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GeomLine {
    pub family: LineFamily,
    pub base: Vector,
    pub span: [Vector; 2],
}

impl GeomLine {
    pub fn point_pencil(v: Vector, functionals: [Vector; 2]) -> Result<GeomLine> {
        Self::checked(LineFamily::PointPencil, v, functionals)
    }

    pub fn hyperplane_pencil(lambda: Vector, points: [Vector; 2]) -> Result<GeomLine> {
        Self::checked(LineFamily::HyperplanePencil, lambda, points)
    }

    fn checked(family: LineFamily, base: Vector, span: [Vector; 2]) -> Result<GeomLine> {
        let len = base.len();
        if span.iter().any(|s| s.len() != len) {
            return Err(Error::DimensionMismatch("line data of unequal lengths".into()));
        }
        if base.iter().all(FieldElem::is_zero) {
            return Err(Error::InvalidFlag("zero base vector".into()));
        }
        if span.iter().any(|s| !dot(s, &base).is_zero()) {
            return Err(Error::InvalidFlag("pencil span is not incident with its base".into()));
        }
        let field = base[0].field();
        if rank_of(field, &[&span[0], &span[1]]) != 2 {
            return Err(Error::InvalidFlag("pencil span is not 2-dimensional".into()));
        }
        Ok(GeomLine { family, base, span })
    }

    pub fn field(&self) -> FieldSpec {
        self.base[0].field()
    }

    /// Canonical form: normalized base, span in reduced echelon form.
    pub fn canonical(&self) -> GeomLine {
        let field = self.field();
        let s = Subspace::span(field, self.base.len(), &self.span);
        GeomLine {
            family: self.family,
            base: scale_first_nonzero_to_one(&self.base),
            span: [s.basis()[0].clone(), s.basis()[1].clone()],
        }
    }

    /// The flag obtained from the span combination `a*s_0 + b*s_1`.
    pub fn flag_at(&self, a: &FieldElem, b: &FieldElem) -> Result<Flag> {
        let x: Vector = self.span[0]
            .iter()
            .zip(&self.span[1])
            .map(|(s, t)| a * s + b * t)
            .collect();
        match self.family {
            LineFamily::PointPencil => Flag::new(self.base.clone(), x),
            LineFamily::HyperplanePencil => Flag::new(x, self.base.clone()),
        }
    }

    /// Image under `g` (points by `v g`, functionals by `g^-1 lambda`).
    pub fn act(&self, g: &GroupElem) -> Result<GeomLine> {
        let on_points = |x: &Vector| g.matrix().vec_mul(x);
        let on_functionals = |x: &Vector| g.inverse_matrix().mul_vec(x);
        let (base, span) = match self.family {
            LineFamily::PointPencil => (
                on_points(&self.base)?,
                [on_functionals(&self.span[0])?, on_functionals(&self.span[1])?],
            ),
            LineFamily::HyperplanePencil => (
                on_functionals(&self.base)?,
                [on_points(&self.span[0])?, on_points(&self.span[1])?],
            ),
        };
        Ok(GeomLine {
            family: self.family,
            base,
            span,
        })
    }
}

/// Whether the flag lies on the line, by exact rank conditions.
pub fn incident(f: &Flag, line: &GeomLine) -> Result<bool> {
    if f.v.len() != line.base.len() {
        return Err(Error::DimensionMismatch(format!(
            "flag in dimension {} and line in dimension {}",
            f.n(),
            line.base.len() - 1
        )));
    }
    let field = f.field();
    let (fixed, moving) = match line.family {
        LineFamily::PointPencil => (&f.v, &f.lambda),
        LineFamily::HyperplanePencil => (&f.lambda, &f.v),
    };
    Ok(proportional(fixed, &line.base)
        && rank_of(field, &[&line.span[0], &line.span[1], moving]) == 2)
}

/// Normalized nonzero vectors of `F_q^{n+1}` (first nonzero entry one),
/// ordered by the position of that entry and then lexicographically.
pub fn projective_points(field: FieldSpec, n: usize) -> Result<Vec<Vector>> {
    let elems = field.elements()?;
    let q = elems.len();
    let mut out = Vec::new();
    for lead in 0..=n {
        let tail = n - lead;
        let count = q.pow(tail as u32);
        for code in 0..count {
            let mut v = vec![field.zero(); n + 1];
            v[lead] = field.one();
            let mut c = code;
            for k in (lead + 1..=n).rev() {
                v[k] = elems[c % q].clone();
                c /= q;
            }
            out.push(v);
        }
    }
    Ok(out)
}

/// All 2-dimensional subspaces of `F_q^{n+1}`, as reduced echelon bases,
/// in order of first appearance among pairs of points.
pub fn projective_lines(field: FieldSpec, n: usize) -> Result<Vec<[Vector; 2]>> {
    let points = projective_points(field, n)?;
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let s = Subspace::span(field, n + 1, &[points[i].clone(), points[j].clone()]);
            let basis = [s.basis()[0].clone(), s.basis()[1].clone()];
            if seen.insert(basis.clone()) {
                out.push(basis);
            }
        }
    }
    Ok(out)
}

fn prime_field(q: u64) -> Result<FieldSpec> {
    FieldSpec::prime(q).map_err(|_| {
        Error::UnsupportedField(format!("q = {q}: only prime fields can be enumerated"))
    })
}

/// All flags over `F_q`, sorted by point then hyperplane.
pub fn enumerate_flags(n: usize, q: u64) -> Result<Vec<Flag>> {
    let field = prime_field(q)?;
    let points = projective_points(field, n)?;
    let mut flags = Vec::new();
    for v in &points {
        for lambda in &points {
            if dot(v, lambda).is_zero() {
                flags.push(Flag {
                    v: v.clone(),
                    lambda: lambda.clone(),
                });
            }
        }
    }
    Ok(flags)
}

/// All lines over `F_q`: the point pencils first, then the hyperplane
/// pencils.
pub fn enumerate_lines(n: usize, q: u64) -> Result<Vec<GeomLine>> {
    let field = prime_field(q)?;
    let points = projective_points(field, n)?;
    let planes = projective_lines(field, n)?;
    let mut lines = Vec::new();
    for family in [LineFamily::PointPencil, LineFamily::HyperplanePencil] {
        for base in &points {
            for span in &planes {
                if span.iter().all(|s| dot(s, base).is_zero()) {
                    lines.push(GeomLine {
                        family,
                        base: base.clone(),
                        span: span.clone(),
                    });
                }
            }
        }
    }
    Ok(lines)
}

/// A finite geometry with its incidence: `line_flags[i]` lists the
/// indices of the flags on line `i` in increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Geometry {
    pub field: FieldSpec,
    pub n: usize,
    pub flags: Vec<Flag>,
    pub lines: Vec<GeomLine>,
    pub line_flags: Vec<Vec<usize>>,
}

impl Geometry {
    pub fn enumerate(n: usize, q: u64) -> Result<Geometry> {
        let field = prime_field(q)?;
        let flags = enumerate_flags(n, q)?;
        let lines = enumerate_lines(n, q)?;
        let index: HashMap<&Flag, usize> = flags.iter().enumerate().map(|(i, f)| (f, i)).collect();
        let elems = field.elements()?;
        let line_flags = lines
            .iter()
            .map(|line| {
                // normalized points of the span: (1, b) and (0, 1)
                let mut ids: Vec<usize> = elems
                    .iter()
                    .map(|b| (field.one(), b.clone()))
                    .chain(std::iter::once((field.zero(), field.one())))
                    .map(|(a, b)| {
                        let f = line.flag_at(&a, &b).expect("span is incident").normalized();
                        index[&f]
                    })
                    .collect();
                ids.sort_unstable();
                ids
            })
            .collect();
        Ok(Geometry {
            field,
            n,
            flags,
            lines,
            line_flags,
        })
    }

    pub fn flag_index(&self) -> HashMap<Flag, usize> {
        self.flags
            .iter()
            .enumerate()
            .map(|(i, f)| (f.normalized(), i))
            .collect()
    }

    pub fn line_index(&self) -> HashMap<GeomLine, usize> {
        self.lines
            .iter()
            .enumerate()
            .map(|(i, l)| (l.canonical(), i))
            .collect()
    }

    /// Incident (flag, line) pairs, ordered by line.
    pub fn incidences(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.line_flags
            .iter()
            .enumerate()
            .flat_map(|(l, fs)| fs.iter().map(move |&f| (f, l)))
    }

    pub fn to_dump(&self) -> GeometryDump {
        let strings = |v: &Vector| v.iter().map(ToString::to_string).collect();
        GeometryDump {
            schema: 1,
            field: self.field.to_string(),
            n: self.n,
            flags: self
                .flags
                .iter()
                .map(|f| FlagDump {
                    v: strings(&f.v),
                    lambda: strings(&f.lambda),
                })
                .collect(),
            lines: self
                .lines
                .iter()
                .zip(&self.line_flags)
                .map(|(l, fs)| LineDump {
                    family: l.family,
                    base: strings(&l.base),
                    span: [strings(&l.span[0]), strings(&l.span[1])],
                    flags: fs.clone(),
                })
                .collect(),
        }
    }

    pub fn from_dump(dump: &GeometryDump) -> Result<Geometry> {
        let field: FieldSpec = dump.field.parse()?;
        let parse = |v: &[String]| -> Result<Vector> {
            v.iter().map(|s| field.parse_elem(s)).collect()
        };
        let flags = dump
            .flags
            .iter()
            .map(|f| Flag::new(parse(&f.v)?, parse(&f.lambda)?))
            .collect::<Result<Vec<_>>>()?;
        let lines = dump
            .lines
            .iter()
            .map(|l| {
                GeomLine::checked(
                    l.family,
                    parse(&l.base)?,
                    [parse(&l.span[0])?, parse(&l.span[1])?],
                )
            })
            .collect::<Result<Vec<_>>>()?;
        let line_flags: Vec<Vec<usize>> = dump.lines.iter().map(|l| l.flags.clone()).collect();
        for (line, ids) in lines.iter().zip(&line_flags) {
            for &i in ids {
                let f = flags.get(i).ok_or_else(|| {
                    Error::Parse(format!("line refers to missing flag {i}"))
                })?;
                if !incident(f, line)? {
                    return Err(Error::Parse(format!("flag {i} is not on its listed line")));
                }
            }
        }
        Ok(Geometry {
            field,
            n: dump.n,
            flags,
            lines,
            line_flags,
        })
    }
}

/// JSON incidence dump: normalized flags and lines with flag indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeometryDump {
    pub schema: u32,
    pub field: String,
    pub n: usize,
    pub flags: Vec<FlagDump>,
    pub lines: Vec<LineDump>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagDump {
    pub v: Vec<String>,
    pub lambda: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineDump {
    pub family: LineFamily,
    pub base: Vec<String>,
    pub span: [Vec<String>; 2],
    pub flags: Vec<usize>,
}

fn random_nonzero_vector<R: Rng + ?Sized>(
    field: FieldSpec,
    len: usize,
    rng: &mut R,
    degree_bound: usize,
) -> Vector {
    loop {
        let v: Vector = (0..len).map(|_| field.sample_polynomial(rng, degree_bound)).collect();
        if v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}

fn random_in_span<R: Rng + ?Sized>(
    field: FieldSpec,
    basis: &[Vector],
    rng: &mut R,
    degree_bound: usize,
) -> Vector {
    let len = basis[0].len();
    loop {
        let mut x = vec![field.zero(); len];
        for b in basis {
            let c = field.sample_polynomial(rng, degree_bound);
            for (xi, bi) in x.iter_mut().zip(b) {
                *xi = &*xi + &(&c * bi);
            }
        }
        if x.iter().any(|c| !c.is_zero()) {
            return x;
        }
    }
}

/// The vectors `v_j e_i - v_i e_j`, which span the annihilator of a
/// nonzero `v` and have polynomial entries when `v` does.
fn annihilator(field: FieldSpec, v: &[FieldElem]) -> Vec<Vector> {
    let mut out = Vec::new();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i].is_zero() && v[j].is_zero() {
                continue;
            }
            let mut x = vec![field.zero(); v.len()];
            x[i] = v[j].clone();
            x[j] = -&v[i];
            out.push(x);
        }
    }
    out
}

/// A random flag with polynomial coordinates: `v` from the polynomial
/// sampler, `lambda` a random combination of spanning vectors of the
/// annihilator of `v`.
pub fn sample_flag<R: Rng + ?Sized>(
    field: FieldSpec,
    n: usize,
    rng: &mut R,
    degree_bound: usize,
) -> Flag {
    let v = random_nonzero_vector(field, n + 1, rng, degree_bound);
    let lambda = random_in_span(field, &annihilator(field, &v), rng, degree_bound);
    Flag { v, lambda }
}

/// A random line of the given family.
pub fn sample_line<R: Rng + ?Sized>(
    field: FieldSpec,
    n: usize,
    family: LineFamily,
    rng: &mut R,
    degree_bound: usize,
) -> GeomLine {
    let base = random_nonzero_vector(field, n + 1, rng, degree_bound);
    let ann = annihilator(field, &base);
    loop {
        let a = random_in_span(field, &ann, rng, degree_bound);
        let b = random_in_span(field, &ann, rng, degree_bound);
        if let Ok(line) = GeomLine::checked(family, base.clone(), [a, b]) {
            return line;
        }
    }
}

/// Number of points of `PG(n, q)`.
pub fn point_count(n: usize, q: u64) -> u64 {
    (q.pow(n as u32 + 1) - 1) / (q - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::transvection;
    use std::collections::HashSet;

    fn e(field: FieldSpec, n: usize, i: usize) -> Vector {
        let mut v = vec![field.zero(); n + 1];
        v[i] = field.one();
        v
    }

    #[test]
    fn incidence_examples() {
        let f = FieldSpec::Rationals;
        let line = GeomLine::hyperplane_pencil(e(f, 2, 2), [e(f, 2, 0), e(f, 2, 1)]).unwrap();
        let on = Flag::new(e(f, 2, 0), e(f, 2, 2)).unwrap();
        let off = Flag::new(e(f, 2, 1), e(f, 2, 0)).unwrap();
        assert!(incident(&on, &line).unwrap());
        assert!(!incident(&off, &line).unwrap());
        let small = Flag::new(e(f, 1, 0), e(f, 1, 1)).unwrap();
        assert!(matches!(incident(&small, &line), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn invalid_flags() {
        let f = FieldSpec::Rationals;
        assert!(Flag::new(e(f, 2, 0), e(f, 2, 0)).is_err());
        assert!(Flag::new(vec![f.zero(); 3], e(f, 2, 0)).is_err());
    }

    #[test]
    fn closed_form_counts() {
        for (n, q, flags, lines) in [(2, 2, 21, 14), (2, 3, 52, 26), (3, 2, 105, 210)] {
            let g = Geometry::enumerate(n, q).unwrap();
            assert_eq!(g.flags.len(), flags);
            assert_eq!(g.lines.len(), lines);
            for ids in &g.line_flags {
                assert_eq!(ids.len() as u64, q + 1);
            }
        }
        assert_eq!(point_count(2, 2), 7);
        assert!(matches!(enumerate_flags(2, 4), Err(Error::UnsupportedField(_))));
    }

    #[test]
    fn line_flags_agree_with_incidence() {
        let g = Geometry::enumerate(2, 3).unwrap();
        for (line, ids) in g.lines.iter().zip(&g.line_flags) {
            let by_rank: Vec<usize> = g
                .flags
                .iter()
                .enumerate()
                .filter(|(_, f)| incident(f, line).unwrap())
                .map(|(i, _)| i)
                .collect();
            assert_eq!(&by_rank, ids);
        }
    }

    #[test]
    fn base_flag_orbit_is_everything() {
        let n = 2;
        let field = FieldSpec::Prime(2);
        let geom = Geometry::enumerate(n, 2).unwrap();
        let gens: Vec<GroupElem> = (0..=n)
            .flat_map(|i| (0..=n).map(move |j| (i, j)))
            .filter(|(i, j)| i != j)
            .map(|(i, j)| transvection(n, i, j, &field.one()).unwrap())
            .collect();
        let mut seen: HashSet<Flag> = HashSet::new();
        let mut queue = vec![Flag::base(field, n)];
        seen.insert(Flag::base(field, n));
        while let Some(f) = queue.pop() {
            for g in &gens {
                let h = act_on_flag(&f, g).unwrap().normalized();
                if seen.insert(h.clone()) {
                    queue.push(h);
                }
            }
        }
        assert_eq!(seen.len(), geom.flags.len());
    }

    #[test]
    fn dump_round_trip() {
        let g = Geometry::enumerate(2, 2).unwrap();
        let json = serde_json::to_string(&g.to_dump()).unwrap();
        let back: GeometryDump = serde_json::from_str(&json).unwrap();
        assert_eq!(Geometry::from_dump(&back).unwrap(), g);
    }
}
