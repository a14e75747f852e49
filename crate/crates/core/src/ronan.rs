//! The cover of a finite embedding built from the direct sum of point
//! and line spaces modulo the gluing relations.
//!
//! Coordinates of the direct sum: flag `p` owns column `p`; line `l` owns
//! columns `F + 2l` and `F + 2l + 1`, where `F` is the number of flags. A
//! line block's basis is the pair of images of the line's first two flags.

use serde::Serialize;

use crate::embeddings::{extended_act, EmbeddingKind, ExtendedVector, TracelessMatrix};
use crate::error::{Error, Result};
use crate::exec;
use crate::field::{FieldElem, FieldSpec};
use crate::geometry::{act_on_flag, Geometry};
use crate::group::{adjoint, transvection, GroupElem};
use crate::linalg::{Matrix, Solution, Subspace, Vector};
use crate::report::SCHEMA_VERSION;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RonanSpace {
    pub field: FieldSpec,
    pub flag_count: usize,
    pub line_count: usize,
    /// Dimension of the space the input embedding lands in.
    pub embed_dim: usize,
    pub flag_images: Vec<Vector>,
    /// The two flags whose images span each line block.
    pub line_bases: Vec<[usize; 2]>,
    pub total_dim: usize,
}

impl RonanSpace {
    pub fn line_column(&self, line: usize, k: usize) -> usize {
        self.flag_count + 2 * line + k
    }

    /// Image in the embedding space of each coordinate vector of the sum.
    pub fn block_image(&self, column: usize) -> &Vector {
        if column < self.flag_count {
            &self.flag_images[column]
        } else {
            let l = (column - self.flag_count) / 2;
            let k = (column - self.flag_count) % 2;
            &self.flag_images[self.line_bases[l][k]]
        }
    }
}

/// One relation `e_p - (c0 e_{l,0} + c1 e_{l,1})` per incident pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSet {
    pub rows: Vec<Vector>,
    pub pairs: Vec<(usize, usize)>,
}

/// Coordinates of `x` in the basis `{b0, b1}`, if it lies in their span.
fn coords_in_pair(field: FieldSpec, b0: &Vector, b1: &Vector, x: &Vector) -> Result<Option<[FieldElem; 2]>> {
    let m = Matrix::from_rows(field, vec![b0.clone(), b1.clone()])?.transpose();
    Ok(match m.solve(x)? {
        Solution::Solved(c) => Some([c[0].clone(), c[1].clone()]),
        Solution::Inconsistent(_) => None,
    })
}

pub fn build_ronan<E>(geometry: &Geometry, embed: E) -> Result<(RonanSpace, RelationSet)>
where
    E: Fn(&crate::geometry::Flag) -> Vector + Sync + Send,
{
    let field = geometry.field;
    let flag_count = geometry.flags.len();
    let line_count = geometry.lines.len();
    let flag_images = exec::map_indices(flag_count, |i| embed(&geometry.flags[i]));
    let embed_dim = flag_images.first().map_or(0, Vec::len);
    let total_dim = flag_count + 2 * line_count;
    let line_bases: Vec<[usize; 2]> = geometry.line_flags.iter().map(|fs| [fs[0], fs[1]]).collect();
    let space = RonanSpace {
        field,
        flag_count,
        line_count,
        embed_dim,
        flag_images,
        line_bases,
        total_dim,
    };

    let per_line = exec::map_indices(line_count, |l| -> Result<Vec<(usize, Vector)>> {
        let [i0, i1] = space.line_bases[l];
        let (b0, b1) = (&space.flag_images[i0], &space.flag_images[i1]);
        let images: Vec<Vector> = geometry.line_flags[l]
            .iter()
            .map(|&p| space.flag_images[p].clone())
            .collect();
        let rank = Matrix::from_rows(field, images)?.rank();
        if rank != 2 {
            return Err(Error::DegenerateLine { line: l, rank });
        }
        geometry.line_flags[l]
            .iter()
            .map(|&p| {
                let c = coords_in_pair(field, b0, b1, &space.flag_images[p])?
                    .ok_or(Error::DegenerateLine { line: l, rank })?;
                let mut row = vec![field.zero(); total_dim];
                row[p] = field.one();
                row[space.line_column(l, 0)] = -&c[0];
                row[space.line_column(l, 1)] = -&c[1];
                Ok((p, row))
            })
            .collect()
    });
    let mut rows = Vec::new();
    let mut pairs = Vec::new();
    for (l, r) in per_line.into_iter().enumerate() {
        for (p, row) in r? {
            rows.push(row);
            pairs.push((p, l));
        }
    }
    Ok((space, RelationSet { rows, pairs }))
}

/// The span `W` of the relations.
pub fn relation_space(rs: &RonanSpace, rel: &RelationSet) -> Subspace {
    Subspace::span(rs.field, rs.total_dim, &rel.rows)
}

/// `dim V - rank(relations)`.
pub fn cover_dimension(rs: &RonanSpace, rel: &RelationSet) -> usize {
    rs.total_dim - relation_space(rs, rel).dim()
}

/// The map from the direct sum to the embedding space, as a
/// `total_dim x embed_dim` matrix whose rows are block images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverProjection {
    pub matrix: Matrix,
    /// Rank of the projection, i.e. the dimension of the embedding's span.
    pub rank: usize,
}

pub fn cover_projection(rs: &RonanSpace, rel: &RelationSet) -> Result<CoverProjection> {
    let rows = (0..rs.total_dim).map(|c| rs.block_image(c).clone()).collect();
    let matrix = Matrix::from_rows(rs.field, rows)?;
    let killed = exec::map_indices(rel.rows.len(), |i| {
        matrix
            .vec_mul(&rel.rows[i])
            .map(|v| v.iter().all(FieldElem::is_zero))
    });
    for (i, k) in killed.into_iter().enumerate() {
        if !k? {
            return Err(Error::RelationNotKilled(i));
        }
    }
    let rank = matrix.rank();
    Ok(CoverProjection { matrix, rank })
}

/// Normal forms of the flag coordinate vectors modulo `W`; these are the
/// images of the flags under the quotient's embedding.
pub fn quotient_flag_images(rs: &RonanSpace, w: &Subspace) -> Vec<Vector> {
    exec::map_indices(rs.flag_count, |p| {
        let mut e = vec![rs.field.zero(); rs.total_dim];
        e[p] = rs.field.one();
        w.reduce(&e)
    })
}

/// Whether each line's flags span exactly a plane in the quotient, and
/// distinct flags stay distinct points.
pub fn quotient_lines_ok(geometry: &Geometry, images: &[Vector]) -> bool {
    let field = geometry.field;
    let ok = exec::map_indices(geometry.lines.len(), |l| {
        let fs = &geometry.line_flags[l];
        let rows: Vec<Vector> = fs.iter().map(|&p| images[p].clone()).collect();
        if Matrix::from_rows(field, rows).expect("equal lengths").rank() != 2 {
            return false;
        }
        fs.iter().enumerate().all(|(i, &p)| {
            fs[i + 1..].iter().all(|&q| {
                Matrix::from_rows(field, vec![images[p].clone(), images[q].clone()])
                    .expect("equal lengths")
                    .rank()
                    == 2
            })
        })
    });
    ok.into_iter().all(|b| b)
}

/// The induced action of `g` on the embedding space.
pub fn embedding_action(kind: EmbeddingKind, n: usize, x: &Vector, g: &GroupElem) -> Result<Vector> {
    let field = g.field();
    match kind {
        EmbeddingKind::Natural => {
            let a = TracelessMatrix::from_coords(field, n, x)?;
            Ok(adjoint(g, &a)?.coords())
        }
        EmbeddingKind::Universal => {
            let d = field.derivation_rank();
            let a = TracelessMatrix::from_coords(field, n, &x[d..])?;
            let v = ExtendedVector::new(x[..d].to_vec(), a)?;
            Ok(extended_act(&v, g)?.flatten())
        }
    }
}

/// `c` with `y = c x`, if any.
fn ratio(x: &[FieldElem], y: &[FieldElem]) -> Option<FieldElem> {
    let i = x.iter().position(|c| !c.is_zero())?;
    let c = &y[i] / &x[i];
    x.iter().zip(y).all(|(a, b)| &(&c * a) == b).then_some(c)
}

/// Checks that `g` lifts: its action permuting and rescaling blocks maps
/// `W` into itself and commutes with the projection.
pub fn lift_check(
    geometry: &Geometry,
    rs: &RonanSpace,
    rel: &RelationSet,
    w: &Subspace,
    proj: &CoverProjection,
    kind: EmbeddingKind,
    g: &GroupElem,
) -> Result<bool> {
    let field = rs.field;
    let n = geometry.n;
    let flag_index = geometry.flag_index();
    let line_index = geometry.line_index();
    let rho = |x: &Vector| embedding_action(kind, n, x, g);

    // images of the coordinate vectors, as sparse (column, coefficient) lists
    let mut columns: Vec<Vec<(usize, FieldElem)>> = Vec::with_capacity(rs.total_dim);
    for (p, f) in geometry.flags.iter().enumerate() {
        let target = flag_index[&act_on_flag(f, g)?.normalized()];
        let Some(c) = ratio(&rs.flag_images[target], &rho(&rs.flag_images[p])?) else {
            return Ok(false);
        };
        columns.push(vec![(target, c)]);
    }
    for (l, line) in geometry.lines.iter().enumerate() {
        let target = line_index[&line.act(g)?.canonical()];
        let [t0, t1] = rs.line_bases[target];
        for k in 0..2 {
            let x = rho(&rs.flag_images[rs.line_bases[l][k]])?;
            let Some(c) = coords_in_pair(field, &rs.flag_images[t0], &rs.flag_images[t1], &x)? else {
                return Ok(false);
            };
            let [c0, c1] = c;
            columns.push(vec![
                (rs.line_column(target, 0), c0),
                (rs.line_column(target, 1), c1),
            ]);
        }
    }
    let apply = |v: &Vector| -> Vector {
        let mut out = vec![field.zero(); rs.total_dim];
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, c) in &columns[i] {
                out[*j] = &out[*j] + &(x * c);
            }
        }
        out
    };

    let commutes = exec::map_indices(rs.total_dim, |i| -> Result<bool> {
        let mut e = vec![field.zero(); rs.total_dim];
        e[i] = field.one();
        let lhs = proj.matrix.vec_mul(&apply(&e))?;
        Ok(lhs == rho(rs.block_image(i))?)
    });
    for c in commutes {
        if !c? {
            return Ok(false);
        }
    }
    let descends = exec::map_indices(rel.rows.len(), |i| w.contains(&apply(&rel.rows[i])));
    Ok(descends.into_iter().all(|b| b))
}

/// Transvections `I + e_{i,j}` for all `i != j`; they generate `SL(n+1, p)`.
pub fn elementary_generators(field: FieldSpec, n: usize) -> Result<Vec<GroupElem>> {
    let mut out = Vec::new();
    for i in 0..=n {
        for j in 0..=n {
            if i != j {
                out.push(transvection(n, i, j, &field.one())?);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RonanReport {
    pub schema: u32,
    pub check: String,
    pub n: usize,
    pub q: u64,
    pub embedding: EmbeddingKind,
    pub flags: usize,
    pub lines: usize,
    pub total_dim: usize,
    pub relation_rows: usize,
    pub relation_rank: usize,
    pub cover_dim: usize,
    pub embedding_span_dim: usize,
    pub expected_dim: usize,
    pub projection_ok: bool,
    pub projection_bijective: bool,
    pub quotient_lines_ok: bool,
    pub lift_ok: bool,
    pub pass: bool,
}

/// Runs the whole construction on the enumerated geometry of `PG(n, q)`,
/// including the lift check for every elementary generator.
pub fn ronan_cover(n: usize, q: u64, kind: EmbeddingKind) -> Result<RonanReport> {
    let geometry = Geometry::enumerate(n, q)?;
    ronan_cover_for(&geometry, q, kind)
}

pub fn ronan_cover_for(
    geometry: &Geometry,
    q: u64,
    kind: EmbeddingKind,
) -> Result<RonanReport> {
    let n = geometry.n;
    let (rs, rel) = build_ronan(geometry, |f| kind.embed(f))?;
    let w = relation_space(&rs, &rel);
    let cover_dim = rs.total_dim - w.dim();
    let proj = cover_projection(&rs, &rel)?;
    let images = quotient_flag_images(&rs, &w);
    let lines_ok = quotient_lines_ok(geometry, &images);
    // the quotient embedding composed with the projection returns the input
    let round_trip = (0..rs.flag_count).all(|p| {
        proj.matrix.vec_mul(&images[p]).ok().as_ref() == Some(&rs.flag_images[p])
    });
    let projection_ok = round_trip;
    let projection_bijective = proj.rank == cover_dim;
    let mut lift_ok = true;
    for g in elementary_generators(rs.field, n)? {
        lift_ok &= lift_check(geometry, &rs, &rel, &w, &proj, kind, &g)?;
    }
    let expected_dim = kind.ambient_dim(rs.field, n);
    let pass = projection_ok
        && lines_ok
        && lift_ok
        && cover_dim >= proj.rank
        && cover_dim == expected_dim;
    Ok(RonanReport {
        schema: SCHEMA_VERSION,
        check: "ronan-cover".into(),
        n,
        q,
        embedding: kind,
        flags: rs.flag_count,
        lines: rs.line_count,
        total_dim: rs.total_dim,
        relation_rows: rel.rows.len(),
        relation_rank: w.dim(),
        cover_dim,
        embedding_span_dim: proj.rank,
        expected_dim,
        projection_ok,
        projection_bijective,
        quotient_lines_ok: lines_ok,
        lift_ok,
        pass,
    })
}

/// Flag count and line count of the point-hyperplane geometry of
/// `PG(n, q)`, by formula.
pub fn expected_counts(n: usize, q: u64) -> (u64, u64) {
    let points = crate::geometry::point_count(n, q);
    let points_per_hyperplane = crate::geometry::point_count(n - 1, q);
    let flags = points * points_per_hyperplane;
    let lines_through_flag = 2 * (q.pow(n as u32 - 1) - 1) / (q - 1);
    let lines = flags * lines_through_flag / (q + 1);
    (flags, lines)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embeddings::adjoint_dim;
    use std::collections::HashMap;

    fn histogram(pairs: &[(usize, usize)]) -> HashMap<usize, usize> {
        let mut h = HashMap::new();
        for &(p, _) in pairs {
            *h.entry(p).or_insert(0) += 1;
        }
        h
    }

    #[test]
    fn counts_match_formula() {
        assert_eq!(expected_counts(2, 2), (21, 14));
        assert_eq!(expected_counts(2, 3), (52, 26));
        assert_eq!(expected_counts(3, 2), (105, 210));
    }

    #[test]
    fn small_instance() {
        let g = Geometry::enumerate(2, 2).unwrap();
        let (rs, rel) = build_ronan(&g, |f| EmbeddingKind::Natural.embed(f)).unwrap();
        assert_eq!(rs.total_dim, 49);
        assert_eq!(rel.rows.len(), 42);
        let h = histogram(&rel.pairs);
        assert!(h.values().all(|&c| c == 2));
        let w = relation_space(&rs, &rel);
        assert_eq!(w.dim(), 41);
        assert_eq!(cover_dimension(&rs, &rel), adjoint_dim(2));
    }

    #[test]
    fn flag_blocks_project_to_images() {
        let g = Geometry::enumerate(2, 2).unwrap();
        let (rs, rel) = build_ronan(&g, |f| EmbeddingKind::Natural.embed(f)).unwrap();
        let proj = cover_projection(&rs, &rel).unwrap();
        for p in 0..rs.flag_count {
            assert_eq!(proj.matrix.row(p), rs.flag_images[p].as_slice());
        }
        assert_eq!(proj.rank, 8);
    }

    #[test]
    fn degenerate_embedding_is_rejected() {
        let g = Geometry::enumerate(2, 2).unwrap();
        let field = g.field;
        let constant = |_: &crate::geometry::Flag| vec![field.one(), field.zero()];
        assert!(matches!(
            build_ronan(&g, constant),
            Err(Error::DegenerateLine { rank: 1, .. })
        ));
    }

    #[test]
    fn single_generator_lifts() {
        let g = Geometry::enumerate(2, 2).unwrap();
        let (rs, rel) = build_ronan(&g, |f| EmbeddingKind::Natural.embed(f)).unwrap();
        let w = relation_space(&rs, &rel);
        let proj = cover_projection(&rs, &rel).unwrap();
        let h = transvection(2, 0, 1, &rs.field.one()).unwrap();
        assert!(lift_check(&g, &rs, &rel, &w, &proj, EmbeddingKind::Natural, &h).unwrap());
    }

    #[test]
    fn report_for_fano_instance() {
        let r = ronan_cover(2, 2, EmbeddingKind::Natural).unwrap();
        assert_eq!(r.cover_dim, 8);
        assert_eq!(r.relation_rank, 41);
        assert!(r.projection_ok && r.projection_bijective && r.quotient_lines_ok);
        assert!(r.lift_ok);
        assert!(r.pass);
    }
}
